#include <gtest/gtest.h>

#include <random>

#include "mmm/error.hpp"
#include "mmm/ingest.hpp"
#include "support.hpp"

namespace mmm {
namespace {

Error parse_failure(std::string_view text) {
  try {
    parse_model(text);
  } catch (const Error& e) {
    return e;
  }
  ADD_FAILURE() << "expected a parse failure for:\n" << text;
  return Error("none", "none");
}

TEST(Ingest, MinimalDocument) {
  const auto m = parse_model(
      "name: tiny\n"
      "activities: [A, B]\n"
      "dependencies:\n"
      "  - {id: 1, source: A, target: B, kind: io}\n");
  EXPECT_EQ(m.name, "tiny");
  EXPECT_EQ(m.activities, test::ids("AB"));
  ASSERT_EQ(m.dependencies.size(), 1u);
  EXPECT_TRUE(m.dependencies[0].is_internal_flow());
}

TEST(Ingest, BlockStyleAndLowercaseLabels) {
  const auto m = parse_model(R"(name: "block style"
activities:
  - a
  - b
dependencies:
  - id: 7
    source: a
    kind: io
  - id: 3
    target: b
    kind: control
)");
  EXPECT_EQ(m.activities, test::ids("AB"));
  ASSERT_EQ(m.dependencies.size(), 2u);
  // Returned in interface order.
  EXPECT_EQ(m.dependencies[0].id.number, 3);
  EXPECT_EQ(m.dependencies[0].kind, DependencyKind::Control);
  EXPECT_FALSE(m.dependencies[1].target.has_value());
}

TEST(Ingest, UnknownEndpointCarriesLocation) {
  const auto e = parse_failure(
      "name: x\n"
      "activities: [A]\n"
      "dependencies:\n"
      "  - {id: 1, source: A, target: Q, kind: io}\n");
  EXPECT_EQ(e.code(), "unknown-endpoint");
  ASSERT_TRUE(e.diagnostics().front().location.has_value());
  EXPECT_EQ(e.diagnostics().front().location->line, 4);
}

TEST(Ingest, ErrorCodes) {
  EXPECT_EQ(parse_failure("name: x\nactivities: [A, a]\ndependencies: []\n").code(), "duplicate-activity");
  EXPECT_EQ(parse_failure("name: x\nactivities: [A, B]\ndependencies:\n"
                          "  - {id: 1, source: A, target: B, kind: io}\n"
                          "  - {id: 1, source: B, kind: io}\n")
                .code(),
            "duplicate-interface");
  EXPECT_EQ(parse_failure("name: x\nactivities: [A, B]\ndependencies:\n"
                          "  - {id: 1, source: A, target: B, kind: data}\n")
                .code(),
            "bad-kind");
}

TEST(Ingest, SyntaxErrors) {
  const char* broken[] = {
      "",
      "just a scalar",
      "name: x\nactivities: [A\n",
      "name: x\nactivities: [A]\n",
      "name: x\nactivities: [A]\ndependencies: []\nextra: 1\n",
      "name: x\nactivities: A\ndependencies: []\n",
      "name: x\nactivities: [[A]]\ndependencies: []\n",
      "name: x\nactivities: [A]\ndependencies: [{id: one, source: A, kind: io}]\n",
      "name: x\nactivities: [A]\ndependencies: [{id: 1.5, source: A, kind: io}]\n",
      "name: x\nactivities: [A]\ndependencies: [{source: A, kind: io}]\n",
      "name: x\nactivities: [A]\ndependencies: [{id: 1, source: A}]\n",
      "name: x\nactivities: [A]\ndependencies: [{id: 1, source: A, kind: io, weight: 2}]\n",
      "name: x\nactivities: [A]\ndependencies: [7]\n",
  };
  for (const auto* text : broken) {
    const auto e = parse_failure(text);
    EXPECT_EQ(e.code(), "syntax-error") << text;
  }
}

TEST(Ingest, SyntaxErrorLocation) {
  const auto e = parse_failure("name: x\nactivities: [A]\ndependencies:\n  - {id: 1, source: A, kind: io, bogus: 1}\n");
  ASSERT_TRUE(e.diagnostics().front().location.has_value());
  EXPECT_EQ(e.diagnostics().front().location->line, 4);
}

TEST(Ingest, EmptyModel) {
  ProcessModel empty;
  const auto text = serialize_model(empty);
  EXPECT_EQ(text, "name: \"\"\nactivities: []\ndependencies: []\n");
  EXPECT_EQ(parse_model(text), empty);
}

TEST(Ingest, FixtureRoundTrip) {
  const auto fixture = case_study_fixture();
  const auto text = serialize_model(fixture);
  EXPECT_EQ(parse_model(text), fixture);
  std::size_t records = 0;
  for (std::size_t at = text.find("  - {"); at != std::string::npos; at = text.find("  - {", at + 1)) ++records;
  EXPECT_EQ(records, 18u);
  EXPECT_EQ(serialize_model(fixture), text);
}

TEST(Ingest, FixtureFileMatchesSerializer) {
  const auto on_disk = test::read_file(std::string(MMM_SOURCE_DIR) + "/fixtures/case-study.pmodel");
  EXPECT_EQ(on_disk, serialize_model(case_study_fixture()));
  EXPECT_EQ(load_model_file(std::string(MMM_SOURCE_DIR) + "/fixtures/case-study.pmodel"), case_study_fixture());
}

TEST(Ingest, QuotesLabelsThatYamlWouldMisread) {
  ProcessModel m{"odd \"name\"\n", test::ids({"-A", "NULL", ".5", "1"}), {}};
  m.dependencies.push_back({{1}, ActivityId("-A"), ActivityId("NULL"), DependencyKind::InputOutput});
  const auto text = serialize_model(m);
  EXPECT_EQ(parse_model(text), m) << text;
}

TEST(Ingest, MissingFile) {
  try {
    load_model_file("/nonexistent/model.pmodel");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "io-error");
  }
}

TEST(Ingest, ParsingIsTotal) {
  std::mt19937 rng(7);
  const std::string seed = serialize_model(case_study_fixture());
  const std::string noise = "{}[]:,-\"'#&*!|>%@` \n\tAZ019";
  for (int round = 0; round < 500; ++round) {
    std::string text = seed;
    const int edits = 1 + static_cast<int>(rng() % 6);
    for (int e = 0; e < edits; ++e) {
      const auto at = rng() % (text.size() + 1);
      switch (rng() % 3) {
        case 0:
          text.insert(text.begin() + static_cast<std::ptrdiff_t>(at), noise[rng() % noise.size()]);
          break;
        case 1:
          if (at < text.size()) text.erase(at, 1 + rng() % 8);
          break;
        default:
          if (at < text.size()) text[at] = noise[rng() % noise.size()];
      }
    }
    try {
      const auto m = parse_model(text);
      EXPECT_TRUE(validate_model(m).empty());
    } catch (const Error& e) {
      EXPECT_FALSE(e.diagnostics().empty());
    } catch (const std::exception& e) {
      ADD_FAILURE() << "unexpected exception " << e.what() << " for:\n" << text;
    }
  }
}

}  // namespace
}  // namespace mmm
