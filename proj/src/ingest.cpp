#include "mmm/ingest.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace mmm {

namespace {

std::optional<SourceLocation> location_of(const YAML::Mark& mark) {
  if (mark.is_null()) return std::nullopt;
  return SourceLocation{mark.line + 1, mark.column + 1};
}

std::optional<SourceLocation> location_of(const YAML::Node& node) {
  return node.IsDefined() ? location_of(node.Mark()) : std::nullopt;
}

[[noreturn]] void syntax_error(const std::string& message, std::optional<SourceLocation> where) {
  throw Error({Diagnostic{"syntax-error", message, where}});
}

// Rejects unexpected or repeated keys and requires every key in `required`.
void check_keys(const YAML::Node& map, std::initializer_list<std::string_view> allowed,
                std::initializer_list<std::string_view> required, std::string_view what) {
  std::set<std::string, std::less<>> seen;
  for (const auto& kv : map) {
    if (!kv.first.IsScalar()) syntax_error(std::string(what) + ": keys must be scalars", location_of(kv.first));
    const auto key = kv.first.Scalar();
    if (std::ranges::find(allowed, key) == allowed.end()) {
      syntax_error(std::string(what) + ": unexpected key '" + key + "'", location_of(kv.first));
    }
    if (!seen.insert(key).second) {
      syntax_error(std::string(what) + ": duplicate key '" + key + "'", location_of(kv.first));
    }
  }
  for (auto key : required) {
    if (!seen.contains(key)) {
      syntax_error(std::string(what) + ": missing key '" + std::string(key) + "'", location_of(map));
    }
  }
}

std::string scalar(const YAML::Node& node, std::string_view what) {
  if (!node.IsScalar()) syntax_error(std::string(what) + " must be a scalar", location_of(node));
  return node.Scalar();
}

std::optional<ActivityId> endpoint(const YAML::Node& record, const char* key) {
  const auto node = record[key];
  if (!node.IsDefined() || node.IsNull()) return std::nullopt;
  return ActivityId(scalar(node, key));
}

bool is_plain_safe(const std::string& label) {
  if (!is_valid_label(label)) return false;
  const unsigned char first = static_cast<unsigned char>(label.front());
  if (!(std::isalnum(first) || first == '_')) return false;
  std::string lower = label;
  std::ranges::transform(lower, lower.begin(),
                         [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return lower != "null";
}

std::string quoted(const std::string& s) {
  return nlohmann::json(s).dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
}

std::string label_text(const ActivityId& a) {
  return is_plain_safe(a.str()) ? a.str() : quoted(a.str());
}

}  // namespace

ProcessModel parse_model(std::string_view text) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(text));
  } catch (const YAML::Exception& e) {
    syntax_error(e.msg, location_of(e.mark));
  }
  if (!root.IsMap()) syntax_error("document must be a mapping with keys name, activities, dependencies", location_of(root));
  check_keys(root, {"name", "activities", "dependencies"}, {"name", "activities", "dependencies"},
             "document");

  ProcessModel model;
  std::vector<std::optional<SourceLocation>> activity_at;
  std::vector<std::optional<SourceLocation>> dependency_at;
  std::vector<Diagnostic> diagnostics;

  const auto name = root["name"];
  model.name = name.IsNull() ? std::string() : scalar(name, "name");

  const auto activities = root["activities"];
  if (!activities.IsSequence()) syntax_error("activities must be a list", location_of(activities));
  for (const auto& node : activities) {
    model.activities.emplace_back(scalar(node, "activity label"));
    activity_at.push_back(location_of(node));
  }

  const auto dependencies = root["dependencies"];
  if (!dependencies.IsSequence()) syntax_error("dependencies must be a list", location_of(dependencies));
  for (const auto& record : dependencies) {
    if (!record.IsMap()) syntax_error("dependency must be a mapping", location_of(record));
    check_keys(record, {"id", "source", "target", "kind"}, {"id", "kind"}, "dependency");

    Dependency d;
    const auto id = record["id"];
    try {
      d.id.number = id.as<int>();
    } catch (const YAML::Exception&) {
      syntax_error("id must be an integer, got '" + (id.IsScalar() ? id.Scalar() : std::string("?")) + "'",
                   location_of(id));
    }
    d.source = endpoint(record, "source");
    d.target = endpoint(record, "target");

    const auto kind = scalar(record["kind"], "kind");
    if (kind == "io") {
      d.kind = DependencyKind::InputOutput;
    } else if (kind == "control") {
      d.kind = DependencyKind::Control;
    } else {
      diagnostics.push_back({"bad-kind", "kind must be 'io' or 'control', got '" + kind + "'",
                             location_of(record["kind"])});
    }
    model.dependencies.push_back(std::move(d));
    dependency_at.push_back(location_of(record));
  }

  for (auto& v : validate_model(model)) {
    std::optional<SourceLocation> where;
    if (v.activity_index) where = activity_at[*v.activity_index];
    if (v.dependency_index) where = dependency_at[*v.dependency_index];
    diagnostics.push_back({std::move(v.code), std::move(v.message), where});
  }
  if (!diagnostics.empty()) {
    std::ranges::stable_sort(diagnostics, [](const Diagnostic& a, const Diagnostic& b) {
      auto key = [](const Diagnostic& d) {
        return d.location ? std::pair{d.location->line, d.location->column} : std::pair{0, 0};
      };
      return key(a) < key(b);
    });
    throw Error(std::move(diagnostics));
  }
  std::ranges::stable_sort(model.dependencies, {}, &Dependency::id);
  return model;
}

std::string serialize_model(const ProcessModel& model) {
  std::ostringstream out;
  out << "name: " << quoted(model.name) << '\n';

  out << "activities: [";
  for (std::size_t i = 0; i < model.activities.size(); ++i) {
    out << (i ? ", " : "") << label_text(model.activities[i]);
  }
  out << "]\n";

  auto deps = model.dependencies;
  std::ranges::stable_sort(deps, {}, &Dependency::id);
  out << "dependencies:" << (deps.empty() ? " []" : "") << '\n';
  for (const auto& d : deps) {
    out << "  - {id: " << d.id.number;
    if (d.source) out << ", source: " << label_text(*d.source);
    if (d.target) out << ", target: " << label_text(*d.target);
    out << ", kind: " << to_string(d.kind) << "}\n";
  }
  return out.str();
}

ProcessModel load_model_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("io-error", "cannot read '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw Error("io-error", "failed while reading '" + path.string() + "'");
  return parse_model(buffer.str());
}

}  // namespace mmm
