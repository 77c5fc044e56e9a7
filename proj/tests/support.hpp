#pragma once

#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "mmm/model.hpp"

namespace mmm::test {

inline std::vector<ActivityId> ids(std::initializer_list<const char*> labels) {
  std::vector<ActivityId> out;
  for (const auto* l : labels) out.emplace_back(l);
  return out;
}

inline std::vector<ActivityId> ids(std::string_view letters) {
  std::vector<ActivityId> out;
  for (char c : letters) out.emplace_back(std::string(1, c));
  return out;
}

/// Model over single-letter activities with io flows "AB" meaning A -> B,
/// numbered from 1 in the given order.
inline ProcessModel chain_model(std::string_view letters, std::initializer_list<const char*> flows) {
  ProcessModel m;
  m.name = "synthetic";
  m.activities = ids(letters);
  int next = 1;
  for (const auto* f : flows) {
    m.dependencies.push_back({{next++}, ActivityId(std::string(1, f[0])), ActivityId(std::string(1, f[1])),
                              DependencyKind::InputOutput});
  }
  return m;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace mmm::test
