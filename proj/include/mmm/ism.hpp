#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mmm/model.hpp"

namespace mmm {

enum class IsmMark : char { Input = 'I', Output = 'O', Control = 'C' };

/// Interface Structure Matrix: activities (rows) by interfaces (columns,
/// ascending id), each cell empty or holding one I/O/C mark.
class Ism {
 public:
  struct Column {
    InterfaceId id;
    DependencyKind kind;

    friend bool operator==(const Column&, const Column&) = default;
  };

  Ism() = default;
  Ism(std::vector<ActivityId> rows, std::vector<Column> cols,
      std::map<std::pair<std::size_t, std::size_t>, IsmMark> cells);

  const std::vector<ActivityId>& rows() const noexcept { return rows_; }
  const std::vector<Column>& cols() const noexcept { return cols_; }

  /// Sparse cells keyed by (row position, column position).
  const std::map<std::pair<std::size_t, std::size_t>, IsmMark>& cells() const noexcept {
    return cells_;
  }

  std::optional<IsmMark> mark(std::size_t row, std::size_t col) const;

  /// Lookup by activity label and interface number; nullopt when the cell is
  /// empty or either key is absent.
  std::optional<IsmMark> mark(const ActivityId& activity, InterfaceId iface) const;

  std::optional<std::size_t> row_of(const ActivityId& a) const;
  std::optional<std::size_t> col_of(InterfaceId id) const;

  bool has_control_columns() const;

  friend bool operator==(const Ism&, const Ism&) = default;

 private:
  std::vector<ActivityId> rows_;
  std::vector<Column> cols_;
  std::map<std::pair<std::size_t, std::size_t>, IsmMark> cells_;
};

/// Marks O on each present source, I on each present io target and C on
/// each control target. Rows follow the model's activity order.
Ism build_ism(const ProcessModel& model);

/// Drops every control column; remaining marks and column order unchanged.
Ism reduce_ism(const Ism& ism);

/// First column holds activity labels, header holds interface numbers,
/// cells are I, O, C or empty.
std::string ism_to_csv(const Ism& ism);

}  // namespace mmm
