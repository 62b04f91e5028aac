#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace matchcx {

/// Column-major sparse integer matrix. Each column is sorted by row.
struct SparseMatrix {
  using Entry = std::pair<std::uint32_t, std::int64_t>;

  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<Entry>> columns;

  SparseMatrix() = default;
  SparseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), columns(c) {}

  std::size_t nnz() const;
  std::int64_t at(std::size_t r, std::size_t c) const;
  /// Dense row-major copy; only for small matrices.
  std::vector<std::vector<std::int64_t>> dense() const;
  static SparseMatrix from_dense(const std::vector<std::vector<std::int64_t>>& m);
};

/// Product a * b over the integers. Throws Inconsistent on shape mismatch.
SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b);
bool is_zero(const SparseMatrix& m);

/// `label rows cols nnz` header, then 1-based `row col value` triples in
/// column-major order.
std::string format_coordinate(const SparseMatrix& m, const std::string& label);

}  // namespace matchcx
