#include "core/sparse_matrix.hpp"

#include <algorithm>
#include <map>

#include "core/error.hpp"

namespace matchcx {

std::size_t SparseMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& c : columns) n += c.size();
  return n;
}

std::int64_t SparseMatrix::at(std::size_t r, std::size_t c) const {
  const auto& col = columns.at(c);
  auto it = std::lower_bound(col.begin(), col.end(), Entry{static_cast<std::uint32_t>(r), INT64_MIN});
  return it != col.end() && it->first == r ? it->second : 0;
}

std::vector<std::vector<std::int64_t>> SparseMatrix::dense() const {
  std::vector<std::vector<std::int64_t>> m(rows, std::vector<std::int64_t>(cols, 0));
  for (std::size_t c = 0; c < cols; ++c)
    for (auto [r, v] : columns[c]) m[r][c] = v;
  return m;
}

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<std::int64_t>>& m) {
  SparseMatrix s(m.size(), m.empty() ? 0 : m[0].size());
  for (std::size_t r = 0; r < s.rows; ++r)
    for (std::size_t c = 0; c < s.cols; ++c)
      if (m[r][c] != 0) s.columns[c].emplace_back(static_cast<std::uint32_t>(r), m[r][c]);
  return s;
}

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols != b.rows) fail(ErrorCode::Inconsistent, "matrix shapes do not compose");
  SparseMatrix out(a.rows, b.cols);
  for (std::size_t c = 0; c < b.cols; ++c) {
    std::map<std::uint32_t, std::int64_t> acc;
    for (auto [k, v] : b.columns[c])
      for (auto [r, w] : a.columns[k]) acc[r] += v * w;
    for (auto [r, v] : acc)
      if (v != 0) out.columns[c].emplace_back(r, v);
  }
  return out;
}

bool is_zero(const SparseMatrix& m) {
  return std::all_of(m.columns.begin(), m.columns.end(), [](const auto& c) { return c.empty(); });
}

std::string format_coordinate(const SparseMatrix& m, const std::string& label) {
  std::string out = label + " " + std::to_string(m.rows) + " " + std::to_string(m.cols) + " " +
                    std::to_string(m.nnz()) + "\n";
  for (std::size_t c = 0; c < m.cols; ++c)
    for (auto [r, v] : m.columns[c])
      out += std::to_string(r + 1) + " " + std::to_string(c + 1) + " " + std::to_string(v) + "\n";
  return out;
}

}  // namespace matchcx
