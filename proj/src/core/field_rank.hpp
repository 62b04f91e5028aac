#pragma once

#include <cstdint>
#include <vector>

#include "core/sparse_matrix.hpp"

namespace matchcx {

/// Rank plus the pivot row ("low", the largest row index) of every reduced
/// nonzero column. Pivot rows of ∂_{d+1} index d-faces whose ∂_d columns
/// are dependent on earlier ones, so they can be skipped (clearing).
struct RankResult {
  std::size_t rank = 0;
  std::vector<std::uint32_t> pivot_rows;
};

/// Columns with skip[c] set are ignored. `skip` may be empty.
RankResult rank_gf2(const SparseMatrix& m, const std::vector<bool>& skip = {});
/// Dense bit-packed variant, exposed for cross-testing.
RankResult rank_gf2_dense(const SparseMatrix& m, const std::vector<bool>& skip = {});
RankResult rank_gf2_sparse(const SparseMatrix& m, const std::vector<bool>& skip = {});
/// p must be a prime below 2^31.
RankResult rank_mod_p(const SparseMatrix& m, std::uint32_t p, const std::vector<bool>& skip = {});
/// Exact rank over Q: fraction-free column elimination in int64, redone in
/// GMP integers if an intermediate overflows.
RankResult rank_rational(const SparseMatrix& m, const std::vector<bool>& skip = {});

bool is_prime(std::uint32_t p);

}  // namespace matchcx
