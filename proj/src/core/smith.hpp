#pragma once

#include <gmpxx.h>

#include <vector>

#include "core/sparse_matrix.hpp"

namespace matchcx {

struct SmithResult {
  /// Nonzero invariant factors d_1 | d_2 | ... , all positive.
  std::vector<mpz_class> factors;
  std::size_t rank = 0;

  /// Factors other than 1.
  std::vector<mpz_class> torsion() const;
};

/// Invariant factors over Z. Unit pivots are eliminated sparsely first; the
/// residue goes through a dense Smith reduction. Deterministic.
SmithResult smith_normal_form(const SparseMatrix& m);
SmithResult smith_normal_form_dense(std::vector<std::vector<mpz_class>> m);

}  // namespace matchcx
