#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "core/complex.hpp"
#include "core/sparse_matrix.hpp"

namespace matchcx {

inline constexpr std::uint64_t kSmithFaceLimit = 20'000;
inline constexpr std::uint64_t kBoundaryCheckFaceLimit = 100'000;

/// Augmented chain complex. boundary[0] is the 1 x n_0 augmentation onto the
/// empty face; boundary[d] (d >= 1) maps d-faces to (d-1)-faces. The face of
/// column j of boundary[d] is faces.face(d, j); removing its i-th vertex has
/// sign (-1)^i.
struct ChainBoundary {
  FaceTable faces;
  std::vector<SparseMatrix> boundary;

  int top_dimension() const noexcept { return static_cast<int>(boundary.size()) - 1; }
  /// Number of d-faces, with one face in dimension -1.
  std::size_t rank_of_chains(int d) const;
};

ChainBoundary boundary_matrices(const SimplicialComplex& k, std::uint64_t budget = kDefaultFaceBudget);
/// ∂_{d-1} ∂_d = 0 for every d.
bool boundary_squares_to_zero(const ChainBoundary& c);

enum class HomologyMethod { Gf2, ModP, Rational, Smith, Crosscheck };

struct HomologyOptions {
  HomologyMethod method = HomologyMethod::Crosscheck;
  std::uint32_t prime = 3;  // for ModP
  std::uint64_t budget = kDefaultFaceBudget;
  /// Crosscheck runs its three rank passes on up to this many threads.
  unsigned jobs = 1;
};

struct TorsionEntry {
  int dimension = 0;
  /// Invariant factors other than 0 and 1 (from Smith normal form).
  std::vector<mpz_class> factors;
  /// Primes whose rank disagreed with the rational rank in this dimension.
  std::vector<std::uint32_t> primes;
  friend bool operator==(const TorsionEntry&, const TorsionEntry&) = default;
};

struct BettiVector {
  /// Nonzero reduced Betti numbers keyed by dimension (-1 allowed).
  std::map<int, std::uint64_t> reduced;
  /// nullopt when the method used cannot decide.
  std::optional<bool> torsion_free;
  std::vector<TorsionEntry> torsion;
  /// Which computations support the result, e.g. "gf2,gf3,rational,snf".
  std::string evidence;

  std::uint64_t at(int d) const;
  long long alternating_sum() const;
  friend bool operator==(const BettiVector& a, const BettiVector& b) {
    return a.reduced == b.reduced && a.torsion_free == b.torsion_free && a.torsion == b.torsion;
  }
};

BettiVector betti_from_boundary(const ChainBoundary& c, const HomologyOptions& opt = {});
BettiVector betti_reduced(const SimplicialComplex& k, const HomologyOptions& opt = {});
BettiVector betti_reduced(const SimplicialComplex& k, HomologyMethod method);

const char* method_name(HomologyMethod m);
std::optional<HomologyMethod> parse_method(const std::string& s);

}  // namespace matchcx
