#pragma once

#include <gmpxx.h>

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "core/families.hpp"

namespace matchcx {

/// Homotopy type of a finite wedge of spheres, as sphere counts per
/// dimension. The empty wedge is a point.
class WedgeExpression {
 public:
  WedgeExpression() = default;
  static WedgeExpression point() { return {}; }
  static WedgeExpression spheres(int dim, const mpz_class& count = 1);

  /// Adds `count` copies of S^dim. Negative dimensions are rejected; zero
  /// counts are ignored.
  WedgeExpression& add(int dim, const mpz_class& count);

  const std::map<int, mpz_class>& counts() const noexcept { return spheres_; }
  mpz_class count(int dim) const;
  bool contractible() const noexcept { return spheres_.empty(); }
  std::vector<int> support() const;

  /// `pt`, or `∨_c S^d` terms in ascending dimension, e.g. `∨_4 S^4 ∨ S^5`.
  /// A count of one is written `S^d`, after a `∨` unless it comes first.
  std::string to_text() const;
  /// {"spheres":{"d":c,...},"contractible":b}; counts are JSON integers.
  std::string to_json() const;
  /// Accepts to_text() output as well as `∨_{c}S^{d}` and repeated terms.
  static WedgeExpression parse(const std::string& text);

  friend bool operator==(const WedgeExpression&, const WedgeExpression&) = default;

 private:
  std::map<int, mpz_class> spheres_;
};

WedgeExpression wedge(const WedgeExpression& a, const WedgeExpression& b);
WedgeExpression suspend(const WedgeExpression& a, int k);

struct DimRange {
  int low = 0;
  int high = 0;
  friend bool operator==(const DimRange&, const DimRange&) = default;
};

/// Known values below the recursive regime: n in {1, 2}, plus G_3 and A_3.
WedgeExpression base_case(FamilyId f, int n);
bool has_base_case(FamilyId f, int n);
/// Smallest n at which the family's recursion is used.
int first_recursive_index(FamilyId f);

/// One summand of a recursion: multiplicity · Σ^shift Ind(target_{n+offset}).
struct RecursionTerm {
  FamilyId target;
  int multiplicity;
  int shift;
  int offset;
};
const std::vector<RecursionTerm>& recursion_terms(FamilyId f);

/// Memoized evaluator. Safe for concurrent use.
class WedgeEngine {
 public:
  WedgeExpression homotopy_type(FamilyId f, int n);
  /// Plain recursion with no table; exponential, for cross-checking.
  static WedgeExpression evaluate_direct(FamilyId f, int n);
  /// Streams every (f, n) with n <= n_max in evaluation order, keeping only
  /// the last few levels in memory.
  static void sweep(int n_max, const std::function<void(FamilyId, int, const WedgeExpression&)>& visit);

  std::size_t memo_size() const;

 private:
  mutable std::shared_mutex mu_;
  std::vector<std::array<WedgeExpression, 10>> memo_;  // memo_[n-1]
};

WedgeEngine& default_engine();
WedgeExpression homotopy_type(FamilyId f, int n);
WedgeExpression matching_grid3(int n);

WedgeExpression path_formula(int r);
WedgeExpression cycle_formula(int r);

/// Predicted range of sphere dimensions from the residue windows; nullopt
/// means contractible. Throws Inconsistent if two windows containing n
/// disagree.
std::optional<DimRange> dimension_range(FamilyId f, int n);

/// Family evaluation order within one n.
inline constexpr std::array<FamilyId, 10> kEvaluationOrder = {
    FamilyId::G, FamilyId::D, FamilyId::M, FamilyId::A, FamilyId::B,
    FamilyId::J, FamilyId::O, FamilyId::Q, FamilyId::F, FamilyId::H};

}  // namespace matchcx
