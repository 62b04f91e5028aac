#include "core/homology.hpp"

#include <functional>
#include <future>

#include "core/field_rank.hpp"
#include "core/smith.hpp"

namespace matchcx {

std::size_t ChainBoundary::rank_of_chains(int d) const {
  if (d == -1) return 1;
  return faces.count(d);
}

ChainBoundary boundary_matrices(const SimplicialComplex& k, std::uint64_t budget) {
  ChainBoundary c;
  c.faces = face_table(k, std::nullopt, budget);
  int top = c.faces.max_dim();
  for (int d = 0; d <= top; ++d) {
    auto n = c.faces.count(d);
    SparseMatrix m(d == 0 ? 1 : c.faces.count(d - 1), n);
    std::vector<std::uint32_t> sub(static_cast<std::size_t>(d));
    for (std::size_t j = 0; j < n; ++j) {
      auto f = c.faces.face(d, j);
      if (d == 0) {
        m.columns[j].emplace_back(0, 1);
        continue;
      }
      for (std::size_t i = 0; i < f.size(); ++i) {
        std::size_t w = 0;
        for (std::size_t t = 0; t < f.size(); ++t)
          if (t != i) sub[w++] = f[t];
        auto row = c.faces.find(d - 1, sub);
        if (!row) fail(ErrorCode::Inconsistent, "face table is not closed downward");
        m.columns[j].emplace_back(static_cast<std::uint32_t>(*row), i % 2 == 0 ? 1 : -1);
      }
      std::sort(m.columns[j].begin(), m.columns[j].end());
    }
    c.boundary.push_back(std::move(m));
  }
  return c;
}

bool boundary_squares_to_zero(const ChainBoundary& c) {
  for (std::size_t d = 1; d < c.boundary.size(); ++d)
    if (!is_zero(multiply(c.boundary[d - 1], c.boundary[d]))) return false;
  return true;
}

namespace {

using RankFn = std::function<RankResult(const SparseMatrix&, const std::vector<bool>&)>;

// Ranks of all boundary maps, top dimension first so that pivot rows of
// ∂_{d+1} clear columns of ∂_d.
std::vector<std::size_t> chain_ranks(const ChainBoundary& c, const RankFn& rank) {
  std::vector<std::size_t> out(c.boundary.size(), 0);
  std::vector<bool> skip;
  for (int d = c.top_dimension(); d >= 0; --d) {
    const auto& m = c.boundary[static_cast<std::size_t>(d)];
    if (skip.size() != m.cols) skip.assign(m.cols, false);
    auto r = rank(m, skip);
    out[static_cast<std::size_t>(d)] = r.rank;
    skip.assign(d > 0 ? c.boundary[static_cast<std::size_t>(d - 1)].cols : 0, false);
    for (auto row : r.pivot_rows)
      if (row < skip.size()) skip[row] = true;
  }
  return out;
}

std::map<int, std::uint64_t> betti_from_ranks(const ChainBoundary& c, const std::vector<std::size_t>& rk) {
  std::map<int, std::uint64_t> out;
  auto rank_at = [&](int d) -> std::size_t {
    return d >= 0 && d < static_cast<int>(rk.size()) ? rk[static_cast<std::size_t>(d)] : 0;
  };
  for (int d = -1; d <= c.top_dimension(); ++d) {
    // b_d = n_d - rank ∂_d - rank ∂_{d+1}; ∂_{-1} is zero
    auto n = c.rank_of_chains(d);
    auto b = n - (d >= 0 ? rank_at(d) : 0) - rank_at(d + 1);
    if (b) out[d] = b;
  }
  return out;
}

std::uint64_t total_faces(const ChainBoundary& c) { return c.faces.total() + 1; }

}  // namespace

std::uint64_t BettiVector::at(int d) const {
  auto it = reduced.find(d);
  return it == reduced.end() ? 0 : it->second;
}

long long BettiVector::alternating_sum() const {
  long long s = 0;
  for (auto [d, b] : reduced) s += ((d % 2 + 2) % 2 == 0 ? 1 : -1) * static_cast<long long>(b);
  return s;
}

BettiVector betti_from_boundary(const ChainBoundary& c, const HomologyOptions& opt) {
  BettiVector out;
  auto gf2 = [](const SparseMatrix& m, const std::vector<bool>& s) { return rank_gf2(m, s); };
  auto modp = [](std::uint32_t p) {
    return [p](const SparseMatrix& m, const std::vector<bool>& s) { return rank_mod_p(m, p, s); };
  };
  auto rat = [](const SparseMatrix& m, const std::vector<bool>& s) { return rank_rational(m, s); };

  switch (opt.method) {
    case HomologyMethod::Gf2:
      out.reduced = betti_from_ranks(c, chain_ranks(c, gf2));
      out.evidence = "gf2";
      return out;
    case HomologyMethod::ModP:
      if (!is_prime(opt.prime)) fail(ErrorCode::InvalidParameter, "modulus must be prime");
      out.reduced = betti_from_ranks(c, chain_ranks(c, modp(opt.prime)));
      out.evidence = "gf" + std::to_string(opt.prime);
      return out;
    case HomologyMethod::Rational:
      out.reduced = betti_from_ranks(c, chain_ranks(c, rat));
      out.evidence = "rational";
      return out;
    case HomologyMethod::Smith:
    case HomologyMethod::Crosscheck:
      break;
  }

  bool smith = opt.method == HomologyMethod::Smith;
  if (smith && total_faces(c) > kSmithFaceLimit)
    fail(ErrorCode::SizeLimit, "Smith normal form is limited to " + std::to_string(kSmithFaceLimit) + " faces");

  std::vector<std::size_t> rq;
  std::map<int, TorsionEntry> torsion;
  if (!smith) {
    std::vector<std::size_t> r2, r3;
    if (opt.jobs > 1) {
      auto f2 = std::async(std::launch::async, [&] { return chain_ranks(c, gf2); });
      auto f3 = std::async(std::launch::async, [&] { return chain_ranks(c, modp(3)); });
      rq = chain_ranks(c, rat);
      r2 = f2.get();
      r3 = f3.get();
    } else {
      r2 = chain_ranks(c, gf2);
      r3 = chain_ranks(c, modp(3));
      rq = chain_ranks(c, rat);
    }
    // rank_p ∂_{d+1} < rank_Q ∂_{d+1} means p-torsion in H_d
    for (std::size_t d = 0; d < rq.size(); ++d) {
      for (auto [p, rp] : {std::pair{2u, &r2}, std::pair{3u, &r3}})
        if ((*rp)[d] != rq[d]) {
          auto& e = torsion[static_cast<int>(d) - 1];
          e.dimension = static_cast<int>(d) - 1;
          e.primes.push_back(p);
        }
    }
    out.evidence = "gf2,gf3,rational";
  }
  if (total_faces(c) <= kSmithFaceLimit) {
    std::vector<std::size_t> rz(c.boundary.size());
    for (std::size_t d = 0; d < c.boundary.size(); ++d) {
      auto s = smith_normal_form(c.boundary[d]);
      rz[d] = s.rank;
      auto t = s.torsion();
      if (!t.empty()) {
        auto& e = torsion[static_cast<int>(d) - 1];
        e.dimension = static_cast<int>(d) - 1;
        e.factors = t;
      }
    }
    if (!rq.empty() && rq != rz) fail(ErrorCode::Inconsistent, "integer and rational ranks disagree");
    rq = rz;
    out.evidence += out.evidence.empty() ? "snf" : ",snf";
  }
  out.reduced = betti_from_ranks(c, rq);
  for (auto& [d, e] : torsion) out.torsion.push_back(e);
  out.torsion_free = out.torsion.empty();
  return out;
}

BettiVector betti_reduced(const SimplicialComplex& k, const HomologyOptions& opt) {
  return betti_from_boundary(boundary_matrices(k, opt.budget), opt);
}

BettiVector betti_reduced(const SimplicialComplex& k, HomologyMethod method) {
  HomologyOptions opt;
  opt.method = method;
  return betti_reduced(k, opt);
}

const char* method_name(HomologyMethod m) {
  switch (m) {
    case HomologyMethod::Gf2: return "gf2";
    case HomologyMethod::ModP: return "gfp";
    case HomologyMethod::Rational: return "rank";
    case HomologyMethod::Smith: return "snf";
    case HomologyMethod::Crosscheck: return "crosscheck";
  }
  return "?";
}

std::optional<HomologyMethod> parse_method(const std::string& s) {
  if (s == "gf2") return HomologyMethod::Gf2;
  if (s == "gfp" || s == "gf3") return HomologyMethod::ModP;
  if (s == "rank" || s == "rational") return HomologyMethod::Rational;
  if (s == "snf") return HomologyMethod::Smith;
  if (s == "crosscheck" || s == "auto") return HomologyMethod::Crosscheck;
  return std::nullopt;
}

}  // namespace matchcx
