#include "core/field_rank.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <bit>
#include <numeric>

#include "core/error.hpp"

namespace matchcx {

namespace {

constexpr std::uint64_t kDenseBitLimit = std::uint64_t{1} << 27;
constexpr std::uint32_t kNoPivot = UINT32_MAX;

bool skipped(const std::vector<bool>& skip, std::size_t c) { return c < skip.size() && skip[c]; }

std::uint32_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  std::uint64_t result = 1, e = p - 2;
  a %= p;
  while (e) {
    if (e & 1) result = result * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

struct Overflow {};

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}

std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}

mpz_class mul(const mpz_class& a, const mpz_class& b) { return a * b; }
mpz_class sub(const mpz_class& a, const mpz_class& b) { return a - b; }

std::int64_t gcd_of(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
mpz_class gcd_of(const mpz_class& a, const mpz_class& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

template <typename T>
RankResult rational_rank(const SparseMatrix& m, const std::vector<bool>& skip) {
  using Col = std::vector<std::pair<std::uint32_t, T>>;
  RankResult out;
  std::vector<std::uint32_t> pivot_of(m.rows, kNoPivot);
  std::vector<Col> reduced;
  Col buf;
  for (std::size_t c = 0; c < m.cols; ++c) {
    if (skipped(skip, c)) continue;
    Col col;
    for (auto [r, v] : m.columns[c]) col.emplace_back(r, T(v));
    while (!col.empty() && pivot_of[col.back().first] != kNoPivot) {
      const auto& piv = reduced[pivot_of[col.back().first]];
      // col <- a*col - b*piv with a = piv.low, b = col.low
      T a = piv.back().second, b = col.back().second;
      T g = gcd_of(a, b);
      a /= g;
      b /= g;
      buf.clear();
      std::size_t i = 0, j = 0;
      while (i < col.size() || j < piv.size()) {
        if (j == piv.size() || (i < col.size() && col[i].first < piv[j].first)) {
          buf.emplace_back(col[i].first, mul(a, col[i].second));
          ++i;
        } else if (i == col.size() || piv[j].first < col[i].first) {
          buf.emplace_back(piv[j].first, sub(T(0), mul(b, piv[j].second)));
          ++j;
        } else {
          T v = sub(mul(a, col[i].second), mul(b, piv[j].second));
          if (v != 0) buf.emplace_back(col[i].first, v);
          ++i;
          ++j;
        }
      }
      col.swap(buf);
      if (!col.empty()) {
        T content = 0;
        for (auto& e : col) content = gcd_of(content, e.second);
        if (content < 0) content = -content;
        if (content > 1)
          for (auto& e : col) e.second /= content;
      }
    }
    if (col.empty()) continue;
    pivot_of[col.back().first] = static_cast<std::uint32_t>(reduced.size());
    out.pivot_rows.push_back(col.back().first);
    reduced.push_back(std::move(col));
  }
  out.rank = reduced.size();
  return out;
}

}  // namespace

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

RankResult rank_gf2_dense(const SparseMatrix& m, const std::vector<bool>& skip) {
  RankResult out;
  std::size_t words = (m.rows + 63) / 64;
  std::vector<std::uint32_t> pivot_of(m.rows, kNoPivot);
  std::vector<std::uint64_t> store;  // reduced pivot columns, `words` each
  std::vector<std::uint64_t> col(words);
  auto low = [&](const std::uint64_t* v) -> long {
    for (std::size_t w = words; w-- > 0;)
      if (v[w]) return static_cast<long>(w * 64 + 63 - static_cast<std::size_t>(std::countl_zero(v[w])));
    return -1;
  };
  for (std::size_t c = 0; c < m.cols; ++c) {
    if (skipped(skip, c)) continue;
    std::fill(col.begin(), col.end(), 0);
    for (auto [r, v] : m.columns[c])
      if (v & 1) col[r / 64] ^= std::uint64_t{1} << (r % 64);
    long l;
    while ((l = low(col.data())) >= 0 && pivot_of[static_cast<std::size_t>(l)] != kNoPivot) {
      const auto* p = store.data() + std::size_t{pivot_of[static_cast<std::size_t>(l)]} * words;
      for (std::size_t w = 0; w <= static_cast<std::size_t>(l) / 64; ++w) col[w] ^= p[w];
    }
    if (l < 0) continue;
    pivot_of[static_cast<std::size_t>(l)] = static_cast<std::uint32_t>(out.rank++);
    out.pivot_rows.push_back(static_cast<std::uint32_t>(l));
    store.insert(store.end(), col.begin(), col.end());
  }
  return out;
}

RankResult rank_gf2_sparse(const SparseMatrix& m, const std::vector<bool>& skip) {
  RankResult out;
  std::vector<std::uint32_t> pivot_of(m.rows, kNoPivot);
  std::vector<std::vector<std::uint32_t>> reduced;
  std::vector<std::uint32_t> col, buf;
  for (std::size_t c = 0; c < m.cols; ++c) {
    if (skipped(skip, c)) continue;
    col.clear();
    for (auto [r, v] : m.columns[c])
      if (v & 1) col.push_back(r);
    while (!col.empty() && pivot_of[col.back()] != kNoPivot) {
      const auto& p = reduced[pivot_of[col.back()]];
      buf.clear();
      std::set_symmetric_difference(col.begin(), col.end(), p.begin(), p.end(), std::back_inserter(buf));
      col.swap(buf);
    }
    if (col.empty()) continue;
    pivot_of[col.back()] = static_cast<std::uint32_t>(reduced.size());
    out.pivot_rows.push_back(col.back());
    reduced.push_back(col);
  }
  out.rank = reduced.size();
  return out;
}

RankResult rank_gf2(const SparseMatrix& m, const std::vector<bool>& skip) {
  if (std::uint64_t{m.rows} * m.cols <= kDenseBitLimit) return rank_gf2_dense(m, skip);
  return rank_gf2_sparse(m, skip);
}

RankResult rank_mod_p(const SparseMatrix& m, std::uint32_t p, const std::vector<bool>& skip) {
  if (!is_prime(p) || p > INT32_MAX) fail(ErrorCode::InvalidParameter, "modulus must be a prime below 2^31");
  if (p == 2) return rank_gf2(m, skip);
  using Col = std::vector<std::pair<std::uint32_t, std::uint32_t>>;
  RankResult out;
  std::vector<std::uint32_t> pivot_of(m.rows, kNoPivot);
  std::vector<Col> reduced;
  Col col, buf;
  const std::int64_t P = p;
  for (std::size_t c = 0; c < m.cols; ++c) {
    if (skipped(skip, c)) continue;
    col.clear();
    for (auto [r, v] : m.columns[c]) {
      auto x = static_cast<std::uint32_t>(((v % P) + P) % P);
      if (x) col.emplace_back(r, x);
    }
    while (!col.empty() && pivot_of[col.back().first] != kNoPivot) {
      const auto& piv = reduced[pivot_of[col.back().first]];
      // pivot columns are stored with leading coefficient 1
      std::uint64_t f = col.back().second;
      buf.clear();
      std::size_t i = 0, j = 0;
      while (i < col.size() || j < piv.size()) {
        if (j == piv.size() || (i < col.size() && col[i].first < piv[j].first)) {
          buf.push_back(col[i++]);
        } else {
          auto sub = static_cast<std::uint32_t>(f * piv[j].second % p);
          std::uint32_t base = (i < col.size() && col[i].first == piv[j].first) ? col[i++].second : 0;
          auto v = static_cast<std::uint32_t>((base + p - sub) % p);
          if (v) buf.emplace_back(piv[j].first, v);
          ++j;
        }
      }
      col.swap(buf);
    }
    if (col.empty()) continue;
    std::uint64_t inv = mod_inverse(col.back().second, p);
    for (auto& e : col) e.second = static_cast<std::uint32_t>(e.second * inv % p);
    pivot_of[col.back().first] = static_cast<std::uint32_t>(reduced.size());
    out.pivot_rows.push_back(col.back().first);
    reduced.push_back(col);
  }
  out.rank = reduced.size();
  return out;
}

RankResult rank_rational(const SparseMatrix& m, const std::vector<bool>& skip) {
  try {
    return rational_rank<std::int64_t>(m, skip);
  } catch (const Overflow&) {
    return rational_rank<mpz_class>(m, skip);
  }
}

}  // namespace matchcx
