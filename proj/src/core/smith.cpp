#include "core/smith.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace matchcx {

std::vector<mpz_class> SmithResult::torsion() const {
  std::vector<mpz_class> out;
  for (const auto& f : factors)
    if (f != 1) out.push_back(f);
  return out;
}

namespace {

// Turns a diagonal into divisibility order by repeated (gcd, lcm) swaps.
std::vector<mpz_class> normalize_diagonal(std::vector<mpz_class> d) {
  for (auto& x : d) x = abs(x);
  d.erase(std::remove(d.begin(), d.end(), 0), d.end());
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      if (d[j] % d[i] == 0) continue;
      mpz_class g, l;
      mpz_gcd(g.get_mpz_t(), d[i].get_mpz_t(), d[j].get_mpz_t());
      mpz_lcm(l.get_mpz_t(), d[i].get_mpz_t(), d[j].get_mpz_t());
      d[i] = g;
      d[j] = l;
    }
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

SmithResult smith_normal_form_dense(std::vector<std::vector<mpz_class>> a) {
  std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::vector<mpz_class> diag;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // smallest nonzero |entry| in the trailing block
    std::size_t pr = rows, pc = cols;
    for (std::size_t r = t; r < rows; ++r)
      for (std::size_t c = t; c < cols; ++c)
        if (a[r][c] != 0 && (pr == rows || abs(a[r][c]) < abs(a[pr][pc]))) {
          pr = r;
          pc = c;
        }
    if (pr == rows) break;
    std::swap(a[t], a[pr]);
    for (auto& row : a) std::swap(row[t], row[pc]);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (a[r][t] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a[r][t].get_mpz_t(), a[t][t].get_mpz_t());
        for (std::size_t c = t; c < cols; ++c) a[r][c] -= q * a[t][c];
        if (a[r][t] != 0) {
          std::swap(a[t], a[r]);
          clean = false;
        }
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (a[t][c] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a[t][c].get_mpz_t(), a[t][t].get_mpz_t());
        for (std::size_t r = t; r < rows; ++r) a[r][c] -= q * a[r][t];
        if (a[t][c] != 0) {
          for (auto& row : a) std::swap(row[t], row[c]);
          clean = false;
        }
      }
    }
    diag.push_back(a[t][t]);
    ++t;
  }
  SmithResult res;
  res.factors = normalize_diagonal(std::move(diag));
  res.rank = res.factors.size();
  return res;
}

SmithResult smith_normal_form(const SparseMatrix& m) {
  using Row = std::vector<std::pair<std::uint32_t, mpz_class>>;
  std::vector<Row> rows(m.rows);
  for (std::size_t c = 0; c < m.cols; ++c)
    for (auto [r, v] : m.columns[c])
      if (v != 0) rows[r].emplace_back(static_cast<std::uint32_t>(c), mpz_class(v));
  for (auto& r : rows) std::sort(r.begin(), r.end(), [](auto& x, auto& y) { return x.first < y.first; });
  std::vector<std::set<std::uint32_t>> col_rows(m.cols);
  for (std::size_t r = 0; r < m.rows; ++r)
    for (auto& [c, v] : rows[r]) col_rows[c].insert(static_cast<std::uint32_t>(r));
  std::vector<bool> row_dead(m.rows, false), col_dead(m.cols, false);

  std::vector<std::uint32_t> order(m.cols);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](auto x, auto y) { return col_rows[x].size() < col_rows[y].size(); });

  std::size_t units = 0;
  Row buf;
  bool progress = true;
  while (progress) {
    progress = false;
    for (auto c : order) {
      if (col_dead[c] || col_rows[c].empty()) continue;
      // unit entry in the shortest row
      std::uint32_t pr = UINT32_MAX;
      for (auto r : col_rows[c]) {
        auto it = std::lower_bound(rows[r].begin(), rows[r].end(), c,
                                   [](const auto& e, std::uint32_t k) { return e.first < k; });
        if (abs(it->second) != 1) continue;
        if (pr == UINT32_MAX || rows[r].size() < rows[pr].size()) pr = r;
      }
      if (pr == UINT32_MAX) continue;
      const Row pivot = rows[pr];
      auto pv = std::lower_bound(pivot.begin(), pivot.end(), c,
                                 [](const auto& e, std::uint32_t k) { return e.first < k; })
                    ->second;
      std::vector<std::uint32_t> targets(col_rows[c].begin(), col_rows[c].end());
      for (auto r : targets) {
        if (r == pr) continue;
        auto& row = rows[r];
        auto it = std::lower_bound(row.begin(), row.end(), c,
                                   [](const auto& e, std::uint32_t k) { return e.first < k; });
        mpz_class f = it->second * pv;  // pv is its own inverse
        buf.clear();
        std::size_t i = 0, j = 0;
        while (i < row.size() || j < pivot.size()) {
          if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
            buf.push_back(row[i++]);
          } else {
            auto col = pivot[j].first;
            mpz_class v = -f * pivot[j].second;
            bool had = i < row.size() && row[i].first == col;
            if (had) v += row[i++].second;
            if (v != 0)
              buf.emplace_back(col, v);
            else if (had)
              col_rows[col].erase(r);
            if (!had && v != 0) col_rows[col].insert(r);
            ++j;
          }
        }
        row.swap(buf);
      }
      for (auto& [col, v] : pivot) col_rows[col].erase(pr);
      rows[pr].clear();
      row_dead[pr] = true;
      col_dead[c] = true;
      ++units;
      progress = true;
    }
  }

  std::vector<std::uint32_t> live_rows, live_cols;
  for (std::uint32_t r = 0; r < m.rows; ++r)
    if (!row_dead[r] && !rows[r].empty()) live_rows.push_back(r);
  for (std::uint32_t c = 0; c < m.cols; ++c)
    if (!col_dead[c] && !col_rows[c].empty()) live_cols.push_back(c);
  std::vector<std::vector<mpz_class>> residue(live_rows.size(), std::vector<mpz_class>(live_cols.size(), 0));
  for (std::size_t i = 0; i < live_rows.size(); ++i)
    for (auto& [c, v] : rows[live_rows[i]]) {
      auto j = std::lower_bound(live_cols.begin(), live_cols.end(), c) - live_cols.begin();
      residue[i][static_cast<std::size_t>(j)] = v;
    }
  auto rest = smith_normal_form_dense(std::move(residue));
  SmithResult res;
  res.factors.assign(units, mpz_class(1));
  res.factors.insert(res.factors.end(), rest.factors.begin(), rest.factors.end());
  res.factors = normalize_diagonal(std::move(res.factors));
  res.rank = res.factors.size();
  return res;
}

}  // namespace matchcx
