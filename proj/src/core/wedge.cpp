#include "core/wedge.hpp"

#include <deque>
#include <mutex>

#include "core/error.hpp"

namespace matchcx {

WedgeExpression WedgeExpression::spheres(int dim, const mpz_class& count) {
  WedgeExpression w;
  w.add(dim, count);
  return w;
}

WedgeExpression& WedgeExpression::add(int dim, const mpz_class& count) {
  if (dim < 0) fail(ErrorCode::InvalidParameter, "sphere dimension must be nonnegative");
  if (count < 0) fail(ErrorCode::InvalidParameter, "sphere count must be nonnegative");
  if (count != 0) spheres_[dim] += count;
  return *this;
}

mpz_class WedgeExpression::count(int dim) const {
  auto it = spheres_.find(dim);
  return it == spheres_.end() ? mpz_class(0) : it->second;
}

std::vector<int> WedgeExpression::support() const {
  std::vector<int> out;
  for (const auto& [d, c] : spheres_) out.push_back(d);
  return out;
}

std::string WedgeExpression::to_text() const {
  if (spheres_.empty()) return "pt";
  std::string out;
  for (const auto& [d, c] : spheres_) {
    if (!out.empty()) out += " ";
    if (c != 1)
      out += "∨_" + c.get_str() + " ";
    else if (!out.empty())
      out += "∨ ";
    out += "S^" + std::to_string(d);
  }
  return out;
}

std::string WedgeExpression::to_json() const {
  std::string out = "{\"spheres\":{";
  bool first = true;
  for (const auto& [d, c] : spheres_) {
    out += (first ? "\"" : ",\"") + std::to_string(d) + "\":" + c.get_str();
    first = false;
  }
  out += std::string("},\"contractible\":") + (contractible() ? "true" : "false") + "}";
  return out;
}

namespace {

struct Scanner {
  const std::string& s;
  std::size_t i = 0;

  void skip_space() {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
  }
  bool eat(std::string_view tok) {
    skip_space();
    if (s.compare(i, tok.size(), tok) != 0) return false;
    i += tok.size();
    return true;
  }
  std::string number() {
    skip_space();
    bool braced = eat("{");
    skip_space();
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (start == i) fail(ErrorCode::Parse, "expected a number in '" + s + "'");
    std::string digits = s.substr(start, i - start);
    if (braced && !eat("}")) fail(ErrorCode::Parse, "unbalanced brace in '" + s + "'");
    return digits;
  }
  bool done() {
    skip_space();
    return i == s.size();
  }
};

}  // namespace

WedgeExpression WedgeExpression::parse(const std::string& text) {
  Scanner sc{text};
  WedgeExpression w;
  if (sc.eat("pt")) {
    if (!sc.done()) fail(ErrorCode::Parse, "trailing text after pt in '" + text + "'");
    return w;
  }
  bool expect_term = true;
  while (!sc.done()) {
    mpz_class count = 1;
    if (sc.eat("∨_")) {
      count = mpz_class(sc.number());
    } else if (sc.eat("∨")) {
      if (expect_term) fail(ErrorCode::Parse, "dangling wedge sign in '" + text + "'");
      expect_term = true;
      continue;
    } else if (!expect_term) {
      fail(ErrorCode::Parse, "missing wedge sign in '" + text + "'");
    }
    if (!sc.eat("S^")) fail(ErrorCode::Parse, "expected S^d in '" + text + "'");
    w.add(std::stoi(sc.number()), count);
    expect_term = false;
  }
  if (expect_term) fail(ErrorCode::Parse, "empty wedge expression '" + text + "'");
  return w;
}

WedgeExpression wedge(const WedgeExpression& a, const WedgeExpression& b) {
  WedgeExpression out = a;
  for (const auto& [d, c] : b.counts()) out.add(d, c);
  return out;
}

WedgeExpression suspend(const WedgeExpression& a, int k) {
  if (k < 0) fail(ErrorCode::InvalidParameter, "suspension degree must be nonnegative");
  WedgeExpression out;
  for (const auto& [d, c] : a.counts()) out.add(d + k, c);
  return out;
}

namespace {

using F = FamilyId;

WedgeExpression S(int d, int c = 1) { return WedgeExpression::spheres(d, c); }

std::size_t slot(FamilyId f) { return static_cast<std::size_t>(f); }

}  // namespace

bool has_base_case(FamilyId f, int n) {
  if (n == 1 || n == 2) return true;
  return n == 3 && (f == F::G || f == F::A);
}

WedgeExpression base_case(FamilyId f, int n) {
  if (!has_base_case(f, n))
    fail(ErrorCode::InvalidParameter, std::string("no base value for ") + family_char(f) + "_" + std::to_string(n));
  if (n == 3) return S(2, 5);
  bool one = n == 1;
  switch (f) {
    case F::G: return one ? S(0) : S(1, 2);
    case F::B: return one ? S(1, 2) : S(2, 4);
    case F::A: return one ? S(0, 2) : S(1, 2);
    case F::D: return one ? S(0) : S(1, 2);
    case F::J: return one ? S(1, 2) : S(2, 2);
    case F::O: return one ? S(2) : S(3, 2);
    case F::M: return one ? WedgeExpression::point() : S(2);
    case F::Q: return one ? WedgeExpression::point() : S(3);
    case F::F: return one ? S(1, 2) : S(2, 3);
    case F::H: return one ? S(1) : S(2, 3);
  }
  return {};
}

int first_recursive_index(FamilyId f) { return f == F::G || f == F::A ? 4 : 3; }

const std::vector<RecursionTerm>& recursion_terms(FamilyId f) {
  static const std::array<std::vector<RecursionTerm>, 10> table = {{
      {{F::B, 1, 0, -1}, {F::A, 1, 3, -3}},  // G
      {{F::G, 1, 1, 0}, {F::A, 1, 2, -1}},   // B
      {{F::D, 2, 1, -1}, {F::A, 1, 3, -3}},  // A
      {{F::D, 1, 1, -1}, {F::J, 1, 1, -2}},  // D
      {{F::O, 1, 0, -1}, {F::D, 1, 2, -1}},  // J
      {{F::D, 1, 2, 0}, {F::Q, 1, 2, -1}},   // O
      {{F::M, 1, 1, -1}, {F::F, 1, 2, -2}},  // M
      {{F::M, 1, 1, 0}, {F::M, 1, 2, -1}},   // Q
      {{F::G, 1, 1, 0}, {F::H, 1, 1, -1}},   // F
      {{F::G, 1, 1, 0}, {F::F, 1, 2, -2}},   // H
  }};
  return table[slot(f)];
}

namespace {

template <typename Lookup>
WedgeExpression step(FamilyId f, int n, Lookup&& get) {
  if (n < first_recursive_index(f)) return base_case(f, n);
  WedgeExpression out;
  for (const auto& t : recursion_terms(f)) {
    auto piece = suspend(get(t.target, n + t.offset), t.shift);
    for (int i = 0; i < t.multiplicity; ++i) out = wedge(out, piece);
  }
  return out;
}

}  // namespace

WedgeExpression WedgeEngine::evaluate_direct(FamilyId f, int n) {
  if (n < 1) fail(ErrorCode::InvalidParameter, "family index n must be positive");
  return step(f, n, [](FamilyId g, int m) { return evaluate_direct(g, m); });
}

WedgeExpression WedgeEngine::homotopy_type(FamilyId f, int n) {
  if (n < 1) fail(ErrorCode::InvalidParameter, "family index n must be positive");
  auto idx = static_cast<std::size_t>(n - 1);
  {
    std::shared_lock lock(mu_);
    if (idx < memo_.size()) return memo_[idx][slot(f)];
  }
  std::unique_lock lock(mu_);
  while (memo_.size() <= idx) {
    int m = static_cast<int>(memo_.size()) + 1;
    std::array<WedgeExpression, 10> level;
    auto get = [&](FamilyId g, int k) -> const WedgeExpression& {
      return k == m ? level[slot(g)] : memo_[static_cast<std::size_t>(k - 1)][slot(g)];
    };
    for (auto g : kEvaluationOrder) level[slot(g)] = step(g, m, get);
    memo_.push_back(std::move(level));  // a level is published whole
  }
  return memo_[idx][slot(f)];
}

void WedgeEngine::sweep(int n_max, const std::function<void(FamilyId, int, const WedgeExpression&)>& visit) {
  std::deque<std::array<WedgeExpression, 10>> window;  // levels m-3 .. m-1
  for (int m = 1; m <= n_max; ++m) {
    std::array<WedgeExpression, 10> level;
    auto get = [&](FamilyId g, int k) -> const WedgeExpression& {
      if (k == m) return level[slot(g)];
      return window[window.size() - static_cast<std::size_t>(m - k)][slot(g)];
    };
    for (auto g : kEvaluationOrder) {
      level[slot(g)] = step(g, m, get);
      visit(g, m, level[slot(g)]);
    }
    window.push_back(std::move(level));
    if (window.size() > 3) window.pop_front();
  }
}

std::size_t WedgeEngine::memo_size() const {
  std::shared_lock lock(mu_);
  return memo_.size();
}

WedgeEngine& default_engine() {
  static WedgeEngine engine;
  return engine;
}

WedgeExpression homotopy_type(FamilyId f, int n) { return default_engine().homotopy_type(f, n); }

WedgeExpression matching_grid3(int n) { return homotopy_type(FamilyId::G, n); }

WedgeExpression path_formula(int r) {
  if (r < 1) fail(ErrorCode::InvalidParameter, "path length must be positive");
  int k = r / 3;
  switch (r % 3) {
    case 0: return S(k - 1);
    case 1: return WedgeExpression::point();
    default: return S(k);
  }
}

WedgeExpression cycle_formula(int r) {
  if (r < 3) fail(ErrorCode::InvalidParameter, "cycle needs at least 3 vertices");
  switch (r % 3) {
    case 0: return S(r / 3 - 1, 2);
    case 1: return S((r - 1) / 3 - 1);
    default: return S((r + 1) / 3 - 1);
  }
}

std::optional<DimRange> dimension_range(FamilyId f, int n) {
  if (n < 1) fail(ErrorCode::InvalidParameter, "family index n must be positive");
  // window offset, then low = n + lo, high = n + k + hi
  struct Rule {
    int offset, lo, hi;
  };
  static const std::array<Rule, 10> rules = {{
      {0, -1, -1},  // G
      {8, 0, 1},    // B
      {7, -1, 0},   // A
      {6, -1, 0},   // D
      {4, 0, 1},    // J
      {3, 1, 2},    // O
      {2, 0, 0},    // M
      {2, 1, 1},    // Q
      {0, 0, 0},    // F
      {0, 0, 0},    // H
  }};
  const auto& r = rules[slot(f)];
  std::optional<std::optional<DimRange>> found;
  for (int k = -1; 9 * k + r.offset <= n; ++k) {
    if (n > 9 * k + r.offset + 8) continue;
    std::optional<DimRange> here;
    int low = n + r.lo, high = n + k + r.hi;
    if (low <= high) here = DimRange{low, high};
    if (found && *found != here)
      fail(ErrorCode::Inconsistent, std::string("overlapping windows disagree for ") + family_char(f) + "_" +
                                        std::to_string(n));
    found = here;
  }
  if (!found) fail(ErrorCode::Inconsistent, "no window contains n");
  return *found;
}

}  // namespace matchcx
