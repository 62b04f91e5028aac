#include "core/families.hpp"

#include <sstream>
#include <string>

namespace matchcx {

namespace {

VertexLabel L(const std::string& s) { return VertexLabel::parse(s); }

std::vector<LabelPair> pairs(std::string_view spec) {
  std::vector<LabelPair> out;
  std::istringstream in{std::string(spec)};
  std::string tok;
  while (in >> tok) {
    auto dash = tok.find('-');
    out.emplace_back(L(tok.substr(0, dash)), L(tok.substr(dash + 1)));
  }
  return out;
}

std::vector<LabelPair> core_edges(int n) {
  if (n == 1) return pairs("v1-x1");
  std::vector<LabelPair> es;
  auto l = [](char c, int i) { return VertexLabel::letter(c, i); };
  for (int i = 1; i < n; ++i) {
    es.emplace_back(l('u', i), l('v', i));
    es.emplace_back(l('v', i), l('w', i));
    es.emplace_back(l('w', i), l('x', i));
    es.emplace_back(l('x', i), l('y', i));
    es.emplace_back(l('y', i), l('x', i + 1));
    es.emplace_back(l('x', i + 1), l('w', i));
    es.emplace_back(l('w', i), l('v', i + 1));
    es.emplace_back(l('v', i + 1), l('u', i));
  }
  for (int i = 1; i + 1 < n; ++i) {
    es.emplace_back(l('u', i), l('u', i + 1));
    es.emplace_back(l('w', i), l('w', i + 1));
    es.emplace_back(l('y', i), l('y', i + 1));
  }
  for (int j = 1; j <= n; ++j) es.emplace_back(l('v', j), l('x', j));
  return es;
}

struct Gadget {
  std::string_view first;   // n = 1
  std::string_view general;  // n >= 2
};

const Gadget& gadget(FamilyId f) {
  static const std::map<FamilyId, Gadget> table = {
      {FamilyId::G, {"", ""}},
      {FamilyId::B,
       {"b1-v1 b1-b2 b2-b3 b3-b4 b4-x1",
        "b1-u1 b1-v1 b1-b2 b2-b3 b3-b4 b4-x1 b4-y1"}},
      {FamilyId::A, {"a-x1 a-v1", "a-x1 a-v1 a-w1"}},
      {FamilyId::D, {"d-v1", "d-v1 d-u1"}},
      {FamilyId::J,
       {"j1-v1 j1-x1 j1-j3 j1-j4 j2-x1 j2-j3 j2-j5 j3-j4 j3-j5 j4-j6 j5-j6",
        "j1-v1 j1-x1 j1-j3 j1-j4 j2-x1 j2-j3 j2-j5 j3-j4 j3-j5 j4-j6 j5-j6 j2-y1 j1-w1"}},
      {FamilyId::O,
       {"o1-v1 o1-o4 o2-v1 o2-x1 o2-o4 o2-o5 o3-x1 o3-o6 o4-o5 o5-o7 o6-o8 o7-o9 o8-o9",
        "o1-u1 o1-v1 o1-o4 o2-v1 o2-x1 o2-w1 o2-o4 o2-o5 o3-x1 o3-y1 o3-o6 o4-o5 o5-o7 o6-o8 "
        "o7-o9 o8-o9"}},
      {FamilyId::M,
       {"m1-v1 m1-x1 m1-m2 m2-m3 m3-x1", "m1-v1 m1-x1 m1-w1 m1-m2 m2-m3 m3-x1 m3-y1"}},
      {FamilyId::Q,
       {"q1-v1 q1-q3 q1-q4 q2-v1 q2-x1 q2-q3 q2-q5 q3-q4 q3-q5 q4-q6 q5-q6 q5-q7 q6-q7",
        "q1-u1 q1-v1 q1-q3 q1-q4 q2-v1 q2-x1 q2-w1 q2-q3 q2-q5 q3-q4 q3-q5 q4-q6 q5-q6 q5-q7 "
        "q6-q7"}},
      {FamilyId::F,
       {"f1-v1 f1-x1 f1-f2 f2-f3 f2-f4 f3-f4 f4-x1",
        "f1-v1 f1-x1 f1-f2 f1-w1 f2-f3 f2-f4 f3-f4 f4-x1 f4-y1"}},
      {FamilyId::H,
       {"h1-v1 h1-h2 h2-h3 h2-h4 h3-h4 h4-v1 h4-x1",
        "h1-v1 h1-u1 h1-h2 h2-h3 h2-h4 h3-h4 h4-v1 h4-x1 h4-w1"}},
  };
  return table.at(f);
}

}  // namespace

char family_char(FamilyId f) { return "GBADJOMQFH"[static_cast<int>(f)]; }

std::optional<FamilyId> parse_family(std::string_view token) {
  if (token.size() != 1) return std::nullopt;
  char c = token[0];
  if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
  for (auto f : kAllFamilies)
    if (family_char(f) == c) return f;
  return std::nullopt;
}

Graph build_family(FamilyId f, int n) {
  if (n < 1) fail(ErrorCode::InvalidParameter, "family index n must be positive");
  auto es = core_edges(n);
  const auto& gd = gadget(f);
  for (auto& e : pairs(n == 1 ? gd.first : gd.general)) es.push_back(std::move(e));
  return Graph::from_edges(es);
}

std::map<VertexLabel, VertexLabel> grid3_line_labels(int n) {
  if (n < 1) fail(ErrorCode::InvalidParameter, "grid width must be positive");
  std::map<VertexLabel, VertexLabel> out;
  const char rows[] = {'u', 'w', 'y'};
  for (int r = 1; r <= 3; ++r)
    for (int j = 1; j < n; ++j)
      out.emplace(VertexLabel::edge(VertexLabel::cell(r, j), VertexLabel::cell(r, j + 1)),
                  VertexLabel::letter(rows[r - 1], j));
  for (int j = 1; j <= n; ++j) {
    out.emplace(VertexLabel::edge(VertexLabel::cell(1, j), VertexLabel::cell(2, j)),
                VertexLabel::letter('v', j));
    out.emplace(VertexLabel::edge(VertexLabel::cell(2, j), VertexLabel::cell(3, j)),
                VertexLabel::letter('x', j));
  }
  return out;
}

}  // namespace matchcx
