#pragma once

#include <compare>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace matchcx {

// Order of the enumerators is the canonical order of label classes. The grid
// letters come before the auxiliary family letters so that folding and face
// enumeration visit the G_n core first.
enum class LabelKind : unsigned char {
  Cell,
  Index,
  U, V, W, X, Y,
  B, A, D, J, O, M, Q, F, H,
  EdgePair,
  Token,
};

/// Structured vertex label. Compares lexicographically on (kind, indices),
/// then on the endpoints for edge-pair labels and on the text for tokens.
class VertexLabel {
 public:
  VertexLabel() = default;

  static VertexLabel cell(int row, int col);
  static VertexLabel index(int i);
  /// Letter labels `u3`, `b1`, ... ; `index == 0` spells the bare letter (`a`, `d`).
  static VertexLabel letter(char c, int index = 0);
  static VertexLabel letter(LabelKind kind, int index = 0);
  /// Line-graph vertex for the edge {a, b}; endpoints are stored in canonical order.
  static VertexLabel edge(const VertexLabel& a, const VertexLabel& b);
  static VertexLabel token(std::string text);

  /// Inverse of spelling(): `u1`, `a`, `(2,3)`, `7`, `{u1|v1}`; anything else is a token.
  static VertexLabel parse(const std::string& text);

  LabelKind kind() const noexcept { return kind_; }
  const std::vector<int>& indices() const noexcept { return idx_; }
  const std::string& text() const noexcept { return text_; }
  bool is_edge() const noexcept { return kind_ == LabelKind::EdgePair; }
  const VertexLabel& first() const;
  const VertexLabel& second() const;

  std::string spelling() const;

  friend std::strong_ordering operator<=>(const VertexLabel& a, const VertexLabel& b);
  friend bool operator==(const VertexLabel& a, const VertexLabel& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

 private:
  LabelKind kind_ = LabelKind::Index;
  std::vector<int> idx_;
  std::string text_;
  std::shared_ptr<const std::pair<VertexLabel, VertexLabel>> ends_;
};

using LabelSet = std::set<VertexLabel>;
using LabelPair = std::pair<VertexLabel, VertexLabel>;

char letter_of(LabelKind kind);
bool is_letter_kind(LabelKind kind);

}  // namespace matchcx
