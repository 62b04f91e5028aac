#include "core/label.hpp"

#include <cctype>
#include <charconv>
#include <optional>

#include "core/error.hpp"

namespace matchcx {

namespace {

constexpr char kLetters[] = "uvwxybadjomqfh";

std::optional<int> parse_int(std::string_view s) {
  if (s.empty()) return std::nullopt;
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

// Splits "{a|b}" at the top-level bar.
std::optional<std::pair<std::string, std::string>> split_edge(const std::string& s) {
  if (s.size() < 5 || s.front() != '{' || s.back() != '}') return std::nullopt;
  int depth = 0;
  for (std::size_t i = 1; i + 1 < s.size(); ++i) {
    if (s[i] == '{') ++depth;
    else if (s[i] == '}') --depth;
    else if (s[i] == '|' && depth == 0)
      return std::make_pair(s.substr(1, i - 1), s.substr(i + 1, s.size() - i - 2));
  }
  return std::nullopt;
}

}  // namespace

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidParameter: return "invalid-parameter";
    case ErrorCode::Precondition: return "precondition";
    case ErrorCode::SizeLimit: return "size-limit";
    case ErrorCode::Resource: return "resource-limit";
    case ErrorCode::Parse: return "parse";
    case ErrorCode::Io: return "io";
    case ErrorCode::Inconsistent: return "inconsistent";
  }
  return "unknown";
}

bool is_letter_kind(LabelKind kind) {
  return kind >= LabelKind::U && kind <= LabelKind::H;
}

char letter_of(LabelKind kind) {
  if (!is_letter_kind(kind)) fail(ErrorCode::InvalidParameter, "label kind has no letter");
  return kLetters[static_cast<int>(kind) - static_cast<int>(LabelKind::U)];
}

VertexLabel VertexLabel::cell(int row, int col) {
  VertexLabel l;
  l.kind_ = LabelKind::Cell;
  l.idx_ = {row, col};
  return l;
}

VertexLabel VertexLabel::index(int i) {
  VertexLabel l;
  l.kind_ = LabelKind::Index;
  l.idx_ = {i};
  return l;
}

VertexLabel VertexLabel::letter(LabelKind kind, int index) {
  if (!is_letter_kind(kind)) fail(ErrorCode::InvalidParameter, "not a letter label kind");
  if (index < 0) fail(ErrorCode::InvalidParameter, "negative label index");
  VertexLabel l;
  l.kind_ = kind;
  l.idx_ = {index};
  return l;
}

VertexLabel VertexLabel::letter(char c, int index) {
  for (int i = 0; kLetters[i] != '\0'; ++i) {
    if (kLetters[i] == c)
      return letter(static_cast<LabelKind>(static_cast<int>(LabelKind::U) + i), index);
  }
  fail(ErrorCode::InvalidParameter, std::string("unknown label letter '") + c + "'");
}

VertexLabel VertexLabel::edge(const VertexLabel& a, const VertexLabel& b) {
  if (a == b) fail(ErrorCode::InvalidParameter, "edge label needs two distinct endpoints");
  VertexLabel l;
  l.kind_ = LabelKind::EdgePair;
  l.ends_ = a < b ? std::make_shared<const LabelPair>(a, b) : std::make_shared<const LabelPair>(b, a);
  return l;
}

VertexLabel VertexLabel::token(std::string text) {
  if (text.empty()) fail(ErrorCode::InvalidParameter, "empty token label");
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c)))
      fail(ErrorCode::InvalidParameter, "token labels cannot contain whitespace");
  }
  VertexLabel l;
  l.kind_ = LabelKind::Token;
  l.text_ = std::move(text);
  return l;
}

VertexLabel VertexLabel::parse(const std::string& text) {
  if (auto parts = split_edge(text)) return edge(parse(parts->first), parse(parts->second));
  if (auto i = parse_int(text)) return index(*i);
  if (text.size() >= 5 && text.front() == '(' && text.back() == ')') {
    auto comma = text.find(',');
    if (comma != std::string::npos) {
      auto r = parse_int(std::string_view(text).substr(1, comma - 1));
      auto c = parse_int(std::string_view(text).substr(comma + 1, text.size() - comma - 2));
      if (r && c) return cell(*r, *c);
    }
  }
  if (!text.empty() && std::string_view(kLetters).find(text[0]) != std::string_view::npos) {
    if (text.size() == 1) return letter(text[0], 0);
    if (text[1] != '0' && text[1] != '-') {
      if (auto i = parse_int(std::string_view(text).substr(1))) return letter(text[0], *i);
    }
  }
  return token(text);
}

const VertexLabel& VertexLabel::first() const {
  if (!ends_) fail(ErrorCode::InvalidParameter, "label is not an edge pair");
  return ends_->first;
}

const VertexLabel& VertexLabel::second() const {
  if (!ends_) fail(ErrorCode::InvalidParameter, "label is not an edge pair");
  return ends_->second;
}

std::string VertexLabel::spelling() const {
  switch (kind_) {
    case LabelKind::Cell:
      return "(" + std::to_string(idx_[0]) + "," + std::to_string(idx_[1]) + ")";
    case LabelKind::Index:
      return std::to_string(idx_[0]);
    case LabelKind::EdgePair:
      return "{" + ends_->first.spelling() + "|" + ends_->second.spelling() + "}";
    case LabelKind::Token:
      return text_;
    default: {
      std::string s(1, letter_of(kind_));
      if (idx_[0] != 0) s += std::to_string(idx_[0]);
      return s;
    }
  }
}

std::strong_ordering operator<=>(const VertexLabel& a, const VertexLabel& b) {
  if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
  switch (a.kind_) {
    case LabelKind::EdgePair:
      if (auto c = a.ends_->first <=> b.ends_->first; c != 0) return c;
      return a.ends_->second <=> b.ends_->second;
    case LabelKind::Token:
      return a.text_.compare(b.text_) <=> 0;
    default:
      return a.idx_ <=> b.idx_;
  }
}

}  // namespace matchcx
