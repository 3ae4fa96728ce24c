#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "oom/error.hpp"

namespace oom {

using SymbolIndex = std::uint32_t;

/// Symbol-linear arithmetic formula: every symbol occurs at most once.
/// Immutable; copies share structure.
class Formula {
 public:
  enum class Kind { Symbol, Neg, Inv, Add, Mul };

  static Formula symbol(SymbolIndex i) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Symbol;
    n->index = i;
    n->symbols = {i};
    return Formula(std::move(n));
  }

  static Formula neg(Formula f) { return unary(Kind::Neg, std::move(f)); }
  static Formula inv(Formula f) { return unary(Kind::Inv, std::move(f)); }
  static Formula add(Formula l, Formula r) { return binary(Kind::Add, std::move(l), std::move(r)); }
  static Formula mul(Formula l, Formula r) { return binary(Kind::Mul, std::move(l), std::move(r)); }

  Kind kind() const { return node_->kind; }
  SymbolIndex index() const { return node_->index; }
  const Formula& child() const { return node_->children.at(0); }
  const Formula& left() const { return node_->children.at(0); }
  const Formula& right() const { return node_->children.at(1); }
  const std::set<SymbolIndex>& symbols() const { return node_->symbols; }

  std::size_t depth() const {
    std::size_t d = 0;
    for (const auto& c : node_->children) d = std::max(d, c.depth());
    return d + (node_->children.empty() ? 0 : 1);
  }

  friend bool operator==(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind()) return false;
    if (a.kind() == Kind::Symbol) return a.index() == b.index();
    return a.node_->children == b.node_->children;
  }

 private:
  struct Node {
    Kind kind = Kind::Symbol;
    SymbolIndex index = 0;
    std::vector<Formula> children;
    std::set<SymbolIndex> symbols;
  };

  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  static Formula unary(Kind k, Formula f) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    n->symbols = f.symbols();
    n->children.push_back(std::move(f));
    return Formula(std::move(n));
  }

  static Formula binary(Kind k, Formula l, Formula r) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    n->symbols = l.symbols();
    for (SymbolIndex i : r.symbols()) {
      if (!n->symbols.insert(i).second)
        throw NonLinearFormula("symbol x" + std::to_string(i) + " occurs twice");
    }
    n->children.push_back(std::move(l));
    n->children.push_back(std::move(r));
    return Formula(std::move(n));
  }

  std::shared_ptr<const Node> node_;
};

/// Source name of every symbol index. Several indices may share a name when
/// the text mentioned that name more than once.
using NameTable = std::map<SymbolIndex, std::string>;

struct ParsedFormula {
  Formula formula;
  NameTable names;
};

namespace detail {

/// Names of the form x<digits> (no leading zero) keep their own index.
inline bool indexed_name(std::string_view name, SymbolIndex* out) {
  if (name.size() < 2 || name[0] != 'x' || name[1] == '0' || name.size() > 10) return false;
  std::uint64_t v = 0;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return false;
    v = v * 10 + static_cast<std::uint64_t>(name[i] - '0');
  }
  if (v == 0 || v > 0xffffffffu) return false;
  *out = static_cast<SymbolIndex>(v);
  return true;
}

inline bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
inline bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

inline std::vector<std::string> identifiers(std::string_view text) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < text.size();) {
    if (ident_start(text[i])) {
      std::size_t j = i;
      while (j < text.size() && ident_char(text[j])) ++j;
      out.emplace_back(text.substr(i, j - i));
      i = j;
    } else {
      ++i;
    }
  }
  return out;
}

/// One past the largest x<k> index mentioned anywhere in the text.
inline SymbolIndex first_free_index(std::string_view text) {
  SymbolIndex next = 1;
  for (const auto& name : identifiers(text)) {
    SymbolIndex k;
    if (indexed_name(name, &k)) next = std::max<SymbolIndex>(next, k + 1);
  }
  return next;
}

/// Grammar, loosest to tightest:
///   sum     := product (('+'|'-') product)*
///   product := prefix (('*'|'/') prefix)*
///   prefix  := '-' prefix | postfix
///   postfix := atom ('^-1')*
///   atom    := identifier | '(' sum ')'
/// `a - b` is Add(a, Neg(b)) and `a / b` is Mul(a, Inv(b)).
class FormulaParser {
 public:
  FormulaParser(std::string_view text, SymbolIndex first_fresh, std::set<SymbolIndex>* used)
      : text_(text), used_(used), next_fresh_(first_fresh) {}

  ParsedFormula parse() {
    // Reserve every x<k> index up front so fresh indices never collide.
    for (const auto& name : scan_identifiers()) {
      SymbolIndex k;
      if (indexed_name(name, &k)) {
        next_fresh_ = std::max<SymbolIndex>(next_fresh_, k + 1);
        reserved_.insert(k);
      }
    }
    for (SymbolIndex k : *used_) next_fresh_ = std::max<SymbolIndex>(next_fresh_, k + 1);
    Formula f = sum();
    skip();
    if (pos_ != text_.size()) throw SyntaxError("unexpected character", pos_);
    return {std::move(f), std::move(names_)};
  }

 private:
  std::vector<std::string> scan_identifiers() const { return identifiers(text_); }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view tok) {
    skip();
    if (text_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  Formula sum() {
    Formula f = product();
    for (;;) {
      if (accept("+"))
        f = Formula::add(std::move(f), product());
      else if (accept("-"))
        f = Formula::add(std::move(f), Formula::neg(product()));
      else
        return f;
    }
  }

  Formula product() {
    Formula f = prefix();
    for (;;) {
      if (accept("*"))
        f = Formula::mul(std::move(f), prefix());
      else if (accept("/"))
        f = Formula::mul(std::move(f), Formula::inv(prefix()));
      else
        return f;
    }
  }

  Formula prefix() {
    if (accept("-")) return Formula::neg(prefix());
    return postfix();
  }

  Formula postfix() {
    Formula f = atom();
    for (;;) {
      skip();
      const std::size_t at = pos_;
      if (!accept("^")) return f;
      if (!accept("-") || !accept("1")) throw SyntaxError("only ^-1 is supported", at);
      skip();
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        throw SyntaxError("only ^-1 is supported", at);
      f = Formula::inv(std::move(f));
    }
  }

  Formula atom() {
    skip();
    if (pos_ >= text_.size()) throw SyntaxError("unexpected end of input", pos_);
    if (text_[pos_] == '(') {
      ++pos_;
      Formula f = sum();
      if (!accept(")")) throw SyntaxError("expected ')'", pos_);
      return f;
    }
    if (!ident_start(text_[pos_])) throw SyntaxError("expected identifier", pos_);
    const std::size_t start = pos_;
    while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    return Formula::symbol(bind(std::string(text_.substr(start, pos_ - start))));
  }

  SymbolIndex bind(const std::string& name) {
    SymbolIndex k;
    if (indexed_name(name, &k) && !used_->count(k)) {
      used_->insert(k);
      names_[k] = name;
      return k;
    }
    k = next_fresh_++;
    while (reserved_.count(k) || used_->count(k)) k = next_fresh_++;
    used_->insert(k);
    names_[k] = name;
    return k;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::set<SymbolIndex>* used_;
  std::set<SymbolIndex> reserved_;
  SymbolIndex next_fresh_;
  NameTable names_;
};

}  // namespace detail

/// Parses one formula. Repeated names become distinct symbols that share an
/// entry in the name table.
inline ParsedFormula parse_formula(std::string_view text) {
  std::set<SymbolIndex> used;
  return detail::FormulaParser(text, 1, &used).parse();
}

/// Two formulas over disjoint symbol sets, as needed for comparing them.
struct ParsedClaim {
  Formula lhs, rhs;
  NameTable names;
};

/// Parses `EXPR1 > EXPR2`.
inline ParsedClaim parse_claim(std::string_view text) {
  const auto gt = text.find('>');
  if (gt == std::string_view::npos) throw SyntaxError("claim must have the form LHS > RHS", 0);
  if (text.find('>', gt + 1) != std::string_view::npos)
    throw SyntaxError("claim has more than one '>'", text.find('>', gt + 1));
  std::set<SymbolIndex> used;
  const SymbolIndex fresh = detail::first_free_index(text);
  auto side = [&](std::size_t offset, std::string_view part, const char* label) {
    try {
      return detail::FormulaParser(part, fresh, &used).parse();
    } catch (const SyntaxError& e) {
      throw SyntaxError(std::string("in ") + label + " side: " + e.message(), offset + e.position());
    }
  };
  ParsedFormula l = side(0, text.substr(0, gt), "left");
  ParsedFormula r = side(gt + 1, text.substr(gt + 1), "right");
  ParsedClaim c{l.formula, r.formula, l.names};
  c.names.insert(r.names.begin(), r.names.end());
  return c;
}

namespace detail {

inline int precedence(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Add: return 1;
    case Formula::Kind::Mul: return 2;
    case Formula::Kind::Neg: return 3;
    case Formula::Kind::Inv: return 4;
    case Formula::Kind::Symbol: return 5;
  }
  return 0;
}

inline std::string render(const Formula& f, const NameTable* names);

inline std::string render_at(const Formula& f, int min_prec, const NameTable* names) {
  std::string s = render(f, names);
  return precedence(f) < min_prec ? "(" + s + ")" : s;
}

inline std::string render(const Formula& f, const NameTable* names) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Symbol: {
      if (names) {
        auto it = names->find(f.index());
        if (it != names->end()) return it->second;
      }
      return "x" + std::to_string(f.index());
    }
    case K::Neg:
      return "-" + render_at(f.child(), 3, names);
    case K::Inv:
      return render_at(f.child(), 5, names) + "^-1";
    case K::Add:
      if (f.right().kind() == K::Neg)
        return render_at(f.left(), 1, names) + " - " + render_at(f.right().child(), 2, names);
      return render_at(f.left(), 1, names) + " + " + render_at(f.right(), 2, names);
    case K::Mul:
      if (f.right().kind() == K::Inv)
        return render_at(f.left(), 2, names) + " / " + render_at(f.right().child(), 3, names);
      return render_at(f.left(), 2, names) + " * " + render_at(f.right(), 3, names);
  }
  return {};
}

}  // namespace detail

/// Text with canonical x<k> names; parse_formula reads it back to the same
/// tree.
inline std::string to_string(const Formula& f) { return detail::render(f, nullptr); }

/// Text using the source names in the table.
inline std::string to_string(const Formula& f, const NameTable& names) {
  return detail::render(f, &names);
}

}  // namespace oom
