#pragma once

// Cons-cell tree values, the S-expression reader/printer, and the error
// channel shared by every operation in the library.

#include <cassert>
#include <charconv>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace cadr {

struct cons_cell;

/// An immutable tree of cons cells.  A value is a symbol, a signed
/// integer, nil (the empty list), or a cons of two values.  Cons cells
/// are shared, never mutated; "modifying" operations build new spines.
class tree_value {
 public:
  /// Default construction gives nil.
  tree_value() = default;

  static tree_value nil() { return tree_value(); }

  /// Symbol names are non-empty, contain no whitespace or parentheses,
  /// and do not start with a digit.  The reader enforces this; direct
  /// callers are trusted beyond the emptiness check.
  static tree_value symbol(std::string name) {
    assert(!name.empty());
    return tree_value(rep(std::in_place_index<1>, std::move(name)));
  }

  static tree_value integer(std::int64_t value) {
    return tree_value(rep(std::in_place_index<2>, value));
  }

  static tree_value cons(tree_value head, tree_value tail);

  bool is_nil() const { return rep_.index() == 0; }
  bool is_symbol() const { return rep_.index() == 1; }
  bool is_integer() const { return rep_.index() == 2; }
  bool is_cons() const { return rep_.index() == 3; }
  bool is_atom() const { return is_symbol() || is_integer(); }

  const std::string& symbol_name() const {
    assert(is_symbol());
    return std::get<1>(rep_);
  }

  std::int64_t integer_value() const {
    assert(is_integer());
    return std::get<2>(rep_);
  }

  const tree_value& head() const;
  const tree_value& tail() const;

  /// Structural equality; symbols compare byte-wise.
  friend bool operator==(const tree_value& a, const tree_value& b);
  friend bool operator!=(const tree_value& a, const tree_value& b) { return !(a == b); }

 private:
  struct nil_t {};
  using rep = std::variant<nil_t, std::string, std::int64_t, std::shared_ptr<const cons_cell>>;

  explicit tree_value(rep r) : rep_(std::move(r)) {}

  rep rep_;
};

struct cons_cell {
  tree_value head;
  tree_value tail;
};

inline tree_value tree_value::cons(tree_value head, tree_value tail) {
  return tree_value(rep(std::in_place_index<3>,
                        std::make_shared<const cons_cell>(cons_cell{std::move(head), std::move(tail)})));
}

inline const tree_value& tree_value::head() const {
  assert(is_cons());
  return std::get<3>(rep_)->head;
}

inline const tree_value& tree_value::tail() const {
  assert(is_cons());
  return std::get<3>(rep_)->tail;
}

inline bool operator==(const tree_value& a, const tree_value& b) {
  const tree_value* x = &a;
  const tree_value* y = &b;
  // Iterate the tail spine; only heads recurse.
  while (x->is_cons() && y->is_cons()) {
    if (std::get<3>(x->rep_) == std::get<3>(y->rep_)) return true;  // shared cell
    if (!(x->head() == y->head())) return false;
    x = &x->tail();
    y = &y->tail();
  }
  if (x->is_nil()) return y->is_nil();
  if (x->is_symbol()) return y->is_symbol() && x->symbol_name() == y->symbol_name();
  if (x->is_integer()) return y->is_integer() && x->integer_value() == y->integer_value();
  return false;
}

/// Builds a proper list of the given elements.
inline tree_value make_list(std::span<const tree_value> elements) {
  tree_value out = tree_value::nil();
  for (std::size_t i = elements.size(); i > 0; --i) {
    out = tree_value::cons(elements[i - 1], std::move(out));
  }
  return out;
}

inline tree_value make_list(std::initializer_list<tree_value> elements) {
  return make_list(std::span<const tree_value>(elements.begin(), elements.size()));
}

enum class error_kind { atom_encountered, end_of_list, syntax_error };

inline std::string_view kind_name(error_kind k) {
  switch (k) {
    case error_kind::atom_encountered: return "AtomEncountered";
    case error_kind::end_of_list: return "EndOfList";
    case error_kind::syntax_error: return "SyntaxError";
  }
  return "?";
}

/// The error channel.  Failure never travels inside the tree domain,
/// since an end-of-tree marker would itself need to be storable in
/// trees; an operation either yields a value or yields one of these.
struct access_error {
  error_kind kind;
  std::string message;
  std::optional<std::size_t> position;          // byte offset into source text (syntax errors)
  std::optional<int> step;                      // 1-based statement index (run-time errors)
  std::string remaining_program;                // program text not yet consumed at the failure
  std::optional<tree_value> offending_subtree;  // the value the failing step was applied to

  static access_error syntax(std::string message, std::size_t position) {
    access_error e;
    e.kind = error_kind::syntax_error;
    e.message = std::move(message);
    e.position = position;
    return e;
  }

  static access_error at_atom(tree_value offending) {
    access_error e;
    e.kind = error_kind::atom_encountered;
    e.message = "cannot step into an atom";
    e.offending_subtree = std::move(offending);
    return e;
  }

  static access_error at_end(tree_value offending) {
    access_error e;
    e.kind = error_kind::end_of_list;
    e.message = "walked off the end of the tree";
    e.offending_subtree = std::move(offending);
    return e;
  }
};

/// One-line diagnostic, e.g. "EndOfList at step 2, remaining cada".
inline std::string describe(const access_error& e) {
  std::string out(kind_name(e.kind));
  if (e.kind == error_kind::syntax_error) {
    if (e.position) {
      out += " at position ";
      out += std::to_string(*e.position);
    }
    out += ": ";
    out += e.message;
    return out;
  }
  if (e.step) {
    out += " at step ";
    out += std::to_string(*e.step);
  }
  if (!e.remaining_program.empty()) {
    out += ", remaining ";
    out += e.remaining_program;
  }
  if (!e.step && !e.message.empty()) {
    out += ": ";
    out += e.message;
  }
  return out;
}

/// Value-or-error return.  The primary value and the error code are the
/// "multiple return values" of the design: exactly one is present.
template <typename T>
class [[nodiscard]] result {
 public:
  result(T value) : rep_(std::in_place_index<0>, std::move(value)) {}
  result(access_error error) : rep_(std::in_place_index<1>, std::move(error)) {}

  bool ok() const { return rep_.index() == 0; }
  explicit operator bool() const { return ok(); }

  const T& value() const& {
    assert(ok());
    return std::get<0>(rep_);
  }

  T&& value() && {
    assert(ok());
    return std::get<0>(std::move(rep_));
  }

  const access_error& error() const {
    assert(!ok());
    return std::get<1>(rep_);
  }

 private:
  std::variant<T, access_error> rep_;
};

/// Head of a cons cell: the list item.
inline result<tree_value> car(const tree_value& v) {
  if (v.is_cons()) return v.head();
  return v.is_nil() ? access_error::at_end(v) : access_error::at_atom(v);
}

/// Tail of a cons cell: the rest of the list.
inline result<tree_value> cdr(const tree_value& v) {
  if (v.is_cons()) return v.tail();
  return v.is_nil() ? access_error::at_end(v) : access_error::at_atom(v);
}

namespace detail {

inline bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }
inline bool is_digit(char c) { return c >= '0' && c <= '9'; }
inline bool is_delimiter(char c) { return is_space(c) || c == '(' || c == ')' || c == '\''; }

class sexpr_parser {
 public:
  explicit sexpr_parser(std::string_view text) : text_(text) {}

  result<tree_value> parse_all() {
    skip_space();
    if (at_end()) return access_error::syntax("empty input", pos_);
    auto value = parse_expression();
    if (!value) return value;
    skip_space();
    if (!at_end()) return access_error::syntax("trailing input after expression", pos_);
    return value;
  }

 private:
  result<tree_value> parse_expression() {
    skip_space();
    if (at_end()) return access_error::syntax("unexpected end of input", pos_);
    char c = peek();
    if (c == '\'') {
      ++pos_;  // quote marks a literal tree; the tree is already literal here
      return parse_expression();
    }
    if (c == '(') {
      ++pos_;
      return parse_list();
    }
    if (c == ')') return access_error::syntax("unmatched ')'", pos_);
    return parse_atom();
  }

  // Called with the opening '(' consumed.
  result<tree_value> parse_list() {
    std::vector<tree_value> elements;
    tree_value dotted_tail;
    bool have_dotted_tail = false;
    while (true) {
      skip_space();
      if (at_end()) return access_error::syntax("unterminated list", pos_);
      if (peek() == ')') {
        ++pos_;
        break;
      }
      if (dot_ahead()) {
        if (elements.empty()) return access_error::syntax("stray '.'", pos_);
        ++pos_;
        skip_space();
        if (at_end()) return access_error::syntax("unterminated list", pos_);
        if (peek() == ')') return access_error::syntax("expected expression after '.'", pos_);
        auto tail = parse_expression();
        if (!tail) return tail;
        dotted_tail = std::move(tail).value();
        have_dotted_tail = true;
        skip_space();
        if (at_end()) return access_error::syntax("unterminated list", pos_);
        if (peek() != ')') return access_error::syntax("expected ')' after dotted tail", pos_);
        ++pos_;
        break;
      }
      auto element = parse_expression();
      if (!element) return element;
      elements.push_back(std::move(element).value());
    }
    tree_value out = have_dotted_tail ? std::move(dotted_tail) : tree_value::nil();
    for (std::size_t i = elements.size(); i > 0; --i) {
      out = tree_value::cons(std::move(elements[i - 1]), std::move(out));
    }
    return out;
  }

  result<tree_value> parse_atom() {
    std::size_t start = pos_;
    while (!at_end() && !is_delimiter(peek())) ++pos_;
    std::string_view token = text_.substr(start, pos_ - start);
    if (token == ".") return access_error::syntax("stray '.'", start);
    if (integer_shaped(token)) {
      std::int64_t value = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc() || ptr != token.data() + token.size()) {
        return access_error::syntax("integer out of range", start);
      }
      return tree_value::integer(value);
    }
    if (is_digit(token.front())) {
      return access_error::syntax("symbol may not start with a digit", start);
    }
    return tree_value::symbol(std::string(token));
  }

  static bool integer_shaped(std::string_view token) {
    std::string_view digits = token;
    if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
    if (digits.empty()) return false;
    for (char c : digits) {
      if (!is_digit(c)) return false;
    }
    return true;
  }

  bool dot_ahead() const {
    return peek() == '.' && (pos_ + 1 == text_.size() || is_delimiter(text_[pos_ + 1]));
  }

  void skip_space() {
    while (!at_end() && is_space(peek())) ++pos_;
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  std::string_view text_;
  std::size_t pos_ = 0;
};

inline void print_to(std::string& out, const tree_value& v) {
  if (v.is_nil()) {
    out += "()";
    return;
  }
  if (v.is_symbol()) {
    out += v.symbol_name();
    return;
  }
  if (v.is_integer()) {
    out += std::to_string(v.integer_value());
    return;
  }
  out += '(';
  print_to(out, v.head());
  const tree_value* rest = &v.tail();
  while (rest->is_cons()) {
    out += ' ';
    print_to(out, rest->head());
    rest = &rest->tail();
  }
  if (!rest->is_nil()) {
    out += " . ";
    print_to(out, *rest);
  }
  out += ')';
}

}  // namespace detail

/// Reads one complete S-expression.  Integers, symbols, proper lists,
/// dotted pairs; a quote prefix marks a literal tree and is discarded.
/// Syntax errors carry a 0-based byte position.
inline result<tree_value> parse_sexpr(std::string_view text) {
  return detail::sexpr_parser(text).parse_all();
}

/// Canonical text: single spaces, proper lists without dots, dotted
/// pairs as (a . b), nil as ().  parse_sexpr(print_sexpr(v)) == v.
inline std::string print_sexpr(const tree_value& v) {
  std::string out;
  detail::print_to(out, v);
  return out;
}

}  // namespace cadr
