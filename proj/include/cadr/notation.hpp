#pragma once

// The improved notations: left-to-right classic (r...c), star programs
// with integer repeat counts (*5da), and translation between all three.

#include <charconv>
#include <string>
#include <string_view>

#include "cadr/classic.hpp"
#include "cadr/program.hpp"
#include "cadr/tree.hpp"

namespace cadr {

/// Parses the left-to-right classic form `r [ad]+ c`.  Letters are read
/// in scan order: rdadac has the same body as cadadr.
inline result<program> parse_ltr(std::string_view text) {
  if (text.empty()) return access_error::syntax("empty program", 0);
  if (text.front() != 'r') return access_error::syntax("ltr program must start with 'r'", 0);
  if (text.size() < 2 || text.back() != 'c') {
    return access_error::syntax("ltr program must end with 'c'", text.size() - 1);
  }
  if (text.size() < 3) {
    return access_error::syntax("program body needs at least one 'a' or 'd'", 1);
  }
  std::string_view inner = text.substr(1, text.size() - 2);
  program p;
  p.notation = notation_kind::ltr;
  p.source_text = std::string(text);
  p.body.reserve(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) {
    if (inner[i] != 'a' && inner[i] != 'd') {
      return access_error::syntax("expected 'a' or 'd'", i + 1);
    }
    p.body.push_back(inner[i] == 'a' ? statement::access : statement::drop);
  }
  return p;
}

/// Parses star notation `* (count? [ad])+`, left to right.  A decimal
/// count repeats the single following letter: *5da is five drops then an
/// access.  Trailing whitespace is accepted and ignored.
inline result<program> parse_star(std::string_view text) {
  std::size_t end = text.size();
  while (end > 0 && detail::is_space(text[end - 1])) --end;
  std::string_view body_text = text.substr(0, end);
  if (body_text.empty()) return access_error::syntax("empty program", 0);
  if (body_text.front() != '*') return access_error::syntax("star program must start with '*'", 0);

  program p;
  p.notation = notation_kind::star;
  p.source_text = std::string(text);
  std::size_t pos = 1;
  while (pos < body_text.size()) {
    std::size_t count = 1;
    if (detail::is_digit(body_text[pos])) {
      std::size_t digits_start = pos;
      while (pos < body_text.size() && detail::is_digit(body_text[pos])) ++pos;
      auto digits = body_text.substr(digits_start, pos - digits_start);
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), count);
      if (ec != std::errc()) return access_error::syntax("repeat count out of range", digits_start);
      if (count == 0) return access_error::syntax("repeat count must be at least 1", digits_start);
      if (pos >= body_text.size()) {
        return access_error::syntax("repeat count needs a following 'a' or 'd'", pos);
      }
    }
    char c = body_text[pos];
    if (c != 'a' && c != 'd') return access_error::syntax("expected 'a' or 'd'", pos);
    ++pos;
    p.body.insert(p.body.end(), count, c == 'a' ? statement::access : statement::drop);
  }
  if (p.body.empty()) return access_error::syntax("program body needs at least one 'a' or 'd'", 1);
  return p;
}

/// Parses text under the named notation.
inline result<program> parse_program(notation_kind k, std::string_view text) {
  switch (k) {
    case notation_kind::classic: return compile_classic(text);
    case notation_kind::ltr: return parse_ltr(text);
    case notation_kind::star: return parse_star(text);
  }
  return access_error::syntax("unknown notation", 0);
}

/// Renders the body in the target notation; parsing the output under
/// that notation yields an identical body.  Star output is maximally
/// run-length compressed.
inline std::string translate(const program& p, notation_kind target) {
  return render_program(target, p.body);
}

/// Expands counts and re-compresses maximally: *ddddda and *2d3da both
/// become *5da.  Idempotent.
inline result<std::string> normalize_star(std::string_view text) {
  auto p = parse_star(text);
  if (!p) return p.error();
  return render_program(notation_kind::star, p.value().body);
}

}  // namespace cadr
