#pragma once

// The executable form of an access program (Access/Drop statements in
// execution order) plus the per-notation text renderers shared by the
// translator and the tracer.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cadr {

/// The two executable statements.  The capstones (classic c/r, the star
/// operator) are syntax delimiters and are never stored in a body.
enum class statement { access, drop };

inline char statement_letter(statement s) { return s == statement::access ? 'a' : 'd'; }

enum class notation_kind { classic, ltr, star };

inline std::string_view notation_name(notation_kind k) {
  switch (k) {
    case notation_kind::classic: return "classic";
    case notation_kind::ltr: return "ltr";
    case notation_kind::star: return "star";
  }
  return "?";
}

inline std::optional<notation_kind> notation_from_name(std::string_view name) {
  if (name == "classic") return notation_kind::classic;
  if (name == "ltr") return notation_kind::ltr;
  if (name == "star") return notation_kind::star;
  return std::nullopt;
}

/// A compiled access program.  body[0] runs first whichever notation the
/// source was written in; the notation tag and original text are kept so
/// traces and re-renderings match the source.
struct program {
  std::vector<statement> body;  // non-empty
  notation_kind notation;
  std::string source_text;
};

/// One maximal run of identical statements.  A count of one renders
/// with no digit.
struct star_token {
  std::size_t count;
  statement stmt;
};

inline std::vector<star_token> run_length_tokens(std::span<const statement> body) {
  std::vector<star_token> tokens;
  for (statement s : body) {
    if (!tokens.empty() && tokens.back().stmt == s) {
      ++tokens.back().count;
    } else {
      tokens.push_back({1, s});
    }
  }
  return tokens;
}

namespace detail {

inline std::string star_body_text(std::span<const statement> body) {
  std::string out;
  for (const star_token& t : run_length_tokens(body)) {
    if (t.count > 1) out += std::to_string(t.count);
    out += statement_letter(t.stmt);
  }
  return out;
}

// Classic text is written right to left: the first statement to run is
// the letter next to the trailing 'r'.
inline std::string reversed_letters(std::span<const statement> body) {
  std::string out;
  for (std::size_t i = body.size(); i > 0; --i) {
    out += statement_letter(body[i - 1]);
  }
  return out;
}

inline std::string forward_letters(std::span<const statement> body) {
  std::string out;
  for (statement s : body) out += statement_letter(s);
  return out;
}

}  // namespace detail

/// Canonical full text of a body in the given notation.  Star output is
/// maximally run-length compressed.
inline std::string render_program(notation_kind k, std::span<const statement> body) {
  switch (k) {
    case notation_kind::classic: return "c" + detail::reversed_letters(body) + "r";
    case notation_kind::ltr: return "r" + detail::forward_letters(body) + "c";
    case notation_kind::star: return "*" + detail::star_body_text(body);
  }
  return {};
}

/// Trace-table form of what is left to run: the run capstone is gone and
/// consumed statements are removed, so classic cadadr shows as "cadad",
/// then "cada", ..., then bare "c" on the complete row.  ltr mirrors
/// this ("dadac", ..., "c"); star shows "*" plus the compressed rest.
inline std::string render_remaining(notation_kind k, std::span<const statement> unconsumed) {
  switch (k) {
    case notation_kind::classic: return "c" + detail::reversed_letters(unconsumed);
    case notation_kind::ltr: return detail::forward_letters(unconsumed) + "c";
    case notation_kind::star: return "*" + detail::star_body_text(unconsumed);
  }
  return {};
}

}  // namespace cadr
