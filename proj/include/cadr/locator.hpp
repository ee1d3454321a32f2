#pragma once

// Locators separate finding a cell from operating on it: *Nn walks N
// "next" steps along a proper-list spine, then read/write/suffix/prefix
// apply at the located cell.

#include <charconv>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cadr/tree.hpp"

namespace cadr {

/// A step count along the list spine: steps = k locates element k+1, so
/// *5n locates the 6th element.
struct locator {
  std::size_t steps = 0;
};

/// The cell a locator found: target is the cons whose head is the
/// located element, prefix_elements the elements walked past to get
/// there (exactly steps of them).
struct located_cell {
  tree_value target;
  std::vector<tree_value> prefix_elements;
};

/// Canonical locator text: *n, *0n, *5n.
inline std::string render_locator(locator loc) {
  if (loc.steps == 1) return "*n";
  return "*" + std::to_string(loc.steps) + "n";
}

/// Parses `* count? n`.  A missing count means one step; *0n is legal
/// and locates the list head.
inline result<locator> parse_locator(std::string_view text) {
  if (text.empty()) return access_error::syntax("empty locator", 0);
  if (text.front() != '*') return access_error::syntax("locator must start with '*'", 0);
  std::size_t pos = 1;
  std::size_t steps = 1;
  if (pos < text.size() && detail::is_digit(text[pos])) {
    std::size_t digits_start = pos;
    while (pos < text.size() && detail::is_digit(text[pos])) ++pos;
    auto digits = text.substr(digits_start, pos - digits_start);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), steps);
    if (ec != std::errc()) return access_error::syntax("step count out of range", digits_start);
  }
  if (pos >= text.size() || text[pos] != 'n') {
    return access_error::syntax("locator must end with 'n'", pos);
  }
  ++pos;
  if (pos != text.size()) return access_error::syntax("trailing input after locator", pos);
  return locator{steps};
}

namespace detail {

inline access_error locate_error(const tree_value& blocking, std::size_t failed_step,
                                 std::size_t remaining_moves) {
  access_error err = blocking.is_nil() ? access_error::at_end(blocking)
                                       : access_error::at_atom(blocking);
  err.step = static_cast<int>(failed_step);
  err.remaining_program = render_locator(locator{remaining_moves});
  return err;
}

}  // namespace detail

/// Walks loc.steps next-moves from the list head.  Each move is one
/// numbered step; arriving somewhere that is not a cons fails at step
/// steps+1, exactly where the access program *kda would fail.
inline result<located_cell> locate(locator loc, const tree_value& list) {
  tree_value current = list;
  std::vector<tree_value> prefix;
  prefix.reserve(loc.steps);
  for (std::size_t i = 0; i < loc.steps; ++i) {
    if (!current.is_cons()) return detail::locate_error(current, i + 1, loc.steps - i);
    prefix.push_back(current.head());
    current = current.tail();
  }
  if (!current.is_cons()) return detail::locate_error(current, loc.steps + 1, 0);
  return located_cell{std::move(current), std::move(prefix)};
}

/// Returns the located element.
inline result<tree_value> loc_read(locator loc, const tree_value& list) {
  auto cell = locate(loc, list);
  if (!cell) return cell.error();
  return cell.value().target.head();
}

/// Returns the same list with the located element replaced.  The input
/// is untouched: the prefix cells are rebuilt, the rest is shared.
inline result<tree_value> loc_write(locator loc, const tree_value& list, tree_value value) {
  auto cell = locate(loc, list);
  if (!cell) return cell.error();
  located_cell located = std::move(cell).value();
  tree_value out = tree_value::cons(std::move(value), located.target.tail());
  for (std::size_t i = located.prefix_elements.size(); i > 0; --i) {
    out = tree_value::cons(std::move(located.prefix_elements[i - 1]), std::move(out));
  }
  return out;
}

/// Returns the sublist from the located element to the end: the target
/// cons itself.
inline result<tree_value> loc_suffix(locator loc, const tree_value& list) {
  auto cell = locate(loc, list);
  if (!cell) return cell.error();
  return std::move(cell).value().target;
}

/// Returns a fresh proper list of the elements strictly before the
/// located element (loc.steps of them).
inline result<tree_value> loc_prefix(locator loc, const tree_value& list) {
  auto cell = locate(loc, list);
  if (!cell) return cell.error();
  return make_list(std::move(cell).value().prefix_elements);
}

}  // namespace cadr
