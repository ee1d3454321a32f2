#pragma once

// Shared test helpers: a deterministic tree generator, the raw car/cdr
// walk oracle, and small proper-list utilities.  The oracle side must
// stay independent of the program machinery it is used to check.

#include <cassert>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "cadr/cadr.hpp"

namespace testsupport {

using cadr::tree_value;

// Fixed atom alphabet.  EOT is deliberately absent: the interpreter must
// never invent that symbol, so no generated input supplies it either.
inline const std::vector<std::string>& symbol_alphabet() {
  static const std::vector<std::string> names = {"a", "b", "c", "x", "y", "zot", "fig", "plum"};
  return names;
}

class tree_gen {
 public:
  explicit tree_gen(std::uint32_t seed) : rng_(seed) {}

  int int_between(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  std::size_t index(std::size_t bound) {
    return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng_);
  }

  bool flip() { return int_between(0, 1) == 1; }
  bool one_in(int n) { return int_between(1, n) == 1; }

  tree_value atom() {
    if (flip()) return tree_value::symbol(symbol_alphabet()[index(symbol_alphabet().size())]);
    return tree_value::integer(int_between(-9, 99));
  }

  // Arbitrary tree: atoms, nil, proper lists, raw (often dotted) pairs.
  tree_value tree(int max_depth) {
    if (max_depth <= 0) return one_in(4) ? tree_value::nil() : atom();
    switch (int_between(0, 9)) {
      case 0:
      case 1:
        return atom();
      case 2:
        return tree_value::nil();
      case 3:
      case 4:
        return tree_value::cons(tree(max_depth - 1), tree(max_depth - 1));
      default: {
        std::vector<tree_value> elems;
        int len = int_between(1, 4);
        for (int i = 0; i < len; ++i) elems.push_back(tree(max_depth - 1));
        return cadr::make_list(elems);
      }
    }
  }

  tree_value proper_list(std::size_t len, int elem_depth = 1) {
    std::vector<tree_value> elems;
    elems.reserve(len);
    for (std::size_t i = 0; i < len; ++i) {
      elems.push_back(elem_depth > 0 && one_in(4) ? tree(elem_depth) : atom());
    }
    return cadr::make_list(elems);
  }

 private:
  std::mt19937 rng_;
};

// What a raw walk produced: either a value or (error kind, failing step).
struct walk_outcome {
  bool ok = false;
  tree_value value;
  cadr::error_kind kind = cadr::error_kind::end_of_list;
  int step = 0;
};

// Oracle for classic accessor symbols: applies the inner letters right
// to left with direct head/tail moves, counting steps.  No programs, no
// renderers, no car/cdr error plumbing.
inline walk_outcome classic_walk(std::string_view symbol, tree_value t) {
  std::string_view inner = symbol.substr(1, symbol.size() - 2);
  int step = 0;
  for (std::size_t i = inner.size(); i > 0; --i) {
    ++step;
    if (!t.is_cons()) {
      walk_outcome out;
      out.ok = false;
      out.kind = t.is_nil() ? cadr::error_kind::end_of_list : cadr::error_kind::atom_encountered;
      out.step = step;
      return out;
    }
    tree_value next = inner[i - 1] == 'a' ? t.head() : t.tail();
    t = std::move(next);
  }
  walk_outcome out;
  out.ok = true;
  out.value = std::move(t);
  return out;
}

// All classic accessor symbols with exactly body_len inner letters.
inline std::vector<std::string> classic_symbols(int body_len) {
  std::vector<std::string> out;
  for (unsigned mask = 0; mask < (1u << body_len); ++mask) {
    std::string inner;
    for (int bit = 0; bit < body_len; ++bit) {
      inner += (mask >> bit) & 1u ? 'a' : 'd';
    }
    out.push_back("c" + inner + "r");
  }
  return out;
}

inline std::vector<std::string> classic_symbols_up_to(int max_body_len) {
  std::vector<std::string> out;
  for (int len = 1; len <= max_body_len; ++len) {
    auto batch = classic_symbols(len);
    out.insert(out.end(), batch.begin(), batch.end());
  }
  return out;
}

// All statement bodies of exactly the given length, as execution-order
// letter strings over {a, d}.
inline std::vector<std::string> bodies_of_length(int len) {
  std::vector<std::string> out;
  for (unsigned mask = 0; mask < (1u << len); ++mask) {
    std::string body;
    for (int bit = 0; bit < len; ++bit) {
      body += (mask >> bit) & 1u ? 'a' : 'd';
    }
    out.push_back(body);
  }
  return out;
}

inline std::vector<tree_value> list_elements(tree_value t) {
  std::vector<tree_value> out;
  while (t.is_cons()) {
    out.push_back(t.head());
    t = t.tail();
  }
  assert(t.is_nil());
  return out;
}

inline std::size_t list_length(const tree_value& t) { return list_elements(t).size(); }

// Fold-right append over proper lists; the reconstruction-law oracle.
inline tree_value append_lists(const tree_value& front, tree_value back) {
  std::vector<tree_value> elems = list_elements(front);
  for (std::size_t i = elems.size(); i > 0; --i) {
    back = tree_value::cons(elems[i - 1], std::move(back));
  }
  return back;
}

}  // namespace testsupport
