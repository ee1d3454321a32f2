#pragma once

// Classic c[ad]+r accessor symbols: recognition, compilation to a
// program, and the interpreter with its step-table trace.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cadr/program.hpp"
#include "cadr/tree.hpp"

namespace cadr {

/// True iff name is exactly `c [ad]+ r`: starts with c, ends in r, one
/// or more a/d letters between.  "cr" has an empty body and is rejected.
inline bool is_access_symbol(std::string_view name) {
  if (name.size() < 3 || name.front() != 'c' || name.back() != 'r') return false;
  for (char c : name.substr(1, name.size() - 2)) {
    if (c != 'a' && c != 'd') return false;
  }
  return true;
}

/// Compiles a classic accessor symbol.  The inner letters are read right
/// to left, so they land in execution order: cadadr -> drop, access,
/// drop, access.
inline result<program> compile_classic(std::string_view name) {
  if (name.empty()) return access_error::syntax("empty program", 0);
  if (name.front() != 'c') return access_error::syntax("classic program must start with 'c'", 0);
  if (name.size() < 2 || name.back() != 'r') {
    return access_error::syntax("classic program must end with 'r'", name.size() - 1);
  }
  if (name.size() < 3) {
    return access_error::syntax("program body needs at least one 'a' or 'd'", 1);
  }
  std::string_view inner = name.substr(1, name.size() - 2);
  for (std::size_t i = 0; i < inner.size(); ++i) {
    if (inner[i] != 'a' && inner[i] != 'd') {
      return access_error::syntax("expected 'a' or 'd'", i + 1);
    }
  }
  program p;
  p.notation = notation_kind::classic;
  p.source_text = std::string(name);
  p.body.reserve(inner.size());
  for (std::size_t i = inner.size(); i > 0; --i) {
    p.body.push_back(inner[i - 1] == 'a' ? statement::access : statement::drop);
  }
  return p;
}

/// Folds the body over the tree: drop applies cdr, access applies car.
/// A failing step's error is annotated with its 1-based index and the
/// not-yet-consumed program text.
inline result<tree_value> run(const program& prog, const tree_value& tree) {
  tree_value current = tree;
  std::span<const statement> body(prog.body);
  for (std::size_t i = 0; i < body.size(); ++i) {
    auto next = body[i] == statement::drop ? cdr(current) : car(current);
    if (!next) {
      access_error err = next.error();
      err.step = static_cast<int>(i) + 1;
      err.remaining_program = render_remaining(prog.notation, body.subspan(i));
      return err;
    }
    current = std::move(next).value();
  }
  return current;
}

enum class trace_action { drop, access, complete };

inline std::string_view trace_action_name(trace_action a) {
  switch (a) {
    case trace_action::drop: return "drop";
    case trace_action::access: return "access";
    case trace_action::complete: return "complete";
  }
  return "?";
}

/// One row of the execution table.
struct trace_step {
  int step;                       // 1-based, consecutive
  std::string remaining_program;  // includes the statement this row executes
  tree_value current_tree;
  trace_action action;
  tree_value result;  // equals current_tree on the complete row
};

/// A run's full step table.  On failure, steps holds the rows that
/// completed and failure carries the annotated error.
struct trace_result {
  std::vector<trace_step> steps;
  std::optional<access_error> failure;

  bool ok() const { return !failure.has_value(); }
};

/// Runs the program recording one row per statement plus a final
/// complete row whose remaining program is the bare capstone.
inline trace_result trace(const program& prog, const tree_value& tree) {
  trace_result out;
  tree_value current = tree;
  std::span<const statement> body(prog.body);
  for (std::size_t i = 0; i < body.size(); ++i) {
    std::string remaining = render_remaining(prog.notation, body.subspan(i));
    auto next = body[i] == statement::drop ? cdr(current) : car(current);
    if (!next) {
      access_error err = next.error();
      err.step = static_cast<int>(i) + 1;
      err.remaining_program = std::move(remaining);
      out.failure = std::move(err);
      return out;
    }
    trace_step row;
    row.step = static_cast<int>(i) + 1;
    row.remaining_program = std::move(remaining);
    row.current_tree = current;
    row.action = body[i] == statement::drop ? trace_action::drop : trace_action::access;
    row.result = next.value();
    out.steps.push_back(std::move(row));
    current = std::move(next).value();
  }
  trace_step last;
  last.step = static_cast<int>(body.size()) + 1;
  last.remaining_program = render_remaining(prog.notation, {});
  last.current_tree = current;
  last.action = trace_action::complete;
  last.result = std::move(current);
  out.steps.push_back(std::move(last));
  return out;
}

}  // namespace cadr
