// Walks one access program through a tree the way the README describes:
// prints the step table, the same program in all three notations, and a
// few locator operations.

#include <iostream>

#include "cadr/cadr.hpp"

int main() {
  using namespace cadr;

  const tree_value tree = parse_sexpr("(0 (1 2 3) 4 5)").value();
  const program prog = compile_classic("cadadr").value();

  std::cout << "run " << prog.source_text << " on " << print_sexpr(tree) << "\n\n";
  trace_result table = trace(prog, tree);
  for (const trace_step& row : table.steps) {
    std::cout << row.step << ".\t" << row.remaining_program << '\t'
              << print_sexpr(row.current_tree) << '\t' << trace_action_name(row.action);
    if (row.action != trace_action::complete) {
      std::cout << " -> " << print_sexpr(row.result);
    }
    std::cout << '\n';
  }

  std::cout << "\nthe same program, three ways:\n";
  for (notation_kind kind : {notation_kind::classic, notation_kind::ltr, notation_kind::star}) {
    std::cout << "  " << notation_name(kind) << ":\t" << translate(prog, kind) << '\n';
  }

  const tree_value fruit = parse_sexpr("(fig plum pear lime)").value();
  const locator second = parse_locator("*n").value();
  std::cout << "\nlocator *n on " << print_sexpr(fruit) << ":\n";
  std::cout << "  read:   " << print_sexpr(loc_read(second, fruit).value()) << '\n';
  std::cout << "  suffix: " << print_sexpr(loc_suffix(second, fruit).value()) << '\n';
  std::cout << "  prefix: " << print_sexpr(loc_prefix(second, fruit).value()) << '\n';
  std::cout << "  write:  "
            << print_sexpr(loc_write(second, fruit, tree_value::symbol("kiwi")).value()) << '\n';
  return 0;
}
