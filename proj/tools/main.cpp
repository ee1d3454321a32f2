// cadr: command-line front end for the access-path library.
//
// Results go to stdout, diagnostics to stderr.  Exit status: 0 ok,
// 1 access error, 2 syntax error, 3 usage error.

#include <iostream>
#include <iterator>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cadr/cadr.hpp"

namespace {

constexpr std::string_view usage_text =
    "usage: cadr <command> [arguments]\n"
    "\n"
    "commands:\n"
    "  eval [--notation <kind>] [--trace] [<kind>] <program> <tree>\n"
    "        run an access program on a tree (default notation: classic);\n"
    "        --trace first prints the step table, one tab-separated row per step\n"
    "  translate [--from <kind>] [--to <kind>] [<kind> <kind>] <program>\n"
    "        rewrite an access program in another notation\n"
    "  loc <read|write|suffix|prefix> <locator> <tree> [<value>]\n"
    "        operate at the cell a *Nn locator names; write takes <value>\n"
    "\n"
    "notations: classic (cadadr)   ltr (rdadac)   star (*dada, *5da)\n"
    "a <tree> argument of - reads one S-expression from standard input\n"
    "exit status: 0 ok, 1 access error, 2 syntax error, 3 usage error\n";

int usage_error(const std::string& message) {
  std::cerr << "cadr: " << message << '\n' << usage_text;
  return 3;
}

int report(const cadr::access_error& error) {
  std::cerr << "cadr: " << cadr::describe(error) << '\n';
  return error.kind == cadr::error_kind::syntax_error ? 2 : 1;
}

struct options {
  bool trace = false;
  std::optional<std::string> notation;
  std::optional<std::string> from;
  std::optional<std::string> to;
  std::vector<std::string> positionals;
};

// Returns a usage message on failure.  Only tokens starting with "--"
// are flags; a bare "-" is the stdin marker and stays positional.
std::optional<std::string> scan_args(const std::vector<std::string>& args, options& opts) {
  for (std::size_t i = 0; i < args.size(); ++i) {
    std::string_view arg = args[i];
    if (arg.size() < 2 || arg.substr(0, 2) != "--") {
      opts.positionals.emplace_back(arg);
      continue;
    }
    std::string_view name = arg.substr(2);
    std::optional<std::string> inline_value;
    if (auto eq = name.find('='); eq != std::string_view::npos) {
      inline_value = std::string(name.substr(eq + 1));
      name = name.substr(0, eq);
    }
    if (name == "trace") {
      if (inline_value) return "--trace takes no value";
      opts.trace = true;
      continue;
    }
    std::optional<std::string>* slot = nullptr;
    if (name == "notation") slot = &opts.notation;
    else if (name == "from") slot = &opts.from;
    else if (name == "to") slot = &opts.to;
    if (slot == nullptr) return "unknown option --" + std::string(name);
    if (slot->has_value()) return "duplicate option --" + std::string(name);
    if (inline_value) {
      *slot = std::move(*inline_value);
    } else {
      if (i + 1 >= args.size()) return "missing value for --" + std::string(name);
      *slot = args[++i];
    }
  }
  return std::nullopt;
}

cadr::result<cadr::tree_value> read_tree(const std::string& text) {
  if (text == "-") {
    std::string data(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    return cadr::parse_sexpr(data);
  }
  return cadr::parse_sexpr(text);
}

void print_trace_row(const cadr::trace_step& row) {
  std::cout << row.step << '\t' << row.remaining_program << '\t'
            << cadr::print_sexpr(row.current_tree) << '\t'
            << cadr::trace_action_name(row.action);
  if (row.action != cadr::trace_action::complete) {
    std::cout << " → " << cadr::print_sexpr(row.result);
  }
  std::cout << '\n';
}

int cmd_eval(const options& opts) {
  if (opts.from || opts.to) return usage_error("eval does not take --from/--to");
  cadr::notation_kind kind = cadr::notation_kind::classic;
  std::string program_text;
  std::string tree_text;
  if (opts.positionals.size() == 3) {
    if (opts.notation) return usage_error("notation given both as flag and positionally");
    auto named = cadr::notation_from_name(opts.positionals[0]);
    if (!named) return usage_error("unknown notation '" + opts.positionals[0] + "'");
    kind = *named;
    program_text = opts.positionals[1];
    tree_text = opts.positionals[2];
  } else if (opts.positionals.size() == 2) {
    if (opts.notation) {
      auto named = cadr::notation_from_name(*opts.notation);
      if (!named) return usage_error("unknown notation '" + *opts.notation + "'");
      kind = *named;
    }
    program_text = opts.positionals[0];
    tree_text = opts.positionals[1];
  } else {
    return usage_error("eval needs <program> and <tree>");
  }

  auto prog = cadr::parse_program(kind, program_text);
  if (!prog) return report(prog.error());
  auto tree = read_tree(tree_text);
  if (!tree) return report(tree.error());

  if (opts.trace) {
    auto table = cadr::trace(prog.value(), tree.value());
    for (const auto& row : table.steps) print_trace_row(row);
    if (!table.ok()) return report(*table.failure);
    std::cout << cadr::print_sexpr(table.steps.back().result) << '\n';
    return 0;
  }
  auto out = cadr::run(prog.value(), tree.value());
  if (!out) return report(out.error());
  std::cout << cadr::print_sexpr(out.value()) << '\n';
  return 0;
}

int cmd_translate(const options& opts) {
  if (opts.trace || opts.notation) return usage_error("translate takes --from/--to only");
  std::string from_name;
  std::string to_name;
  std::string program_text;
  if (opts.positionals.size() == 3) {
    if (opts.from || opts.to) return usage_error("notations given both as flags and positionally");
    from_name = opts.positionals[0];
    to_name = opts.positionals[1];
    program_text = opts.positionals[2];
  } else if (opts.positionals.size() == 1) {
    if (!opts.from || !opts.to) return usage_error("translate needs --from and --to");
    from_name = *opts.from;
    to_name = *opts.to;
    program_text = opts.positionals[0];
  } else {
    return usage_error("translate needs <program>");
  }
  auto from = cadr::notation_from_name(from_name);
  if (!from) return usage_error("unknown notation '" + from_name + "'");
  auto to = cadr::notation_from_name(to_name);
  if (!to) return usage_error("unknown notation '" + to_name + "'");

  auto prog = cadr::parse_program(*from, program_text);
  if (!prog) return report(prog.error());
  std::cout << cadr::translate(prog.value(), *to) << '\n';
  return 0;
}

int cmd_loc(const options& opts) {
  if (opts.trace || opts.notation || opts.from || opts.to) {
    return usage_error("loc takes no options");
  }
  if (opts.positionals.size() < 3 || opts.positionals.size() > 4) {
    return usage_error("loc needs <op> <locator> <tree> and, for write, <value>");
  }
  const std::string& op = opts.positionals[0];
  if (op != "read" && op != "write" && op != "suffix" && op != "prefix") {
    return usage_error("unknown loc operation '" + op + "'");
  }
  bool has_value = opts.positionals.size() == 4;
  if (op == "write" && !has_value) return usage_error("write needs a <value>");
  if (op != "write" && has_value) return usage_error(op + " takes no <value>");

  auto loc = cadr::parse_locator(opts.positionals[1]);
  if (!loc) return report(loc.error());
  auto tree = read_tree(opts.positionals[2]);
  if (!tree) return report(tree.error());

  cadr::result<cadr::tree_value> out = [&]() -> cadr::result<cadr::tree_value> {
    if (op == "read") return cadr::loc_read(loc.value(), tree.value());
    if (op == "suffix") return cadr::loc_suffix(loc.value(), tree.value());
    if (op == "prefix") return cadr::loc_prefix(loc.value(), tree.value());
    auto value = cadr::parse_sexpr(opts.positionals[3]);
    if (!value) return value.error();
    return cadr::loc_write(loc.value(), tree.value(), std::move(value).value());
  }();
  if (!out) return report(out.error());
  std::cout << cadr::print_sexpr(out.value()) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  for (const std::string& arg : args) {
    if (arg == "--help" || arg == "-h" || arg == "help") {
      std::cout << usage_text;
      return 0;
    }
  }
  if (args.empty()) return usage_error("missing command");

  std::string command = args[0];
  options opts;
  if (auto problem = scan_args({args.begin() + 1, args.end()}, opts)) {
    return usage_error(*problem);
  }
  if (command == "eval") return cmd_eval(opts);
  if (command == "translate") return cmd_translate(opts);
  if (command == "loc") return cmd_loc(opts);
  return usage_error("unknown command '" + command + "'");
}
