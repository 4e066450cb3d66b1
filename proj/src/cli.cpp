#include "alttree/cli.hpp"

#include <CLI11.hpp>
#include <iostream>
#include <iterator>
#include <optional>

#include "alttree/bijection.hpp"
#include "alttree/perm.hpp"
#include "alttree/poly.hpp"
#include "alttree/tree.hpp"
#include "alttree/verify.hpp"

namespace alttree::cli {

namespace {

std::string input_text(const std::vector<std::string>& tokens, std::istream& in) {
  if (!tokens.empty()) {
    std::string joined;
    for (const auto& t : tokens) {
      if (!joined.empty()) joined += ' ';
      joined += t;
    }
    return joined;
  }
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void print_trace(std::ostream& out, const CaseTrace& trace) {
  for (const TraceStep& s : trace) {
    out << '(' << to_string(s.tag) << ", " << s.n << ", " << s.k << ")\n";
  }
}

// Maps library exceptions on user input to exit codes.
int report_input_error(std::ostream& err, const std::exception& e, int code) {
  err << "error: " << e.what() << '\n';
  return code;
}

struct MapArgs {
  std::vector<std::string> tokens;
  bool trace = false;
  bool dot = false;
};

int cmd_map(const MapArgs& a, std::istream& in, std::ostream& out, std::ostream& err) {
  try {
    const Permutation p = parse_permutation(input_text(a.tokens, in));
    const TreeResult r = phi(AlternatingPermutation(p));
    out << serialize_tree(r.tree) << '\n';
    if (a.trace) print_trace(out, r.trace);
    if (a.dot) out << to_dot(r.tree);
    return kOk;
  } catch (const InvalidPermutation& e) {
    return report_input_error(err, e, kUsage);
  } catch (const NotAlternating& e) {
    return report_input_error(err, e, kInvalidObject);
  }
}

int cmd_unmap(const MapArgs& a, std::istream& in, std::ostream& out, std::ostream& err) {
  try {
    const IncreasingTree t = parse_tree(input_text(a.tokens, in));
    const PermResult r = phi_inverse(t);
    out << format_permutation(r.perm.perm()) << '\n';
    if (a.trace) print_trace(out, r.trace);
    return kOk;
  } catch (const TreeError& e) {
    return report_input_error(err, e, e.code() == TreeErrc::malformed ? kUsage : kInvalidObject);
  }
}

int cmd_dot(const MapArgs& a, bool from_perm, std::istream& in, std::ostream& out,
            std::ostream& err) {
  if (from_perm) {
    try {
      const Permutation p = parse_permutation(input_text(a.tokens, in));
      out << to_dot(phi_tree(AlternatingPermutation(p)));
      return kOk;
    } catch (const InvalidPermutation& e) {
      return report_input_error(err, e, kUsage);
    } catch (const NotAlternating& e) {
      return report_input_error(err, e, kInvalidObject);
    }
  }
  try {
    out << to_dot(parse_tree(input_text(a.tokens, in)));
    return kOk;
  } catch (const TreeError& e) {
    return report_input_error(err, e, e.code() == TreeErrc::malformed ? kUsage : kInvalidObject);
  }
}

struct EnumArgs {
  std::string kind;
  int n = 0;
  int k = 0;
  bool count_only = false;
  bool stats = false;
};

int cmd_enum(const EnumArgs& a, std::ostream& out, std::ostream& err) {
  if (a.n < 1 || (a.k != 0 && (a.k < 1 || a.k > a.n))) {
    err << "error: need n >= 1 and 1 <= k <= n\n";
    return kUsage;
  }
  std::size_t count = 0;
  if (a.kind == "perms") {
    auto visit = [&](std::span<const int> w) {
      ++count;
      if (a.count_only) return;
      out << format_word(w);
      if (a.stats) out << '\t' << inversions(w) << '\t' << occurrences_31_2(w);
      out << '\n';
    };
    if (a.k == 0) {
      for_each_alternating(a.n, visit);
    } else {
      for_each_alternating_with_first(a.n, a.k, visit);
    }
  } else {
    for_each_tree(a.n, [&](std::span<const int> parents) {
      const int leaf = chain_leaf_of_parents(parents);
      if (a.k != 0 && leaf != a.k) return;
      ++count;
      if (a.count_only) return;
      out << format_word(parents);
      if (a.stats) out << '\t' << leaf;
      out << '\n';
    });
  }
  if (a.count_only) out << count << '\n';
  return kOk;
}

struct TableArgs {
  std::string kind;
  int n_max = 0;
  bool machine = false;
  bool pretty = false;
};

int cmd_table(const TableArgs& a, std::ostream& out, std::ostream& err) {
  if (a.n_max < 1) {
    err << "error: n_max must be at least 1\n";
    return kUsage;
  }
  if (a.kind == "counts") {
    const CountTable table = counts_by_recurrence(a.n_max);
    out << (a.machine ? format_count_lines(table, a.n_max) : format_triangle(table, a.n_max));
    return kOk;
  }
  if (a.n_max > kEnumerationCap) {
    err << "error: polynomial tables are built by enumeration and capped at n = "
        << kEnumerationCap << '\n';
    return kUsage;
  }
  const PolyTable table = a_poly_table(a.n_max);
  if (a.pretty) {
    for (const auto& [cell, poly] : table) {
      out << "a(" << cell.first << "," << cell.second << ") = " << poly.to_string() << '\n';
    }
  } else {
    out << format_poly_lines(table, a.n_max);
  }
  return kOk;
}

std::optional<MapFixture> parse_fixture(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) return std::nullopt;
  return MapFixture{text.substr(0, colon), text.substr(colon + 1)};
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Alternating permutations and 0-1-2 increasing trees", "alttree"};
  app.require_subcommand(1);

  MapArgs map_args;
  auto* map_cmd = app.add_subcommand("map", "Map an alternating permutation to its tree");
  map_cmd->add_option("permutation", map_args.tokens, "Permutation (default: stdin)");
  map_cmd->add_flag("--trace", map_args.trace, "Print one (case, n, k) line per level");
  map_cmd->add_flag("--dot", map_args.dot, "Also print the tree as Graphviz DOT");

  MapArgs unmap_args;
  auto* unmap_cmd = app.add_subcommand("unmap", "Map a tree (parent array) back to its permutation");
  unmap_cmd->add_option("tree", unmap_args.tokens, "Parent array (default: stdin)");
  unmap_cmd->add_flag("--trace", unmap_args.trace, "Print one (case, n, k) line per level");

  MapArgs dot_args;
  bool dot_from_perm = false;
  auto* dot_cmd = app.add_subcommand("dot", "Print a tree as Graphviz DOT");
  dot_cmd->add_option("input", dot_args.tokens, "Parent array, or permutation with --perm");
  dot_cmd->add_flag("--perm", dot_from_perm, "Input is a permutation; draw its image");

  EnumArgs enum_args;
  auto* enum_cmd = app.add_subcommand("enum", "List alternating permutations or trees");
  enum_cmd->add_option("kind", enum_args.kind)->required()->check(CLI::IsMember({"perms", "trees"}));
  enum_cmd->add_option("n", enum_args.n)->required();
  enum_cmd->add_option("--k", enum_args.k, "First letter / chain leaf");
  enum_cmd->add_flag("--count-only", enum_args.count_only);
  enum_cmd->add_flag("--stats", enum_args.stats,
                     "Append inv and 31-2 (perms) or the chain leaf (trees)");

  TableArgs table_args;
  auto* table_cmd = app.add_subcommand("table", "Print count or (q,p)-polynomial tables");
  table_cmd->add_option("kind", table_args.kind)->required()->check(CLI::IsMember({"counts", "poly"}));
  table_cmd->add_option("n_max", table_args.n_max)->required();
  table_cmd->add_flag("--machine", table_args.machine, "Counts as 'n k value' lines");
  table_cmd->add_flag("--pretty", table_args.pretty, "Polynomials in algebraic form");

  VerifyOptions vopts;
  std::vector<std::string> fixture_texts;
  bool no_fixtures = false;
  bool serial = false;
  auto* verify_cmd = app.add_subcommand("verify", "Run the exhaustive checks");
  verify_cmd->add_option("--roundtrip-n", vopts.roundtrip_n)->capture_default_str();
  verify_cmd->add_option("--refinement-n", vopts.refinement_n)->capture_default_str();
  verify_cmd->add_option("--equinumerosity-n", vopts.equinumerosity_n)->capture_default_str();
  verify_cmd->add_option("--count-n", vopts.count_recurrence_n)->capture_default_str();
  verify_cmd->add_option("--poly-min", vopts.poly_n_min)->capture_default_str();
  verify_cmd->add_option("--poly-n", vopts.poly_n)->capture_default_str();
  verify_cmd->add_option("--kpp-n", vopts.kpp_n)->capture_default_str();
  verify_cmd->add_option("--fixture", fixture_texts, "Extra WORD:TREE expectation");
  verify_cmd->add_flag("--no-fixtures", no_fixtures, "Skip the fixture section");
  verify_cmd->add_flag("--serial", serial, "Run sections one after another");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*map_cmd) return cmd_map(map_args, in, out, err);
    if (*unmap_cmd) return cmd_unmap(unmap_args, in, out, err);
    if (*dot_cmd) return cmd_dot(dot_args, dot_from_perm, in, out, err);
    if (*enum_cmd) return cmd_enum(enum_args, out, err);
    if (*table_cmd) return cmd_table(table_args, out, err);
    if (*verify_cmd) {
      for (const auto& text : fixture_texts) {
        auto f = parse_fixture(text);
        if (!f) {
          err << "error: fixture must look like WORD:TREE, got '" << text << "'\n";
          return kUsage;
        }
        vopts.extra_fixtures.push_back(*f);
      }
      vopts.fixtures = !no_fixtures;
      vopts.parallel = !serial;
      const VerifyReport report = run_verify(vopts);
      out << report.to_text();
      return report.ok() ? kOk : kVerifyFailed;
    }
  } catch (const std::invalid_argument& e) {
    return report_input_error(err, e, kUsage);
  } catch (const std::out_of_range& e) {
    return report_input_error(err, e, kUsage);
  }
  return kUsage;
}

}  // namespace alttree::cli
