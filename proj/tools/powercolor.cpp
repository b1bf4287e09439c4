#include "powercolor/arith.hpp"
#include "powercolor/coloring.hpp"
#include "powercolor/errors.hpp"
#include "powercolor/group_spec.hpp"
#include "powercolor/oracle.hpp"
#include "powercolor/perfectness.hpp"
#include "powercolor/powergraph.hpp"
#include "powercolor/report.hpp"
#include "powercolor/verify.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace powercolor;

namespace {

enum Exit { kOk = 0, kTheorem = 1, kInput = 2, kCap = 3 };

struct GroupSource {
  std::string spec_file;
  std::vector<std::string> named;
};

void add_group_options(CLI::App *cmd, GroupSource &src, bool required = true) {
  auto *source = cmd->add_option_group("group", "where the group comes from");
  source->add_option("--spec", src.spec_file, "group-spec JSON file");
  source->add_option("--named", src.named, "NAME PARAMS..., e.g. --named symmetric 5")->expected(1, -1);
  source->require_option(required ? 1 : 0, 1);
}

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

FiniteGroup load_group(const GroupSource &src) {
  if (!src.spec_file.empty()) {
    try {
      return parse_group_spec(read_file(src.spec_file));
    } catch (const SpecError &e) {
      throw InputError(src.spec_file + ": " + e.what());
    }
  }
  if (src.named.empty())
    throw InputError("one of --spec or --named is required");
  return named_group(src.named.front(), {src.named.begin() + 1, src.named.end()});
}

void emit(const std::string &text, const std::string &out_file) {
  if (out_file.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_file, std::ios::binary);
  if (!out)
    throw InputError("cannot write " + out_file);
  out << text;
}

std::string dump(const Json &j) { return j.dump(2) + "\n"; }

// Both oracles plus weak stability against the constructed coloring.
Json verify_block(const FiniteGroup &g, const GroupColoring &gc, bool &ok) {
  const PowerGraph p = build_power_graph(g);
  const std::size_t clique = max_clique_exact(p.undirected).size();
  const std::size_t chromatic = chromatic_number_exact(p.undirected);
  const WeakStabilityCheck ws = verify_weak_stability(g, gc.coloring);
  const bool proper = !find_conflict(p.undirected, gc.coloring.assignment);
  ok = clique == gc.mu && chromatic == gc.mu && gc.coloring.palette_size == gc.mu && ws.ok && proper;
  Json j;
  j["clique_oracle"] = clique;
  j["chromatic_oracle"] = chromatic;
  j["palette_size"] = gc.coloring.palette_size;
  j["proper"] = proper;
  j["weakly_stable"] = ws.ok;
  j["ok"] = ok;
  return j;
}

int cmd_group(const GroupSource &src, bool inspect) {
  const FiniteGroup g = load_group(src);
  Json j = group_summary(g);
  if (inspect) {
    Json elements = Json::array();
    for (Element x = 0; x < g.order(); ++x)
      elements.push_back({{"element", x}, {"label", g.label(x)}, {"order", g.element_order(x)}});
    j["elements"] = std::move(elements);
  }
  std::cout << dump(j);
  std::cerr << g.name() << ": order " << g.order() << ", exponent " << exponent(g)
            << (is_full_exponent(g) ? ", full exponent\n" : ", not full exponent\n");
  return kOk;
}

enum class Kind { Omega, Chi, Color };

int cmd_invariant(Kind kind, const GroupSource &src, const std::string &out, bool verify) {
  const FiniteGroup g = load_group(src);
  const OmegaResult om = omega(g);
  Json j;
  std::optional<GroupColoring> gc;
  if (kind != Kind::Omega || verify)
    gc = color_group(g);

  switch (kind) {
  case Kind::Omega:
    j["group"] = g.name();
    j["omega"] = om.value;
    j["witness"] = {{"element", om.witness}, {"label", g.label(om.witness)}, {"order", g.element_order(om.witness)}};
    std::cerr << "omega = " << om.value << " at " << g.label(om.witness) << "\n";
    break;
  case Kind::Chi:
    j["group"] = g.name();
    j["chi"] = gc->coloring.palette_size;
    std::cerr << "chi = " << gc->coloring.palette_size << "\n";
    break;
  case Kind::Color:
    j = coloring_report(g, *gc, verify_weak_stability(g, gc->coloring));
    std::cerr << gc->coloring.palette_size << " colors on " << g.order() << " vertices, "
              << gc->fallbacks.size() << " fallback(s)\n";
    break;
  }

  bool ok = true;
  if (verify) {
    j["verify"] = verify_block(g, *gc, ok);
    std::cerr << (ok ? "verified\n" : "verification FAILED\n");
  }
  emit(dump(j), out);
  return ok ? kOk : kTheorem;
}

int cmd_berge(const GroupSource &src, const std::string &graph_file, std::optional<std::size_t> max_cycle) {
  BergeReport report;
  Json j;
  if (!graph_file.empty()) {
    const BitGraph g = parse_graph_json(read_file(graph_file));
    report = certify_berge(g, max_cycle);
    j["source"] = graph_file;
    j["vertex_count"] = g.vertex_count();
  } else {
    const FiniteGroup g = load_group(src);
    report = certify_berge(build_power_graph(g), max_cycle);
    j["source"] = g.name();
    j["vertex_count"] = g.order();
  }
  const Json body = berge_report_json(report);
  for (const auto &[k, v] : body.items())
    j[k] = v;
  std::cout << dump(j);
  if (report.witness) {
    std::cerr << "odd " << to_string(report.witness->kind) << " of length " << report.witness->cycle.size()
              << " found\n";
    return kTheorem;
  }
  std::cerr << "certified up to cycle length " << report.hole_search_bound << "\n";
  return kOk;
}

Json psi_row(u64 n, bool &agree) {
  const FactoredInt f(n);
  const u64 rec = psi(f);
  const u64 closed = psi_closed_form(f);
  agree = rec == closed;
  return {{"n", n}, {"recurrence", rec}, {"closed_form", closed}, {"agree", agree}};
}

int cmd_psi(std::optional<u64> n, std::optional<u64> table) {
  if (n && table)
    throw InputError("give either N or --table, not both");
  if (!n && !table)
    throw InputError("give N or --table MAX");
  if ((n && *n == 0) || (table && *table == 0))
    throw InputError("N must be at least 1");
  if (n) {
    bool agree = false;
    const Json row = psi_row(*n, agree);
    std::cout << dump(row);
    std::cerr << "psi(" << *n << ") = " << row["recurrence"].get<u64>()
              << (agree ? ", both methods agree\n" : ", METHODS DISAGREE\n");
    return agree ? kOk : kTheorem;
  }
  Json rows = Json::array();
  std::size_t disagreements = 0;
  for (u64 m = 1; m <= *table; ++m) {
    bool agree = false;
    rows.push_back(psi_row(m, agree));
    disagreements += !agree;
  }
  Json j;
  j["rows"] = std::move(rows);
  j["disagreements"] = disagreements;
  std::cout << dump(j);
  std::cerr << *table << " rows, " << disagreements << " disagreement(s)\n";
  return disagreements == 0 ? kOk : kTheorem;
}

int cmd_export(const GroupSource &src, const std::string &format, const std::string &out) {
  const ExportFormat f = parse_export_format(format);
  const FiniteGroup g = load_group(src);
  emit(export_graph(build_power_graph(g), f), out);
  return kOk;
}

int cmd_reproduce(int only) {
  std::vector<verify::CriterionResult> results;
  auto print = [](const verify::CriterionResult &r) {
    std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << std::setw(2) << r.id << "  " << r.title << "  ("
              << std::fixed << std::setprecision(2) << r.seconds << " s)  " << r.detail << "\n"
              << std::flush;
  };
  if (only != 0) {
    if (only < 1 || only > verify::kCriterionCount)
      throw InputError("criterion must be in 1.." + std::to_string(verify::kCriterionCount));
    results.push_back(verify::run_criterion(only, std::cerr));
    print(results.back());
  } else {
    results = verify::run_acceptance(std::cerr, print);
  }
  std::size_t passed = 0;
  for (const auto &r : results)
    passed += r.passed;
  std::cout << passed << "/" << results.size() << " criteria passed\n";
  return passed == results.size() ? kOk : kTheorem;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Power graphs of finite groups: clique number, stable colorings, Berge certification"};
  app.require_subcommand(1);

  GroupSource src;
  bool inspect = false;
  std::string out;
  bool verify_flag = false;
  std::string graph_file;
  std::optional<std::size_t> max_cycle;
  std::optional<u64> psi_n;
  std::optional<u64> psi_table;
  std::string format;
  int criterion = 0;

  auto *group = app.add_subcommand("group", "summarize a group");
  add_group_options(group, src);
  group->add_flag("--inspect", inspect, "also list every element with its order");

  auto *omega_cmd = app.add_subcommand("omega", "clique number of the power graph");
  auto *chi_cmd = app.add_subcommand("chi", "chromatic number via the constructive coloring");
  auto *color_cmd = app.add_subcommand("color", "write the coloring report");
  for (auto *cmd : {omega_cmd, chi_cmd, color_cmd}) {
    add_group_options(cmd, src);
    cmd->add_option("--out", out, "write JSON here instead of stdout");
    cmd->add_flag("--verify", verify_flag, "check against the exact oracles and weak stability");
  }

  auto *berge = app.add_subcommand("verify-berge", "search for odd holes and odd antiholes");
  add_group_options(berge, src, false);
  auto *graph_opt = berge->add_option("--graph", graph_file, "raw graph JSON {vertex_count, edges}");
  berge->add_option("--max-cycle", max_cycle, "longest cycle length searched");
  berge->callback([&] {
    const bool has_group = !src.spec_file.empty() || !src.named.empty();
    if (has_group == (graph_opt->count() > 0))
      throw CLI::ValidationError("exactly one of --spec, --named or --graph is required");
  });

  auto *psi_cmd = app.add_subcommand("psi", "Psi(N) by recurrence and closed form");
  psi_cmd->add_option("N", psi_n, "argument");
  psi_cmd->add_option("--table", psi_table, "tabulate 1..MAX");

  auto *export_cmd = app.add_subcommand("export", "serialize the power graph");
  add_group_options(export_cmd, src);
  export_cmd->add_option("--format", format, "dot or json")->required();
  export_cmd->add_option("--out", out, "output file (stdout when omitted)");

  auto *repro = app.add_subcommand("reproduce-paper", "run the acceptance suite and print a pass/fail table");
  repro->add_option("--criterion", criterion, "run a single criterion");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kInput;
  }

  try {
    if (*group)
      return cmd_group(src, inspect);
    if (*omega_cmd)
      return cmd_invariant(Kind::Omega, src, out, verify_flag);
    if (*chi_cmd)
      return cmd_invariant(Kind::Chi, src, out, verify_flag);
    if (*color_cmd)
      return cmd_invariant(Kind::Color, src, out, verify_flag);
    if (*berge)
      return cmd_berge(src, graph_file, max_cycle);
    if (*psi_cmd)
      return cmd_psi(psi_n, psi_table);
    if (*export_cmd)
      return cmd_export(src, format, out);
    if (*repro)
      return cmd_reproduce(criterion);
  } catch (const InputError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const std::invalid_argument &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const CapExceeded &e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kCap;
  } catch (const ArithmeticOverflow &e) {
    std::cerr << "overflow: " << e.what() << "\n";
    return kCap;
  } catch (const TheoremViolation &e) {
    std::cerr << "theorem check failed: " << e.what() << "\n";
    return kTheorem;
  } catch (const ColorBudgetExceeded &e) {
    std::cerr << "theorem check failed: " << e.what() << "\n";
    return kTheorem;
  }
  return kOk;
}
