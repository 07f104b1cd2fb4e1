// manyval — command-line workbench for finite-valued logical matrices.
//
// Exit codes: 0 affirmative result (holds/found/closed), 1 negative result
// (fails/none/open), 2 usage error, 3 input error, 4 budget exhausted.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "manyval/algebra.hpp"
#include "manyval/builtins.hpp"
#include "manyval/semantics.hpp"
#include "manyval/spec_io.hpp"
#include "manyval/tableau.hpp"

using json = nlohmann::json;
using namespace manyval;

namespace {

constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInput = 3;
constexpr int kExitBudget = 4;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool g_json = false;

void emit(const json& j) { std::cout << j.dump() << "\n"; }

Matrix load_matrix(const std::string& reference) {
  try {
    if (auto builtin = resolve_builtin(reference)) return *builtin;
  } catch (const Error& e) {
    throw InputError(e.what());
  }
  std::ifstream in(reference);
  if (!in.good()) throw InputError("cannot read '" + reference + "'");
  std::ostringstream text;
  text << in.rdbuf();
  try {
    Matrix m = parse_logic(text.str());
    ValidationReport report = validate_matrix(m);
    if (!report.ok)
      throw InputError("'" + reference + "' is not well-formed:\n" + report.to_string());
    return m;
  } catch (const SourceError& e) {
    throw InputError(reference + ": " + e.what());
  }
}

double default_budget() {
  if (const char* env = std::getenv("MANYVAL_BUDGET_SECS")) {
    try {
      return std::stod(env);
    } catch (...) {
      throw InputError("MANYVAL_BUDGET_SECS is not a number");
    }
  }
  return 600.0;
}

std::string map_to_text(const Matrix& source, const Matrix& target, const ValueMap& f) {
  std::ostringstream os;
  for (std::size_t v = 0; v < source.size(); ++v)
    os << source.value_name(static_cast<Value>(v)) << " -> "
       << target.value_name(f.map[v]) << "\n";
  return os.str();
}

json map_to_json(const Matrix& source, const Matrix& target, const ValueMap& f) {
  json entries = json::object();
  for (std::size_t v = 0; v < source.size(); ++v)
    entries[source.value_name(static_cast<Value>(v))] = target.value_name(f.map[v]);
  return json{{"source", f.source}, {"target", f.target},
              {"kind", kind_name(f.kind)}, {"map", entries}};
}

json valuation_to_json(const Matrix& m, const Valuation& valuation) {
  json out = json::object();
  for (const auto& [atom, value] : valuation) out[atom] = m.value_name(value);
  return out;
}

std::string valuation_to_text(const Matrix& m, const Valuation& valuation) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [atom, value] : valuation) {
    if (!first) os << " ";
    os << atom << "=" << m.value_name(value);
    first = false;
  }
  return os.str();
}

json partition_to_json(const Matrix& m, const Partition& p) {
  json blocks = json::array();
  for (const auto& block : p.blocks) {
    json names = json::array();
    for (Value v : block) names.push_back(m.value_name(v));
    blocks.push_back(names);
  }
  return blocks;
}

Formula parse_formula_arg(const std::string& text) {
  try {
    return parse_formula(text);
  } catch (const SourceError& e) {
    throw InputError("formula '" + text + "': " + e.what());
  }
}

Valuation parse_valuation(const Matrix& m, const std::string& text) {
  Valuation valuation;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const std::size_t eq = item.find('=');
    if (eq == std::string::npos)
      throw InputError("bad assignment '" + item + "' (expected atom=value)");
    const std::string atom = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    auto v = m.find_value(value);
    if (!v) throw InputError("'" + value + "' is not a value of '" + m.name() + "'");
    valuation[atom] = *v;
  }
  return valuation;
}

// --classes accepts a partition literal or a 1-based index into the
// canonical congruence listing.
Congruence resolve_classes(const Matrix& m, const std::string& classes, double budget,
                           int jobs) {
  if (!classes.empty() && classes.front() == '{') {
    Partition p = Partition::from_literal(m, classes);
    CongruenceCheck check = is_congruence(m, p);
    if (!check.ok)
      throw InputError("the given partition is not a congruence: " +
                       check.witness->describe(m));
    return Congruence{std::move(p), true};
  }
  std::size_t index = 0;
  try {
    index = std::stoul(classes);
  } catch (...) {
    throw InputError("--classes expects a partition literal {a,b|c} or an index");
  }
  EnumerationOptions options;
  options.budget_seconds = budget;
  options.jobs = jobs;
  EnumerationResult result = enumerate_congruences(m, options);
  if (!result.complete)
    throw BudgetExhausted("congruence search ran out of budget");
  if (index == 0 || index > result.congruences.size())
    throw InputError("no congruence with index " + std::to_string(index) + " (found " +
                     std::to_string(result.congruences.size()) + ")");
  return result.congruences[index - 1];
}

void write_or_print(const std::string& content, const std::string& path) {
  if (path.empty()) {
    if (g_json) {
      emit(json{{"mvl", content}});
    } else {
      std::cout << content;
    }
    return;
  }
  std::ofstream out(path);
  if (!out.good()) throw InputError("cannot write '" + path + "'");
  out << content;
  if (g_json) {
    emit(json{{"written", path}});
  } else {
    std::cout << "wrote " << path << "\n";
  }
}

void show_matrix(const Matrix& m) {
  if (g_json) {
    json ops = json::array();
    for (const auto& op : m.ops())
      ops.push_back(json{{"name", op.name}, {"arity", op.arity}});
    json values = json::array(), designated = json::array();
    for (const auto& v : m.values()) values.push_back(v);
    for (Value v : m.designated_values()) designated.push_back(m.value_name(v));
    emit(json{{"name", m.name()},
              {"values", values},
              {"designated", designated},
              {"ops", ops}});
    return;
  }
  std::cout << "logic \"" << m.name() << "\": " << m.size() << " values, "
            << m.designated_count() << " designated\n";
  std::size_t width = 1;
  for (const auto& v : m.values()) width = std::max(width, v.size());
  std::cout << "values:";
  for (std::size_t i = 0; i < m.size(); ++i) {
    std::cout << " " << m.values()[i];
    if (m.is_designated(static_cast<Value>(i))) std::cout << "*";
  }
  std::cout << "   (* designated)\n";
  auto pad = [&](const std::string& s) {
    return s + std::string(width + 1 - s.size(), ' ');
  };
  for (const auto& op : m.ops()) {
    std::cout << "\n" << op.name << "/" << op.arity << "\n";
    if (op.arity == 1) {
      for (std::size_t x = 0; x < m.size(); ++x)
        std::cout << " " << pad(m.values()[x]) << "| "
                  << m.value_name(op.table[x]) << "\n";
    } else if (op.arity == 2) {
      std::cout << " " << pad("");
      for (std::size_t y = 0; y < m.size(); ++y) std::cout << "| " << pad(m.values()[y]);
      std::cout << "\n";
      for (std::size_t x = 0; x < m.size(); ++x) {
        std::cout << " " << pad(m.values()[x]);
        for (std::size_t y = 0; y < m.size(); ++y)
          std::cout << "| " << pad(m.value_name(op.table[x * m.size() + y]));
        std::cout << "\n";
      }
    } else {
      std::cout << " (" << op.table.size() << " entries)\n";
    }
  }
}

std::string rule_to_text(const Matrix& m, const Rule& rule) {
  std::ostringstream os;
  os << rule.op << "/" << rule.arity << " sign " << m.value_name(rule.sign) << ": ";
  if (rule.branches.empty()) {
    os << "close";
    return os.str();
  }
  for (std::size_t b = 0; b < rule.branches.size(); ++b) {
    if (b) os << " | ";
    os << "{";
    for (std::size_t c = 0; c < rule.branches[b].size(); ++c) {
      if (c) os << ", ";
      os << m.value_name(rule.branches[b][c].sign) << ":arg"
         << rule.branches[b][c].arg;
    }
    os << "}";
  }
  return os.str();
}

std::string rules_to_latex(const Matrix& m, const RuleSet& rules) {
  std::ostringstream os;
  os << "% branch expansion rules for matrix \"" << m.name() << "\"\n";
  for (const Rule& rule : rules.rules()) {
    os << "\\[\\dfrac{" << m.value_name(rule.sign) << " : " << rule.op << "(";
    for (int i = 0; i < rule.arity; ++i) os << (i ? ", " : "") << "A_" << i + 1;
    os << ")}{";
    if (rule.branches.empty()) {
      os << "\\times";
    } else {
      for (std::size_t b = 0; b < rule.branches.size(); ++b) {
        if (b) os << " \\;\\big|\\; ";
        if (rule.branches[b].empty()) os << "\\checkmark";
        for (std::size_t c = 0; c < rule.branches[b].size(); ++c) {
          if (c) os << ", ";
          os << m.value_name(rule.branches[b][c].sign) << "{:}A_"
             << rule.branches[b][c].arg + 1;
        }
      }
    }
    os << "}\\]\n";
  }
  return os.str();
}

json tableau_tree_json(const Tableau& tableau, int node) {
  const auto& nd = tableau.node(node);
  json children = json::array();
  for (int child : nd.children) children.push_back(tableau_tree_json(tableau, child));
  return json::array({nd.sf.to_string(tableau.matrix()), children});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"manyval — a workbench for finite-valued logical matrices"};
  app.require_subcommand(1);
  app.add_flag("--json", g_json, "line-delimited JSON output");
  int jobs = 1;
  app.add_option("--jobs", jobs, "worker threads for parallelizable searches")
      ->check(CLI::PositiveNumber);

  double budget = 600.0;
  try {
    budget = default_budget();
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }

  int exit_code = 0;

  // ---- show ---------------------------------------------------------------
  auto* cmd_show = app.add_subcommand("show", "print a matrix summary and its tables");
  std::string show_ref;
  cmd_show->add_option("matrix", show_ref, "matrix file or builtin: reference")->required();
  cmd_show->callback([&] { show_matrix(load_matrix(show_ref)); });

  // ---- product --------------------------------------------------------------
  auto* cmd_product = app.add_subcommand("product", "direct product of two matrices");
  std::string prod_a, prod_b, prod_out;
  cmd_product->add_option("m1", prod_a)->required();
  cmd_product->add_option("m2", prod_b)->required();
  cmd_product->add_option("-o,--output", prod_out, "write the .mvl here");
  cmd_product->callback([&] {
    Matrix p = direct_product(load_matrix(prod_a), load_matrix(prod_b));
    write_or_print(serialize_logic(p), prod_out);
  });

  // ---- congruences ------------------------------------------------------------
  auto* cmd_cong = app.add_subcommand("congruences", "enumerate all congruences");
  std::string cong_ref;
  bool cong_identity = false;
  std::size_t cong_limit = 0;
  double cong_budget = -1;
  cmd_cong->add_option("matrix", cong_ref)->required();
  cmd_cong->add_flag("--include-identity", cong_identity);
  cmd_cong->add_option("--limit", cong_limit, "stop after this many congruences");
  cmd_cong->add_option("--budget", cong_budget, "wall-clock budget in seconds");
  cmd_cong->callback([&] {
    Matrix m = load_matrix(cong_ref);
    EnumerationOptions options;
    options.include_identity = cong_identity;
    options.limit = cong_limit;
    options.budget_seconds = cong_budget > 0 ? cong_budget : budget;
    options.jobs = jobs;
    EnumerationResult result = enumerate_congruences(m, options);
    for (const Congruence& c : result.congruences) {
      if (g_json) {
        emit(json{{"blocks", partition_to_json(m, c.partition)},
                  {"block_count", c.partition.block_count()}});
      } else {
        std::cout << c.partition.to_literal(m) << "\n";
      }
    }
    if (g_json)
      emit(json{{"count", result.congruences.size()},
                {"complete", result.complete},
                {"nodes", result.nodes_visited}});
    else
      std::cerr << result.congruences.size() << " congruence(s), "
                << (result.complete ? "complete" : "PARTIAL") << ", "
                << result.nodes_visited << " nodes, " << result.elapsed_seconds
                << " s\n";
    if (!result.complete && !result.hit_limit)
      throw BudgetExhausted("congruence search ran out of budget; results are partial");
    if (result.congruences.empty()) exit_code = kExitNegative;
  });

  // ---- factor -----------------------------------------------------------------
  auto* cmd_factor = app.add_subcommand("factor", "factor a matrix by a congruence");
  std::string factor_ref, factor_classes, factor_out;
  cmd_factor->add_option("matrix", factor_ref)->required();
  cmd_factor->add_option("--classes", factor_classes,
                         "partition literal {a,b|c|...} or 1-based congruence index")
      ->required();
  cmd_factor->add_option("-o,--output", factor_out, "write the .mvl here");
  cmd_factor->callback([&] {
    Matrix m = load_matrix(factor_ref);
    Congruence c = resolve_classes(m, factor_classes, budget, jobs);
    auto [factor, projection] = factor_matrix(m, c);
    if (g_json)
      emit(json{{"projection", map_to_json(m, factor, projection)}});
    else
      std::cerr << "projection:\n" << map_to_text(m, factor, projection);
    write_or_print(serialize_logic(factor), factor_out);
  });

  // ---- iso / epi / auto ----------------------------------------------------------
  auto* cmd_iso = app.add_subcommand("iso", "search for an isomorphism");
  std::string iso_a, iso_b;
  cmd_iso->add_option("m1", iso_a)->required();
  cmd_iso->add_option("m2", iso_b)->required();
  cmd_iso->callback([&] {
    Matrix a = load_matrix(iso_a), b = load_matrix(iso_b);
    auto iso = find_isomorphism(a, b);
    if (g_json) {
      emit(iso ? json{{"found", true}, {"iso", map_to_json(a, b, *iso)}}
               : json{{"found", false}});
    } else {
      std::cout << (iso ? map_to_text(a, b, *iso) : std::string("none\n"));
    }
    if (!iso) exit_code = kExitNegative;
  });

  auto* cmd_epi = app.add_subcommand("epi", "search for epimorphisms");
  std::string epi_a, epi_b;
  bool epi_all = false;
  double epi_budget = -1;
  cmd_epi->add_option("m1", epi_a)->required();
  cmd_epi->add_option("m2", epi_b)->required();
  cmd_epi->add_flag("--all", epi_all, "report one epimorphism per congruence");
  cmd_epi->add_option("--budget", epi_budget, "wall-clock budget in seconds");
  cmd_epi->callback([&] {
    Matrix a = load_matrix(epi_a), b = load_matrix(epi_b);
    EpimorphismOptions options;
    options.budget_seconds = epi_budget > 0 ? epi_budget : budget;
    auto epis = find_epimorphisms(a, b, epi_all, options);
    if (g_json) {
      for (const auto& epi : epis) emit(map_to_json(a, b, epi));
      emit(json{{"count", epis.size()}});
    } else if (epis.empty()) {
      std::cout << "none\n";
    } else {
      for (std::size_t i = 0; i < epis.size(); ++i) {
        if (i) std::cout << "\n";
        std::cout << map_to_text(a, b, epis[i]);
      }
    }
    if (epis.empty()) exit_code = kExitNegative;
  });

  auto* cmd_auto = app.add_subcommand("auto", "list all automorphisms");
  std::string auto_ref;
  cmd_auto->add_option("matrix", auto_ref)->required();
  cmd_auto->callback([&] {
    Matrix m = load_matrix(auto_ref);
    auto autos = automorphisms(m);
    if (g_json) {
      for (const auto& f : autos) emit(map_to_json(m, m, f));
      emit(json{{"count", autos.size()}});
    } else {
      for (std::size_t i = 0; i < autos.size(); ++i) {
        if (i) std::cout << "\n";
        std::cout << map_to_text(m, m, autos[i]);
      }
      std::cerr << autos.size() << " automorphism(s)\n";
    }
  });

  // ---- entail / taut / eval -----------------------------------------------------
  auto* cmd_entail =
      app.add_subcommand("entail", "decide an entailment by exhaustive valuation");
  std::string entail_ref, entail_conclusion;
  std::vector<std::string> entail_premises;
  int entail_cap = kDefaultAtomCap;
  cmd_entail->add_option("matrix", entail_ref)->required();
  cmd_entail->add_option("-p,--premise", entail_premises, "premise formula (repeatable)");
  cmd_entail->add_option("-c,--conclusion", entail_conclusion)->required();
  cmd_entail->add_option("--atom-cap", entail_cap);
  cmd_entail->callback([&] {
    Matrix m = load_matrix(entail_ref);
    std::vector<Formula> premises;
    for (const auto& p : entail_premises) premises.push_back(parse_formula_arg(p));
    Formula conclusion = parse_formula_arg(entail_conclusion);
    EntailmentVerdict verdict;
    try {
      verdict = entails(m, premises, conclusion, entail_cap);
    } catch (const Error& e) {
      throw InputError(e.what());
    }
    if (g_json) {
      json j{{"holds", verdict.holds}, {"valuations_checked", verdict.valuations_checked}};
      if (verdict.countervaluation)
        j["countervaluation"] = valuation_to_json(m, *verdict.countervaluation);
      emit(j);
    } else if (verdict.holds) {
      std::cout << "holds (" << verdict.valuations_checked << " valuations)\n";
    } else {
      std::cout << "does not hold; countervaluation: "
                << valuation_to_text(m, *verdict.countervaluation) << "\n";
    }
    if (!verdict.holds) exit_code = kExitNegative;
  });

  auto* cmd_taut = app.add_subcommand("taut", "test a formula for tautology");
  std::string taut_ref, taut_formula;
  int taut_cap = kDefaultAtomCap;
  cmd_taut->add_option("matrix", taut_ref)->required();
  cmd_taut->add_option("formula", taut_formula)->required();
  cmd_taut->add_option("--atom-cap", taut_cap);
  cmd_taut->callback([&] {
    Matrix m = load_matrix(taut_ref);
    EntailmentVerdict verdict;
    try {
      verdict = is_tautology(m, parse_formula_arg(taut_formula), taut_cap);
    } catch (const Error& e) {
      throw InputError(e.what());
    }
    if (g_json) {
      json j{{"holds", verdict.holds}, {"valuations_checked", verdict.valuations_checked}};
      if (verdict.countervaluation)
        j["countervaluation"] = valuation_to_json(m, *verdict.countervaluation);
      emit(j);
    } else if (verdict.holds) {
      std::cout << "tautology (" << verdict.valuations_checked << " valuations)\n";
    } else {
      std::cout << "not a tautology; countervaluation: "
                << valuation_to_text(m, *verdict.countervaluation) << "\n";
    }
    if (!verdict.holds) exit_code = kExitNegative;
  });

  auto* cmd_eval = app.add_subcommand("eval", "evaluate a formula under a valuation");
  std::string eval_ref, eval_formula, eval_val;
  cmd_eval->add_option("matrix", eval_ref)->required();
  cmd_eval->add_option("formula", eval_formula)->required();
  cmd_eval->add_option("--val", eval_val, "comma-separated atom=value assignments")
      ->required();
  cmd_eval->callback([&] {
    Matrix m = load_matrix(eval_ref);
    Formula f = parse_formula_arg(eval_formula);
    Valuation valuation = parse_valuation(m, eval_val);
    Value result;
    try {
      result = evaluate(m, f, valuation);
    } catch (const Error& e) {
      throw InputError(e.what());
    }
    if (g_json) {
      emit(json{{"value", m.value_name(result)},
                {"designated", m.is_designated(result)}});
    } else {
      std::cout << m.value_name(result)
                << (m.is_designated(result) ? " (designated)" : "") << "\n";
    }
  });

  // ---- qtable -------------------------------------------------------------
  auto* cmd_qtable =
      app.add_subcommand("qtable",
                         "distribution-quantifier table of an associative-"
                         "commutative-idempotent operation");
  std::string qt_ref, qt_op, qt_count_not;
  bool qt_summary = false;
  cmd_qtable->add_option("matrix", qt_ref)->required();
  cmd_qtable->add_option("--op", qt_op, "binary operation name")->required();
  cmd_qtable->add_option("--count-not", qt_count_not,
                         "also count subsets whose fold differs from this value");
  cmd_qtable->add_flag("--summary", qt_summary, "omit the per-subset listing");
  cmd_qtable->callback([&] {
    Matrix m = load_matrix(qt_ref);
    DistributionTable table;
    try {
      table = distribution_table(m, qt_op);
    } catch (const Error& e) {
      throw InputError(e.what());
    }
    if (!qt_summary) {
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m.size()); ++mask) {
        if (g_json) {
          json subset = json::array();
          for (std::size_t v = 0; v < m.size(); ++v)
            if (mask >> v & 1) subset.push_back(m.value_name(static_cast<Value>(v)));
          emit(json{{"subset", subset}, {"value", m.value_name(table.fold(mask))}});
        } else {
          std::cout << "{";
          bool first = true;
          for (std::size_t v = 0; v < m.size(); ++v) {
            if (!(mask >> v & 1)) continue;
            std::cout << (first ? "" : ",") << m.value_name(static_cast<Value>(v));
            first = false;
          }
          std::cout << "} -> " << m.value_name(table.fold(mask)) << "\n";
        }
      }
    }
    json summary{{"op", table.op}, {"subsets", table.subset_count()}};
    std::ostringstream text;
    text << table.subset_count() << " non-empty subsets";
    if (!qt_count_not.empty()) {
      auto v = m.find_value(qt_count_not);
      if (!v)
        throw InputError("'" + qt_count_not + "' is not a value of '" + m.name() + "'");
      const std::size_t count = table.count_not(*v);
      summary["count_not"] = json{{"value", qt_count_not}, {"count", count}};
      text << "; " << count << " fold to something other than " << qt_count_not;
    }
    if (g_json)
      emit(summary);
    else
      std::cerr << text.str() << "\n";
  });

  // ---- rules / prove -------------------------------------------------------
  auto* cmd_rules = app.add_subcommand("rules", "generate signed branch-expansion rules");
  std::string rules_ref, rules_op;
  bool rules_latex = false;
  cmd_rules->add_option("matrix", rules_ref)->required();
  cmd_rules->add_option("--op", rules_op, "restrict to one operation");
  cmd_rules->add_flag("--latex", rules_latex);
  cmd_rules->callback([&] {
    Matrix m = load_matrix(rules_ref);
    RuleSet rules = generate_rules(m);
    if (rules_latex) {
      std::cout << rules_to_latex(m, rules);
      return;
    }
    for (const Rule& rule : rules.rules()) {
      if (!rules_op.empty() && rule.op != rules_op) continue;
      if (g_json) {
        json branches = json::array();
        for (const auto& branch : rule.branches) {
          json constraints = json::array();
          for (const auto& c : branch)
            constraints.push_back(json{{"sign", m.value_name(c.sign)}, {"arg", c.arg}});
          branches.push_back(constraints);
        }
        emit(json{{"op", rule.op},
                  {"arity", rule.arity},
                  {"sign", m.value_name(rule.sign)},
                  {"branches", branches}});
      } else {
        std::cout << rule_to_text(m, rule) << "\n";
      }
    }
  });

  auto* cmd_prove = app.add_subcommand("prove", "run the signed-tableau prover");
  std::string prove_ref, prove_conclusion;
  std::vector<std::string> prove_premises;
  bool prove_tree = false;
  double prove_budget = -1;
  std::uint64_t prove_nodes = 1'000'000;
  cmd_prove->add_option("matrix", prove_ref)->required();
  cmd_prove->add_option("-p,--premise", prove_premises, "premise formula (repeatable)");
  cmd_prove->add_option("-c,--conclusion", prove_conclusion)->required();
  cmd_prove->add_flag("--print-tree", prove_tree);
  cmd_prove->add_option("--budget", prove_budget, "wall-clock budget in seconds");
  cmd_prove->add_option("--max-nodes", prove_nodes);
  cmd_prove->callback([&] {
    Matrix m = load_matrix(prove_ref);
    RuleSet rules = generate_rules(m);
    std::vector<Formula> premises;
    for (const auto& p : prove_premises) premises.push_back(parse_formula_arg(p));
    Formula conclusion = parse_formula_arg(prove_conclusion);
    ProverBudget limits;
    limits.seconds = prove_budget > 0 ? prove_budget : budget;
    limits.max_nodes = prove_nodes;
    ProofResult result = prove_entailment(m, rules, premises, conclusion, limits);
    if (g_json) {
      json j{{"holds", result.holds},
             {"nodes", result.tableau.node_count()},
             {"expansions", result.tableau.stats().expansions}};
      if (result.countervaluation)
        j["countervaluation"] = valuation_to_json(m, *result.countervaluation);
      if (prove_tree) j["tree"] = tableau_tree_json(result.tableau, result.tableau.root());
      emit(j);
    } else {
      if (result.holds) {
        std::cout << "closed: the entailment holds (" << result.tableau.node_count()
                  << " nodes)\n";
      } else {
        std::cout << "open: countervaluation "
                  << valuation_to_text(m, *result.countervaluation) << "\n";
      }
      if (prove_tree) std::cout << result.tableau.to_text();
    }
    if (!result.holds) exit_code = kExitNegative;
  });

  // ---- stats ----------------------------------------------------------------
  auto* cmd_stats =
      app.add_subcommand("stats", "search-space sizes for n values, k designated");
  int stats_n = 0, stats_k = 0;
  std::string stats_split;
  cmd_stats->add_option("--values", stats_n)->required();
  cmd_stats->add_option("--designated", stats_k)->required();
  cmd_stats->add_option("--surjection-split", stats_split,
                        "classwise surjection counts, e.g. 12:6,4:3 "
                        "(undesignated from:to, designated from:to)");
  cmd_stats->callback([&] {
    std::optional<SurjectionSplit> split;
    if (!stats_split.empty()) {
      SurjectionSplit s;
      if (std::sscanf(stats_split.c_str(), "%d:%d,%d:%d", &s.undesignated_from,
                      &s.undesignated_to, &s.designated_from, &s.designated_to) != 4)
        throw InputError("--surjection-split expects FROM:TO,FROM:TO");
      split = s;
    }
    SearchStats stats;
    try {
      stats = search_space_stats(stats_n, stats_k, split);
    } catch (const Error& e) {
      throw InputError(e.what());
    }
    if (g_json) {
      json j{{"n", stats.n},
             {"k", stats.k},
             {"bell_designated", stats.bell_designated.str()},
             {"bell_undesignated", stats.bell_undesignated.str()},
             {"congruence_candidates", stats.congruence_candidates.str()},
             {"bijection_candidates", stats.bijection_candidates.str()}};
      if (stats.surjection_candidates)
        j["surjection_candidates"] = stats.surjection_candidates->str();
      emit(j);
    } else {
      std::cout << "designated partitions (Bell " << stats.k
                << "): " << stats.bell_designated << "\n"
                << "undesignated partitions (Bell " << stats.n - stats.k
                << "): " << stats.bell_undesignated << "\n"
                << "congruence candidates: " << stats.congruence_candidates << "\n"
                << "bijection candidates: " << stats.bijection_candidates << "\n";
      if (stats.surjection_candidates)
        std::cout << "surjection candidates: " << *stats.surjection_candidates << "\n";
    }
  });

  // ---- report ---------------------------------------------------------------
  auto* cmd_report = app.add_subcommand("report", "emit LaTeX truth tables");
  std::string report_ref, report_classes, report_out;
  cmd_report->add_option("matrix", report_ref)->required();
  cmd_report->add_option("--classes", report_classes,
                         "partition literal or 1-based congruence index for coloring");
  cmd_report->add_option("--latex", report_out, "output .tex path")->required();
  cmd_report->callback([&] {
    Matrix m = load_matrix(report_ref);
    std::string tex;
    if (report_classes.empty()) {
      tex = emit_latex_tables(m);
    } else {
      Congruence c = resolve_classes(m, report_classes, budget, jobs);
      tex = emit_latex_tables(m, &c.partition);
    }
    std::ofstream out(report_out);
    if (!out.good()) throw InputError("cannot write '" + report_out + "'");
    out << tex;
    if (g_json)
      emit(json{{"written", report_out}});
    else
      std::cout << "wrote " << report_out << "\n";
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    app.exit(e);
    return kExitUsage;
  } catch (const BudgetExhausted& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return kExitBudget;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const SourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return exit_code;
}
