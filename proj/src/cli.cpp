#include "tiltcube/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tiltcube/chains.hpp"
#include "tiltcube/constructions.hpp"
#include "tiltcube/predicates.hpp"
#include "tiltcube/search.hpp"
#include "tiltcube/shadow.hpp"

namespace tiltcube {

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitValidationFailure = 1;
constexpr int kExitUsage = 2;

json set_to_json(SubsetWord w) { return json(elements_of(w)); }

json violations_to_json(const std::vector<std::pair<SubsetWord, SubsetWord>>& violations) {
  json arr = json::array();
  for (const auto& [a, b] : violations) arr.push_back(json{{"a", set_to_json(a)}, {"b", set_to_json(b)}});
  return arr;
}

std::string rational_cell(const Rational& r) {
  return denominator(r) == 1 ? numerator(r).str() : format_rational(r);
}

std::uint64_t to_u64(const Rational& r) {
  return numerator(r).convert_to<std::uint64_t>();
}

}  // namespace

SetFamily read_family(std::istream& in) {
  std::string line;
  int lineno = 0;
  std::optional<int> n;
  std::vector<SubsetWord> members;
  std::optional<GroundSet> ground;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos || line[start] == '#') continue;
    std::string body = line.substr(start);
    if (!n) {
      if (body.rfind("n=", 0) != 0)
        throw std::invalid_argument("line " + std::to_string(lineno) + ": expected header n=<N>");
      n = std::stoi(body.substr(2));
      ground.emplace(*n);
      continue;
    }
    if (body == "{}") {
      members.push_back(SubsetWord{0});
      continue;
    }
    std::vector<int> elems;
    std::stringstream ss(body);
    std::string piece;
    while (std::getline(ss, piece, ',')) {
      try {
        elems.push_back(std::stoi(piece));
      } catch (const std::exception&) {
        throw std::invalid_argument("line " + std::to_string(lineno) + ": bad element '" + piece +
                                    "'");
      }
    }
    members.push_back(subset_from_elements(*ground, elems));
  }
  if (!ground) throw std::invalid_argument("missing family header n=<N>");
  return SetFamily(*ground, std::move(members));
}

SetFamily read_family_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open family file '" + path + "'");
  return read_family(in);
}

void write_family(std::ostream& out, const SetFamily& family) {
  out << "n=" << family.n() << "\n";
  for (SubsetWord w : family.members()) {
    if (w.bits == 0) {
      out << "{}\n";
      continue;
    }
    auto elems = elements_of(w);
    for (std::size_t i = 0; i < elems.size(); ++i) out << (i ? "," : "") << elems[i];
    out << "\n";
  }
}

void write_family_file(const std::string& path, const SetFamily& family) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write family file '" + path + "'");
  write_family(out, family);
}

std::string format_family(const SetFamily& family) {
  std::ostringstream os;
  write_family(os, family);
  return os.str();
}

std::vector<TableRow> reproduction_table(int min_n, int max_n, int exact_max_n,
                                         double search_time_limit_seconds) {
  if (min_n < 1 || max_n > 64 || min_n > max_n)
    throw std::invalid_argument("table range must satisfy 1 <= min-n <= max-n <= 64");
  std::vector<TableRow> rows;
  for (int n = min_n; n <= max_n; ++n) {
    TableRow row;
    row.n = n;
    row.middle_binomial = binomial(n, n / 2);
    row.lp_full = solve_lp_exact(build_lp(n, 1, 2, LpVariant::full)).optimum;
    row.lp_jk = solve_lp_exact(build_lp(n, 1, 2, LpVariant::jk_only)).optimum;
    row.lp_full_over_middle = row.lp_full / Rational(row.middle_binomial);
    if (n % 2 == 0) {
      row.b0 = b0_size(n);
      row.b0_over_middle = Rational(*row.b0) / Rational(row.middle_binomial);
      row.lp_full_equals_b0 = row.lp_full == Rational(*row.b0);
    }
    if (n <= exact_max_n) {
      SearchBudget budget;
      budget.time_limit_seconds = search_time_limit_seconds;
      SearchResult result = max_family(n, ConflictPredicate::ratio(1, 2), budget);
      if (result.status == SearchStatus::proved_optimal) row.exact_max = result.size;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_table_csv(std::ostream& out, const std::vector<TableRow>& rows) {
  out << "n,b0,lp_full,lp_jk,exact_max,middle_binomial,b0_over_middle,lp_full_over_middle,"
         "lp_full_equals_b0\n";
  for (const TableRow& row : rows) {
    out << row.n << ',';
    out << (row.b0 ? row.b0->str() : "-") << ',';
    out << rational_cell(row.lp_full) << ',';
    out << rational_cell(row.lp_jk) << ',';
    if (row.exact_max)
      out << *row.exact_max;
    else
      out << '-';
    out << ',' << row.middle_binomial.str() << ',';
    out << (row.b0_over_middle ? format_decimal(*row.b0_over_middle, 6) : "-") << ',';
    out << format_decimal(row.lp_full_over_middle, 6) << ',';
    out << (row.lp_full_equals_b0 ? (*row.lp_full_equals_b0 ? "yes" : "no") : "-") << '\n';
  }
}

namespace {

int cmd_construct(const std::string& spec, int n, const std::string& output, std::ostream& out) {
  BuiltConstruction built = build_construction(parse_construction(spec), n);
  json doc{{"command", "construct"}, {"kind", built.kind}, {"n", n}, {"size", built.family.size()}};
  LevelProfile profile = profile_of(built.family);
  json counts = json::array();
  for (const Rational& c : profile.counts) counts.push_back(to_u64(c));
  doc["profile"] = counts;
  if (built.residue) doc["residue"] = *built.residue;
  if (!output.empty()) {
    write_family_file(output, built.family);
    doc["output"] = output;
  }
  out << doc.dump(2) << "\n";
  return kExitOk;
}

int cmd_verify(const std::string& predicate_text, const std::string& input,
               const std::string& strategy_name, std::size_t max_violations, std::ostream& out) {
  ConflictPredicate predicate = ConflictPredicate::parse(predicate_text);
  SetFamily family = read_family_file(input);
  VerifyStrategy strategy =
      strategy_name == "level-shortcut" ? VerifyStrategy::level_shortcut : VerifyStrategy::pairwise;
  VerificationReport report = verify_family(family, predicate, strategy, max_violations);
  json doc{{"command", "verify"},
           {"predicate", predicate.to_string()},
           {"n", family.n()},
           {"size", family.size()},
           {"strategy", strategy == VerifyStrategy::pairwise ? "pairwise" : "level-shortcut"},
           {"valid", report.valid},
           {"violations", violations_to_json(report.violations)}};
  out << doc.dump(2) << "\n";
  return report.valid ? kExitOk : kExitValidationFailure;
}

int cmd_solve(int n, const std::string& predicate_text, double timeout, bool heuristic,
              std::size_t max_universe, bool with_witness, std::ostream& out) {
  ConflictPredicate predicate = ConflictPredicate::parse(predicate_text);
  SearchBudget budget;
  budget.time_limit_seconds = timeout;
  budget.deterministic = !heuristic;
  budget.max_universe = max_universe;
  SearchResult result = max_family(n, predicate, budget);
  json doc{{"command", "solve"},
           {"n", n},
           {"predicate", predicate.to_string()},
           {"size", result.size},
           {"status", result.status == SearchStatus::proved_optimal ? "proved-optimal"
                                                                    : "lower-bound-only"},
           {"nodes_expanded", result.nodes_expanded}};
  if (with_witness) {
    json witness = json::array();
    for (SubsetWord w : result.witness.members()) witness.push_back(set_to_json(w));
    doc["witness"] = witness;
  }
  out << doc.dump(2) << "\n";
  return kExitOk;
}

int cmd_lp_bound(int n, int p, int q, bool jk, std::ostream& out) {
  LinearProgram lp = build_lp(n, p, q, jk ? LpVariant::jk_only : LpVariant::full);
  LPSolution sol = solve_lp_exact(lp);
  json profile = json::array();
  for (const Rational& x : sol.profile.counts) profile.push_back(format_rational(x));
  json doc{{"command", "lp-bound"},
           {"n", n},
           {"p", p},
           {"q", q},
           {"variant", jk ? "jk" : "full"},
           {"optimum", format_rational(sol.optimum)},
           {"profile", profile},
           {"unique", sol.uniqueness == Uniqueness::unique}};
  out << doc.dump(2) << "\n";
  return kExitOk;
}

int cmd_chains_12(int n, int l, std::uint64_t trials, std::uint64_t seed,
                  const std::string& input, std::ostream& out) {
  std::optional<SetFamily> family;
  if (!input.empty()) family = read_family_file(input);
  bool identity_ok = true;
  double sum = 0, sum_sq = 0;
  for (std::uint64_t t = 0; t < trials && identity_ok; ++t) {
    ChainFamily fam = chain_family_12(random_ordering(n, trial_seed(seed, t)), l);
    for (std::size_t i = 0; i < fam.chains.size() && identity_ok; ++i) {
      if (card(fam.chains[i]) != l + static_cast<int>(i)) identity_ok = false;
      for (std::size_t j = i + 1; j < fam.chains.size() && identity_ok; ++j)
        if (diff_count(fam.chains[j], fam.chains[i]) !=
            2 * diff_count(fam.chains[i], fam.chains[j]))
          identity_ok = false;
    }
    if (family) {
      int hits = 0;
      for (SubsetWord c : fam.chains)
        if (family->contains(c)) ++hits;
      sum += hits;
      sum_sq += static_cast<double>(hits) * hits;
    }
  }
  json doc{{"command", "chains"}, {"n", n}, {"l", l},
           {"trials", trials},    {"seed", seed},
           {"identity", identity_ok ? "pass" : "fail"}};
  if (family) {
    double mean = sum / static_cast<double>(trials);
    double variance =
        trials <= 1 ? 0.0
                    : (sum_sq - sum * sum / static_cast<double>(trials)) /
                          (static_cast<double>(trials) - 1.0);
    doc["mean"] = mean;
    doc["stderr"] = std::sqrt(std::max(0.0, variance) / static_cast<double>(trials));
  }
  out << doc.dump(2) << "\n";
  return identity_ok ? kExitOk : kExitValidationFailure;
}

int cmd_chains_pq(int n, int p, int q, int k, std::uint64_t trials, std::uint64_t seed,
                  std::ostream& out) {
  std::vector<Window> classes = window_sets_pq(n, p, q);
  bool identity_ok = true;
  int chain_count = -1;
  for (std::uint64_t t = 0; t < trials && identity_ok; ++t) {
    ChainFamily fam = chain_family_pq(random_ordering(n, trial_seed(seed, t)), p, q, k);
    chain_count = static_cast<int>(fam.chains.size());
    for (std::size_t i = 0; i < fam.chains.size() && identity_ok; ++i) {
      int size = card(fam.chains[i]);
      const Window& cls = classes[k];
      if (std::find(cls.begin(), cls.end(), size) == cls.end()) identity_ok = false;
      for (std::size_t j = i + 1; j < fam.chains.size() && identity_ok; ++j)
        if (q * diff_count(fam.chains[i], fam.chains[j]) !=
            p * diff_count(fam.chains[j], fam.chains[i]))
          identity_ok = false;
    }
  }
  json doc{{"command", "chains"},
           {"n", n},
           {"p", p},
           {"q", q},
           {"k", k},
           {"trials", trials},
           {"seed", seed},
           {"chains", chain_count},
           {"identity", identity_ok ? "pass" : "fail"}};
  out << doc.dump(2) << "\n";
  return identity_ok ? kExitOk : kExitValidationFailure;
}

int cmd_shadow(const std::string& input, int k, std::ostream& out) {
  SetFamily family = read_family_file(input);
  ShadowResult result = k_shadow(family, k);
  AntichainCheck antichain = is_antichain(result.shadow);
  json doc{{"command", "shadow"},
           {"n", family.n()},
           {"k", k},
           {"source_size", family.size()},
           {"shadow_size", result.shadow.size()},
           {"identity_sum", result.identity_sum.str()},
           {"identity_holds", result.identity_holds},
           {"antichain", antichain.antichain}};
  if (antichain.witness)
    doc["containment_witness"] =
        json{{"a", set_to_json(antichain.witness->first)}, {"b", set_to_json(antichain.witness->second)}};
  out << doc.dump(2) << "\n";
  return kExitOk;
}

int cmd_bounds_windows(const SetFamily& family, const std::string& mode, int p, int q,
                       std::ostream& out) {
  std::vector<Window> windows =
      mode == "12" ? window_sets_12(family.n()) : window_sets_pq(family.n(), p, q);
  WindowCheck check = check_windows(profile_of(family), windows);
  json wjson = json::array(), sums = json::array();
  for (const Window& w : windows) wjson.push_back(w);
  for (const Rational& s : check.sums) sums.push_back(format_rational(s));
  json doc{{"command", "bounds"},
           {"mode", mode == "12" ? "windows12" : "windowsjk"},
           {"n", family.n()},
           {"windows", wjson},
           {"sums", sums},
           {"pass", check.pass}};
  out << doc.dump(2) << "\n";
  return check.pass ? kExitOk : kExitValidationFailure;
}

int cmd_bounds_dist1(const SetFamily& family, std::ostream& out) {
  Distance1Report report = distance1_level_bound(family);
  json doc{{"command", "bounds"}, {"mode", "dist1"}, {"n", family.n()},
           {"family_valid", report.family_valid}};
  if (!report.family_valid) {
    doc["violations"] = violations_to_json(report.violations);
    doc["pass"] = false;
  } else {
    json rows = json::array();
    for (const LevelBoundRow& row : report.rows)
      rows.push_back(json{{"level", row.level},
                          {"members", row.members.str()},
                          {"lhs", row.lhs.str()},
                          {"rhs", row.rhs.str()},
                          {"pass", row.pass}});
    doc["levels"] = rows;
    doc["pass"] = report.pass;
  }
  out << doc.dump(2) << "\n";
  return report.family_valid && report.pass ? kExitOk : kExitValidationFailure;
}

int cmd_bounds_atmost(const SetFamily& family, int k, std::ostream& out) {
  AtMostKReport report = atmostk_weight_bound(family, k);
  json doc{{"command", "bounds"}, {"mode", "atmostk"}, {"n", family.n()}, {"k", k},
           {"family_valid", report.family_valid}};
  if (!report.family_valid) {
    doc["violations"] = violations_to_json(report.violations);
    doc["pass"] = false;
  } else {
    doc["weight"] = report.weight.str();
    doc["bound"] = report.bound.str();
    doc["pass"] = report.pass;
  }
  out << doc.dump(2) << "\n";
  return report.family_valid && report.pass ? kExitOk : kExitValidationFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"tiltcube: families of subsets avoiding tilted Sperner configurations"};
  app.require_subcommand(1);

  // construct
  auto* construct = app.add_subcommand("construct", "build a named family and optionally write it");
  std::string construct_spec, construct_output;
  int construct_n = 0;
  construct->add_option("--family", construct_spec,
                        "b0 | levels:0,2,4 | interval:p:q[:anchor] | modular[:r] | powersum:k")
      ->required();
  construct->add_option("--n", construct_n, "ground set size")->required();
  construct->add_option("-o,--output", construct_output, "family file to write");

  // verify
  auto* verify = app.add_subcommand("verify", "check a family file against a predicate");
  std::string verify_predicate, verify_input, verify_strategy = "pairwise";
  std::size_t verify_max_violations = 16;
  verify->add_option("--predicate", verify_predicate, "ratio:P:Q | dist:K | distle:K | antichain")
      ->required();
  verify->add_option("--input", verify_input, "family file")->required();
  verify->add_option("--strategy", verify_strategy, "pairwise | level-shortcut")
      ->check(CLI::IsMember({"pairwise", "level-shortcut"}));
  verify->add_option("--max-violations", verify_max_violations, "violation report cap");

  // solve
  auto* solve = app.add_subcommand("solve", "exact maximum valid family");
  int solve_n = 0;
  std::string solve_predicate;
  double solve_timeout = 60.0;
  bool solve_heuristic = false, solve_deterministic = false, solve_witness = false;
  std::size_t solve_universe = std::size_t{1} << 14;
  solve->add_option("--n", solve_n, "ground set size")->required();
  solve->add_option("--predicate", solve_predicate, "predicate string")->required();
  solve->add_option("--timeout", solve_timeout, "time budget in seconds");
  solve->add_flag("--deterministic", solve_deterministic,
                  "lex-smallest optimal witness (default)");
  solve->add_flag("--heuristic", solve_heuristic, "max-degree branching instead");
  solve->add_flag("--witness", solve_witness, "include the witness family in the output");
  solve->add_option("--max-universe", solve_universe, "vertex cap for the conflict graph");

  // lp-bound
  auto* lp_bound = app.add_subcommand("lp-bound", "exact window LP optimum");
  int lp_n = 0, lp_p = 1, lp_q = 2;
  bool lp_full = false, lp_jk = false;
  lp_bound->add_option("--n", lp_n, "ground set size")->required();
  lp_bound->add_option("--p", lp_p, "ratio numerator");
  lp_bound->add_option("--q", lp_q, "ratio denominator");
  lp_bound->add_flag("--full", lp_full, "all half/double windows (ratio 1:2 only)");
  lp_bound->add_flag("--jk", lp_jk, "residue-class windows only");

  // chains
  auto* chains = app.add_subcommand("chains", "seeded chain-family identities and hit counts");
  int chains_n = 0, chains_l = -1, chains_p = 0, chains_q = 0, chains_k = -1;
  std::uint64_t chains_trials = 10000, chains_seed = 0;
  std::string chains_input;
  chains->add_option("--n", chains_n, "ground set size")->required();
  chains->add_option("--l", chains_l, "chain parameter (ratio 1:2 mode)");
  chains->add_option("--p", chains_p, "ratio numerator (p:q mode)");
  chains->add_option("--q", chains_q, "ratio denominator (p:q mode)");
  chains->add_option("--k", chains_k, "window class (p:q mode)");
  chains->add_option("--trials", chains_trials, "number of seeded orderings");
  chains->add_option("--seed", chains_seed, "master seed");
  chains->add_option("--input", chains_input, "family file for the hit-count mean");

  // shadow
  auto* shadow = app.add_subcommand("shadow", "k-shadow, identity count and antichain check");
  std::string shadow_input;
  int shadow_k = 1;
  shadow->add_option("--input", shadow_input, "family file")->required();
  shadow->add_option("--k", shadow_k, "shadow order")->required();

  // bounds
  auto* bounds = app.add_subcommand("bounds", "window / distance bounds on a family file");
  std::string bounds_input, bounds_windows;
  int bounds_p = 1, bounds_q = 2, bounds_atmost = -1;
  bool bounds_dist1 = false;
  bounds->add_option("--input", bounds_input, "family file")->required();
  bounds->add_option("--windows", bounds_windows, "12 | jk")
      ->check(CLI::IsMember({"12", "jk"}));
  bounds->add_option("--p", bounds_p, "ratio numerator for --windows jk");
  bounds->add_option("--q", bounds_q, "ratio denominator for --windows jk");
  bounds->add_flag("--dist1", bounds_dist1, "per-level double-count bound for dist:1 families");
  bounds->add_option("--atmost", bounds_atmost, "weight bound for distle:K families");

  // table
  auto* table = app.add_subcommand("table", "reproduction table as CSV");
  int table_min = 1, table_max = 12, table_exact = 6;
  double table_timeout = 60.0;
  table->add_option("--min-n", table_min, "first row");
  table->add_option("--max-n", table_max, "last row");
  table->add_option("--exact-max-n", table_exact, "run exact search up to this n");
  table->add_option("--timeout", table_timeout, "per-search time budget in seconds");

  std::vector<const char*> argv;
  argv.push_back("tiltcube");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (construct->parsed())
      return cmd_construct(construct_spec, construct_n, construct_output, out);
    if (verify->parsed())
      return cmd_verify(verify_predicate, verify_input, verify_strategy, verify_max_violations,
                        out);
    if (solve->parsed())
      return cmd_solve(solve_n, solve_predicate, solve_timeout, solve_heuristic, solve_universe,
                       solve_witness, out);
    if (lp_bound->parsed()) {
      if (lp_full == lp_jk) throw std::invalid_argument("pick exactly one of --full / --jk");
      return cmd_lp_bound(lp_n, lp_p, lp_q, lp_jk, out);
    }
    if (chains->parsed()) {
      if (chains_p > 0 || chains_q > 0) {
        if (chains_k < 0) throw std::invalid_argument("p:q mode needs --k");
        return cmd_chains_pq(chains_n, chains_p, chains_q, chains_k, chains_trials, chains_seed,
                             out);
      }
      if (chains_l < 0) throw std::invalid_argument("ratio 1:2 mode needs --l");
      return cmd_chains_12(chains_n, chains_l, chains_trials, chains_seed, chains_input, out);
    }
    if (shadow->parsed()) return cmd_shadow(shadow_input, shadow_k, out);
    if (bounds->parsed()) {
      int modes = (bounds_windows.empty() ? 0 : 1) + (bounds_dist1 ? 1 : 0) +
                  (bounds_atmost >= 0 ? 1 : 0);
      if (modes != 1)
        throw std::invalid_argument("pick exactly one of --windows / --dist1 / --atmost");
      SetFamily family = read_family_file(bounds_input);
      if (!bounds_windows.empty())
        return cmd_bounds_windows(family, bounds_windows, bounds_p, bounds_q, out);
      if (bounds_dist1) return cmd_bounds_dist1(family, out);
      return cmd_bounds_atmost(family, bounds_atmost, out);
    }
    if (table->parsed()) {
      write_table_csv(out, reproduction_table(table_min, table_max, table_exact, table_timeout));
      return kExitOk;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace tiltcube
