#include "interleave/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "interleave/constants.hpp"
#include "interleave/cuts_profiles.hpp"
#include "interleave/errors.hpp"
#include "interleave/exact_counts.hpp"
#include "interleave/parser.hpp"
#include "interleave/run_sampling.hpp"
#include "interleave/selfcheck.hpp"
#include "interleave/semantic_tree.hpp"
#include "interleave/sweeps.hpp"
#include "interleave/tree_io.hpp"

namespace interleave {
namespace {

using nlohmann::ordered_json;

struct Options {
  std::string term;
  std::string input;
  bool forest = false;
  std::string format = "text";
  std::string prefix;
  std::size_t samples = 10;
  std::uint64_t seed = 1;
  bool freq = false;
  bool oracle = false;
  std::uint64_t budget = kDefaultSemanticBudget;
  std::string seq_name;
  std::size_t to = 10;
  std::size_t size = 10;
};

SyntaxTree load_tree(const Options& o) {
  if (!o.input.empty()) {
    std::ifstream in(o.input);
    if (!in) throw std::invalid_argument("cannot read " + o.input);
    std::stringstream buf;
    buf << in.rdbuf();
    return read_tree(buf.str(), o.forest);
  }
  if (o.term.empty()) throw std::invalid_argument("a term or --input is required");
  return read_tree(o.term, o.forest);
}

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (o.format == f) return;
  throw std::invalid_argument("format " + o.format + " is not available for this command");
}

std::string big(const BigInt& v) { return v >= 1'000'000'000 ? decimal_and_scientific(v) : v.get_str(); }

ordered_json ratio_json(const Rational& r) { return ordered_json::array({r.get_num().get_str(), r.get_den().get_str()}); }

int cmd_count(const Options& o, std::ostream& out) {
  require_format(o, {"text", "json"});
  const WeightedTree t(load_tree(o));
  const BigInt hook = hook_count(t);
  const BigInt dual = count_runs_via_probability(t);
  if (hook != dual) throw std::logic_error("run count methods disagree: " + hook.get_str() + " vs " + dual.get_str());
  if (o.format == "json") {
    out << ordered_json{{"size", t.size()}, {"runs", hook.get_str()}, {"runs_via_probability", dual.get_str()}}.dump()
        << '\n';
  } else {
    out << big(hook) << '\n' << "via 1/rho: " << big(dual) << '\n';
  }
  return kExitOk;
}

int cmd_prob(const Options& o, std::ostream& out) {
  require_format(o, {"text", "json"});
  const WeightedTree t(load_tree(o));
  const RunPrefix p = parse_prefix(t.tree(), o.prefix);
  const Rational r = prefix_probability(t, p);
  const std::string approx = Real(r, 64).str(12);
  if (o.format == "json") {
    out << ordered_json{{"prefix", format_run(t.tree(), p)}, {"probability", to_string(r)}, {"approx", approx}}.dump()
        << '\n';
  } else {
    out << to_string(r) << '\n' << approx << '\n';
  }
  return kExitOk;
}

int cmd_sample(const Options& o, std::ostream& out) {
  require_format(o, {"text", "json"});
  const WeightedTree t(load_tree(o));
  const std::vector<Run> runs = sample_runs(t, o.seed, o.samples);
  std::map<std::string, std::size_t> freq;
  if (o.format == "json") {
    ordered_json doc{{"seed", o.seed}, {"rng", std::string(Rng::kAlgorithm)}, {"runs", ordered_json::array()}};
    for (const Run& r : runs) {
      ordered_json steps = ordered_json::array();
      for (const Rational& s : step_probabilities(t, r)) steps.push_back(ratio_json(s));
      doc["runs"].push_back({{"run", format_run(t.tree(), r)}, {"steps", steps}});
      ++freq[format_run(t.tree(), r)];
    }
    if (o.freq) {
      doc["frequencies"] = ordered_json::object();
      for (const auto& [run, k] : freq) doc["frequencies"][run] = k;
    }
    out << doc.dump() << '\n';
    return kExitOk;
  }
  for (const Run& r : runs) {
    const std::string s = format_run(t.tree(), r);
    out << s << '\n';
    ++freq[s];
  }
  if (o.freq) {
    out << "# frequencies over " << runs.size() << " runs\n";
    for (const auto& [run, k] : freq) out << k << '\t' << run << '\n';
  }
  return kExitOk;
}

int cmd_profile(const Options& o, std::ostream& out) {
  require_format(o, {"text", "csv", "json"});
  const SyntaxTree t = load_tree(o);
  const LevelProfile p = level_profile(t, o.oracle ? ProfileMethod::oracle : ProfileMethod::fast);
  if (o.format == "json") {
    ordered_json rows = ordered_json::array();
    for (std::size_t l = 0; l < p.size(); ++l)
      rows.push_back({{"level", l}, {"count", p.counts[l].get_str()}, {"log10", log_double(p.counts[l]) / std::log(10.0)}});
    out << ordered_json{{"size", t.size()}, {"total", p.total().get_str()}, {"profile", rows}}.dump() << '\n';
  } else if (o.format == "csv") {
    out << "level,count\n";
    for (std::size_t l = 0; l < p.size(); ++l) out << l << ',' << p.counts[l].get_str() << '\n';
  } else {
    for (std::size_t l = 0; l < p.size(); ++l) out << l << '\t' << big(p.counts[l]) << '\n';
    out << "total\t" << big(p.total()) << '\n';
  }
  return kExitOk;
}

int cmd_semantic(const Options& o, std::ostream& out) {
  require_format(o, {"text", "dot", "json"});
  const SemanticTree s = build_semantic_tree(load_tree(o), o.budget);
  if (o.format == "json") {
    ordered_json levels = ordered_json::array();
    for (auto c : s.level_counts()) levels.push_back(c);
    out << ordered_json{{"size", s.size()}, {"leaves", s.leaf_count()}, {"levels", levels}}.dump() << '\n';
  } else {
    out << to_dot(s);
  }
  return kExitOk;
}

struct SeqRow {
  std::size_t n;
  std::string value;
  std::string ratio;  // empty when no asymptotic is defined
};

std::vector<SeqRow> sequence_rows(const std::string& name, std::size_t N) {
  std::vector<SeqRow> rows;
  auto exact = [](const Rational& r) { return to_string(r); };
  if (name == "catalan") {
    for (std::size_t n = 1; n <= N; ++n) {
      // C_{n-1} ~ 4^{n-1} / (sqrt(π) n^{3/2}) with the shifted index
      const double m = static_cast<double>(n - 1);
      const BigInt c = catalan(n);
      std::string ratio;
      if (n > 1)
        ratio = Real(std::exp(log_double(c) - (m * std::log(4.0) - 0.5 * std::log(std::numbers::pi) - 1.5 * std::log(m)))).str(10);
      rows.push_back({n, c.get_str(), ratio});
    }
  } else if (name == "increasing") {
    for (std::size_t n = 1; n <= N; ++n) rows.push_back({n, increasing_count(n).get_str(), {}});
  } else if (name == "mean_width") {
    for (std::size_t n = 1; n <= N; ++n) rows.push_back({n, exact(mean_width(n)), {}});
  } else if (name == "mean_size") {
    const std::vector<Rational> s = mean_size_sequence(N);
    for (std::size_t n = 0; n <= N; ++n) {
      std::string ratio;
      if (n >= 1) ratio = (Real(s[n], 192) / asymptotic_size(n).value).str(10);
      rows.push_back({n, exact(s[n]), ratio});
    }
  } else if (name == "m_cuts") {
    const std::vector<BigInt> m =
        N >= 4 ? cut_count_sequence(N, CutCountMethod::recurrence) : cut_count_sequence(N, CutCountMethod::brute);
    for (std::size_t n = 0; n <= N; ++n) rows.push_back({n, m[n].get_str(), {}});
  } else if (name == "r_seq") {
    const std::vector<Rational> r = r_sequence(N);
    for (std::size_t n = 0; n <= N; ++n) rows.push_back({n, exact(r[n]), {}});
  } else if (name == "nonplane") {
    const std::vector<BigInt> t = nonplane_sequence(N);
    for (std::size_t n = 1; n <= N; ++n) rows.push_back({n, t[n].get_str(), {}});
  } else if (name == "geomean") {
    for (std::size_t n = 2; n <= N; ++n) rows.push_back({n, geometric_mean_width(n).value.str(15), {}});
  } else {
    throw std::invalid_argument("unknown sequence " + name);
  }
  return rows;
}

int cmd_seq(const Options& o, std::ostream& out) {
  require_format(o, {"text", "csv", "json"});
  const std::vector<SeqRow> rows = sequence_rows(o.seq_name, o.to);
  const bool has_ratio = std::any_of(rows.begin(), rows.end(), [](const SeqRow& r) { return !r.ratio.empty(); });
  if (o.format == "json") {
    ordered_json arr = ordered_json::array();
    for (const SeqRow& r : rows) {
      ordered_json row{{"n", r.n}, {"value", r.value}};
      if (!r.ratio.empty()) row["ratio"] = r.ratio;
      arr.push_back(row);
    }
    out << ordered_json{{"sequence", o.seq_name}, {"rows", arr}}.dump() << '\n';
  } else if (o.format == "csv") {
    // Exact values split into numerator and denominator; real values stay whole.
    const bool exact = o.seq_name != "geomean";
    out << (exact ? "n,numerator,denominator" : "n,value") << (has_ratio ? ",ratio" : "") << '\n';
    for (const SeqRow& r : rows) {
      out << r.n << ',';
      if (exact) {
        const std::size_t slash = r.value.find('/');
        out << r.value.substr(0, slash) << ',' << (slash == std::string::npos ? "1" : r.value.substr(slash + 1));
      } else {
        out << r.value;
      }
      out << (has_ratio ? "," + r.ratio : "") << '\n';
    }
  } else {
    for (const SeqRow& r : rows) out << r.n << '\t' << r.value << (r.ratio.empty() ? "" : "\t" + r.ratio) << '\n';
  }
  return kExitOk;
}

int cmd_gen(const Options& o, std::ostream& out) {
  require_format(o, {"text", "json", "dot"});
  Rng rng(o.seed);
  const SyntaxTree t = uniform_random_tree(o.size, rng);
  if (o.format == "json") out << to_json(t) << '\n';
  else if (o.format == "dot") out << to_dot(t);
  else out << to_term_string(t) << '\n';
  return kExitOk;
}

int cmd_selftest(const Options& o, std::ostream& out) {
  require_format(o, {"text", "json"});
  const std::vector<CheckResult> results = run_selfchecks();
  const bool ok = std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
  if (o.format == "json") {
    ordered_json arr = ordered_json::array();
    for (const CheckResult& r : results) arr.push_back({{"check", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    out << ordered_json{{"passed", ok}, {"checks", arr}}.dump() << '\n';
  } else {
    for (const CheckResult& r : results)
      out << (r.passed ? "PASS " : "FAIL ") << r.name << (r.detail.empty() ? "" : ": " + r.detail) << '\n';
  }
  return ok ? kExitOk : kExitSelftest;
}

void add_term(CLI::App* cmd, Options& o) {
  cmd->add_option("term", o.term, "process term, e.g. \"a.b.(c || d)\"");
  cmd->add_option("--input", o.input, "read the term (or JSON tree) from a file");
  cmd->add_flag("--forest", o.forest, "accept a top-level parallel composition");
}

void add_format(CLI::App* cmd, Options& o, std::initializer_list<const char*> formats) {
  std::vector<std::string> names(formats.begin(), formats.end());
  cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember(names));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Counting and sampling the runs of interleaved processes", "interleave"};
  app.set_version_flag("--version", std::string("interleave ") + kVersion + " (rng " + std::string(Rng::kAlgorithm) +
                                        " v" + std::to_string(Rng::kVersion) + ")");
  app.require_subcommand(1);

  auto* count = app.add_subcommand("count", "number of runs, by hook lengths and by 1/probability");
  add_term(count, o);
  add_format(count, o, {"text", "json"});

  auto* prob = app.add_subcommand("prob", "probability of a run prefix");
  add_term(prob, o);
  prob->add_option("--prefix", o.prefix, "actions, e.g. a,b,d or a#1,b#2")->required();
  add_format(prob, o, {"text", "json"});

  auto* sample = app.add_subcommand("sample", "uniform random runs");
  add_term(sample, o);
  sample->add_option("--samples", o.samples, "number of runs");
  sample->add_option("--seed", o.seed, "generator seed");
  sample->add_flag("--freq", o.freq, "append a frequency table");
  add_format(sample, o, {"text", "json"});

  auto* profile = app.add_subcommand("profile", "semantic-tree node counts per level");
  add_term(profile, o);
  profile->add_flag("--oracle", o.oracle, "enumerate admissible cuts instead of the fast method");
  add_format(profile, o, {"text", "csv", "json"});

  auto* semantic = app.add_subcommand("semantic", "explicit semantic tree");
  add_term(semantic, o);
  semantic->add_option("--budget", o.budget, "maximum number of nodes");
  add_format(semantic, o, {"text", "dot", "json"});

  auto* seq = app.add_subcommand("seq", "counting sequences");
  seq->add_option("name", o.seq_name, "catalan, increasing, mean_width, mean_size, m_cuts, r_seq, nonplane, geomean")
      ->required();
  seq->add_option("--to", o.to, "last index");
  add_format(seq, o, {"text", "csv", "json"});

  auto* gen = app.add_subcommand("gen", "uniform random process term");
  gen->add_option("--size", o.size, "number of actions");
  gen->add_option("--seed", o.seed, "generator seed");
  add_format(gen, o, {"text", "json", "dot"});

  auto* selftest = app.add_subcommand("selftest", "run the built-in invariant checks");
  add_format(selftest, o, {"text", "json"});

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (count->parsed()) return cmd_count(o, out);
    if (prob->parsed()) return cmd_prob(o, out);
    if (sample->parsed()) return cmd_sample(o, out);
    if (profile->parsed()) return cmd_profile(o, out);
    if (semantic->parsed()) return cmd_semantic(o, out);
    if (seq->parsed()) return cmd_seq(o, out);
    if (gen->parsed()) return cmd_gen(o, out);
    return cmd_selftest(o, out);
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace interleave
