#include "dsel/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "delimited.hpp"
#include "dsel/dataset.hpp"
#include "dsel/distribution.hpp"
#include "dsel/error.hpp"
#include "dsel/estimator.hpp"
#include "dsel/montecarlo.hpp"
#include "dsel/oracle.hpp"
#include "dsel/rng.hpp"
#include "dsel/selection.hpp"
#include "format.hpp"

namespace dsel::cli {

namespace {

using detail::fixed;
using detail::full_precision;
using nlohmann::json;

enum class Format { human, delimited, structured };

struct GlobalOptions {
  std::uint64_t seed = 0;
  std::string output;
  Format format = Format::human;
  bool verbose = false;
  std::string class_column = "class";
  bool tab = false;

  CsvOptions csv() const { return CsvOptions{tab ? '\t' : ',', class_column}; }
  char delimiter() const { return tab ? '\t' : ','; }
};

void add_globals(CLI::App& app, GlobalOptions& g) {
  app.add_option("--seed", g.seed, "Random seed (echoed in all output)")->capture_default_str();
  app.add_option("-o,--output", g.output, "Write output to this file instead of stdout");
  const std::map<std::string, Format> formats{
      {"human", Format::human}, {"delimited", Format::delimited}, {"structured", Format::structured}};
  app.add_option("--format", g.format, "Output format: human, delimited or structured (JSON)")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case).description(""))
      ->option_text("human|delimited|structured")
      ->capture_default_str();
  app.add_flag("-v,--verbose", g.verbose, "Progress and diagnostics on stderr");
  app.add_option("--class-column", g.class_column, "Name of the 0/1 class column")->capture_default_str();
  app.add_flag("--tab", g.tab, "Input and delimited output use tabs instead of commas");
}

std::string score_text(double k) {
  if (k >= kScoreCap) {
    return "+CAP";
  }
  if (k <= -kScoreCap) {
    return "-CAP";
  }
  return fixed(k, 4);
}

std::string set_names(const VariableSet& vars, const std::vector<std::string>& names) {
  std::string out = "{";
  for (std::size_t i = 0; i < vars.size(); ++i) {
    out += (i ? ", " : "") + names.at(vars[i].index);
  }
  return out + "}";
}

json estimate_json(const EntropyEstimate& e, const std::vector<std::string>& names) {
  json vars = json::array();
  for (auto v : e.subset) {
    vars.push_back(names.at(v.index));
  }
  return {{"h_est", e.h_est}, {"sigma_est", e.sigma_est}, {"n_sub", e.n_sub_used}, {"subset", vars}};
}

json candidate_json(const CandidateScore& c, const std::vector<std::string>& names) {
  return {{"variable", names.at(c.variable.index)},
          {"estimate", estimate_json(c.estimate, names)},
          {"k", c.k},
          {"f", c.f}};
}

Correction parse_correction(const std::string& s) {
  if (s == "miller_madow" || s == "mm") {
    return Correction::miller_madow;
  }
  if (s == "none") {
    return Correction::none;
  }
  throw InputError("unknown correction '" + s + "' (expected miller_madow or none)");
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto t = detail::trim(item);
    if (!t.empty()) {
      out.emplace_back(t);
    }
  }
  return out;
}

JointDistribution resolve_distribution(const std::string& spec, const GlobalOptions& g) {
  if (spec == kCaseStudyName) {
    return case_study_distribution();
  }
  return load_distribution(spec, g.csv());
}

// ---------------------------------------------------------------- select

struct SelectOptions {
  std::string data;
  double k_min = 0.01;
  double f_min = 0.0;
  std::size_t n_sub = 100;
  std::size_t max_iterations = 0;
  std::string correction = "miller_madow";
};

void print_scoreboard(std::ostream& out, const std::vector<CandidateScore>& candidates,
                      const std::vector<std::string>& names, std::optional<VariableId> chosen) {
  out << "    " << std::left << std::setw(16) << "candidate" << std::right << std::setw(10) << "h_est"
      << std::setw(10) << "sigma" << std::setw(12) << "k" << std::setw(10) << "f" << '\n';
  for (const auto& c : candidates) {
    const bool mark = chosen && c.variable == *chosen;
    out << "  " << (mark ? "* " : "  ") << std::left << std::setw(16) << names.at(c.variable.index) << std::right
        << std::setw(10) << fixed(c.estimate.h_est, 4) << std::setw(10) << fixed(c.estimate.sigma_est, 4)
        << std::setw(12) << score_text(c.k) << std::setw(10) << fixed(c.f, 4) << '\n';
  }
}

void emit_select(std::ostream& out, const SelectionTrace& trace, const Dataset& data, const GlobalOptions& g) {
  const auto& names = data.variable_names();
  if (g.format == Format::structured) {
    json j;
    j["kind"] = "selection_trace";
    j["generator"] = std::string(kGeneratorId);
    j["seed"] = g.seed;
    j["config"] = to_json(trace.config);
    j["dataset"] = {{"rows", trace.fingerprint.rows},
                    {"variables", trace.fingerprint.variables},
                    {"content_hash", trace.fingerprint.content_hash}};
    j["steps"] = json::array();
    for (const auto& step : trace.steps) {
      json candidates = json::array();
      for (const auto& c : step.candidates) {
        candidates.push_back(candidate_json(c, names));
      }
      j["steps"].push_back({{"iteration", step.iteration},
                            {"chosen", names.at(step.chosen.index)},
                            {"chosen_estimate", estimate_json(step.chosen_estimate, names)},
                            {"k_star", step.k_star},
                            {"f_star", step.f_star},
                            {"entropy_reduction_lower_bound", step.entropy_reduction_lower_bound},
                            {"candidates", candidates}});
    }
    json rejected = json::array();
    for (const auto& c : trace.rejected_candidates) {
      rejected.push_back(candidate_json(c, names));
    }
    j["final_candidates"] = rejected;
    j["termination"] = std::string(to_string(trace.termination));
    json selected = json::array();
    for (const auto& step : trace.steps) {
      selected.push_back(names.at(step.chosen.index));
    }
    j["selected"] = selected;
    out << j.dump(2) << '\n';
    return;
  }

  if (g.format == Format::delimited) {
    const char d = g.delimiter();
    out << "# seed=" << g.seed << " generator=" << kGeneratorId << " termination=" << to_string(trace.termination)
        << '\n';
    out << "iteration" << d << "variable" << d << "h_est" << d << "sigma_est" << d << "k" << d << "f" << d << "chosen"
        << d << "delta_h_lower_bound\n";
    auto rows = [&](std::size_t iteration, const std::vector<CandidateScore>& cands, const SelectionStep* step) {
      for (const auto& c : cands) {
        const bool chosen = step && step->chosen == c.variable;
        out << iteration << d << names.at(c.variable.index) << d << full_precision(c.estimate.h_est) << d
            << full_precision(c.estimate.sigma_est) << d << full_precision(c.k) << d << full_precision(c.f) << d
            << (chosen ? 1 : 0) << d << (chosen ? full_precision(step->entropy_reduction_lower_bound) : "") << '\n';
      }
    };
    for (const auto& step : trace.steps) {
      rows(step.iteration, step.candidates, &step);
    }
    rows(trace.steps.size() + 1, trace.rejected_candidates, nullptr);
    return;
  }

  out << "Differential set selection\n";
  out << "  rows: " << trace.fingerprint.rows << "  variables: " << trace.fingerprint.variables
      << "  seed: " << g.seed << "  n_sub: " << trace.config.estimator.n_sub
      << "  correction: " << to_string(trace.config.estimator.correction) << '\n';
  out << "  k_min: " << trace.config.k_min << "  f_min: " << trace.config.f_min << "  generator: " << kGeneratorId
      << "\n\n";
  out << std::left << std::setw(6) << "iter" << std::setw(16) << "chosen" << std::right << std::setw(20)
      << "h_est +/- sigma" << std::setw(12) << "k" << std::setw(10) << "f" << std::setw(14) << "dH lower bnd"
      << '\n';
  for (const auto& step : trace.steps) {
    out << std::left << std::setw(6) << step.iteration << std::setw(16) << names.at(step.chosen.index) << std::right
        << std::setw(20)
        << (fixed(step.chosen_estimate.h_est, 4) + " +/- " + fixed(step.chosen_estimate.sigma_est, 4))
        << std::setw(12) << score_text(step.k_star) << std::setw(10) << fixed(step.f_star, 4) << std::setw(14)
        << fixed(step.entropy_reduction_lower_bound, 4) << '\n';
  }
  if (trace.steps.empty()) {
    out << "  (no variable selected)\n";
  }
  for (const auto& step : trace.steps) {
    out << "\nIteration " << step.iteration << " candidates:\n";
    print_scoreboard(out, step.candidates, names, step.chosen);
  }
  if (!trace.rejected_candidates.empty()) {
    out << "\nIteration " << trace.steps.size() + 1 << " candidates (stopped):\n";
    print_scoreboard(out, trace.rejected_candidates, names, std::nullopt);
  }
  out << "\nSelected: " << set_names(trace.selected(), names) << '\n';
  out << "Termination: " << to_string(trace.termination) << '\n';
}

void cmd_select(const SelectOptions& o, const GlobalOptions& g, std::ostream& out) {
  const auto data = load_dataset(o.data, g.csv());
  SelectionConfig cfg;
  cfg.k_min = o.k_min;
  cfg.f_min = o.f_min;
  if (o.max_iterations > 0) {
    cfg.max_iterations = o.max_iterations;
  }
  cfg.estimator.n_sub = o.n_sub;
  cfg.estimator.correction = parse_correction(o.correction);
  cfg.estimator.seed = g.seed;
  const auto trace = select_differential_set(data, cfg);
  emit_select(out, trace, data, g);
}

// ---------------------------------------------------------------- entropy

struct EntropyOptions {
  std::string data;
  std::string vars;
  bool all_vars = false;
  std::size_t n_sub = 100;
  std::string correction = "miller_madow";
};

void cmd_entropy(const EntropyOptions& o, const GlobalOptions& g, std::ostream& out) {
  const auto data = load_dataset(o.data, g.csv());
  VariableSet vars;
  if (o.all_vars) {
    vars = all_variables(data.num_variables());
  } else {
    for (const auto& name : split_list(o.vars)) {
      const auto id = data.find_variable(name);
      if (!id) {
        throw InputError("unknown variable '" + name + "'");
      }
      vars.push_back(*id);
    }
    vars = make_variable_set(std::move(vars));
  }
  EstimatorConfig cfg;
  cfg.n_sub = o.n_sub;
  cfg.correction = parse_correction(o.correction);
  cfg.seed = g.seed;
  const auto est = estimate(data, vars, cfg);
  const double plug_in = conditional_entropy_once(project(data, vars), Correction::none);
  const auto& names = data.variable_names();

  if (g.format == Format::structured) {
    json j;
    j["kind"] = "entropy_estimate";
    j["generator"] = std::string(kGeneratorId);
    j["seed"] = g.seed;
    j["rows"] = data.rows();
    j["correction"] = std::string(to_string(cfg.correction));
    j["estimate"] = estimate_json(est, names);
    j["plug_in_full_sample"] = plug_in;
    out << j.dump(2) << '\n';
  } else if (g.format == Format::delimited) {
    const char d = g.delimiter();
    out << "subset" << d << "h_est" << d << "sigma_est" << d << "n_sub" << d << "plug_in" << d << "seed\n";
    std::string subset;
    for (std::size_t i = 0; i < est.subset.size(); ++i) {
      subset += (i ? "+" : "") + names.at(est.subset[i].index);
    }
    out << subset << d << full_precision(est.h_est) << d << full_precision(est.sigma_est) << d << est.n_sub_used << d
        << full_precision(plug_in) << d << g.seed << '\n';
  } else {
    out << "H(C | " << set_names(est.subset, names) << ")\n";
    out << "  estimate:     " << fixed(est.h_est, 4) << " +/- " << fixed(est.sigma_est, 4) << '\n';
    out << "  subsamples:   " << est.n_sub_used << " of " << data.rows() / 2 << " rows ("
        << to_string(cfg.correction) << ")\n";
    out << "  plug-in (all " << data.rows() << " rows): " << fixed(plug_in, 4) << '\n';
    out << "  seed: " << g.seed << '\n';
  }
}

// ---------------------------------------------------------------- simulate

struct SimulateOptions {
  std::vector<std::size_t> sizes{10, 20, 50};
  std::size_t replicates = 2000;
  double k_min = 0.01;
  double f_min = 0.0;
  std::size_t n_sub = 100;
  std::size_t max_iterations = 0;
  std::string correction = "miller_madow";
  std::string distribution = std::string(kCaseStudyName);
  std::string out_dir;
  std::size_t threads = 0;
};

void print_simulation(std::ostream& out, const SimulationReport& r) {
  out << "Simulation: " << r.distribution_name << ", " << r.replicates << " replicates per size, seed "
      << r.master_seed << ", n_sub " << r.selection.estimator.n_sub << ", k_min " << r.selection.k_min << '\n';
  out << "generator " << r.generator << ", wall time " << fixed(r.wall_seconds, 1) << " s\n";

  auto size_header = [&](std::ostream& o, int width) {
    for (const auto& s : r.sizes) {
      o << std::setw(width) << ("m=" + std::to_string(s.sample_size));
    }
    o << '\n';
  };

  out << "\nSelection frequency (% of all replicates)\n";
  out << std::left << std::setw(6) << "iter" << std::setw(12) << "variable" << std::right;
  size_header(out, 10);
  for (std::size_t it = 1; it <= r.iterations; ++it) {
    for (std::size_t v = 0; v < r.variable_names.size(); ++v) {
      out << std::left << std::setw(6) << (v == 0 ? std::to_string(it) : "") << std::setw(12) << r.variable_names[v]
          << std::right;
      for (std::size_t s = 0; s < r.sizes.size(); ++s) {
        out << std::setw(10) << fixed(r.selection_frequency(s, it, VariableId{static_cast<std::uint32_t>(v)}), 2);
      }
      out << '\n';
    }
  }

  out << "\nStops (% of replicates whose set ends at or before the iteration)\n";
  out << std::left << std::setw(6) << "iter" << std::right;
  size_header(out, 10);
  for (std::size_t it = 1; it <= r.iterations; ++it) {
    out << std::left << std::setw(6) << it << std::right;
    for (std::size_t s = 0; s < r.sizes.size(); ++s) {
      out << std::setw(10) << fixed(r.stop_rate(s, it), 2);
    }
    out << '\n';
  }

  out << "\nChosen-step H and k (mean +/- sd)\n";
  out << std::left << std::setw(6) << "iter" << std::right;
  for (const auto& s : r.sizes) {
    out << std::setw(34) << ("m=" + std::to_string(s.sample_size) + "  H | k");
  }
  out << '\n';
  for (std::size_t it = 1; it <= r.iterations; ++it) {
    out << std::left << std::setw(6) << it << std::right;
    for (const auto& s : r.sizes) {
      const auto& h = s.chosen_h[it - 1];
      const auto& k = s.chosen_k[it - 1];
      out << std::setw(34)
          << (fixed(h.mean, 4) + " +/- " + fixed(h.sd, 4) + " | " + fixed(k.mean, 4) + " +/- " + fixed(k.sd, 4));
    }
    out << '\n';
  }
}

void cmd_simulate(const SimulateOptions& o, const GlobalOptions& g, std::ostream& out, std::ostream& err) {
  ExperimentPlan plan;
  plan.distribution = resolve_distribution(o.distribution, g);
  plan.distribution_name = o.distribution;
  plan.sample_sizes = o.sizes;
  plan.replicates = o.replicates;
  plan.selection.k_min = o.k_min;
  plan.selection.f_min = o.f_min;
  if (o.max_iterations > 0) {
    plan.selection.max_iterations = o.max_iterations;
  }
  plan.selection.estimator.n_sub = o.n_sub;
  plan.selection.estimator.correction = parse_correction(o.correction);
  plan.master_seed = g.seed;

  const std::size_t threads = o.threads > 0 ? o.threads : std::max(1U, std::thread::hardware_concurrency());
  ProgressSink progress;
  if (g.verbose) {
    progress = [&err](std::size_t done, std::size_t total) {
      if (done == total || done % 500 == 0) {
        err << "simulate: " << done << "/" << total << " replicates\n";
      }
    };
  }
  const auto report = run_experiment(plan, progress, threads);

  if (!o.out_dir.empty()) {
    std::filesystem::create_directories(o.out_dir);
    const std::filesystem::path dir(o.out_dir);
    const char d = g.delimiter();
    const std::string ext = g.tab ? ".tsv" : ".csv";
    detail::write_file(dir / ("selection_frequency" + ext), selection_table(report, d));
    detail::write_file(dir / ("stop_rate" + ext), stop_table(report, d));
    detail::write_file(dir / ("moments" + ext), moments_table(report, d));
    detail::write_file(dir / ("candidates" + ext), candidate_table(report, d));
    detail::write_file(dir / "report.json", to_json(report).dump(2) + "\n");
  }

  if (g.format == Format::structured) {
    out << to_json(report).dump(2) << '\n';
  } else if (g.format == Format::delimited) {
    const char d = g.delimiter();
    out << "# seed=" << g.seed << " generator=" << report.generator << '\n';
    out << selection_table(report, d) << '\n' << stop_table(report, d) << '\n' << moments_table(report, d);
  } else {
    print_simulation(out, report);
    if (!o.out_dir.empty()) {
      out << "\nTables written to " << o.out_dir << '\n';
    }
  }
}

// ---------------------------------------------------------------- oracle

struct OracleOptions {
  std::string data;
  std::string distribution;
  std::size_t top = 0;
};

void cmd_oracle(const OracleOptions& o, const GlobalOptions& g, std::ostream& out) {
  if (o.data.empty() == o.distribution.empty()) {
    throw InputError("oracle needs exactly one of --data or --distribution");
  }
  std::vector<SubsetEvaluation> ranked;
  std::vector<std::string> names;
  std::string source;
  if (!o.data.empty()) {
    const auto data = load_dataset(o.data, g.csv());
    names = data.variable_names();
    ranked = exhaustive_empirical(data);
    source = o.data;
  } else {
    const auto dist = resolve_distribution(o.distribution, g);
    names = dist.variable_names();
    ranked = exhaustive_exact(dist);
    source = o.distribution;
  }
  const auto best = minimal_minimizer(ranked);
  const std::size_t shown = o.top > 0 ? std::min(o.top, ranked.size()) : ranked.size();

  if (g.format == Format::structured) {
    json j;
    j["kind"] = "oracle_ranking";
    j["source"] = source;
    j["evaluation"] = std::string(to_string(ranked.front().source));
    j["seed"] = g.seed;
    j["minimal_minimizer_rank"] = best + 1;
    j["subsets"] = json::array();
    for (std::size_t i = 0; i < shown; ++i) {
      json vars = json::array();
      for (auto v : ranked[i].subset) {
        vars.push_back(names.at(v.index));
      }
      j["subsets"].push_back({{"rank", i + 1}, {"subset", vars}, {"entropy", ranked[i].entropy}});
    }
    out << j.dump(2) << '\n';
    return;
  }
  if (g.format == Format::delimited) {
    const char d = g.delimiter();
    out << "# seed=" << g.seed << " source=" << source << '\n';
    out << "rank" << d << "subset" << d << "size" << d << "entropy" << d << "minimal_minimizer\n";
    for (std::size_t i = 0; i < shown; ++i) {
      std::string subset;
      for (std::size_t k = 0; k < ranked[i].subset.size(); ++k) {
        subset += (k ? "+" : "") + names.at(ranked[i].subset[k].index);
      }
      out << i + 1 << d << subset << d << ranked[i].subset.size() << d << full_precision(ranked[i].entropy) << d
          << (i == best ? 1 : 0) << '\n';
    }
    return;
  }
  out << "Exhaustive conditional entropy (" << to_string(ranked.front().source) << ", " << ranked.size()
      << " subsets, seed " << g.seed << ")\n";
  out << std::left << std::setw(7) << "rank" << std::setw(40) << "subset" << std::right << std::setw(10)
      << "H(C|D)" << '\n';
  for (std::size_t i = 0; i < shown; ++i) {
    out << std::left << std::setw(7) << (std::to_string(i + 1) + (i == best ? "*" : "")) << std::setw(40)
        << set_names(ranked[i].subset, names) << std::right << std::setw(10) << fixed(ranked[i].entropy, 4) << '\n';
  }
  out << "\n* minimal-cardinality minimizer: " << set_names(ranked[best].subset, names) << " at "
      << fixed(ranked[best].entropy, 5) << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Confidence-guided differential set selection", "dsel"};
  app.require_subcommand(1);
  GlobalOptions g;

  auto* select = app.add_subcommand("select", "Greedy selection on a delimited dataset");
  SelectOptions so;
  select->add_option("--data", so.data, "Input file")->required();
  select->add_option("--k-min", so.k_min, "Minimum acceptable k")->capture_default_str();
  select->add_option("--f-min", so.f_min, "Minimum acceptable confidence")->capture_default_str();
  select->add_option("--n-sub", so.n_sub, "Subsamples per estimate")->capture_default_str();
  select->add_option("--max-iterations", so.max_iterations, "Iteration cap (0 = none)")->capture_default_str();
  select->add_option("--correction", so.correction, "miller_madow or none")->capture_default_str();
  add_globals(*select, g);

  auto* entropy = app.add_subcommand("entropy", "Estimate H(C | vars) with its standard deviation");
  EntropyOptions eo;
  entropy->add_option("--data", eo.data, "Input file")->required();
  entropy->add_option("--vars", eo.vars, "Comma-separated variable names (empty = no variables)");
  entropy->add_flag("--all-vars", eo.all_vars, "Condition on every variable");
  entropy->add_option("--n-sub", eo.n_sub, "Subsamples")->capture_default_str();
  entropy->add_option("--correction", eo.correction, "miller_madow or none")->capture_default_str();
  add_globals(*entropy, g);

  auto* simulate = app.add_subcommand("simulate", "Replicated selection on synthetic samples");
  SimulateOptions mo;
  simulate->add_option("--sizes", mo.sizes, "Sample sizes")->delimiter(',')->capture_default_str();
  simulate->add_option("--replicates", mo.replicates, "Replicates per size")->capture_default_str();
  simulate->add_option("--k-min", mo.k_min, "Minimum acceptable k")->capture_default_str();
  simulate->add_option("--f-min", mo.f_min, "Minimum acceptable confidence")->capture_default_str();
  simulate->add_option("--n-sub", mo.n_sub, "Subsamples per estimate")->capture_default_str();
  simulate->add_option("--max-iterations", mo.max_iterations, "Iteration cap (0 = none)")->capture_default_str();
  simulate->add_option("--correction", mo.correction, "miller_madow or none")->capture_default_str();
  simulate->add_option("--distribution", mo.distribution,
                       "'" + std::string(kCaseStudyName) + "' or a distribution file")
      ->capture_default_str();
  simulate->add_option("--out-dir", mo.out_dir, "Directory for report tables and JSON");
  simulate->add_option("--threads", mo.threads, "Worker threads (0 = all cores)")->capture_default_str();
  add_globals(*simulate, g);

  auto* oracle = app.add_subcommand("oracle", "Rank every variable subset by conditional entropy");
  OracleOptions oo;
  oracle->add_option("--data", oo.data, "Dataset file (plug-in entropies)");
  oracle->add_option("--distribution", oo.distribution,
                     "'" + std::string(kCaseStudyName) + "' or a distribution file (exact entropies)");
  oracle->add_option("--top", oo.top, "Show only the first N subsets (0 = all)")->capture_default_str();
  add_globals(*oracle, g);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    std::ostringstream buffer;
    std::ostream& sink = g.output.empty() ? out : buffer;
    if (select->parsed()) {
      cmd_select(so, g, sink);
    } else if (entropy->parsed()) {
      cmd_entropy(eo, g, sink);
    } else if (simulate->parsed()) {
      cmd_simulate(mo, g, sink, err);
    } else if (oracle->parsed()) {
      cmd_oracle(oo, g, sink);
    }
    if (!g.output.empty()) {
      detail::write_file(g.output, buffer.str());
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
  return kOk;
}

}  // namespace dsel::cli
