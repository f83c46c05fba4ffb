#include "dsel/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "dsel/error.hpp"
#include "dsel/rng.hpp"
#include "format.hpp"

namespace dsel {

void ExperimentPlan::validate() const {
  if (sample_sizes.empty()) {
    throw InputError("experiment needs at least one sample size");
  }
  for (auto m : sample_sizes) {
    if (m < 2) {
      throw InputError("sample sizes must be at least 2, got " + std::to_string(m));
    }
  }
  if (replicates < 1) {
    throw InputError("experiment needs at least one replicate");
  }
  selection.validate();
}

std::uint64_t replicate_seed(std::uint64_t master_seed, std::size_t m, std::size_t r) noexcept {
  return derive_seed({master_seed, m, r});
}

Moments compute_moments(const std::vector<double>& values) {
  Moments out;
  out.count = values.size();
  if (values.empty()) {
    return out;
  }
  double sum = 0.0;
  for (double v : values) {
    sum += v;
  }
  out.mean = sum / static_cast<double>(values.size());
  if (values.size() > 1) {
    double sq = 0.0;
    for (double v : values) {
      sq += (v - out.mean) * (v - out.mean);
    }
    out.sd = std::sqrt(sq / static_cast<double>(values.size() - 1));
  }
  return out;
}

namespace {

// Linear interpolation between order statistics (R's default type 7).
double quantile(const std::vector<double>& sorted, double p) {
  const double pos = p * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const auto hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

bool is_capped(double k) { return std::abs(k) >= kScoreCap; }

}  // namespace

Spread compute_spread(std::vector<double> values) {
  Spread out;
  std::vector<double> finite;
  finite.reserve(values.size());
  for (double v : values) {
    if (is_capped(v)) {
      ++out.capped;
    } else {
      finite.push_back(v);
    }
  }
  const auto m = compute_moments(finite);
  out.count = m.count;
  out.mean = m.mean;
  out.sd = m.sd;
  if (!finite.empty()) {
    std::sort(finite.begin(), finite.end());
    out.min = finite.front();
    out.q1 = quantile(finite, 0.25);
    out.median = quantile(finite, 0.5);
    out.q3 = quantile(finite, 0.75);
    out.max = finite.back();
  }
  return out;
}

namespace {

struct StepRecord {
  std::uint32_t chosen;
  double h;
  double k;
};

struct CandidateRecord {
  std::uint32_t iteration;  // 1-based
  std::uint32_t variable;
  double h;
  double k;
};

struct ReplicateRecord {
  std::vector<StepRecord> steps;
  std::vector<CandidateRecord> candidates;
  Termination termination = Termination::exhausted_variables;
};

ReplicateRecord run_replicate(const ExperimentPlan& plan, std::size_t m, std::size_t r) {
  const auto seed = replicate_seed(plan.master_seed, m, r);
  const auto sample = sample_dataset(plan.distribution, m, seed);
  SelectionConfig cfg = plan.selection;
  cfg.estimator.seed = derive_seed({seed, 1});
  const auto trace = select_differential_set(sample, cfg);

  ReplicateRecord rec;
  rec.termination = trace.termination;
  auto add_candidates = [&rec](std::size_t iteration, const std::vector<CandidateScore>& scores) {
    for (const auto& c : scores) {
      rec.candidates.push_back(
          {static_cast<std::uint32_t>(iteration), c.variable.index, c.estimate.h_est, c.k});
    }
  };
  for (const auto& step : trace.steps) {
    rec.steps.push_back({step.chosen.index, step.chosen_estimate.h_est, step.k_star});
    add_candidates(step.iteration, step.candidates);
  }
  add_candidates(trace.steps.size() + 1, trace.rejected_candidates);
  return rec;
}

std::vector<ReplicateRecord> run_size(const ExperimentPlan& plan, std::size_t m, std::size_t threads,
                                      const std::function<void()>& on_done) {
  std::vector<ReplicateRecord> records(plan.replicates);
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  std::size_t failed_replicate = 0;

  auto worker = [&] {
    while (true) {
      const auto r = next.fetch_add(1);
      if (r >= plan.replicates) {
        return;
      }
      {
        std::lock_guard lock(error_mutex);
        if (error) {
          return;
        }
      }
      try {
        records[r] = run_replicate(plan, m, r);
        on_done();
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error || r < failed_replicate) {
          error = std::current_exception();
          failed_replicate = r;
        }
      }
    }
  };

  const auto n_threads = std::max<std::size_t>(1, std::min(threads, plan.replicates));
  if (n_threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < n_threads; ++t) {
      pool.emplace_back(worker);
    }
  }

  if (error) {
    const std::string where = "replicate failed (m=" + std::to_string(m) + ", r=" + std::to_string(failed_replicate) + ")";
    try {
      std::rethrow_exception(error);
    } catch (const InputError& e) {
      throw InputError(where + ": " + e.what());
    } catch (const std::exception& e) {
      throw InvariantError(where + ": " + e.what());
    }
  }
  return records;
}

SizeReport aggregate(std::size_t m, const std::vector<ReplicateRecord>& records, std::size_t n_vars,
                     std::size_t iterations) {
  SizeReport out;
  out.sample_size = m;
  out.selection_counts.assign(iterations, std::vector<std::uint64_t>(n_vars, 0));
  out.stop_counts.assign(iterations, 0);
  out.not_reached_counts.assign(iterations, 0);
  out.capped_k.assign(iterations, 0);
  std::vector<std::vector<double>> chosen_h(iterations), chosen_k(iterations);
  std::vector<std::vector<std::vector<double>>> cand_h(iterations, std::vector<std::vector<double>>(n_vars));
  auto cand_k = cand_h;

  for (const auto& rec : records) {
    ++out.terminations[static_cast<std::size_t>(rec.termination)];
    for (std::size_t it = 0; it < iterations; ++it) {
      if (rec.steps.size() <= it + 1) {
        ++out.stop_counts[it];
      }
      if (rec.steps.size() <= it) {
        ++out.not_reached_counts[it];
        continue;
      }
      const auto& step = rec.steps[it];
      ++out.selection_counts[it][step.chosen];
      chosen_h[it].push_back(step.h);
      if (is_capped(step.k)) {
        ++out.capped_k[it];
      } else {
        chosen_k[it].push_back(step.k);
      }
    }
    for (const auto& c : rec.candidates) {
      if (c.iteration == 0 || c.iteration > iterations) {
        continue;
      }
      cand_h[c.iteration - 1][c.variable].push_back(c.h);
      cand_k[c.iteration - 1][c.variable].push_back(c.k);
    }
  }

  for (std::size_t it = 0; it < iterations; ++it) {
    out.chosen_h.push_back(compute_moments(chosen_h[it]));
    out.chosen_k.push_back(compute_moments(chosen_k[it]));
    std::vector<Spread> hs, ks;
    for (std::size_t v = 0; v < n_vars; ++v) {
      hs.push_back(compute_spread(std::move(cand_h[it][v])));
      ks.push_back(compute_spread(std::move(cand_k[it][v])));
    }
    out.candidate_h.push_back(std::move(hs));
    out.candidate_k.push_back(std::move(ks));
  }
  return out;
}

}  // namespace

SimulationReport run_experiment(const ExperimentPlan& plan, const ProgressSink& progress, std::size_t threads) {
  plan.validate();
  const auto start = std::chrono::steady_clock::now();
  const std::size_t n_vars = plan.distribution.num_variables();
  std::size_t iterations = std::max<std::size_t>(1, n_vars);
  if (plan.selection.max_iterations) {
    iterations = std::max<std::size_t>(1, std::min(iterations, *plan.selection.max_iterations));
  }

  SimulationReport report;
  report.distribution_name = plan.distribution_name;
  report.variable_names = plan.distribution.variable_names();
  report.replicates = plan.replicates;
  report.iterations = iterations;
  report.master_seed = plan.master_seed;
  report.selection = plan.selection;
  report.generator = std::string(kGeneratorId);

  const std::size_t total = plan.replicates * plan.sample_sizes.size();
  std::atomic<std::size_t> completed{0};
  std::mutex progress_mutex;
  auto on_done = [&] {
    const auto done = ++completed;
    if (progress) {
      std::lock_guard lock(progress_mutex);
      progress(done, total);
    }
  };

  for (auto m : plan.sample_sizes) {
    const auto records = run_size(plan, m, threads, on_done);
    report.sizes.push_back(aggregate(m, records, n_vars, iterations));
  }
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::size_t SimulationReport::size_index(std::size_t sample_size) const {
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i].sample_size == sample_size) {
      return i;
    }
  }
  throw std::out_of_range("sample size " + std::to_string(sample_size) + " not in report");
}

double SimulationReport::selection_frequency(std::size_t size_idx, std::size_t iteration, VariableId v) const {
  const auto count = sizes.at(size_idx).selection_counts.at(iteration - 1).at(v.index);
  return 100.0 * static_cast<double>(count) / static_cast<double>(replicates);
}

double SimulationReport::surviving_frequency(std::size_t size_idx, std::size_t iteration, VariableId v) const {
  const auto& s = sizes.at(size_idx);
  const auto count = s.selection_counts.at(iteration - 1).at(v.index);
  const auto surviving = replicates - s.not_reached_counts.at(iteration - 1);
  return surviving == 0 ? 0.0 : 100.0 * static_cast<double>(count) / static_cast<double>(surviving);
}

double SimulationReport::stop_rate(std::size_t size_idx, std::size_t iteration) const {
  const auto count = sizes.at(size_idx).stop_counts.at(iteration - 1);
  return 100.0 * static_cast<double>(count) / static_cast<double>(replicates);
}

double SimulationReport::not_reached_rate(std::size_t size_idx, std::size_t iteration) const {
  const auto count = sizes.at(size_idx).not_reached_counts.at(iteration - 1);
  return 100.0 * static_cast<double>(count) / static_cast<double>(replicates);
}

DivergenceSummary compare_reports(const SimulationReport& a, const SimulationReport& b) {
  if (a.iterations != b.iterations) {
    throw InputError("reports differ in iteration count (" + std::to_string(a.iterations) + " vs " +
                     std::to_string(b.iterations) + ")");
  }
  if (a.variable_names.size() != b.variable_names.size()) {
    throw InputError("reports differ in number of variables");
  }
  if (a.sizes.size() != b.sizes.size()) {
    throw InputError("reports differ in number of sample sizes");
  }
  for (std::size_t s = 0; s < a.sizes.size(); ++s) {
    if (a.sizes[s].sample_size != b.sizes[s].sample_size) {
      throw InputError("reports differ in sample sizes");
    }
  }

  DivergenceSummary out;
  auto add = [&out](std::string quantity, std::size_t m, std::size_t it, std::string var, double x, double y,
                    double& running_max) {
    const double d = std::abs(x - y);
    out.cells.push_back({std::move(quantity), m, it, std::move(var), x, y, d});
    running_max = std::max(running_max, d);
    out.max_overall = std::max(out.max_overall, d);
  };
  for (std::size_t s = 0; s < a.sizes.size(); ++s) {
    const auto m = a.sizes[s].sample_size;
    for (std::size_t it = 1; it <= a.iterations; ++it) {
      for (std::size_t v = 0; v < a.variable_names.size(); ++v) {
        const VariableId id{static_cast<std::uint32_t>(v)};
        add("selection_frequency", m, it, a.variable_names[v], a.selection_frequency(s, it, id),
            b.selection_frequency(s, it, id), out.max_frequency);
      }
      add("stop_rate", m, it, "", a.stop_rate(s, it), b.stop_rate(s, it), out.max_stop_rate);
      const auto& ha = a.sizes[s].chosen_h[it - 1];
      const auto& hb = b.sizes[s].chosen_h[it - 1];
      const auto& ka = a.sizes[s].chosen_k[it - 1];
      const auto& kb = b.sizes[s].chosen_k[it - 1];
      add("h_mean", m, it, "", ha.mean, hb.mean, out.max_moment);
      add("h_sd", m, it, "", ha.sd, hb.sd, out.max_moment);
      add("k_mean", m, it, "", ka.mean, kb.mean, out.max_moment);
      add("k_sd", m, it, "", ka.sd, kb.sd, out.max_moment);
    }
  }
  return out;
}

nlohmann::json to_json(const SelectionConfig& cfg) {
  nlohmann::json j;
  j["k_min"] = cfg.k_min;
  j["f_min"] = cfg.f_min;
  j["max_iterations"] = cfg.max_iterations ? nlohmann::json(*cfg.max_iterations) : nlohmann::json(nullptr);
  j["estimator"] = {{"n_sub", cfg.estimator.n_sub},
                    {"subsample_fraction", 0.5},
                    {"correction", std::string(to_string(cfg.estimator.correction))},
                    {"seed", cfg.estimator.seed}};
  j["score_cap"] = kScoreCap;
  return j;
}

namespace {

nlohmann::json to_json(const Moments& m) { return {{"count", m.count}, {"mean", m.mean}, {"sd", m.sd}}; }

nlohmann::json to_json(const Spread& s) {
  return {{"count", s.count}, {"capped", s.capped}, {"mean", s.mean},     {"sd", s.sd}, {"min", s.min},
          {"q1", s.q1},       {"median", s.median}, {"q3", s.q3},         {"max", s.max}};
}

}  // namespace

nlohmann::json to_json(const SimulationReport& report) {
  nlohmann::json j;
  j["kind"] = "simulation_report";
  j["metadata"] = {{"distribution", report.distribution_name},
                   {"variables", report.variable_names},
                   {"replicates", report.replicates},
                   {"iterations", report.iterations},
                   {"master_seed", report.master_seed},
                   {"generator", report.generator},
                   {"selection", to_json(report.selection)},
                   {"frequency_base", "all_replicates"}};
  j["sizes"] = nlohmann::json::array();
  for (std::size_t s = 0; s < report.sizes.size(); ++s) {
    const auto& size = report.sizes[s];
    nlohmann::json js;
    js["sample_size"] = size.sample_size;
    nlohmann::json terminations;
    for (std::size_t t = 0; t < kTerminationKinds; ++t) {
      terminations[std::string(to_string(static_cast<Termination>(t)))] = size.terminations[t];
    }
    js["terminations"] = terminations;
    js["iterations"] = nlohmann::json::array();
    for (std::size_t it = 1; it <= report.iterations; ++it) {
      nlohmann::json ji;
      ji["iteration"] = it;
      ji["stopped"] = size.stop_counts[it - 1];
      ji["stop_rate"] = report.stop_rate(s, it);
      ji["not_reached"] = size.not_reached_counts[it - 1];
      ji["not_reached_rate"] = report.not_reached_rate(s, it);
      ji["chosen_h"] = to_json(size.chosen_h[it - 1]);
      ji["chosen_k"] = to_json(size.chosen_k[it - 1]);
      ji["chosen_k_capped"] = size.capped_k[it - 1];
      ji["variables"] = nlohmann::json::array();
      for (std::size_t v = 0; v < report.variable_names.size(); ++v) {
        const VariableId id{static_cast<std::uint32_t>(v)};
        ji["variables"].push_back({{"name", report.variable_names[v]},
                                   {"count", size.selection_counts[it - 1][v]},
                                   {"frequency", report.selection_frequency(s, it, id)},
                                   {"frequency_of_surviving", report.surviving_frequency(s, it, id)},
                                   {"candidate_h", to_json(size.candidate_h[it - 1][v])},
                                   {"candidate_k", to_json(size.candidate_k[it - 1][v])}});
      }
      js["iterations"].push_back(std::move(ji));
    }
    j["sizes"].push_back(std::move(js));
  }
  return j;
}

std::string selection_table(const SimulationReport& report, char d) {
  using detail::full_precision;
  std::ostringstream out;
  out << "sample_size" << d << "iteration" << d << "variable" << d << "count" << d << "percent" << d
      << "percent_of_surviving\n";
  for (std::size_t s = 0; s < report.sizes.size(); ++s) {
    for (std::size_t it = 1; it <= report.iterations; ++it) {
      for (std::size_t v = 0; v < report.variable_names.size(); ++v) {
        const VariableId id{static_cast<std::uint32_t>(v)};
        out << report.sizes[s].sample_size << d << it << d << report.variable_names[v] << d
            << report.sizes[s].selection_counts[it - 1][v] << d << full_precision(report.selection_frequency(s, it, id))
            << d << full_precision(report.surviving_frequency(s, it, id)) << '\n';
      }
    }
  }
  return out.str();
}

std::string stop_table(const SimulationReport& report, char d) {
  std::ostringstream out;
  out << "iteration" << d << "sample_size" << d << "stopped" << d << "percent" << d << "not_reached" << d
      << "not_reached_percent\n";
  for (std::size_t it = 1; it <= report.iterations; ++it) {
    for (std::size_t s = 0; s < report.sizes.size(); ++s) {
      out << it << d << report.sizes[s].sample_size << d << report.sizes[s].stop_counts[it - 1] << d
          << detail::full_precision(report.stop_rate(s, it)) << d << report.sizes[s].not_reached_counts[it - 1] << d
          << detail::full_precision(report.not_reached_rate(s, it)) << '\n';
    }
  }
  return out.str();
}

std::string moments_table(const SimulationReport& report, char d) {
  using detail::full_precision;
  std::ostringstream out;
  out << "iteration" << d << "sample_size" << d << "h_count" << d << "h_mean" << d << "h_sd" << d << "k_count" << d
      << "k_mean" << d << "k_sd" << d << "k_capped\n";
  for (std::size_t it = 1; it <= report.iterations; ++it) {
    for (const auto& size : report.sizes) {
      const auto& h = size.chosen_h[it - 1];
      const auto& k = size.chosen_k[it - 1];
      out << it << d << size.sample_size << d << h.count << d << full_precision(h.mean) << d << full_precision(h.sd)
          << d << k.count << d << full_precision(k.mean) << d << full_precision(k.sd) << d << size.capped_k[it - 1]
          << '\n';
    }
  }
  return out.str();
}

std::string candidate_table(const SimulationReport& report, char d) {
  using detail::full_precision;
  std::ostringstream out;
  out << "sample_size" << d << "iteration" << d << "variable" << d << "quantity" << d << "count" << d << "capped" << d
      << "mean" << d << "sd" << d << "min" << d << "q1" << d << "median" << d << "q3" << d << "max\n";
  for (const auto& size : report.sizes) {
    for (std::size_t it = 1; it <= report.iterations; ++it) {
      for (std::size_t v = 0; v < report.variable_names.size(); ++v) {
        for (const auto& [label, spread] :
             {std::pair{"h", &size.candidate_h[it - 1][v]}, std::pair{"k", &size.candidate_k[it - 1][v]}}) {
          out << size.sample_size << d << it << d << report.variable_names[v] << d << label << d << spread->count << d
              << spread->capped << d << full_precision(spread->mean) << d << full_precision(spread->sd) << d
              << full_precision(spread->min) << d << full_precision(spread->q1) << d
              << full_precision(spread->median) << d << full_precision(spread->q3) << d
              << full_precision(spread->max) << '\n';
        }
      }
    }
  }
  return out.str();
}

}  // namespace dsel
