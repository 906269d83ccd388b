#include "lomax/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>

#include <boost/math/distributions/students_t.hpp>

#include "json.hpp"
#include "lomax/centrality.hpp"
#include "lomax/ga.hpp"
#include "lomax/parallel.hpp"
#include "lomax/rng.hpp"
#include "lomax/single_lomax.hpp"

namespace lomax {
namespace {

double now_ms() {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::uint64_t instance_seed(const ExperimentConfig& config, std::size_t family_index,
                            int instance) {
  return derive_seed(config.master_seed,
                     (static_cast<std::uint64_t>(family_index) << 32) |
                         static_cast<std::uint64_t>(instance));
}

std::string format_double(double v, int digits = 4) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

AggregateRow summarize_values(const std::string& family, const std::string& metric,
                              std::vector<double> values) {
  AggregateRow row;
  row.family = family;
  row.metric = metric;
  row.count = static_cast<int>(values.size());
  if (values.empty()) return row;
  std::sort(values.begin(), values.end());
  row.min = values.front();
  row.max = values.back();
  const std::size_t n = values.size();
  row.median = n % 2 == 1 ? values[n / 2] : (values[n / 2 - 1] + values[n / 2]) / 2.0;
  double total = 0.0;
  for (double v : values) total += v;
  row.mean = total / static_cast<double>(n);
  return row;
}

std::vector<std::string> family_order(const ExperimentConfig& config) {
  std::vector<std::string> out;
  for (const auto& f : config.families) out.push_back(f.short_label());
  return out;
}

}  // namespace

ExperimentConfig ExperimentConfig::parse(std::istream& in) {
  ExperimentConfig config;
  config.instances = -1;  // required key sentinel
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string text = trim(line);
    if (text.empty() || text[0] == '#') continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(line_no) + ": expected key = value");
    const std::string key = trim(text.substr(0, eq));
    const std::string value = trim(text.substr(eq + 1));
    try {
      if (key == "family") {
        config.families.push_back(GeneratorSpec::parse(value));
      } else if (key == "instances") {
        config.instances = std::stoi(value);
      } else if (key == "seed") {
        config.master_seed = std::stoull(value);
      } else if (key == "threads") {
        config.threads = std::stoi(value);
      } else if (key == "out_dir") {
        config.out_dir = value;
      } else if (key == "table") {
        if (value == "1") config.table1 = true;
        else if (value == "2") config.table2 = true;
        else if (value == "ga") config.ga_comparison = true;
        else throw ConfigError("config: unknown table '" + value + "'");
      } else if (key == "ga_pool") {
        config.ga_pool = std::stoi(value);
      } else if (key == "ga_max_size") {
        config.ga_max_size = std::stoi(value);
      } else if (key == "ga_iterations") {
        config.ga_iterations = std::stoi(value);
      } else {
        throw ConfigError("config: unknown key '" + key + "'");
      }
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception& e) {
      throw ConfigError("config line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (config.instances < 0) throw ConfigError("config: missing 'instances'");
  if (config.threads < 0) throw ConfigError("config: threads must be >= 0");
  if (config.ga_pool < 2 || config.ga_pool % 2 != 0)
    throw ConfigError("config: ga_pool must be even and >= 2");
  if (config.ga_max_size < 1) throw ConfigError("config: ga_max_size must be >= 1");
  if (config.ga_iterations < 0) throw ConfigError("config: ga_iterations must be >= 0");
  if (!config.table1 && !config.table2 && !config.ga_comparison)
    throw ConfigError("config: no 'table' selected (1, 2 or ga)");
  return config;
}

ExperimentConfig ExperimentConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  ExperimentConfig config = parse(in);
  if (const char* env = std::getenv("LOMAX_SEED")) {
    try {
      config.master_seed = std::stoull(env);
    } catch (const std::exception&) {
      throw ConfigError("LOMAX_SEED is not an unsigned integer");
    }
  }
  return config;
}

std::vector<InstanceRecord> solve_corpus(const ExperimentConfig& config) {
  struct Job {
    std::size_t family_index;
    int instance;
  };
  std::vector<Job> jobs;
  for (std::size_t f = 0; f < config.families.size(); ++f)
    for (int i = 0; i < config.instances; ++i) jobs.push_back({f, i});

  std::vector<InstanceRecord> rows(jobs.size());
  std::exception_ptr failure = nullptr;
  std::mutex failure_mutex;

  parallel_for(static_cast<int>(jobs.size()), config.threads, [&](int j) {
    try {
      const Job job = jobs[static_cast<std::size_t>(j)];
      GeneratorSpec spec = config.families[job.family_index];
      spec.seed = instance_seed(config, job.family_index, job.instance);

      const double start = now_ms();
      const Graph g = generate(spec);
      const Vertex key = select_key_vertex(g);
      const SingleResult solved = brute_force(g, key);

      InstanceRecord row;
      row.family = spec.short_label();
      row.index = job.instance;
      row.seed = spec.seed;
      row.n = g.vertex_count();
      row.key = key;
      row.original_load = solved.base_load;
      row.best_effect = solved.best_vertex ? solved.best_effect : 0;
      row.evaluations = solved.evaluations;

      double effect_sum = 0.0;
      for (const auto& [v, effect] : solved.effects) {
        if (effect > 0) ++row.positive_count;
        effect_sum += static_cast<double>(effect);
      }
      for (const auto& [v, effect] : solved.effects)
        if (static_cast<double>(effect) >= 0.75 * static_cast<double>(row.best_effect))
          ++row.near_optimal_count;
      if (row.original_load > 0 && !solved.effects.empty()) {
        row.pct_valid = true;
        const double denom = static_cast<double>(row.original_load);
        row.best_pct = 100.0 * static_cast<double>(row.best_effect) / denom;
        row.avg_pct = 100.0 * (effect_sum / static_cast<double>(solved.effects.size())) / denom;
      }
      row.wall_ms = now_ms() - start;
      rows[static_cast<std::size_t>(j)] = std::move(row);
    } catch (...) {
      std::lock_guard<std::mutex> hold(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  });
  if (failure) std::rethrow_exception(failure);
  return rows;
}

std::vector<AggregateRow> aggregate_table1(const std::vector<InstanceRecord>& rows) {
  std::vector<AggregateRow> out;
  std::vector<std::string> families;
  for (const auto& r : rows)
    if (std::find(families.begin(), families.end(), r.family) == families.end())
      families.push_back(r.family);
  for (const auto& family : families) {
    std::vector<double> loads, avg_pcts, best_pcts;
    for (const auto& r : rows) {
      if (r.family != family) continue;
      loads.push_back(static_cast<double>(r.original_load));
      if (r.pct_valid) {
        avg_pcts.push_back(r.avg_pct);
        best_pcts.push_back(r.best_pct);
      }
    }
    out.push_back(summarize_values(family, "original_load", std::move(loads)));
    out.push_back(summarize_values(family, "avg_pct_effect", std::move(avg_pcts)));
    out.push_back(summarize_values(family, "best_pct_effect", std::move(best_pcts)));
  }
  return out;
}

std::vector<AggregateRow> aggregate_table2(const std::vector<InstanceRecord>& rows) {
  std::vector<AggregateRow> out;
  std::vector<std::string> families;
  for (const auto& r : rows)
    if (std::find(families.begin(), families.end(), r.family) == families.end())
      families.push_back(r.family);
  for (const auto& family : families) {
    std::vector<double> positive, near_optimal;
    for (const auto& r : rows) {
      if (r.family != family) continue;
      positive.push_back(static_cast<double>(r.positive_count));
      near_optimal.push_back(static_cast<double>(r.near_optimal_count));
    }
    out.push_back(summarize_values(family, "positive_count", std::move(positive)));
    out.push_back(summarize_values(family, "near_optimal_count", std::move(near_optimal)));
  }
  return out;
}

ExperimentResult run_table1(const ExperimentConfig& config) {
  ExperimentResult result;
  result.rows = solve_corpus(config);
  result.aggregates = aggregate_table1(result.rows);
  return result;
}

ExperimentResult run_table2(const ExperimentConfig& config) {
  ExperimentResult result;
  result.rows = solve_corpus(config);
  result.aggregates = aggregate_table2(result.rows);
  return result;
}

GaComparisonResult run_ga_comparison(const ExperimentConfig& config) {
  GaComparisonResult result;
  result.instances_per_family = config.instances;
  const int points = config.ga_iterations + 1;  // init plus each iteration

  struct Series {
    std::vector<double> ga, rs;
  };
  std::vector<Series> all(config.families.size() * static_cast<std::size_t>(config.instances));

  struct Job {
    std::size_t family_index;
    int instance;
  };
  std::vector<Job> jobs;
  for (std::size_t f = 0; f < config.families.size(); ++f)
    for (int i = 0; i < config.instances; ++i) jobs.push_back({f, i});

  std::exception_ptr failure = nullptr;
  std::mutex failure_mutex;
  parallel_for(static_cast<int>(jobs.size()), config.threads, [&](int j) {
    try {
      const Job job = jobs[static_cast<std::size_t>(j)];
      GeneratorSpec spec = config.families[job.family_index];
      spec.seed = instance_seed(config, job.family_index, job.instance);
      const Graph g = generate(spec);
      const Vertex key = select_key_vertex(g);

      ga::Config run_config;
      run_config.pool_size = config.ga_pool;
      run_config.max_size = config.ga_max_size;
      run_config.max_iterations = config.ga_iterations;
      run_config.max_stagnation = config.ga_iterations + 1;  // paired budgets: no early stop
      run_config.seed = derive_seed(spec.seed, 0xA11CE);

      const ga::State ga_state = ga::run(g, key, run_config);
      const ga::State rs_state = ga::random_search(g, key, run_config);

      Series series;
      series.ga.assign(ga_state.history.begin(), ga_state.history.end());
      series.rs.assign(rs_state.history.begin(), rs_state.history.end());
      all[static_cast<std::size_t>(j)] = std::move(series);
    } catch (...) {
      std::lock_guard<std::mutex> hold(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  });
  if (failure) std::rethrow_exception(failure);

  const auto families = family_order(config);
  for (std::size_t f = 0; f < families.size(); ++f) {
    const int n = config.instances;
    if (n == 0) continue;
    // Bonferroni across all reported iteration points.
    double t_critical = 0.0;
    if (n >= 2) {
      const boost::math::students_t dist(static_cast<double>(n - 1));
      const double alpha = 0.05 / static_cast<double>(points);
      t_critical = boost::math::quantile(boost::math::complement(dist, alpha / 2.0));
    }
    for (int t = 0; t < points; ++t) {
      GaSeriesRow row;
      row.family = families[f];
      row.iteration = t;
      double diff_sum = 0.0, diff_sq = 0.0;
      for (int i = 0; i < n; ++i) {
        const Series& s = all[f * static_cast<std::size_t>(n) + static_cast<std::size_t>(i)];
        row.mean_ga += s.ga[static_cast<std::size_t>(t)];
        row.mean_rs += s.rs[static_cast<std::size_t>(t)];
        const double d = s.ga[static_cast<std::size_t>(t)] - s.rs[static_cast<std::size_t>(t)];
        diff_sum += d;
        diff_sq += d * d;
      }
      row.mean_ga /= n;
      row.mean_rs /= n;
      row.mean_diff = diff_sum / n;
      if (n >= 2) {
        const double variance = (diff_sq - diff_sum * diff_sum / n) / (n - 1);
        const double sd = variance > 0.0 ? std::sqrt(variance) : 0.0;
        row.ci_half_width = t_critical * sd / std::sqrt(static_cast<double>(n));
      }
      result.rows.push_back(row);
    }
  }
  return result;
}

std::string instances_csv(const std::vector<InstanceRecord>& rows) {
  std::string out =
      "family,instance,seed,n,key,original_load,avg_pct_effect,best_pct_effect,"
      "best_effect,positive_count,near_optimal_count,evaluations\n";
  for (const auto& r : rows) {
    out += r.family + "," + std::to_string(r.index) + "," + std::to_string(r.seed) + "," +
           std::to_string(r.n) + "," + std::to_string(r.key) + "," +
           std::to_string(r.original_load) + ",";
    out += r.pct_valid ? format_double(r.avg_pct) : "";
    out += ",";
    out += r.pct_valid ? format_double(r.best_pct) : "";
    out += "," + std::to_string(r.best_effect) + "," + std::to_string(r.positive_count) + "," +
           std::to_string(r.near_optimal_count) + "," + std::to_string(r.evaluations) + "\n";
  }
  return out;
}

std::string aggregates_csv(const std::vector<AggregateRow>& rows) {
  std::string out = "family,metric,count,min,median,mean,max\n";
  for (const auto& r : rows) {
    out += r.family + "," + r.metric + "," + std::to_string(r.count) + "," +
           format_double(r.min) + "," + format_double(r.median) + "," + format_double(r.mean) +
           "," + format_double(r.max) + "\n";
  }
  return out;
}

std::string ga_comparison_csv(const GaComparisonResult& result) {
  std::string out = "family,iteration,mean_ga_best,mean_rs_best,mean_diff,ci_half_width\n";
  for (const auto& r : result.rows) {
    out += r.family + "," + std::to_string(r.iteration) + "," + format_double(r.mean_ga) + "," +
           format_double(r.mean_rs) + "," + format_double(r.mean_diff) + "," +
           format_double(r.ci_half_width, 6) + "\n";
  }
  return out;
}

void run_experiment(const ExperimentConfig& config) {
  namespace fs = std::filesystem;
  fs::create_directories(config.out_dir);

  char stamp[64];
  const std::time_t now = std::time(nullptr);
  std::tm tm_utc{};
  gmtime_r(&now, &tm_utc);
  std::strftime(stamp, sizeof(stamp), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  const std::string header = std::string("# generated_at ") + stamp + "\n";

  auto write_file = [&](const std::string& name, const std::string& body) {
    std::ofstream out(fs::path(config.out_dir) / name);
    if (!out) throw std::runtime_error("cannot write " + name);
    out << header << body;
  };

  nlohmann::ordered_json manifest;
  manifest["version"] = "0.1.0";
  manifest["generated_at"] = stamp;
  manifest["config"]["instances"] = config.instances;
  manifest["config"]["seed"] = config.master_seed;
  manifest["config"]["threads"] = config.threads;
  manifest["config"]["families"] = nlohmann::ordered_json::array();
  for (const auto& f : config.families)
    manifest["config"]["families"].push_back(f.describe());
  manifest["config"]["tables"] = nlohmann::ordered_json::array();
  if (config.table1) manifest["config"]["tables"].push_back("1");
  if (config.table2) manifest["config"]["tables"].push_back("2");
  if (config.ga_comparison) manifest["config"]["tables"].push_back("ga");
  manifest["config"]["ga_pool"] = config.ga_pool;
  manifest["config"]["ga_max_size"] = config.ga_max_size;
  manifest["config"]["ga_iterations"] = config.ga_iterations;

  if (config.table1 || config.table2) {
    const auto rows = solve_corpus(config);
    if (config.table1) {
      write_file("table1_instances.csv", instances_csv(rows));
      write_file("table1_aggregate.csv", aggregates_csv(aggregate_table1(rows)));
    }
    if (config.table2) {
      write_file("table2_instances.csv", instances_csv(rows));
      write_file("table2_aggregate.csv", aggregates_csv(aggregate_table2(rows)));
    }
    manifest["instances"] = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
      nlohmann::ordered_json item;
      item["family"] = r.family;
      item["index"] = r.index;
      item["seed"] = r.seed;
      item["wall_ms"] = r.wall_ms;
      manifest["instances"].push_back(item);
    }
  }
  if (config.ga_comparison)
    write_file("ga_comparison.csv", ga_comparison_csv(run_ga_comparison(config)));

  std::ofstream mout(fs::path(config.out_dir) / "manifest.json");
  if (!mout) throw std::runtime_error("cannot write manifest.json");
  mout << manifest.dump(2) << "\n";
}

}  // namespace lomax
