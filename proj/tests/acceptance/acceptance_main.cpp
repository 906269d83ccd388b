// Acceptance suite: every check below guards a pinned behavior of the
// library at a fixed scale and tolerance. One line per criterion; the exit
// code is the number of failures.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lomax/centrality.hpp"
#include "lomax/experiment.hpp"
#include "lomax/ga.hpp"
#include "lomax/generators.hpp"
#include "lomax/gomory_hu.hpp"
#include "lomax/graph.hpp"
#include "lomax/load.hpp"
#include "lomax/max_flow.hpp"
#include "lomax/rng.hpp"
#include "lomax/single_lomax.hpp"
#include "support/oracles.hpp"

using namespace lomax;
namespace t = lomax::testing;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Check {
  int id;
  std::string name;
  std::function<Outcome()> fn;
};

std::string fmt(const char* pattern, ...) {
  char buf[512];
  va_list args;
  va_start(args, pattern);
  std::vsnprintf(buf, sizeof(buf), pattern, args);
  va_end(args);
  return buf;
}

constexpr std::uint64_t kCorpusSeed = 20240501;

ExperimentConfig corpus_config(const std::vector<std::string>& families, int n, int instances) {
  ExperimentConfig config;
  for (const auto& f : families) {
    std::string text = f + ":n=" + std::to_string(n);
    if (f == "er") text += ",p=0.1";
    if (f == "ws") text += ",k=2,p=0.1";
    if (f == "ba") text += ",m0=3,m=2";
    if (f == "hk") text += ",m0=2,m=2";
    config.families.push_back(GeneratorSpec::parse(text));
  }
  config.instances = instances;
  config.master_seed = kCorpusSeed;
  config.threads = 0;
  config.table1 = true;
  return config;
}

// The brute-force corpus behind criteria 6 through 9 (solved once).
const std::vector<InstanceRecord>& full_corpus() {
  static const std::vector<InstanceRecord> rows =
      solve_corpus(corpus_config({"er", "ws", "ba", "hk"}, 100, 30));
  return rows;
}

Outcome cycle_load_closed_form() {
  const auto start = std::chrono::steady_clock::now();
  int checks = 0;
  for (int n = 3; n <= 20; ++n) {
    const Graph g = t::cycle_graph(n);
    const std::int64_t expected =
        n == 3 ? 1 : static_cast<std::int64_t>(n - 1) * (n - 2) / 2;
    for (Vertex k : g.vertices()) {
      if (load(g, k) != expected)
        return {false, fmt("C_%d key %d: load != %lld", n, k, (long long)expected)};
      ++checks;
    }
  }
  const double sec =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (sec >= 1.0) return {false, fmt("took %.2fs, budget 1s", sec)};
  return {true, fmt("%d key vertices across C_3..C_20 in %.2fs", checks, sec)};
}

Outcome leaf_law() {
  Rng rng(0x1eaf'0001);
  int leaves = 0;
  for (int round = 0; round < 100; ++round) {
    const int n = 2 + static_cast<int>(rng.below(49));
    const Graph g = t::random_tree(rng, n);
    for (Vertex v : g.vertices()) {
      if (g.degree(v) != 1) continue;
      if (load(g, v) != 0) return {false, fmt("tree %d: leaf %d has load != 0", round, v)};
      ++leaves;
    }
  }
  return {true, fmt("%d leaves over 100 random trees all carry load 0", leaves)};
}

Outcome gomory_hu_oracle() {
  const auto start = std::chrono::steady_clock::now();
  Rng rng(0x60a0'0002);
  long long pairs = 0;
  for (int round = 0; round < 200; ++round) {
    const Graph g = t::random_connected(rng, 3, 12);
    const GomoryHuTree tree = gomory_hu(g);
    FlowNetwork net(g);
    const auto& ids = g.vertices();
    for (std::size_t a = 0; a < ids.size(); ++a) {
      for (std::size_t b = a + 1; b < ids.size(); ++b) {
        if (tree.query(ids[a], ids[b]) != net.max_flow(ids[a], ids[b]))
          return {false, fmt("graph %d: tree query mismatch at (%d,%d)", round, ids[a], ids[b])};
        ++pairs;
      }
    }
  }
  const double sec =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (sec >= 30.0) return {false, fmt("took %.1fs, budget 30s", sec)};
  return {true, fmt("%lld pairs over 200 graphs in %.2fs", pairs, sec)};
}

Outcome theorem_soundness() {
  const auto start = std::chrono::steady_clock::now();
  Rng rng(0x7e0'0004);
  const char* templates[] = {"er:n=%d,p=0.25", "ws:n=%d,k=2,p=0.2", "ba:n=%d,m0=3,m=2",
                             "hk:n=%d,m0=2,m=2", "cpl:n=%d,a=6,b=2,c=0,maxe=3"};
  int flagged_total = 0;
  for (int round = 0; round < 100; ++round) {
    const int n = 10 + static_cast<int>(rng.below(21));  // 10..30
    char text[64];
    std::snprintf(text, sizeof(text), templates[round % 5], n);
    GeneratorSpec spec = GeneratorSpec::parse(text);
    spec.seed = rng.next();
    const Graph g = generate(spec);
    const Vertex k = select_key_vertex(g);
    const auto eliminated = eliminate_by_theorems(g, k, 5);
    if (eliminated.empty()) continue;
    const SingleResult brute = brute_force(g, k);
    for (const auto& e : eliminated) {
      ++flagged_total;
      if (brute.effects.at(e.vertex) > 0)
        return {false, fmt("%s seed round %d: vertex %d flagged %s but effect %lld > 0", text,
                           round, e.vertex, rule_name(e.rule).c_str(),
                           (long long)brute.effects.at(e.vertex))};
    }
  }
  const double sec =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (sec >= 300.0) return {false, fmt("took %.0fs, budget 300s", sec)};
  return {true, fmt("100 graphs, %d flagged vertices all sound, %.1fs", flagged_total, sec)};
}

Outcome bridge_formula() {
  int cases = 0;
  for (int s = 1; s <= 4; ++s) {
    for (int p = 1; p <= 5; ++p) {
      const auto inst = t::bridge_instance(3 + (s + p) % 3, s, p);
      const std::int64_t effect = load_effect(inst.graph, inst.key, {inst.target});
      if (effect != -static_cast<std::int64_t>(s) * p)
        return {false, fmt("s=%d p=%d: effect %lld != %d", s, p, (long long)effect, -s * p)};
      ++cases;
    }
  }
  return {true, fmt("%d bridge graphs hit -s*p exactly", cases)};
}

Outcome positive_existence() {
  const auto& rows = full_corpus();
  int positive = 0;
  std::map<std::string, int> per_family;
  for (const auto& row : rows) {
    if (row.best_effect > 0) {
      ++positive;
      ++per_family[row.family];
    }
  }
  const double share = static_cast<double>(positive) / static_cast<double>(rows.size());

  // Fast variant at n=60 with 10 instances per family.
  const auto fast_rows = solve_corpus(corpus_config({"er", "ws", "ba", "hk"}, 60, 10));
  int fast_positive = 0;
  for (const auto& row : fast_rows)
    if (row.best_effect > 0) ++fast_positive;
  const double fast_share =
      static_cast<double>(fast_positive) / static_cast<double>(fast_rows.size());

  const bool pass = share >= 0.95 && fast_share >= 0.90;
  return {pass,
          fmt("n=100: %d/%zu positive (%.1f%%; er=%d ws=%d ba=%d hk=%d of 30); n=60: %d/%zu "
              "(%.1f%%)",
              positive, rows.size(), 100.0 * share, per_family["er"], per_family["ws"],
              per_family["ba"], per_family["hk"], fast_positive, fast_rows.size(),
              100.0 * fast_share)};
}

Outcome table1_bands() {
  const auto& rows = full_corpus();
  double avg_total = 0, best_total = 0;
  int count = 0;
  for (const auto& row : rows) {
    if (row.family != "er" || !row.pct_valid) continue;
    avg_total += row.avg_pct;
    best_total += row.best_pct;
    ++count;
  }
  if (count == 0) return {false, "no valid er instances"};
  const double mean_avg = avg_total / count;
  const double mean_best = best_total / count;
  const bool pass = std::abs(mean_avg - (-2.0)) <= 1.5 && std::abs(mean_best - 3.4) <= 3.0;
  return {pass, fmt("er mean avg%%=%.2f (target -2.0 +/- 1.5), mean best%%=%.2f (target 3.4 "
                    "+/- 3.0), %d instances",
                    mean_avg, mean_best, count)};
}

Outcome table2_bands() {
  const auto& rows = full_corpus();
  double positive_total = 0, near_total = 0;
  int count = 0;
  for (const auto& row : rows) {
    if (row.family != "er") continue;
    positive_total += row.positive_count;
    near_total += row.near_optimal_count;
    ++count;
  }
  const double mean_positive = positive_total / count;
  const double mean_near = near_total / count;
  const bool pass =
      std::abs(mean_positive - 20.7) <= 6.0 && mean_near >= 1.0 && mean_near <= 4.0;
  return {pass, fmt("er mean positive=%.2f (target 20.7 +/- 6), mean near-optimal=%.2f "
                    "(target in [1,4])",
                    mean_positive, mean_near)};
}

Outcome divide_and_conquer_quality() {
  const auto& rows = full_corpus();
  double ratio_total = 0;
  int ratio_count = 0, negative_picks = 0, instances = 0;
  for (const auto& row : rows) {
    if (row.family != "er") continue;
    ++instances;
    GeneratorSpec spec = GeneratorSpec::parse("er:n=100,p=0.1");
    spec.seed = row.seed;
    const Graph g = generate(spec);
    const SingleResult dnc = divide_and_conquer(g, row.key, 5, 2, row.seed);
    if (!dnc.best_vertex) return {false, "divide and conquer returned nothing"};
    if (dnc.best_effect < 0) ++negative_picks;
    if (row.best_effect > 0) {
      ratio_total += 100.0 * static_cast<double>(dnc.best_effect) /
                     static_cast<double>(row.best_effect);
      ++ratio_count;
    }
  }
  const double mean_ratio = ratio_total / std::max(ratio_count, 1);
  const double negative_share = 100.0 * negative_picks / std::max(instances, 1);
  const bool pass = mean_ratio >= 60.0 && negative_share <= 5.0;
  return {pass, fmt("er found/optimum mean=%.1f%% (floor 60%%), negative picks=%.1f%% "
                    "(cap 5%%), %d instances",
                    mean_ratio, negative_share, instances)};
}

Outcome ga_versus_random() {
  ExperimentConfig config = corpus_config({"er", "ws", "ba", "hk"}, 100, 30);
  config.table1 = false;
  config.ga_comparison = true;
  config.ga_pool = 20;
  config.ga_max_size = 6;
  config.ga_iterations = 300;
  const GaComparisonResult result = run_ga_comparison(config);

  std::string detail;
  bool pass = true;
  for (const char* family : {"er", "ws", "ba", "hk"}) {
    double final_diff = 0, rs_final = 0;
    int catch_up = -1;
    for (const auto& row : result.rows) {
      if (row.family != family) continue;
      if (row.iteration == config.ga_iterations) {
        final_diff = row.mean_diff;
        rs_final = row.mean_rs;
      }
    }
    for (const auto& row : result.rows) {
      if (row.family != family) continue;
      if (row.mean_ga >= rs_final) {
        catch_up = row.iteration;
        break;
      }
    }
    const bool family_ok = final_diff >= 0.0 && catch_up >= 0 && catch_up <= 150;
    pass = pass && family_ok;
    detail += fmt("%s: diff@300=%.1f catch-up@%d; ", family, final_diff, catch_up);
  }
  return {pass, detail + "floor: diff>=0 and catch-up<=150"};
}

Outcome small_instance_ga_optimality() {
  Rng corpus_rng(0x6a'0011);
  int hits = 0, runs = 0;
  for (int graph_index = 0; graph_index < 10; ++graph_index) {
    const Graph g = t::random_connected(corpus_rng, 10, 12, 0.25, 0.45);
    const Vertex k = select_key_vertex(g);
    const LoadEvaluator evaluator(g, k);
    std::vector<Vertex> candidates;
    for (Vertex v : g.vertices())
      if (v != k) candidates.push_back(v);
    std::int64_t optimum = 0;
    for (const auto& subset : t::subsets_up_to(candidates, 3))
      optimum = std::max(optimum, evaluator.effect(subset));

    for (int seed = 0; seed < 5; ++seed) {
      ga::Config config;
      config.pool_size = 20;
      config.max_size = 3;
      config.max_iterations = 300;
      config.max_stagnation = 100;
      config.seed = static_cast<std::uint64_t>(graph_index * 100 + seed);
      const ga::State state = ga::run(g, k, config);
      ++runs;
      if (state.best_ever.fitness > optimum)
        return {false, fmt("graph %d: GA above the exhaustive optimum", graph_index)};
      if (state.best_ever.fitness == optimum) ++hits;
    }
  }
  const double share = 100.0 * hits / runs;
  return {share >= 80.0, fmt("optimum reached in %d/%d seeded runs (%.0f%%, floor 80%%)",
                             hits, runs, share)};
}

std::string file_without_timestamp(const fs::path& path) {
  std::ifstream in(path);
  std::string content, line;
  while (std::getline(in, line)) {
    if (line.rfind("# generated_at", 0) == 0) continue;
    content += line;
    content += '\n';
  }
  return content;
}

Outcome determinism() {
  std::istringstream cfg(
      "family = er:n=40,p=0.15\n"
      "family = ws:n=40,k=2,p=0.15\n"
      "instances = 3\n"
      "seed = 77\n"
      "threads = 2\n"
      "table = 1\n"
      "table = 2\n"
      "table = ga\n"
      "ga_pool = 12\n"
      "ga_max_size = 4\n"
      "ga_iterations = 25\n");
  ExperimentConfig config = ExperimentConfig::parse(cfg);
  const fs::path base = fs::temp_directory_path() / "lomax_acceptance_determinism";
  fs::remove_all(base);
  const char* names[] = {"table1_instances.csv", "table1_aggregate.csv", "table2_instances.csv",
                         "table2_aggregate.csv", "ga_comparison.csv"};
  for (const char* dir : {"a", "b", "c"}) {
    config.out_dir = (base / dir).string();
    run_experiment(config);
  }
  // Two comparisons per run, as the criterion asks.
  for (const auto& [left, right] : {std::pair{"a", "b"}, std::pair{"b", "c"}}) {
    for (const char* name : names) {
      const std::string lhs = file_without_timestamp(base / left / name);
      const std::string rhs = file_without_timestamp(base / right / name);
      if (lhs.empty()) return {false, fmt("%s/%s is empty", left, name)};
      if (lhs != rhs) return {false, fmt("%s differs between runs %s and %s", name, left, right)};
    }
  }
  return {true, "three runs, five CSVs each, byte-identical modulo timestamp"};
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<Check> checks = {
      {1, "cycle-load-closed-form", cycle_load_closed_form},
      {2, "leaf-load-is-zero", leaf_law},
      {3, "gomory-hu-matches-direct-flow", gomory_hu_oracle},
      {4, "elimination-theorems-sound", theorem_soundness},
      {5, "bridge-effect-minus-s-times-p", bridge_formula},
      {6, "positive-effect-exists", positive_existence},
      {7, "table1-er-bands", table1_bands},
      {8, "table2-er-bands", table2_bands},
      {9, "divide-and-conquer-quality", divide_and_conquer_quality},
      {10, "ga-beats-random-search", ga_versus_random},
      {11, "ga-small-instance-optimality", small_instance_ga_optimality},
      {12, "deterministic-csv-output", determinism},
  };

  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

  int failures = 0;
  for (const auto& check : checks) {
    if (!selected.empty() && !selected.contains(check.id)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = check.fn();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double sec =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %02d %s (%.1fs) %s\n", outcome.pass ? "PASS" : "FAIL", check.id,
                check.name.c_str(), sec, outcome.detail.c_str());
    std::fflush(stdout);
    if (!outcome.pass) ++failures;
  }
  return failures;
}
