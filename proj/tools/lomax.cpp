// Command-line front end: graph generation, summary statistics, centrality
// tables, Single-LOMAX solvers, the genetic algorithm and the experiment
// harness.
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "lomax/centrality.hpp"
#include "lomax/experiment.hpp"
#include "lomax/ga.hpp"
#include "lomax/generators.hpp"
#include "lomax/graph.hpp"
#include "lomax/load.hpp"
#include "lomax/rng.hpp"
#include "lomax/single_lomax.hpp"

namespace {

using nlohmann::ordered_json;

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot write " + out_path);
  out << text;
}

lomax::Vertex resolve_key(const lomax::Graph& g, const std::string& key_arg) {
  if (key_arg == "auto") return lomax::select_key_vertex(g);
  return static_cast<lomax::Vertex>(std::stoi(key_arg));
}

ordered_json solution_json(const lomax::ga::Solution& s) {
  ordered_json out;
  out["vertices"] = s.canonical;
  out["effect"] = s.fitness;
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"Flow-based load centrality and load-maximizing vertex deletion"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a random graph and write its edge list");
  std::string gen_spec;
  std::uint64_t gen_seed = 0;
  std::string gen_out = "-";
  gen->add_option("--gen", gen_spec, "Generator spec, e.g. er:n=100,p=0.1")->required();
  gen->add_option("--seed", gen_seed, "Generator seed");
  gen->add_option("--out", gen_out, "Output file ('-' for stdout)");

  // stats
  auto* stats = app.add_subcommand("stats", "Density, mean distance and clustering");
  std::string stats_graph;
  stats->add_option("--graph", stats_graph, "Edge-list file")->required();

  // centrality
  auto* cent = app.add_subcommand("centrality", "Per-vertex centrality CSV");
  std::string cent_graph, cent_out = "-";
  cent->add_option("--graph", cent_graph, "Edge-list file")->required();
  cent->add_option("--out", cent_out, "Output file ('-' for stdout)");

  // single-lomax
  auto* single = app.add_subcommand("single-lomax", "Best single vertex deletion");
  std::string single_graph, single_key = "auto", single_method = "brute";
  int single_subset_size = 5, single_top = 2, single_max_cut = 5;
  std::uint64_t single_seed = 0;
  single->add_option("--graph", single_graph, "Edge-list file")->required();
  single->add_option("--key", single_key, "Key vertex id or 'auto'");
  single->add_option("--method", single_method, "brute | eliminate+brute | divide")
      ->check(CLI::IsMember({"brute", "eliminate+brute", "divide"}));
  single->add_option("--subset-size", single_subset_size, "divide: subset size");
  single->add_option("--top", single_top, "divide: subsets explored fully");
  single->add_option("--max-cut", single_max_cut, "eliminate: largest cut screened");
  single->add_option("--seed", single_seed, "divide: partition seed");

  // lomax-ga
  auto* ga_cmd = app.add_subcommand("lomax-ga", "Genetic algorithm for subset deletion");
  std::string ga_graph, ga_key = "auto", ga_baseline, ga_history_csv;
  lomax::ga::Config ga_config;
  ga_cmd->add_option("--graph", ga_graph, "Edge-list file")->required();
  ga_cmd->add_option("--key", ga_key, "Key vertex id or 'auto'");
  ga_cmd->add_option("--pool", ga_config.pool_size, "Solution pool size");
  ga_cmd->add_option("--max-size", ga_config.max_size, "Largest subset size");
  ga_cmd->add_option("--iters", ga_config.max_iterations, "Iteration cap");
  ga_cmd->add_option("--stagnation", ga_config.max_stagnation, "Stop after this many non-improving iterations");
  ga_cmd->add_option("--seed", ga_config.seed, "Run seed");
  ga_cmd->add_option("--baseline", ga_baseline, "Also run a baseline: random")
      ->check(CLI::IsMember({"random"}));
  ga_cmd->add_option("--history-csv", ga_history_csv, "Write per-iteration history CSV");

  // experiment
  auto* exp = app.add_subcommand("experiment", "Run a configured experiment");
  std::string exp_config;
  exp->add_option("--config", exp_config, "Key-value config file")->required();

  CLI11_PARSE(app, argc, argv);

  if (*gen) {
    lomax::GeneratorSpec spec = lomax::GeneratorSpec::parse(gen_spec);
    spec.seed = gen_seed;
    const lomax::Graph g = lomax::generate(spec);
    std::ostringstream body;
    body << "# " << spec.describe() << " seed=" << gen_seed << "\n";
    lomax::write_edge_list(g, body);
    emit(body.str(), gen_out);
    return 0;
  }

  if (*stats) {
    const lomax::Graph g = lomax::load_graph(stats_graph);
    const lomax::GraphStats s = lomax::summarize(g);
    ordered_json out;
    out["n"] = g.vertex_count();
    out["edges"] = g.edge_count();
    out["density"] = s.density;
    out["avg_path_length"] = s.avg_path_length;
    out["clustering_coefficient"] = s.clustering_coefficient;
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  if (*cent) {
    const lomax::Graph g = lomax::load_graph(cent_graph);
    emit(lomax::centrality_csv(g), cent_out);
    return 0;
  }

  if (*single) {
    const lomax::Graph g = lomax::load_graph(single_graph);
    const lomax::Vertex key = resolve_key(g, single_key);
    const auto start = std::chrono::steady_clock::now();
    lomax::SingleResult result;
    if (single_method == "brute")
      result = lomax::brute_force(g, key);
    else if (single_method == "eliminate+brute")
      result = lomax::eliminate_then_brute_force(g, key, single_max_cut);
    else
      result = lomax::divide_and_conquer(g, key, single_subset_size, single_top, single_seed);

    ordered_json out;
    out["graph"] = single_graph;
    out["n"] = g.vertex_count();
    out["key"] = result.key;
    out["method"] = single_method;
    out["original_load"] = result.base_load;
    ordered_json effects = ordered_json::object();
    for (const auto& [v, e] : result.effects) effects[std::to_string(v)] = e;
    out["effects"] = effects;
    if (result.best_vertex) {
      out["best"]["vertex"] = *result.best_vertex;
      out["best"]["effect"] = result.best_effect;
    } else {
      out["best"] = nullptr;
    }
    ordered_json eliminated = ordered_json::array();
    for (const auto& e : result.eliminated) {
      ordered_json item;
      item["vertex"] = e.vertex;
      item["rule"] = lomax::rule_name(e.rule);
      eliminated.push_back(item);
    }
    out["eliminated"] = eliminated;
    out["evaluations"] = result.evaluations;
    out["wall_ms"] = elapsed_ms(start);
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  if (*ga_cmd) {
    const lomax::Graph g = lomax::load_graph(ga_graph);
    const lomax::Vertex key = resolve_key(g, ga_key);
    const auto start = std::chrono::steady_clock::now();
    const lomax::ga::State state = lomax::ga::run(g, key, ga_config);
    std::optional<lomax::ga::State> baseline;
    if (ga_baseline == "random") baseline = lomax::ga::random_search(g, key, ga_config);

    ordered_json out;
    out["graph"] = ga_graph;
    out["key"] = key;
    out["pool"] = ga_config.pool_size;
    out["max_size"] = ga_config.max_size;
    out["iterations"] = state.iteration;
    out["evaluations"] = state.evaluations;
    out["best"] = solution_json(state.best_ever);
    out["history"] = state.history;
    if (baseline) {
      out["baseline"]["best"] = solution_json(baseline->best_ever);
      out["baseline"]["history"] = baseline->history;
    } else {
      out["baseline"] = nullptr;
    }
    out["wall_ms"] = elapsed_ms(start);
    std::cout << out.dump(2) << "\n";

    if (!ga_history_csv.empty()) {
      std::string csv = "iteration,ga_best,rs_best,diff\n";
      for (std::size_t t = 0; t < state.history.size(); ++t) {
        csv += std::to_string(t) + "," + std::to_string(state.history[t]) + ",";
        if (baseline && t < baseline->history.size()) {
          csv += std::to_string(baseline->history[t]) + "," +
                 std::to_string(state.history[t] - baseline->history[t]);
        } else {
          csv += ",";
        }
        csv += "\n";
      }
      emit(csv, ga_history_csv);
    }
    return 0;
  }

  if (*exp) {
    const lomax::ExperimentConfig config = lomax::ExperimentConfig::load(exp_config);
    lomax::run_experiment(config);
    return 0;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const lomax::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const lomax::GenerationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
