#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "lomax/graph.hpp"
#include "lomax/load.hpp"
#include "lomax/rng.hpp"

namespace lomax::ga {

/// Slot value standing in for "no vertex", so subsets smaller than the
/// maximum size fit a fixed-width chromosome.
inline constexpr Vertex kDummy = -1;

/// Candidate deletion subset. Slots keep insertion order (recombination
/// splits on it); `canonical` is the sorted set of real vertices and
/// defines identity for duplicate detection.
struct Solution {
  std::vector<Vertex> slots;
  std::vector<Vertex> canonical;
  std::int64_t fitness = 0;
  bool evaluated = false;
};

struct Config {
  int pool_size = 20;
  int max_size = 6;
  int max_iterations = 300;
  int max_stagnation = 100;
  std::uint64_t seed = 0;
};

struct State {
  std::vector<Solution> pool;
  Solution best_ever;
  int iteration = 0;
  int stagnation = 0;
  std::vector<std::int64_t> history;  // best fitness after init, then per iteration
  std::set<std::vector<Vertex>> seen;  // canonical forms ever chosen
  std::map<std::vector<Vertex>, std::int64_t> fitness_cache;
  std::vector<Vertex> candidates;  // graph vertices minus the key, sorted
  long long evaluations = 0;
  Rng rng{0};
};

std::vector<Vertex> canonical_of(const std::vector<Vertex>& slots);

/// The four half-swap recombinations of two slot lists: both alternations,
/// then the two first-half/second-half splices.
std::array<std::vector<Vertex>, 4> hybridization_patterns(const std::vector<Vertex>& a,
                                                          const std::vector<Vertex>& b);

/// Children of one parent pair: the patterns, in order, that carry no
/// duplicate real vertex and whose canonical form is not in `seen`
/// (accepted children are added to `seen`). At most `quota` returned.
std::vector<Solution> recombine_pair(const Solution& a, const Solution& b, int quota,
                                     std::set<std::vector<Vertex>>& seen);

/// Random solution: each slot draws uniformly from the unused candidates
/// plus one dummy option.
Solution random_solution(Rng& rng, const std::vector<Vertex>& candidates, int max_size);

/// Pool seeded from the highest individual-load-effect vertices: the first
/// pool_size max_size-subsets, in lexicographic order of effect rank, of
/// the smallest top group large enough to supply them. All evaluated.
State init_pool(const Graph& g, Vertex k, const Config& config);

/// One selection / recombination / generation / evaluation round.
void step(State& state, const LoadEvaluator& evaluator, const Config& config);

/// Runs until max_iterations, or until max_stagnation iterations pass
/// without improving the best solution.
State run(const Graph& g, Vertex k, const Config& config);

/// Matched baseline: same initial pool, same per-iteration evaluation
/// budget, all solutions drawn at random.
State random_search(const Graph& g, Vertex k, const Config& config);

}  // namespace lomax::ga
