#include "lomax/ga.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace lomax::ga {
namespace {

void check_solution(const Solution& s, Vertex k, int max_size) {
  if (static_cast<int>(s.canonical.size()) > max_size)
    throw std::logic_error("ga: solution larger than max_size");
  for (std::size_t i = 0; i + 1 < s.canonical.size(); ++i)
    if (s.canonical[i] >= s.canonical[i + 1])
      throw std::logic_error("ga: canonical form not strictly sorted");
  if (std::binary_search(s.canonical.begin(), s.canonical.end(), k))
    throw std::logic_error("ga: solution contains the key vertex");
}

void evaluate(State& state, std::vector<Solution>& batch, const LoadEvaluator& evaluator,
              const Config& config) {
  for (Solution& s : batch) {
    check_solution(s, evaluator.key(), config.max_size);
    auto hit = state.fitness_cache.find(s.canonical);
    if (hit != state.fitness_cache.end()) {
      s.fitness = hit->second;
    } else {
      s.fitness = evaluator.effect(VertexSet(s.canonical));
      state.fitness_cache.emplace(s.canonical, s.fitness);
    }
    s.evaluated = true;
    state.seen.insert(s.canonical);
    ++state.evaluations;
  }
}

// Updates best_ever and the stagnation counter for one finished iteration.
void close_iteration(State& state) {
  bool improved = false;
  for (const Solution& s : state.pool) {
    if (!state.best_ever.evaluated || s.fitness > state.best_ever.fitness) {
      state.best_ever = s;
      improved = true;
    }
  }
  state.stagnation = improved ? 0 : state.stagnation + 1;
  ++state.iteration;
  state.history.push_back(state.best_ever.fitness);
}

}  // namespace

std::vector<Vertex> canonical_of(const std::vector<Vertex>& slots) {
  std::vector<Vertex> out;
  for (Vertex v : slots)
    if (v != kDummy) out.push_back(v);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::array<std::vector<Vertex>, 4> hybridization_patterns(const std::vector<Vertex>& a,
                                                          const std::vector<Vertex>& b) {
  const std::size_t len = a.size();
  const std::size_t half = len / 2;
  std::array<std::vector<Vertex>, 4> out;
  for (auto& p : out) p.resize(len);
  for (std::size_t i = 0; i < len; ++i) {
    out[0][i] = i % 2 == 0 ? a[i] : b[i];  // a1 b2 a3 b4 ...
    out[1][i] = i % 2 == 0 ? b[i] : a[i];  // b1 a2 b3 a4 ...
    out[2][i] = i < half ? a[i] : b[i];    // first half of a, second half of b
    out[3][i] = i < half ? b[i] : a[i];
  }
  return out;
}

std::vector<Solution> recombine_pair(const Solution& a, const Solution& b, int quota,
                                     std::set<std::vector<Vertex>>& seen) {
  std::vector<Solution> children;
  if (quota <= 0 || a.slots.size() != b.slots.size()) return children;
  for (const auto& slots : hybridization_patterns(a.slots, b.slots)) {
    if (static_cast<int>(children.size()) >= quota) break;
    std::vector<Vertex> reals;
    for (Vertex v : slots)
      if (v != kDummy) reals.push_back(v);
    std::sort(reals.begin(), reals.end());
    if (std::adjacent_find(reals.begin(), reals.end()) != reals.end())
      continue;  // a real vertex appears twice
    if (seen.contains(reals)) continue;  // previously chosen
    Solution child;
    child.slots = slots;
    child.canonical = std::move(reals);
    seen.insert(child.canonical);
    children.push_back(std::move(child));
  }
  return children;
}

Solution random_solution(Rng& rng, const std::vector<Vertex>& candidates, int max_size) {
  Solution s;
  s.slots.reserve(static_cast<std::size_t>(max_size));
  std::vector<Vertex> unused = candidates;
  for (int slot = 0; slot < max_size; ++slot) {
    const std::uint64_t roll = rng.below(unused.size() + 1);  // one extra dummy option
    if (roll == unused.size()) {
      s.slots.push_back(kDummy);
    } else {
      s.slots.push_back(unused[roll]);
      unused.erase(unused.begin() + static_cast<std::ptrdiff_t>(roll));
    }
  }
  s.canonical = canonical_of(s.slots);
  return s;
}

State init_pool(const Graph& g, Vertex k, const Config& config) {
  if (!g.has_vertex(k)) throw std::invalid_argument("ga: unknown key vertex");
  if (config.pool_size < 1) throw std::invalid_argument("ga: pool_size must be >= 1");
  if (config.max_size < 1) throw std::invalid_argument("ga: max_size must be >= 1");
  if (g.vertex_count() < config.max_size + 2)
    throw std::invalid_argument("ga: graph needs at least max_size + 2 vertices");

  State state;
  state.rng = Rng(config.seed);
  for (Vertex v : g.vertices())
    if (v != k) state.candidates.push_back(v);

  // Rank candidates by individual load effect (ties to the lower id).
  const LoadEvaluator evaluator(g, k);
  std::vector<std::pair<std::int64_t, Vertex>> ranked;
  ranked.reserve(state.candidates.size());
  for (Vertex v : state.candidates) {
    const std::int64_t effect = evaluator.effect(v);
    state.fitness_cache.emplace(std::vector<Vertex>{v}, effect);
    ++state.evaluations;
    ranked.emplace_back(effect, v);
  }
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });

  // Smallest leading group whose max_size-subsets can fill the pool.
  const auto combinations = [](int r, int m) {
    long long c = 1;
    for (int i = 1; i <= m; ++i) {
      c = c * (r - m + i) / i;
      if (c > 1'000'000) return static_cast<long long>(1'000'000);
    }
    return c;
  };
  int top = config.max_size;
  while (top < static_cast<int>(ranked.size()) &&
         combinations(top, config.max_size) < config.pool_size)
    ++top;

  // Rank-index subsets in lexicographic order.
  std::vector<Solution> pool;
  std::vector<int> pick(static_cast<std::size_t>(config.max_size));
  std::iota(pick.begin(), pick.end(), 0);
  while (static_cast<int>(pool.size()) < config.pool_size) {
    Solution s;
    for (int idx : pick) s.slots.push_back(ranked[static_cast<std::size_t>(idx)].second);
    s.canonical = canonical_of(s.slots);
    pool.push_back(std::move(s));
    int pos = config.max_size - 1;
    while (pos >= 0 && pick[static_cast<std::size_t>(pos)] == top - config.max_size + pos)
      --pos;
    if (pos < 0) break;
    ++pick[static_cast<std::size_t>(pos)];
    for (int q = pos + 1; q < config.max_size; ++q)
      pick[static_cast<std::size_t>(q)] = pick[static_cast<std::size_t>(q - 1)] + 1;
  }
  // Tiny graphs can run out of combinations before the pool is full.
  while (static_cast<int>(pool.size()) < config.pool_size)
    pool.push_back(random_solution(state.rng, state.candidates, config.max_size));

  evaluate(state, pool, evaluator, config);
  state.pool = std::move(pool);
  for (const Solution& s : state.pool)
    if (!state.best_ever.evaluated || s.fitness > state.best_ever.fitness)
      state.best_ever = s;
  state.history.push_back(state.best_ever.fitness);
  return state;
}

void step(State& state, const LoadEvaluator& evaluator, const Config& config) {
  if (state.pool.size() != static_cast<std::size_t>(config.pool_size))
    throw std::invalid_argument("ga: pool size does not match config");
  if (config.pool_size < 2 || config.pool_size % 2 != 0)
    throw std::invalid_argument("ga: stepping needs an even pool of at least 2");

  // Selection: the fitter half feeds recombination.
  std::vector<const Solution*> order;
  order.reserve(state.pool.size());
  for (const Solution& s : state.pool) order.push_back(&s);
  std::stable_sort(order.begin(), order.end(),
                   [](const Solution* a, const Solution* b) { return a->fitness > b->fitness; });
  const int half = config.pool_size / 2;

  std::vector<Solution> children;
  for (int j = 0; static_cast<int>(children.size()) < half; ++j) {
    const Solution& a = *order[static_cast<std::size_t>((2 * j) % half)];
    const Solution& b = *order[static_cast<std::size_t>((2 * j + 1) % half)];
    const int pair_quota = std::min(2, half - static_cast<int>(children.size()));
    auto accepted = recombine_pair(a, b, pair_quota, state.seen);
    // Failed hybridizations are replaced by random solutions.
    while (static_cast<int>(accepted.size()) < pair_quota)
      accepted.push_back(random_solution(state.rng, state.candidates, config.max_size));
    for (auto& child : accepted) children.push_back(std::move(child));
  }

  std::vector<Solution> generated;
  generated.reserve(static_cast<std::size_t>(half));
  for (int i = 0; i < half; ++i)
    generated.push_back(random_solution(state.rng, state.candidates, config.max_size));

  evaluate(state, children, evaluator, config);
  evaluate(state, generated, evaluator, config);

  state.pool.clear();
  for (auto& s : children) state.pool.push_back(std::move(s));
  for (auto& s : generated) state.pool.push_back(std::move(s));

  close_iteration(state);
}

State run(const Graph& g, Vertex k, const Config& config) {
  State state = init_pool(g, k, config);
  const LoadEvaluator evaluator(g, k);
  while (state.iteration < config.max_iterations && state.stagnation < config.max_stagnation)
    step(state, evaluator, config);
  return state;
}

State random_search(const Graph& g, Vertex k, const Config& config) {
  State state = init_pool(g, k, config);
  const LoadEvaluator evaluator(g, k);
  while (state.iteration < config.max_iterations && state.stagnation < config.max_stagnation) {
    std::vector<Solution> batch;
    batch.reserve(static_cast<std::size_t>(config.pool_size));
    for (int i = 0; i < config.pool_size; ++i)
      batch.push_back(random_solution(state.rng, state.candidates, config.max_size));
    evaluate(state, batch, evaluator, config);
    state.pool = std::move(batch);
    close_iteration(state);
  }
  return state;
}

}  // namespace lomax::ga
