#include "osa/search.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <thread>

#include "osa/osideal.hpp"

namespace osa {

namespace {

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

/// The `index`-th permutation of 0..n-1 in lexicographic order.
std::vector<int> unrank_permutation(int n, std::uint64_t index) {
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<int> out;
  out.reserve(n);
  for (int k = n; k >= 1; --k) {
    const std::uint64_t block = factorial(k - 1);
    const auto pick = static_cast<std::size_t>(index / block);
    index %= block;
    out.push_back(pool[pick]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return out;
}

/// Uniform draw from [0, bound) by rejection, so the stream of results is
/// fixed by the engine alone.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

struct Partial {
  int best_count = -1;
  std::vector<int> best_sequence;
  std::size_t examined = 0;
  std::map<int, std::size_t> histogram;

  void offer(int count, const std::vector<int>& sequence) {
    ++examined;
    ++histogram[count];
    if (best_count < 0 || count < best_count || (count == best_count && sequence < best_sequence)) {
      best_count = count;
      best_sequence = sequence;
    }
  }

  void merge(const Partial& other) {
    if (other.examined == 0) return;
    examined += other.examined;
    for (auto [c, k] : other.histogram) histogram[c] += k;
    if (best_count < 0 || other.best_count < best_count ||
        (other.best_count == best_count && other.best_sequence < best_sequence)) {
      best_count = other.best_count;
      best_sequence = other.best_sequence;
    }
  }
};

unsigned worker_count(unsigned requested, std::size_t work) {
  unsigned t = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::size_t>(t, std::max<std::size_t>(work, 1)));
}

/// Runs `body(begin, end, partial)` over [0, total) split into contiguous
/// chunks, then merges the partials.
template <class Body>
Partial fan_out(std::size_t total, unsigned threads, Body&& body) {
  const unsigned workers = worker_count(threads, total);
  std::vector<Partial> partials(workers);
  if (workers == 1) {
    body(0, total, partials[0]);
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (total + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::size_t begin = std::min(total, w * chunk);
      const std::size_t end = std::min(total, begin + chunk);
      pool.emplace_back([&, w, begin, end] { body(begin, end, partials[w]); });
    }
    for (auto& t : pool) t.join();
  }
  Partial result;
  for (const auto& p : partials) result.merge(p);
  return result;
}

template <class Cost>
SearchResult run_search(const Matroid& m, std::optional<int> degree, const SearchStrategy& strategy,
                        unsigned threads, Cost&& cost) {
  const int n = m.size();
  Partial best;
  if (strategy.kind == SearchStrategy::Kind::Exhaustive) {
    if (n > kExhaustiveLimit)
      throw SearchRefused("exhaustive search needs n <= " + std::to_string(kExhaustiveLimit) + " (n = " +
                          std::to_string(n) + "); use a random strategy with --samples and --seed");
    best = fan_out(factorial(n), threads, [&](std::size_t begin, std::size_t end, Partial& out) {
      if (begin >= end) return;
      std::vector<int> seq = unrank_permutation(n, begin);
      for (std::size_t i = begin; i < end; ++i) {
        out.offer(cost(VariableOrder::from_sequence(seq)), seq);
        std::next_permutation(seq.begin(), seq.end());
      }
    });
  } else {
    if (strategy.samples == 0) throw PreconditionError("random search needs at least one sample");
    const auto orders = sample_orders(n, strategy.seed, strategy.samples);
    best = fan_out(orders.size(), threads, [&](std::size_t begin, std::size_t end, Partial& out) {
      for (std::size_t i = begin; i < end; ++i) out.offer(cost(orders[i]), orders[i].sequence());
    });
  }
  SearchResult result;
  result.degree = degree;
  result.best_order = VariableOrder::from_sequence(best.best_sequence);
  result.best_count = best.best_count;
  result.orders_examined = best.examined;
  result.strategy = strategy;
  result.histogram = std::move(best.histogram);
  return result;
}

}  // namespace

std::vector<VariableOrder> sample_orders(int n, std::uint64_t seed, std::size_t samples) {
  std::mt19937_64 rng(seed);
  std::vector<VariableOrder> out;
  out.reserve(samples);
  for (std::size_t s = 0; s < samples; ++s) {
    std::vector<int> seq(n);
    std::iota(seq.begin(), seq.end(), 0);
    for (int i = n - 1; i > 0; --i) std::swap(seq[i], seq[bounded(rng, static_cast<std::uint64_t>(i) + 1)]);
    out.push_back(VariableOrder::from_sequence(std::move(seq)));
  }
  return out;
}

SearchResult minimize_forge_count(const Matroid& m, int q, const SearchStrategy& strategy, unsigned threads) {
  if (q < 0) throw PreconditionError("negative degree");
  return run_search(m, q, strategy, threads,
                    [&m, q](const VariableOrder& order) { return decomposable_dim_by_counting(m, q, order); });
}

SearchResult minimize_total_gb_size(const Matroid& m, const SearchStrategy& strategy, unsigned threads) {
  return run_search(m, std::nullopt, strategy, threads, [&m](const VariableOrder& order) {
    const auto census = forge_circuit_census(m, order);
    return std::accumulate(census.begin(), census.end(), 0);
  });
}

PropositionCheck verify_proposition(const Matroid& m, int q, const std::vector<Domain>& fields) {
  if (m.size() > kExhaustiveLimit)
    throw SearchRefused("verification needs the exhaustive minimum, so n <= " + std::to_string(kExhaustiveLimit));
  PropositionCheck check;
  check.degree = q;
  check.search = minimize_forge_count(m, q, SearchStrategy::exhaustive());
  check.verified = true;
  for (const Domain& field : fields) {
    std::uint64_t dim = 0;
    if (q >= 0 && q <= m.size()) dim = graded_dims(m, field, q).degrees[q].quotient;
    check.dims.emplace_back(field, dim);
    const int lowest = check.search.histogram.empty() ? 0 : check.search.histogram.begin()->first;
    if (static_cast<std::uint64_t>(check.search.best_count) != dim || static_cast<std::uint64_t>(lowest) < dim)
      check.verified = false;
  }
  return check;
}

}  // namespace osa
