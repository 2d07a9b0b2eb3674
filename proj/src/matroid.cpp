#include "osa/matroid.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace osa {

namespace {

constexpr int kRankTableLimit = 16;

std::string subset_text(Subset s) {
  std::string out = "{";
  bool sep = false;
  for (int i : elements(s)) {
    if (sep) out += ",";
    out += std::to_string(i + 1);
    sep = true;
  }
  return out + "}";
}

}  // namespace

int rational_rank(const std::vector<std::vector<mpq_class>>& rows_in) {
  auto rows = rows_in;
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  int rank = 0;
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      const mpq_class factor = rows[r][c] / rows[rank][c];
      for (std::size_t j = c; j < cols; ++j) rows[r][j] -= factor * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

Matroid::Matroid(int n, std::vector<Subset> circuits) : n_(n), circuits_(std::move(circuits)) {
  std::sort(circuits_.begin(), circuits_.end(), canonical_less);
  labels_.reserve(n_);
  for (int i = 0; i < n_; ++i) labels_.push_back(std::to_string(i + 1));

  if (n_ <= kRankTableLimit) {
    const std::size_t total = std::size_t{1} << n_;
    std::unordered_set<Subset> circuit_set(circuits_.begin(), circuits_.end());
    std::vector<std::uint8_t> dependent(total, 0);
    rank_table_.assign(total, 0);
    for (std::size_t s = 1; s < total; ++s) {
      bool dep = circuit_set.count(s) > 0;
      std::uint8_t best = 0;
      for (Subset rest = s; rest; rest &= rest - 1) {
        const Subset smaller = s & ~(rest & (~rest + 1));
        dep = dep || dependent[smaller];
        best = std::max(best, rank_table_[smaller]);
      }
      dependent[s] = dep;
      rank_table_[s] = dep ? best : static_cast<std::uint8_t>(popcount(s));
    }
  }
}

Matroid Matroid::from_circuits(int n, const std::vector<Subset>& circuits) {
  if (n < 0 || n > kMaxGroundSet) throw InputError("ground set size must be in 0..64");
  const Subset ground = full_set(n);
  for (Subset c : circuits) {
    if ((c & ~ground) != 0) throw InputError("circuit " + subset_text(c) + " leaves the ground set");
    if (popcount(c) < 3)
      throw NonSimpleError("circuit " + subset_text(c) + " has fewer than 3 elements; matroid is not simple");
  }
  for (std::size_t a = 0; a < circuits.size(); ++a) {
    for (std::size_t b = a + 1; b < circuits.size(); ++b) {
      const Subset c1 = circuits[a];
      const Subset c2 = circuits[b];
      if (is_subset(c1, c2) || is_subset(c2, c1))
        throw AntichainViolation("circuits " + subset_text(c1) + " and " + subset_text(c2) + " are nested");
    }
  }
  // Weak elimination: (C1 u C2) - e contains a circuit for every e in C1 n C2.
  for (std::size_t a = 0; a < circuits.size(); ++a) {
    for (std::size_t b = a + 1; b < circuits.size(); ++b) {
      const Subset uni = circuits[a] | circuits[b];
      for (int e : elements(circuits[a] & circuits[b])) {
        const Subset rest = uni & ~singleton(e);
        const bool ok = std::any_of(circuits.begin(), circuits.end(),
                                    [rest](Subset c) { return is_subset(c, rest); });
        if (!ok)
          throw IncompleteCircuitList("eliminating " + std::to_string(e + 1) + " from " +
                                      subset_text(circuits[a]) + " and " + subset_text(circuits[b]) +
                                      " leaves no listed circuit");
      }
    }
  }
  return Matroid(n, circuits);
}

Matroid Matroid::from_matrix(const Arrangement& arrangement) {
  const auto& rows = arrangement.normals;
  const int n = static_cast<int>(rows.size());
  if (n > kMaxGroundSet) throw InputError("more than 64 hyperplanes");
  const std::size_t d = n ? rows.front().size() : 1;
  if (d == 0) throw InputError("arrangement has ambient dimension 0");
  for (int i = 0; i < n; ++i) {
    if (rows[i].size() != d) throw InputError("row " + std::to_string(i + 1) + " has the wrong length");
    if (std::all_of(rows[i].begin(), rows[i].end(), [](const mpq_class& v) { return v == 0; }))
      throw NonSimpleError("row " + std::to_string(i + 1) + " is zero");
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rational_rank({rows[i], rows[j]}) < 2)
        throw NonSimpleError("rows " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                             " are proportional");

  const int total_rank = rational_rank(rows);
  std::vector<Subset> circuits;
  for (int k = 3; k <= std::min(n, total_rank + 1); ++k) {
    for_each_k_subset(n, k, [&](Subset s) {
      for (Subset c : circuits)
        if (is_subset(c, s)) return;
      std::vector<std::vector<mpq_class>> sub;
      for (int i : elements(s)) sub.push_back(rows[i]);
      if (rational_rank(sub) < k) circuits.push_back(s);
    });
  }
  return Matroid(n, std::move(circuits));
}

Matroid Matroid::from_graph(int vertices, const std::vector<std::pair<int, int>>& edges) {
  if (vertices < 0) throw InputError("negative vertex count");
  if (edges.size() > static_cast<std::size_t>(kMaxGroundSet)) throw InputError("more than 64 edges");
  std::set<std::pair<int, int>> seen;
  std::vector<std::vector<std::pair<int, int>>> adjacency(vertices);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    auto [u, v] = edges[e];
    if (u < 0 || v < 0 || u >= vertices || v >= vertices)
      throw InputError("edge " + std::to_string(e + 1) + " has an endpoint outside the vertex range");
    if (u == v) throw NonSimpleError("edge " + std::to_string(e + 1) + " is a loop");
    if (!seen.insert({std::min(u, v), std::max(u, v)}).second)
      throw NonSimpleError("edge " + std::to_string(e + 1) + " repeats an earlier edge");
    adjacency[u].push_back({v, static_cast<int>(e)});
    adjacency[v].push_back({u, static_cast<int>(e)});
  }

  // Each simple cycle is found from its smallest vertex, once per direction.
  std::set<Subset> cycles;
  std::vector<char> visited(vertices, 0);
  auto dfs = [&](auto&& self, int start, int v, Subset used, int length) -> void {
    for (auto [w, e] : adjacency[v]) {
      if (contains(used, e)) continue;
      if (w == start) {
        if (length >= 2) cycles.insert(used | singleton(e));
      } else if (w > start && !visited[w]) {
        visited[w] = 1;
        self(self, start, w, used | singleton(e), length + 1);
        visited[w] = 0;
      }
    }
  };
  for (int s = 0; s < vertices; ++s) {
    visited[s] = 1;
    dfs(dfs, s, s, 0, 0);
    visited[s] = 0;
  }
  return Matroid(static_cast<int>(edges.size()), std::vector<Subset>(cycles.begin(), cycles.end()));
}

Matroid Matroid::with_labels(std::vector<std::string> labels) const {
  if (static_cast<int>(labels.size()) != n_)
    throw InputError("expected " + std::to_string(n_) + " labels, got " + std::to_string(labels.size()));
  std::set<std::string> distinct(labels.begin(), labels.end());
  if (distinct.size() != labels.size()) throw InputError("labels are not distinct");
  Matroid copy = *this;
  copy.labels_ = std::move(labels);
  return copy;
}

std::vector<Subset> Matroid::circuits_of_size(int k) const {
  std::vector<Subset> out;
  for (Subset c : circuits_)
    if (popcount(c) == k) out.push_back(c);
  return out;
}

bool Matroid::is_independent(Subset s) const {
  return std::none_of(circuits_.begin(), circuits_.end(), [s](Subset c) { return is_subset(c, s); });
}

int Matroid::greedy_rank(Subset s) const {
  Subset basis = 0;
  for (int i : elements(s))
    if (is_independent(basis | singleton(i))) basis |= singleton(i);
  return popcount(basis);
}

int Matroid::rank(Subset s) const {
  if (!rank_table_.empty()) return rank_table_[s & full_set(n_)];
  return greedy_rank(s & full_set(n_));
}

Subset Matroid::closure(Subset s) const {
  const int r = rank(s);
  Subset out = s;
  for (int i = 0; i < n_; ++i)
    if (!contains(s, i) && rank(s | singleton(i)) == r) out |= singleton(i);
  return out;
}

bool Matroid::is_circuit(Subset s) const {
  return std::binary_search(circuits_.begin(), circuits_.end(), s, canonical_less);
}

Subset broken_circuit(Subset c, const VariableOrder& order) {
  const int m = order.min_element(c);
  return m < 0 ? c : c & ~singleton(m);
}

Subset active_elements(const Matroid& m, Subset independent, const VariableOrder& order) {
  if (!m.is_independent(independent))
    throw PreconditionError("active elements requested for a dependent set");
  // I is independent, so every circuit inside I u {i} passes through i.
  Subset active = 0;
  for (Subset d : m.circuits()) {
    const int low = order.min_element(d);
    if (!contains(independent, low) && is_subset(d & ~singleton(low), independent)) active |= singleton(low);
  }
  return active;
}

int alpha(const Matroid& m, Subset circuit, const VariableOrder& order) {
  if (!m.is_circuit(circuit)) throw PreconditionError("alpha requested for a non-circuit");
  const Subset broken = broken_circuit(circuit, order);
  return order.min_element(active_elements(m, broken, order));
}

namespace {

/// Indices (into m.circuits()) of the forge circuits; works in position
/// coordinates so the order minimum is the lowest bit.
std::vector<std::size_t> forge_indices(const Matroid& m, const VariableOrder& order) {
  const auto& circuits = m.circuits();
  const std::size_t count = circuits.size();
  std::vector<Subset> low(count), broken(count);
  for (std::size_t i = 0; i < count; ++i) {
    const Subset p = order.to_positions(circuits[i]);
    low[i] = p & (~p + 1);
    broken[i] = p & ~low[i];
  }
  std::vector<std::size_t> survivors;
  for (std::size_t i = 0; i < count; ++i) {
    bool ok = true;
    for (std::size_t j = 0; j < count && ok; ++j)
      if (low[j] < low[i] && is_subset(broken[j], broken[i])) ok = false;
    if (ok) survivors.push_back(i);
  }
  std::vector<std::size_t> out;
  for (std::size_t i : survivors) {
    bool minimal = true;
    for (std::size_t j : survivors) {
      if (j != i && is_subset(broken[j], broken[i]) && broken[j] != broken[i]) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(i);
  }
  return out;
}

}  // namespace

std::vector<Subset> forge_circuits(const Matroid& m, const VariableOrder& order) {
  std::vector<Subset> out;
  for (std::size_t i : forge_indices(m, order)) out.push_back(m.circuits()[i]);
  return out;
}

std::vector<int> forge_circuit_census(const Matroid& m, const VariableOrder& order) {
  std::vector<int> census(m.size() + 1, 0);
  for (std::size_t i : forge_indices(m, order)) ++census[popcount(m.circuits()[i])];
  return census;
}

std::vector<Subset> nbc_sets(const Matroid& m, const VariableOrder& order, int degree) {
  std::vector<Subset> broken;
  for (Subset c : m.circuits()) broken.push_back(broken_circuit(c, order));
  std::vector<Subset> out;
  for_each_k_subset(m.size(), degree, [&](Subset s) {
    for (Subset b : broken)
      if (is_subset(b, s)) return;
    out.push_back(s);
  });
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::optional<int> homotopy_degree(const Matroid& m) {
  std::optional<int> best;
  for (Subset c : m.circuits()) {
    const int k = popcount(c);
    if (k > 3 && (!best || k < *best)) best = k;
  }
  if (best) return *best - 2;
  return std::nullopt;
}

}  // namespace osa
