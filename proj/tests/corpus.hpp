#pragma once

// Matroids used across the unit and acceptance tests, plus brute-force
// oracles that share no code with the library beyond the basic types.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "osa/exterior.hpp"
#include "osa/matroid.hpp"

namespace corpus {

using osa::Matroid;
using osa::Subset;

using Edges = std::vector<std::pair<int, int>>;

struct Instance {
  std::string name;
  Matroid matroid;
  std::optional<Edges> edges;  // graphic instances
  int vertices = 0;
};

inline std::vector<Subset> all_k_subsets(int n, int k) {
  std::vector<Subset> out;
  for (Subset s = 0; s < (Subset{1} << n); ++s)
    if (std::popcount(s) == k) out.push_back(s);
  return out;
}

inline Matroid uniform(int r, int n) { return Matroid::from_circuits(n, all_k_subsets(n, r + 1)); }

inline osa::Arrangement integer_rows(const std::vector<std::vector<long>>& rows) {
  osa::Arrangement a;
  for (const auto& r : rows) {
    std::vector<mpq_class> row;
    for (long v : r) row.emplace_back(v);
    a.normals.push_back(row);
  }
  return a;
}

inline osa::Arrangement six_plane_rows() {
  return integer_rows({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {1, 1, 1, 1}, {1, -1, -1, 1}});
}

inline Matroid six_planes() {
  return Matroid::from_matrix(six_plane_rows()).with_labels({"x", "y", "z", "t", "H", "P"});
}

inline Edges cycle_edges(int v) {
  Edges e;
  for (int i = 0; i < v; ++i) e.emplace_back(i, (i + 1) % v);
  return e;
}

inline Instance graphic(std::string name, int v, Edges e) {
  return {std::move(name), Matroid::from_graph(v, e), e, v};
}

inline Instance k4() { return graphic("K4", 4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

inline Instance c5_with(const Edges& chords, std::string name) {
  Edges e = cycle_edges(5);
  e.insert(e.end(), chords.begin(), chords.end());
  return graphic(std::move(name), 5, e);
}

inline std::vector<Instance> chorded_c5_family() {
  return {c5_with({}, "C5"), c5_with({{0, 2}}, "C5+1chord"), c5_with({{0, 2}, {0, 3}}, "C5+fan"),
          c5_with({{0, 2}, {1, 3}}, "C5+crossing")};
}

inline Instance non_fano() {
  return {"non-Fano",
          Matroid::from_matrix(integer_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}})),
          std::nullopt, 0};
}

inline Instance wheel4() {
  Edges e = {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {0, 1}, {0, 2}, {0, 3}, {0, 4}};
  return graphic("W4", 5, e);
}

inline Instance k33() {
  Edges e;
  for (int a = 0; a < 3; ++a)
    for (int b = 3; b < 6; ++b) e.emplace_back(a, b);
  return graphic("K3,3", 6, e);
}

inline std::vector<Instance> all() {
  std::vector<Instance> out = {{"U2,3", uniform(2, 3), std::nullopt, 0},
                               {"U3,4", uniform(3, 4), std::nullopt, 0},
                               {"U3,5", uniform(3, 5), std::nullopt, 0},
                               {"U4,6", uniform(4, 6), std::nullopt, 0},
                               k4(),
                               {"six-planes", six_planes(), std::nullopt, 0}};
  for (auto& inst : chorded_c5_family()) out.push_back(inst);
  out.push_back(non_fano());
  out.push_back(wheel4());
  out.push_back(k33());
  return out;
}

// ---- oracles -------------------------------------------------------------

/// Rank of integer-like rows mod a large prime by plain elimination.
inline int rank_mod_p(std::vector<std::vector<std::int64_t>> rows, std::int64_t p) {
  int rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  auto power = [p](std::int64_t b, std::int64_t e) {
    std::int64_t r = 1;
    b %= p;
    for (; e; e >>= 1, b = b * b % p)
      if (e & 1) r = r * b % p;
    return r;
  };
  for (auto& r : rows)
    for (auto& v : r) v = ((v % p) + p) % p;
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    const std::int64_t inv = power(rows[rank][c], p - 2);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<int>(i) == rank || rows[i][c] == 0) continue;
      const std::int64_t f = rows[i][c] * inv % p;
      for (std::size_t j = c; j < cols; ++j) rows[i][j] = ((rows[i][j] - f * rows[rank][j]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

/// Circuits of a vector configuration by brute force over subsets.
inline std::vector<Subset> circuits_by_rank(int n, const std::function<int(Subset)>& rank) {
  std::vector<Subset> dependent_minimal;
  for (Subset s = 1; s < (Subset{1} << n); ++s) {
    if (rank(s) == std::popcount(s)) continue;
    bool minimal = true;
    for (int i = 0; i < n && minimal; ++i)
      if ((s >> i) & 1) minimal = rank(s & ~(Subset{1} << i)) == std::popcount(s) - 1;
    if (minimal) dependent_minimal.push_back(s);
  }
  std::sort(dependent_minimal.begin(), dependent_minimal.end(), osa::canonical_less);
  return dependent_minimal;
}

inline std::function<int(Subset)> matrix_rank(const std::vector<std::vector<long>>& rows) {
  return [rows](Subset s) {
    std::vector<std::vector<std::int64_t>> picked;
    for (std::size_t i = 0; i < rows.size(); ++i)
      if ((s >> i) & 1) picked.emplace_back(rows[i].begin(), rows[i].end());
    return rank_mod_p(picked, 1000000007);
  };
}

inline std::function<int(Subset)> graph_rank(int v, const Edges& edges) {
  return [v, edges](Subset s) {
    std::vector<int> parent(v);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    int r = 0;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (!((s >> i) & 1)) continue;
      const int a = find(edges[i].first), b = find(edges[i].second);
      if (a != b) parent[a] = b, ++r;
    }
    return r;
  };
}

/// Edge sets forming a single cycle with no chord in the graph.
inline std::vector<Subset> chordless_cycles(int v, const Edges& edges) {
  std::vector<Subset> out;
  const int m = static_cast<int>(edges.size());
  for (Subset s = 1; s < (Subset{1} << m); ++s) {
    std::vector<int> degree(v, 0);
    for (int i = 0; i < m; ++i)
      if ((s >> i) & 1) ++degree[edges[i].first], ++degree[edges[i].second];
    if (std::any_of(degree.begin(), degree.end(), [](int d) { return d != 0 && d != 2; })) continue;
    // connected: the cycle's vertices all reachable through chosen edges
    std::vector<int> seen(v, 0), stack;
    const int start = std::find(degree.begin(), degree.end(), 2) - degree.begin();
    stack.push_back(start);
    seen[start] = 1;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int i = 0; i < m; ++i) {
        if (!((s >> i) & 1)) continue;
        int y = edges[i].first == x ? edges[i].second : edges[i].second == x ? edges[i].first : -1;
        if (y >= 0 && !seen[y]) seen[y] = 1, stack.push_back(y);
      }
    }
    bool single = true;
    for (int x = 0; x < v; ++x) single = single && (degree[x] == 0 || seen[x]);
    if (!single) continue;
    bool chord = false;
    for (int i = 0; i < m; ++i)
      if (!((s >> i) & 1) && degree[edges[i].first] == 2 && degree[edges[i].second] == 2) chord = true;
    if (!chord) out.push_back(s);
  }
  return out;
}

/// Position of each element in a 0-based order sequence.
inline std::vector<int> positions(const std::vector<int>& seq) {
  std::vector<int> pos(seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i) pos[seq[i]] = static_cast<int>(i);
  return pos;
}

inline int order_min(Subset s, const std::vector<int>& pos) {
  int best = -1;
  for (int i = 0; i < static_cast<int>(pos.size()); ++i)
    if (((s >> i) & 1) && (best < 0 || pos[i] < pos[best])) best = i;
  return best;
}

/// The forge circuits straight from the definition: C qualifies when its
/// order-minimum is the smallest element active on its broken circuit, and
/// its broken circuit is inclusion-minimal among the qualifying ones.
inline std::vector<Subset> forge_by_definition(const Matroid& m, const std::vector<int>& seq) {
  const auto pos = positions(seq);
  auto broken = [&](Subset c) { return c & ~(Subset{1} << order_min(c, pos)); };
  std::vector<Subset> first_pass;
  for (Subset c : m.circuits()) {
    const Subset b = broken(c);
    int smallest_active = -1;
    for (int i = 0; i < m.size(); ++i) {
      bool active = false;
      for (Subset d : m.circuits())
        if (((d >> i) & 1) && (d & ~(b | (Subset{1} << i))) == 0 && order_min(d, pos) == i) active = true;
      if (active && (smallest_active < 0 || pos[i] < pos[smallest_active])) smallest_active = i;
    }
    if (smallest_active == order_min(c, pos)) first_pass.push_back(c);
  }
  std::vector<Subset> out;
  for (Subset c : first_pass) {
    bool minimal = true;
    for (Subset d : first_pass)
      if (d != c && (broken(d) & ~broken(c)) == 0) minimal = false;
    if (minimal) out.push_back(c);
  }
  std::sort(out.begin(), out.end(), osa::canonical_less);
  return out;
}

/// Count of size-q sets containing no broken circuit.
inline std::size_t nbc_count(const Matroid& m, const std::vector<int>& seq, int q) {
  const auto pos = positions(seq);
  std::vector<Subset> broken;
  for (Subset c : m.circuits()) broken.push_back(c & ~(Subset{1} << order_min(c, pos)));
  std::size_t count = 0;
  for (Subset s : all_k_subsets(m.size(), q))
    if (std::none_of(broken.begin(), broken.end(), [s](Subset b) { return (b & ~s) == 0; })) ++count;
  return count;
}

/// dim over F_p of I^q and (L+ I)^q from their spanning sets e_S ^ d(e_C).
inline std::pair<int, int> ideal_dims_mod_p(const Matroid& m, int q, std::uint32_t p) {
  const osa::Domain f = osa::Domain::prime(p);
  const auto cols = all_k_subsets(m.size(), q);
  std::map<Subset, std::size_t> index;
  for (std::size_t i = 0; i < cols.size(); ++i) index[cols[i]] = i;
  std::vector<std::vector<std::int64_t>> all_rows, decomposable_rows;
  for (Subset c : m.circuits()) {
    const int s_size = q - (std::popcount(c) - 1);
    if (s_size < 0) continue;
    const osa::ExtElement bc = osa::boundary_of(f, c);
    for (Subset s : all_k_subsets(m.size(), s_size)) {
      const osa::ExtElement g = osa::wedge(osa::ExtElement::monomial(f, s), bc);
      if (g.is_zero()) continue;
      std::vector<std::int64_t> row(cols.size(), 0);
      for (const auto& [x, coeff] : g.terms())
        row[index.at(x)] = std::stoll(coeff.to_string());
      all_rows.push_back(row);
      if (s_size > 0) decomposable_rows.push_back(row);
    }
  }
  return {rank_mod_p(all_rows, p), rank_mod_p(decomposable_rows, p)};
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> seq(n);
  std::iota(seq.begin(), seq.end(), 0);
  std::shuffle(seq.begin(), seq.end(), rng);
  return seq;
}

}  // namespace corpus
