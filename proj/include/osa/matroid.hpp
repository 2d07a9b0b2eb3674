#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "osa/core.hpp"
#include "osa/exterior.hpp"

namespace osa {

/// Hyperplane arrangement given by the normals of its hyperplanes; row i is
/// the linear form defining hyperplane i.
struct Arrangement {
  std::vector<std::vector<mpq_class>> normals;
};

/// A simple matroid on {0, ..., n-1} presented by its complete set of
/// circuits. Immutable; the rank table is built at construction for small n.
class Matroid {
 public:
  /// Validates the antichain property and weak circuit elimination on all
  /// pairs. Throws NonSimpleError, AntichainViolation, IncompleteCircuitList.
  static Matroid from_circuits(int n, const std::vector<Subset>& circuits);
  static Matroid from_matrix(const Arrangement& arrangement);
  /// Graphic matroid: ground set = edges in input order (vertices 0-based).
  static Matroid from_graph(int vertices, const std::vector<std::pair<int, int>>& edges);

  int size() const { return n_; }
  /// Circuits in canonical order (size, then lexicographic).
  const std::vector<Subset>& circuits() const { return circuits_; }
  std::vector<Subset> circuits_of_size(int k) const;

  const std::vector<std::string>& labels() const { return labels_; }
  Matroid with_labels(std::vector<std::string> labels) const;

  bool is_independent(Subset s) const;
  int rank(Subset s) const;
  int rank() const { return rank(full_set(n_)); }
  Subset closure(Subset s) const;
  bool is_circuit(Subset s) const;

 private:
  Matroid(int n, std::vector<Subset> circuits);
  int greedy_rank(Subset s) const;

  int n_ = 0;
  std::vector<Subset> circuits_;
  std::vector<std::string> labels_;
  std::vector<std::uint8_t> rank_table_;  // indexed by subset when n <= 16
};

/// Broken circuit of `c`: c minus its <_pi-smallest element.
Subset broken_circuit(Subset c, const VariableOrder& order);

/// Elements i such that I u {i} contains a circuit whose <_pi-minimum is i.
/// Throws PreconditionError if `independent` is dependent.
Subset active_elements(const Matroid& m, Subset independent, const VariableOrder& order);

/// Smallest active element with respect to c minus inf_pi(c).
int alpha(const Matroid& m, Subset circuit, const VariableOrder& order);

/// Circuits whose boundaries form the reduced Groebner basis of the
/// Orlik-Solomon ideal for `order`: those with inf = alpha whose broken
/// circuit is inclusion-minimal among such circuits. Canonical order.
std::vector<Subset> forge_circuits(const Matroid& m, const VariableOrder& order);

/// Count of forge circuits by size, indexed by |C| (length n + 1).
std::vector<int> forge_circuit_census(const Matroid& m, const VariableOrder& order);

/// Size-`degree` subsets containing no broken circuit.
std::vector<Subset> nbc_sets(const Matroid& m, const VariableOrder& order, int degree);

/// min{|C| : |C| > 3} - 2, when such a circuit exists. Equals the first
/// nontrivial higher homotopy degree only for hypersolvable, non-supersolvable
/// arrangements; that class is not checked here.
std::optional<int> homotopy_degree(const Matroid& m);

/// Exact rank of a set of rational vectors.
int rational_rank(const std::vector<std::vector<mpq_class>>& rows);

}  // namespace osa
