#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "osa/exterior.hpp"
#include "osa/matroid.hpp"

namespace osa {

enum class BasisSource { Forge, Oracle };

/// Reduced Groebner basis of the Orlik-Solomon ideal for one variable order.
struct GroebnerBasis {
  VariableOrder order;
  std::vector<ExtElement> elements;
  BasisSource source = BasisSource::Forge;
  /// The circuits behind each element (forge bases only).
  std::vector<Subset> circuits;

  std::vector<Monomial> leading_monomials() const;
  /// Checks monic leads, pairwise non-divisibility, tail reducedness and
  /// homogeneity.
  bool is_reduced() const;
};

/// Element sets equal (order of listing ignored).
bool same_elements(const GroebnerBasis& a, const GroebnerBasis& b);

/// Boundaries of all circuits.
std::vector<ExtElement> os_generators(const Matroid& m, Domain domain = Domain::integers());

/// Boundaries of the forge circuits, leading coefficient normalized to 1.
GroebnerBasis forge_basis(const Matroid& m, const VariableOrder& order,
                          Domain domain = Domain::integers());

/// Linear-algebra reduced Groebner basis, independent of the forge
/// description. Keeps the order-independent spans of I^d so that many
/// orders can be checked against one matroid.
class GroebnerOracle {
 public:
  /// `field` must be Q or F_p.
  GroebnerOracle(const Matroid& m, Domain field);
  GroebnerOracle(GroebnerOracle&&) noexcept;
  GroebnerOracle& operator=(GroebnerOracle&&) noexcept;
  ~GroebnerOracle();

  GroebnerBasis reduced_basis(const VariableOrder& order) const;
  /// dim I^d over the field, d = 0..n.
  const std::vector<std::size_t>& ideal_dims() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

GroebnerBasis reduced_gb_oracle(const Matroid& m, const VariableOrder& order, Domain field);

struct DegreeDims {
  int degree = 0;
  std::uint64_t ambient = 0;             // C(n, q)
  std::uint64_t ideal = 0;               // I^q
  std::uint64_t decomposable = 0;        // (L+ I)^q
  std::uint64_t algebra = 0;             // A^q
  std::uint64_t decomposable_algebra = 0;  // A+^q
  std::uint64_t quotient = 0;            // (I / L+ I)^q

  friend bool operator==(const DegreeDims&, const DegreeDims&) = default;
};

struct GradedDims {
  Domain field = Domain::rationals();
  std::vector<DegreeDims> degrees;  // q = 0..max_degree
};

/// Exact graded dimensions over `field` for q = 0..max_degree (default
/// rank + 1, clipped to n).
GradedDims graded_dims(const Matroid& m, Domain field, std::optional<int> max_degree = std::nullopt);

/// |C^pi_{q+1}|: the number of forge circuits with q + 1 elements.
int decomposable_dim_by_counting(const Matroid& m, int q, const VariableOrder& order);

/// |nbc_q| = dim A^q for every q.
bool nbc_dimension_check(const Matroid& m, const VariableOrder& order, Domain field);

}  // namespace osa
