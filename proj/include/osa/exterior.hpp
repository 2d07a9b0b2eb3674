#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "osa/core.hpp"

namespace osa {

enum class DomainKind { Integer, Rational, Prime };

/// Coefficient ring: Z, Q, or F_p with p < 2^31.
class Domain {
 public:
  static Domain integers() { return Domain(DomainKind::Integer, 0); }
  static Domain rationals() { return Domain(DomainKind::Rational, 0); }
  static Domain prime(std::uint32_t p);

  /// Parses `z`, `q`, `f2`, `f3`, ..., `f<p>`.
  static Domain parse(const std::string& tag);

  DomainKind kind() const { return kind_; }
  std::uint32_t modulus() const { return modulus_; }
  bool is_field() const { return kind_ != DomainKind::Integer; }
  std::string tag() const;
  std::string name() const;

  friend bool operator==(const Domain&, const Domain&) = default;

 private:
  Domain(DomainKind k, std::uint32_t p) : kind_(k), modulus_(p) {}
  DomainKind kind_;
  std::uint32_t modulus_;
};

bool is_prime(std::uint64_t p);

/// An exact scalar tagged with its domain. Rationals are kept in lowest
/// terms, residues in [0, p).
class Coefficient {
 public:
  explicit Coefficient(Domain d, long v = 0);
  Coefficient(Domain d, const mpz_class& v);
  Coefficient(Domain d, const mpq_class& v);

  const Domain& domain() const { return domain_; }
  bool is_zero() const;
  bool is_one() const;
  /// Multiplicative inverse; over Z only +-1 are invertible.
  Coefficient inverse() const;
  std::string to_string() const;

  /// Value as a rational; residues map to their representative in [0, p).
  mpq_class to_rational() const;

  friend Coefficient operator+(const Coefficient& a, const Coefficient& b);
  friend Coefficient operator-(const Coefficient& a, const Coefficient& b);
  friend Coefficient operator*(const Coefficient& a, const Coefficient& b);
  friend Coefficient operator-(const Coefficient& a);
  friend bool operator==(const Coefficient& a, const Coefficient& b);

 private:
  Domain domain_;
  std::variant<mpz_class, mpq_class, std::uint32_t> value_;
};

/// Square-free monomial e_X.
struct Monomial {
  Subset bits = 0;
  int degree() const { return popcount(bits); }
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Variable order: `sequence()[0] <_pi sequence()[1] <_pi ...`.
class VariableOrder {
 public:
  static VariableOrder natural(int n);
  /// Elements listed from smallest to largest (0-based); must be a
  /// permutation of 0..n-1.
  static VariableOrder from_sequence(std::vector<int> sequence);

  int size() const { return static_cast<int>(sequence_.size()); }
  const std::vector<int>& sequence() const { return sequence_; }
  int position(int element) const { return position_[element]; }
  bool less(int a, int b) const { return position_[a] < position_[b]; }

  /// The <_pi-smallest element of `s`, or -1 for the empty set.
  int min_element(Subset s) const;
  /// Re-indexes `s` so that bit k stands for the k-th smallest element.
  Subset to_positions(Subset s) const;
  Subset from_positions(Subset s) const;

  friend bool operator==(const VariableOrder& a, const VariableOrder& b) {
    return a.sequence_ == b.sequence_;
  }

 private:
  explicit VariableOrder(std::vector<int> sequence);
  std::vector<int> sequence_;
  std::vector<int> position_;
};

/// Element of the exterior algebra: a finite map from monomials to nonzero
/// coefficients, all in one domain.
class ExtElement {
 public:
  using Terms = std::map<Subset, Coefficient>;

  explicit ExtElement(Domain d) : domain_(d) {}
  static ExtElement monomial(Domain d, Subset x, long coeff = 1);

  const Domain& domain() const { return domain_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Coefficient coefficient(Subset x) const;
  void add_term(Subset x, const Coefficient& c);

  bool is_homogeneous() const;
  /// Degree of a nonzero homogeneous element (max degree otherwise).
  int degree() const;

  /// Same element with coefficients mapped into `target` (Z -> Q or F_p).
  ExtElement convert(Domain target) const;

  ExtElement& operator+=(const ExtElement& other);
  ExtElement& operator-=(const ExtElement& other);
  friend ExtElement operator+(ExtElement a, const ExtElement& b) { return a += b; }
  friend ExtElement operator-(ExtElement a, const ExtElement& b) { return a -= b; }
  friend ExtElement operator*(const Coefficient& c, const ExtElement& f);
  friend bool operator==(const ExtElement& a, const ExtElement& b);

  /// `labels` defaults to 1-based indices.
  std::string to_string(const std::vector<std::string>& labels = {}) const;

 private:
  void check_domain(const Domain& d) const;
  Domain domain_;
  Terms terms_;
};

/// Sign of e_X ^ e_Y for disjoint X, Y: (-1)^{#{(x, y) in X x Y : x > y}}.
int wedge_sign(Subset x, Subset y);

ExtElement wedge(const ExtElement& a, const ExtElement& b);

/// The degree -1 derivation with d(e_i) = 1.
ExtElement boundary(const ExtElement& f);

/// Boundary of a single monomial with unit coefficient.
ExtElement boundary_of(Domain d, Subset x);

/// Degree first; within a degree the monomial holding the <_pi-largest
/// element of the symmetric difference is larger.
std::strong_ordering compare(const VariableOrder& order, Monomial x, Monomial y);

inline bool divides(Monomial x, Monomial y) { return is_subset(x.bits, y.bits); }

Monomial initial_monomial(const VariableOrder& order, const ExtElement& f);
Coefficient leading_coefficient(const VariableOrder& order, const ExtElement& f);

/// Reduces `f` modulo `divisors`: always the largest reducible term first,
/// and for it the divisor with the smallest index in the list.
ExtElement normal_form(const ExtElement& f, const std::vector<ExtElement>& divisors,
                       const VariableOrder& order);

/// Scales `f` so its leading coefficient is one.
ExtElement make_monic(const VariableOrder& order, const ExtElement& f);

}  // namespace osa
