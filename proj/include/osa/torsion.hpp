#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "osa/matroid.hpp"
#include "osa/osideal.hpp"

namespace osa {

/// Dense matrix of arbitrary-precision integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  mpz_class& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const mpz_class& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void append_row(const std::vector<mpz_class>& row);
  std::vector<mpz_class> row(std::size_t r) const;
  IntMatrix scaled(const mpz_class& factor) const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> data_;
};

/// Smith form d_1 | d_2 | ... | d_r of a matrix read as a map Z^rows -> Z^cols
/// (rows are relations), so the cokernel is Z^{cols - r} + sum Z/d_i.
struct SNFResult {
  std::vector<mpz_class> divisors;
  std::size_t rank = 0;
  std::size_t cols = 0;

  std::size_t free_rank() const { return cols - rank; }
  bool torsion_free() const;
  /// Divisors greater than one.
  std::vector<mpz_class> torsion() const;
};

SNFResult smith_normal_form(const IntMatrix& m);

/// Row-style Hermite normal form: a basis of the row lattice, echelon with
/// positive pivots and reduced entries above each pivot.
IntMatrix hermite_basis(const IntMatrix& m);

/// Coordinates of `v` in the row lattice of a Hermite basis; throws
/// InvariantViolation when `v` is not in the lattice.
std::vector<mpz_class> lattice_coordinates(const IntMatrix& basis, std::vector<mpz_class> v);

/// Rows: coordinates of every e_S ^ d(e_C) with |S| + |C| - 1 = q and S
/// nonempty, in the monomial basis of L^q. Cokernel: A+^q.
IntMatrix presentation_Aplus(const Matroid& m, int q);

/// As above but including S = {} (the generators of I^q). Cokernel: A^q.
IntMatrix presentation_I(const Matroid& m, int q);

/// Group structure of (I / L+ I)^q: Hermite basis of I^q over Z, the L+ I
/// generators in those coordinates, then Smith form.
SNFResult quotient_group_I_mod_decomposable(const Matroid& m, int q);

/// True iff the generator matrix of I^q has all Smith divisors 1.
bool saturation_check_I(const Matroid& m, int q);

struct DegreeTorsion {
  int degree = 0;
  SNFResult decomposable_algebra;  // A+^q
  SNFResult quotient;              // (I / L+ I)^q
  bool ideal_saturated = false;
  bool torsion_free = false;
};

struct TorsionReport {
  std::vector<DegreeTorsion> degrees;  // q = 0..n
  /// Fields whose dimensions were compared with the free ranks.
  std::vector<Domain> fields;
  /// Free ranks equal dim A+^q and dim (I / L+ I)^q over every field.
  bool ranks_match_fields = false;

  bool torsion_free() const;
};

TorsionReport torsion_report(const Matroid& m,
                             const std::vector<Domain>& fields = {Domain::rationals(), Domain::prime(2),
                                                                   Domain::prime(3), Domain::prime(5)});

}  // namespace osa
