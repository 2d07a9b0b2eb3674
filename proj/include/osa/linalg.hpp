#pragma once

// Exact dense linear algebra over the coefficient fields used for graded
// dimension counts and the reduced Groebner basis oracle.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

#include "osa/core.hpp"

namespace osa::linalg {

struct PrimeField {
  using Value = std::uint32_t;
  std::uint32_t p;

  Value zero() const { return 0; }
  Value one() const { return 1; }
  bool is_zero(Value v) const { return v == 0; }
  Value from_long(long v) const {
    const long r = v % static_cast<long>(p);
    return static_cast<Value>(r < 0 ? r + p : r);
  }
  Value add(Value a, Value b) const { return static_cast<Value>((std::uint64_t{a} + b) % p); }
  Value sub(Value a, Value b) const { return static_cast<Value>((std::uint64_t{a} + p - b) % p); }
  Value mul(Value a, Value b) const { return static_cast<Value>(std::uint64_t{a} * b % p); }
  Value neg(Value a) const { return a == 0 ? 0 : p - a; }
  Value inv(Value a) const {
    std::uint64_t r = 1, b = a, e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return static_cast<Value>(r);
  }
  /// a - f*b
  Value sub_mul(Value a, Value f, Value b) const { return sub(a, mul(f, b)); }
  mpq_class to_rational(Value v) const { return mpq_class(static_cast<unsigned long>(v)); }
};

/// Thrown by SmallRationalField when a value leaves the int64 range.
struct RationalOverflow : std::overflow_error {
  RationalOverflow() : std::overflow_error("int64 rational overflow") {}
};

/// Rationals with int64 numerator and denominator, lowest terms, positive
/// denominator. Arithmetic throws RationalOverflow instead of wrapping.
struct SmallRationalField {
  struct Value {
    std::int64_t num = 0;
    std::int64_t den = 1;
    friend bool operator==(const Value&, const Value&) = default;
  };

  static Value make(__int128 num, __int128 den) {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    __int128 a = num < 0 ? -num : num, b = den;
    while (b) {
      const __int128 t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) {
      num /= a;
      den /= a;
    }
    constexpr __int128 lim = INT64_MAX;
    if (num > lim || num < -lim || den > lim) throw RationalOverflow();
    return {static_cast<std::int64_t>(num), static_cast<std::int64_t>(den)};
  }

  Value zero() const { return {0, 1}; }
  Value one() const { return {1, 1}; }
  bool is_zero(const Value& v) const { return v.num == 0; }
  Value from_long(long v) const { return {v, 1}; }
  Value add(const Value& a, const Value& b) const {
    if (a.den == 1 && b.den == 1) return make(__int128{a.num} + b.num, 1);
    return make(__int128{a.num} * b.den + __int128{b.num} * a.den, __int128{a.den} * b.den);
  }
  Value neg(const Value& a) const { return {-a.num, a.den}; }
  Value sub(const Value& a, const Value& b) const { return add(a, neg(b)); }
  Value mul(const Value& a, const Value& b) const {
    if (a.den == 1 && b.den == 1) return make(__int128{a.num} * b.num, 1);
    return make(__int128{a.num} * b.num, __int128{a.den} * b.den);
  }
  Value inv(const Value& a) const { return make(a.den, a.num); }
  Value sub_mul(const Value& a, const Value& f, const Value& b) const { return sub(a, mul(f, b)); }
  mpq_class to_rational(const Value& v) const {
    mpq_class q(mpz_class(static_cast<long>(v.num)), mpz_class(static_cast<long>(v.den)));
    q.canonicalize();
    return q;
  }
};

struct RationalField {
  using Value = mpq_class;
  Value zero() const { return 0; }
  Value one() const { return 1; }
  bool is_zero(const Value& v) const { return sgn(v) == 0; }
  Value from_long(long v) const { return v; }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value neg(const Value& a) const { return -a; }
  Value inv(const Value& a) const { return 1 / a; }
  Value sub_mul(const Value& a, const Value& f, const Value& b) const { return a - f * b; }
  mpq_class to_rational(const Value& v) const { return v; }
};

/// Row echelon form maintained incrementally. Each stored row is monic at
/// its pivot, the first nonzero column; rows are kept sorted by pivot.
template <class Field>
class RowEchelon {
 public:
  using Value = typename Field::Value;
  using Row = std::vector<Value>;

  RowEchelon(Field field, std::size_t cols) : field_(field), cols_(cols) {}

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<Row>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  const Field& field() const { return field_; }

  /// Reduces `row` against the stored rows; keeps the remainder if nonzero.
  bool insert(Row row) {
    reduce(row);
    std::size_t pivot = 0;
    while (pivot < cols_ && field_.is_zero(row[pivot])) ++pivot;
    if (pivot == cols_) return false;
    const Value scale = field_.inv(row[pivot]);
    for (std::size_t j = pivot; j < cols_; ++j)
      if (!field_.is_zero(row[j])) row[j] = field_.mul(row[j], scale);
    const auto at = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
    const auto k = at - pivots_.begin();
    pivots_.insert(at, pivot);
    rows_.insert(rows_.begin() + k, std::move(row));
    return true;
  }

  /// Subtracts multiples of stored rows so that `row` vanishes on every pivot.
  void reduce(Row& row) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const std::size_t p = pivots_[k];
      if (field_.is_zero(row[p])) continue;
      const Value factor = row[p];
      const Row& basis = rows_[k];
      for (std::size_t j = p; j < cols_; ++j)
        if (!field_.is_zero(basis[j])) row[j] = field_.sub_mul(row[j], factor, basis[j]);
    }
  }

  bool contains(Row row) const {
    reduce(row);
    return std::all_of(row.begin(), row.end(), [this](const Value& v) { return field_.is_zero(v); });
  }

  /// Clears every pivot column above its pivot (reduced row echelon form).
  void reduce_fully() {
    for (std::size_t k = rows_.size(); k-- > 0;) {
      const std::size_t p = pivots_[k];
      for (std::size_t i = 0; i < k; ++i) {
        if (field_.is_zero(rows_[i][p])) continue;
        const Value factor = rows_[i][p];
        for (std::size_t j = p; j < cols_; ++j)
          if (!field_.is_zero(rows_[k][j])) rows_[i][j] = field_.sub_mul(rows_[i][j], factor, rows_[k][j]);
      }
    }
  }

 private:
  Field field_;
  std::size_t cols_;
  std::vector<Row> rows_;
  std::vector<std::size_t> pivots_;
};

/// Colex ranking of the k-subsets of {0..n-1}; rank(S) = sum_j C(s_j, j+1).
class DegreeIndex {
 public:
  DegreeIndex(int n, int degree);
  int degree() const { return degree_; }
  std::size_t size() const { return monomials_.size(); }
  const std::vector<Subset>& monomials() const { return monomials_; }
  std::size_t rank(Subset s) const;

 private:
  int n_;
  int degree_;
  std::vector<Subset> monomials_;
  std::vector<std::vector<std::uint64_t>> binom_;
};

}  // namespace osa::linalg
