#include "osa/torsion.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace osa {

using IntRow = std::vector<mpz_class>;

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows, std::size_t cols) {
  IntMatrix m(0, cols);
  for (const auto& r : rows) {
    if (r.size() != cols) throw PreconditionError("row length differs from column count");
    m.append_row(IntRow(r.begin(), r.end()));
  }
  return m;
}

void IntMatrix::append_row(const std::vector<mpz_class>& row) {
  if (row.size() != cols_) throw PreconditionError("row length differs from column count");
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

std::vector<mpz_class> IntMatrix::row(std::size_t r) const {
  return IntRow(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

IntMatrix IntMatrix::scaled(const mpz_class& factor) const {
  IntMatrix out = *this;
  for (auto& v : out.data_) v *= factor;
  return out;
}

bool SNFResult::torsion_free() const {
  return std::all_of(divisors.begin(), divisors.end(), [](const mpz_class& d) { return d == 1; });
}

std::vector<mpz_class> SNFResult::torsion() const {
  std::vector<mpz_class> out;
  for (const auto& d : divisors)
    if (d > 1) out.push_back(d);
  return out;
}

namespace {

int cmpabs(const mpz_class& a, const mpz_class& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

/// row_i -= q * row_t on columns >= from.
void row_submul(IntRow& target, const IntRow& source, const mpz_class& q, std::size_t from) {
  for (std::size_t j = from; j < target.size(); ++j)
    if (sgn(source[j]) != 0) target[j] -= q * source[j];
}

SNFResult dense_smith(std::vector<IntRow> a, std::size_t cols) {
  const std::size_t rows = a.size();
  SNFResult out;
  out.cols = cols;

  // Moves the nonzero entry of least absolute value in the trailing block
  // to (t, t). Returns false if the block is zero.
  auto bring_min_pivot = [&](std::size_t t) {
    std::size_t bi = rows, bj = cols;
    for (std::size_t i = t; i < rows; ++i) {
      for (std::size_t j = t; j < cols; ++j) {
        if (sgn(a[i][j]) == 0) continue;
        if (bi == rows || cmpabs(a[i][j], a[bi][bj]) < 0) {
          bi = i;
          bj = j;
          if (a[i][j] == 1 || a[i][j] == -1) break;
        }
      }
      if (bi != rows && (a[bi][bj] == 1 || a[bi][bj] == -1)) break;
    }
    if (bi == rows) return false;
    std::swap(a[t], a[bi]);
    if (bj != t)
      for (std::size_t i = t; i < rows; ++i) std::swap(a[i][t], a[i][bj]);
    return true;
  };

  const std::size_t limit = std::min(rows, cols);
  std::size_t t = 0;
  mpz_class q;
  for (; t < limit; ++t) {
    if (!bring_min_pivot(t)) break;
    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (sgn(a[i][t]) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
        row_submul(a[i], a[t], q, t);
        if (sgn(a[i][t]) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (sgn(a[t][j]) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
        for (std::size_t i = t; i < rows; ++i)
          if (sgn(a[i][t]) != 0) a[i][j] -= q * a[i][t];
        if (sgn(a[t][j]) != 0) clean = false;
      }
      if (!clean) {
        // A remainder smaller than the pivot survived in row or column t.
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < rows; ++i)
          if (sgn(a[i][t]) != 0 && cmpabs(a[i][t], a[bi][bj]) < 0) bi = i, bj = t;
        for (std::size_t j = t + 1; j < cols; ++j)
          if (sgn(a[t][j]) != 0 && cmpabs(a[t][j], a[bi][bj]) < 0) bi = t, bj = j;
        if (bi != t) std::swap(a[t], a[bi]);
        if (bj != t)
          for (std::size_t i = t; i < rows; ++i) std::swap(a[i][t], a[i][bj]);
        continue;
      }
      // Row and column t are clear; enforce d_t | every later entry.
      if (a[t][t] == 1 || a[t][t] == -1) break;
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (sgn(a[i][j]) != 0 && !mpz_divisible_p(a[i][j].get_mpz_t(), a[t][t].get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      for (std::size_t j = t; j < cols; ++j) a[t][j] += a[bad][j];
    }
    out.divisors.push_back(abs(a[t][t]));
  }
  out.rank = out.divisors.size();
  return out;
}

/// Sparse integer row: (column, value) pairs, increasing columns, no zeros.
using SparseRow = std::vector<std::pair<std::size_t, mpz_class>>;

/// a*x + b*y.
SparseRow combine(const mpz_class& a, const SparseRow& x, const mpz_class& b, const SparseRow& y) {
  SparseRow out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  mpz_class v;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      v = a * x[i].second;
      if (sgn(v) != 0) out.emplace_back(x[i].first, v);
      ++i;
    } else if (i == x.size() || y[j].first < x[i].first) {
      v = b * y[j].second;
      if (sgn(v) != 0) out.emplace_back(y[j].first, v);
      ++j;
    } else {
      v = a * x[i].second + b * y[j].second;
      if (sgn(v) != 0) out.emplace_back(x[i].first, v);
      ++i, ++j;
    }
  }
  return out;
}

void negate(SparseRow& r) {
  for (auto& e : r) e.second = -e.second;
}

/// Row lattice kept as an echelon basis (one row per pivot column, positive
/// pivots). Rows are inserted one at a time with unimodular gcd steps, so the
/// basis never exceeds the column count.
class EchelonLattice {
 public:
  explicit EchelonLattice(std::size_t cols) : cols_(cols) {}

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }
  const std::map<std::size_t, SparseRow>& rows() const { return rows_; }

  void insert(SparseRow v) {
    mpz_class g, s, t, f;
    while (!v.empty()) {
      const std::size_t p = v.front().first;
      auto it = rows_.find(p);
      if (it == rows_.end()) {
        if (sgn(v.front().second) < 0) negate(v);
        rows_.emplace(p, std::move(v));
        return;
      }
      SparseRow& b = it->second;
      const mpz_class a = b.front().second, c = v.front().second;
      if (mpz_divisible_p(c.get_mpz_t(), a.get_mpz_t())) {
        mpz_divexact(f.get_mpz_t(), c.get_mpz_t(), a.get_mpz_t());
        v = combine(1, v, -f, b);
        continue;
      }
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
      SparseRow pivot = combine(s, b, t, v);
      v = combine(c / g, b, -(a / g), v);
      if (sgn(pivot.front().second) < 0) negate(pivot);
      b = std::move(pivot);
    }
  }

  void insert(const IntRow& dense) {
    SparseRow v;
    for (std::size_t j = 0; j < dense.size(); ++j)
      if (sgn(dense[j]) != 0) v.emplace_back(j, dense[j]);
    insert(std::move(v));
  }

  /// Reduces the entries above each pivot into [0, pivot); with `units_only`
  /// only the columns of unit pivots are touched.
  void reduce_above(bool units_only) {
    std::vector<SparseRow*> order;
    for (auto& [p, r] : rows_) order.push_back(&r);
    mpz_class f;
    for (std::size_t k = 0; k < order.size(); ++k) {
      const SparseRow& pivot_row = *order[k];
      const std::size_t p = pivot_row.front().first;
      const mpz_class& d = pivot_row.front().second;
      if (units_only && d != 1) continue;
      for (std::size_t i = 0; i < k; ++i) {
        SparseRow& r = *order[i];
        auto e = std::lower_bound(r.begin(), r.end(), p, [](const auto& x, std::size_t c) { return x.first < c; });
        if (e == r.end() || e->first != p) continue;
        mpz_fdiv_q(f.get_mpz_t(), e->second.get_mpz_t(), d.get_mpz_t());
        if (sgn(f) != 0) r = combine(1, r, -f, pivot_row);
      }
    }
  }

  /// Smith form of the lattice. After clearing above the unit pivots, each
  /// unit-pivot row splits off as a direct summand Z/1, leaving a small
  /// dense block for the general algorithm.
  SNFResult smith() {
    reduce_above(true);
    std::vector<std::size_t> kept_cols;
    std::vector<std::size_t> index(cols_, cols_);
    std::set<std::size_t> unit_cols;
    for (const auto& [p, r] : rows_)
      if (r.front().second == 1) unit_cols.insert(p);
    for (std::size_t j = 0; j < cols_; ++j)
      if (!unit_cols.count(j)) {
        index[j] = kept_cols.size();
        kept_cols.push_back(j);
      }
    std::vector<IntRow> rest;
    for (const auto& [p, r] : rows_) {
      if (unit_cols.count(p)) continue;
      IntRow dense(kept_cols.size());
      for (const auto& [j, v] : r) dense[index[j]] = v;
      rest.push_back(std::move(dense));
    }
    SNFResult block = dense_smith(std::move(rest), kept_cols.size());
    SNFResult out;
    out.cols = cols_;
    out.divisors.assign(unit_cols.size(), mpz_class(1));
    out.divisors.insert(out.divisors.end(), block.divisors.begin(), block.divisors.end());
    out.rank = out.divisors.size();
    return out;
  }

  /// Coordinates of `v` against the basis rows in pivot order.
  SparseRow coordinates(SparseRow v, const std::map<std::size_t, std::size_t>& position) const {
    SparseRow x;
    mpz_class f;
    while (!v.empty()) {
      const std::size_t p = v.front().first;
      auto it = rows_.find(p);
      if (it == rows_.end()) throw InvariantViolation("vector is not in the lattice (non-pivot column)");
      const mpz_class& d = it->second.front().second;
      if (!mpz_divisible_p(v.front().second.get_mpz_t(), d.get_mpz_t()))
        throw InvariantViolation("vector is not in the lattice (pivot not divisible)");
      mpz_divexact(f.get_mpz_t(), v.front().second.get_mpz_t(), d.get_mpz_t());
      x.emplace_back(position.at(p), f);
      v = combine(1, v, -f, it->second);
    }
    return x;
  }

 private:
  std::size_t cols_;
  std::map<std::size_t, SparseRow> rows_;
};

}  // namespace

SNFResult smith_normal_form(const IntMatrix& m) {
  EchelonLattice lattice(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) lattice.insert(m.row(r));
  return lattice.smith();
}

IntMatrix hermite_basis(const IntMatrix& m) {
  EchelonLattice lattice(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) lattice.insert(m.row(r));
  lattice.reduce_above(false);
  IntMatrix out(0, m.cols());
  for (const auto& [p, r] : lattice.rows()) {
    IntRow dense(m.cols());
    for (const auto& [j, v] : r) dense[j] = v;
    out.append_row(dense);
  }
  return out;
}

std::vector<mpz_class> lattice_coordinates(const IntMatrix& basis, std::vector<mpz_class> v) {
  if (v.size() != basis.cols()) throw PreconditionError("vector length differs from lattice dimension");
  std::vector<mpz_class> x(basis.rows());
  std::size_t col = 0;
  for (std::size_t k = 0; k < basis.rows(); ++k) {
    std::size_t pivot = 0;
    while (sgn(basis.at(k, pivot)) == 0) ++pivot;
    for (; col < pivot; ++col)
      if (sgn(v[col]) != 0) throw InvariantViolation("vector is not in the lattice (non-pivot column)");
    if (!mpz_divisible_p(v[pivot].get_mpz_t(), basis.at(k, pivot).get_mpz_t()))
      throw InvariantViolation("vector is not in the lattice (pivot not divisible)");
    mpz_divexact(x[k].get_mpz_t(), v[pivot].get_mpz_t(), basis.at(k, pivot).get_mpz_t());
    if (sgn(x[k]) != 0)
      for (std::size_t j = pivot; j < v.size(); ++j)
        if (sgn(basis.at(k, j)) != 0) v[j] -= x[k] * basis.at(k, j);
    col = pivot + 1;
  }
  for (; col < v.size(); ++col)
    if (sgn(v[col]) != 0) throw InvariantViolation("vector is not in the lattice (residual)");
  return x;
}

namespace {

/// Integer coordinates of e_S ^ d(e_C) for every circuit C and every S with
/// |S| = q - |C| + 1 >= min_extra, passed to `emit` as sparse rows over the
/// degree-q monomials in colex order. Zero products are skipped and rows
/// equal up to sign are emitted once; neither changes the row lattice.
template <class Emit>
std::size_t for_each_generator(const Matroid& m, int q, int min_extra, Emit&& emit) {
  const int n = m.size();
  if (q < 0 || q > n) throw PreconditionError("degree outside 0..n");
  std::map<Subset, std::size_t> column;
  for_each_k_subset(n, q, [&](Subset s) { column.emplace(s, column.size()); });

  std::set<std::vector<std::pair<std::size_t, int>>> seen;
  for (Subset c : m.circuits()) {
    const int extra = q - popcount(c) + 1;
    if (extra < min_extra) continue;
    const auto circ = elements(c);
    for_each_k_subset(n, extra, [&](Subset s) {
      std::map<std::size_t, int> row;
      for (std::size_t k = 0; k < circ.size(); ++k) {
        const Subset face = c & ~singleton(circ[k]);
        if (face & s) continue;
        int sign = (k % 2 == 0) ? 1 : -1;
        sign *= wedge_sign(s, face);
        row[column.at(s | face)] += sign;
      }
      std::vector<std::pair<std::size_t, int>> sparse;
      for (auto [j, v] : row)
        if (v != 0) sparse.emplace_back(j, v);
      if (sparse.empty()) return;
      if (sparse.front().second < 0)
        for (auto& e : sparse) e.second = -e.second;
      if (!seen.insert(sparse).second) return;
      SparseRow out;
      for (auto [j, v] : sparse) out.emplace_back(j, mpz_class(v));
      emit(std::move(out));
    });
  }
  return column.size();
}

IntMatrix generator_matrix(const Matroid& m, int q, int min_extra) {
  std::vector<SparseRow> rows;
  const std::size_t cols = for_each_generator(m, q, min_extra, [&](SparseRow r) { rows.push_back(std::move(r)); });
  IntMatrix out(0, cols);
  for (const auto& r : rows) {
    IntRow dense(cols);
    for (const auto& [j, v] : r) dense[j] = v;
    out.append_row(dense);
  }
  return out;
}

EchelonLattice generated_lattice(const Matroid& m, int q, int min_extra) {
  const int n = m.size();
  if (q < 0 || q > n) throw PreconditionError("degree outside 0..n");
  EchelonLattice lattice(static_cast<std::size_t>(binomial(n, q)));
  for_each_generator(m, q, min_extra, [&](SparseRow r) { lattice.insert(std::move(r)); });
  return lattice;
}

SNFResult quotient_group(const Matroid& m, int q, const EchelonLattice& ideal) {
  std::map<std::size_t, std::size_t> position;
  for (const auto& [p, r] : ideal.rows()) position.emplace(p, position.size());
  EchelonLattice coords(ideal.rank());
  for_each_generator(m, q, 1, [&](SparseRow r) { coords.insert(ideal.coordinates(std::move(r), position)); });
  return coords.smith();
}

}  // namespace

IntMatrix presentation_Aplus(const Matroid& m, int q) { return generator_matrix(m, q, 1); }

IntMatrix presentation_I(const Matroid& m, int q) { return generator_matrix(m, q, 0); }

SNFResult quotient_group_I_mod_decomposable(const Matroid& m, int q) {
  return quotient_group(m, q, generated_lattice(m, q, 0));
}

bool saturation_check_I(const Matroid& m, int q) { return generated_lattice(m, q, 0).smith().torsion_free(); }

bool TorsionReport::torsion_free() const {
  return std::all_of(degrees.begin(), degrees.end(), [](const DegreeTorsion& d) { return d.torsion_free; });
}

TorsionReport torsion_report(const Matroid& m, const std::vector<Domain>& fields) {
  TorsionReport report;
  report.fields = fields;
  for (int q = 0; q <= m.size(); ++q) {
    DegreeTorsion d;
    d.degree = q;
    d.decomposable_algebra = generated_lattice(m, q, 1).smith();
    EchelonLattice ideal = generated_lattice(m, q, 0);
    d.quotient = quotient_group(m, q, ideal);
    d.ideal_saturated = ideal.smith().torsion_free();
    d.torsion_free = d.decomposable_algebra.torsion_free() && d.quotient.torsion_free();
    report.degrees.push_back(std::move(d));
  }
  report.ranks_match_fields = true;
  for (const Domain& field : fields) {
    const GradedDims dims = graded_dims(m, field, m.size());
    for (const auto& row : dims.degrees) {
      const auto& d = report.degrees[row.degree];
      if (d.decomposable_algebra.free_rank() != row.decomposable_algebra || d.quotient.free_rank() != row.quotient)
        report.ranks_match_fields = false;
    }
  }
  return report;
}

}  // namespace osa
