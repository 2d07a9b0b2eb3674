#include "osa/osideal.hpp"

#include <algorithm>
#include <variant>

#include "osa/linalg.hpp"

namespace osa {

using linalg::DegreeIndex;
using linalg::PrimeField;
using linalg::RationalField;
using linalg::RowEchelon;
using linalg::SmallRationalField;

// ---------------------------------------------------------- GroebnerBasis

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(elements.size());
  for (const auto& g : elements) out.push_back(initial_monomial(order, g));
  return out;
}

bool GroebnerBasis::is_reduced() const {
  const auto leads = leading_monomials();
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const auto& g = elements[i];
    if (!g.is_homogeneous() || !g.coefficient(leads[i].bits).is_one()) return false;
    for (std::size_t j = 0; j < elements.size(); ++j) {
      if (i == j) continue;
      for (const auto& [x, c] : elements[j].terms())
        if (divides(leads[i], Monomial{x})) return false;
    }
  }
  return true;
}

namespace {

std::vector<std::size_t> sorted_by_lead(const GroebnerBasis& b) {
  const auto leads = b.leading_monomials();
  std::vector<std::size_t> idx(leads.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
    return compare(b.order, leads[x], leads[y]) < 0;
  });
  return idx;
}

}  // namespace

bool same_elements(const GroebnerBasis& a, const GroebnerBasis& b) {
  if (!(a.order == b.order) || a.elements.size() != b.elements.size()) return false;
  const auto ia = sorted_by_lead(a);
  const auto ib = sorted_by_lead(b);
  for (std::size_t k = 0; k < ia.size(); ++k)
    if (!(a.elements[ia[k]] == b.elements[ib[k]])) return false;
  return true;
}

std::vector<ExtElement> os_generators(const Matroid& m, Domain domain) {
  std::vector<ExtElement> out;
  out.reserve(m.circuits().size());
  for (Subset c : m.circuits()) out.push_back(boundary_of(domain, c));
  return out;
}

GroebnerBasis forge_basis(const Matroid& m, const VariableOrder& order, Domain domain) {
  if (order.size() != m.size()) throw PreconditionError("variable order size differs from the ground set");
  GroebnerBasis gb{order, {}, BasisSource::Forge, forge_circuits(m, order)};
  for (Subset c : gb.circuits) gb.elements.push_back(make_monic(order, boundary_of(domain, c)));
  return gb;
}

// ------------------------------------------------------- degree-wise spans

namespace {

template <class Field>
using Row = std::vector<typename Field::Value>;

/// Bases of I^d and dimensions of I^d and (L+ I)^d, d = 0..n, over Field.
/// I^d = e_1..e_n ^ I^{d-1} + span{d(e_C) : |C| = d + 1}, and
/// (L+ I)^d = e_1..e_n ^ I^{d-1}; these spans equal the ones generated by
/// all e_S ^ d(e_C) because the exterior algebra is generated in degree 1.
template <class Field>
struct Spans {
  Field field;
  int n = 0;
  std::vector<DegreeIndex> index;
  std::vector<std::vector<Row<Field>>> ideal_basis;
  std::vector<std::size_t> ideal_dim;
  std::vector<std::size_t> decomposable_dim;
  int full_from = -1;  // first degree with I^d = L^d, or -1
};

template <class Field>
Spans<Field> build_spans(const Matroid& m, Field field, int max_degree) {
  Spans<Field> s{field, m.size(), {}, {}, {}, {}, -1};
  const int n = m.size();
  for (int d = 0; d <= n; ++d) s.index.emplace_back(n, d);
  s.ideal_basis.resize(n + 1);
  s.ideal_dim.assign(n + 1, 0);
  s.decomposable_dim.assign(n + 1, 0);

  for (int d = 0; d <= n; ++d) {
    const std::size_t cols = s.index[d].size();
    if (s.full_from >= 0) {
      s.ideal_dim[d] = cols;
      s.decomposable_dim[d] = cols;
      continue;
    }
    if (d > max_degree) break;

    RowEchelon<Field> echelon(field, cols);
    if (d >= 1) {
      const auto& lower = s.index[d - 1];
      for (const auto& row : s.ideal_basis[d - 1]) {
        for (int i = 0; i < n; ++i) {
          Row<Field> w(cols, field.zero());
          bool nonzero = false;
          for (std::size_t j = 0; j < row.size(); ++j) {
            if (field.is_zero(row[j])) continue;
            const Subset x = lower.monomials()[j];
            if (contains(x, i)) continue;
            const auto& v = row[j];
            w[s.index[d].rank(x | singleton(i))] = wedge_sign(singleton(i), x) < 0 ? field.neg(v) : v;
            nonzero = true;
          }
          if (nonzero) echelon.insert(std::move(w));
        }
      }
    }
    s.decomposable_dim[d] = echelon.rank();
    for (Subset c : m.circuits_of_size(d + 1)) {
      Row<Field> w(cols, field.zero());
      int k = 0;
      for (int i : elements(c)) {
        w[s.index[d].rank(c & ~singleton(i))] = field.from_long(k % 2 == 0 ? 1 : -1);
        ++k;
      }
      echelon.insert(std::move(w));
    }
    s.ideal_dim[d] = echelon.rank();
    s.ideal_basis[d] = echelon.rows();
    if (echelon.rank() == cols && cols > 0 && d > 0) s.full_from = d;
  }
  return s;
}

template <class Field>
ExtElement row_to_element(const Field& field, const Row<Field>& row, const std::vector<Subset>& monomials,
                          const std::vector<std::size_t>& perm, Domain domain) {
  ExtElement out(domain);
  for (std::size_t c = 0; c < row.size(); ++c)
    if (!field.is_zero(row[c])) out.add_term(monomials[perm[c]], Coefficient(domain, field.to_rational(row[c])));
  return out;
}

template <class Field>
std::vector<ExtElement> oracle_elements(const Spans<Field>& s, const VariableOrder& order, Domain domain) {
  std::vector<Subset> leads;
  std::vector<ExtElement> out;
  auto divisible = [&leads](Subset x) {
    return std::any_of(leads.begin(), leads.end(), [x](Subset l) { return is_subset(l, x); });
  };

  for (int d = 0; d <= s.n; ++d) {
    if (s.ideal_dim[d] == 0) continue;
    const auto& monomials = s.index[d].monomials();
    // Column c holds the c-th largest monomial, so pivots are leading terms.
    std::vector<std::size_t> perm(monomials.size());
    for (std::size_t k = 0; k < perm.size(); ++k) perm[k] = k;
    std::vector<Subset> key(monomials.size());
    for (std::size_t k = 0; k < key.size(); ++k) key[k] = order.to_positions(monomials[k]);
    std::sort(perm.begin(), perm.end(), [&key](std::size_t a, std::size_t b) { return key[a] > key[b]; });

    std::vector<Subset> fresh;
    if (s.full_from >= 0 && d >= s.full_from) {
      // RREF is the identity; every monomial is a leading monomial.
      for (std::size_t c = 0; c < perm.size(); ++c) {
        const Subset x = monomials[perm[c]];
        if (divisible(x)) continue;
        out.push_back(ExtElement::monomial(domain, x));
        fresh.push_back(x);
      }
      leads.insert(leads.end(), fresh.begin(), fresh.end());
      break;
    }

    RowEchelon<Field> echelon(s.field, monomials.size());
    for (const auto& row : s.ideal_basis[d]) {
      Row<Field> permuted(row.size());
      for (std::size_t c = 0; c < row.size(); ++c) permuted[c] = row[perm[c]];
      echelon.insert(std::move(permuted));
    }
    echelon.reduce_fully();
    for (std::size_t k = 0; k < echelon.rank(); ++k) {
      const Subset x = monomials[perm[echelon.pivots()[k]]];
      if (divisible(x)) continue;
      out.push_back(row_to_element(s.field, echelon.rows()[k], monomials, perm, domain));
      fresh.push_back(x);
    }
    leads.insert(leads.end(), fresh.begin(), fresh.end());
  }
  return out;
}

Spans<RationalField> widen(const Spans<SmallRationalField>& s) {
  Spans<RationalField> w{RationalField{}, s.n, s.index, {}, s.ideal_dim, s.decomposable_dim, s.full_from};
  w.ideal_basis.resize(s.ideal_basis.size());
  for (std::size_t d = 0; d < s.ideal_basis.size(); ++d)
    for (const auto& row : s.ideal_basis[d]) {
      Row<RationalField> r;
      r.reserve(row.size());
      for (const auto& v : row) r.push_back(s.field.to_rational(v));
      w.ideal_basis[d].push_back(std::move(r));
    }
  return w;
}

using AnySpans = std::variant<Spans<PrimeField>, Spans<SmallRationalField>, Spans<RationalField>>;

/// Over Q, int64 rationals are tried first and GMP is the fallback.
AnySpans make_spans(const Matroid& m, Domain field, int max_degree) {
  switch (field.kind()) {
    case DomainKind::Prime: return build_spans(m, PrimeField{field.modulus()}, max_degree);
    case DomainKind::Rational:
      try {
        return build_spans(m, SmallRationalField{}, max_degree);
      } catch (const linalg::RationalOverflow&) {
        return build_spans(m, RationalField{}, max_degree);
      }
    case DomainKind::Integer: break;
  }
  throw PreconditionError("linear algebra over " + field.name() + " requires a field");
}

}  // namespace

// ---------------------------------------------------------- GroebnerOracle

struct GroebnerOracle::Impl {
  Domain field;
  AnySpans spans;
  std::vector<std::size_t> ideal_dims;
};

GroebnerOracle::GroebnerOracle(const Matroid& m, Domain field)
    : impl_(std::make_unique<Impl>(Impl{field, make_spans(m, field, m.size()), {}})) {
  std::visit([this](const auto& s) { impl_->ideal_dims = s.ideal_dim; }, impl_->spans);
}

GroebnerOracle::GroebnerOracle(GroebnerOracle&&) noexcept = default;
GroebnerOracle& GroebnerOracle::operator=(GroebnerOracle&&) noexcept = default;
GroebnerOracle::~GroebnerOracle() = default;

const std::vector<std::size_t>& GroebnerOracle::ideal_dims() const { return impl_->ideal_dims; }

GroebnerBasis GroebnerOracle::reduced_basis(const VariableOrder& order) const {
  GroebnerBasis gb{order, {}, BasisSource::Oracle, {}};
  const Domain domain = impl_->field;
  std::visit(
      [&](const auto& s) {
        if (order.size() != s.n) throw PreconditionError("variable order size differs from the ground set");
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, Spans<SmallRationalField>>) {
          try {
            gb.elements = oracle_elements(s, order, domain);
          } catch (const linalg::RationalOverflow&) {
            gb.elements = oracle_elements(widen(s), order, domain);
          }
        } else {
          gb.elements = oracle_elements(s, order, domain);
        }
      },
      impl_->spans);
  return gb;
}

GroebnerBasis reduced_gb_oracle(const Matroid& m, const VariableOrder& order, Domain field) {
  return GroebnerOracle(m, field).reduced_basis(order);
}

// ------------------------------------------------------------- dimensions

GradedDims graded_dims(const Matroid& m, Domain field, std::optional<int> max_degree) {
  const int n = m.size();
  int top = max_degree.value_or(m.rank() + 1);
  if (top < 0) throw PreconditionError("negative maximal degree");
  top = std::min(top, n);
  const AnySpans spans = make_spans(m, field, top);
  GradedDims out{field, {}};
  std::visit(
      [&](const auto& s) {
        for (int q = 0; q <= top; ++q) {
          DegreeDims row;
          row.degree = q;
          row.ambient = binomial(n, q);
          row.ideal = s.ideal_dim[q];
          row.decomposable = s.decomposable_dim[q];
          row.algebra = row.ambient - row.ideal;
          row.decomposable_algebra = row.ambient - row.decomposable;
          row.quotient = row.ideal - row.decomposable;
          out.degrees.push_back(row);
        }
      },
      spans);
  return out;
}

int decomposable_dim_by_counting(const Matroid& m, int q, const VariableOrder& order) {
  if (q < 0 || q + 1 > m.size()) return 0;
  return forge_circuit_census(m, order)[q + 1];
}

bool nbc_dimension_check(const Matroid& m, const VariableOrder& order, Domain field) {
  const GradedDims dims = graded_dims(m, field, m.size());
  for (const auto& row : dims.degrees)
    if (nbc_sets(m, order, row.degree).size() != row.algebra) return false;
  return true;
}

}  // namespace osa
