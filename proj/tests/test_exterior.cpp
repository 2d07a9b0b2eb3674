#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "osa/exterior.hpp"
#include "osa/io.hpp"
#include "osa/osideal.hpp"

using namespace osa;

namespace {

const Domain Z = Domain::integers();
const Domain Q = Domain::rationals();

ExtElement e(Domain d, std::initializer_list<int> one_based, long c = 1) {
  Subset s = 0;
  for (int i : one_based) s |= singleton(i - 1);
  return ExtElement::monomial(d, s, c);
}

Monomial mono(std::initializer_list<int> one_based) {
  Subset s = 0;
  for (int i : one_based) s |= singleton(i - 1);
  return Monomial{s};
}

ExtElement random_homogeneous(std::mt19937_64& rng, Domain d, int n, int degree, int terms) {
  ExtElement f(d);
  const auto monos = corpus::all_k_subsets(n, degree);
  std::uniform_int_distribution<long> coeff(-4, 4);
  for (int i = 0; i < terms; ++i)
    f += ExtElement::monomial(d, monos[rng() % monos.size()], coeff(rng));
  return f;
}

ExtElement random_element(std::mt19937_64& rng, Domain d, int n) {
  ExtElement f(d);
  for (int k = 0; k < 3; ++k) f += random_homogeneous(rng, d, n, static_cast<int>(rng() % (n + 1)), 2);
  return f;
}

const Domain domains[] = {Domain::integers(), Domain::rationals(), Domain::prime(2), Domain::prime(3),
                          Domain::prime(7)};

}  // namespace

TEST_CASE("wedge of generators") {
  CHECK(wedge(e(Z, {1}), e(Z, {2})) == e(Z, {1, 2}));
  CHECK(wedge(e(Z, {2}), e(Z, {1})) == e(Z, {1, 2}, -1));
  CHECK(wedge(e(Z, {1}), e(Z, {1})).is_zero());
  CHECK(wedge_sign(singleton(2), singleton(0) | singleton(1)) == 1);
  CHECK(wedge_sign(singleton(1), singleton(0) | singleton(2)) == -1);
}

TEST_CASE("wedge rejects mixed domains") {
  CHECK_THROWS_AS(wedge(e(Z, {1}), e(Q, {2})), DomainMismatch);
  CHECK_THROWS_AS(e(Z, {1}) + e(Domain::prime(2), {2}), DomainMismatch);
}

TEST_CASE("boundary") {
  CHECK(boundary(e(Z, {5})) == ExtElement::monomial(Z, 0));
  CHECK(boundary(e(Z, {1, 2, 3})) == e(Z, {2, 3}) - e(Z, {1, 3}) + e(Z, {1, 2}));
  CHECK(boundary(boundary(e(Z, {1, 2, 3, 4}))).is_zero());
  CHECK(boundary(ExtElement::monomial(Z, 0)).is_zero());
}

TEST_CASE("monomial comparison") {
  const auto id = VariableOrder::natural(4);
  CHECK(compare(id, Monomial{0}, mono({1})) < 0);
  CHECK(compare(id, mono({1, 3}), mono({2, 3})) < 0);
  CHECK(compare(id, mono({1, 2}), mono({1, 2, 3})) < 0);
  CHECK(compare(id, mono({3}), mono({3})) == 0);
  // reversing the order flips comparisons within a degree
  const auto rev = VariableOrder::from_sequence({3, 2, 1, 0});
  CHECK(compare(rev, mono({1, 3}), mono({2, 3})) > 0);
}

TEST_CASE("divisibility") {
  CHECK(divides(mono({1, 2}), mono({1, 2, 3})));
  CHECK_FALSE(divides(mono({1, 4}), mono({1, 2, 3})));
  for (Subset x = 0; x < 16; ++x) CHECK(divides(Monomial{0}, Monomial{x}));
}

TEST_CASE("initial monomial") {
  const auto id = VariableOrder::natural(4);
  CHECK(initial_monomial(id, boundary(e(Z, {1, 2, 3}))) == mono({2, 3}));
  CHECK(initial_monomial(id, e(Z, {1, 2}) + e(Z, {3, 4})) == mono({3, 4}));
  CHECK_THROWS_AS(initial_monomial(id, ExtElement(Z)), EmptyElement);

  const Matroid m = corpus::six_planes();
  const auto order = parse_order(m, "H P x y z t");
  // x=0 y=1 z=2 t=3 H=4 P=5; compare the four terms of d(e_{HPyz}) by hand
  const Subset hpyz = singleton(4) | singleton(5) | singleton(1) | singleton(2);
  const Monomial in = initial_monomial(order, boundary_of(Z, hpyz));
  CHECK(in.bits == (singleton(5) | singleton(1) | singleton(2)));
  const Subset others[] = {singleton(4) | singleton(1) | singleton(2), singleton(4) | singleton(5) | singleton(2),
                           singleton(4) | singleton(5) | singleton(1)};
  for (Subset o : others) CHECK(compare(order, Monomial{o}, in) < 0);
}

TEST_CASE("variable order validation") {
  CHECK_THROWS_AS(VariableOrder::from_sequence({0, 0, 1}), PreconditionError);
  CHECK_THROWS_AS(VariableOrder::from_sequence({0, 3}), PreconditionError);
  const auto o = VariableOrder::from_sequence({2, 0, 1});
  CHECK(o.less(2, 0));
  CHECK(o.min_element(singleton(0) | singleton(1)) == 0);
  CHECK(o.from_positions(o.to_positions(0b101)) == 0b101);
}

TEST_CASE("normal form") {
  const auto id = VariableOrder::natural(4);
  const ExtElement g = make_monic(id, boundary(e(Q, {1, 2, 3})));
  CHECK(normal_form(g, {g}, id).is_zero());
  const ExtElement lone = e(Q, {1, 4});
  CHECK(normal_form(lone, {g}, id) == lone);
  // e_4 ^ d(e_123) lies in the ideal
  CHECK(normal_form(wedge(e(Q, {4}), g), {g}, id).is_zero());
}

TEST_CASE("normal form of an ideal member against the six-plane basis") {
  const Matroid m = corpus::six_planes();
  const auto order = parse_order(m, "H P x y z t");
  const GroebnerBasis gb = forge_basis(m, order, Q);
  const Subset pxyzt = singleton(5) | 0b1111;
  const ExtElement f = boundary_of(Q, pxyzt);

  // membership in I^4 by linear algebra: adding f to a spanning set of I^4
  // must not raise the rank
  const auto cols = corpus::all_k_subsets(6, 4);
  auto row_of = [&](const ExtElement& g) {
    std::vector<std::int64_t> row(cols.size(), 0);
    for (const auto& [x, c] : g.terms())
      row[std::find(cols.begin(), cols.end(), x) - cols.begin()] = std::stoll(c.to_string());
    return row;
  };
  std::vector<std::vector<std::int64_t>> span;
  for (Subset c : m.circuits()) {
    const int s = 4 - (popcount(c) - 1);
    if (s < 0) continue;
    for (Subset x : corpus::all_k_subsets(6, s)) {
      const ExtElement g = wedge(ExtElement::monomial(Z, x), boundary_of(Z, c));
      if (!g.is_zero()) span.push_back(row_of(g));
    }
  }
  const int before = corpus::rank_mod_p(span, 1000003);
  span.push_back(row_of(boundary_of(Z, pxyzt)));
  REQUIRE(corpus::rank_mod_p(span, 1000003) == before);

  CHECK(normal_form(f, gb.elements, order).is_zero());
}

TEST_CASE("coefficients") {
  const Domain f5 = Domain::prime(5);
  CHECK(Coefficient(f5, 7) == Coefficient(f5, 2));
  CHECK(Coefficient(f5, -1) == Coefficient(f5, 4));
  CHECK((Coefficient(f5, 3) * Coefficient(f5, 2)).is_one());
  CHECK(Coefficient(f5, 3).inverse() == Coefficient(f5, 2));
  CHECK(Coefficient(Q, mpq_class(2, 4)).to_string() == "1/2");
  CHECK(Coefficient(Z, -1).inverse() == Coefficient(Z, -1));
  CHECK_THROWS_AS(Coefficient(Z, 2).inverse(), ReductionError);
  CHECK_THROWS_AS(Domain::prime(4), InputError);
  CHECK(Domain::parse("f7") == Domain::prime(7));
  CHECK(Domain::parse("q") == Q);
  CHECK_THROWS_AS(Domain::parse("r"), InputError);
}

TEST_CASE("element conversion") {
  const ExtElement f = e(Z, {1, 2}, 4) + e(Z, {3}, 3);
  const ExtElement g = f.convert(Domain::prime(2));
  CHECK(g == e(Domain::prime(2), {3}));
  CHECK(f.convert(Q).coefficient(0b11) == Coefficient(Q, 4));
}

// ---- properties --------------------------------------------------------

TEST_CASE("property: boundary squares to zero") {
  std::mt19937_64 rng(11);
  int cases = 0;
  for (const Domain& d : domains)
    for (int i = 0; i < 60; ++i, ++cases) {
      const ExtElement f = random_element(rng, d, 7);
      CHECK(boundary(boundary(f)).is_zero());
    }
  CHECK(cases == 300);
}

TEST_CASE("property: graded derivation law") {
  std::mt19937_64 rng(12);
  for (const Domain& d : domains)
    for (int i = 0; i < 60; ++i) {
      const int da = static_cast<int>(rng() % 4), db = static_cast<int>(rng() % 4);
      const ExtElement a = random_homogeneous(rng, d, 7, da, 3);
      const ExtElement b = random_homogeneous(rng, d, 7, db, 3);
      const ExtElement lhs = boundary(wedge(a, b));
      const Coefficient sign(d, da % 2 ? -1 : 1);
      const ExtElement rhs = wedge(boundary(a), b) + sign * wedge(a, boundary(b));
      CHECK(lhs == rhs);
    }
}

TEST_CASE("property: wedge associativity and graded commutativity") {
  std::mt19937_64 rng(13);
  for (const Domain& d : domains)
    for (int i = 0; i < 40; ++i) {
      const int da = static_cast<int>(rng() % 4), db = static_cast<int>(rng() % 4);
      const ExtElement a = random_homogeneous(rng, d, 8, da, 3);
      const ExtElement b = random_homogeneous(rng, d, 8, db, 3);
      const ExtElement c = random_element(rng, d, 8);
      CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
      const Coefficient sign(d, (da * db) % 2 ? -1 : 1);
      CHECK(wedge(a, b) == sign * wedge(b, a));
    }
}

TEST_CASE("property: monomial order axioms") {
  std::mt19937_64 rng(14);
  const int n = 8;
  for (int i = 0; i < 300; ++i) {
    const auto order = VariableOrder::from_sequence(corpus::random_permutation(n, rng));
    const Monomial x{rng() & 0xff}, y{rng() & 0xff}, z{rng() & 0xff};
    // totality and antisymmetry
    const auto xy = compare(order, x, y), yx = compare(order, y, x);
    CHECK((xy == 0) == (x.bits == y.bits));
    CHECK((xy < 0) == (yx > 0));
    // transitivity
    if (xy < 0 && compare(order, y, z) < 0) CHECK(compare(order, x, z) < 0);
    // 1 is minimal
    if (x.bits) CHECK(compare(order, Monomial{0}, x) < 0);
    // multiplicativity
    if (xy < 0 && !(x.bits & z.bits) && !(y.bits & z.bits))
      CHECK(compare(order, Monomial{x.bits | z.bits}, Monomial{y.bits | z.bits}) < 0);
  }
}

TEST_CASE("property: normal form is idempotent and respects the ideal") {
  std::mt19937_64 rng(15);
  const auto instances = corpus::all();
  for (int i = 0; i < 120; ++i) {
    const auto& inst = instances[rng() % instances.size()];
    const Matroid& m = inst.matroid;
    const Domain d = i % 2 ? Q : Domain::prime(3);
    const auto order = VariableOrder::from_sequence(corpus::random_permutation(m.size(), rng));
    const GroebnerBasis gb = forge_basis(m, order, d);
    const ExtElement f = random_element(rng, d, m.size());
    const ExtElement nf = normal_form(f, gb.elements, order);
    CHECK(normal_form(nf, gb.elements, order) == nf);
    // no term of the normal form is divisible by a leading monomial
    for (const auto& [x, c] : nf.terms())
      for (const Monomial& lead : gb.leading_monomials()) CHECK_FALSE(divides(lead, Monomial{x}));
    // f - nf lies in the ideal, so adding an ideal element changes nothing
    if (!m.circuits().empty()) {
      const Subset c = m.circuits()[rng() % m.circuits().size()];
      const ExtElement g = wedge(ExtElement::monomial(d, rng() & full_set(m.size())), boundary_of(d, c));
      CHECK(normal_form(f + g, gb.elements, order) == nf);
    }
  }
}
