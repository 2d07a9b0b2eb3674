#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "osa/osideal.hpp"
#include "osa/torsion.hpp"

using namespace osa;

namespace {

std::vector<mpz_class> zs(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

mpz_class determinant(std::vector<std::vector<mpz_class>> a) {
  // Bareiss fraction-free elimination
  const std::size_t n = a.size();
  mpz_class sign = 1, prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv][k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) std::swap(a[piv], a[k]), sign = -sign;
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  for (Subset s : corpus::all_k_subsets(static_cast<int>(n), static_cast<int>(k))) {
    std::vector<std::size_t> idx;
    for (int e : elements(s)) idx.push_back(static_cast<std::size_t>(e));
    out.push_back(idx);
  }
  return out;
}

/// Invariant factors from gcds of k x k minors: d_k = D_k / D_{k-1}.
std::vector<mpz_class> divisors_by_minors(const IntMatrix& m) {
  std::vector<mpz_class> out;
  mpz_class previous = 1;
  for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
    mpz_class g = 0;
    for (const auto& rows : combinations(m.rows(), k))
      for (const auto& cols : combinations(m.cols(), k)) {
        std::vector<std::vector<mpz_class>> sub(k, std::vector<mpz_class>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub[i][j] = m.at(rows[i], cols[j]);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), mpz_class(determinant(sub)).get_mpz_t());
      }
    if (g == 0) break;
    out.push_back(g / previous);
    previous = g;
  }
  return out;
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int spread) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = static_cast<long>(rng() % (2 * spread + 1)) - spread;
  return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
  return c;
}

/// Product of random elementary matrices.
IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n) {
  IntMatrix u(n, n);
  for (std::size_t i = 0; i < n; ++i) u.at(i, i) = 1;
  for (int step = 0; step < 6 && n > 1; ++step) {
    const std::size_t a = rng() % n, b = (a + 1 + rng() % (n - 1)) % n;
    const long f = static_cast<long>(rng() % 5) - 2;
    for (std::size_t j = 0; j < n; ++j) u.at(a, j) += f * u.at(b, j);
  }
  return u;
}

}  // namespace

TEST_CASE("smith normal form examples") {
  const SNFResult d = smith_normal_form(IntMatrix::from_rows({{2, 0}, {0, 3}}, 2));
  CHECK(d.divisors == zs({1, 6}));
  CHECK(d.torsion() == zs({6}));
  CHECK(d.free_rank() == 0);
  CHECK_FALSE(d.torsion_free());

  IntMatrix id(4, 4);
  for (std::size_t i = 0; i < 4; ++i) id.at(i, i) = 1;
  CHECK(smith_normal_form(id).divisors == zs({1, 1, 1, 1}));
  CHECK(smith_normal_form(IntMatrix::from_rows({{2}}, 1)).divisors == zs({2}));

  const SNFResult z = smith_normal_form(IntMatrix(0, 3));
  CHECK(z.divisors.empty());
  CHECK(z.free_rank() == 3);
  CHECK(z.torsion_free());
}

TEST_CASE("hermite basis and lattice coordinates") {
  const IntMatrix h = hermite_basis(IntMatrix::from_rows({{2, 4}, {1, 3}, {3, 7}}, 2));
  CHECK(h == IntMatrix::from_rows({{1, 1}, {0, 2}}, 2));
  CHECK(lattice_coordinates(h, zs({3, 5})) == zs({3, 1}));
  CHECK_THROWS_AS(lattice_coordinates(h, zs({0, 1})), InvariantViolation);
}

TEST_CASE("presentations") {
  const Matroid free4 = Matroid::from_circuits(4, {});
  for (int q = 0; q <= 4; ++q) {
    const IntMatrix p = presentation_Aplus(free4, q);
    CHECK(p.rows() == 0);
    CHECK(smith_normal_form(p).free_rank() == binomial(4, q));
    CHECK(quotient_group_I_mod_decomposable(free4, q).free_rank() == 0);
  }

  // the e_i ^ d(e_123) are +-e_123, so A+^3 of U_{2,3} vanishes
  const IntMatrix u23 = presentation_Aplus(corpus::uniform(2, 3), 3);
  CHECK(u23.cols() == 1);
  const SNFResult s = smith_normal_form(u23);
  CHECK(s.divisors == zs({1}));
  CHECK(s.free_rank() == 0);

  const SNFResult planes = smith_normal_form(presentation_Aplus(corpus::six_planes(), 4));
  CHECK(planes.torsion_free());
  CHECK(planes.free_rank() == 9);
}

TEST_CASE("quotient groups") {
  const SNFResult planes = quotient_group_I_mod_decomposable(corpus::six_planes(), 4);
  CHECK(planes.torsion_free());
  CHECK(planes.free_rank() == 1);
  const SNFResult k4 = quotient_group_I_mod_decomposable(corpus::k4().matroid, 2);
  CHECK(k4.torsion_free());
  const auto chordless = corpus::chordless_cycles(4, *corpus::k4().edges);
  CHECK(k4.free_rank() == static_cast<std::size_t>(std::count_if(chordless.begin(), chordless.end(),
                                                                 [](Subset c) { return popcount(c) == 3; })));
}

TEST_CASE("torsion reports") {
  const TorsionReport planes = torsion_report(corpus::six_planes());
  CHECK(planes.torsion_free());
  CHECK(planes.ranks_match_fields);
  CHECK(planes.degrees.size() == 7);
  for (const auto& inst : corpus::all()) {
    CAPTURE(inst.name);
    const TorsionReport r = torsion_report(inst.matroid);
    CHECK(r.torsion_free());
    CHECK(r.ranks_match_fields);
    for (const auto& d : r.degrees) {
      CHECK(d.ideal_saturated);
      for (const auto& div : d.decomposable_algebra.divisors) CHECK(div == 1);
      for (const auto& div : d.quotient.divisors) CHECK(div == 1);
    }
  }
}

TEST_CASE("doubled presentation shows torsion") {
  const IntMatrix p = presentation_Aplus(corpus::six_planes(), 4);
  const SNFResult doubled = smith_normal_form(p.scaled(2));
  CHECK_FALSE(doubled.torsion_free());
  CHECK(doubled.torsion().front() == 2);
  for (const auto& d : doubled.divisors) CHECK(d == 2);
}

TEST_CASE("saturation") {
  CHECK(saturation_check_I(corpus::uniform(2, 3), 2));
  for (int q = 0; q <= 6; ++q) CHECK(saturation_check_I(corpus::six_planes(), q));
  for (const auto& inst : corpus::all())
    for (int q = 0; q <= inst.matroid.size(); ++q) CHECK(saturation_check_I(inst.matroid, q));
}

// ---- properties --------------------------------------------------------

TEST_CASE("property: smith form matches gcds of minors") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 150; ++i) {
    const std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
    const IntMatrix m = random_matrix(rng, rows, cols, i % 3 ? 3 : 9);
    const SNFResult s = smith_normal_form(m);
    CHECK(s.divisors == divisors_by_minors(m));
    for (std::size_t k = 0; k + 1 < s.divisors.size(); ++k)
      CHECK(mpz_divisible_p(s.divisors[k + 1].get_mpz_t(), s.divisors[k].get_mpz_t()) != 0);
    for (const auto& d : s.divisors) CHECK(d > 0);
  }
}

TEST_CASE("property: smith form is invariant under unimodular changes") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 150; ++i) {
    const std::size_t rows = 1 + rng() % 7, cols = 1 + rng() % 7;
    const IntMatrix m = random_matrix(rng, rows, cols, 4);
    const IntMatrix changed = multiply(multiply(random_unimodular(rng, rows), m), random_unimodular(rng, cols));
    CHECK(smith_normal_form(changed).divisors == smith_normal_form(m).divisors);
  }
}

TEST_CASE("property: hermite basis spans the same lattice") {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 100; ++i) {
    const std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 5;
    const IntMatrix m = random_matrix(rng, rows, cols, 5);
    const IntMatrix h = hermite_basis(m);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      const auto coords = lattice_coordinates(h, m.row(r));
      std::vector<mpz_class> back(cols, 0);
      for (std::size_t k = 0; k < coords.size(); ++k)
        for (std::size_t j = 0; j < cols; ++j) back[j] += coords[k] * h.at(k, j);
      CHECK(back == m.row(r));
    }
    CHECK(smith_normal_form(h).divisors == smith_normal_form(m).divisors);
  }
}
