#include "osa/linalg.hpp"

namespace osa::linalg {

DegreeIndex::DegreeIndex(int n, int degree) : n_(n), degree_(degree) {
  binom_.assign(n + 1, std::vector<std::uint64_t>(degree + 2, 0));
  for (int a = 0; a <= n; ++a)
    for (int b = 0; b <= degree + 1; ++b) binom_[a][b] = binomial(a, b);

  if (degree < 0 || degree > n) return;
  monomials_.reserve(binomial(n, degree));
  for_each_k_subset(n, degree, [this](Subset s) { monomials_.push_back(s); });
}

std::size_t DegreeIndex::rank(Subset s) const {
  std::size_t r = 0;
  int j = 1;
  while (s) {
    const int e = std::countr_zero(s);
    r += binom_[e][j];
    ++j;
    s &= s - 1;
  }
  return r;
}

}  // namespace osa::linalg
