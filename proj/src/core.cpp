#include "osa/core.hpp"

namespace osa {

bool canonical_less(Subset a, Subset b) {
  const int ca = popcount(a);
  const int cb = popcount(b);
  if (ca != cb) return ca < cb;
  // Equal sizes: the sequence with the smaller first differing element
  // comes first, i.e. the set holding the lowest bit of a ^ b.
  const Subset diff = a ^ b;
  if (diff == 0) return false;
  return (a & diff & (~diff + 1)) != 0;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
  return r;
}

}  // namespace osa
