#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace osa {

/// Subsets of the ground set, one bit per element. Element `i` (0-based)
/// is bit `i`; user-facing output renders it as `i + 1` or by label.
using Subset = std::uint64_t;

inline constexpr int kMaxGroundSet = 64;

inline int popcount(Subset s) { return std::popcount(s); }
inline bool contains(Subset s, int i) { return (s >> i) & 1u; }
inline Subset singleton(int i) { return Subset{1} << i; }
inline bool is_subset(Subset a, Subset b) { return (a & ~b) == 0; }

inline Subset full_set(int n) {
  return n >= 64 ? ~Subset{0} : (Subset{1} << n) - 1;
}

/// Elements of `s` in increasing index order.
inline std::vector<int> elements(Subset s) {
  std::vector<int> out;
  out.reserve(popcount(s));
  while (s) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

inline Subset from_elements(const std::vector<int>& xs) {
  Subset s = 0;
  for (int x : xs) s |= singleton(x);
  return s;
}

/// Calls f(s) for every k-subset of {0..n-1}, in increasing integer (colex)
/// order.
template <class F>
void for_each_k_subset(int n, int k, F&& f) {
  if (k < 0 || k > n) return;
  if (k == 0) {
    f(Subset{0});
    return;
  }
  const Subset limit = full_set(n);
  Subset s = full_set(k);
  while ((s & ~limit) == 0) {
    f(s);
    // Gosper's hack
    const Subset c = s & (~s + 1);
    const Subset r = s + c;
    if (r == 0) return;
    s = (((r ^ s) >> 2) / c) | r;
  }
}

/// Canonical ordering of subsets for listings: by size, then by the sorted
/// element sequence lexicographically.
bool canonical_less(Subset a, Subset b);

std::uint64_t binomial(int n, int k);

// Error hierarchy. Everything thrown by the library derives from Error.

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad user input: malformed files, non-simple matroids, bad arguments.
class InputError : public Error {
 public:
  using Error::Error;
};

class DomainMismatch : public Error {
 public:
  using Error::Error;
};

class EmptyElement : public Error {
 public:
  using Error::Error;
};

class ReductionError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class NonSimpleError : public InputError {
 public:
  using InputError::InputError;
};

class AntichainViolation : public InputError {
 public:
  using InputError::InputError;
};

class IncompleteCircuitList : public InputError {
 public:
  using InputError::InputError;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& what, int line)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// A computed object broke an invariant that the mathematics guarantees.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace osa
