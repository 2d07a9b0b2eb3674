#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "osa/exterior.hpp"
#include "osa/matroid.hpp"

namespace osa {

/// Largest ground set for which all n! orders are enumerated.
inline constexpr int kExhaustiveLimit = 8;

class SearchRefused : public InputError {
 public:
  using InputError::InputError;
};

struct SearchStrategy {
  enum class Kind { Exhaustive, Random };
  Kind kind = Kind::Exhaustive;
  std::uint64_t seed = 0;
  std::size_t samples = 0;

  static SearchStrategy exhaustive() { return {}; }
  static SearchStrategy random(std::uint64_t seed, std::size_t samples) { return {Kind::Random, seed, samples}; }
};

struct SearchResult {
  /// Degree q being minimized; empty when minimizing the whole basis size.
  std::optional<int> degree;
  VariableOrder best_order = VariableOrder::natural(0);
  int best_count = 0;
  std::size_t orders_examined = 0;
  SearchStrategy strategy;
  /// count -> number of examined orders with that count.
  std::map<int, std::size_t> histogram;
};

/// Minimizes |C^pi_{q+1}| over variable orders. Ties go to the
/// lexicographically least order sequence, so the result does not depend on
/// `threads` (0 = hardware concurrency).
SearchResult minimize_forge_count(const Matroid& m, int q, const SearchStrategy& strategy,
                                  unsigned threads = 0);

/// Minimizes the reduced Groebner basis size |C^pi|.
SearchResult minimize_total_gb_size(const Matroid& m, const SearchStrategy& strategy, unsigned threads = 0);

/// The orders a random strategy examines, in sampling order.
std::vector<VariableOrder> sample_orders(int n, std::uint64_t seed, std::size_t samples);

struct PropositionCheck {
  int degree = 0;
  SearchResult search;
  /// dim (I / L+ I)^q per requested field.
  std::vector<std::pair<Domain, std::uint64_t>> dims;
  bool verified = false;
};

/// Exhaustively minimizes |C^pi_{q+1}| and compares the minimum with
/// dim (I / L+ I)^q over each field. Requires n <= kExhaustiveLimit.
PropositionCheck verify_proposition(const Matroid& m, int q, const std::vector<Domain>& fields);

}  // namespace osa
