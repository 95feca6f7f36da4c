#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "foliate/exactmath.hpp"

namespace foliate {

class HJString;

/// Candidate curves and their integer intersection matrix.
class IntersectionLattice {
 public:
  IntersectionLattice(std::vector<std::string> labels, std::vector<std::vector<std::int64_t>> gram);

  /// Chain lattice of a Hirzebruch-Jung string; curves labelled C1..Ck.
  static IntersectionLattice from_chain(const HJString& chain);

  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::vector<std::int64_t>>& gram() const { return gram_; }
  std::size_t size() const { return labels_.size(); }

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<std::int64_t>> gram_;
};

struct DivisorData {
  /// D . C_i for every candidate curve.
  std::vector<Rational> pairings;
  std::optional<Rational> self_intersection;
};

struct ZariskiResult {
  /// Indices into the lattice, ascending.
  std::vector<std::size_t> support;
  std::vector<std::string> support_labels;
  /// Coefficient of each support curve in N.
  std::vector<Rational> negative_coefficients;
  /// P . C_i for every candidate curve.
  std::vector<Rational> positive_pairings;
  /// P^2 = D^2 - D . N, present when D^2 was supplied.
  std::optional<Rational> positive_self_intersection;
  int iterations = 0;

  friend bool operator==(const ZariskiResult&, const ZariskiResult&) = default;
};

/// Fixed-point Zariski decomposition relative to the given candidate curves.
/// Starts from the curves with D . C < 0 and adds every curve with
/// (D - N) . C < 0 until stable. Throws DomainError
/// ("zariski.not_pseudo_effective") when a support block is not negative
/// definite or yields a negative coefficient.
ZariskiResult zariski_decompose(const IntersectionLattice& lattice, const DivisorData& divisor);

/// Least n with n N integral.
BigInt index_of_decomposition(const ZariskiResult& result);

}  // namespace foliate
