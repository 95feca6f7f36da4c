#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "foliate/exactmath.hpp"

namespace foliate {

/// Chain of smooth rational curves with self-intersections <= -2. The first
/// entry is the handle; order is taken as given and never re-sorted.
class HJString {
 public:
  explicit HJString(std::vector<std::int64_t> self_intersections);

  std::span<const std::int64_t> self_intersections() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  /// Negated self-intersections, i.e. the diagonal of -A.
  std::vector<std::int64_t> weights() const;

 private:
  std::vector<std::int64_t> entries_;
};

struct HJData {
  /// det(-A).
  BigInt order;
  /// Solution of (-A) a = e_1, handle first.
  std::vector<Rational> zariski_coefficients;
  /// order / weight is the minus continued fraction of the chain read from
  /// the handle: b_1 - 1/(b_2 - ...).
  BigInt quotient_weight;
  /// Same, reading the chain from the far end towards the handle. The two
  /// weights are inverse modulo `order`.
  BigInt quotient_weight_reversed;

  friend bool operator==(const HJData&, const HJData&) = default;
};

HJData hj_data(const HJString& chain);

struct TailConfig {
  /// Euler characteristic of the tail curve (2 for a smooth rational tail).
  std::int64_t chi = 2;
  /// Singularities on the tail outside the support of N.
  std::int64_t s = 0;
  /// Orders of the strings meeting the tail, each >= 2.
  std::vector<std::int64_t> orders;

  void validate() const;
  friend bool operator==(const TailConfig&, const TailConfig&) = default;
};

/// P . T = -chi + s + k - sum 1/o_i.
Rational tail_defect(const TailConfig& config);

/// Configurations of a rational tail with P . T = 0.
enum class TailZeroVariant {
  Orders333,       // s = 0, o = (3,3,3)
  Orders236,       // s = 0, o = (2,3,6)
  Orders244,       // s = 0, o = (2,4,4)
  Orders2222,      // s = 0, o = (2,2,2,2)
  Orders22OneFree, // s = 1, o = (2,2)
};

std::string to_string(TailZeroVariant v);

struct TailClassification {
  enum class Kind { Zero, Positive, Negative };
  Kind kind = Kind::Zero;
  Rational value;
  std::optional<TailZeroVariant> variant;
};

std::string to_string(TailClassification::Kind k);

/// Requires chi = 2; throws DomainError("hjstring.out_of_scope") otherwise.
TailClassification tail_classify(const TailConfig& config);

/// lcm of the orders; vanishing orders of first integrals along the tail are
/// multiples of it.
BigInt vanishing_order_modulus(std::span<const std::int64_t> orders);

}  // namespace foliate
