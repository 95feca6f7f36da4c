#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "foliate/exactmath.hpp"

namespace foliate {

/// Linearizable singularity p x d/dx + q y d/dy with coprime p, q >= 1.
struct DiagonalPositive {
  std::int64_t p = 1;
  std::int64_t q = 1;
  friend bool operator==(const DiagonalPositive&, const DiagonalPositive&) = default;
};

/// Nilpotent or zero linear part. `preliminary_blowups` counts the blow-ups
/// performed before the linear part vanishes (0, 1 or 2); `a` is the order
/// of vanishing of the transformed field along the distinguished divisor.
struct NilpotentFamily {
  int preliminary_blowups = 0;
  std::int64_t a = 1;
  friend bool operator==(const NilpotentFamily&, const NilpotentFamily&) = default;
};

/// Reduced singularity whose eigenvalue ratio is not a positive rational.
struct ReducedHyperbolic {
  friend bool operator==(const ReducedHyperbolic&, const ReducedHyperbolic&) = default;
};

using SingularityKind = std::variant<DiagonalPositive, NilpotentFamily, ReducedHyperbolic>;

/// Validating constructors; throw DomainError on bad parameters.
DiagonalPositive make_diagonal(std::int64_t p, std::int64_t q);
NilpotentFamily make_nilpotent(int preliminary_blowups, std::int64_t a);
void validate(const SingularityKind& kind);

/// Parses "diag:p:q", "nilp:b:a" or "reduced".
SingularityKind parse_singularity(std::string_view text);
std::string to_string(const SingularityKind& kind);

/// A curve through a blow-up center: one of the two coordinate axes of the
/// original germ or an exceptional divisor E_k (k >= 1).
struct CurveRef {
  enum class Kind { Axis, Exceptional };
  Kind kind = Kind::Axis;
  /// Axis: 0 is {y = 0} (tangent to d/dx), 1 is {x = 0}. Exceptional: k.
  int index = 0;

  std::string label() const;
  friend auto operator<=>(const CurveRef&, const CurveRef&) = default;
};

struct Carrier {
  CurveRef curve;
  /// Eigenvalue of the field in the direction tangent to `curve`.
  std::int64_t eigenvalue = 0;
  friend bool operator==(const Carrier&, const Carrier&) = default;
};

struct BlowUp {
  std::string center;  // "P0" is the origin, "Pk" lies on E_k
  std::int64_t alpha = 0;  // smaller eigenvalue at the center
  std::int64_t beta = 0;
  /// Ordered by (eigenvalue, curve).
  std::array<Carrier, 2> carriers;
  /// Index k of the divisor E_k created by this blow-up.
  int divisor = 0;
  /// Coefficient of E_k in K_Y - pi^* K_X.
  std::int64_t surface_discrepancy = 0;
  /// Coefficient of E_k in K_G - pi^* K_F.
  std::int64_t foliation_discrepancy = 0;
  bool dicritical = false;

  friend bool operator==(const BlowUp&, const BlowUp&) = default;
};

/// Minimal reduction of a diagonal singularity, in creation order.
class ResolutionTree {
 public:
  ResolutionTree() = default;
  ResolutionTree(DiagonalPositive source, std::vector<BlowUp> steps);

  const DiagonalPositive& source() const { return source_; }
  const std::vector<BlowUp>& steps() const { return steps_; }
  std::size_t size() const { return steps_.size(); }
  const BlowUp& final_step() const { return steps_.back(); }

  friend bool operator==(const ResolutionTree&, const ResolutionTree&) = default;

 private:
  DiagonalPositive source_;
  std::vector<BlowUp> steps_;
};

/// Blow-up sequence following Euclid's algorithm on (p, q). At a center with
/// carriers of eigenvalues alpha < beta the next center is (alpha, beta -
/// alpha), on the new divisor and the strict transform of the alpha-carrier.
/// Stops after the dicritical blow-up at (1, 1).
ResolutionTree resolve_diagonal(std::int64_t p, std::int64_t q);

/// Surface discrepancy of the dicritical divisor of resolve_diagonal(p, q).
std::int64_t phi(std::int64_t p, std::int64_t q);

/// Affine function t -> intercept + slope * t: the order along `divisor` of
/// K_G + t N*_G - pi^*(K_F + t N*_F).
struct DiscrepancyLine {
  std::string divisor;
  Rational slope;
  Rational intercept;
  /// True when the line only certifies a lower bound on the threshold.
  bool lower_bound_witness = false;

  Rational at(const Rational& t) const { return intercept + slope * t; }
  /// Root of the line when slope != 0.
  std::optional<Rational> root() const;

  friend bool operator==(const DiscrepancyLine&, const DiscrepancyLine&) = default;
};

/// One line per exceptional divisor for DiagonalPositive; the single
/// distinguished divisor for NilpotentFamily. Throws for ReducedHyperbolic.
std::vector<DiscrepancyLine> adjoint_discrepancies(const SingularityKind& kind);

/// Throws IndeterminateError for NilpotentFamily when eps is at or above the
/// witness root, DomainError for eps < 0.
bool is_epsilon_canonical(const SingularityKind& kind, const Rational& eps);

struct CanonicalityReport {
  bool is_canonical = false;
  bool is_log_canonical = false;
  Rational canonical_threshold;
  bool threshold_is_lower_bound = false;

  friend bool operator==(const CanonicalityReport&, const CanonicalityReport&) = default;
};

CanonicalityReport canonicality(const SingularityKind& kind);

}  // namespace foliate
