#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "foliate/exactmath.hpp"
#include "foliate/resolution.hpp"

namespace foliate {

/// Adjoint or Kodaira dimension of a foliated surface.
enum class Dimension { NegInfinity, Zero, One, Two };

/// Accepts "-inf", "-oo", "−∞", "0", "1", "2".
Dimension parse_dimension(std::string_view text);
std::string to_string(Dimension d);

struct PlaneBundleDegrees {
  std::int64_t kf = 0;     // K_F = O(d - 1)
  std::int64_t nstar = 0;  // N*_F = O(-d - 2)
  std::int64_t kx = 0;     // K_X = O(-3)
  friend bool operator==(const PlaneBundleDegrees&, const PlaneBundleDegrees&) = default;
};

PlaneBundleDegrees plane_bundle_degrees(std::int64_t degree);

struct PlaneFoliation {
  std::int64_t degree = 0;
  std::vector<SingularityKind> singularities;
};

struct PlaneThreshold {
  enum class Status { Exact, NegativeInfinity, RequiresBlowUp };
  Status status = Status::Exact;
  /// eff(F) when status is Exact.
  std::optional<Rational> value;
  /// (d - 1)/(d + 2), the value the degree alone would give.
  std::optional<Rational> degree_value;
  /// Largest canonical threshold among the listed singularities.
  Rational max_canonical_threshold;
  /// Indices of singularities whose threshold exceeds degree_value.
  std::vector<std::size_t> obstructions;
};

std::string to_string(PlaneThreshold::Status s);

/// eff(F) for a plane foliation with log-canonical singularities. The degree
/// formula (d - 1)/(d + 2) stands whenever no singularity has canonical
/// threshold above it; otherwise the resolved model must be analysed and
/// the obstruction data is returned. Rejects NilpotentFamily.
PlaneThreshold plane_eff_threshold(const PlaneFoliation& foliation);

/// The three equivalent encodings of an adjoint divisor K_F + t N*_F.
struct AdjointParameters {
  /// (n, m) for K_F^n (x) N*_F^m, t = m / n in lowest terms.
  std::optional<std::pair<BigInt, BigInt>> exponents;
  Rational t;
  /// s = t / (1 - t), so that K_F + t N*_F = (1 - t)(K_F + s K_X). Absent at t = 1.
  std::optional<Rational> s;
};

AdjointParameters convert_from_exponents(const BigInt& n, const BigInt& m);
AdjointParameters convert_from_t(const Rational& t);
/// Requires s >= 0 or s < -1 so that t = s / (1 + s) >= 0.
AdjointParameters convert_from_s(const Rational& s);

enum class TransverseStructure { Projective, Affine, NoneAsserted };
std::string to_string(TransverseStructure t);

struct ClassificationEntry {
  Dimension adjoint = Dimension::NegInfinity;
  Dimension kodaira = Dimension::NegInfinity;
  /// One entry per table row with this (adjoint, kodaira) pair.
  std::vector<std::string> descriptions;
  TransverseStructure transverse_structure = TransverseStructure::NoneAsserted;
  std::string notes;
};

/// Rows of the adjoint/Kodaira classification table, in table order.
struct TableRow {
  Dimension adjoint;
  Dimension kodaira;
  std::string_view description;
};
const std::vector<TableRow>& classification_table();

/// Throws DomainError("classify.pair_not_realized") for pairs absent from
/// the table.
ClassificationEntry classify_pair(Dimension adjoint, Dimension kodaira);

struct EffLowerBound {
  std::optional<Rational> value;
  /// Set when the Iitaka fibre is rational; the adjoint dimension is then -inf.
  bool adjoint_negative_infinity = false;
};

/// kod = 0: 1/(i + 1) with i in the Kodaira-zero index set (assumes adj >= 0).
/// kod = 1: 1/(4i + 1) for Iitaka fibre genus >= 1; genus 0 gives the -inf marker.
EffLowerBound eff_lower_bound(Dimension kodaira, std::int64_t index,
                              std::optional<std::int64_t> iitaka_fiber_genus);

Dimension adjoint_dimension_kod1(std::int64_t iitaka_fiber_genus);

}  // namespace foliate
