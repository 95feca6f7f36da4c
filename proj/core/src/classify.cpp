#include "foliate/classify.hpp"

#include <algorithm>

#include "foliate/bounds.hpp"
#include "foliate/error.hpp"

namespace foliate {

Dimension parse_dimension(std::string_view text) {
  if (text == "-inf" || text == "-oo" || text == "−∞" || text == "-∞") {
    return Dimension::NegInfinity;
  }
  if (text == "0") return Dimension::Zero;
  if (text == "1") return Dimension::One;
  if (text == "2") return Dimension::Two;
  throw ParseError("parse.dimension", "dimension must be -inf, 0, 1 or 2, got '" + std::string(text) + "'");
}

std::string to_string(Dimension d) {
  switch (d) {
    case Dimension::NegInfinity: return "-inf";
    case Dimension::Zero: return "0";
    case Dimension::One: return "1";
    case Dimension::Two: return "2";
  }
  return "?";
}

PlaneBundleDegrees plane_bundle_degrees(std::int64_t degree) {
  if (degree < 0) throw DomainError("classify.degree", "degree must be >= 0");
  return {degree - 1, -(degree + 2), -3};
}

std::string to_string(PlaneThreshold::Status s) {
  switch (s) {
    case PlaneThreshold::Status::Exact: return "exact";
    case PlaneThreshold::Status::NegativeInfinity: return "-inf";
    case PlaneThreshold::Status::RequiresBlowUp: return "requires blow-up analysis";
  }
  return "?";
}

PlaneThreshold plane_eff_threshold(const PlaneFoliation& foliation) {
  const auto d = foliation.degree;
  if (d < 0) throw DomainError("classify.degree", "degree must be >= 0");

  PlaneThreshold out;
  for (std::size_t i = 0; i < foliation.singularities.size(); ++i) {
    const auto& kind = foliation.singularities[i];
    if (std::holds_alternative<NilpotentFamily>(kind)) {
      throw DomainError("classify.not_log_canonical",
                        "nilpotent singularities are outside the log-canonical hypothesis");
    }
    const auto report = canonicality(kind);
    out.max_canonical_threshold = std::max(out.max_canonical_threshold, report.canonical_threshold);
  }

  if (d == 0) {
    out.status = PlaneThreshold::Status::NegativeInfinity;
    return out;
  }
  const Rational formula(d - 1, d + 2);
  out.degree_value = formula;
  // Canonical thresholds of log-canonical points are at most 1/2, so for
  // d >= 4 nothing obstructs. d = 3 is obstructed exactly by radial points,
  // d = 2 by radial and (1,2) points.
  for (std::size_t i = 0; i < foliation.singularities.size(); ++i) {
    if (canonicality(foliation.singularities[i]).canonical_threshold > formula) {
      out.obstructions.push_back(i);
    }
  }
  if (out.obstructions.empty()) {
    out.status = PlaneThreshold::Status::Exact;
    out.value = formula;
  } else {
    out.status = PlaneThreshold::Status::RequiresBlowUp;
  }
  return out;
}

namespace {

AdjointParameters from_t(const Rational& t) {
  if (t.sign() < 0) throw DomainError("classify.negative_t", "t must be >= 0");
  AdjointParameters out;
  out.t = t;
  out.exponents = std::make_pair(t.denominator(), t.numerator());
  if (t != Rational(1)) out.s = t / (Rational(1) - t);
  return out;
}

}  // namespace

AdjointParameters convert_from_exponents(const BigInt& n, const BigInt& m) {
  if (n < 1 || m < 0) {
    throw DomainError("classify.exponents", "need n >= 1 and m >= 0");
  }
  auto out = from_t(Rational(m, n));
  out.exponents = std::make_pair(n, m);
  return out;
}

AdjointParameters convert_from_t(const Rational& t) { return from_t(t); }

AdjointParameters convert_from_s(const Rational& s) {
  if (s == Rational(-1)) {
    throw DomainError("classify.s_pole", "s = -1 has no t representation");
  }
  const Rational t = s / (Rational(1) + s);
  if (t.sign() < 0) {
    throw DomainError("classify.negative_t", "s must satisfy s >= 0 or s < -1");
  }
  return from_t(t);
}

std::string to_string(TransverseStructure t) {
  switch (t) {
    case TransverseStructure::Projective: return "projective";
    case TransverseStructure::Affine: return "affine";
    case TransverseStructure::NoneAsserted: return "none-asserted";
  }
  return "?";
}

const std::vector<TableRow>& classification_table() {
  using D = Dimension;
  static const std::vector<TableRow> rows{
      {D::NegInfinity, D::NegInfinity, "Rational fibration"},
      {D::NegInfinity, D::Zero, "Finite quotient of Riccati foliation generated by global vector field"},
      {D::NegInfinity, D::One, "Riccati foliation"},
      {D::Zero, D::Zero, "Finite quotient of linear foliation on a torus"},
      {D::One, D::Zero, "Finite quotient of E x C -> C, g(C) >= 2"},
      {D::One, D::One, "Finite quotient of E x C -> E, g(C) >= 2"},
      {D::One, D::One, "Turbulent foliation"},
      {D::One, D::One, "Non-isotrivial elliptic fibration"},
      {D::Two, D::NegInfinity, "Irreducible quotient of H x H -> H"},
      {D::Two, D::One, "Finite quotient of C1 x C2 -> C1, g(Ci) >= 2"},
      {D::Two, D::Two, "General type"},
  };
  return rows;
}

ClassificationEntry classify_pair(Dimension adjoint, Dimension kodaira) {
  ClassificationEntry entry;
  entry.adjoint = adjoint;
  entry.kodaira = kodaira;
  for (const auto& row : classification_table()) {
    if (row.adjoint == adjoint && row.kodaira == kodaira) {
      entry.descriptions.emplace_back(row.description);
    }
  }
  if (entry.descriptions.empty()) {
    throw DomainError("classify.pair_not_realized",
                      "pair not realized: (adj, kod) = (" + to_string(adjoint) + ", " +
                          to_string(kodaira) + ")");
  }
  if (adjoint == Dimension::Zero || adjoint == Dimension::One) {
    entry.transverse_structure = TransverseStructure::Affine;
  } else if (adjoint == Dimension::NegInfinity) {
    entry.transverse_structure = TransverseStructure::Projective;
  }
  if (adjoint == Dimension::NegInfinity && kodaira == Dimension::NegInfinity) {
    entry.notes =
        "For canonical singularities: F is a rational fibration iff "
        "h^0(K_F^n (x) N*_F^m) = 0 for every n >= 1 and m > 0.";
  }
  return entry;
}

EffLowerBound eff_lower_bound(Dimension kodaira, std::int64_t index,
                              std::optional<std::int64_t> iitaka_fiber_genus) {
  if (index < 1) throw DomainError("classify.index", "index must be >= 1");
  EffLowerBound out;
  if (kodaira == Dimension::Zero) {
    if (!kod0_index_set().contains(index)) {
      throw DomainError("classify.index_not_realized",
                        "index " + std::to_string(index) + " is not possible in Kodaira dimension zero");
    }
    out.value = Rational(1, index + 1);
    return out;
  }
  if (kodaira == Dimension::One) {
    if (!iitaka_fiber_genus) {
      throw DomainError("classify.missing_genus", "Kodaira dimension one needs the Iitaka fibre genus");
    }
    if (*iitaka_fiber_genus < 0) throw DomainError("classify.genus", "genus must be >= 0");
    if (*iitaka_fiber_genus == 0) {
      out.adjoint_negative_infinity = true;
      return out;
    }
    out.value = Rational(1, 4 * index + 1);
    return out;
  }
  throw DomainError("classify.kodaira", "lower bounds are available for Kodaira dimension 0 or 1 only");
}

Dimension adjoint_dimension_kod1(std::int64_t iitaka_fiber_genus) {
  if (iitaka_fiber_genus < 0) throw DomainError("classify.genus", "genus must be >= 0");
  if (iitaka_fiber_genus == 0) return Dimension::NegInfinity;
  return iitaka_fiber_genus == 1 ? Dimension::One : Dimension::Two;
}

}  // namespace foliate
