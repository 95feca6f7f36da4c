#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "foliate/exactmath.hpp"

namespace foliate {

/// Bound on the index of a relatively minimal fibration of genus g >= 2:
/// (42 (2g - 2))!.
BigInt index_bound(std::int64_t genus);

/// Possible indices of foliations of Kodaira dimension zero.
const std::set<std::int64_t>& kod0_index_set();

/// 2 (7 i + 1)(2g - 2).
BigInt leaf_bound_M(std::int64_t genus, const BigInt& index);

/// (7 (42 (2g - 2))!)^2 d, valid from g >= 1.
BigInt theorem_a_degree_bound(std::int64_t genus, const BigInt& degree);

/// 2a (2g - 2) times the supplied intersection (aK_F + bN*_F) . H.
Rational pa_degree_bound(std::int64_t genus, std::int64_t a, std::int64_t b, const Rational& pairing);

/// binomial(2a(2g-2) + 2, 2) - 2a^2 (2g-2)^2 + (g - 1). Equals 6a(g-1) + g.
BigInt pa_section_gap(std::int64_t genus, std::int64_t a);

/// ceil(4 (2g - 2) / (d - 4)^2) (d - 4) for plane foliations of degree d >= 5.
BigInt poincare_bound(std::int64_t degree, std::int64_t genus);

/// f(m) = binomial(m (d - 4) + 2, 2) - 2m (2g - 2) - g + 1.
BigInt poincare_section_count(std::int64_t degree, std::int64_t genus, std::int64_t m);

struct PoincareSearch {
  /// Least m >= 1 with f(m) > 0.
  std::int64_t m_min = 0;
  /// Least integer strictly greater than 4 (2g - 2) / (d - 4)^2.
  std::int64_t m_star = 0;
  /// f(m) for 1 <= m <= max(m_min, m_star).
  std::map<std::int64_t, BigInt> f_values;
};

PoincareSearch poincare_section_search(std::int64_t degree, std::int64_t genus);

/// Riemann-Roch on a curve of genus g >= 2: m w (2g - 2) - g + 1 for m w >= 2.
BigInt rr_curve_sections(std::int64_t genus, const BigInt& weight, std::int64_t m);

/// chi0 + (m^2 P^2 - m P.K_X) / 2.
Rational rr_surface_chi(std::int64_t chi0, std::int64_t m, const Rational& p_squared,
                        const Rational& p_dot_k);

/// With K = (7i + 1)(2g - 2) and M = 2K: binomial(M + 2, 2) - M K + g - 1,
/// which simplifies to 3K + g.
BigInt thmA_section_gap(std::int64_t genus, const BigInt& index);

/// Result of a CLI-level bound evaluation.
struct BoundReport {
  std::string method;
  Rational value;
  std::map<std::string, std::string> auxiliary;

  friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

struct BoundInputs {
  std::optional<std::int64_t> genus;
  std::optional<BigInt> degree;
  std::optional<BigInt> index;
  std::optional<std::int64_t> a;
  std::optional<std::int64_t> b;
  std::optional<Rational> pairing;
};

/// Dispatches `method` in {thmA, index, poincare, pa, search}.
BoundReport evaluate_bound(const std::string& method, const BoundInputs& inputs);

}  // namespace foliate
