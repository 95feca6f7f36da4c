#include "foliate/bounds.hpp"

#include <stdexcept>

#include "foliate/error.hpp"

namespace foliate {

namespace {

void require_genus(std::int64_t genus, std::int64_t min) {
  if (genus < min) {
    throw DomainError("bounds.genus", "genus must be >= " + std::to_string(min));
  }
}

void require_positive(const BigInt& v, const char* what) {
  if (v < 1) {
    throw DomainError("bounds.non_positive", std::string(what) + " must be >= 1");
  }
}

BigInt big(std::int64_t v) { return BigInt(static_cast<long>(v)); }

unsigned long factorial_argument(std::int64_t genus) {
  return static_cast<unsigned long>(42 * (2 * genus - 2));
}

}  // namespace

BigInt index_bound(std::int64_t genus) {
  require_genus(genus, 2);
  return factorial(factorial_argument(genus));
}

const std::set<std::int64_t>& kod0_index_set() {
  static const std::set<std::int64_t> values{1, 2, 3, 4, 5, 6, 8, 10, 12};
  return values;
}

BigInt leaf_bound_M(std::int64_t genus, const BigInt& index) {
  require_genus(genus, 2);
  require_positive(index, "index");
  return 2 * (7 * index + 1) * big(2 * genus - 2);
}

BigInt theorem_a_degree_bound(std::int64_t genus, const BigInt& degree) {
  require_genus(genus, 1);
  require_positive(degree, "degree");
  const BigInt base = 7 * factorial(factorial_argument(genus));
  return BigInt(base * base * degree);
}

Rational pa_degree_bound(std::int64_t genus, std::int64_t a, std::int64_t b, const Rational& pairing) {
  require_genus(genus, 2);
  if (a < 1 || b < 0) {
    throw DomainError("bounds.adjoint_exponents", "need a >= 1 and b >= 0");
  }
  return Rational(big(2 * a * (2 * genus - 2))) * pairing;
}

BigInt pa_section_gap(std::int64_t genus, std::int64_t a) {
  require_genus(genus, 2);
  if (a < 1) throw DomainError("bounds.adjoint_exponents", "need a >= 1");
  const BigInt m = big(2 * a) * big(2 * genus - 2);
  const BigInt gap = binomial(m + 2, 2) - 2 * big(a) * big(a) * big(2 * genus - 2) * big(2 * genus - 2) +
                     big(genus - 1);
  if (gap != big(6 * a * (genus - 1) + genus)) {
    throw std::logic_error("pa_section_gap: binomial expansion disagrees with 6a(g-1)+g");
  }
  return gap;
}

namespace {

void require_plane(std::int64_t degree, std::int64_t genus) {
  if (degree < 5) throw DomainError("bounds.degree", "degree must be >= 5");
  require_genus(genus, 2);
}

Rational poincare_ratio(std::int64_t degree, std::int64_t genus) {
  return Rational(big(4 * (2 * genus - 2)), big((degree - 4) * (degree - 4)));
}

}  // namespace

BigInt poincare_bound(std::int64_t degree, std::int64_t genus) {
  require_plane(degree, genus);
  return poincare_ratio(degree, genus).ceil() * big(degree - 4);
}

BigInt poincare_section_count(std::int64_t degree, std::int64_t genus, std::int64_t m) {
  require_plane(degree, genus);
  if (m < 0) throw DomainError("bounds.negative_m", "m must be >= 0");
  return binomial(big(m) * big(degree - 4) + 2, 2) - big(2 * m) * big(2 * genus - 2) - big(genus) + 1;
}

PoincareSearch poincare_section_search(std::int64_t degree, std::int64_t genus) {
  require_plane(degree, genus);
  PoincareSearch out;
  out.m_star = poincare_ratio(degree, genus).floor().get_si() + 1;
  for (std::int64_t m = 1;; ++m) {
    auto f = poincare_section_count(degree, genus, m);
    const bool positive = f > 0;
    out.f_values.emplace(m, std::move(f));
    if (positive && out.m_min == 0) out.m_min = m;
    if (out.m_min != 0 && m >= out.m_star) break;
  }
  return out;
}

BigInt rr_curve_sections(std::int64_t genus, const BigInt& weight, std::int64_t m) {
  require_genus(genus, 2);
  require_positive(weight, "weight");
  if (m < 1) throw DomainError("bounds.non_positive", "m must be >= 1");
  const BigInt degree_factor = big(m) * weight;
  if (degree_factor < 2) {
    throw DomainError("bounds.unstable_range", "need m * weight >= 2");
  }
  return degree_factor * big(2 * genus - 2) - big(genus) + 1;
}

Rational rr_surface_chi(std::int64_t chi0, std::int64_t m, const Rational& p_squared,
                        const Rational& p_dot_k) {
  const Rational mm(m);
  return Rational(chi0) + (mm * mm * p_squared - mm * p_dot_k) / Rational(2);
}

BigInt thmA_section_gap(std::int64_t genus, const BigInt& index) {
  require_genus(genus, 2);
  require_positive(index, "index");
  const BigInt k = (7 * index + 1) * big(2 * genus - 2);
  const BigInt m = 2 * k;
  return binomial(m + 2, 2) - m * k + big(genus) - 1;
}

namespace {

template <typename T>
const T& need(const std::optional<T>& v, const char* flag, const std::string& method) {
  if (!v) {
    throw DomainError("bounds.missing_input", "method " + method + " needs " + flag);
  }
  return *v;
}

std::int64_t small(const BigInt& v, const char* flag) {
  if (!v.fits_slong_p()) {
    throw DomainError("bounds.too_large", std::string(flag) + " is too large for this method");
  }
  return v.get_si();
}

}  // namespace

BoundReport evaluate_bound(const std::string& method, const BoundInputs& in) {
  BoundReport report;
  report.method = method;
  if (method == "thmA") {
    const auto g = need(in.genus, "--genus", method);
    report.value = Rational(theorem_a_degree_bound(g, need(in.degree, "--degree", method)));
    if (g >= 2) {
      const BigInt i = in.index ? *in.index : index_bound(g);
      report.auxiliary["M"] = to_string(leaf_bound_M(g, i));
      report.auxiliary["section_gap"] = to_string(thmA_section_gap(g, i));
    }
  } else if (method == "index") {
    const auto g = need(in.genus, "--genus", method);
    const BigInt value = index_bound(g);
    report.value = Rational(value);
    report.auxiliary["factorial_of"] = std::to_string(42 * (2 * g - 2));
    report.auxiliary["digits"] = std::to_string(to_string(value).size());
  } else if (method == "poincare") {
    const auto g = need(in.genus, "--genus", method);
    const auto d = small(need(in.degree, "--degree", method), "--degree");
    report.value = Rational(poincare_bound(d, g));
    const auto search = poincare_section_search(d, g);
    report.auxiliary["m_min"] = std::to_string(search.m_min);
    report.auxiliary["m_star"] = std::to_string(search.m_star);
  } else if (method == "pa") {
    const auto g = need(in.genus, "--genus", method);
    const auto a = need(in.a, "--a", method);
    const auto b = in.b.value_or(0);
    report.value = pa_degree_bound(g, a, b, need(in.pairing, "--pairing", method));
    report.auxiliary["section_gap"] = to_string(pa_section_gap(g, a));
  } else if (method == "search") {
    const auto g = need(in.genus, "--genus", method);
    const auto d = small(need(in.degree, "--degree", method), "--degree");
    const auto search = poincare_section_search(d, g);
    report.value = Rational(static_cast<long>(search.m_min));
    report.auxiliary["m_min"] = std::to_string(search.m_min);
    report.auxiliary["m_star"] = std::to_string(search.m_star);
    for (const auto& [m, f] : search.f_values) {
      report.auxiliary["f(" + std::to_string(m) + ")"] = to_string(f);
    }
  } else {
    throw DomainError("bounds.unknown_method", "unknown bound method '" + method + "'");
  }
  return report;
}

}  // namespace foliate
