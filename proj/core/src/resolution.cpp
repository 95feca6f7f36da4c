#include "foliate/resolution.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>

#include "foliate/error.hpp"

namespace foliate {

DiagonalPositive make_diagonal(std::int64_t p, std::int64_t q) {
  if (p < 1 || q < 1) {
    throw DomainError("resolution.non_positive", "diagonal singularity needs p, q >= 1");
  }
  if (std::gcd(p, q) != 1) {
    throw DomainError("resolution.not_coprime", "diagonal singularity needs gcd(p, q) = 1");
  }
  return {p, q};
}

NilpotentFamily make_nilpotent(int preliminary_blowups, std::int64_t a) {
  if (preliminary_blowups < 0 || preliminary_blowups > 2) {
    throw DomainError("resolution.bad_blowups", "nilpotent family needs 0, 1 or 2 preliminary blow-ups");
  }
  if (a < 1) {
    throw DomainError("resolution.bad_order", "nilpotent family needs a >= 1");
  }
  return {preliminary_blowups, a};
}

void validate(const SingularityKind& kind) {
  if (const auto* d = std::get_if<DiagonalPositive>(&kind)) {
    make_diagonal(d->p, d->q);
  } else if (const auto* n = std::get_if<NilpotentFamily>(&kind)) {
    make_nilpotent(n->preliminary_blowups, n->a);
  }
}

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError("parse.singularity", "bad integer in singularity '" + std::string(whole) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace

SingularityKind parse_singularity(std::string_view text) {
  const auto parts = split(text, ':');
  if (parts.size() == 1 && parts[0] == "reduced") return ReducedHyperbolic{};
  if (parts.size() == 3 && parts[0] == "diag") {
    return make_diagonal(parse_int(parts[1], text), parse_int(parts[2], text));
  }
  if (parts.size() == 3 && parts[0] == "nilp") {
    const auto b = parse_int(parts[1], text);
    if (b < 0 || b > 2) {
      throw DomainError("resolution.bad_blowups", "nilpotent family needs 0, 1 or 2 preliminary blow-ups");
    }
    return make_nilpotent(static_cast<int>(b), parse_int(parts[2], text));
  }
  throw ParseError("parse.singularity",
                   "expected diag:p:q, nilp:b:a or reduced, got '" + std::string(text) + "'");
}

std::string to_string(const SingularityKind& kind) {
  return std::visit(
      [](const auto& k) -> std::string {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, DiagonalPositive>) {
          return "diag:" + std::to_string(k.p) + ":" + std::to_string(k.q);
        } else if constexpr (std::is_same_v<T, NilpotentFamily>) {
          return "nilp:" + std::to_string(k.preliminary_blowups) + ":" + std::to_string(k.a);
        } else {
          return "reduced";
        }
      },
      kind);
}

std::string CurveRef::label() const {
  if (kind == Kind::Axis) return index == 0 ? "X" : "Y";
  return "E" + std::to_string(index);
}

ResolutionTree::ResolutionTree(DiagonalPositive source, std::vector<BlowUp> steps)
    : source_(source), steps_(std::move(steps)) {}

ResolutionTree resolve_diagonal(std::int64_t p, std::int64_t q) {
  const auto source = make_diagonal(p, q);

  std::array<Carrier, 2> carriers{Carrier{{CurveRef::Kind::Axis, 0}, p},
                                  Carrier{{CurveRef::Kind::Axis, 1}, q}};
  std::map<int, std::int64_t> surface;  // a_X of each exceptional divisor
  std::vector<BlowUp> steps;

  for (int k = 1;; ++k) {
    std::sort(carriers.begin(), carriers.end(), [](const Carrier& l, const Carrier& r) {
      return std::tie(l.eigenvalue, l.curve) < std::tie(r.eigenvalue, r.curve);
    });
    BlowUp step;
    step.center = "P" + std::to_string(k - 1);
    step.alpha = carriers[0].eigenvalue;
    step.beta = carriers[1].eigenvalue;
    step.carriers = carriers;
    step.divisor = k;
    step.surface_discrepancy = 1;
    for (const auto& c : carriers) {
      if (c.curve.kind == CurveRef::Kind::Exceptional) {
        step.surface_discrepancy += surface.at(c.curve.index);
      }
    }
    surface[k] = step.surface_discrepancy;

    // Coprimality is preserved by subtraction, so equal eigenvalues only
    // occur at the radial point (1, 1).
    if (step.alpha == step.beta) {
      step.foliation_discrepancy = -1;
      step.dicritical = true;
      steps.push_back(std::move(step));
      break;
    }
    steps.push_back(step);
    carriers = {carriers[0],
                Carrier{{CurveRef::Kind::Exceptional, k}, step.beta - step.alpha}};
  }
  return ResolutionTree(source, std::move(steps));
}

std::int64_t phi(std::int64_t p, std::int64_t q) {
  return resolve_diagonal(p, q).final_step().surface_discrepancy;
}

std::optional<Rational> DiscrepancyLine::root() const {
  if (slope.sign() == 0) return std::nullopt;
  return -intercept / slope;
}

std::vector<DiscrepancyLine> adjoint_discrepancies(const SingularityKind& kind) {
  validate(kind);
  if (const auto* d = std::get_if<DiagonalPositive>(&kind)) {
    const auto tree = resolve_diagonal(d->p, d->q);
    std::vector<DiscrepancyLine> lines;
    lines.reserve(tree.size());
    for (const auto& step : tree.steps()) {
      DiscrepancyLine line;
      line.divisor = "E" + std::to_string(step.divisor);
      if (step.dicritical) {
        line.slope = Rational(step.surface_discrepancy + 1);
        line.intercept = Rational(-1);
      } else {
        line.slope = Rational(step.surface_discrepancy);
        line.intercept = Rational(0);
      }
      lines.push_back(std::move(line));
    }
    return lines;
  }
  if (const auto* n = std::get_if<NilpotentFamily>(&kind)) {
    // K_G = pi^* K_F - a E and N*_G = pi^* N*_F + (a + 1 + b) E along the
    // last divisor of the b + 1 blow-ups.
    DiscrepancyLine line;
    line.divisor = "E" + std::to_string(n->preliminary_blowups + 1);
    line.slope = Rational(n->a + 1 + n->preliminary_blowups);
    line.intercept = Rational(-n->a);
    line.lower_bound_witness = true;
    return {line};
  }
  throw DomainError("resolution.reduced",
                    "reduced singularities have nonnegative discrepancies; nothing to compute");
}

bool is_epsilon_canonical(const SingularityKind& kind, const Rational& eps) {
  validate(kind);
  if (eps.sign() < 0) {
    throw DomainError("resolution.negative_epsilon", "epsilon must be >= 0");
  }
  if (std::holds_alternative<ReducedHyperbolic>(kind)) return true;

  const auto lines = adjoint_discrepancies(kind);
  if (std::holds_alternative<NilpotentFamily>(kind)) {
    const auto& witness = lines.front();
    if (eps < *witness.root()) return false;
    throw IndeterminateError("resolution.indeterminate",
                             "nilpotent singularity: epsilon at or above the witness root " +
                                 witness.root()->str() + " is not decided");
  }
  // Every line has positive slope, so a(t) >= 0 on [eps, inf) iff a(eps) >= 0.
  return std::all_of(lines.begin(), lines.end(),
                     [&](const DiscrepancyLine& l) { return l.at(eps).sign() >= 0; });
}

CanonicalityReport canonicality(const SingularityKind& kind) {
  validate(kind);
  CanonicalityReport report;
  if (std::holds_alternative<ReducedHyperbolic>(kind)) {
    report.is_canonical = true;
    report.is_log_canonical = true;
    report.canonical_threshold = Rational(0);
    return report;
  }
  const auto lines = adjoint_discrepancies(kind);
  if (std::holds_alternative<DiagonalPositive>(kind)) {
    report.is_log_canonical = true;
    Rational worst(0);
    for (const auto& l : lines) {
      if (const auto r = l.root(); r && *r > worst) worst = *r;
    }
    report.canonical_threshold = worst;
    return report;
  }
  report.canonical_threshold = *lines.front().root();
  report.threshold_is_lower_bound = true;
  return report;
}

}  // namespace foliate
