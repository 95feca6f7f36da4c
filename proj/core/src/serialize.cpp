#include "foliate/serialize.hpp"

#include <sstream>

#include "foliate/error.hpp"

namespace foliate {

namespace {

BigInt big_from(const json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long>());
  BigInt out;
  if (!j.is_string() || out.set_str(j.get<std::string>(), 10) != 0) {
    throw ParseError("parse.json", "expected an integer, got " + j.dump());
  }
  return out;
}

CurveRef curve_from_label(const std::string& label) {
  if (label == "X") return {CurveRef::Kind::Axis, 0};
  if (label == "Y") return {CurveRef::Kind::Axis, 1};
  if (label.size() > 1 && label[0] == 'E') {
    return {CurveRef::Kind::Exceptional, std::stoi(label.substr(1))};
  }
  throw ParseError("parse.json", "unknown curve label '" + label + "'");
}

TailClassification::Kind tail_kind_from(const std::string& s) {
  if (s == "zero") return TailClassification::Kind::Zero;
  if (s == "positive") return TailClassification::Kind::Positive;
  if (s == "negative") return TailClassification::Kind::Negative;
  throw ParseError("parse.json", "unknown tail classification '" + s + "'");
}

TailZeroVariant variant_from(const std::string& s) {
  for (auto v : {TailZeroVariant::Orders333, TailZeroVariant::Orders236, TailZeroVariant::Orders244,
                 TailZeroVariant::Orders2222, TailZeroVariant::Orders22OneFree}) {
    if (to_string(v) == s) return v;
  }
  throw ParseError("parse.json", "unknown tail variant '" + s + "'");
}

TransverseStructure transverse_from(const std::string& s) {
  for (auto t : {TransverseStructure::Projective, TransverseStructure::Affine,
                 TransverseStructure::NoneAsserted}) {
    if (to_string(t) == s) return t;
  }
  throw ParseError("parse.json", "unknown transverse structure '" + s + "'");
}

PlaneThreshold::Status status_from(const std::string& s) {
  for (auto st : {PlaneThreshold::Status::Exact, PlaneThreshold::Status::NegativeInfinity,
                  PlaneThreshold::Status::RequiresBlowUp}) {
    if (to_string(st) == s) return st;
  }
  throw ParseError("parse.json", "unknown threshold status '" + s + "'");
}

template <typename T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <typename T>
std::optional<T> optional_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<T>();
}

}  // namespace

void to_json(json& j, const Rational& r) { j = r.str(); }

void from_json(const json& j, Rational& r) {
  if (j.is_number_integer()) {
    r = Rational(j.get<long>());
  } else if (j.is_string()) {
    r = Rational::parse(j.get<std::string>());
  } else {
    throw ParseError("parse.json", "expected a rational, got " + j.dump());
  }
}

void to_json(json& j, const Carrier& c) {
  j = json{{"curve", c.curve.label()}, {"eigenvalue", c.eigenvalue}};
}

void from_json(const json& j, Carrier& c) {
  c.curve = curve_from_label(j.at("curve").get<std::string>());
  c.eigenvalue = j.at("eigenvalue").get<std::int64_t>();
}

void to_json(json& j, const BlowUp& b) {
  j = json{{"center", b.center},
           {"eigenvalues", {b.alpha, b.beta}},
           {"carriers", {b.carriers[0], b.carriers[1]}},
           {"divisor", "E" + std::to_string(b.divisor)},
           {"surface_discrepancy", b.surface_discrepancy},
           {"foliation_discrepancy", b.foliation_discrepancy},
           {"dicritical", b.dicritical}};
}

void from_json(const json& j, BlowUp& b) {
  b.center = j.at("center").get<std::string>();
  b.alpha = j.at("eigenvalues").at(0).get<std::int64_t>();
  b.beta = j.at("eigenvalues").at(1).get<std::int64_t>();
  b.carriers[0] = j.at("carriers").at(0).get<Carrier>();
  b.carriers[1] = j.at("carriers").at(1).get<Carrier>();
  b.divisor = curve_from_label(j.at("divisor").get<std::string>()).index;
  b.surface_discrepancy = j.at("surface_discrepancy").get<std::int64_t>();
  b.foliation_discrepancy = j.at("foliation_discrepancy").get<std::int64_t>();
  b.dicritical = j.at("dicritical").get<bool>();
}

void to_json(json& j, const ResolutionTree& t) {
  j = json{{"singularity", to_string(SingularityKind{t.source()})},
           {"length", t.size()},
           {"phi", t.final_step().surface_discrepancy},
           {"steps", t.steps()}};
}

void from_json(const json& j, ResolutionTree& t) {
  const auto kind = parse_singularity(j.at("singularity").get<std::string>());
  const auto* diag = std::get_if<DiagonalPositive>(&kind);
  if (diag == nullptr) throw ParseError("parse.json", "resolution tree needs a diagonal singularity");
  t = ResolutionTree(*diag, j.at("steps").get<std::vector<BlowUp>>());
}

void to_json(json& j, const DiscrepancyLine& l) {
  j = json{{"divisor", l.divisor},
           {"slope", l.slope},
           {"intercept", l.intercept},
           {"root", optional_json(l.root())},
           {"lower_bound_witness", l.lower_bound_witness}};
}

void from_json(const json& j, DiscrepancyLine& l) {
  l.divisor = j.at("divisor").get<std::string>();
  l.slope = j.at("slope").get<Rational>();
  l.intercept = j.at("intercept").get<Rational>();
  l.lower_bound_witness = j.at("lower_bound_witness").get<bool>();
}

void to_json(json& j, const CanonicalityReport& r) {
  j = json{{"is_canonical", r.is_canonical},
           {"is_log_canonical", r.is_log_canonical},
           {"canonical_threshold", r.canonical_threshold},
           {"threshold_is_lower_bound", r.threshold_is_lower_bound}};
}

void from_json(const json& j, CanonicalityReport& r) {
  r.is_canonical = j.at("is_canonical").get<bool>();
  r.is_log_canonical = j.at("is_log_canonical").get<bool>();
  r.canonical_threshold = j.at("canonical_threshold").get<Rational>();
  r.threshold_is_lower_bound = j.at("threshold_is_lower_bound").get<bool>();
}

void to_json(json& j, const HJData& d) {
  j = json{{"order", to_string(d.order)},
           {"zariski_coefficients", d.zariski_coefficients},
           {"quotient_weight", to_string(d.quotient_weight)},
           {"quotient_weight_reversed", to_string(d.quotient_weight_reversed)}};
}

void from_json(const json& j, HJData& d) {
  d.order = big_from(j.at("order"));
  d.zariski_coefficients = j.at("zariski_coefficients").get<std::vector<Rational>>();
  d.quotient_weight = big_from(j.at("quotient_weight"));
  d.quotient_weight_reversed = big_from(j.at("quotient_weight_reversed"));
}

void to_json(json& j, const TailClassification& c) {
  j = json{{"classification", to_string(c.kind)},
           {"defect", c.value},
           {"variant", c.variant ? json(to_string(*c.variant)) : json(nullptr)}};
}

void from_json(const json& j, TailClassification& c) {
  c.kind = tail_kind_from(j.at("classification").get<std::string>());
  c.value = j.at("defect").get<Rational>();
  c.variant.reset();
  if (!j.at("variant").is_null()) c.variant = variant_from(j.at("variant").get<std::string>());
}

void to_json(json& j, const ZariskiResult& r) {
  j = json{{"support", r.support},
           {"support_labels", r.support_labels},
           {"negative_coefficients", r.negative_coefficients},
           {"positive_pairings", r.positive_pairings},
           {"positive_self_intersection", optional_json(r.positive_self_intersection)},
           {"iterations", r.iterations}};
}

void from_json(const json& j, ZariskiResult& r) {
  r.support = j.at("support").get<std::vector<std::size_t>>();
  r.support_labels = j.at("support_labels").get<std::vector<std::string>>();
  r.negative_coefficients = j.at("negative_coefficients").get<std::vector<Rational>>();
  r.positive_pairings = j.at("positive_pairings").get<std::vector<Rational>>();
  r.positive_self_intersection = optional_from<Rational>(j.at("positive_self_intersection"));
  r.iterations = j.at("iterations").get<int>();
}

void to_json(json& j, const BoundReport& r) {
  j = json{{"method", r.method}, {"value", r.value}, {"auxiliary", r.auxiliary}};
}

void from_json(const json& j, BoundReport& r) {
  r.method = j.at("method").get<std::string>();
  r.value = j.at("value").get<Rational>();
  r.auxiliary = j.at("auxiliary").get<std::map<std::string, std::string>>();
}

void to_json(json& j, const ClassificationEntry& e) {
  j = json{{"adjoint", to_string(e.adjoint)},
           {"kodaira", to_string(e.kodaira)},
           {"descriptions", e.descriptions},
           {"transverse_structure", to_string(e.transverse_structure)},
           {"notes", e.notes}};
}

void from_json(const json& j, ClassificationEntry& e) {
  e.adjoint = parse_dimension(j.at("adjoint").get<std::string>());
  e.kodaira = parse_dimension(j.at("kodaira").get<std::string>());
  e.descriptions = j.at("descriptions").get<std::vector<std::string>>();
  e.transverse_structure = transverse_from(j.at("transverse_structure").get<std::string>());
  e.notes = j.at("notes").get<std::string>();
}

void to_json(json& j, const PlaneThreshold& t) {
  j = json{{"status", to_string(t.status)},
           {"eff", optional_json(t.value)},
           {"degree_value", optional_json(t.degree_value)},
           {"max_canonical_threshold", t.max_canonical_threshold},
           {"obstructions", t.obstructions}};
}

void from_json(const json& j, PlaneThreshold& t) {
  t.status = status_from(j.at("status").get<std::string>());
  t.value = optional_from<Rational>(j.at("eff"));
  t.degree_value = optional_from<Rational>(j.at("degree_value"));
  t.max_canonical_threshold = j.at("max_canonical_threshold").get<Rational>();
  t.obstructions = j.at("obstructions").get<std::vector<std::size_t>>();
}

void to_json(json& j, const AdjointParameters& p) {
  j = json{{"n", p.exponents ? json(to_string(p.exponents->first)) : json(nullptr)},
           {"m", p.exponents ? json(to_string(p.exponents->second)) : json(nullptr)},
           {"t", p.t},
           {"s", optional_json(p.s)},
           {"s_undefined", !p.s.has_value()}};
}

void from_json(const json& j, AdjointParameters& p) {
  p.exponents.reset();
  if (!j.at("n").is_null()) p.exponents = std::make_pair(big_from(j.at("n")), big_from(j.at("m")));
  p.t = j.at("t").get<Rational>();
  p.s = optional_from<Rational>(j.at("s"));
}

std::pair<IntersectionLattice, DivisorData> parse_zariski_input(const json& doc) {
  try {
    auto labels = doc.at("curves").get<std::vector<std::string>>();
    auto gram = doc.at("gram").get<std::vector<std::vector<std::int64_t>>>();
    DivisorData divisor;
    divisor.pairings = doc.at("pairings").get<std::vector<Rational>>();
    if (doc.contains("self_intersection") && !doc.at("self_intersection").is_null()) {
      divisor.self_intersection = doc.at("self_intersection").get<Rational>();
    }
    return {IntersectionLattice(std::move(labels), std::move(gram)), std::move(divisor)};
  } catch (const json::exception& e) {
    throw ParseError("parse.zariski_input", std::string("malformed zariski input: ") + e.what());
  }
}

std::string to_dot(const ResolutionTree& tree) {
  std::ostringstream out;
  out << "graph resolution {\n";
  out << "  label=\"" << to_string(SingularityKind{tree.source()}) << "\";\n";
  out << "  X [shape=plaintext, label=\"X (y=0)\"];\n";
  out << "  Y [shape=plaintext, label=\"Y (x=0)\"];\n";
  for (const auto& step : tree.steps()) {
    out << "  " << step.center << " [shape=point, xlabel=\"" << step.center << " (" << step.alpha
        << "," << step.beta << ")\"];\n";
    out << "  E" << step.divisor << " [shape=box, label=\"E" << step.divisor
        << "\\na_X=" << step.surface_discrepancy << " a_F=" << step.foliation_discrepancy
        << (step.dicritical ? "\\ndicritical" : "") << "\""
        << (step.dicritical ? ", style=bold" : "") << "];\n";
    for (const auto& c : step.carriers) {
      out << "  " << c.curve.label() << " -- " << step.center << " [style=dashed, label=\""
          << c.eigenvalue << "\"];\n";
    }
    out << "  " << step.center << " -- E" << step.divisor << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_text(const ResolutionTree& tree) {
  std::ostringstream out;
  out << to_string(SingularityKind{tree.source()}) << ": " << tree.size() << " blow-ups, phi = "
      << tree.final_step().surface_discrepancy << "\n";
  for (const auto& step : tree.steps()) {
    out << step.center << " (" << step.alpha << "," << step.beta << ") on "
        << step.carriers[0].curve.label() << "[" << step.carriers[0].eigenvalue << "] "
        << step.carriers[1].curve.label() << "[" << step.carriers[1].eigenvalue << "] -> E"
        << step.divisor << " a_X=" << step.surface_discrepancy << " a_F=" << step.foliation_discrepancy
        << (step.dicritical ? " dicritical" : "") << "\n";
  }
  return out.str();
}

}  // namespace foliate
