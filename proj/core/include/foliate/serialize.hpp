#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "foliate/bounds.hpp"
#include "foliate/classify.hpp"
#include "foliate/exactmath.hpp"
#include "foliate/hjstring.hpp"
#include "foliate/resolution.hpp"
#include "foliate/zariski.hpp"

// JSON encodings. Exact rationals and big integers are written as decimal
// strings ("n" or "n/d"); small counts and indices as JSON numbers. Every
// top-level report carries a "schema" tag of the form "foliate.<name>/1".

namespace foliate {

using json = nlohmann::ordered_json;

void to_json(json& j, const Rational& r);
void from_json(const json& j, Rational& r);

void to_json(json& j, const Carrier& c);
void from_json(const json& j, Carrier& c);
void to_json(json& j, const BlowUp& b);
void from_json(const json& j, BlowUp& b);
void to_json(json& j, const ResolutionTree& t);
void from_json(const json& j, ResolutionTree& t);
void to_json(json& j, const DiscrepancyLine& l);
void from_json(const json& j, DiscrepancyLine& l);
void to_json(json& j, const CanonicalityReport& r);
void from_json(const json& j, CanonicalityReport& r);
void to_json(json& j, const HJData& d);
void from_json(const json& j, HJData& d);
void to_json(json& j, const TailClassification& c);
void from_json(const json& j, TailClassification& c);
void to_json(json& j, const ZariskiResult& r);
void from_json(const json& j, ZariskiResult& r);
void to_json(json& j, const BoundReport& r);
void from_json(const json& j, BoundReport& r);
void to_json(json& j, const ClassificationEntry& e);
void from_json(const json& j, ClassificationEntry& e);
void to_json(json& j, const PlaneThreshold& t);
void from_json(const json& j, PlaneThreshold& t);
void to_json(json& j, const AdjointParameters& p);
void from_json(const json& j, AdjointParameters& p);

/// Reads { "curves": [...], "gram": [[...]], "pairings": [...],
/// "self_intersection": optional }. Pairings may be numbers or "n/d"
/// strings. Throws ParseError on malformed documents.
std::pair<IntersectionLattice, DivisorData> parse_zariski_input(const json& doc);

/// Graphviz rendering: one node per blow-up center, one per exceptional
/// divisor and per original axis, edges for creation and incidence.
/// Output order follows creation order.
std::string to_dot(const ResolutionTree& tree);

/// Plain-text rendering used by the CLI's default output.
std::string to_text(const ResolutionTree& tree);

}  // namespace foliate
