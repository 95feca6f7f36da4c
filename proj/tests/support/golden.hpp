#pragma once

// Golden CLI cases. Each tests/golden/*.golden file holds:
//   line 1: arguments, space separated ("{golden}" expands to the golden dir)
//   line 2: expected exit code
//   rest:   expected stdout, byte for byte

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "foliate/bounds.hpp"
#include "foliate/classify.hpp"
#include "foliate/hjstring.hpp"
#include "foliate/serialize.hpp"
#include "foliate/zariski.hpp"

namespace foliate::testing {

struct GoldenCase {
  std::string name;
  std::filesystem::path path;
  std::vector<std::string> args;
  int exit_code = 0;
  std::string stdout_text;
};

struct RunResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

inline std::string golden_dir() { return FOLIATE_GOLDEN_DIR; }

inline std::vector<std::string> split_args(const std::string& line) {
  std::vector<std::string> args;
  std::istringstream in(line);
  std::string word;
  while (in >> word) {
    const auto pos = word.find("{golden}");
    if (pos != std::string::npos) word.replace(pos, 8, golden_dir());
    args.push_back(word);
  }
  return args;
}

inline GoldenCase load_golden(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  GoldenCase c;
  c.name = path.stem().string();
  c.path = path;
  std::string args_line, code_line;
  std::getline(in, args_line);
  std::getline(in, code_line);
  c.args = split_args(args_line);
  c.exit_code = std::stoi(code_line);
  std::ostringstream rest;
  rest << in.rdbuf();
  c.stdout_text = rest.str();
  return c;
}

inline std::vector<GoldenCase> load_all_golden() {
  std::vector<GoldenCase> cases;
  for (const auto& entry : std::filesystem::directory_iterator(golden_dir())) {
    if (entry.path().extension() == ".golden") cases.push_back(load_golden(entry.path()));
  }
  std::sort(cases.begin(), cases.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
  return cases;
}

inline RunResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  RunResult r;
  r.exit_code = cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

/// Decodes a JSON report with the library's own types and re-encodes it;
/// returns an empty string on success, otherwise a description of the first
/// mismatch.
inline std::string check_report_round_trip(const json& doc) {
  const auto schema = doc.at("schema").get<std::string>();
  const std::string prefix = "foliate.";
  if (schema.rfind(prefix, 0) != 0 || schema.size() < 3 || schema.substr(schema.size() - 2) != "/1") {
    return "bad schema tag " + schema;
  }
  const auto name = schema.substr(prefix.size(), schema.size() - prefix.size() - 2);

  auto same_keys = [&doc](const json& again) -> std::string {
    for (const auto& [k, v] : again.items()) {
      if (!doc.contains(k)) return "missing key " + k;
      if (doc.at(k) != v) return "key " + k + " differs: " + doc.at(k).dump() + " vs " + v.dump();
    }
    return {};
  };

  if (name == "resolution") return same_keys(json(doc.get<ResolutionTree>()));
  if (name == "threshold") {
    auto msg = same_keys(json(doc.get<CanonicalityReport>()));
    if (!msg.empty()) return msg;
    const json lines = doc.at("lines").get<std::vector<DiscrepancyLine>>();
    return lines == doc.at("lines") ? std::string{} : "lines differ";
  }
  if (name == "hj") return same_keys(json(doc.get<HJData>()));
  if (name == "tail") {
    if (doc.at("classification").is_null()) return {};
    return same_keys(json(doc.get<TailClassification>()));
  }
  if (name == "zariski") return same_keys(json(doc.get<ZariskiResult>()));
  if (name == "bound") return same_keys(json(doc.get<BoundReport>()));
  if (name == "classification") return same_keys(json(doc.get<ClassificationEntry>()));
  if (name == "plane") return same_keys(json(doc.get<PlaneThreshold>()));
  if (name == "adjoint_parameters") return same_keys(json(doc.get<AdjointParameters>()));
  if (name == "phi") {
    const auto cf = doc.at("continued_fraction").get<std::vector<std::int64_t>>();
    std::int64_t sum = 0;
    for (auto u : cf) sum += u;
    if (sum != doc.at("term_sum").get<std::int64_t>()) return "term_sum mismatch";
    return doc.at("phi").is_number_integer() ? std::string{} : "phi not an integer";
  }
  if (name == "epsilon_canonical") {
    doc.at("epsilon").get<Rational>();
    return doc.at("epsilon_canonical").is_boolean() ? std::string{} : "flag not boolean";
  }
  return "unknown schema " + name;
}

}  // namespace foliate::testing
