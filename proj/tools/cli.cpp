#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif

#include "foliate/bounds.hpp"
#include "foliate/classify.hpp"
#include "foliate/error.hpp"
#include "foliate/hjstring.hpp"
#include "foliate/resolution.hpp"
#include "foliate/serialize.hpp"
#include "foliate/zariski.hpp"

namespace foliate::cli {

namespace {

json with_schema(const std::string& name, const json& body) {
  json out{{"schema", "foliate." + name + "/1"}};
  for (const auto& [k, v] : body.items()) out[k] = v;
  return out;
}

void emit_json(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

void merge_into(json& body, const json& extra) {
  for (const auto& [k, v] : extra.items()) body[k] = v;
}

BigInt parse_big(const std::string& text, const char* what) {
  BigInt v;
  const bool digits_only =
      !text.empty() && std::all_of(text.begin() + (text[0] == '-' ? 1 : 0), text.end(),
                                   [](unsigned char c) { return std::isdigit(c) != 0; });
  if (!digits_only || v.set_str(text, 10) != 0) {
    throw ParseError("parse.integer", std::string(what) + " is not an integer: '" + text + "'");
  }
  return v;
}

std::string join(const std::vector<Rational>& values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) s += (i ? " " : "") + values[i].str();
  return s;
}

struct Options {
  bool json = false;

  std::int64_t p = 0, q = 0;
  std::string format = "text";

  std::string singularity;
  std::string eps;

  std::vector<std::int64_t> chain;

  std::int64_t chi = 2, s = 0;
  std::vector<std::int64_t> orders;

  std::string input_path;

  std::string method;
  std::optional<std::int64_t> genus;
  std::optional<std::string> degree, index, pairing;
  std::optional<std::int64_t> a, b;

  std::string adj, kod;

  std::int64_t plane_degree = 0;
  std::vector<std::string> sings;

  std::optional<std::string> t, s_param, n, m;
};

void cmd_resolve(const Options& o, std::ostream& out) {
  const auto tree = resolve_diagonal(o.p, o.q);
  const std::string format = o.json ? "json" : o.format;
  if (format == "dot") {
    out << to_dot(tree);
  } else if (format == "json") {
    json body = tree;
    body["continued_fraction"] =
        regular_continued_fraction(std::max(o.p, o.q), std::min(o.p, o.q)).terms;
    emit_json(out, with_schema("resolution", body));
  } else {
    out << to_text(tree);
  }
}

void cmd_phi(const Options& o, std::ostream& out) {
  const auto value = phi(o.p, o.q);
  if (!o.json) {
    out << value << "\n";
    return;
  }
  const auto cf = regular_continued_fraction(std::max(o.p, o.q), std::min(o.p, o.q));
  emit_json(out, with_schema("phi", json{{"p", o.p},
                                         {"q", o.q},
                                         {"phi", value},
                                         {"continued_fraction", cf.terms},
                                         {"term_sum", cf.term_sum()}}));
}

void cmd_threshold(const Options& o, std::ostream& out) {
  const auto kind = parse_singularity(o.singularity);
  const auto report = canonicality(kind);
  std::vector<DiscrepancyLine> lines;
  if (!std::holds_alternative<ReducedHyperbolic>(kind)) lines = adjoint_discrepancies(kind);
  if (!o.json) {
    out << (report.threshold_is_lower_bound ? ">= " : "") << report.canonical_threshold.str() << "\n";
    return;
  }
  json body = report;
  body["singularity"] = to_string(kind);
  body["lines"] = lines;
  emit_json(out, with_schema("threshold", body));
}

void cmd_epsilon(const Options& o, std::ostream& out) {
  const auto kind = parse_singularity(o.singularity);
  const auto eps = Rational::parse(o.eps);
  const bool result = is_epsilon_canonical(kind, eps);
  if (!o.json) {
    out << (result ? "true" : "false") << "\n";
    return;
  }
  emit_json(out, with_schema("epsilon_canonical", json{{"singularity", to_string(kind)},
                                                       {"epsilon", eps},
                                                       {"epsilon_canonical", result}}));
}

void cmd_hj(const Options& o, std::ostream& out) {
  const HJString chain(o.chain);
  const auto data = hj_data(chain);
  if (!o.json) {
    out << "order: " << to_string(data.order) << "\n"
        << "coefficients: " << join(data.zariski_coefficients) << "\n"
        << "quotient_weight: " << to_string(data.quotient_weight) << "\n"
        << "quotient_weight_reversed: " << to_string(data.quotient_weight_reversed) << "\n";
    return;
  }
  json body{{"chain", o.chain}};
  merge_into(body, json(data));
  emit_json(out, with_schema("hj", body));
}

void cmd_tail(const Options& o, std::ostream& out) {
  TailConfig config{o.chi, o.s, o.orders};
  const auto defect = tail_defect(config);
  std::optional<TailClassification> cls;
  if (config.chi == 2) cls = tail_classify(config);
  std::optional<BigInt> modulus;
  if (!config.orders.empty()) modulus = vanishing_order_modulus(config.orders);

  if (!o.json) {
    out << "defect: " << defect.str() << "\n";
    if (cls) {
      out << "classification: " << to_string(cls->kind);
      if (cls->variant) out << " (" << to_string(*cls->variant) << ")";
      out << "\n";
    }
    if (modulus) out << "vanishing_order_modulus: " << to_string(*modulus) << "\n";
    return;
  }
  json body{{"chi", config.chi}, {"s", config.s}, {"orders", config.orders}};
  if (cls) {
    merge_into(body, json(*cls));
  } else {
    body["classification"] = nullptr;
    body["defect"] = defect;
    body["variant"] = nullptr;
  }
  body["vanishing_order_modulus"] = modulus ? json(to_string(*modulus)) : json(nullptr);
  emit_json(out, with_schema("tail", body));
}

void cmd_zariski(const Options& o, std::ostream& out) {
  std::ifstream in(o.input_path);
  if (!in) throw ParseError("io.open", "cannot open '" + o.input_path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError("parse.json", std::string("malformed JSON: ") + e.what());
  }
  const auto [lattice, divisor] = parse_zariski_input(doc);
  const auto result = zariski_decompose(lattice, divisor);
  const auto index = index_of_decomposition(result);
  if (!o.json) {
    out << "support:";
    for (std::size_t i = 0; i < result.support.size(); ++i) {
      out << " " << result.support_labels[i] << "=" << result.negative_coefficients[i].str();
    }
    out << "\nindex: " << to_string(index) << "\n";
    return;
  }
  json body{{"curves", lattice.labels()}};
  merge_into(body, json(result));
  body["index"] = to_string(index);
  emit_json(out, with_schema("zariski", body));
}

void cmd_bounds(const Options& o, std::ostream& out) {
  BoundInputs in;
  in.genus = o.genus;
  if (o.degree) in.degree = parse_big(*o.degree, "--degree");
  if (o.index) in.index = parse_big(*o.index, "--index");
  in.a = o.a;
  in.b = o.b;
  if (o.pairing) in.pairing = Rational::parse(*o.pairing);
  const auto report = evaluate_bound(o.method, in);
  if (!o.json) {
    out << report.value.str() << "\n";
    return;
  }
  emit_json(out, with_schema("bound", report));
}

void cmd_classify(const Options& o, std::ostream& out) {
  const auto entry = classify_pair(parse_dimension(o.adj), parse_dimension(o.kod));
  if (!o.json) {
    for (const auto& d : entry.descriptions) out << d << "\n";
    out << "transversely " << to_string(entry.transverse_structure) << "\n";
    return;
  }
  emit_json(out, with_schema("classification", entry));
}

void cmd_plane(const Options& o, std::ostream& out) {
  PlaneFoliation foliation;
  foliation.degree = o.plane_degree;
  for (const auto& s : o.sings) foliation.singularities.push_back(parse_singularity(s));
  const auto degrees = plane_bundle_degrees(foliation.degree);
  const auto threshold = plane_eff_threshold(foliation);
  if (!o.json) {
    switch (threshold.status) {
      case PlaneThreshold::Status::Exact: out << threshold.value->str() << "\n"; break;
      case PlaneThreshold::Status::NegativeInfinity: out << "-inf\n"; break;
      case PlaneThreshold::Status::RequiresBlowUp:
        out << "requires blow-up analysis (max canonical threshold "
            << threshold.max_canonical_threshold.str() << ")\n";
        break;
    }
    return;
  }
  json body{{"degree", foliation.degree},
            {"bundle_degrees", {{"kf", degrees.kf}, {"nstar", degrees.nstar}, {"kx", degrees.kx}}},
            {"singularities", o.sings}};
  merge_into(body, json(threshold));
  emit_json(out, with_schema("plane", body));
}

void cmd_convert(const Options& o, std::ostream& out) {
  const int forms = (o.t ? 1 : 0) + (o.s_param ? 1 : 0) + ((o.n || o.m) ? 1 : 0);
  if (forms != 1) {
    throw ParseError("cli.usage", "convert needs exactly one of --t, --s or --n/--m");
  }
  AdjointParameters p;
  if (o.t) {
    p = convert_from_t(Rational::parse(*o.t));
  } else if (o.s_param) {
    p = convert_from_s(Rational::parse(*o.s_param));
  } else {
    if (!o.n || !o.m) throw ParseError("cli.usage", "--n and --m must be given together");
    p = convert_from_exponents(parse_big(*o.n, "--n"), parse_big(*o.m, "--m"));
  }
  if (!o.json) {
    out << "n=" << to_string(p.exponents->first) << " m=" << to_string(p.exponents->second)
        << " t=" << p.t.str() << " s=" << (p.s ? p.s->str() : std::string("undefined")) << "\n";
    return;
  }
  emit_json(out, with_schema("adjoint_parameters", p));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact birational invariants of foliated surfaces", "foliate"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "Emit a versioned JSON report");

  std::function<void(std::ostream&)> action;
  auto bind = [&](CLI::App* sub, void (*fn)(const Options&, std::ostream&)) {
    sub->callback([&action, &o, fn] { action = [&o, fn](std::ostream& os) { fn(o, os); }; });
  };

  auto* resolve = app.add_subcommand("resolve", "Blow-up tree of p x d/dx + q y d/dy");
  resolve->add_option("p", o.p)->required();
  resolve->add_option("q", o.q)->required();
  resolve->add_option("--format", o.format)->check(CLI::IsMember({"text", "json", "dot"}));
  bind(resolve, cmd_resolve);

  auto* phi_cmd = app.add_subcommand("phi", "Surface discrepancy of the dicritical divisor");
  phi_cmd->add_option("p", o.p)->required();
  phi_cmd->add_option("q", o.q)->required();
  bind(phi_cmd, cmd_phi);

  auto* threshold = app.add_subcommand("threshold", "Canonical threshold of a singularity");
  threshold->add_option("singularity", o.singularity, "diag:p:q, nilp:b:a or reduced")->required();
  bind(threshold, cmd_threshold);

  auto* epsilon = app.add_subcommand("epsilon-canonical", "Test epsilon-canonicity");
  epsilon->add_option("singularity", o.singularity)->required();
  epsilon->add_option("--eps", o.eps, "Rational epsilon, e.g. 1/3")->required();
  bind(epsilon, cmd_epsilon);

  auto* hj = app.add_subcommand("hj", "Hirzebruch-Jung string data; pass the chain after --");
  hj->add_option("chain", o.chain, "Self-intersections, handle first")->required();
  bind(hj, cmd_hj);

  auto* tail = app.add_subcommand("tail", "Positive-part intersection with a tail");
  tail->add_option("--chi", o.chi);
  tail->add_option("--s", o.s);
  tail->add_option("--orders", o.orders)->expected(0, -1);
  bind(tail, cmd_tail);

  auto* zariski = app.add_subcommand("zariski", "Zariski decomposition from a JSON document");
  zariski->add_option("input", o.input_path)->required();
  bind(zariski, cmd_zariski);

  auto* bounds = app.add_subcommand("bounds", "Effective degree and index bounds");
  bounds->add_option("--method", o.method)
      ->required()
      ->check(CLI::IsMember({"thmA", "index", "poincare", "pa", "search"}));
  bounds->add_option("--genus", o.genus);
  bounds->add_option("--degree", o.degree);
  bounds->add_option("--index", o.index);
  bounds->add_option("--a", o.a, "Exponent of K_F (method pa)");
  bounds->add_option("--b", o.b, "Exponent of N*_F (method pa)");
  bounds->add_option("--pairing", o.pairing, "(aK_F + bN*_F).H (method pa)");
  bind(bounds, cmd_bounds);

  auto* classify = app.add_subcommand("classify", "Adjoint/Kodaira classification table lookup");
  classify->add_option("--adj", o.adj)->required();
  classify->add_option("--kod", o.kod)->required();
  bind(classify, cmd_classify);

  auto* plane = app.add_subcommand("plane", "Effective threshold of a plane foliation");
  plane->add_option("--degree", o.plane_degree)->required();
  plane->add_option("--sing", o.sings, "Repeatable singularity spec");
  bind(plane, cmd_plane);

  auto* convert = app.add_subcommand("convert", "Convert adjoint parameters (n,m), t and s");
  convert->add_option("--t", o.t);
  convert->add_option("--s", o.s_param);
  convert->add_option("--n", o.n);
  convert->add_option("--m", o.m);
  bind(convert, cmd_convert);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: cli.usage: " << e.what() << "\n";
    return kMalformedInput;
  }

  try {
    std::ostringstream buffer;
    action(buffer);
    out << buffer.str();
    return kOk;
  } catch (const ParseError& e) {
    err << "error: " << e.code() << ": " << e.what() << "\n";
    return kMalformedInput;
  } catch (const DomainError& e) {
    err << "error: " << e.code() << ": " << e.what() << "\n";
    return kDomainError;
  }
}

}  // namespace foliate::cli
