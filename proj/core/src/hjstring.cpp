#include "foliate/hjstring.hpp"

#include <algorithm>

#include "foliate/error.hpp"

namespace foliate {

HJString::HJString(std::vector<std::int64_t> self_intersections)
    : entries_(std::move(self_intersections)) {
  if (entries_.empty()) {
    throw DomainError("hjstring.empty", "Hirzebruch-Jung string must be non-empty");
  }
  for (const auto e : entries_) {
    if (e > -2) {
      throw DomainError("hjstring.bad_entry", "self-intersections must be <= -2");
    }
  }
}

std::vector<std::int64_t> HJString::weights() const {
  std::vector<std::int64_t> w(entries_.size());
  std::transform(entries_.begin(), entries_.end(), w.begin(), [](auto e) { return -e; });
  return w;
}

HJData hj_data(const HJString& chain) {
  const auto b = chain.weights();
  const std::span<const std::int64_t> all(b);
  HJData data;
  data.order = continuant_det(all);

  // Cramer on the tridiagonal system: a_i = det(b_{i+1..k}) / det(b_{1..k}).
  data.zariski_coefficients.reserve(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) {
    data.zariski_coefficients.emplace_back(continuant(all.subspan(i + 1)), data.order);
  }
  data.quotient_weight = continuant(all.subspan(1));
  data.quotient_weight_reversed = continuant(all.first(b.size() - 1));
  return data;
}

void TailConfig::validate() const {
  if (s < 0) {
    throw DomainError("hjstring.negative_s", "number of free singularities must be >= 0");
  }
  for (const auto o : orders) {
    if (o < 2) {
      throw DomainError("hjstring.bad_order", "string orders must be >= 2");
    }
  }
}

Rational tail_defect(const TailConfig& config) {
  config.validate();
  Rational value(-config.chi + config.s + static_cast<std::int64_t>(config.orders.size()));
  for (const auto o : config.orders) value -= Rational(1, o);
  return value;
}

std::string to_string(TailZeroVariant v) {
  switch (v) {
    case TailZeroVariant::Orders333: return "s0_o333";
    case TailZeroVariant::Orders236: return "s0_o236";
    case TailZeroVariant::Orders244: return "s0_o244";
    case TailZeroVariant::Orders2222: return "s0_o2222";
    case TailZeroVariant::Orders22OneFree: return "s1_o22";
  }
  return "unknown";
}

std::string to_string(TailClassification::Kind k) {
  switch (k) {
    case TailClassification::Kind::Zero: return "zero";
    case TailClassification::Kind::Positive: return "positive";
    case TailClassification::Kind::Negative: return "negative";
  }
  return "unknown";
}

namespace {

std::optional<TailZeroVariant> zero_variant(std::int64_t s, std::vector<std::int64_t> o) {
  std::sort(o.begin(), o.end());
  using V = std::vector<std::int64_t>;
  if (s == 0 && o == V{3, 3, 3}) return TailZeroVariant::Orders333;
  if (s == 0 && o == V{2, 3, 6}) return TailZeroVariant::Orders236;
  if (s == 0 && o == V{2, 4, 4}) return TailZeroVariant::Orders244;
  if (s == 0 && o == V{2, 2, 2, 2}) return TailZeroVariant::Orders2222;
  if (s == 1 && o == V{2, 2}) return TailZeroVariant::Orders22OneFree;
  return std::nullopt;
}

}  // namespace

TailClassification tail_classify(const TailConfig& config) {
  if (config.chi != 2) {
    throw DomainError("hjstring.out_of_scope", "tail classification needs a rational tail (chi = 2)");
  }
  TailClassification out;
  out.value = tail_defect(config);
  if (out.value.sign() > 0) {
    out.kind = TailClassification::Kind::Positive;
  } else if (out.value.sign() < 0) {
    out.kind = TailClassification::Kind::Negative;
  } else {
    out.kind = TailClassification::Kind::Zero;
    // With k = 0 the curve meets no string and is not a tail; no variant.
    out.variant = zero_variant(config.s, config.orders);
  }
  return out;
}

BigInt vanishing_order_modulus(std::span<const std::int64_t> orders) {
  if (orders.empty()) {
    throw DomainError("hjstring.empty", "vanishing order modulus needs at least one order");
  }
  for (const auto o : orders) {
    if (o < 2) throw DomainError("hjstring.bad_order", "string orders must be >= 2");
  }
  return lcm_list(orders);
}

}  // namespace foliate
