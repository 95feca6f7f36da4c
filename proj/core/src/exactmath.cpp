#include "foliate/exactmath.hpp"

#include <cctype>
#include <numeric>
#include <ostream>

#include "foliate/error.hpp"

namespace foliate {

std::string to_string(const BigInt& value) { return value.get_str(10); }

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) {
    throw DomainError("exactmath.zero_denominator", "rational with zero denominator");
  }
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::from_mpq(mpq_class value) {
  value.canonicalize();
  Rational r;
  r.value_ = std::move(value);
  return r;
}

namespace {

bool parse_integer(std::string_view text, BigInt& out) {
  if (text.empty()) return false;
  std::size_t start = (text.front() == '-' || text.front() == '+') ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  std::string digits(text.front() == '+' ? text.substr(1) : text);
  return out.set_str(digits, 10) == 0;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  BigInt num;
  BigInt den = 1;
  const bool ok = slash == std::string_view::npos
                      ? parse_integer(text, num)
                      : parse_integer(text.substr(0, slash), num) &&
                            parse_integer(text.substr(slash + 1), den);
  if (!ok) {
    throw ParseError("parse.rational", "not a rational number: '" + std::string(text) + "'");
  }
  if (den == 0) {
    throw ParseError("parse.rational", "zero denominator in '" + std::string(text) + "'");
  }
  return Rational(num, den);
}

BigInt Rational::floor() const {
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return out;
}

BigInt Rational::ceil() const {
  BigInt out;
  mpz_cdiv_q(out.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return out;
}

Rational Rational::reciprocal() const { return Rational(1) / *this; }

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str(10);
  return value_.get_num().get_str(10) + "/" + value_.get_den().get_str(10);
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.sign() == 0) {
    throw DomainError("exactmath.division_by_zero", "division by zero");
  }
  value_ /= rhs.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational ContinuedFraction::evaluate() const {
  if (terms.empty()) {
    throw DomainError("exactmath.empty_fraction", "continued fraction has no terms");
  }
  Rational value(terms.back());
  for (auto it = terms.rbegin() + 1; it != terms.rend(); ++it) {
    value = Rational(*it) + value.reciprocal();
  }
  return value;
}

std::int64_t ContinuedFraction::term_sum() const {
  return std::accumulate(terms.begin(), terms.end(), std::int64_t{0});
}

std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

ContinuedFraction regular_continued_fraction(std::int64_t p, std::int64_t q) {
  if (p < 1 || q < 1) {
    throw DomainError("exactmath.non_positive", "continued fraction needs p, q >= 1");
  }
  if (std::gcd(p, q) != 1) {
    throw DomainError("exactmath.not_coprime", "continued fraction needs gcd(p, q) = 1");
  }
  ContinuedFraction cf;
  while (q != 0) {
    cf.terms.push_back(p / q);
    p %= q;
    std::swap(p, q);
  }
  // Euclid on coprime input already ends with a term >= 2 unless the
  // fraction is an integer.
  return cf;
}

BigInt continuant(std::span<const std::int64_t> entries) {
  BigInt prev = 0;  // d_{-1}
  BigInt cur = 1;   // d_0
  for (const auto b : entries) {
    BigInt next = BigInt(static_cast<long>(b)) * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

BigInt continuant_det(std::span<const std::int64_t> entries) {
  if (entries.empty()) {
    throw DomainError("exactmath.empty_chain", "continuant of an empty chain");
  }
  for (const auto b : entries) {
    if (b < 2) {
      throw DomainError("exactmath.entry_below_two", "chain entries must be >= 2");
    }
  }
  return continuant(entries);
}

BigInt binomial(const BigInt& n, unsigned long k) {
  if (n < 0) {
    throw DomainError("exactmath.negative", "binomial needs n >= 0");
  }
  BigInt out;
  mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), k);
  return out;
}

BigInt factorial(unsigned long n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

BigInt lcm_list(std::span<const BigInt> values) {
  BigInt acc = 1;
  for (const auto& v : values) {
    if (v <= 0) {
      throw DomainError("exactmath.non_positive", "lcm needs positive integers");
    }
    mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), v.get_mpz_t());
  }
  return acc;
}

BigInt lcm_list(std::span<const std::int64_t> values) {
  std::vector<BigInt> big;
  big.reserve(values.size());
  for (const auto v : values) big.emplace_back(static_cast<long>(v));
  return lcm_list(std::span<const BigInt>(big));
}

}  // namespace foliate
