#include "foliate/zariski.hpp"

#include "foliate/error.hpp"
#include "foliate/hjstring.hpp"
#include "foliate/matrix.hpp"

namespace foliate {

IntersectionLattice::IntersectionLattice(std::vector<std::string> labels,
                                         std::vector<std::vector<std::int64_t>> gram)
    : labels_(std::move(labels)), gram_(std::move(gram)) {
  const std::size_t n = labels_.size();
  if (gram_.size() != n) {
    throw DomainError("zariski.shape", "gram matrix size does not match the curve list");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (gram_[i].size() != n) {
      throw DomainError("zariski.shape", "gram matrix is not square");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (gram_[i][j] != gram_[j][i]) {
        throw DomainError("zariski.not_symmetric", "gram matrix is not symmetric");
      }
    }
  }
}

IntersectionLattice IntersectionLattice::from_chain(const HJString& chain) {
  const auto entries = chain.self_intersections();
  const std::size_t n = entries.size();
  std::vector<std::string> labels(n);
  std::vector<std::vector<std::int64_t>> gram(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = "C" + std::to_string(i + 1);
    gram[i][i] = entries[i];
    if (i + 1 < n) gram[i][i + 1] = gram[i + 1][i] = 1;
  }
  return IntersectionLattice(std::move(labels), std::move(gram));
}

ZariskiResult zariski_decompose(const IntersectionLattice& lattice, const DivisorData& divisor) {
  const std::size_t n = lattice.size();
  if (divisor.pairings.size() != n) {
    throw DomainError("zariski.shape", "pairings do not match the number of curves");
  }
  const auto gram = RationalMatrix::from_integers(lattice.gram());
  const auto& d = divisor.pairings;

  std::vector<bool> in_support(n, false);
  for (std::size_t i = 0; i < n; ++i) in_support[i] = d[i].sign() < 0;

  ZariskiResult result;
  std::vector<Rational> coeffs;
  while (true) {
    ++result.iterations;
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < n; ++i) {
      if (in_support[i]) support.push_back(i);
    }

    coeffs.clear();
    if (!support.empty()) {
      const auto block = gram.submatrix(support).negated();
      if (!block.is_positive_definite()) {
        throw DomainError("zariski.not_pseudo_effective",
                          "not pseudo-effective relative to candidate set: support is not negative definite");
      }
      std::vector<Rational> rhs;
      rhs.reserve(support.size());
      for (const auto i : support) rhs.push_back(-d[i]);
      coeffs = *block.solve(rhs);
      for (const auto& c : coeffs) {
        if (c.sign() < 0) {
          throw DomainError("zariski.not_pseudo_effective",
                            "not pseudo-effective relative to candidate set: negative coefficient");
        }
      }
    }

    std::vector<Rational> positive(n);
    for (std::size_t j = 0; j < n; ++j) {
      positive[j] = d[j];
      for (std::size_t s = 0; s < support.size(); ++s) {
        positive[j] -= coeffs[s] * gram.at(support[s], j);
      }
    }

    bool grew = false;
    for (std::size_t j = 0; j < n; ++j) {
      if (!in_support[j] && positive[j].sign() < 0) {
        in_support[j] = true;
        grew = true;
      }
    }
    if (!grew) {
      result.support = std::move(support);
      result.positive_pairings = std::move(positive);
      break;
    }
  }

  result.negative_coefficients = coeffs;
  for (const auto i : result.support) result.support_labels.push_back(lattice.labels()[i]);
  if (divisor.self_intersection) {
    // P^2 = P . D because P . N = 0.
    Rational p2 = *divisor.self_intersection;
    for (std::size_t s = 0; s < result.support.size(); ++s) {
      p2 -= coeffs[s] * d[result.support[s]];
    }
    result.positive_self_intersection = p2;
  }
  return result;
}

BigInt index_of_decomposition(const ZariskiResult& result) {
  std::vector<BigInt> dens;
  dens.reserve(result.negative_coefficients.size());
  for (const auto& c : result.negative_coefficients) dens.push_back(c.denominator());
  return lcm_list(std::span<const BigInt>(dens));
}

}  // namespace foliate
