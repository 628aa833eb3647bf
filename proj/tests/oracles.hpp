// Test-side oracles and seeded corpus generators, kept independent of the
// library's own decision paths.
#ifndef CONICLINE_TESTS_ORACLES_HPP
#define CONICLINE_TESTS_ORACLES_HPP

#include <functional>
#include <map>
#include <random>
#include <vector>

#include "conicline/classifier.hpp"
#include "conicline/group.hpp"

namespace conicline::testing {

using Rng = std::mt19937_64;

inline Scalar random_scalar(Rng& rng, const FieldSpec& f, int height,
                            bool nonzero = false) {
  std::uniform_int_distribution<long long> num(-height, height);
  std::uniform_int_distribution<long long> den(1, f.is_rationals() ? height : 1);
  while (true) {
    const Scalar s = Scalar::from_fraction(f, num(rng), den(rng));
    if (!nonzero || !s.is_zero()) return s;
  }
}

inline UniPoly random_poly(Rng& rng, const FieldSpec& f, int maxdeg,
                           int height) {
  std::uniform_int_distribution<int> degd(0, maxdeg);
  const int d = degd(rng);
  std::vector<Scalar> coeffs;
  for (int i = 0; i <= d; ++i) coeffs.push_back(random_scalar(rng, f, height));
  return UniPoly(f, std::move(coeffs));
}

inline Mat2 random_invertible_mat2(Rng& rng, const FieldSpec& f, int height) {
  while (true) {
    Mat2 m{{random_scalar(rng, f, height), random_scalar(rng, f, height),
            random_scalar(rng, f, height), random_scalar(rng, f, height)}};
    if (!m.det().is_zero()) return m;
  }
}

/// Word sampler: each letter a random invertible Moebius matrix or a random
/// fibered polynomial, with the stated size bounds.
inline GroupWord random_word(Rng& rng, const FieldSpec& f, int maxlen,
                             int max_s_deg, int height) {
  std::uniform_int_distribution<int> lend(1, maxlen);
  std::uniform_int_distribution<int> coin(0, 1);
  std::vector<Letter> letters;
  const int len = lend(rng);
  for (int i = 0; i < len; ++i) {
    if (coin(rng)) {
      letters.emplace_back(MoebiusLetter(random_invertible_mat2(rng, f, height)));
    } else {
      letters.emplace_back(FiberedLetter(random_poly(rng, f, max_s_deg, height)));
    }
  }
  return GroupWord(std::move(letters));
}

inline ProjPoint random_point_in_S0(Rng& rng, const FieldSpec& f, int height) {
  std::uniform_int_distribution<long long> coord(-height, height);
  while (true) {
    const Scalar x = Scalar::from_int(f, coord(rng));
    const Scalar y = Scalar::from_int(f, coord(rng));
    const Scalar z = Scalar::from_int(f, coord(rng));
    if (x.is_zero() && y.is_zero() && z.is_zero()) continue;
    if ((x * z + y * y).is_zero()) continue;
    return ProjPoint(x, y, z);
  }
}

/// Vector-space span of all products of the generators with formal degree
/// sum at most `formal_bound`, reduced to row echelon form by lead degree.
class SpanOracle {
 public:
  SpanOracle(const std::vector<UniPoly>& gens, int formal_bound)
      : field_(gens.empty() ? FieldSpec::rationals() : gens[0].field()) {
    std::vector<int> degs;
    for (const auto& g : gens) degs.push_back(std::max(g.degree(), 0));
    UniPoly one = UniPoly::constant(Scalar::one(field_));
    std::function<void(std::size_t, int, UniPoly)> rec =
        [&](std::size_t idx, int rem, UniPoly cur) {
          insert(cur);
          if (idx >= gens.size()) return;
          UniPoly acc = cur;
          for (int k = 1; degs[idx] * k <= rem || (degs[idx] == 0 && k <= 2); ++k) {
            if (degs[idx] == 0 && k > 2) break;
            acc = acc * gens[idx];
            if (acc.degree() > 0 && degs[idx] == 0) break;
            rec(idx + 1, rem - degs[idx] * k, acc);
            if (degs[idx] == 0) break;
          }
          rec(idx + 1, rem, cur);
        };
    rec(0, formal_bound, one);
  }

  /// True iff the polynomial lies in the enumerated span.
  bool contains(const UniPoly& p) const {
    UniPoly r = p;
    while (!r.is_zero()) {
      auto it = rows_.find(r.degree());
      if (it == rows_.end()) return false;
      r = r - r.leading_coeff() * it->second;
    }
    return true;
  }

  /// Achieved lead degrees up to a bound.
  std::vector<int> lead_degrees(int upto) const {
    std::vector<int> out;
    for (const auto& [d, row] : rows_) {
      if (d <= upto) out.push_back(d);
    }
    return out;
  }

 private:
  void insert(UniPoly p) {
    while (!p.is_zero()) {
      auto it = rows_.find(p.degree());
      if (it == rows_.end()) {
        rows_.emplace(p.degree(), p.monic());
        return;
      }
      p = p - p.leading_coeff() * it->second;
    }
  }

  FieldSpec field_;
  std::map<int, UniPoly> rows_;
};

/// Independent non-injectivity certificate for a parametrized curve: a
/// squarefree divisor D(t) of the pairwise collision locus.  If D divides
/// g(-t) - g(t) for every generator g of the pullback algebra but not
/// target(-t) - target(t), the target cannot lie in the algebra (the
/// condition cuts out a subalgebra).
inline bool divides_all_antisymmetrizations(const UniPoly& divisor,
                                            const std::vector<UniPoly>& gens) {
  const FieldSpec f = divisor.field();
  const UniPoly minus_t = -UniPoly::t(f);
  for (const auto& g : gens) {
    const UniPoly anti = g.compose(minus_t) - g;
    auto [q, r] = UniPoly::divrem(anti, divisor);
    (void)q;
    if (!r.is_zero()) return false;
  }
  return true;
}

}  // namespace conicline::testing

#endif
