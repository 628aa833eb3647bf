#ifndef CONICLINE_UNIPOLY_HPP
#define CONICLINE_UNIPOLY_HPP

#include <limits>
#include <utility>
#include <vector>

#include "conicline/scalar.hpp"

namespace conicline {

/// Univariate polynomial in t over a fixed base field, dense coefficient
/// vector in canonical form (no trailing zeros).  The degree of the zero
/// polynomial is the distinguished value kNegInf, ordered below all
/// integers.
class UniPoly {
 public:
  static constexpr int kNegInf = std::numeric_limits<int>::min();

  explicit UniPoly(const FieldSpec& f) : field_(f) {}
  UniPoly(const FieldSpec& f, std::vector<Scalar> coeffs);

  static UniPoly constant(const Scalar& c);
  static UniPoly t(const FieldSpec& f);
  static UniPoly monomial(const Scalar& c, int k);

  const FieldSpec& field() const { return field_; }
  int degree() const {
    return coeffs_.empty() ? kNegInf : static_cast<int>(coeffs_.size()) - 1;
  }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  /// Coefficient of t^k (zero beyond the degree).
  Scalar coeff(int k) const;
  const Scalar& leading_coeff() const;
  /// Constant term.
  Scalar constant_term() const { return coeff(0); }

  UniPoly operator-() const;
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const Scalar& c, const UniPoly& a);

  /// Quotient and remainder with deg(rem) < deg(divisor).
  static std::pair<UniPoly, UniPoly> divrem(const UniPoly& a, const UniPoly& b);
  /// Throws DomainError if the division is not exact.
  static UniPoly exact_div(const UniPoly& a, const UniPoly& b);

  UniPoly pow(long long e) const;
  /// this(g(t)).
  UniPoly compose(const UniPoly& g) const;
  Scalar eval(const Scalar& v) const;
  /// this * t^k.
  UniPoly shifted(int k) const;
  /// Same polynomial scaled so the leading coefficient is 1.
  UniPoly monic() const;

  bool operator==(const UniPoly& o) const;
  bool operator!=(const UniPoly& o) const { return !(*this == o); }

 private:
  void trim();
  static void check_same_field(const UniPoly& a, const UniPoly& b);

  FieldSpec field_;
  std::vector<Scalar> coeffs_;
};

/// Monic gcd; gcd(0, 0) = 0.
UniPoly poly_gcd(const UniPoly& a, const UniPoly& b);

}  // namespace conicline

#endif
