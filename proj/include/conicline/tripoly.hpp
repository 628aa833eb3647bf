#ifndef CONICLINE_TRIPOLY_HPP
#define CONICLINE_TRIPOLY_HPP

#include <array>
#include <map>

#include "conicline/unipoly.hpp"

namespace conicline {

using Mono3 = std::array<int, 3>;

/// Sparse trivariate polynomial in x, y, z.  No zero coefficients stored.
class TriPoly {
 public:
  explicit TriPoly(const FieldSpec& f) : field_(f) {}

  static TriPoly constant(const Scalar& c);
  /// axis 0, 1, 2 for x, y, z.
  static TriPoly variable(const FieldSpec& f, int axis);
  static TriPoly monomial(const Scalar& c, const Mono3& m);
  /// xz + y^2.
  static TriPoly q0(const FieldSpec& f);

  const FieldSpec& field() const { return field_; }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;
  /// Homogeneity degree if homogeneous, otherwise nullopt.
  std::optional<int> homogeneous_degree() const;
  const std::map<Mono3, Scalar>& terms() const { return terms_; }

  TriPoly operator-() const;
  friend TriPoly operator+(const TriPoly& a, const TriPoly& b);
  friend TriPoly operator-(const TriPoly& a, const TriPoly& b);
  friend TriPoly operator*(const TriPoly& a, const TriPoly& b);
  friend TriPoly operator*(const Scalar& c, const TriPoly& a);
  TriPoly pow(long long e) const;

  /// Substitutes univariate polynomials for x, y, z.
  UniPoly eval_uni(const UniPoly& x, const UniPoly& y, const UniPoly& z) const;
  /// Substitutes trivariate polynomials for x, y, z.
  TriPoly subst(const TriPoly& gx, const TriPoly& gy, const TriPoly& gz) const;
  Scalar eval_point(const Scalar& x, const Scalar& y, const Scalar& z) const;

  bool operator==(const TriPoly& o) const;
  bool operator!=(const TriPoly& o) const { return !(*this == o); }

 private:
  void add_term(const Mono3& m, const Scalar& c);
  static void check_same_field(const TriPoly& a, const TriPoly& b);

  FieldSpec field_;
  std::map<Mono3, Scalar> terms_;
};

}  // namespace conicline

#endif
