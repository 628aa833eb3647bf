#ifndef CONICLINE_CONIC_HPP
#define CONICLINE_CONIC_HPP

#include <optional>

#include "conicline/linalg.hpp"
#include "conicline/tripoly.hpp"

namespace conicline {

/// Point of the projective plane, stored as the canonical primitive
/// representative of its coordinate triple.
class ProjPoint {
 public:
  ProjPoint(const Scalar& x, const Scalar& y, const Scalar& z);
  static ProjPoint p0(const FieldSpec& f);

  const Vec3& coords() const { return v_; }
  const FieldSpec& field() const { return v_[0].field(); }
  bool operator==(const ProjPoint& o) const { return v_ == o.v_; }
  bool operator!=(const ProjPoint& o) const { return !(*this == o); }
  std::string str() const;

 private:
  Vec3 v_;
};

/// Line of the projective plane as a primitive coefficient triple.
class ProjLine {
 public:
  ProjLine(const Scalar& a, const Scalar& b, const Scalar& c);
  const Vec3& coeffs() const { return v_; }
  bool contains(const ProjPoint& p) const;
  bool operator==(const ProjLine& o) const { return v_ == o.v_; }
  std::string str() const;

 private:
  Vec3 v_;
};

/// Plane conic given by the six coefficients of its quadratic form
/// a_xx x^2 + a_xy xy + a_xz xz + a_yy y^2 + a_yz yz + a_zz z^2, stored as
/// the primitive representative up to scale.  The Gram-matrix view needs
/// characteristic != 2, which is rejected at construction.
class Conic {
 public:
  explicit Conic(const std::array<Scalar, 6>& coeffs);
  static Conic q0_conic(const FieldSpec& f);
  static Conic from_form(const TriPoly& form);

  const std::array<Scalar, 6>& coeffs() const { return c_; }
  const FieldSpec& field() const { return c_[0].field(); }
  /// Symmetric Gram matrix G with v^T G v equal to the form.
  Mat3 gram() const;
  TriPoly form() const;
  bool is_smooth() const;
  Scalar eval(const ProjPoint& p) const;

  bool operator==(const Conic& o) const { return c_ == o.c_; }
  std::string str() const;

 private:
  std::array<Scalar, 6> c_;
};

bool on_conic(const Conic& c, const ProjPoint& p);

/// Tangent line at a point of a smooth conic (gradient row of the Gram
/// matrix).  Throws if p is not on c or c is singular.
ProjLine tangent_line(const Conic& c, const ProjPoint& p);

/// Member of the pencil generated by Q0 and twice the tangent line at p0:
/// x^2 - t0 q0 = 0, the member at infinity being Q0 itself and the member
/// at 0 the double line x^2 = 0 (degenerate, not an error).
struct PencilMember {
  Conic conic;
  bool degenerate;
};
PencilMember pencil_member(const std::optional<Scalar>& t0, const FieldSpec& f);

/// Change of coordinates M carrying (c, p) to (Q0, p0): the substitution by
/// M^-1 maps the form of c to a nonzero multiple of q0 and M p = p0.
Mat3 normalize_conic(const Conic& c, const ProjPoint& p);

}  // namespace conicline

#endif
