#ifndef CONICLINE_LINALG_HPP
#define CONICLINE_LINALG_HPP

#include <array>
#include <vector>

#include "conicline/scalar.hpp"

namespace conicline {

using Vec3 = std::array<Scalar, 3>;

/// 2x2 matrix of exact scalars, row major.
struct Mat2 {
  std::array<Scalar, 4> a;

  static Mat2 identity(const FieldSpec& f);
  const Scalar& at(int r, int c) const { return a[static_cast<std::size_t>(2 * r + c)]; }
  Scalar det() const { return a[0] * a[3] - a[1] * a[2]; }
  Mat2 inverse() const;
  friend Mat2 operator*(const Mat2& x, const Mat2& y);
  /// Content/sign-normalized projective representative.
  Mat2 primitive() const;
  bool proj_equal(const Mat2& o) const { return primitive() == o.primitive(); }
  bool operator==(const Mat2& o) const;
  const FieldSpec& field() const { return a[0].field(); }
};

/// 3x3 matrix of exact scalars, row major.
struct Mat3 {
  std::array<Scalar, 9> a;

  static Mat3 identity(const FieldSpec& f);
  const Scalar& at(int r, int c) const { return a[static_cast<std::size_t>(3 * r + c)]; }
  Scalar& at(int r, int c) { return a[static_cast<std::size_t>(3 * r + c)]; }
  Scalar det() const;
  Mat3 inverse() const;
  Mat3 transpose() const;
  friend Mat3 operator*(const Mat3& x, const Mat3& y);
  Vec3 apply(const Vec3& v) const;
  friend Mat3 operator*(const Scalar& c, const Mat3& x);
  bool operator==(const Mat3& o) const;
  const FieldSpec& field() const { return a[0].field(); }
};

/// Scales a vector to the canonical primitive representative: over Q an
/// integer vector with content 1 whose first nonzero entry is positive,
/// over F_p first nonzero entry 1.  Throws on the zero vector.
std::vector<Scalar> primitive_vector(const std::vector<Scalar>& v);
Vec3 primitive_triple(const Vec3& v);

}  // namespace conicline

#endif
