#include "conicline/linalg.hpp"

namespace conicline {

Mat2 Mat2::identity(const FieldSpec& f) {
  return Mat2{{Scalar::one(f), Scalar::zero(f), Scalar::zero(f), Scalar::one(f)}};
}

Mat2 Mat2::inverse() const {
  const Scalar d = det();
  if (d.is_zero()) throw DomainError("singular 2x2 matrix");
  const Scalar di = d.inverse();
  return Mat2{{di * a[3], di * (-a[1]), di * (-a[2]), di * a[0]}};
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
  return Mat2{{x.a[0] * y.a[0] + x.a[1] * y.a[2], x.a[0] * y.a[1] + x.a[1] * y.a[3],
               x.a[2] * y.a[0] + x.a[3] * y.a[2], x.a[2] * y.a[1] + x.a[3] * y.a[3]}};
}

bool Mat2::operator==(const Mat2& o) const {
  for (std::size_t i = 0; i < 4; ++i) {
    if (a[i] != o.a[i]) return false;
  }
  return true;
}

std::vector<Scalar> primitive_vector(const std::vector<Scalar>& v) {
  if (v.empty()) throw DomainError("empty vector");
  const FieldSpec f = v[0].field();
  std::size_t lead = v.size();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) { lead = i; break; }
  }
  if (lead == v.size()) {
    throw DomainError("zero vector has no primitive representative");
  }
  std::vector<Scalar> r = v;
  if (f.is_rationals()) {
    mpz_class den(1);
    for (const auto& s : v) {
      mpz_class d = s.rat().get_den();
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
      den = den / g * d;
    }
    mpz_class content(0);
    std::vector<mpz_class> ints(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      mpq_class q = v[i].rat() * mpq_class(den);
      q.canonicalize();
      ints[i] = q.get_num();
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), ints[i].get_mpz_t());
    }
    if (ints[lead] < 0) content = -content;
    for (std::size_t i = 0; i < v.size(); ++i) {
      r[i] = Scalar::from_mpq(f, mpq_class(ints[i] / content));
    }
  } else {
    const Scalar inv = v[lead].inverse();
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = inv * v[i];
  }
  return r;
}

Mat2 Mat2::primitive() const {
  auto r = primitive_vector({a[0], a[1], a[2], a[3]});
  return Mat2{{r[0], r[1], r[2], r[3]}};
}

Mat3 Mat3::identity(const FieldSpec& f) {
  const Scalar z = Scalar::zero(f), o = Scalar::one(f);
  return Mat3{{o, z, z, z, o, z, z, z, o}};
}

Scalar Mat3::det() const {
  return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
         at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
         at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
}

Mat3 Mat3::inverse() const {
  const Scalar d = det();
  if (d.is_zero()) throw DomainError("singular 3x3 matrix");
  const Scalar di = d.inverse();
  Mat3 r = *this;
  auto cof = [&](int i, int j) {
    int r0 = (i + 1) % 3, r1 = (i + 2) % 3;
    int c0 = (j + 1) % 3, c1 = (j + 2) % 3;
    return at(r0, c0) * at(r1, c1) - at(r0, c1) * at(r1, c0);
  };
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      r.at(j, i) = di * cof(i, j);
    }
  }
  return r;
}

Mat3 Mat3::transpose() const {
  Mat3 r = *this;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) r.at(i, j) = at(j, i);
  }
  return r;
}

Mat3 operator*(const Mat3& x, const Mat3& y) {
  Mat3 r = x;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      Scalar s = Scalar::zero(x.field());
      for (int k = 0; k < 3; ++k) s = s + x.at(i, k) * y.at(k, j);
      r.at(i, j) = s;
    }
  }
  return r;
}

Vec3 Mat3::apply(const Vec3& v) const {
  Vec3 r{Scalar::zero(field()), Scalar::zero(field()), Scalar::zero(field())};
  for (int i = 0; i < 3; ++i) {
    Scalar s = Scalar::zero(field());
    for (int k = 0; k < 3; ++k) s = s + at(i, k) * v[static_cast<std::size_t>(k)];
    r[static_cast<std::size_t>(i)] = s;
  }
  return r;
}

Mat3 operator*(const Scalar& c, const Mat3& x) {
  Mat3 r = x;
  for (auto& e : r.a) e = c * e;
  return r;
}

bool Mat3::operator==(const Mat3& o) const {
  for (std::size_t i = 0; i < 9; ++i) {
    if (a[i] != o.a[i]) return false;
  }
  return true;
}

Vec3 primitive_triple(const Vec3& v) {
  auto r = primitive_vector({v[0], v[1], v[2]});
  return Vec3{r[0], r[1], r[2]};
}

}  // namespace conicline
