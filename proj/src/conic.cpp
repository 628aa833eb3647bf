#include "conicline/conic.hpp"
#include <algorithm>

#include <sstream>

namespace conicline {

namespace {

void reject_char2(const FieldSpec& f, const char* what) {
  if (f.characteristic() == 2) {
    throw DomainError(std::string(what) +
                      " requires characteristic != 2 (Gram representation)");
  }
}

}  // namespace

ProjPoint::ProjPoint(const Scalar& x, const Scalar& y, const Scalar& z)
    : v_(primitive_triple({x, y, z})) {}

ProjPoint ProjPoint::p0(const FieldSpec& f) {
  return ProjPoint(Scalar::zero(f), Scalar::zero(f), Scalar::one(f));
}

std::string ProjPoint::str() const {
  return "[" + v_[0].str() + ":" + v_[1].str() + ":" + v_[2].str() + "]";
}

ProjLine::ProjLine(const Scalar& a, const Scalar& b, const Scalar& c)
    : v_(primitive_triple({a, b, c})) {}

bool ProjLine::contains(const ProjPoint& p) const {
  const Vec3& q = p.coords();
  return (v_[0] * q[0] + v_[1] * q[1] + v_[2] * q[2]).is_zero();
}

std::string ProjLine::str() const {
  return "{" + v_[0].str() + "*x + " + v_[1].str() + "*y + " + v_[2].str() +
         "*z = 0}";
}

Conic::Conic(const std::array<Scalar, 6>& coeffs) {
  reject_char2(coeffs[0].field(), "conic arithmetic");
  auto v = primitive_vector(
      {coeffs[0], coeffs[1], coeffs[2], coeffs[3], coeffs[4], coeffs[5]});
  std::copy(v.begin(), v.end(), c_.begin());
}

Conic Conic::q0_conic(const FieldSpec& f) {
  const Scalar z = Scalar::zero(f), o = Scalar::one(f);
  return Conic({z, z, o, o, z, z});
}

Conic Conic::from_form(const TriPoly& form) {
  const FieldSpec f = form.field();
  std::array<Scalar, 6> c{Scalar::zero(f), Scalar::zero(f), Scalar::zero(f),
                          Scalar::zero(f), Scalar::zero(f), Scalar::zero(f)};
  for (const auto& [m, v] : form.terms()) {
    if (m[0] + m[1] + m[2] != 2) throw DomainError("form is not quadratic");
    if (m == Mono3{2, 0, 0}) c[0] = v;
    else if (m == Mono3{1, 1, 0}) c[1] = v;
    else if (m == Mono3{1, 0, 1}) c[2] = v;
    else if (m == Mono3{0, 2, 0}) c[3] = v;
    else if (m == Mono3{0, 1, 1}) c[4] = v;
    else c[5] = v;
  }
  return Conic(c);
}

Mat3 Conic::gram() const {
  const FieldSpec f = field();
  const Scalar half = Scalar::from_fraction(f, 1, 2);
  Mat3 g = Mat3::identity(f);
  g.at(0, 0) = c_[0];
  g.at(1, 1) = c_[3];
  g.at(2, 2) = c_[5];
  g.at(0, 1) = g.at(1, 0) = half * c_[1];
  g.at(0, 2) = g.at(2, 0) = half * c_[2];
  g.at(1, 2) = g.at(2, 1) = half * c_[4];
  return g;
}

TriPoly Conic::form() const {
  const FieldSpec f = field();
  TriPoly p(f);
  p = p + TriPoly::monomial(c_[0], {2, 0, 0});
  p = p + TriPoly::monomial(c_[1], {1, 1, 0});
  p = p + TriPoly::monomial(c_[2], {1, 0, 1});
  p = p + TriPoly::monomial(c_[3], {0, 2, 0});
  p = p + TriPoly::monomial(c_[4], {0, 1, 1});
  p = p + TriPoly::monomial(c_[5], {0, 0, 2});
  return p;
}

bool Conic::is_smooth() const { return !gram().det().is_zero(); }

Scalar Conic::eval(const ProjPoint& p) const {
  const Vec3& v = p.coords();
  return c_[0] * v[0] * v[0] + c_[1] * v[0] * v[1] + c_[2] * v[0] * v[2] +
         c_[3] * v[1] * v[1] + c_[4] * v[1] * v[2] + c_[5] * v[2] * v[2];
}

std::string Conic::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < 6; ++i) {
    if (i) os << ", ";
    os << c_[i].str();
  }
  os << "]";
  return os.str();
}

bool on_conic(const Conic& c, const ProjPoint& p) { return c.eval(p).is_zero(); }

ProjLine tangent_line(const Conic& c, const ProjPoint& p) {
  if (!c.is_smooth()) throw DomainError("tangent line of a singular conic");
  if (!on_conic(c, p)) throw DomainError("tangent point is not on the conic");
  const Vec3 grad = c.gram().apply(p.coords());
  return ProjLine(grad[0], grad[1], grad[2]);
}

PencilMember pencil_member(const std::optional<Scalar>& t0, const FieldSpec& f) {
  reject_char2(f, "pencil arithmetic");
  if (!t0) return {Conic::q0_conic(f), false};
  const Scalar z = Scalar::zero(f), o = Scalar::one(f);
  if (t0->is_zero()) {
    // Double tangent line x^2 = 0, the member 2 T_{p0} Q0.
    return {Conic({o, z, z, z, z, z}), true};
  }
  Conic c({o, z, -*t0, -*t0, z, z});
  return {c, !c.is_smooth()};
}

Mat3 normalize_conic(const Conic& c, const ProjPoint& p) {
  const FieldSpec f = c.field();
  reject_char2(f, "conic normalization");
  if (!c.is_smooth()) throw DomainError("cannot normalize a singular conic");
  if (!on_conic(c, p)) throw DomainError("base point is not on the conic");

  const Mat3 g = c.gram();
  auto bil = [&](const Vec3& u, const Vec3& v) {
    const Vec3 gv = g.apply(v);
    return u[0] * gv[0] + u[1] * gv[1] + u[2] * gv[2];
  };
  const Scalar zero = Scalar::zero(f), one = Scalar::one(f);
  const Vec3 u3 = p.coords();
  const std::array<Vec3, 3> basis = {Vec3{one, zero, zero}, Vec3{zero, one, zero},
                                     Vec3{zero, zero, one}};

  // u1: isotropic vector pairing nontrivially with p.
  Vec3 u1{zero, zero, zero};
  Scalar mu = zero;
  for (const auto& e : basis) {
    const Scalar b = bil(e, u3);
    if (!b.is_zero()) {
      const Scalar q = bil(e, e);
      const Scalar two = Scalar::from_int(f, 2);
      Vec3 cand = e;
      const Scalar coef = q / (two * b);
      for (int i = 0; i < 3; ++i) {
        cand[static_cast<std::size_t>(i)] =
            cand[static_cast<std::size_t>(i)] - coef * u3[static_cast<std::size_t>(i)];
      }
      u1 = cand;
      mu = b;
      break;
    }
  }
  if (mu.is_zero()) throw DomainError("degenerate pairing at base point");

  // u2: completes the basis, orthogonal to u1 and u3.
  Vec3 u2{zero, zero, zero};
  bool found = false;
  for (const auto& e : basis) {
    Mat3 test = Mat3::identity(f);
    for (int i = 0; i < 3; ++i) {
      test.at(i, 0) = u1[static_cast<std::size_t>(i)];
      test.at(i, 1) = e[static_cast<std::size_t>(i)];
      test.at(i, 2) = u3[static_cast<std::size_t>(i)];
    }
    if (test.det().is_zero()) continue;
    const Scalar c1 = bil(e, u3) / mu;
    const Scalar c2 = bil(e, u1) / mu;
    for (int i = 0; i < 3; ++i) {
      u2[static_cast<std::size_t>(i)] = e[static_cast<std::size_t>(i)] -
                                        c1 * u1[static_cast<std::size_t>(i)] -
                                        c2 * u3[static_cast<std::size_t>(i)];
    }
    found = true;
    break;
  }
  if (!found) throw DomainError("could not complete normalization basis");

  const Scalar lambda = bil(u2, u2);
  if (lambda.is_zero()) throw DomainError("degenerate residual form");
  // Rescale u1 so that b(u1, u3) = lambda / 2.
  const Scalar sc = lambda / (Scalar::from_int(f, 2) * mu);
  for (auto& x : u1) x = sc * x;

  Mat3 cols = Mat3::identity(f);
  for (int i = 0; i < 3; ++i) {
    cols.at(i, 0) = u1[static_cast<std::size_t>(i)];
    cols.at(i, 1) = u2[static_cast<std::size_t>(i)];
    cols.at(i, 2) = u3[static_cast<std::size_t>(i)];
  }
  const Mat3 m = cols.inverse();

  // Postcondition: the substitution by M carries the form to a multiple of
  // q0 and the point to p0.
  const Mat3 minv = cols;
  const Mat3 gq = minv.transpose() * g * minv;
  const Conic target = Conic::from_form(TriPoly::q0(f));
  const Conic image = Conic::from_form([&] {
    TriPoly out(f);
    const TriPoly vx = TriPoly::variable(f, 0), vy = TriPoly::variable(f, 1),
                  vz = TriPoly::variable(f, 2);
    std::array<TriPoly, 3> vars{vx, vy, vz};
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        out = out + gq.at(i, j) * (vars[static_cast<std::size_t>(i)] *
                                   vars[static_cast<std::size_t>(j)]);
      }
    }
    return out;
  }());
  if (!(image == target)) {
    throw DomainError("internal error: normalization postcondition failed");
  }
  const Vec3 mapped = m.apply(p.coords());
  if (!(ProjPoint(mapped[0], mapped[1], mapped[2]) == ProjPoint::p0(f))) {
    throw DomainError("internal error: base point not mapped to p0");
  }
  return m;
}

}  // namespace conicline
