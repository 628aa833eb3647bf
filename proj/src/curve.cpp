#include "conicline/curve.hpp"

#include "conicline/error.hpp"

namespace conicline {

CurveParam::CurveParam(UniPoly x, UniPoly y, UniPoly z, Scalar c)
    : x_(std::move(x)), y_(std::move(y)), z_(std::move(z)), c_(std::move(c)) {}

CurveParam CurveParam::validate(const UniPoly& x, const UniPoly& y,
                                const UniPoly& z) {
  if (x.field() != y.field() || x.field() != z.field()) {
    throw FieldMismatchError("curve components over different fields");
  }
  if (x.is_zero() && y.is_zero() && z.is_zero()) {
    throw CurveError(CurveError::Kind::ZeroTriple, "all components zero");
  }
  UniPoly gx = x, gy = y, gz = z;
  const UniPoly g = poly_gcd(poly_gcd(x, y), z);
  if (g.degree() > 0) {
    gx = UniPoly::exact_div(gx, g);
    gy = UniPoly::exact_div(gy, g);
    gz = UniPoly::exact_div(gz, g);
  }
  if (gx.is_constant() && gy.is_constant() && gz.is_constant()) {
    throw CurveError(CurveError::Kind::ConstantMap,
                     "parametrization is a constant map");
  }
  const UniPoly q = gx * gz + gy * gy;
  if (q.is_zero() || !q.is_constant()) {
    throw CurveError(CurveError::Kind::ImageMeetsQ0,
                     q.is_zero() ? "image lies on Q0"
                                 : "q0 composed with the parametrization is "
                                   "nonconstant; the image meets Q0");
  }
  return CurveParam(gx, gy, gz, q.constant_term());
}

CurveParam CurveParam::from_action(UniPoly x, UniPoly y, UniPoly z) {
  const UniPoly q = x * z + y * y;
  if (q.is_zero() || !q.is_constant()) {
    throw DomainError("internal error: letter action broke the q0 invariant");
  }
  return CurveParam(std::move(x), std::move(y), std::move(z), q.constant_term());
}

CurveParam CurveParam::L0(const FieldSpec& f) {
  return validate(UniPoly(f), UniPoly::constant(Scalar::one(f)), UniPoly::t(f));
}

CurveParam CurveParam::L1(const FieldSpec& f) {
  const UniPoly t = UniPoly::t(f);
  const UniPoly one = UniPoly::constant(Scalar::one(f));
  return validate(one, t, one - t * t);
}

std::array<int, 3> CurveParam::degree_profile() const {
  return {x_.degree(), y_.degree(), z_.degree()};
}

int CurveParam::closure_degree() const {
  return std::max(x_.degree(), std::max(y_.degree(), z_.degree()));
}

bool CurveParam::same_map(const CurveParam& o) const {
  if (field() != o.field()) return false;
  return x_ * o.y_ == o.x_ * y_ && x_ * o.z_ == o.x_ * z_ &&
         y_ * o.z_ == o.y_ * z_;
}

bool CurveParam::operator==(const CurveParam& o) const {
  return x_ == o.x_ && y_ == o.y_ && z_ == o.z_;
}

std::string CurveParam::str() const {
  auto d = [](const UniPoly& p) {
    return p.degree() == UniPoly::kNegInf ? std::string("-inf")
                                          : std::to_string(p.degree());
  };
  return "[deg " + d(x_) + ":" + d(y_) + ":" + d(z_) + ", c=" + c_.str() + "]";
}

}  // namespace conicline
