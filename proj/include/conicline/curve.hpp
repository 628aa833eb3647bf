#ifndef CONICLINE_CURVE_HPP
#define CONICLINE_CURVE_HPP

#include <array>

#include "conicline/tripoly.hpp"

namespace conicline {

/// Primitive polynomial parametrization t -> [x(t):y(t):z(t)] of a curve
/// avoiding the conic Q0, together with the cached nonzero constant
/// c = q0(x(t), y(t), z(t)).  Applying any automorphism letter preserves c
/// exactly under the pinned generator conventions.
class CurveParam {
 public:
  /// Full validation of an untrusted triple: strips the common polynomial
  /// factor, rejects the zero triple, constant maps and parametrizations
  /// whose image meets Q0.  Throws CurveError.
  static CurveParam validate(const UniPoly& x, const UniPoly& y,
                             const UniPoly& z);

  /// Fast path for triples produced by letter application: recomputes and
  /// checks c but skips gcd removal (letters cannot introduce a common
  /// factor when c is a nonzero constant).
  static CurveParam from_action(UniPoly x, UniPoly y, UniPoly z);

  static CurveParam L0(const FieldSpec& f);
  static CurveParam L1(const FieldSpec& f);

  const UniPoly& x() const { return x_; }
  const UniPoly& y() const { return y_; }
  const UniPoly& z() const { return z_; }
  const Scalar& c() const { return c_; }
  const FieldSpec& field() const { return x_.field(); }

  /// (deg x, deg y, deg z) with UniPoly::kNegInf for zero components.
  std::array<int, 3> degree_profile() const;
  /// Max component degree; equals the degree of the projective closure for
  /// closed embeddings.
  int closure_degree() const;
  /// closure_degree mod 2 (0 even, 1 odd).
  int parity() const { return closure_degree() & 1; }

  /// Same map to P^2: the triples are proportional by a nonzero scalar.
  bool same_map(const CurveParam& o) const;
  /// Exact component equality.
  bool operator==(const CurveParam& o) const;

  std::string str() const;

 private:
  CurveParam(UniPoly x, UniPoly y, UniPoly z, Scalar c);

  UniPoly x_, y_, z_;
  Scalar c_;
};

}  // namespace conicline

#endif
