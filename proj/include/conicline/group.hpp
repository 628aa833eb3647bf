#ifndef CONICLINE_GROUP_HPP
#define CONICLINE_GROUP_HPP

#include <optional>
#include <variant>
#include <vector>

#include "conicline/conic.hpp"
#include "conicline/curve.hpp"
#include "conicline/linalg.hpp"

namespace conicline {

/// Conic-preserving projective automorphism, given as an invertible 2x2
/// matrix up to scale (an element of PGL2 acting through gamma).
class MoebiusLetter {
 public:
  explicit MoebiusLetter(const Mat2& m);
  static MoebiusLetter identity(const FieldSpec& f);
  /// diag(a, 1): the action [ax : y : z/a].
  static MoebiusLetter torus(const Scalar& a);
  /// antidiag(1, 1): the involution [z : -y : x].
  static MoebiusLetter involution(const FieldSpec& f);
  /// [[1,0],[-b,1]]: the shear [x : y+bx : z-2by-b^2x], equal to a constant
  /// fibered letter.
  static MoebiusLetter shear(const Scalar& b);
  /// Coset representative R_m = [[m,1],[-1,0]] of the p0-stabilizer.
  static MoebiusLetter coset_rep(const Scalar& m);

  const Mat2& mat() const { return m_; }
  const FieldSpec& field() const { return m_.field(); }
  /// True iff the induced map fixes p0, i.e. gamma(m) p0 = p0; with the
  /// pinned column convention this is vanishing of the upper-right entry.
  bool stabilizes_p0() const { return m_.at(0, 1).is_zero(); }
  MoebiusLetter inverse() const { return MoebiusLetter(m_.inverse()); }
  bool operator==(const MoebiusLetter& o) const { return m_ == o.m_; }

 private:
  Mat2 m_;  // primitive representative
};

/// Fibration-preserving automorphism
/// [x : y + s(x^2/q0) x : z - 2 y s(x^2/q0) - x s(x^2/q0)^2].
class FiberedLetter {
 public:
  explicit FiberedLetter(UniPoly s) : s_(std::move(s)) {}
  const UniPoly& s() const { return s_; }
  const FieldSpec& field() const { return s_.field(); }
  FiberedLetter inverse() const { return FiberedLetter(-s_); }
  bool operator==(const FiberedLetter& o) const { return s_ == o.s_; }

 private:
  UniPoly s_;
};

using Letter = std::variant<MoebiusLetter, FiberedLetter>;

Letter invert_letter(const Letter& l);
bool letters_equal(const Letter& a, const Letter& b);
const FieldSpec& letter_field(const Letter& l);

/// Word in the two generator families; letters are applied left to right.
class GroupWord {
 public:
  GroupWord() = default;
  explicit GroupWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }
  void push_back(Letter l) { letters_.push_back(std::move(l)); }
  GroupWord concat(const GroupWord& o) const;

 private:
  std::vector<Letter> letters_;
};

/// The representation PGL2 -> SO3(q0): exact rational matrix with
/// determinant 1, acting on column coordinate vectors [x, y, z]^T.  The
/// convention is pinned by gamma(diag(a,1)) = [ax : y : z/a] and
/// gamma(antidiag) = [z : -y : x].
Mat3 gamma(const Mat2& m);

ProjPoint apply_letter_point(const Letter& l, const ProjPoint& p);
ProjPoint apply_word_point(const GroupWord& w, const ProjPoint& p);
CurveParam apply_letter_curve(const Letter& l, const CurveParam& j);
CurveParam apply_word_curve(const GroupWord& w, const CurveParam& j);
GroupWord invert_word(const GroupWord& w);

/// Reduced alternating form in the amalgamated product: head in the
/// intersection subgroup (a p0-stabilizing Moebius letter), body an
/// alternating list of nontrivial coset representatives: Moebius letters
/// R_m and fibered letters with s nonconstant, s(0) = 0.
struct NormalWord {
  MoebiusLetter head;
  std::vector<Letter> body;

  /// The word [x_m, ..., x_1, head] inducing the same map.
  GroupWord to_word() const;
  bool is_identity() const;
  bool operator==(const NormalWord& o) const;
};

NormalWord normal_form(const GroupWord& w);

/// The character of the split sequence on the fibration-preserving
/// subgroup: value a^2 on the torus diag(a, 1), 1 on fibered letters.
/// Throws DomainError if a letter does not preserve the fibration.  The
/// field argument is only needed for the empty word (character 1).
Scalar scaling_character(const GroupWord& w,
                         const std::optional<FieldSpec>& field = std::nullopt);

/// The fibered map cleared of denominators by q0^{2 deg s}:
/// exact trivariate component triple.
std::array<TriPoly, 3> fibered_cleared_map(const UniPoly& s);
/// The linear action of gamma(m) as a trivariate component triple.
std::array<TriPoly, 3> moebius_map(const Mat2& m);

/// Master invariant: every letter of the word pulls q0 back to q0 times
/// the square of its clearing factor (exact symbolic identity).
bool q0_pullback_check(const GroupWord& w);

}  // namespace conicline

#endif
