#include "conicline/group.hpp"

#include <algorithm>

namespace conicline {

MoebiusLetter::MoebiusLetter(const Mat2& m) : m_(m.primitive()) {
  if (m_.det().is_zero()) throw DomainError("Moebius letter must be invertible");
}

MoebiusLetter MoebiusLetter::identity(const FieldSpec& f) {
  return MoebiusLetter(Mat2::identity(f));
}

MoebiusLetter MoebiusLetter::torus(const Scalar& a) {
  const FieldSpec f = a.field();
  return MoebiusLetter(Mat2{{a, Scalar::zero(f), Scalar::zero(f), Scalar::one(f)}});
}

MoebiusLetter MoebiusLetter::involution(const FieldSpec& f) {
  return MoebiusLetter(Mat2{{Scalar::zero(f), Scalar::one(f), Scalar::one(f), Scalar::zero(f)}});
}

MoebiusLetter MoebiusLetter::shear(const Scalar& b) {
  const FieldSpec f = b.field();
  return MoebiusLetter(Mat2{{Scalar::one(f), Scalar::zero(f), -b, Scalar::one(f)}});
}

MoebiusLetter MoebiusLetter::coset_rep(const Scalar& m) {
  const FieldSpec f = m.field();
  return MoebiusLetter(Mat2{{m, Scalar::one(f), -Scalar::one(f), Scalar::zero(f)}});
}

Letter invert_letter(const Letter& l) {
  if (std::holds_alternative<MoebiusLetter>(l)) {
    return std::get<MoebiusLetter>(l).inverse();
  }
  return std::get<FiberedLetter>(l).inverse();
}

bool letters_equal(const Letter& a, const Letter& b) {
  if (a.index() != b.index()) return false;
  if (std::holds_alternative<MoebiusLetter>(a)) {
    return std::get<MoebiusLetter>(a) == std::get<MoebiusLetter>(b);
  }
  return std::get<FiberedLetter>(a) == std::get<FiberedLetter>(b);
}

const FieldSpec& letter_field(const Letter& l) {
  if (std::holds_alternative<MoebiusLetter>(l)) {
    return std::get<MoebiusLetter>(l).field();
  }
  return std::get<FiberedLetter>(l).field();
}

GroupWord GroupWord::concat(const GroupWord& o) const {
  std::vector<Letter> all = letters_;
  all.insert(all.end(), o.letters_.begin(), o.letters_.end());
  return GroupWord(std::move(all));
}

Mat3 gamma(const Mat2& m) {
  const Scalar det = m.det();
  if (det.is_zero()) throw DomainError("gamma of a singular matrix");
  const Scalar a = m.at(0, 0), b = m.at(0, 1), c = m.at(1, 0), d = m.at(1, 1);
  const Scalar di = det.inverse();
  const Scalar two = Scalar::from_int(a.field(), 2);
  Mat3 g = Mat3::identity(a.field());
  g.at(0, 0) = a * a;
  g.at(0, 1) = -(two * a * b);
  g.at(0, 2) = -(b * b);
  g.at(1, 0) = -(a * c);
  g.at(1, 1) = a * d + b * c;
  g.at(1, 2) = b * d;
  g.at(2, 0) = -(c * c);
  g.at(2, 1) = two * c * d;
  g.at(2, 2) = d * d;
  return di * g;
}

namespace {

Scalar q0_value(const Vec3& v) { return v[0] * v[2] + v[1] * v[1]; }

}  // namespace

ProjPoint apply_letter_point(const Letter& l, const ProjPoint& p) {
  const FieldSpec f = p.field();
  const Vec3& v = p.coords();
  const Scalar q = q0_value(v);
  if (q.is_zero()) throw DomainError("point lies on Q0, outside the surface");
  if (std::holds_alternative<MoebiusLetter>(l)) {
    const Vec3 w = gamma(std::get<MoebiusLetter>(l).mat()).apply(v);
    return ProjPoint(w[0], w[1], w[2]);
  }
  const UniPoly& s = std::get<FiberedLetter>(l).s();
  const Scalar tau = v[0] * v[0] / q;
  const Scalar u = s.eval(tau);
  const Scalar two = Scalar::from_int(f, 2);
  return ProjPoint(v[0], v[1] + u * v[0], v[2] - two * v[1] * u - v[0] * u * u);
}

ProjPoint apply_word_point(const GroupWord& w, const ProjPoint& p) {
  ProjPoint q = p;
  for (const auto& l : w.letters()) q = apply_letter_point(l, q);
  return q;
}

CurveParam apply_letter_curve(const Letter& l, const CurveParam& j) {
  const FieldSpec f = j.field();
  if (std::holds_alternative<MoebiusLetter>(l)) {
    const Mat3 g = gamma(std::get<MoebiusLetter>(l).mat());
    std::array<UniPoly, 3> out{UniPoly(f), UniPoly(f), UniPoly(f)};
    const std::array<const UniPoly*, 3> in{&j.x(), &j.y(), &j.z()};
    for (int i = 0; i < 3; ++i) {
      UniPoly acc(f);
      for (int k = 0; k < 3; ++k) {
        acc = acc + g.at(i, k) * *in[static_cast<std::size_t>(k)];
      }
      out[static_cast<std::size_t>(i)] = acc;
    }
    return CurveParam::from_action(out[0], out[1], out[2]);
  }
  const UniPoly& s = std::get<FiberedLetter>(l).s();
  // The fiber coordinate pulls back to the polynomial x(t)^2 / c.
  const UniPoly tau = j.c().inverse() * (j.x() * j.x());
  const UniPoly u = s.compose(tau);
  const Scalar two = Scalar::from_int(f, 2);
  const UniPoly ny = j.y() + u * j.x();
  const UniPoly nz = j.z() - two * (j.y() * u) - j.x() * (u * u);
  return CurveParam::from_action(j.x(), ny, nz);
}

CurveParam apply_word_curve(const GroupWord& w, const CurveParam& j) {
  CurveParam cur = j;
  for (const auto& l : w.letters()) cur = apply_letter_curve(l, cur);
  return cur;
}

GroupWord invert_word(const GroupWord& w) {
  std::vector<Letter> inv;
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    inv.push_back(invert_letter(*it));
  }
  return GroupWord(std::move(inv));
}

// ---------------------------------------------------------------------------
// Amalgamated normal form

namespace {

// Element of the fibration-preserving factor B, written gamma(c) o Psi_s
// with c a p0-stabilizing 2x2 matrix.
struct BElem {
  Mat2 c;
  UniPoly s;
};

// gamma(c)^-1 o Psi_s o gamma(c) = Psi_s' with s'(t) = alpha s(alpha^2 t),
// alpha the diagonal ratio of the p0-stabilizing matrix c.
UniPoly conj_by(const Mat2& c, const UniPoly& s) {
  const Scalar alpha = c.at(0, 0) / c.at(1, 1);
  const FieldSpec f = s.field();
  std::vector<Scalar> coeffs;
  for (int i = 0; i <= std::max(s.degree(), 0); ++i) {
    coeffs.push_back(s.coeff(i) * alpha.pow(2 * i + 1));
  }
  return UniPoly(f, std::move(coeffs));
}

BElem belem_mul(const BElem& a, const BElem& b) {
  return BElem{a.c * b.c, conj_by(b.c, a.s) + b.s};
}

bool in_C_mat(const Mat2& m) { return m.at(0, 1).is_zero(); }

struct Peeled {
  Mat2 head;                  // in C
  std::optional<Letter> rep;  // nontrivial coset representative, if any
};

Peeled decompose_A(const Mat2& g) {
  if (in_C_mat(g)) return {g, std::nullopt};
  const Scalar m = g.at(0, 0) / g.at(0, 1);
  const MoebiusLetter rep = MoebiusLetter::coset_rep(m);
  const Mat2 head = g * rep.mat().inverse();
  if (!in_C_mat(head)) throw DomainError("internal error: bad coset section");
  return {head, Letter(rep)};
}

Peeled decompose_B(const BElem& g) {
  const Scalar s0 = g.s.coeff(0);
  const Mat2 head = g.c * MoebiusLetter::shear(s0).mat();
  const UniPoly splus = g.s - UniPoly::constant(s0);
  if (splus.is_zero()) return {head, std::nullopt};
  return {head, Letter(FiberedLetter(splus))};
}

}  // namespace

GroupWord NormalWord::to_word() const {
  std::vector<Letter> letters;
  for (auto it = body.rbegin(); it != body.rend(); ++it) letters.push_back(*it);
  letters.push_back(head);
  return GroupWord(std::move(letters));
}

bool NormalWord::is_identity() const {
  return body.empty() && head == MoebiusLetter::identity(head.field());
}

bool NormalWord::operator==(const NormalWord& o) const {
  if (!(head == o.head) || body.size() != o.body.size()) return false;
  for (std::size_t i = 0; i < body.size(); ++i) {
    if (!letters_equal(body[i], o.body[i])) return false;
  }
  return true;
}

NormalWord normal_form(const GroupWord& w) {
  if (w.empty()) {
    throw DomainError("normal form of the empty word is ambiguous without a "
                      "field; normalize a one-letter identity instead");
  }
  const FieldSpec f = letter_field(w.letters().front());
  // State: element = g * head * x_1 ... x_m with g in A (Mat2) or B (BElem).
  Mat2 head = Mat2::identity(f);
  std::vector<Letter> body;

  for (const auto& l : w.letters()) {
    // Fold the letter with the current head: g = l * head.
    std::variant<Mat2, BElem> g;
    if (std::holds_alternative<MoebiusLetter>(l)) {
      g = std::get<MoebiusLetter>(l).mat() * head;
    } else {
      g = belem_mul(BElem{Mat2::identity(f), std::get<FiberedLetter>(l).s()},
                    BElem{head, UniPoly(f)});
    }

    // Merge with leading body letters while g is in the intersection or in
    // the same factor as the front letter.
    while (!body.empty()) {
      const bool g_is_A = std::holds_alternative<Mat2>(g);
      const bool g_in_C = g_is_A ? in_C_mat(std::get<Mat2>(g))
                                 : std::get<BElem>(g).s.is_constant();
      const Letter& front = body.front();
      const bool front_is_A = std::holds_alternative<MoebiusLetter>(front);
      if (!g_in_C && (g_is_A != front_is_A)) break;
      if (front_is_A) {
        Mat2 gm = g_is_A ? std::get<Mat2>(g)
                         : std::get<BElem>(g).c *
                               MoebiusLetter::shear(std::get<BElem>(g).s.coeff(0)).mat();
        g = gm * std::get<MoebiusLetter>(front).mat();
      } else {
        BElem gb = g_is_A ? BElem{std::get<Mat2>(g), UniPoly(f)}
                          : std::get<BElem>(g);
        g = belem_mul(gb, BElem{Mat2::identity(f),
                                std::get<FiberedLetter>(front).s()});
      }
      body.erase(body.begin());
    }

    Peeled peeled = std::holds_alternative<Mat2>(g)
                        ? decompose_A(std::get<Mat2>(g))
                        : decompose_B(std::get<BElem>(g));
    head = peeled.head;
    if (peeled.rep) body.insert(body.begin(), *peeled.rep);
  }

  return NormalWord{MoebiusLetter(head), std::move(body)};
}

Scalar scaling_character(const GroupWord& w,
                         const std::optional<FieldSpec>& field) {
  if (w.empty()) {
    return Scalar::one(field ? *field : FieldSpec::rationals());
  }
  const FieldSpec f = letter_field(w.letters().front());
  Scalar chi = Scalar::one(f);
  for (const auto& l : w.letters()) {
    if (std::holds_alternative<FiberedLetter>(l)) continue;
    const Mat2& m = std::get<MoebiusLetter>(l).mat();
    if (!in_C_mat(m)) {
      throw DomainError("letter does not preserve the fibration");
    }
    const Scalar alpha = m.at(0, 0) / m.at(1, 1);
    chi = chi * alpha * alpha;
  }
  return chi;
}

std::array<TriPoly, 3> fibered_cleared_map(const UniPoly& s) {
  const FieldSpec f = s.field();
  const TriPoly q0 = TriPoly::q0(f);
  const TriPoly vx = TriPoly::variable(f, 0);
  const TriPoly vy = TriPoly::variable(f, 1);
  const TriPoly vz = TriPoly::variable(f, 2);
  const int d = std::max(s.degree(), 0);
  // S = q0^d * s(x^2/q0), a polynomial.
  TriPoly S(f);
  for (int i = 0; i <= d; ++i) {
    S = S + s.coeff(i) * (vx.pow(2 * i) * q0.pow(d - i));
  }
  const TriPoly q0d = q0.pow(d);
  const TriPoly q02d = q0d * q0d;
  const Scalar two = Scalar::from_int(f, 2);
  TriPoly X = vx * q02d;
  TriPoly Y = vy * q02d + vx * S * q0d;
  TriPoly Z = vz * q02d - two * (vy * S * q0d) - vx * (S * S);
  return {X, Y, Z};
}

std::array<TriPoly, 3> moebius_map(const Mat2& m) {
  const FieldSpec f = m.field();
  const Mat3 g = gamma(m);
  std::array<TriPoly, 3> out{TriPoly(f), TriPoly(f), TriPoly(f)};
  const std::array<TriPoly, 3> vars{TriPoly::variable(f, 0),
                                    TriPoly::variable(f, 1),
                                    TriPoly::variable(f, 2)};
  for (int i = 0; i < 3; ++i) {
    TriPoly acc(f);
    for (int k = 0; k < 3; ++k) {
      acc = acc + g.at(i, k) * vars[static_cast<std::size_t>(k)];
    }
    out[static_cast<std::size_t>(i)] = acc;
  }
  return out;
}

bool q0_pullback_check(const GroupWord& w) {
  for (const auto& l : w.letters()) {
    const FieldSpec f = letter_field(l);
    const TriPoly q0 = TriPoly::q0(f);
    if (std::holds_alternative<MoebiusLetter>(l)) {
      const auto map = moebius_map(std::get<MoebiusLetter>(l).mat());
      if (!(q0.subst(map[0], map[1], map[2]) == q0)) return false;
    } else {
      const UniPoly& s = std::get<FiberedLetter>(l).s();
      const int d = std::max(s.degree(), 0);
      const auto map = fibered_cleared_map(s);
      const TriPoly clearing = q0.pow(2 * d);
      if (!(q0.subst(map[0], map[1], map[2]) == q0 * clearing * clearing)) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace conicline
