#include "conicline/classifier.hpp"

#include <set>
#include <sstream>

namespace conicline {

const std::vector<std::string>& ratio_names() {
  static const std::vector<std::string> names = {"xx", "xy", "xz",
                                                 "yy", "yz", "zz"};
  return names;
}

EmbeddingVerdict is_closed_embedding(const CurveParam& j,
                                     const SubductionOptions& opts) {
  const Scalar ci = j.c().inverse();
  const UniPoly &x = j.x(), &y = j.y(), &z = j.z();
  const std::vector<UniPoly> gens = {ci * (x * x), ci * (x * y), ci * (x * z),
                                     ci * (y * y), ci * (y * z), ci * (z * z)};
  const MembershipResult m =
      subalgebra_membership(gens, UniPoly::t(j.field()), opts);
  EmbeddingVerdict v;
  switch (m.status) {
    case MembershipResult::Status::Member:
      v.status = EmbeddingVerdict::Status::True;
      v.witness = m.witness;
      v.detail = "t = " + m.witness.str(ratio_names());
      break;
    case MembershipResult::Status::NonMember:
      v.status = EmbeddingVerdict::Status::False;
      v.obstruction_degree = m.obstruction_degree;
      v.detail = m.detail;
      break;
    case MembershipResult::Status::Undecided:
      v.status = EmbeddingVerdict::Status::Undecided;
      v.detail = m.detail;
      break;
  }
  return v;
}

namespace {

bool divides_degree(int a, int b) {
  if (a == UniPoly::kNegInf) return true;   // condition empty
  if (a == 0) return true;                  // constants divide everything
  if (b == UniPoly::kNegInf) return false;
  return b % a == 0;
}

bool orientation_ok(int dx, int dy, int dz) {
  const bool ordered = dx < dy && dy < dz;
  const bool divisible = divides_degree(dx, dy) && divides_degree(dx, dz);
  return ordered && divisible;
}

std::string profile_str(const std::array<int, 3>& p) {
  auto one = [](int d) {
    return d == UniPoly::kNegInf ? std::string("-inf") : std::to_string(d);
  };
  return "(" + one(p[0]) + ", " + one(p[1]) + ", " + one(p[2]) + ")";
}

}  // namespace

DegreeConditionReport degree_conditions(const CurveParam& j) {
  DegreeConditionReport r;
  r.profile = j.degree_profile();
  const auto [dx, dy, dz] = r.profile;
  r.as_given = orientation_ok(dx, dy, dz);
  r.after_involution = orientation_ok(dz, dy, dx);
  r.passes = r.as_given || r.after_involution;
  std::ostringstream os;
  os << "profile " << profile_str(r.profile) << ": as given "
     << (r.as_given ? "holds" : "fails") << ", after involution "
     << (r.after_involution ? "holds" : "fails");
  r.detail = os.str();
  return r;
}

EmbeddingReport build_report(const UniPoly& x, const UniPoly& y,
                             const UniPoly& z, const SubductionOptions& opts) {
  EmbeddingReport rep;
  try {
    const CurveParam j = CurveParam::validate(x, y, z);
    rep.valid_in_S0 = true;
    rep.c = j.c();
    rep.degree_profile = j.degree_profile();
    rep.closure_degree = j.closure_degree();
    rep.parity = j.parity();
    rep.embedding = is_closed_embedding(j, opts);
    rep.conditions = degree_conditions(j);
  } catch (const CurveError& e) {
    rep.valid_in_S0 = false;
    rep.invalid_reason =
        std::string(CurveError::kind_name(e.kind())) + ": " + e.what();
  }
  return rep;
}

bool reparam_of_L0(const CurveParam& j, UniPoly* l) {
  if (!j.x().is_zero()) return false;
  if (!j.y().is_constant() || j.y().is_zero()) return false;
  if (j.z().degree() != 1) return false;
  if (l) *l = j.y().constant_term().inverse() * j.z();
  return true;
}

bool reparam_of_L1(const CurveParam& j, UniPoly* l) {
  if (!j.x().is_constant() || j.x().is_zero()) return false;
  if (j.y().degree() != 1) return false;
  const Scalar lambda = j.x().constant_term();
  // Unit-scaled reparametrization of [1 : l : 1 - l^2] requires
  // lambda z = lambda^2 - y^2.
  const UniPoly lhs = UniPoly::constant(lambda) * j.z();
  const UniPoly rhs =
      UniPoly::constant(lambda * lambda) - j.y() * j.y();
  if (!(lhs == rhs)) return false;
  if (l) *l = lambda.inverse() * j.y();
  return true;
}

namespace {

// Proportionality-invariant state key for stall detection.
std::string state_key(const CurveParam& j) {
  const UniPoly* comps[3] = {&j.x(), &j.y(), &j.z()};
  const UniPoly* top = comps[0];
  for (const UniPoly* p : comps) {
    if (p->degree() > top->degree()) top = p;
  }
  const Scalar lead = top->leading_coeff();
  const Scalar li = lead.inverse();
  std::ostringstream os;
  for (const UniPoly* p : comps) {
    os << "|";
    for (int k = 0; k <= p->degree(); ++k) os << (li * p->coeff(k)).str() << ",";
  }
  return os.str();
}

// Leading coefficient vector at the maximal degree.
Vec3 leading_vector(const CurveParam& j) {
  const int d = j.closure_degree();
  return {j.x().coeff(d), j.y().coeff(d), j.z().coeff(d)};
}

RectifyResult fail_result(const CurveParam& original, const CurveParam& cur,
                          GroupWord witness, RectifyResult::FailKind kind,
                          const std::string& what) {
  RectifyResult r;
  r.outcome = RectifyResult::Outcome::Failed;
  r.witness = std::move(witness);
  r.final_state = cur;
  const DegreeConditionReport cert = degree_conditions(original);
  if (!cert.passes) {
    r.fail_kind = RectifyResult::FailKind::DegreeCertificate;
    r.certificate = cert;
    r.diagnostics = "orbit-necessary degree conditions fail: " + cert.detail +
                    (what.empty() ? "" : "; " + what);
  } else {
    r.fail_kind = kind;
    r.diagnostics = what;
  }
  return r;
}

}  // namespace

RectifyResult rectify(const CurveParam& j, int budget) {
  const FieldSpec f = j.field();
  CurveParam cur = j;
  std::vector<Letter> letters;
  std::set<std::string> seen;

  auto finish = [&](RectifyResult::Outcome outcome) {
    RectifyResult r;
    r.outcome = outcome;
    r.witness = GroupWord(letters);
    // Re-verify by explicit application of the witness to the input.
    const CurveParam image = apply_word_curve(r.witness, j);
    UniPoly l(f);
    const bool ok = outcome == RectifyResult::Outcome::OddLine
                        ? reparam_of_L0(image, &l)
                        : reparam_of_L1(image, &l);
    if (!ok) {
      throw DomainError("internal error: rectify witness failed re-verification");
    }
    r.reparam = l;
    r.final_state = image;
    return r;
  };

  for (int step = 0; step < budget; ++step) {
    // Terminal states.
    if (cur.x().is_zero()) {
      if (cur.z().degree() == 1 && cur.y().is_constant()) {
        return finish(RectifyResult::Outcome::OddLine);
      }
      return fail_result(j, cur, GroupWord(letters),
                         RectifyResult::FailKind::NotEmbeddingShape,
                         "curve inside the fiber {x = 0} with nonlinear "
                         "parameter; not a closed embedding");
    }
    if (cur.x().is_constant()) {
      if (cur.y().degree() == 1) {
        const Scalar x0 = cur.x().constant_term();
        const Scalar ratio = cur.c() / (x0 * x0);
        Scalar root = Scalar::one(f);
        if (!ratio.is_square(&root)) {
          return fail_result(
              j, cur, GroupWord(letters),
              RectifyResult::FailKind::NonSquareFiberClass,
              "terminal fiber value " + ratio.str() +
                  " is not a square in " + f.name() +
                  "; no torus element reaches the canonical member");
        }
        if (!root.is_one()) {
          const Letter torus = MoebiusLetter::torus(root);
          cur = apply_letter_curve(torus, cur);
          letters.push_back(torus);
        }
        return finish(RectifyResult::Outcome::EvenLine);
      }
      return fail_result(j, cur, GroupWord(letters),
                         RectifyResult::FailKind::NotEmbeddingShape,
                         "curve inside a fiber with nonlinear parameter; "
                         "not a closed embedding");
    }

    const std::string key = state_key(cur);
    if (!seen.insert(key).second) {
      return fail_result(j, cur, GroupWord(letters),
                         RectifyResult::FailKind::Stalled,
                         "reduction revisited a state; no applicable move");
    }

    // Orient: move the point at infinity to p0.
    const Vec3 lead = leading_vector(cur);
    const bool at_p0 = lead[0].is_zero() && lead[1].is_zero();
    if (!at_p0) {
      // The point at infinity lies on Q0 and differs from p0, hence has
      // nonzero first coordinate: [1 : m : -m^2].
      if (lead[0].is_zero()) {
        throw DomainError("internal error: point at infinity off Q0");
      }
      const Scalar m = lead[1] / lead[0];
      const Letter rep = MoebiusLetter::coset_rep(m);
      cur = apply_letter_curve(rep, cur);
      letters.push_back(rep);
      continue;
    }

    // deg z is the strict maximum now; try to shrink deg y by subduction
    // against x * (x^2/c)^k.
    const int dx = cur.x().degree();
    const UniPoly tau = cur.c().inverse() * (cur.x() * cur.x());
    UniPoly rem = cur.y();
    UniPoly s(f);
    while (rem.degree() >= dx) {
      const int d = rem.degree();
      if ((d - dx) % (2 * dx) != 0) break;
      const int k = (d - dx) / (2 * dx);
      const Scalar a = rem.leading_coeff() * cur.c().pow(k) /
                       cur.x().leading_coeff().pow(2 * k + 1);
      s = s + UniPoly::monomial(a, k);
      rem = rem - a * (tau.pow(k) * cur.x());
    }
    if (!s.is_zero()) {
      const Letter psi = FiberedLetter(-s);
      cur = apply_letter_curve(psi, cur);
      letters.push_back(psi);
      continue;
    }

    // No fibered reduction applies; switch the roles of x and z.
    const Letter inv = MoebiusLetter::involution(f);
    cur = apply_letter_curve(inv, cur);
    letters.push_back(inv);
  }

  RectifyResult r = fail_result(j, cur, GroupWord(letters),
                                RectifyResult::FailKind::BudgetExhausted,
                                "budget exhausted");
  if (r.fail_kind != RectifyResult::FailKind::DegreeCertificate) {
    r.fail_kind = RectifyResult::FailKind::BudgetExhausted;
    r.diagnostics = "budget exhausted after " + std::to_string(budget) +
                    " steps; final state " + cur.str();
  }
  return r;
}

CurveParam exotic_line(std::uint64_t p) {
  if (p < 3 || !is_prime_u64(p)) {
    throw DomainError("exotic lines require a prime characteristic p >= 3");
  }
  const FieldSpec f = FieldSpec::prime_field(p);
  const UniPoly t = UniPoly::t(f);
  const long long pp = static_cast<long long>(p);
  const UniPoly x = t.pow(pp * pp);
  const UniPoly u = t.pow(pp * pp + pp) + t;
  const UniPoly one = UniPoly::constant(Scalar::one(f));
  const UniPoly y = x * u + one;
  const UniPoly z = -(x * (u * u)) - Scalar::from_int(f, 2) * u;
  const CurveParam j = CurveParam::validate(x, y, z);
  if (!j.c().is_one()) {
    throw DomainError("internal error: exotic line has c != 1");
  }
  return j;
}

std::pair<UniPoly, UniPoly> double_cover_chart(const CurveParam& j) {
  if (!j.c().is_one()) {
    throw DomainError("double cover chart requires c = 1");
  }
  if (j.x().is_zero()) {
    throw DomainError("chart excludes parametrizations inside {x = 0}");
  }
  const FieldSpec f = j.field();
  const UniPoly one_minus_y = UniPoly::constant(Scalar::one(f)) - j.y();
  {
    auto [q, r] = UniPoly::divrem(one_minus_y, j.x());
    if (r.is_zero()) return {j.x(), q};
  }
  const UniPoly y_plus_one = j.y() + UniPoly::constant(Scalar::one(f));
  if (!y_plus_one.is_zero()) {
    auto [q, r] = UniPoly::divrem(j.z(), y_plus_one);
    if (r.is_zero()) return {j.x(), q};
  }
  throw DomainError("curve leaves the double cover chart: x does not divide "
                    "1 - y and y + 1 does not divide z");
}

}  // namespace conicline
