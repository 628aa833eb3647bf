#ifndef CONICLINE_CLASSIFIER_HPP
#define CONICLINE_CLASSIFIER_HPP

#include <optional>

#include "conicline/group.hpp"
#include "conicline/subalgebra.hpp"

namespace conicline {

/// Names of the six coordinate-ring generators of the conic complement,
/// in the order used for embedding witnesses.
const std::vector<std::string>& ratio_names();

struct EmbeddingVerdict {
  enum class Status { True, False, Undecided };
  Status status = Status::Undecided;
  WitnessExpr witness;          // when True: evaluates to t at the pullbacks
  int obstruction_degree = 0;   // when False
  std::string detail;
};

/// Decides whether j is a closed embedding: pulls the six degree-2 ratios
/// x^2/q0, ..., z^2/q0 back along j (each the quadratic monomial in the
/// components divided by c) and tests t against the generated subalgebra.
EmbeddingVerdict is_closed_embedding(const CurveParam& j,
                                     const SubductionOptions& opts = {});

struct DegreeConditionReport {
  bool passes = false;           // holds in at least one orientation
  bool as_given = false;         // deg x < deg y < deg z and divisibility
  bool after_involution = false; // same after [x:y:z] -> [z:-y:x]
  std::array<int, 3> profile{};
  std::string detail;
};

/// Necessary conditions for membership in the orbit of L0 or L1: strictly
/// increasing degrees and, when deg x >= 1, deg x dividing deg y and
/// deg z; tested as given and after the involution.  deg x = 0 satisfies
/// the divisibility vacuously; deg x = -inf makes it empty.
DegreeConditionReport degree_conditions(const CurveParam& j);

struct EmbeddingReport {
  bool valid_in_S0 = false;
  std::string invalid_reason;
  std::optional<Scalar> c;
  EmbeddingVerdict embedding;
  std::array<int, 3> degree_profile{};
  int closure_degree = 0;
  int parity = 0;  // closure_degree mod 2
  DegreeConditionReport conditions;
};

/// Full verification pipeline over an untrusted component triple.
EmbeddingReport build_report(const UniPoly& x, const UniPoly& y,
                             const UniPoly& z,
                             const SubductionOptions& opts = {});

struct RectifyResult {
  enum class Outcome { OddLine, EvenLine, Failed };
  enum class FailKind {
    None,
    DegreeCertificate,   // the orbit-necessary degree conditions fail
    NonSquareFiberClass, // terminal fiber value has no square root in k
    NotEmbeddingShape,   // terminal shape only compatible with non-embeddings
    Stalled,             // reduction loop revisited a state
    BudgetExhausted
  };

  Outcome outcome = Outcome::Failed;
  GroupWord witness;
  FailKind fail_kind = FailKind::None;
  std::optional<DegreeConditionReport> certificate;
  std::string diagnostics;
  std::optional<CurveParam> final_state;
  /// On success, the degree-1 reparametrization l with witness(j) matching
  /// L0 o l resp. a unit multiple of L1 o l.
  std::optional<UniPoly> reparam;
};

/// Greedy degree reduction toward L0 (odd) or L1 (even).  Success is
/// re-verified internally by applying the witness word; the verdict is
/// only meaningful for closed embeddings (callers combine it with
/// is_closed_embedding as needed).
RectifyResult rectify(const CurveParam& j, int budget = 500);

/// Exact matchers for the two canonical lines, up to degree-1
/// reparametrization and a unit factor.
bool reparam_of_L0(const CurveParam& j, UniPoly* l = nullptr);
bool reparam_of_L1(const CurveParam& j, UniPoly* l = nullptr);

/// The positive-characteristic family t -> [x : xu+1 : -xu^2-2u] with
/// x = t^{p^2}, u = t^{p^2+p} + t over F_p, p >= 3 prime.
CurveParam exotic_line(std::uint64_t p);

/// Chart coordinates of the double cover along j (requires c = 1): returns
/// (x(t), v(t)) with v = (1-y)/x when x divides 1-y, else z/(y+1).
/// Parametrizations with x = 0 are rejected.
std::pair<UniPoly, UniPoly> double_cover_chart(const CurveParam& j);

}  // namespace conicline

#endif
