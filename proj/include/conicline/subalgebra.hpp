#ifndef CONICLINE_SUBALGEBRA_HPP
#define CONICLINE_SUBALGEBRA_HPP

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "conicline/unipoly.hpp"

namespace conicline {

/// Formal polynomial expression in a list of named generators, kept as a
/// shared expression tree so that witnesses of deep subductions stay
/// compact.  Evaluating at the generators reproduces the represented
/// element of k[t] exactly.
class WitnessExpr {
 public:
  struct Node;

  WitnessExpr() = default;

  static WitnessExpr constant(const Scalar& c);
  static WitnessExpr generator(std::size_t index);
  static WitnessExpr add(const WitnessExpr& a, const WitnessExpr& b);
  static WitnessExpr mul(const WitnessExpr& a, const WitnessExpr& b);
  static WitnessExpr pow(const WitnessExpr& a, long long e);

  bool empty() const { return node_ == nullptr; }

  /// Exact evaluation; gens[i] substitutes generator(i).
  UniPoly eval(const std::vector<UniPoly>& gens, const FieldSpec& field) const;

  /// Rendering with generator names; names may be shorter than the
  /// generator count, missing ones print as g<i>.
  std::string str(const std::vector<std::string>& names = {}) const;

  const Node* node_ptr() const { return node_.get(); }

 private:
  explicit WitnessExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct SubductionOptions {
  /// Largest polynomial degree the completion may scan; 0 selects
  /// 4 x max input degree (and at least 64).
  int degree_cap = 0;
  /// Cap on factorizations enumerated per candidate degree.
  std::size_t factorization_cap = 50000;
  /// Cap on basis size during completion.
  std::size_t max_basis = 512;
};

struct MembershipResult {
  enum class Status { Member, NonMember, Undecided };
  Status status = Status::Undecided;
  /// Valid when Member: evaluates to the target.
  WitnessExpr witness;
  /// Valid when NonMember: a degree outside the realized lead-degree
  /// semigroup at which reduction stalls.
  int obstruction_degree = 0;
  std::string detail;
};

/// Decides target in k[gens] inside k[t] by subduction.  Positive answers
/// carry a verified witness; negative answers are certified by the
/// lead-degree semigroup obstruction once the generating set is closed
/// under subduced tete-a-tetes, otherwise the result is Undecided.
MembershipResult subalgebra_membership(const std::vector<UniPoly>& gens,
                                       const UniPoly& target,
                                       const SubductionOptions& opts = {});

}  // namespace conicline

#endif
