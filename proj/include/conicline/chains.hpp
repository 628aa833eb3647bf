#ifndef CONICLINE_CHAINS_HPP
#define CONICLINE_CHAINS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "conicline/error.hpp"

namespace conicline {

/// Oriented rational chain, given by the ordered list of self-intersection
/// numbers of its components.  Reversal is a distinct value.
class ChainType {
 public:
  explicit ChainType(std::vector<long long> weights);
  const std::vector<long long>& weights() const { return w_; }
  std::size_t size() const { return w_.size(); }
  ChainType reversed() const;
  bool operator==(const ChainType& o) const { return w_ == o.w_; }
  bool operator!=(const ChainType& o) const { return !(*this == o); }
  bool operator<(const ChainType& o) const { return w_ < o.w_; }
  std::string str() const;

 private:
  std::vector<long long> w_;
};

struct ChainMove {
  enum class Kind { InnerBlowup, OuterBlowupLeft, OuterBlowupRight, Blowdown };
  Kind kind;
  int pos = 0;  // InnerBlowup: between pos and pos+1; Blowdown: component pos

  bool operator==(const ChainMove& o) const {
    return kind == o.kind && pos == o.pos;
  }
  std::string str() const;
};

std::vector<std::vector<long long>> intersection_matrix(const ChainType& c);
/// Exact sign test on the leading principal minors.
bool is_negative_definite(const ChainType& c);

/// Throws DomainError if the move does not apply.
ChainType apply_move(const ChainType& c, const ChainMove& m);
ChainType apply_moves(const ChainType& c, const std::vector<ChainMove>& ms);

struct SearchCaps {
  int max_components = 0;  // 0: input length + 8
  int max_depth = 24;
  std::size_t max_states = 2000000;
};

struct StandardForm {
  enum class Shape { MStandard, ZeroCurve, ZeroZeroZero };
  Shape shape = Shape::MStandard;
  long long m = 0;
  ChainType chain{{0}};
  /// The subchain after [0, -m]; empty for [0, -m] itself and for the
  /// exceptional shapes.
  std::vector<long long> tail;
};

struct StandardizeResult {
  StandardForm sf;
  std::vector<ChainMove> moves;
};

/// Transforms a chain with non-negative-definite intersection matrix into
/// an m-standard chain (or one of the exceptional shapes, tagged), by
/// breadth-first search over moves with canonical ordering.  Throws
/// DomainError on negative definite input, SearchCapError when the caps
/// are exhausted.
StandardizeResult to_standard_form(const ChainType& c, long long m,
                                   const SearchCaps& caps = {});

struct DgInvariant {
  enum class Kind { NegDefinite, Tail };
  Kind kind = Kind::Tail;
  /// Canonical representative: the lexicographically smaller of the tail
  /// and its reversal.
  std::vector<long long> tail;
  StandardForm::Shape shape = StandardForm::Shape::MStandard;

  bool operator==(const DgInvariant& o) const {
    return kind == o.kind && tail == o.tail;
  }
  bool operator!=(const DgInvariant& o) const { return !(*this == o); }
  std::string str() const;
};

/// The Danilov-Gizatullin tail type, computed from a 1-standard form and
/// canonicalized up to orientation reversal.
DgInvariant dg_invariant(const ChainType& c, const SearchCaps& caps = {});

struct ReachResult {
  bool found = false;
  std::vector<ChainMove> moves;   // replay from the source reaches the target
  /// True when the bounded bidirectional search exhausted the whole ball
  /// within the caps, so "not found" is conclusive for those caps.
  bool exhausted = false;
  std::size_t states_explored = 0;
};

/// Bounded bidirectional search for a move sequence from one chain to
/// another, keeping every intermediate chain within the component cap.
ReachResult reachable(const ChainType& from, const ChainType& to,
                      const SearchCaps& caps);

}  // namespace conicline

#endif
