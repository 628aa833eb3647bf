#include "conicline/chains.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <gmpxx.h>

namespace conicline {

ChainType::ChainType(std::vector<long long> weights) : w_(std::move(weights)) {
  if (w_.empty()) throw DomainError("a chain needs at least one component");
}

ChainType ChainType::reversed() const {
  std::vector<long long> r(w_.rbegin(), w_.rend());
  return ChainType(std::move(r));
}

std::string ChainType::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < w_.size(); ++i) {
    if (i) os << ",";
    os << w_[i];
  }
  os << "]";
  return os.str();
}

std::string ChainMove::str() const {
  switch (kind) {
    case Kind::InnerBlowup: return "inner_blowup(" + std::to_string(pos) + ")";
    case Kind::OuterBlowupLeft: return "outer_blowup(left)";
    case Kind::OuterBlowupRight: return "outer_blowup(right)";
    case Kind::Blowdown: return "blowdown(" + std::to_string(pos) + ")";
  }
  return "?";
}

std::vector<std::vector<long long>> intersection_matrix(const ChainType& c) {
  const std::size_t n = c.size();
  std::vector<std::vector<long long>> m(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    m[i][i] = c.weights()[i];
    if (i + 1 < n) m[i][i + 1] = m[i + 1][i] = 1;
  }
  return m;
}

bool is_negative_definite(const ChainType& c) {
  // Leading principal minors of the tridiagonal matrix must alternate:
  // (-1)^k d_k > 0.
  mpz_class prev2 = 1, prev1 = 0;
  prev1 = static_cast<long>(c.weights()[0]);
  if (prev1 >= 0) return false;
  mpz_class dk = prev1;
  for (std::size_t k = 2; k <= c.size(); ++k) {
    dk = mpz_class(static_cast<long>(c.weights()[k - 1])) * prev1 - prev2;
    const bool positive_required = k % 2 == 0;
    if (positive_required ? dk <= 0 : dk >= 0) return false;
    prev2 = prev1;
    prev1 = dk;
  }
  return true;
}

ChainType apply_move(const ChainType& c, const ChainMove& m) {
  std::vector<long long> w = c.weights();
  const int n = static_cast<int>(w.size());
  switch (m.kind) {
    case ChainMove::Kind::InnerBlowup: {
      if (m.pos < 0 || m.pos + 1 >= n) {
        throw DomainError("inner blowup position out of range");
      }
      w[static_cast<std::size_t>(m.pos)] -= 1;
      w[static_cast<std::size_t>(m.pos) + 1] -= 1;
      w.insert(w.begin() + m.pos + 1, -1);
      break;
    }
    case ChainMove::Kind::OuterBlowupLeft:
      w.front() -= 1;
      w.insert(w.begin(), -1);
      break;
    case ChainMove::Kind::OuterBlowupRight:
      w.back() -= 1;
      w.push_back(-1);
      break;
    case ChainMove::Kind::Blowdown: {
      if (m.pos < 0 || m.pos >= n) {
        throw DomainError("blowdown position out of range");
      }
      if (w[static_cast<std::size_t>(m.pos)] != -1) {
        throw DomainError("blowdown needs a (-1)-component");
      }
      if (n == 1) throw DomainError("cannot blow down the last component");
      if (m.pos > 0) w[static_cast<std::size_t>(m.pos) - 1] += 1;
      if (m.pos + 1 < n) w[static_cast<std::size_t>(m.pos) + 1] += 1;
      w.erase(w.begin() + m.pos);
      break;
    }
  }
  return ChainType(std::move(w));
}

ChainType apply_moves(const ChainType& c, const std::vector<ChainMove>& ms) {
  ChainType cur = c;
  for (const auto& m : ms) cur = apply_move(cur, m);
  return cur;
}

namespace {

std::string chain_key(const std::vector<long long>& w) {
  std::string k;
  for (long long v : w) {
    k += std::to_string(v);
    k += ',';
  }
  return k;
}

std::vector<ChainMove> moves_from(const ChainType& c, int max_components) {
  std::vector<ChainMove> out;
  const int n = static_cast<int>(c.size());
  for (int i = 0; i < n; ++i) {
    if (c.weights()[static_cast<std::size_t>(i)] == -1 && n > 1) {
      out.push_back({ChainMove::Kind::Blowdown, i});
    }
  }
  if (n < max_components) {
    for (int i = 0; i + 1 < n; ++i) {
      out.push_back({ChainMove::Kind::InnerBlowup, i});
    }
    out.push_back({ChainMove::Kind::OuterBlowupLeft, 0});
    out.push_back({ChainMove::Kind::OuterBlowupRight, 0});
  }
  return out;
}

bool is_m_standard(const ChainType& c, long long m, StandardForm* sf) {
  const auto& w = c.weights();
  if (w.size() == 1 && w[0] == 0) {
    if (sf) *sf = {StandardForm::Shape::ZeroCurve, m, c, {}};
    return true;
  }
  if (w.size() == 3 && w[0] == 0 && w[1] == 0 && w[2] == 0) {
    if (sf) *sf = {StandardForm::Shape::ZeroZeroZero, m, c, {}};
    return true;
  }
  if (w.size() < 2 || w[0] != 0 || w[1] != -m) return false;
  for (std::size_t i = 2; i < w.size(); ++i) {
    if (w[i] > -2) return false;
  }
  if (sf) {
    *sf = {StandardForm::Shape::MStandard, m, c,
           std::vector<long long>(w.begin() + 2, w.end())};
  }
  return true;
}

struct ParentInfo {
  std::string parent;
  ChainMove move;
};

}  // namespace

StandardizeResult to_standard_form(const ChainType& c, long long m,
                                   const SearchCaps& caps) {
  if (is_negative_definite(c)) {
    throw DomainError("chain has negative definite intersection matrix; no "
                      "standard form");
  }
  StandardForm sf;
  if (is_m_standard(c, m, &sf)) return {sf, {}};

  const int maxc = caps.max_components > 0
                       ? caps.max_components
                       : static_cast<int>(c.size()) + 8;
  std::unordered_map<std::string, ParentInfo> parents;
  std::unordered_map<std::string, ChainType*> pool;
  std::deque<ChainType> states;
  std::deque<int> depths;

  const std::string root = chain_key(c.weights());
  parents.emplace(root, ParentInfo{"", {}});
  states.push_back(c);
  depths.push_back(0);
  std::size_t head = 0;

  while (head < states.size()) {
    const ChainType cur = states[head];
    const int depth = depths[head];
    ++head;
    if (depth >= caps.max_depth) continue;
    for (const ChainMove& mv : moves_from(cur, maxc)) {
      const ChainType nxt = apply_move(cur, mv);
      const std::string key = chain_key(nxt.weights());
      if (parents.count(key)) continue;
      parents.emplace(key, ParentInfo{chain_key(cur.weights()), mv});
      if (is_m_standard(nxt, m, &sf)) {
        // Reconstruct the move list.
        std::vector<ChainMove> moves;
        std::string k = key;
        while (k != root) {
          const ParentInfo& pi = parents.at(k);
          moves.push_back(pi.move);
          k = pi.parent;
        }
        std::reverse(moves.begin(), moves.end());
        if (!(apply_moves(c, moves) == nxt)) {
          throw DomainError("internal error: move replay mismatch");
        }
        return {sf, moves};
      }
      if (parents.size() > caps.max_states) {
        throw SearchCapError("standardization state cap exhausted");
      }
      states.push_back(nxt);
      depths.push_back(depth + 1);
    }
  }
  throw SearchCapError("standardization depth cap exhausted");
}

std::string DgInvariant::str() const {
  if (kind == Kind::NegDefinite) return "NEG_DEFINITE";
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < tail.size(); ++i) {
    if (i) os << ",";
    os << tail[i];
  }
  os << "]";
  return os.str();
}

DgInvariant dg_invariant(const ChainType& c, const SearchCaps& caps) {
  DgInvariant inv;
  if (is_negative_definite(c)) {
    inv.kind = DgInvariant::Kind::NegDefinite;
    return inv;
  }
  const StandardizeResult res = to_standard_form(c, 1, caps);
  inv.kind = DgInvariant::Kind::Tail;
  inv.shape = res.sf.shape;
  std::vector<long long> tail = res.sf.tail;
  std::vector<long long> rev(tail.rbegin(), tail.rend());
  inv.tail = std::min(tail, rev);
  return inv;
}

namespace {

// Inverse of a move, given the state it was applied to and its result.
ChainMove inverse_move(const ChainType& before, const ChainMove& mv,
                       const ChainType& after) {
  switch (mv.kind) {
    case ChainMove::Kind::InnerBlowup:
      return {ChainMove::Kind::Blowdown, mv.pos + 1};
    case ChainMove::Kind::OuterBlowupLeft:
      return {ChainMove::Kind::Blowdown, 0};
    case ChainMove::Kind::OuterBlowupRight:
      return {ChainMove::Kind::Blowdown, static_cast<int>(after.size()) - 1};
    case ChainMove::Kind::Blowdown: {
      const int n = static_cast<int>(before.size());
      if (mv.pos == 0) return {ChainMove::Kind::OuterBlowupLeft, 0};
      if (mv.pos == n - 1) return {ChainMove::Kind::OuterBlowupRight, 0};
      return {ChainMove::Kind::InnerBlowup, mv.pos - 1};
    }
  }
  throw DomainError("unreachable");
}

struct Ball {
  std::unordered_map<std::string, ParentInfo> parents;
  std::unordered_map<std::string, int> dist;
  std::vector<ChainType> order;  // insertion order for determinism
  bool exhausted = true;
};

Ball grow_ball(const ChainType& start, int radius, int maxc,
               std::size_t max_states) {
  Ball ball;
  const std::string root = chain_key(start.weights());
  ball.parents.emplace(root, ParentInfo{"", {}});
  ball.dist.emplace(root, 0);
  ball.order.push_back(start);
  std::size_t head = 0;
  while (head < ball.order.size()) {
    const ChainType cur = ball.order[head];
    const std::string ck = chain_key(cur.weights());
    const int d = ball.dist.at(ck);
    ++head;
    if (d >= radius) continue;
    for (const ChainMove& mv : moves_from(cur, maxc)) {
      const ChainType nxt = apply_move(cur, mv);
      const std::string key = chain_key(nxt.weights());
      if (ball.parents.count(key)) continue;
      if (ball.parents.size() >= max_states) {
        ball.exhausted = false;
        return ball;
      }
      ball.parents.emplace(key, ParentInfo{ck, mv});
      ball.dist.emplace(key, d + 1);
      ball.order.push_back(nxt);
    }
  }
  return ball;
}

std::vector<ChainMove> path_from_root(
    const std::unordered_map<std::string, ParentInfo>& parents,
    const std::string& root, std::string key) {
  std::vector<ChainMove> moves;
  while (key != root) {
    const ParentInfo& pi = parents.at(key);
    moves.push_back(pi.move);
    key = pi.parent;
  }
  std::reverse(moves.begin(), moves.end());
  return moves;
}

}  // namespace

ReachResult reachable(const ChainType& from, const ChainType& to,
                      const SearchCaps& caps) {
  ReachResult res;
  const int maxc = caps.max_components > 0
                       ? caps.max_components
                       : static_cast<int>(std::max(from.size(), to.size())) + 8;
  if (static_cast<int>(from.size()) > maxc ||
      static_cast<int>(to.size()) > maxc) {
    throw DomainError("endpoint exceeds the component cap");
  }
  const int fwd_r = (caps.max_depth + 1) / 2;
  const int bwd_r = caps.max_depth / 2;
  const Ball fwd = grow_ball(from, fwd_r, maxc, caps.max_states);
  const Ball bwd = grow_ball(to, bwd_r, maxc, caps.max_states);
  res.states_explored = fwd.parents.size() + bwd.parents.size();
  res.exhausted = fwd.exhausted && bwd.exhausted;

  // Deterministic meet: smallest combined distance, then smallest key.
  std::string meet;
  int best = -1;
  for (const auto& [key, d] : fwd.dist) {
    auto it = bwd.dist.find(key);
    if (it == bwd.dist.end()) continue;
    const int total = d + it->second;
    if (best < 0 || total < best || (total == best && key < meet)) {
      best = total;
      meet = key;
    }
  }
  if (best < 0) return res;

  res.found = true;
  const std::string froot = chain_key(from.weights());
  const std::string troot = chain_key(to.weights());
  std::vector<ChainMove> moves = path_from_root(fwd.parents, froot, meet);
  // Invert the backward half, replaying to recover intermediate states.
  std::vector<ChainMove> back = path_from_root(bwd.parents, troot, meet);
  std::vector<ChainType> bstates{to};
  for (const auto& mv : back) bstates.push_back(apply_move(bstates.back(), mv));
  for (std::size_t i = back.size(); i-- > 0;) {
    moves.push_back(inverse_move(bstates[i], back[i], bstates[i + 1]));
  }
  if (!(apply_moves(from, moves) == to)) {
    throw DomainError("internal error: reach replay mismatch");
  }
  res.moves = std::move(moves);
  return res;
}

}  // namespace conicline
