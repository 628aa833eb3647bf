#include "conicline/subalgebra.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <sstream>

namespace conicline {

// ---------------------------------------------------------------------------
// WitnessExpr

struct WitnessExpr::Node {
  enum class Kind { Const, Gen, Add, Mul, Pow };
  Kind kind;
  Scalar value;                    // Const
  std::size_t index = 0;           // Gen
  long long exponent = 0;          // Pow
  std::vector<WitnessExpr> kids;   // Add, Mul, Pow
};

WitnessExpr WitnessExpr::constant(const Scalar& c) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Const;
  n->value = c;
  return WitnessExpr(std::move(n));
}

WitnessExpr WitnessExpr::generator(std::size_t index) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Gen;
  n->index = index;
  return WitnessExpr(std::move(n));
}

WitnessExpr WitnessExpr::add(const WitnessExpr& a, const WitnessExpr& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  if (a.node_->kind == Node::Kind::Const && b.node_->kind == Node::Kind::Const) {
    return constant(a.node_->value + b.node_->value);
  }
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Add;
  n->kids = {a, b};
  return WitnessExpr(std::move(n));
}

WitnessExpr WitnessExpr::mul(const WitnessExpr& a, const WitnessExpr& b) {
  if (a.empty() || b.empty()) return WitnessExpr();
  if (a.node_->kind == Node::Kind::Const && b.node_->kind == Node::Kind::Const) {
    return constant(a.node_->value * b.node_->value);
  }
  if (a.node_->kind == Node::Kind::Const && a.node_->value.is_one()) return b;
  if (b.node_->kind == Node::Kind::Const && b.node_->value.is_one()) return a;
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Mul;
  n->kids = {a, b};
  return WitnessExpr(std::move(n));
}

WitnessExpr WitnessExpr::pow(const WitnessExpr& a, long long e) {
  if (e == 1) return a;
  if (a.empty()) return WitnessExpr();
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Pow;
  n->exponent = e;
  n->kids = {a};
  return WitnessExpr(std::move(n));
}

namespace {

UniPoly eval_node(const WitnessExpr::Node* n, const std::vector<UniPoly>& gens,
                  const FieldSpec& field,
                  std::map<const WitnessExpr::Node*, UniPoly>& memo);

}  // namespace

UniPoly WitnessExpr::eval(const std::vector<UniPoly>& gens,
                          const FieldSpec& field) const {
  if (!node_) return UniPoly(field);
  std::map<const Node*, UniPoly> memo;
  return eval_node(node_.get(), gens, field, memo);
}

namespace {

UniPoly eval_node(const WitnessExpr::Node* n, const std::vector<UniPoly>& gens,
                  const FieldSpec& field,
                  std::map<const WitnessExpr::Node*, UniPoly>& memo) {
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;
  UniPoly out(field);
  switch (n->kind) {
    case WitnessExpr::Node::Kind::Const:
      out = UniPoly::constant(n->value);
      break;
    case WitnessExpr::Node::Kind::Gen:
      if (n->index >= gens.size()) throw DomainError("witness generator index out of range");
      out = gens[n->index];
      break;
    case WitnessExpr::Node::Kind::Add: {
      out = UniPoly(field);
      for (const auto& k : n->kids) out = out + k.eval(gens, field);
      break;
    }
    case WitnessExpr::Node::Kind::Mul: {
      out = UniPoly::constant(Scalar::one(field));
      for (const auto& k : n->kids) out = out * k.eval(gens, field);
      break;
    }
    case WitnessExpr::Node::Kind::Pow:
      out = n->kids[0].eval(gens, field).pow(n->exponent);
      break;
  }
  memo.emplace(n, out);
  return out;
}

std::string node_str(const WitnessExpr::Node* n,
                     const std::vector<std::string>& names, bool parens) {
  std::ostringstream os;
  switch (n->kind) {
    case WitnessExpr::Node::Kind::Const:
      return n->value.str();
    case WitnessExpr::Node::Kind::Gen:
      if (n->index < names.size()) return names[n->index];
      return "g" + std::to_string(n->index);
    default:
      break;
  }
  // composite
  std::vector<std::string> parts;
  const char* sep = " + ";
  if (n->kind == WitnessExpr::Node::Kind::Mul) sep = "*";
  if (n->kind == WitnessExpr::Node::Kind::Pow) {
    const auto* kid = n->kids[0].node_ptr();
    const bool atomic = kid->kind == WitnessExpr::Node::Kind::Gen;
    std::string base = node_str(kid, names, !atomic);
    return base + "^" + std::to_string(n->exponent);
  }
  for (const auto& k : n->kids) {
    const auto* kid = k.node_ptr();
    const bool need = n->kind == WitnessExpr::Node::Kind::Mul &&
                      kid->kind == WitnessExpr::Node::Kind::Add;
    parts.push_back(node_str(kid, names, need));
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) os << sep;
    os << parts[i];
  }
  if (parens) return "(" + os.str() + ")";
  return os.str();
}

}  // namespace

std::string WitnessExpr::str(const std::vector<std::string>& names) const {
  if (!node_) return "0";
  return node_str(node_.get(), names, false);
}

// ---------------------------------------------------------------------------
// Subduction

namespace {

struct BasisElem {
  UniPoly p;         // monic, nonconstant
  WitnessExpr expr;  // evaluates to p at the original generators
};

class Subducer {
 public:
  Subducer(const std::vector<UniPoly>& gens, const FieldSpec& field,
           const SubductionOptions& opts)
      : field_(field), opts_(opts) {
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (gens[i].is_constant()) continue;
      const Scalar lc = gens[i].leading_coeff();
      add_elem(lc.inverse() * gens[i],
               WitnessExpr::mul(WitnessExpr::constant(lc.inverse()),
                                WitnessExpr::generator(i)));
    }
    autoreduce();
  }

  bool basis_empty() const { return basis_.empty(); }
  std::size_t basis_size() const { return basis_.size(); }

  // f = eval(expr) + remainder; the remainder is constant or stalls at a
  // degree outside the current lead-degree semigroup.
  std::pair<UniPoly, WitnessExpr> subduce(const UniPoly& f) {
    UniPoly r = f;
    WitnessExpr expr;
    while (!r.is_constant()) {
      ensure_dp(r.degree());
      const int d = r.degree();
      if (dp_[static_cast<std::size_t>(d)] < 0) break;
      auto fact = canonical_factorization(d);
      auto [prod, prod_expr] = product_of(fact);
      const Scalar lambda = r.leading_coeff();  // products of monics are monic
      r = r - lambda * prod;
      expr = WitnessExpr::add(
          expr, WitnessExpr::mul(WitnessExpr::constant(lambda), prod_expr));
    }
    return {r, expr};
  }

  // One scan for tete-a-tetes.  Returns {added_any, scan_complete}.
  std::pair<bool, bool> completion_pass() {
    if (basis_.empty()) return {false, true};
    if (basis_.size() > opts_.max_basis) return {false, false};
    const bool trace = std::getenv("CONICLINE_SUBDUCE_TRACE") != nullptr;
    std::vector<int> degs;
    for (const auto& b : basis_) degs.push_back(b.p.degree());
    int g = 0;
    for (int d : degs) g = std::gcd(g, d);
    const int dmin = *std::min_element(degs.begin(), degs.end());
    const int dmax = *std::max_element(degs.begin(), degs.end());
    const long long relation_bound =
        static_cast<long long>(g) * semigroup_conductor(degs, g) + dmin + dmax;
    const int cap = effective_degree_cap();
    bool complete = relation_bound <= cap;
    const int scan_to = static_cast<int>(std::min<long long>(relation_bound, cap));
    if (trace) {
      std::cerr << "[pass] degs=";
      for (int d : degs) std::cerr << d << " ";
      std::cerr << "g=" << g << " bound=" << relation_bound
                << " scan_to=" << scan_to << " complete=" << complete << "\n";
    }
    ensure_dp(scan_to);
    for (int delta = 2 * dmin; delta <= scan_to; ++delta) {
      if (dp_[static_cast<std::size_t>(delta)] < 0) continue;
      // Relations whose two factorizations share a generator follow from
      // lower-degree relations, so only factorizations in different
      // support-components can contribute a new element (Betti degrees).
      std::vector<std::vector<int>> reps;
      if (!component_representatives(delta, reps)) {
        complete = false;
        continue;
      }
      if (reps.size() < 2) continue;
      auto [p0, e0] = product_of_exponents(reps[0]);
      for (std::size_t i = 1; i < reps.size(); ++i) {
        auto [pi, ei] = product_of_exponents(reps[i]);
        UniPoly h = pi - p0;  // both monic of degree delta
        WitnessExpr he = WitnessExpr::add(
            ei, WitnessExpr::mul(WitnessExpr::constant(-Scalar::one(field_)), e0));
        auto [r, re] = subduce(h);
        if (!r.is_constant()) {
          // h = eval(re) + r, so r = eval(he) - eval(re).
          WitnessExpr rexpr = WitnessExpr::add(
              he,
              WitnessExpr::mul(WitnessExpr::constant(-Scalar::one(field_)), re));
          const Scalar lc = r.leading_coeff();
          if (trace) {
            std::cerr << "[add] delta=" << delta << " new deg=" << r.degree()
                      << "\n";
          }
          add_elem(lc.inverse() * r,
                   WitnessExpr::mul(WitnessExpr::constant(lc.inverse()), rexpr));
          autoreduce();
          return {true, complete};
        }
      }
    }
    return {false, complete};
  }

  int effective_degree_cap() const { return degree_cap_; }
  void set_degree_cap(int cap) { degree_cap_ = cap; }

 private:
  void add_elem(UniPoly p, WitnessExpr expr) {
    basis_.push_back({std::move(p), std::move(expr)});
    std::stable_sort(basis_.begin(), basis_.end(),
                     [](const BasisElem& a, const BasisElem& b) {
                       return a.p.degree() < b.p.degree();
                     });
    dp_.clear();
  }

  void ensure_dp(int upto) {
    if (upto < 0) return;
    const std::size_t need = static_cast<std::size_t>(upto) + 1;
    if (dp_.size() >= need) return;
    const std::size_t old = dp_.size();
    dp_.resize(need, -1);
    if (old == 0) dp_[0] = static_cast<int>(basis_.size());  // empty product
    for (std::size_t d = std::max<std::size_t>(old, 1); d < need; ++d) {
      for (std::size_t i = 0; i < basis_.size(); ++i) {
        const int di = basis_[i].p.degree();
        if (static_cast<std::size_t>(di) <= d &&
            dp_[d - static_cast<std::size_t>(di)] >= 0) {
          dp_[d] = static_cast<int>(i);
          break;
        }
      }
    }
  }

  // Exponent vector of the canonical factorization of degree d.
  std::vector<int> canonical_factorization(int d) {
    std::vector<int> exps(basis_.size(), 0);
    std::size_t rem = static_cast<std::size_t>(d);
    while (rem > 0) {
      const int i = dp_[rem];
      exps[static_cast<std::size_t>(i)]++;
      rem -= static_cast<std::size_t>(basis_[static_cast<std::size_t>(i)].p.degree());
    }
    return exps;
  }

  std::pair<UniPoly, WitnessExpr> product_of(const std::vector<int>& exps) {
    return product_of_exponents(exps);
  }

  std::pair<UniPoly, WitnessExpr> product_of_exponents(
      const std::vector<int>& exps) {
    UniPoly p = UniPoly::constant(Scalar::one(field_));
    WitnessExpr e = WitnessExpr::constant(Scalar::one(field_));
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (!exps[i]) continue;
      p = p * basis_[i].p.pow(exps[i]);
      e = WitnessExpr::mul(e, WitnessExpr::pow(basis_[i].expr, exps[i]));
    }
    return {p, e};
  }

  // One representative factorization of delta per connected component of
  // the "shares a generator" graph on factorizations.  Returns false when
  // the enumeration cap was hit (scan incomplete at this degree).
  bool component_representatives(int delta, std::vector<std::vector<int>>& reps) {
    const std::size_t n = basis_.size();
    std::vector<int> parent(n);
    for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int v) {
      while (parent[static_cast<std::size_t>(v)] != v) {
        parent[static_cast<std::size_t>(v)] =
            parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
        v = parent[static_cast<std::size_t>(v)];
      }
      return v;
    };
    auto unite = [&](int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); };

    // rep_of_gen[i]: a factorization using generator i, if seen.
    std::vector<std::vector<int>> rep_of_gen(n);
    std::vector<int> cur(n, 0);
    std::size_t work = 0;
    bool ok = true;
    std::function<void(std::size_t, int)> rec = [&](std::size_t idx, int rem) {
      if (!ok) return;
      if (rem == 0) {
        if (++work > opts_.factorization_cap) { ok = false; return; }
        int first = -1;
        for (std::size_t i = 0; i < n; ++i) {
          if (!cur[i]) continue;
          if (first < 0) {
            first = static_cast<int>(i);
          } else {
            unite(first, static_cast<int>(i));
          }
          if (rep_of_gen[i].empty()) rep_of_gen[i] = cur;
        }
        return;
      }
      if (idx >= n) return;
      const int d = basis_[idx].p.degree();
      for (int e = rem / d; e >= 0; --e) {
        cur[idx] = e;
        rec(idx + 1, rem - e * d);
        if (!ok) break;
      }
      cur[idx] = 0;
    };
    rec(0, delta);
    if (!ok) return false;

    std::map<int, std::vector<int>> by_comp;
    for (std::size_t i = 0; i < n; ++i) {
      if (rep_of_gen[i].empty()) continue;
      const int c = find(static_cast<int>(i));
      if (!by_comp.count(c)) by_comp[c] = rep_of_gen[i];
    }
    reps.clear();
    for (auto& [c, f] : by_comp) reps.push_back(f);
    return true;
  }

  // Conductor of the numerical semigroup generated by degs/g.
  long long semigroup_conductor(const std::vector<int>& degs, int g) {
    std::vector<int> scaled;
    for (int d : degs) scaled.push_back(d / g);
    const int m = *std::min_element(scaled.begin(), scaled.end());
    if (m == 1) return 0;
    const int mx = *std::max_element(scaled.begin(), scaled.end());
    const long long bound = static_cast<long long>(m - 1) * (mx - 1) + mx + 2;
    std::vector<char> in(static_cast<std::size_t>(bound) + 1, 0);
    in[0] = 1;
    for (long long v = 1; v <= bound; ++v) {
      for (int d : scaled) {
        if (v >= d && in[static_cast<std::size_t>(v - d)]) {
          in[static_cast<std::size_t>(v)] = 1;
          break;
        }
      }
    }
    // The first element after the last gap.
    for (long long v = bound; v >= 1; --v) {
      if (!in[static_cast<std::size_t>(v)]) return v + 1;
    }
    return 0;
  }

  void autoreduce() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < basis_.size(); ++i) {
        std::vector<BasisElem> rest;
        for (std::size_t j = 0; j < basis_.size(); ++j) {
          if (j != i) rest.push_back(basis_[j]);
        }
        BasisElem self = basis_[i];
        std::swap(basis_, rest);
        dp_.clear();
        auto [r, e] = subduce(self.p);
        if (r == self.p) {
          std::swap(basis_, rest);
          dp_.clear();
          continue;
        }
        changed = true;
        if (!r.is_constant()) {
          // r = self.p - eval(e)
          WitnessExpr rexpr = WitnessExpr::add(
              self.expr,
              WitnessExpr::mul(WitnessExpr::constant(-Scalar::one(field_)), e));
          const Scalar lc = r.leading_coeff();
          add_elem(lc.inverse() * r,
                   WitnessExpr::mul(WitnessExpr::constant(lc.inverse()), rexpr));
        }
        // If r is constant the element was redundant and stays dropped.
        break;
      }
    }
  }

  FieldSpec field_;
  SubductionOptions opts_;
  std::vector<BasisElem> basis_;
  std::vector<int> dp_;  // dp_[d] = basis index usable at degree d, -1 if none
  int degree_cap_ = 0;
};

}  // namespace

MembershipResult subalgebra_membership(const std::vector<UniPoly>& gens,
                                       const UniPoly& target,
                                       const SubductionOptions& opts) {
  MembershipResult res;
  const FieldSpec field = target.field();
  for (const auto& g : gens) {
    if (g.field() != field) throw FieldMismatchError("generator field mismatch");
  }
  if (gens.empty() && !target.is_constant()) {
    throw DomainError("empty generator list with nonconstant target");
  }
  if (target.is_constant()) {
    res.status = MembershipResult::Status::Member;
    res.witness = WitnessExpr::constant(target.constant_term());
    return res;
  }

  Subducer sub(gens, field, opts);
  int cap = opts.degree_cap;
  if (cap <= 0) {
    int maxdeg = target.degree();
    for (const auto& g : gens) maxdeg = std::max(maxdeg, g.degree());
    cap = std::max(4 * maxdeg, 64);
  }
  sub.set_degree_cap(cap);

  if (sub.basis_empty()) {
    res.status = MembershipResult::Status::NonMember;
    res.obstruction_degree = target.degree();
    res.detail = "all generators constant";
    return res;
  }

  while (true) {
    auto [r, expr] = sub.subduce(target);
    if (r.is_constant()) {
      WitnessExpr w = expr;
      if (!r.is_zero()) {
        w = WitnessExpr::add(w, WitnessExpr::constant(r.constant_term()));
      }
      if (w.eval(gens, field) != target) {
        throw DomainError("internal error: witness failed to reproduce target");
      }
      res.status = MembershipResult::Status::Member;
      res.witness = w;
      return res;
    }
    auto [added, complete] = sub.completion_pass();
    if (added) continue;
    if (complete) {
      res.status = MembershipResult::Status::NonMember;
      res.obstruction_degree = r.degree();
      res.detail = "reduction stalls at degree " + std::to_string(r.degree()) +
                   ", outside the lead-degree semigroup";
    } else {
      res.status = MembershipResult::Status::Undecided;
      res.detail = "undecided at degree cap " + std::to_string(cap);
    }
    return res;
  }
}

}  // namespace conicline
