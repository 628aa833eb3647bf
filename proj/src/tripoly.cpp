#include "conicline/tripoly.hpp"

namespace conicline {

TriPoly TriPoly::constant(const Scalar& c) {
  TriPoly p(c.field());
  p.add_term({0, 0, 0}, c);
  return p;
}

TriPoly TriPoly::variable(const FieldSpec& f, int axis) {
  Mono3 m{0, 0, 0};
  m[static_cast<std::size_t>(axis)] = 1;
  return monomial(Scalar::one(f), m);
}

TriPoly TriPoly::monomial(const Scalar& c, const Mono3& m) {
  TriPoly p(c.field());
  p.add_term(m, c);
  return p;
}

TriPoly TriPoly::q0(const FieldSpec& f) {
  TriPoly p(f);
  p.add_term({1, 0, 1}, Scalar::one(f));
  p.add_term({0, 2, 0}, Scalar::one(f));
  return p;
}

void TriPoly::add_term(const Mono3& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void TriPoly::check_same_field(const TriPoly& a, const TriPoly& b) {
  if (a.field_ != b.field_) throw FieldMismatchError("trivariate field mismatch");
}

int TriPoly::total_degree() const {
  int d = UniPoly::kNegInf;
  for (const auto& [m, c] : terms_) d = std::max(d, m[0] + m[1] + m[2]);
  return d;
}

std::optional<int> TriPoly::homogeneous_degree() const {
  std::optional<int> d;
  for (const auto& [m, c] : terms_) {
    const int t = m[0] + m[1] + m[2];
    if (!d) d = t;
    if (*d != t) return std::nullopt;
  }
  return d;
}

TriPoly TriPoly::operator-() const {
  TriPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

TriPoly operator+(const TriPoly& a, const TriPoly& b) {
  TriPoly::check_same_field(a, b);
  TriPoly r = a;
  for (const auto& [m, c] : b.terms_) r.add_term(m, c);
  return r;
}

TriPoly operator-(const TriPoly& a, const TriPoly& b) { return a + (-b); }

TriPoly operator*(const TriPoly& a, const TriPoly& b) {
  TriPoly::check_same_field(a, b);
  TriPoly r(a.field_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      r.add_term({ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]}, ca * cb);
    }
  }
  return r;
}

TriPoly operator*(const Scalar& c, const TriPoly& a) {
  TriPoly r(a.field_);
  for (const auto& [m, x] : a.terms_) r.add_term(m, c * x);
  return r;
}

TriPoly TriPoly::pow(long long e) const {
  if (e < 0) throw DomainError("negative power");
  TriPoly acc = TriPoly::constant(Scalar::one(field_));
  TriPoly base = *this;
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

UniPoly TriPoly::eval_uni(const UniPoly& x, const UniPoly& y,
                          const UniPoly& z) const {
  if (x.field() != field_ || y.field() != field_ || z.field() != field_) {
    throw FieldMismatchError("substitution field mismatch");
  }
  // Cached powers keyed by exponent.
  std::map<int, UniPoly> px, py, pz;
  auto power = [](std::map<int, UniPoly>& cache, const UniPoly& base, int e) {
    auto it = cache.find(e);
    if (it != cache.end()) return it->second;
    UniPoly v = base.pow(e);
    cache.emplace(e, v);
    return v;
  };
  UniPoly acc(field_);
  for (const auto& [m, c] : terms_) {
    UniPoly term = UniPoly::constant(c);
    if (m[0]) term = term * power(px, x, m[0]);
    if (m[1]) term = term * power(py, y, m[1]);
    if (m[2]) term = term * power(pz, z, m[2]);
    acc = acc + term;
  }
  return acc;
}

TriPoly TriPoly::subst(const TriPoly& gx, const TriPoly& gy,
                       const TriPoly& gz) const {
  std::map<int, TriPoly> px, py, pz;
  auto power = [](std::map<int, TriPoly>& cache, const TriPoly& base, int e) {
    auto it = cache.find(e);
    if (it != cache.end()) return it->second;
    TriPoly v = base.pow(e);
    cache.emplace(e, v);
    return v;
  };
  TriPoly acc(field_);
  for (const auto& [m, c] : terms_) {
    TriPoly term = TriPoly::constant(c);
    if (m[0]) term = term * power(px, gx, m[0]);
    if (m[1]) term = term * power(py, gy, m[1]);
    if (m[2]) term = term * power(pz, gz, m[2]);
    acc = acc + term;
  }
  return acc;
}

Scalar TriPoly::eval_point(const Scalar& x, const Scalar& y,
                           const Scalar& z) const {
  Scalar acc = Scalar::zero(field_);
  for (const auto& [m, c] : terms_) {
    acc = acc + c * x.pow(m[0]) * y.pow(m[1]) * z.pow(m[2]);
  }
  return acc;
}

bool TriPoly::operator==(const TriPoly& o) const {
  if (field_ != o.field_ || terms_.size() != o.terms_.size()) return false;
  auto it = o.terms_.begin();
  for (const auto& [m, c] : terms_) {
    if (it->first != m || it->second != c) return false;
    ++it;
  }
  return true;
}

}  // namespace conicline
