#include "conicline/unipoly.hpp"

namespace conicline {

UniPoly::UniPoly(const FieldSpec& f, std::vector<Scalar> coeffs)
    : field_(f), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) {
    if (c.field() != field_) throw FieldMismatchError("coefficient field mismatch");
  }
  trim();
}

UniPoly UniPoly::constant(const Scalar& c) {
  UniPoly p(c.field());
  if (!c.is_zero()) p.coeffs_ = {c};
  return p;
}

UniPoly UniPoly::t(const FieldSpec& f) {
  return UniPoly(f, {Scalar::zero(f), Scalar::one(f)});
}

UniPoly UniPoly::monomial(const Scalar& c, int k) {
  UniPoly p(c.field());
  if (c.is_zero()) return p;
  p.coeffs_.assign(static_cast<std::size_t>(k) + 1, Scalar::zero(c.field()));
  p.coeffs_.back() = c;
  return p;
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

void UniPoly::check_same_field(const UniPoly& a, const UniPoly& b) {
  if (a.field_ != b.field_) {
    throw FieldMismatchError("polynomial field mismatch: " + a.field_.name() +
                             " vs " + b.field_.name());
  }
}

Scalar UniPoly::coeff(int k) const {
  if (k < 0 || static_cast<std::size_t>(k) >= coeffs_.size()) {
    return Scalar::zero(field_);
  }
  return coeffs_[static_cast<std::size_t>(k)];
}

const Scalar& UniPoly::leading_coeff() const {
  if (coeffs_.empty()) throw DomainError("leading coefficient of zero polynomial");
  return coeffs_.back();
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  UniPoly::check_same_field(a, b);
  UniPoly r(a.field_);
  r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()),
                   Scalar::zero(a.field_));
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i) {
    Scalar s = Scalar::zero(a.field_);
    if (i < a.coeffs_.size()) s = s + a.coeffs_[i];
    if (i < b.coeffs_.size()) s = s + b.coeffs_[i];
    r.coeffs_[i] = s;
  }
  r.trim();
  return r;
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  UniPoly::check_same_field(a, b);
  UniPoly r(a.field_);
  if (a.is_zero() || b.is_zero()) return r;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1,
                   Scalar::zero(a.field_));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      r.coeffs_[i + j] = r.coeffs_[i + j] + a.coeffs_[i] * b.coeffs_[j];
    }
  }
  r.trim();
  return r;
}

UniPoly operator*(const Scalar& c, const UniPoly& a) {
  if (c.field() != a.field_) throw FieldMismatchError("scalar/poly field mismatch");
  UniPoly r(a.field_);
  if (c.is_zero()) return r;
  r.coeffs_ = a.coeffs_;
  for (auto& x : r.coeffs_) x = c * x;
  r.trim();
  return r;
}

std::pair<UniPoly, UniPoly> UniPoly::divrem(const UniPoly& a, const UniPoly& b) {
  check_same_field(a, b);
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  UniPoly q(a.field_), r = a;
  const int db = b.degree();
  const Scalar lb_inv = b.leading_coeff().inverse();
  while (!r.is_zero() && r.degree() >= db) {
    const int k = r.degree() - db;
    const Scalar c = r.leading_coeff() * lb_inv;
    q = q + UniPoly::monomial(c, k);
    r = r - UniPoly::monomial(c, k) * b;
  }
  return {q, r};
}

UniPoly UniPoly::exact_div(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divrem(a, b);
  if (!r.is_zero()) throw DomainError("inexact polynomial division");
  return q;
}

UniPoly UniPoly::pow(long long e) const {
  if (e < 0) throw DomainError("negative polynomial power");
  UniPoly acc = UniPoly::constant(Scalar::one(field_));
  UniPoly base = *this;
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

UniPoly UniPoly::compose(const UniPoly& g) const {
  check_same_field(*this, g);
  UniPoly acc(field_);
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    acc = acc * g + UniPoly::constant(coeffs_[i]);
  }
  return acc;
}

Scalar UniPoly::eval(const Scalar& v) const {
  Scalar acc = Scalar::zero(field_);
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    acc = acc * v + coeffs_[i];
  }
  return acc;
}

UniPoly UniPoly::shifted(int k) const {
  if (is_zero()) return *this;
  if (k < 0) throw DomainError("negative shift");
  UniPoly r(field_);
  r.coeffs_.assign(static_cast<std::size_t>(k), Scalar::zero(field_));
  r.coeffs_.insert(r.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  return r;
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  return leading_coeff().inverse() * *this;
}

bool UniPoly::operator==(const UniPoly& o) const {
  if (field_ != o.field_) return false;
  if (coeffs_.size() != o.coeffs_.size()) return false;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != o.coeffs_[i]) return false;
  }
  return true;
}

UniPoly poly_gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    auto [q, r] = UniPoly::divrem(x, y);
    (void)q;
    x = y;
    y = r;
  }
  return x.is_zero() ? x : x.monic();
}

}  // namespace conicline
