#include "conicline/scalar.hpp"

#include <sstream>

namespace conicline {

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2ull, 3ull, 5ull, 7ull}) {
    if (n % d == 0) return n == d;
  }
  for (std::uint64_t d = 11; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime_field(std::uint64_t p) {
  if (!is_prime_u64(p)) {
    throw DomainError("characteristic " + std::to_string(p) + " is not prime");
  }
  if (p > (1ull << 31)) {
    throw DomainError("prime field characteristic too large (max 2^31)");
  }
  return FieldSpec(Kind::PrimeField, p);
}

std::string FieldSpec::name() const {
  if (is_rationals()) return "Q";
  return "F" + std::to_string(p_);
}

FieldSpec FieldSpec::parse(const std::string& s) {
  if (s == "Q" || s == "q") return rationals();
  if (!s.empty() && (s[0] == 'F' || s[0] == 'f')) {
    const std::string digits = s.substr(1);
    if (digits.empty() ||
        digits.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError("bad field tag: " + s);
    }
    return prime_field(std::stoull(digits));
  }
  throw ParseError("bad field tag: " + s + " (expected Q or F<p>)");
}

namespace {

std::uint64_t mod_reduce(const mpz_class& z, std::uint64_t p) {
  mpz_class r = z % mpz_class(static_cast<unsigned long>(p));
  if (r < 0) r += static_cast<unsigned long>(p);
  return r.get_ui();
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  if (a == 0) throw DomainError("division by zero in F_p");
  return pow_mod(a, p - 2, p);
}

// Tonelli-Shanks; p an odd prime, a a quadratic residue.
std::optional<std::uint64_t> sqrt_mod(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) return 0;
  if (p == 2) return a;
  if (pow_mod(a, (p - 1) / 2, p) != 1) return std::nullopt;
  if (p % 4 == 3) return pow_mod(a, (p + 1) / 4, p);
  std::uint64_t q = p - 1, s = 0;
  while (q % 2 == 0) { q /= 2; ++s; }
  std::uint64_t z = 2;
  while (pow_mod(z, (p - 1) / 2, p) != p - 1) ++z;
  std::uint64_t m = s;
  std::uint64_t c = pow_mod(z, q, p);
  std::uint64_t t = pow_mod(a, q, p);
  std::uint64_t r = pow_mod(a, (q + 1) / 2, p);
  while (t != 1) {
    std::uint64_t i = 0, t2 = t;
    while (t2 != 1) { t2 = mul_mod(t2, t2, p); ++i; }
    std::uint64_t b = pow_mod(c, 1ull << (m - i - 1), p);
    m = i;
    c = mul_mod(b, b, p);
    t = mul_mod(t, c, p);
    r = mul_mod(r, b, p);
  }
  return r;
}

}  // namespace

Scalar Scalar::from_int(const FieldSpec& f, long long v) {
  Scalar s(f);
  if (f.is_rationals()) {
    s.rat_ = mpq_class(static_cast<long>(v));
  } else {
    const std::uint64_t p = f.characteristic();
    long long r = v % static_cast<long long>(p);
    if (r < 0) r += static_cast<long long>(p);
    s.res_ = static_cast<std::uint64_t>(r);
  }
  return s;
}

Scalar Scalar::from_mpq(const FieldSpec& f, const mpq_class& q) {
  Scalar s(f);
  if (f.is_rationals()) {
    s.rat_ = q;
    s.rat_.canonicalize();
  } else {
    const std::uint64_t p = f.characteristic();
    mpq_class c = q;
    c.canonicalize();
    const std::uint64_t den = mod_reduce(c.get_den(), p);
    if (den == 0) throw DomainError("denominator divisible by p in F_p");
    s.res_ = mul_mod(mod_reduce(c.get_num(), p), inv_mod(den, p), p);
  }
  return s;
}

Scalar Scalar::from_fraction(const FieldSpec& f, long long num, long long den) {
  if (den == 0) throw DomainError("zero denominator");
  return from_mpq(f, mpq_class(mpz_class(static_cast<long>(num)),
                               mpz_class(static_cast<long>(den))));
}

Scalar Scalar::parse(const FieldSpec& f, const std::string& text) {
  std::string s;
  for (char ch : text) {
    if (!isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  if (s.empty()) throw ParseError("empty scalar");
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      return from_mpq(f, mpq_class(mpz_class(s)));
    }
    mpz_class num(s.substr(0, slash));
    mpz_class den(s.substr(slash + 1));
    if (den == 0) throw DomainError("zero denominator");
    return from_mpq(f, mpq_class(num, den));
  } catch (const std::invalid_argument&) {
    throw ParseError("bad scalar literal: " + text);
  }
}

bool Scalar::is_zero() const {
  return field_.is_rationals() ? rat_ == 0 : res_ == 0;
}

bool Scalar::is_one() const {
  return field_.is_rationals() ? rat_ == 1 : res_ == 1 % field_.characteristic();
}

void Scalar::check_same_field(const Scalar& a, const Scalar& b) {
  if (a.field_ != b.field_) {
    throw FieldMismatchError("scalar field mismatch: " + a.field_.name() +
                             " vs " + b.field_.name());
  }
}

Scalar Scalar::operator-() const {
  Scalar r(field_);
  if (field_.is_rationals()) {
    r.rat_ = -rat_;
  } else {
    const std::uint64_t p = field_.characteristic();
    r.res_ = res_ == 0 ? 0 : p - res_;
  }
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  Scalar r(field_);
  if (field_.is_rationals()) {
    r.rat_ = 1 / rat_;
  } else {
    r.res_ = inv_mod(res_, field_.characteristic());
  }
  return r;
}

Scalar Scalar::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar base = *this;
  Scalar acc = Scalar::one(field_);
  long long k = e;
  while (k) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  Scalar::check_same_field(a, b);
  Scalar r(a.field_);
  if (a.field_.is_rationals()) {
    r.rat_ = a.rat_ + b.rat_;
  } else {
    const std::uint64_t p = a.field_.characteristic();
    r.res_ = (a.res_ + b.res_) % p;
  }
  return r;
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar::check_same_field(a, b);
  Scalar r(a.field_);
  if (a.field_.is_rationals()) {
    r.rat_ = a.rat_ * b.rat_;
  } else {
    r.res_ = mul_mod(a.res_, b.res_, a.field_.characteristic());
  }
  return r;
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

bool Scalar::operator==(const Scalar& o) const {
  check_same_field(*this, o);
  return field_.is_rationals() ? rat_ == o.rat_ : res_ == o.res_;
}

bool Scalar::is_square(Scalar* root) const {
  if (is_zero()) {
    if (root) *root = Scalar::zero(field_);
    return true;
  }
  if (field_.is_rationals()) {
    if (rat_ < 0) return false;
    mpz_class num = rat_.get_num(), den = rat_.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) ||
        !mpz_perfect_square_p(den.get_mpz_t())) {
      return false;
    }
    if (root) {
      mpz_class rn, rd;
      mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
      mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
      *root = Scalar::from_mpq(field_, mpq_class(rn, rd));
    }
    return true;
  }
  auto r = sqrt_mod(res_, field_.characteristic());
  if (!r) return false;
  if (root) *root = Scalar::from_int(field_, static_cast<long long>(*r));
  return true;
}

std::string Scalar::str() const {
  if (field_.is_rationals()) {
    std::ostringstream os;
    os << rat_;
    return os.str();
  }
  return std::to_string(res_);
}

}  // namespace conicline
