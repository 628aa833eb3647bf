#ifndef CONICLINE_SCALAR_HPP
#define CONICLINE_SCALAR_HPP

#include <cstdint>
#include <optional>
#include <string>

#include <gmpxx.h>

#include "conicline/error.hpp"

namespace conicline {

/// Base field of all exact computations: the rationals, or a prime field
/// F_p.  Values are immutable; equality is structural.
class FieldSpec {
 public:
  enum class Kind { Rationals, PrimeField };

  static FieldSpec rationals() { return FieldSpec(Kind::Rationals, 0); }
  static FieldSpec prime_field(std::uint64_t p);

  Kind kind() const { return kind_; }
  /// 0 for the rationals, p for F_p.
  std::uint64_t characteristic() const { return p_; }
  bool is_rationals() const { return kind_ == Kind::Rationals; }

  bool operator==(const FieldSpec& o) const {
    return kind_ == o.kind_ && p_ == o.p_;
  }
  bool operator!=(const FieldSpec& o) const { return !(*this == o); }

  /// "Q", "F3", "F5", ...
  std::string name() const;
  static FieldSpec parse(const std::string& s);

 private:
  FieldSpec(Kind k, std::uint64_t p) : kind_(k), p_(p) {}
  Kind kind_;
  std::uint64_t p_;
};

bool is_prime_u64(std::uint64_t n);

/// Exact field element in canonical form: a reduced fraction with positive
/// denominator over Q, or a residue in [0, p) over F_p.
class Scalar {
 public:
  /// Rational zero.  Mostly for container resizing; prefer the factories.
  Scalar() : field_(FieldSpec::rationals()), rat_(0), res_(0) {}

  static Scalar zero(const FieldSpec& f) { return from_int(f, 0); }
  static Scalar one(const FieldSpec& f) { return from_int(f, 1); }
  static Scalar from_int(const FieldSpec& f, long long v);
  static Scalar from_mpq(const FieldSpec& f, const mpq_class& q);
  static Scalar from_fraction(const FieldSpec& f, long long num, long long den);
  /// Parses "a", "-a", "a/b".
  static Scalar parse(const FieldSpec& f, const std::string& s);

  const FieldSpec& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// Only valid over the rationals.
  const mpq_class& rat() const { return rat_; }
  /// Only valid over a prime field.
  std::uint64_t residue() const { return res_; }

  Scalar operator-() const;
  Scalar inverse() const;  // throws DomainError on zero
  Scalar pow(long long e) const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Exact square test; fills *root with a square root on success.
  bool is_square(Scalar* root = nullptr) const;

  std::string str() const;

 private:
  Scalar(const FieldSpec& f) : field_(f), rat_(0), res_(0) {}
  static void check_same_field(const Scalar& a, const Scalar& b);

  FieldSpec field_;
  mpq_class rat_;
  std::uint64_t res_;
};

}  // namespace conicline

#endif
