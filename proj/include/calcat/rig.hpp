#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

#include "calcat/errors.hpp"

namespace calcat {

// All scalar values are carried as exact rationals; each rig interprets and
// normalizes them into its own value set (GF2: {0,1} mod 2, Boolean: {0,1}
// with 1+1=1). Rationals are arbitrary-precision, canonical sign, normalized
// fraction (boost::multiprecision keeps them reduced).
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

enum class RigKind { Rational, GF2, Boolean };

class Rig {
 public:
  explicit constexpr Rig(RigKind k) : kind_(k) {}

  RigKind kind() const { return kind_; }
  const char* name() const {
    switch (kind_) {
      case RigKind::Rational: return "Q";
      case RigKind::GF2: return "F2";
      case RigKind::Boolean: return "bool";
    }
    return "?";
  }

  bool is_field() const { return kind_ != RigKind::Boolean; }
  // characteristic: 0 for Q, 2 for F2; none for the Boolean rig (1+1=1).
  std::optional<unsigned> char_hint() const {
    switch (kind_) {
      case RigKind::Rational: return 0u;
      case RigKind::GF2: return 2u;
      case RigKind::Boolean: return std::nullopt;
    }
    return std::nullopt;
  }

  bool add_idempotent() const { return kind_ == RigKind::Boolean; }

  Rational zero() const { return Rational(0); }
  Rational one() const { return Rational(1); }

  Rational add(const Rational& a, const Rational& b) const {
    switch (kind_) {
      case RigKind::Rational: return a + b;
      case RigKind::GF2: return canon(a + b);
      case RigKind::Boolean: return (a != 0 || b != 0) ? Rational(1) : Rational(0);
    }
    return 0;
  }

  Rational mul(const Rational& a, const Rational& b) const {
    switch (kind_) {
      case RigKind::Rational: return a * b;
      case RigKind::GF2: return canon(a * b);
      case RigKind::Boolean: return (a != 0 && b != 0) ? Rational(1) : Rational(0);
    }
    return 0;
  }

  bool eq(const Rational& a, const Rational& b) const { return canon(a) == canon(b); }
  bool is_zero(const Rational& a) const { return canon(a) == 0; }

  // Reduce an exact rational into the rig's canonical value set. For GF2 the
  // denominator must be odd (1/2 has no meaning mod 2).
  Rational canon(const Rational& a) const {
    switch (kind_) {
      case RigKind::Rational:
        return a;
      case RigKind::GF2: {
        Integer num = boost::multiprecision::numerator(a);
        Integer den = boost::multiprecision::denominator(a);
        if (den % 2 == 0) throw MissingCapability("rational with even denominator has no image in F2");
        return Rational((num % 2 + 2) % 2);
      }
      case RigKind::Boolean:
        return a != 0 ? Rational(1) : Rational(0);
    }
    return a;
  }

  std::optional<Rational> invert(const Rational& a) const {
    switch (kind_) {
      case RigKind::Rational:
        if (a == 0) return std::nullopt;
        return Rational(1) / a;
      case RigKind::GF2:
        if (canon(a) == 0) return std::nullopt;
        return Rational(1);
      case RigKind::Boolean:
        if (a == 0) return std::nullopt;
        return Rational(1);
    }
    return std::nullopt;
  }

  // n copies of 1 summed; the meaning of integer scalings in every rig.
  Rational from_natural(unsigned long n) const {
    switch (kind_) {
      case RigKind::Rational: return Rational(n);
      case RigKind::GF2: return Rational(n % 2);
      case RigKind::Boolean: return Rational(n > 0 ? 1 : 0);
    }
    return 0;
  }

  // Interpret a nonnegative rational literal p/q as (p·1)·(q·1)^{-1}.
  // Fails (nullopt) when q·1 is not invertible in the rig.
  std::optional<Rational> from_literal(const Rational& pq) const {
    Integer p = boost::multiprecision::numerator(pq);
    Integer q = boost::multiprecision::denominator(pq);
    switch (kind_) {
      case RigKind::Rational:
        return pq;
      case RigKind::GF2: {
        if (q % 2 == 0) return std::nullopt;
        return Rational((p % 2 + 2) % 2);
      }
      case RigKind::Boolean:
        return Rational(p != 0 ? 1 : 0);
    }
    return pq;
  }

 private:
  RigKind kind_;
};

inline const Rig& rig_rational() {
  static const Rig r(RigKind::Rational);
  return r;
}
inline const Rig& rig_gf2() {
  static const Rig r(RigKind::GF2);
  return r;
}
inline const Rig& rig_boolean() {
  static const Rig r(RigKind::Boolean);
  return r;
}

std::string scalar_str(const Rational& a);

}  // namespace calcat
