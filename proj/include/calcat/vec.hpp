#pragma once

#include <utility>
#include <vector>

#include "calcat/basis.hpp"
#include "calcat/rig.hpp"

namespace calcat {

// A finite formal combination of basis elements with nonzero coefficients,
// kept sorted by the basis order.
class Vec {
 public:
  using Term = std::pair<BasisPtr, Rational>;

  Vec() = default;

  static Vec zero() { return Vec(); }
  static Vec single(BasisPtr b, Rational c, const Rig& rig) {
    Vec v;
    v.push(std::move(b), std::move(c), rig);
    v.normalize(rig);
    return v;
  }
  static Vec basis(BasisPtr b) {
    Vec v;
    v.terms_.emplace_back(std::move(b), Rational(1));
    return v;
  }

  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  // Accumulation interface: push raw terms, then normalize once.
  void push(BasisPtr b, Rational c, const Rig& rig) {
    Rational cc = rig.canon(std::move(c));
    if (cc == 0) return;
    terms_.emplace_back(std::move(b), std::move(cc));
  }
  void push_vec(const Vec& v, const Rational& scale, const Rig& rig) {
    for (const auto& [b, c] : v.terms_) push(b, rig.mul(c, scale), rig);
  }
  void normalize(const Rig& rig);

  Vec plus(const Vec& o, const Rig& rig) const;
  Vec scaled(const Rational& r, const Rig& rig) const;
  bool eq(const Vec& o, const Rig& rig) const;

  // Coefficient of b (zero if absent).
  Rational coeff(const BasisPtr& b) const;

 private:
  std::vector<Term> terms_;
};

}  // namespace calcat
