#include "calcat/vec.hpp"

#include <algorithm>

namespace calcat {

void Vec::normalize(const Rig& rig) {
  if (terms_.empty()) return;
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return basis_lt(a.first, b.first); });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && basis_eq(out.back().first, t.first)) {
      out.back().second = rig.add(out.back().second, t.second);
    } else {
      out.push_back(std::move(t));
    }
  }
  out.erase(std::remove_if(out.begin(), out.end(),
                           [&](const Term& t) { return rig.is_zero(t.second); }),
            out.end());
  terms_ = std::move(out);
}

Vec Vec::plus(const Vec& o, const Rig& rig) const {
  Vec r;
  r.terms_.reserve(size() + o.size());
  for (const auto& t : terms_) r.terms_.push_back(t);
  for (const auto& t : o.terms_) r.terms_.push_back(t);
  r.normalize(rig);
  return r;
}

Vec Vec::scaled(const Rational& s, const Rig& rig) const {
  Vec r;
  if (rig.is_zero(s)) return r;
  r.terms_.reserve(size());
  for (const auto& [b, c] : terms_) {
    Rational cc = rig.mul(c, s);
    if (!rig.is_zero(cc)) r.terms_.emplace_back(b, std::move(cc));
  }
  return r;
}

bool Vec::eq(const Vec& o, const Rig& rig) const {
  if (size() != o.size()) return false;
  for (size_t i = 0; i < size(); ++i) {
    if (!basis_eq(terms_[i].first, o.terms_[i].first)) return false;
    if (!rig.eq(terms_[i].second, o.terms_[i].second)) return false;
  }
  return true;
}

Rational Vec::coeff(const BasisPtr& b) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), b,
                             [](const Term& t, const BasisPtr& x) { return basis_lt(t.first, x); });
  if (it != terms_.end() && basis_eq(it->first, b)) return it->second;
  return Rational(0);
}

}  // namespace calcat
