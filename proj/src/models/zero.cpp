#include "calcat/models/zero.hpp"

#include "calcat/errors.hpp"

namespace calcat {

ZeroModel::ZeroModel() {
  caps_.has_delta = true;
  caps_.has_monoidal = false;
  caps_.has_differential = true;
  caps_.has_integral = true;
  caps_.has_antiderivatives = true;
}

SpacePtr ZeroModel::space(const ObjectExpr& obj) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = space_cache_.find(obj.str());
    if (it != space_cache_.end()) return it->second;
  }
  SpacePtr s;
  switch (obj.kind()) {
    case ObjectExpr::Kind::Unit:
      s = Space::unit();
      break;
    case ObjectExpr::Kind::Base:
      s = Space::atoms({{0, "a"}}, obj.base_name());
      break;
    case ObjectExpr::Kind::Bang:
      s = Space::empty("!" + obj.inner().str());
      break;
    case ObjectExpr::Kind::Tensor: {
      std::vector<SpacePtr> fs;
      for (const auto& f : obj.factors()) fs.push_back(space(f));
      s = Space::tensor(std::move(fs));
      break;
    }
  }
  std::lock_guard<std::mutex> lock(mu_);
  space_cache_.emplace(obj.str(), s);
  return s;
}

namespace {

struct GenShape {
  ObjectExpr dom, cod;
};

GenShape zero_shape(const std::string& g, const ObjectExpr& x) {
  ObjectExpr bx = ObjectExpr::bang(x);
  if (g == "Delta") return {bx, ObjectExpr::tensor({bx, bx})};
  if (g == "e") return {bx, ObjectExpr::unit()};
  if (g == "delta") return {bx, ObjectExpr::bang(bx)};
  if (g == "eps") return {bx, x};
  if (g == "d") return {ObjectExpr::tensor({bx, x}), bx};
  if (g == "dcirc" || g == "s") return {bx, ObjectExpr::tensor({bx, x})};
  throw MissingCapability("zero model does not bind generator " + g);
}

}  // namespace

Morphism ZeroModel::generator(const std::string& g, const std::vector<ObjectExpr>& objs) const {
  ObjectExpr x = objs.empty() ? ObjectExpr::base("A") : objs[0];
  GenShape sh = zero_shape(g, x);
  return m_zero(*this, sh.dom, sh.cod);
}

Morphism ZeroModel::bang_of(const Morphism& f) const {
  return m_zero(*this, ObjectExpr::bang(f.dom), ObjectExpr::bang(f.cod));
}

std::optional<Morphism> ZeroModel::kinv(const ObjectExpr& obj) const {
  return m_id(*this, ObjectExpr::bang(obj));
}

std::optional<Morphism> ZeroModel::jinv_n(const ObjectExpr& obj, int n) const {
  (void)n;
  return m_id(*this, ObjectExpr::bang(obj));
}

}  // namespace calcat
