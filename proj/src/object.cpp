#include "calcat/object.hpp"

namespace calcat {

ObjectExpr ObjectExpr::unit() {
  ObjectExpr o;
  o.kind_ = Kind::Unit;
  o.render();
  return o;
}

ObjectExpr ObjectExpr::base(std::string name) {
  ObjectExpr o;
  o.kind_ = Kind::Base;
  o.base_ = std::move(name);
  o.render();
  return o;
}

ObjectExpr ObjectExpr::bang(ObjectExpr inner) {
  ObjectExpr o;
  o.kind_ = Kind::Bang;
  o.inner_ = std::make_shared<ObjectExpr>(std::move(inner));
  o.render();
  return o;
}

ObjectExpr ObjectExpr::tensor(std::vector<ObjectExpr> factors) {
  std::vector<ObjectExpr> flat;
  for (auto& f : factors) {
    if (f.kind() == Kind::Unit) continue;
    if (f.kind() == Kind::Tensor) {
      for (const auto& g : f.factors()) flat.push_back(g);
    } else {
      flat.push_back(std::move(f));
    }
  }
  if (flat.empty()) return unit();
  if (flat.size() == 1) return flat[0];
  ObjectExpr o;
  o.kind_ = Kind::Tensor;
  o.factors_ = std::move(flat);
  o.render();
  return o;
}

void ObjectExpr::render() {
  switch (kind_) {
    case Kind::Unit:
      text_ = "I";
      return;
    case Kind::Base:
      text_ = base_;
      return;
    case Kind::Bang: {
      const ObjectExpr& in = *inner_;
      if (in.kind() == Kind::Tensor) {
        text_ = "!(" + in.str() + ")";
      } else {
        text_ = "!" + in.str();
      }
      return;
    }
    case Kind::Tensor: {
      std::string t;
      for (size_t i = 0; i < factors_.size(); ++i) {
        if (i) t += "*";
        t += factors_[i].str();
      }
      text_ = t;
      return;
    }
  }
}

}  // namespace calcat
