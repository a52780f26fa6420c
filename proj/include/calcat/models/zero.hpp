#pragma once

#include <map>
#include <mutex>

#include "calcat/model.hpp"

namespace calcat {

// The zero coalgebra modality: ! sends every object to the zero module and
// every map to zero. All equations hold vacuously (no basis elements under
// any !); the modality is not monoidal since !I is not the unit.
class ZeroModel : public Model {
 public:
  ZeroModel();

  const std::string& name() const override { return name_; }
  const Rig& rig() const override { return rig_rational(); }
  const Capabilities& caps() const override { return caps_; }

  SpacePtr space(const ObjectExpr& obj) const override;
  Morphism generator(const std::string& name, const std::vector<ObjectExpr>& objs) const override;
  Morphism bang_of(const Morphism& f) const override;
  std::optional<Morphism> kinv(const ObjectExpr& obj) const override;
  std::optional<Morphism> jinv_n(const ObjectExpr& obj, int n) const override;

 private:
  std::string name_ = "zero";
  Capabilities caps_;
  mutable std::mutex mu_;
  mutable std::map<std::string, SpacePtr> space_cache_;
};

}  // namespace calcat
