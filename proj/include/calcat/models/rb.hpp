#pragma once

#include <map>
#include <mutex>

#include "calcat/model.hpp"

namespace calcat {

// The free weight-0 Rota-Baxter model over Q: !V = Sh(Sym V) ⊗ Sym V, basis
// pairs (word of monomials, monomial). The deriving/integral transformations
// act on the Sym component (1⊗d, 1⊗s); there is no δ and no monoidal
// structure. J is invertible blockwise in the Sym-component degree; K is not.
class RBModel : public Model {
 public:
  explicit RBModel(int vars);

  const std::string& name() const override { return name_; }
  const Rig& rig() const override { return rig_rational(); }
  const Capabilities& caps() const override { return caps_; }

  SpacePtr space(const ObjectExpr& obj) const override;
  Morphism generator(const std::string& name, const std::vector<ObjectExpr>& objs) const override;
  Morphism bang_of(const Morphism& f) const override;
  std::optional<Morphism> jinv_n(const ObjectExpr& obj, int n) const override;

 private:
  std::string name_ = "rb";
  Capabilities caps_;
  std::vector<std::pair<int, std::string>> atoms_;
  mutable std::mutex mu_;
  mutable std::map<std::string, SpacePtr> space_cache_;
};

// Algebra operations on basis pairs, exposed for the Rota-Baxter identity
// checks: elements are Tuple[Word[monomial...], monomial] over the given rig.
Vec rb_shuffle(const BasisPtr& w1, const BasisPtr& w2, const Rig& rig);
Vec rb_product(const BasisPtr& a, const BasisPtr& b, const Rig& rig);
BasisPtr rb_P(const BasisPtr& a);

}  // namespace calcat
