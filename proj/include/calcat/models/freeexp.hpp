#pragma once

#include <map>
#include <mutex>

#include "calcat/model.hpp"

namespace calcat {

// The free-exponential family: !X is the free commutative monoid (multisets /
// monomials / bags) on the basis of X, over a pluggable rig. Instantiated as
//   sym-q  — Sym over Q (full calculus category with antiderivatives)
//   sym-f2 — Sym over F2 (differential, no integral)
//   rel    — finite bags over the Boolean rig (s = d°, K = J = id)
// The comonad, comonoid, (co)deriving and monoidal structure are uniform in
// the object, so every generator is available at arbitrary object expressions.
struct FreeExpConfig {
  std::string name;
  const Rig* rig = &rig_rational();
  int a_vars = 3;
  int b_vars = 2;
  bool monomial_print = true;   // monomial syntax vs bag syntax for atoms
  bool bind_s = false;          // closed-form 1/(n+1) integral (needs Q)
  bool s_is_dcirc = false;      // REL: the integral is the coderiving map
  bool bind_inverses = false;   // K⁻¹/J⁻¹ primitives
  Capabilities caps;
};

FreeExpConfig sym_q_config(int vars);
FreeExpConfig sym_f2_config(int vars);
FreeExpConfig rel_config(int elements);

class FreeExpModel : public Model {
 public:
  explicit FreeExpModel(FreeExpConfig cfg);

  const std::string& name() const override { return cfg_.name; }
  const Rig& rig() const override { return *cfg_.rig; }
  const Capabilities& caps() const override { return cfg_.caps; }

  SpacePtr space(const ObjectExpr& obj) const override;
  Morphism generator(const std::string& name, const std::vector<ObjectExpr>& objs) const override;
  Morphism bang_of(const Morphism& f) const override;
  std::optional<Morphism> kinv(const ObjectExpr& obj) const override;
  std::optional<Morphism> jinv_n(const ObjectExpr& obj, int n) const override;
  bool eval_in_carrier_direction() const override { return cfg_.monomial_print; }

  bool integral_is_coderiving() const { return cfg_.s_is_dcirc; }

  // Seely structure relative to the internal biproduct base `AxB` of the two
  // configured bases: χ: !(A×B) → !A⊗!B splits a monomial into its A and B
  // parts, χ₀: !(0) → I. The product and zero objects are the internal base
  // names "AxB" and "O".
  Morphism seely_chi() const;
  Morphism seely_chi_inv() const;
  Morphism seely_chi0() const;
  Morphism seely_chi0_inv() const;

 private:
  Morphism gen_at(const std::string& name, const ObjectExpr& x, const ObjectExpr& y) const;

  FreeExpConfig cfg_;
  std::map<std::string, std::vector<std::pair<int, std::string>>> bases_;
  mutable std::mutex mu_;
  mutable std::map<std::string, SpacePtr> space_cache_;
};

}  // namespace calcat
