#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "calcat/linmap.hpp"
#include "calcat/object.hpp"

namespace calcat {

// A morphism in paper orientation. The carrier is a LinMap from the
// interpretation of the paper codomain to the interpretation of the paper
// domain — for the VEC^op models this is the honest vector-space map, for REL
// the transpose relation (same Boolean matrix, column-indexed). Sequential
// composition therefore composes carriers in reverse.
struct Morphism {
  ObjectExpr dom, cod;
  LinMap carrier;
};

struct Capabilities {
  bool has_delta = false;
  bool has_monoidal = false;
  bool has_differential = false;
  bool has_integral = false;
  bool has_antiderivatives = false;
};

class Model {
 public:
  virtual ~Model() = default;

  virtual const std::string& name() const = 0;
  virtual const Rig& rig() const = 0;
  virtual const Capabilities& caps() const = 0;

  // Interpretation of object expressions (base names, !, tensor, unit).
  virtual SpacePtr space(const ObjectExpr& obj) const = 0;

  // Primitive generator bindings: Delta, e, delta, eps, d, dcirc, s,
  // m_tensor, m_K. Throws MissingCapability for unbound generators.
  virtual Morphism generator(const std::string& name,
                             const std::vector<ObjectExpr>& objs) const = 0;

  // Functor action !(f); throws MissingCapability if unsupported for f.
  virtual Morphism bang_of(const Morphism& f) const = 0;

  // Registered primitive inverses (closed forms where the model has them).
  virtual std::optional<Morphism> kinv(const ObjectExpr& obj) const {
    (void)obj;
    return std::nullopt;
  }
  virtual std::optional<Morphism> jinv_n(const ObjectExpr& obj, int n) const {
    (void)obj;
    (void)n;
    return std::nullopt;
  }

  // Seedable sampler: a linear map dom -> cod supported on the budgeted basis.
  virtual Morphism random_linear(const ObjectExpr& dom, const ObjectExpr& cod,
                                 const EnumBudget& budget, uint64_t seed) const;

  // Whether `eval` prints the carrier application (VEC-side direction) or the
  // paper-direction image via transpose scan.
  virtual bool eval_in_carrier_direction() const { return true; }
};

Morphism m_id(const Model& m, const ObjectExpr& x);
Morphism m_zero(const Model& m, const ObjectExpr& dom, const ObjectExpr& cod);
Morphism m_seq(const Morphism& f, const Morphism& g);
Morphism m_par(const Model& m, const Morphism& f, const Morphism& g);
Morphism m_add(const Morphism& f, const Morphism& g);
Morphism m_scale(const Model& m, const Rational& r, const Morphism& f);
Morphism m_sym(const Model& m, const ObjectExpr& x, const ObjectExpr& y);
// Factor permutation: output factor i is input factor perm[i].
Morphism m_perm(const Model& m, const std::vector<ObjectExpr>& factors,
                const std::vector<int>& perm);

EqVerdict morphism_equal(const Morphism& f, const Morphism& g, const EnumBudget& budget,
                         bool parallel);

// Paper-direction application via transpose scan over the budgeted codomain
// basis (used by the CLI for models stored relation-style).
Vec paper_apply(const Morphism& f, const BasisPtr& input, const EnumBudget& budget);

}  // namespace calcat
