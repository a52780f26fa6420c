#pragma once

#include <utility>

#include "calcat/model.hpp"
#include "calcat/term.hpp"

namespace calcat {

// Infers (dom, cod) of a term against the fixed generator signature; throws
// TypeErrorEx naming the offending subterm. Does not need a model.
std::pair<ObjectExpr, ObjectExpr> typecheck(const TermPtr& t);

// Structural interpretation of a typechecked term in a model; throws
// MissingCapability when the model lacks a generator the term uses.
Morphism evaluate(const TermPtr& t, const Model& model);

Morphism evaluate_text(const std::string& term_text, const Model& model);

// Derived transformations (paper composites over the primitive bindings).
Morphism derived_L(const Model& m, const ObjectExpr& x);
Morphism derived_K(const Model& m, const ObjectExpr& x);
Morphism derived_J(const Model& m, const ObjectExpr& x);
Morphism derived_Ln(const Model& m, int n, const ObjectExpr& x);
Morphism derived_Jn(const Model& m, int n, const ObjectExpr& x);
Morphism derived_W(const Model& m, const ObjectExpr& x);
Morphism derived_Delta_n(const Model& m, int n, const ObjectExpr& x);
Morphism derived_omega(const Model& m, int k, int n, const ObjectExpr& x);
Morphism derived_n_inv(const Model& m, int n, const ObjectExpr& x);

// K⁻¹ := d°(J⁻¹⊗1)(J⁻¹⊗1)d + !0, built from the registered J⁻¹.
Morphism derived_Kinv_composite(const Model& m, const ObjectExpr& x);
// J⁻¹ := δ ; K⁻¹ (at !X) ; d° ; (!(ε) ⊗ e), built from the registered K⁻¹.
Morphism derived_Jinv_composite(const Model& m, const ObjectExpr& x);
// J⁻¹_{n+1} := δ ; J_n⁻¹ (at !X) ; d° ; (!(ε) ⊗ e).
Morphism derived_Jinv_n_composite(const Model& m, int n_plus_1, const ObjectExpr& x);
// The antiderivative integral transformation K⁻¹d° = d°(J⁻¹⊗1) (both forms
// are built; callers check their agreement via the J⁻¹.9 catalog entry).
Morphism antiderivative(const Model& m, const ObjectExpr& x);

}  // namespace calcat
