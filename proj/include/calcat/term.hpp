#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "calcat/object.hpp"
#include "calcat/rig.hpp"

namespace calcat {

struct Term;
using TermPtr = std::shared_ptr<const Term>;

// Typed term language for string diagrams, diagrammatic order: `;` is
// sequential composition (left first), `#` parallel, `+` sum, `n*t` scaling,
// `bang(t)` the functor action, `sym[X,Y]` the symmetry, `0[X->Y]` the zero
// map. Generators may take object and natural-number arguments in `[...]`;
// object arguments default to the base object A when omitted.
struct Term {
  enum class Kind { Id, Gen, Seq, Par, Sym, Scale, Sum, Zero, Bang };

  Kind kind;
  std::string gen;                   // Gen
  std::vector<ObjectExpr> objs;      // Gen/Id/Sym/Zero object arguments
  std::vector<int> nats;             // Gen natural arguments
  Rational scale = 0;                // Scale
  TermPtr a, b;                      // children

  static TermPtr id(ObjectExpr x);
  static TermPtr gen(std::string name, std::vector<ObjectExpr> objs = {},
                     std::vector<int> nats = {});
  static TermPtr seq(TermPtr x, TermPtr y);
  static TermPtr par(TermPtr x, TermPtr y);
  static TermPtr sym(ObjectExpr x, ObjectExpr y);
  static TermPtr scaled(Rational r, TermPtr t);
  static TermPtr sum(TermPtr x, TermPtr y);
  static TermPtr zero(ObjectExpr dom, ObjectExpr cod);
  static TermPtr bang(TermPtr t);

  static TermPtr seq_all(std::vector<TermPtr> ts);
  static TermPtr par_all(std::vector<TermPtr> ts);
};

// Grammar (whitespace-insensitive; precedence `#` > `;` > `+`):
//   term    := seqsum
//   seqsum  := seqs ('+' seqs)*
//   seqs    := pars (';' pars)*
//   pars    := atom ('#' atom)*
//   atom    := NAT('/'NAT)? '*' atom | primary
//   primary := '(' term ')' | 'id' ('[' object ']')? | 'sym[' object ',' object ']'
//            | 'bang(' term ')' | '0[' object '->' object ']'
//            | NAME ('[' arg (',' arg)* ']')?
//   arg     := object | NAT
//   object  := obj ('*' obj)* ;  obj := 'I' | '!'obj | NAME | '(' object ')'
TermPtr parse_term(const std::string& text);
ObjectExpr parse_object(const std::string& text);

// Canonical printing; parse_term(print_term(t)) reproduces t structurally.
std::string print_term(const TermPtr& t);

}  // namespace calcat
