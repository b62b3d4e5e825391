#ifndef GMK_FORMULA_HPP
#define GMK_FORMULA_HPP

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace gmk {

// Bi-modal formulas over &, |, ->, [] and <> with constant 0 (falsum).
// Derived connectives (1, ~, <->) are expanded by the constructors /
// parser and never appear as distinct node kinds.  Meta nodes occur only
// inside axiom schemes, where they stand for arbitrary subformulas.
enum class Kind { Bottom, Var, And, Or, Implies, Box, Dia, Meta };

struct Formula;
using Fptr = std::shared_ptr<const Formula>;

struct Formula {
  Kind kind;
  std::string name; // Var / Meta only
  Fptr left;        // And/Or/Implies left, Box/Dia inner
  Fptr right;       // And/Or/Implies right
  std::size_t hash;
};

Fptr bottom();
Fptr top(); // 0 -> 0
Fptr var(const std::string& name);
Fptr meta(const std::string& name);
Fptr conj(Fptr l, Fptr r);
Fptr disj(Fptr l, Fptr r);
Fptr implies(Fptr l, Fptr r);
Fptr negation(Fptr f); // f -> 0
Fptr iff(Fptr l, Fptr r);
Fptr box(Fptr f);
Fptr dia(Fptr f);

bool equal(const Fptr& a, const Fptr& b);
// total order on formulas, used for deterministic sets
int compare(const Fptr& a, const Fptr& b);

struct FormulaLess {
  bool operator()(const Fptr& a, const Fptr& b) const { return compare(a, b) < 0; }
};
using FormulaSet = std::set<Fptr, FormulaLess>;

bool contains_modal(const Fptr& f);
bool contains_meta(const Fptr& f);
void collect_vars(const Fptr& f, std::set<std::string>& out);
std::vector<std::string> variables_of(const Fptr& f);

struct ParseError : std::runtime_error {
  std::size_t position;
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

// Concrete syntax: atoms 0, 1, identifiers; unary ~ [] <>; binary & | -> <->.
// Unary binds tightest, then &, then |, then -> (right-assoc), then <->
// (right-assoc, loosest).  allow_meta additionally accepts ?name leaves.
Fptr parse_formula(const std::string& text, bool allow_meta = false);
Fptr parse_scheme(const std::string& text);

// Minimal-parenthesization printer; parse_formula(format_formula(f)) == f.
// Implies(x, 0) prints as ~x, Implies(0, 0) as 1.
std::string format_formula(const Fptr& f);

// Subformula closure, always containing 0 and 1.
FormulaSet subformulas(const Fptr& f);

using Substitution = std::map<std::string, Fptr>;

// First-order pattern matching: metavariables bind whole subformulas.
std::optional<Substitution> match_scheme(const Fptr& scheme, const Fptr& f);
// Simultaneous replacement; throws if a metavariable of the scheme is unbound.
Fptr instantiate_scheme(const Fptr& scheme, const Substitution& subst);

// {[]^k g : g in gamma, 0 <= k <= depth}
FormulaSet box_prefix_set(const FormulaSet& gamma, int depth);

} // namespace gmk

#endif
