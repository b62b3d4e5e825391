#ifndef GMK_MODEL_HPP
#define GMK_MODEL_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gmk/formula.hpp"
#include "gmk/rational.hpp"

namespace gmk {

// Finite Goedel-Kripke model: worlds in declaration order, a [0,1]-valued
// accessibility relation and a [0,1]-valued valuation.  Variables absent
// from the valuation are 0 at every world.
struct KripkeModel {
  std::vector<std::string> worlds;
  std::vector<std::vector<Rational>> relation;        // worlds x worlds, default 0
  std::map<std::string, std::vector<Rational>> valuation; // var -> value per world

  static KripkeModel empty(std::vector<std::string> world_ids);

  std::size_t size() const { return worlds.size(); }
  int world_index(const std::string& id) const; // throws on unknown id
  bool is_crisp() const;
  Rational value_of(const std::string& var, int w) const;
  void set_value(const std::string& var, int w, const Rational& v);

  std::string to_json() const;
  static KripkeModel from_json(const std::string& text);
};

Rational evaluate(const KripkeModel& m, int world, const Fptr& f);
Rational evaluate(const KripkeModel& m, const std::string& world, const Fptr& f);
// the evaluation row of f: one value per world
std::vector<Rational> evaluate_row(const KripkeModel& m, const Fptr& f);

bool valid_in_model(const KripkeModel& m, const Fptr& f);

struct EntailmentVerdict {
  bool holds = true;
  std::optional<std::pair<std::string, Rational>> witness; // world, conclusion value
};

EntailmentVerdict local_consequence(const KripkeModel& m, const std::vector<Fptr>& premises,
                                    const Fptr& conclusion);
EntailmentVerdict global_consequence(const KripkeModel& m, const std::vector<Fptr>& premises,
                                     const Fptr& conclusion);

struct PropVerdict {
  bool valid = true;
  std::map<std::string, Rational> countervaluation; // refuting assignment when invalid
  Rational counter_value;                           // value of the formula under it
};

// Validity over the standard Goedel algebra, decided on the chain of
// n + 2 equally spaced points for a formula with n variables.  Throws if
// the formula contains a modal operator.
PropVerdict decide_prop_validity(const Fptr& f);
// same check over an explicitly sized chain (>= 2 points); used as oracle
PropVerdict decide_prop_validity_on_chain(const Fptr& f, int chain_points);

// Replace every relation / valuation value v by sigma(v).  sigma must be
// total on the occurring values, strictly increasing, and fix 0 and 1.
KripkeModel rescale_model(const KripkeModel& m, const std::map<Rational, Rational>& sigma);

} // namespace gmk

#endif
