#ifndef GMK_ALGEBRA_HPP
#define GMK_ALGEBRA_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gmk/model.hpp"

namespace gmk {

struct CrispFrame {
  std::vector<std::string> worlds;
  std::vector<std::vector<bool>> relation;

  static CrispFrame empty(std::vector<std::string> world_ids);
  static CrispFrame of_model(const KripkeModel& m); // throws on non-crisp models
  std::size_t size() const { return worlds.size(); }

  std::string to_json() const;
  static CrispFrame from_json(const std::string& text);
};

// An element of the complex algebra of a frame: one truth value per world.
using AlgebraElement = std::vector<Rational>;

AlgebraElement complex_box(const CrispFrame& frame, const AlgebraElement& g);
AlgebraElement complex_dia(const CrispFrame& frame, const AlgebraElement& g);
AlgebraElement complex_op(const CrispFrame& frame, const std::string& op,
                          const AlgebraElement& g);

enum class AlgOp { And, Or, Implies, Box, Dia };

struct SubalgebraClosure {
  std::vector<AlgebraElement> generators;
  std::set<AlgOp> op_set;
  // canonical (lexicographic) order
  std::vector<AlgebraElement> elements;
  // one witnessing term per element, over g1, g2, ... and the formula grammar
  std::map<AlgebraElement, std::string> traces;

  bool contains(const AlgebraElement& e) const;
};

// Least set containing the generators and the constant 0 / 1 tuples,
// closed under pointwise and/or/implies plus the modal ops in op_set.
SubalgebraClosure generate_subalgebra(const CrispFrame& frame,
                                      const std::vector<AlgebraElement>& generators,
                                      const std::set<AlgOp>& op_set);

struct NondefinabilityReport {
  SubalgebraClosure dia_closure; // generated with {dia}
  SubalgebraClosure box_closure; // generated with {box}
  AlgebraElement box_of_generator;
  AlgebraElement dia_of_generator;
  bool box_escapes_dia_closure = false;
  bool dia_escapes_box_closure = false;
  std::string to_json() const;
};

NondefinabilityReport nondefinability_report(const CrispFrame& frame,
                                             const AlgebraElement& generator);

struct OptimalModelReport {
  std::vector<std::pair<std::string, std::string>> r_plus; // world id pairs
  SubalgebraClosure subalgebra; // valuation rows closed under all five ops
  bool is_optimal = false;
};

// The largest relation leaving all evaluations unchanged, computed by
// ranging over the generated modal subalgebra of the valuation rows.
OptimalModelReport compute_R_plus(const KripkeModel& m);
KripkeModel optimal_extension(const KripkeModel& m); // m with R replaced by R+

// Scheme validity on a crisp model, with metavariables ranging over the
// generated modal subalgebra of the valuation rows.
bool validates_scheme(const KripkeModel& m, const Fptr& scheme);

struct FrameReport {
  std::map<std::string, bool> properties;      // reflexive, ... , serial
  std::map<std::string, bool> scheme_validity; // T_box, ..., D
  bool is_optimal = false;
  // property name -> biconditional (property <-> scheme pair valid); only
  // filled when the model is optimal, except seriality which always is
  std::map<std::string, bool> correspondence;
  std::string to_json() const;
};

FrameReport frame_report(const KripkeModel& m);

std::string format_element(const AlgebraElement& e);
AlgebraElement parse_element(const std::string& text); // "0,1/2,1/3"

} // namespace gmk

#endif
