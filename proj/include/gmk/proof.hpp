#ifndef GMK_PROOF_HPP
#define GMK_PROOF_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gmk/formula.hpp"

namespace gmk {

enum class Rule { MP, NecBox, NecDia, NecDiaGen };
enum class Mode { Local, Global };
enum class Presentation { FS1, P };

// Named axiom schemes of all systems in play, keyed by the names used in
// proof scripts (A1..A14, K_box, K_dia, FS1, FS2, F_dia, P, Cr, Z_box,
// Z_dia, T_box, T_dia, 4_box, 4_dia, B_1, B_2, 5_1, 5_2, D, C).
const std::map<std::string, Fptr>& axiom_scheme_table();
// Derived theorems used by the semantic fuzz suites: T1, T2, T3,
// T_lt_box, T_lt_dia.
const std::map<std::string, Fptr>& theorem_scheme_table();

struct AxiomRegistry {
  std::string name;
  std::map<std::string, Fptr> axioms;
  std::set<Rule> rules;
  Mode mode = Mode::Local;
};

// name in {G, GK, GKc, GKc_box, GKc_dia, GS5C}; extensions subset of
// {T, 4, B, 5, D}.  NecBox is restricted to theorem lines in local mode
// and unrestricted in global mode; NecDia exists only under the FS1
// presentation of GK/GKc; NecDiaGen only in GKc_dia.  The presentation
// option applies to GK/GKc only (default P) and is rejected elsewhere.
AxiomRegistry resolve_system(const std::string& name, const std::set<std::string>& extensions,
                             Mode mode, std::optional<Presentation> presentation = std::nullopt);

struct ProofLine {
  enum class Just { Premise, Axiom, MP, NecBox, NecDia, NecDiaGen };
  Just just;
  Fptr formula;
  int premise_index = -1;     // Premise
  std::string axiom_name;     // Axiom
  Substitution subst;         // Axiom
  int ref1 = -1, ref2 = -1;   // MP(antecedent, implication) / Nec*(ref1)
};

struct ProofScript {
  std::string system = "GKc";
  std::optional<Presentation> presentation; // GK/GKc only; defaults to P
  Mode mode = Mode::Local;
  std::set<std::string> extensions;
  std::vector<Fptr> premises;
  std::vector<ProofLine> lines;

  static ProofScript from_json(const std::string& text);
};

struct LineVerdict {
  bool ok = false;
  bool theorem_flag = false; // true iff the line depends on no premise
  std::string diagnostic;
};

LineVerdict check_line(const AxiomRegistry& reg, const std::vector<Fptr>& premises,
                       const std::vector<ProofLine>& earlier, const std::vector<bool>& earlier_flags,
                       const ProofLine& line);

struct ProofVerdict {
  bool ok = false;
  Fptr conclusion;
  bool premise_dependent = false;
  std::optional<std::pair<int, std::string>> first_error; // line index, message
};

ProofVerdict check_proof(const ProofScript& script);

} // namespace gmk

#endif
