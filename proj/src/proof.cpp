#include "gmk/proof.hpp"

#include <stdexcept>

#include "json.hpp"

namespace gmk {

const std::map<std::string, Fptr>& axiom_scheme_table() {
  static const std::map<std::string, Fptr> table = [] {
    std::map<std::string, Fptr> t;
    auto add = [&](const char* name, const char* text) { t.emplace(name, parse_scheme(text)); };
    add("A1", "?phi -> (?psi -> ?phi)");
    add("A2", "(?phi & ?psi) -> ?phi");
    add("A3", "(?phi & ?psi) -> ?psi");
    add("A4", "?phi -> (?psi -> (?phi & ?psi))");
    add("A5", "(0 -> ?phi) & (?phi -> 1)");
    add("A6", "?phi -> (?phi | ?psi)");
    add("A7", "?psi -> (?phi | ?psi)");
    add("A8", "(?phi -> ?psi) -> ((?chi -> ?phi) -> (?chi -> ?psi))");
    add("A9", "(?phi -> (?psi -> ?chi)) -> (?psi -> (?phi -> ?chi))");
    add("A10", "((?phi -> ?chi) & (?psi -> ?chi)) -> ((?phi | ?psi) -> ?chi)");
    add("A11", "(?phi -> (?psi -> ?chi)) -> ((?phi & ?psi) -> ?chi)");
    add("A12", "((?chi -> ?phi) & (?chi -> ?psi)) -> (?chi -> (?phi & ?psi))");
    add("A13", "(?phi -> (?phi -> ?psi)) -> (?phi -> ?psi)");
    add("A14", "(?phi -> ?psi) | (?psi -> ?phi)");
    add("K_box", "[](?phi -> ?psi) -> ([]?phi -> []?psi)");
    add("K_dia", "<>(?phi | ?psi) -> (<>?phi | <>?psi)");
    add("FS1", "<>(?phi -> ?psi) -> ([]?phi -> <>?psi)");
    add("FS2", "(<>?phi -> []?psi) -> [](?phi -> ?psi)");
    add("F_dia", "~<>0");
    add("P", "[](?phi -> ?psi) -> (<>?phi -> <>?psi)");
    add("Cr", "[](?phi | ?psi) -> ([]?phi | <>?psi)");
    add("Z_box", "~~[]?phi -> []~~?phi");
    add("Z_dia", "<>~~?phi -> ~~<>?phi");
    add("T_box", "[]?phi -> ?phi");
    add("T_dia", "?phi -> <>?phi");
    add("4_box", "[]?phi -> [][]?phi");
    add("4_dia", "<><>?phi -> <>?phi");
    add("B_1", "?phi -> []<>?phi");
    add("B_2", "<>[]?phi -> ?phi");
    add("5_1", "<>?phi -> []<>?phi");
    add("5_2", "<>[]?phi -> []?phi");
    add("D", "<>1");
    add("C", "[]([]?phi | ?psi) -> ([]?phi | []?psi)");
    return t;
  }();
  return table;
}

const std::map<std::string, Fptr>& theorem_scheme_table() {
  static const std::map<std::string, Fptr> table = [] {
    std::map<std::string, Fptr> t;
    auto add = [&](const char* name, const char* text) { t.emplace(name, parse_scheme(text)); };
    add("T1", "[](?phi & ?psi) <-> ([]?phi & []?psi)");
    add("T2", "(([]?phi -> <>?psi) -> <>?psi) -> ([]((?phi -> ?psi) -> ?psi) | <>?psi)");
    add("T3", "([]?phi -> <>?phi) | []0");
    add("T_lt_box",
        "(([]?psi -> []?phi) -> []?phi) -> (([]((?psi -> ?phi) -> ?phi) -> []?phi) -> []?phi)");
    add("T_lt_dia", "((<>?psi -> <>?phi) -> <>?phi) -> <>((?psi -> ?phi) -> ?phi)");
    return t;
  }();
  return table;
}

namespace {

void add_axioms(AxiomRegistry& reg, std::initializer_list<const char*> names) {
  const auto& table = axiom_scheme_table();
  for (const char* n : names) reg.axioms.emplace(n, table.at(n));
}

void add_propositional_base(AxiomRegistry& reg) {
  add_axioms(reg, {"A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "A9", "A10", "A11", "A12",
                   "A13", "A14"});
  reg.rules.insert(Rule::MP);
}

} // namespace

AxiomRegistry resolve_system(const std::string& name, const std::set<std::string>& extensions,
                             Mode mode, std::optional<Presentation> presentation) {
  AxiomRegistry reg;
  reg.name = name;
  reg.mode = mode;
  add_propositional_base(reg);

  if (presentation && name != "GK" && name != "GKc")
    throw std::invalid_argument("presentation option is only meaningful for GK / GKc");

  auto add_gk = [&] {
    add_axioms(reg, {"K_box", "K_dia", "FS2", "F_dia"});
    reg.rules.insert(Rule::NecBox);
    if (presentation.value_or(Presentation::P) == Presentation::FS1) {
      add_axioms(reg, {"FS1"});
      reg.rules.insert(Rule::NecDia);
    } else {
      add_axioms(reg, {"P"});
    }
  };

  if (name == "G") {
    if (!extensions.empty())
      throw std::invalid_argument("system G admits no modal extensions");
  } else if (name == "GK") {
    add_gk();
  } else if (name == "GKc") {
    add_gk();
    add_axioms(reg, {"Cr"});
  } else if (name == "GKc_box") {
    add_axioms(reg, {"K_box", "Z_box"});
    reg.rules.insert(Rule::NecBox);
  } else if (name == "GKc_dia") {
    add_axioms(reg, {"Z_dia", "K_dia", "F_dia"});
    reg.rules.insert(Rule::NecDiaGen);
  } else if (name == "GS5C") {
    add_axioms(reg, {"K_box", "K_dia", "P", "T_box", "T_dia", "5_1", "5_2", "C"});
    reg.rules.insert(Rule::NecBox);
  } else {
    throw std::invalid_argument("unknown system '" + name + "'");
  }

  for (const std::string& ext : extensions) {
    if (ext == "T") add_axioms(reg, {"T_box", "T_dia"});
    else if (ext == "4") add_axioms(reg, {"4_box", "4_dia"});
    else if (ext == "B") add_axioms(reg, {"B_1", "B_2"});
    else if (ext == "5") add_axioms(reg, {"5_1", "5_2"});
    else if (ext == "D") add_axioms(reg, {"D"});
    else throw std::invalid_argument("unknown extension '" + ext + "'");
  }
  return reg;
}

LineVerdict check_line(const AxiomRegistry& reg, const std::vector<Fptr>& premises,
                       const std::vector<ProofLine>& earlier, const std::vector<bool>& earlier_flags,
                       const ProofLine& line) {
  auto fail = [](std::string msg) { return LineVerdict{false, false, std::move(msg)}; };
  auto ref_ok = [&](int r) { return r >= 0 && r < static_cast<int>(earlier.size()); };

  switch (line.just) {
    case ProofLine::Just::Premise: {
      if (line.premise_index < 0 || line.premise_index >= static_cast<int>(premises.size()))
        return fail("premise index out of range");
      if (!equal(line.formula, premises[line.premise_index]))
        return fail("stated formula differs from premise " + std::to_string(line.premise_index));
      return {true, false, ""};
    }
    case ProofLine::Just::Axiom: {
      auto it = reg.axioms.find(line.axiom_name);
      if (it == reg.axioms.end())
        return fail("axiom '" + line.axiom_name + "' not in system " + reg.name);
      Fptr inst;
      try {
        inst = instantiate_scheme(it->second, line.subst);
      } catch (const std::exception& e) {
        return fail(e.what());
      }
      if (!equal(line.formula, inst))
        return fail("stated formula is not the claimed instance of " + line.axiom_name +
                    " (expected " + format_formula(inst) + ")");
      return {true, true, ""};
    }
    case ProofLine::Just::MP: {
      if (!reg.rules.count(Rule::MP)) return fail("rule MP not available");
      if (!ref_ok(line.ref1) || !ref_ok(line.ref2)) return fail("MP reference out of range");
      const Fptr& ant = earlier[line.ref1].formula;
      const Fptr& imp = earlier[line.ref2].formula;
      if (imp->kind != Kind::Implies || !equal(imp->left, ant) || !equal(imp->right, line.formula))
        return fail("MP shape mismatch: line " + std::to_string(line.ref2) +
                    " is not (antecedent -> this line)");
      return {true, earlier_flags[line.ref1] && earlier_flags[line.ref2], ""};
    }
    case ProofLine::Just::NecBox: {
      if (!reg.rules.count(Rule::NecBox)) return fail("rule N_box not available");
      if (!ref_ok(line.ref1)) return fail("N_box reference out of range");
      if (!equal(line.formula, box(earlier[line.ref1].formula)))
        return fail("N_box shape mismatch");
      if (reg.mode == Mode::Local && !earlier_flags[line.ref1])
        return fail("restricted-rule violation: N_box applied to a premise-dependent line in "
                    "local mode");
      bool flag = reg.mode == Mode::Local ? true : earlier_flags[line.ref1];
      return {true, flag, ""};
    }
    case ProofLine::Just::NecDia: {
      if (!reg.rules.count(Rule::NecDia)) return fail("rule N_dia not available");
      if (!ref_ok(line.ref1)) return fail("N_dia reference out of range");
      const Fptr& prev = earlier[line.ref1].formula;
      if (prev->kind != Kind::Implies) return fail("N_dia needs an implication premise line");
      if (!equal(line.formula, implies(dia(prev->left), dia(prev->right))))
        return fail("N_dia shape mismatch");
      if (!earlier_flags[line.ref1])
        return fail("restricted-rule violation: N_dia applied to a premise-dependent line");
      return {true, true, ""};
    }
    case ProofLine::Just::NecDiaGen: {
      if (!reg.rules.count(Rule::NecDiaGen)) return fail("rule Nec_dia not available");
      if (!ref_ok(line.ref1)) return fail("Nec_dia reference out of range");
      const Fptr& prev = earlier[line.ref1].formula;
      // (a -> b) | c  yields  (<>a -> <>b) | <>c
      if (prev->kind != Kind::Or || prev->left->kind != Kind::Implies)
        return fail("Nec_dia needs a premise line of shape (a -> b) | c");
      Fptr expected = disj(implies(dia(prev->left->left), dia(prev->left->right)), dia(prev->right));
      if (!equal(line.formula, expected)) return fail("Nec_dia shape mismatch");
      if (!earlier_flags[line.ref1])
        return fail("restricted-rule violation: Nec_dia applied to a premise-dependent line");
      return {true, true, ""};
    }
  }
  return fail("unknown justification");
}

ProofVerdict check_proof(const ProofScript& script) {
  AxiomRegistry reg;
  try {
    reg = resolve_system(script.system, script.extensions, script.mode, script.presentation);
  } catch (const std::exception& e) {
    return {false, nullptr, false, {{-1, e.what()}}};
  }
  if (script.lines.empty()) return {false, nullptr, false, {{-1, "empty proof"}}};

  std::vector<ProofLine> checked;
  std::vector<bool> flags;
  for (std::size_t i = 0; i < script.lines.size(); ++i) {
    LineVerdict v = check_line(reg, script.premises, checked, flags, script.lines[i]);
    if (!v.ok) return {false, nullptr, false, {{static_cast<int>(i), v.diagnostic}}};
    checked.push_back(script.lines[i]);
    flags.push_back(v.theorem_flag);
  }
  return {true, checked.back().formula, !flags.back(), std::nullopt};
}

// ---------------------------------------------------------------------------
// JSON proof scripts
// ---------------------------------------------------------------------------

ProofScript ProofScript::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  ProofScript s;
  s.system = j.value("system", std::string("GKc"));
  if (j.contains("presentation")) {
    std::string pres = j.at("presentation").get<std::string>();
    if (pres == "FS1") s.presentation = Presentation::FS1;
    else if (pres == "P") s.presentation = Presentation::P;
    else throw std::invalid_argument("unknown presentation '" + pres + "'");
  }
  std::string mode = j.value("mode", std::string("local"));
  if (mode == "local") s.mode = Mode::Local;
  else if (mode == "global") s.mode = Mode::Global;
  else throw std::invalid_argument("unknown mode '" + mode + "'");
  if (j.contains("extensions"))
    for (const auto& e : j.at("extensions")) s.extensions.insert(e.get<std::string>());
  if (j.contains("premises"))
    for (const auto& p : j.at("premises")) s.premises.push_back(parse_formula(p.get<std::string>()));
  for (const auto& jl : j.at("lines")) {
    ProofLine line;
    line.formula = parse_formula(jl.at("formula").get<std::string>());
    std::string rule = jl.at("rule").get<std::string>();
    if (rule == "premise") {
      line.just = ProofLine::Just::Premise;
      line.premise_index = jl.at("index").get<int>();
    } else if (rule == "axiom") {
      line.just = ProofLine::Just::Axiom;
      line.axiom_name = jl.at("name").get<std::string>();
      if (jl.contains("subst"))
        for (const auto& [mv, tf] : jl.at("subst").items())
          line.subst.emplace(mv, parse_formula(tf.get<std::string>()));
    } else {
      if (rule == "mp") line.just = ProofLine::Just::MP;
      else if (rule == "nec_box") line.just = ProofLine::Just::NecBox;
      else if (rule == "nec_dia") line.just = ProofLine::Just::NecDia;
      else if (rule == "nec_dia_gen") line.just = ProofLine::Just::NecDiaGen;
      else throw std::invalid_argument("unknown rule '" + rule + "'");
      const auto& refs = jl.at("refs");
      line.ref1 = refs.at(0).get<int>();
      if (line.just == ProofLine::Just::MP) line.ref2 = refs.at(1).get<int>();
    }
    s.lines.push_back(std::move(line));
  }
  return s;
}

} // namespace gmk
