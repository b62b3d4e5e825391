// gmk — exact-arithmetic toolkit for bi-modal Goedel logic over crisp
// Kripke models.  One subcommand per capability; --json switches every
// command to machine-readable output.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "gmk/algebra.hpp"
#include "gmk/formula.hpp"
#include "gmk/model.hpp"
#include "gmk/proof.hpp"
#include "gmk/search.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t next = s.find(sep, pos);
    out.push_back(s.substr(pos, next == std::string::npos ? std::string::npos : next - pos));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  if (out.size() == 1 && out[0].empty()) out.clear();
  return out;
}

gmk::FrameFilter filter_for_extensions(const std::set<std::string>& exts) {
  gmk::FrameFilter f;
  for (const std::string& e : exts) {
    if (e == "T") f.insert("reflexive");
    else if (e == "4") f.insert("transitive");
    else if (e == "B") f.insert("symmetric");
    else if (e == "5") f.insert("euclidean");
    else if (e == "D") f.insert("serial");
  }
  return f;
}

struct Options {
  std::string model_path, frame_path, formula, world, premises, system = "GKc";
  std::string presentation, extensions, generators, ops = "box,dia", mode = "local";
  std::string filter, theorems, proof_path;
  int max_worlds = 3, chain = 3, jobs = 0;
  std::uint64_t iters = 1000, seed = 0;
  bool valued = false, json = false;
  bool seed_given = false;
};

gmk::Mode parse_mode(const std::string& m) {
  if (m == "local") return gmk::Mode::Local;
  if (m == "global") return gmk::Mode::Global;
  throw CLI::ValidationError("--mode must be local or global");
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"gmk: Goedel modal logic toolkit (crisp Kripke models, exact rationals)"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "machine-readable output");
  app.add_option("--jobs", o.jobs, "worker threads (0 = library default)");

  auto* cmd_parse = app.add_subcommand("parse", "parse and reprint a formula");
  cmd_parse->add_option("--formula", o.formula)->required();

  auto* cmd_eval = app.add_subcommand("eval", "evaluate a formula at a world");
  cmd_eval->add_option("--model", o.model_path)->required();
  cmd_eval->add_option("--world", o.world)->required();
  cmd_eval->add_option("--formula", o.formula)->required();

  auto* cmd_entail = app.add_subcommand("entail", "local/global consequence over a model");
  cmd_entail->add_option("--model", o.model_path)->required();
  cmd_entail->add_option("--premises", o.premises);
  cmd_entail->add_option("--formula", o.formula)->required();
  cmd_entail->add_option("--mode", o.mode);

  auto* cmd_vp = app.add_subcommand("valid-prop", "propositional Goedel validity");
  cmd_vp->add_option("formula", o.formula)->required();

  auto* cmd_cm = app.add_subcommand("countermodel", "bounded counter-model search");
  cmd_cm->add_option("--formula", o.formula)->required();
  cmd_cm->add_option("--max-worlds", o.max_worlds);
  cmd_cm->add_option("--chain", o.chain);
  cmd_cm->add_flag("--valued", o.valued, "search [0,1]-valued relations too");

  auto* cmd_cp = app.add_subcommand("check-proof", "check a Hilbert proof script");
  cmd_cp->add_option("script", o.proof_path)->required();

  auto* cmd_fuzz = app.add_subcommand("fuzz", "soundness fuzzing of an axiom system");
  cmd_fuzz->add_option("--system", o.system);
  cmd_fuzz->add_option("--presentation", o.presentation);
  cmd_fuzz->add_option("--extensions", o.extensions);
  cmd_fuzz->add_option("--mode", o.mode);
  cmd_fuzz->add_option("--filter", o.filter, "frame properties (default: derived from extensions)");
  cmd_fuzz->add_option("--theorems", o.theorems, "fuzz these theorem schemes instead (e.g. T1,T3)");
  cmd_fuzz->add_option("--iters", o.iters);
  cmd_fuzz->add_option("--seed", o.seed)->required();
  cmd_fuzz->add_option("--max-worlds", o.max_worlds);
  cmd_fuzz->add_option("--chain", o.chain);

  auto* cmd_alg = app.add_subcommand("algebra", "generated subalgebra of a complex algebra");
  cmd_alg->add_option("--frame", o.frame_path)->required();
  cmd_alg->add_option("--generators", o.generators, "elements 'a,b,c;d,e,f' (coords per world)");
  cmd_alg->add_option("--ops", o.ops, "modal ops in the closure: box,dia");

  auto* cmd_opt = app.add_subcommand("optimal", "R+ extension and optimality of a crisp model");
  cmd_opt->add_option("--model", o.model_path)->required();

  auto* cmd_fr = app.add_subcommand("frame-check", "frame properties / scheme correspondences");
  cmd_fr->add_option("--model", o.model_path)->required();

  auto* cmd_nd = app.add_subcommand("nondef", "modal non-interdefinability witnesses");
  cmd_nd->add_option("--frame", o.frame_path)->required();
  cmd_nd->add_option("--generators", o.generators)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

#ifdef _OPENMP
  if (o.jobs > 0) omp_set_num_threads(o.jobs);
#endif

  using nlohmann::json;
  try {
    if (cmd_parse->parsed()) {
      gmk::Fptr f = gmk::parse_formula(o.formula);
      if (o.json) std::cout << json{{"formula", gmk::format_formula(f)}}.dump() << "\n";
      else std::cout << gmk::format_formula(f) << "\n";
      return 0;
    }

    if (cmd_eval->parsed()) {
      gmk::KripkeModel m = gmk::KripkeModel::from_json(slurp(o.model_path));
      gmk::Rational v = gmk::evaluate(m, o.world, gmk::parse_formula(o.formula));
      if (o.json) std::cout << json{{"value", v.str()}}.dump() << "\n";
      else std::cout << v.str() << "\n";
      return 0;
    }

    if (cmd_entail->parsed()) {
      gmk::KripkeModel m = gmk::KripkeModel::from_json(slurp(o.model_path));
      std::vector<gmk::Fptr> premises;
      for (const std::string& p : split(o.premises, ','))
        premises.push_back(gmk::parse_formula(p));
      gmk::Fptr f = gmk::parse_formula(o.formula);
      gmk::EntailmentVerdict v = parse_mode(o.mode) == gmk::Mode::Local
                                     ? gmk::local_consequence(m, premises, f)
                                     : gmk::global_consequence(m, premises, f);
      if (o.json) {
        json j{{"holds", v.holds}};
        if (v.witness) j["witness"] = {{"world", v.witness->first}, {"value", v.witness->second.str()}};
        std::cout << j.dump() << "\n";
      } else if (v.holds) {
        std::cout << "holds\n";
      } else {
        std::cout << "refuted: world " << v.witness->first << ", conclusion value "
                  << v.witness->second.str() << "\n";
      }
      return v.holds ? 0 : 1;
    }

    if (cmd_vp->parsed()) {
      gmk::PropVerdict v = gmk::decide_prop_validity(gmk::parse_formula(o.formula));
      if (o.json) {
        json j{{"valid", v.valid}};
        if (!v.valid) {
          json cv;
          for (const auto& [var, val] : v.countervaluation) cv[var] = val.str();
          j["countervaluation"] = cv;
          j["value"] = v.counter_value.str();
        }
        std::cout << j.dump() << "\n";
      } else if (v.valid) {
        std::cout << "valid\n";
      } else {
        std::cout << "invalid:";
        for (const auto& [var, val] : v.countervaluation)
          std::cout << " " << var << "=" << val.str();
        std::cout << " (value " << v.counter_value.str() << ")\n";
      }
      return v.valid ? 0 : 1;
    }

    if (cmd_cm->parsed()) {
      gmk::SearchBounds b{o.max_worlds, o.chain, !o.valued, 3};
      gmk::SearchResult r = gmk::find_countermodel(gmk::parse_formula(o.formula), b);
      if (r.found) {
        const auto& cex = *r.counterexample;
        if (o.json) {
          json j{{"outcome", "counterexample"},
                 {"world", cex.world},
                 {"value", cex.value.str()},
                 {"model", json::parse(cex.model.to_json())}};
          std::cout << j.dump(2) << "\n";
        } else {
          std::cout << "counterexample: value " << cex.value.str() << " at world " << cex.world
                    << "\n" << cex.model.to_json() << "\n";
        }
        return 1;
      }
      if (o.json) {
        json j{{"outcome", "exhausted"},
               {"note", "bounded search only; validity is NOT established"},
               {"max_worlds", b.max_worlds},
               {"chain", b.chain_size},
               {"crisp", b.crisp}};
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "exhausted within bounds (worlds <= " << b.max_worlds << ", chain "
                  << b.chain_size << (b.crisp ? ", crisp" : ", valued") << ").\n"
                  << "Note: this semantics lacks the finite model property; bounded search\n"
                  << "cannot establish validity.\n";
      }
      return 0;
    }

    if (cmd_cp->parsed()) {
      gmk::ProofScript s = gmk::ProofScript::from_json(slurp(o.proof_path));
      gmk::ProofVerdict v = gmk::check_proof(s);
      if (o.json) {
        json j{{"ok", v.ok}};
        if (v.ok) {
          j["conclusion"] = gmk::format_formula(v.conclusion);
          j["premise_dependent"] = v.premise_dependent;
        } else {
          j["error_line"] = v.first_error->first;
          j["error"] = v.first_error->second;
        }
        std::cout << j.dump() << "\n";
      } else if (v.ok) {
        std::cout << "ok: conclusion " << gmk::format_formula(v.conclusion)
                  << (v.premise_dependent ? " (from premises)" : " (theorem)") << "\n";
      } else {
        std::cout << "rejected at line " << v.first_error->first << ": " << v.first_error->second
                  << "\n";
      }
      return v.ok ? 0 : 1;
    }

    if (cmd_fuzz->parsed()) {
      std::set<std::string> exts;
      for (const std::string& e : split(o.extensions, ',')) exts.insert(e);
      gmk::FrameFilter filter = filter_for_extensions(exts);
      for (const std::string& p : split(o.filter, ',')) filter.insert(p);
      gmk::SearchBounds b{o.max_worlds > 4 ? o.max_worlds : 4, o.chain > 6 ? o.chain : 6, true, 3};
      gmk::FuzzReport rep;
      if (!o.theorems.empty()) {
        std::map<std::string, gmk::Fptr> schemes;
        const auto& table = gmk::theorem_scheme_table();
        for (const std::string& t : split(o.theorems, ',')) schemes.emplace(t, table.at(t));
        rep = gmk::fuzz_scheme_soundness(schemes, filter, o.iters, o.seed, b);
      } else {
        std::optional<gmk::Presentation> pres;
        if (o.presentation == "FS1") pres = gmk::Presentation::FS1;
        else if (o.presentation == "P") pres = gmk::Presentation::P;
        gmk::AxiomRegistry reg = gmk::resolve_system(o.system, exts, parse_mode(o.mode), pres);
        rep = gmk::fuzz_axiom_soundness(reg, filter, o.iters, o.seed, b);
      }
      if (o.json) std::cout << rep.to_json() << "\n";
      else std::cout << rep.violations.size() << " violation(s) in " << rep.iterations
                     << " iterations\n";
      return rep.violations.empty() ? 0 : 1;
    }

    if (cmd_alg->parsed()) {
      gmk::CrispFrame frame = gmk::CrispFrame::from_json(slurp(o.frame_path));
      std::vector<gmk::AlgebraElement> gens;
      for (const std::string& g : split(o.generators, ';')) gens.push_back(gmk::parse_element(g));
      std::set<gmk::AlgOp> ops;
      for (const std::string& op : split(o.ops, ',')) {
        if (op == "box") ops.insert(gmk::AlgOp::Box);
        else if (op == "dia") ops.insert(gmk::AlgOp::Dia);
        else throw std::runtime_error("unknown op '" + op + "'");
      }
      gmk::SubalgebraClosure c = gmk::generate_subalgebra(frame, gens, ops);
      if (o.json) {
        json j;
        json elems = json::array();
        for (const auto& e : c.elements)
          elems.push_back({{"element", gmk::format_element(e)}, {"trace", c.traces.at(e)}});
        j["size"] = c.elements.size();
        j["elements"] = elems;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << c.elements.size() << " elements:\n";
        for (const auto& e : c.elements)
          std::cout << "  <" << gmk::format_element(e) << ">  via  " << c.traces.at(e) << "\n";
      }
      return 0;
    }

    if (cmd_opt->parsed()) {
      gmk::KripkeModel m = gmk::KripkeModel::from_json(slurp(o.model_path));
      gmk::OptimalModelReport rep = gmk::compute_R_plus(m);
      if (o.json) {
        json j;
        json pairs = json::array();
        for (const auto& [a, b] : rep.r_plus) pairs.push_back({a, b});
        j["r_plus"] = pairs;
        j["optimal"] = rep.is_optimal;
        j["subalgebra_size"] = rep.subalgebra.elements.size();
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "R+ =";
        for (const auto& [a, b] : rep.r_plus) std::cout << " (" << a << "," << b << ")";
        std::cout << "\noptimal: " << (rep.is_optimal ? "yes" : "no") << "\n";
      }
      return 0;
    }

    if (cmd_fr->parsed()) {
      gmk::KripkeModel m = gmk::KripkeModel::from_json(slurp(o.model_path));
      gmk::FrameReport rep = gmk::frame_report(m);
      if (o.json) {
        std::cout << rep.to_json() << "\n";
      } else {
        std::cout << "properties:";
        for (const auto& [k, v] : rep.properties) std::cout << " " << k << "=" << (v ? "yes" : "no");
        std::cout << "\nschemes:";
        for (const auto& [k, v] : rep.scheme_validity)
          std::cout << " " << k << "=" << (v ? "valid" : "invalid");
        std::cout << "\noptimal: " << (rep.is_optimal ? "yes" : "no") << "\ncorrespondence:";
        for (const auto& [k, v] : rep.correspondence) std::cout << " " << k << "=" << (v ? "ok" : "FAIL");
        std::cout << "\n";
      }
      return 0;
    }

    if (cmd_nd->parsed()) {
      gmk::CrispFrame frame = gmk::CrispFrame::from_json(slurp(o.frame_path));
      gmk::AlgebraElement g = gmk::parse_element(o.generators);
      gmk::NondefinabilityReport rep = gmk::nondefinability_report(frame, g);
      if (o.json) {
        std::cout << rep.to_json() << "\n";
      } else {
        std::cout << "dia-closure size " << rep.dia_closure.elements.size() << ", box-closure size "
                  << rep.box_closure.elements.size() << "\n"
                  << "box(g) = <" << gmk::format_element(rep.box_of_generator) << "> "
                  << (rep.box_escapes_dia_closure ? "escapes" : "stays inside") << " the dia-closure\n"
                  << "dia(g) = <" << gmk::format_element(rep.dia_of_generator) << "> "
                  << (rep.dia_escapes_box_closure ? "escapes" : "stays inside") << " the box-closure\n"
                  << (rep.box_escapes_dia_closure || rep.dia_escapes_box_closure
                          ? "non-definability witnessed\n"
                          : "no witness on this frame/generator\n");
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
