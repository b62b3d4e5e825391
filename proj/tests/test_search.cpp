#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gmk/search.hpp"

using namespace gmk;

TEST_CASE("model space counting and decoding") {
  ModelSpace one = enumerate_crisp_models(1, 2, {"p"});
  CHECK(one.relation_count() == 2);
  CHECK(one.valuation_count() == 2);
  CHECK(one.count() == 4);

  ModelSpace two = enumerate_crisp_models(2, 2, {"p"});
  CHECK(two.count() == 16 * 4);
  CHECK(two.relation_count() == 16);

  ModelSpace big = enumerate_crisp_models(2, 3, {"p", "q"});
  CHECK(big.count() == 16 * 81);

  // every index decodes to a distinct model, and decoding is stable
  std::set<std::string> seen;
  for (std::uint64_t i = 0; i < big.count(); ++i) {
    KripkeModel m = big.decode(i);
    CHECK(m.is_crisp());
    seen.insert(m.to_json());
  }
  CHECK(seen.size() == big.count());
  CHECK(big.decode(17).to_json() == big.decode(17).to_json());

  CHECK_THROWS(enumerate_crisp_models(5, 6, {"p", "q", "r"}).count()); // over 2^63
}

TEST_CASE("index decomposition follows the documented digit order") {
  ModelSpace s = enumerate_crisp_models(2, 2, {"p"});
  // index 1 flips the least-significant relation digit: entry (w1, w1)
  KripkeModel m = s.decode(1 * s.valuation_count());
  CHECK(m.relation[0][0].is_one());
  CHECK(m.relation[0][1].is_zero());
  // index inside the valuation block flips p at w1 first
  KripkeModel v = s.decode(1);
  CHECK(v.value_of("p", 0).is_one());
  CHECK(v.value_of("p", 1).is_zero());
}

TEST_CASE("countermodel search finds the least witness and replays") {
  SearchBounds b;
  SearchResult r = find_countermodel(parse_formula("[]p -> p"), b);
  REQUIRE(r.found);
  const Counterexample& cex = *r.counterexample;
  CHECK(evaluate(cex.model, cex.world, parse_formula("[]p -> p")) == cex.value);
  CHECK(cex.value < Rational(1));
  // replay from the recorded index
  ModelSpace space = enumerate_crisp_models(cex.num_worlds, b.chain_size,
                                            variables_of(parse_formula("[]p -> p")));
  CHECK(space.decode(cex.model_index).to_json() == cex.model.to_json());

  // serial reference agrees exactly
  SearchResult s = find_countermodel_serial(parse_formula("[]p -> p"), b);
  REQUIRE(s.found);
  CHECK(s.counterexample->num_worlds == cex.num_worlds);
  CHECK(s.counterexample->model_index == cex.model_index);
  CHECK(s.counterexample->model.to_json() == cex.model.to_json());
}

TEST_CASE("valid formulas exhaust the bounded space") {
  SearchBounds b;
  b.max_worlds = 2;
  CHECK(!find_countermodel(parse_formula("[](p -> q) -> ([]p -> []q)"), b).found);
  CHECK(!find_countermodel(parse_formula("p -> p"), b).found);
  CHECK(!find_countermodel_serial(parse_formula("[](p -> q) -> ([]p -> []q)"), b).found);
}

TEST_CASE("valued search separates a crisp-only scheme") {
  Fptr f = parse_formula("[](0 | q) -> ([]0 | <>q)");
  SearchBounds crisp{3, 4, true, 3};
  CHECK(!find_countermodel(f, crisp).found);
  SearchBounds valued{2, 3, false, 3};
  SearchResult r = find_countermodel(f, valued);
  REQUIRE(r.found);
  CHECK(evaluate(r.counterexample->model, r.counterexample->world, f) < Rational(1));
}

TEST_CASE("random model and formula generation are deterministic") {
  KripkeModel a = random_model(3, 4, true, {"p", "q"}, 42);
  KripkeModel b = random_model(3, 4, true, {"p", "q"}, 42);
  CHECK(a.to_json() == b.to_json());
  CHECK(a.to_json() != random_model(3, 4, true, {"p", "q"}, 43).to_json());
  CHECK(equal(random_formula(4, 3, 7), random_formula(4, 3, 7)));
}

TEST_CASE("frame property closure reaches a model satisfying the filter") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    for (FrameFilter filter : std::vector<FrameFilter>{
             {"reflexive"}, {"transitive"}, {"symmetric"}, {"euclidean"}, {"serial"},
             {"reflexive", "transitive"}, {"symmetric", "euclidean", "serial"}}) {
      KripkeModel m = random_model(3, 3, true, {"p"}, seed);
      close_under_frame_properties(m, filter);
      CAPTURE(seed);
      CHECK(satisfies_frame_properties(m, filter));
    }
  }
  // closure only ever adds edges
  KripkeModel m = random_model(3, 3, true, {"p"}, 5);
  KripkeModel c = m;
  close_under_frame_properties(c, {"transitive", "reflexive"});
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(m.relation[i][j] <= c.relation[i][j]);
}

TEST_CASE("fuzzing a sound system reports no violations") {
  AxiomRegistry reg = resolve_system("GKc", {}, Mode::Local);
  SearchBounds b{3, 4, true, 3};
  FuzzReport rep = fuzz_axiom_soundness(reg, {}, 500, 11, b);
  CHECK(rep.iterations == 500);
  CHECK(rep.violations.empty());
}

TEST_CASE("fuzzing an unsound scheme finds replayable violations") {
  std::map<std::string, Fptr> schemes{{"bad", parse_scheme("[]?phi -> ?phi")}};
  SearchBounds b{3, 4, true, 3};
  FuzzReport rep = fuzz_scheme_soundness(schemes, {}, 400, 3, b);
  CHECK(!rep.violations.empty());
  for (const FuzzViolation& v : rep.violations) {
    CHECK(v.scheme == "bad");
    CHECK(evaluate(v.model, v.world, v.instance) == v.value);
    CHECK(v.value < Rational(1));
  }
  // the same scheme is sound once models are forced reflexive
  FuzzReport ref = fuzz_scheme_soundness(schemes, {"reflexive"}, 400, 3, b);
  CHECK(ref.violations.empty());
}

TEST_CASE("fuzz reports are identical for serial and parallel runs") {
  std::map<std::string, Fptr> schemes{{"bad", parse_scheme("<>?phi -> []?phi")}};
  SearchBounds b{3, 3, true, 2};
  FuzzReport par = fuzz_scheme_soundness(schemes, {}, 600, 99, b, /*parallel=*/true);
  FuzzReport ser = fuzz_scheme_soundness(schemes, {}, 600, 99, b, /*parallel=*/false);
  CHECK(par.to_json() == ser.to_json());
  CHECK(!par.violations.empty());
}
