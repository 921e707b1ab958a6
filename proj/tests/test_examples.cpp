#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "symgraph/errors.hpp"
#include "symgraph/examples.hpp"
#include "symgraph/group_ops.hpp"
#include "symgraph/io.hpp"

using namespace symgraph;

namespace {

const ClaimResult& claim(const VerificationOutcome& o, const std::string& name) {
  for (const auto& c : o.claims)
    if (c.name == name) return c;
  throw std::runtime_error("missing claim " + name);
}

std::string golden(const std::string& file) {
  return read_text_file(std::string(GOLDEN_DIR) + "/" + file);
}

}  // namespace

TEST_CASE("catalog ids") {
  auto ids = example_ids();
  CHECK(ids == std::vector<std::string>{"ex-5.1.1", "ex-5.1.2", "ex-5.1.3", "ex-5.2.1",
                                        "ex-5.2.2", "complete-7"});
  for (const auto& id : ids) CHECK(is_example_id(id));
  CHECK(is_example_id("complete-3"));
  CHECK(is_example_id("complete-12"));
  CHECK_FALSE(is_example_id(""));
  CHECK_FALSE(is_example_id("ex-5.3.1"));
  CHECK_FALSE(is_example_id("complete-"));
  CHECK_FALSE(is_example_id("complete-abc"));
  CHECK_FALSE(is_example_id("Complete-7"));
}

TEST_CASE("bad construction requests") {
  CHECK_THROWS_AS(construct_example("nope"), InvalidInput);
  CHECK_THROWS_AS(construct_example("complete-2"), InvalidInput);
  CHECK_THROWS_AS(construct_example("complete-13"), InvalidInput);
  CHECK_THROWS_AS(verify_example("nope"), InvalidInput);
}

TEST_CASE("construction digest of the 21-vertex instance") {
  ConstructedExample ex = construct_example("ex-5.2.1");
  CHECK(ex.id == "ex-5.2.1");
  CHECK(ex.graph.n == 21);
  CHECK(ex.graph.edges.size() == 42);
  CHECK(ex.graph.regular_valency() == 4);
  CHECK(ex.graph.connected());
  CHECK(ex.group.degree() == 21);
  CHECK(ex.group.order() == 336);
  CHECK(ex.group_name == "PGL(2,7)");
  REQUIRE(ex.socle.has_value());
  CHECK(ex.socle->order() == 168);
  CHECK(ex.socle_name == "PSL(2,7)");
  CHECK(is_normal_in(*ex.socle, ex.group));
  CHECK(ex.x_candidate_count == 4);
  REQUIRE(ex.geometry.has_value());
  CHECK(ex.geometry->coset_count() == 21);
  CHECK(ex.geometry->subgroup_elements.size() == 16);
}

TEST_CASE("construction digest of the complete family") {
  ConstructedExample ex = construct_example("complete-7");
  CHECK(ex.graph.n == 7);
  CHECK(ex.graph.edges.size() == 21);
  CHECK(ex.group.order() == 5040);
  CHECK(ex.group_name == "S7");
  CHECK_FALSE(ex.socle.has_value());
  CHECK_FALSE(ex.geometry.has_value());
  CHECK(ex.x_candidate_count == 0);
}

TEST_CASE("verification verdicts on the fast instances") {
  for (const char* id : {"ex-5.2.1", "ex-5.2.2", "ex-5.1.2", "ex-5.1.3", "complete-7"}) {
    VerificationOutcome o = verify_example(id);
    INFO("id=", id);
    CHECK(o.all_pass);
    CHECK_FALSE(o.claims.empty());
    for (const auto& c : o.claims) {
      INFO("claim=", c.name, " expected=", c.expected, " actual=", c.actual);
      CHECK(c.pass);
    }
  }
}

TEST_CASE("claim details of the 21-vertex instance") {
  VerificationOutcome o = verify_example("ex-5.2.1");
  CHECK(o.n == 21);
  CHECK(o.edge_count == 42);
  CHECK(o.group_order == 336);
  CHECK(o.x_candidate_count == 4);
  CHECK(claim(o, "valency").expected == "4");
  CHECK(claim(o, "group-order").actual == "336");
  CHECK(claim(o, "not-two-arc-transitive").pass);
  CHECK(claim(o, "primitive").pass);
  CHECK(claim(o, "socle-edge-orbits").expected == "2");
  CHECK(claim(o, "socle-half-0").actual == "7 x cycle(3), valency 2");
  CHECK(claim(o, "socle-half-1").actual == "7 x cycle(3), valency 2");
  CHECK(claim(o, "automorphism-order").expected == "336");
  CHECK(claim(o, "automorphisms-equal-action").pass);
}

TEST_CASE("claim details of the paired and edge-transitive instances") {
  VerificationOutcome a = verify_example("ex-5.1.2");
  CHECK(a.n == 55);
  CHECK(claim(a, "socle-arc-orbits").actual == "2");
  CHECK(claim(a, "socle-self-paired-orbits").actual == "0");
  CHECK(claim(a, "socle-mutual-orbit-pairs").actual == "1");

  VerificationOutcome b = verify_example("ex-5.1.3");
  CHECK(b.n == 408);
  CHECK(claim(b, "socle-edge-orbits").actual == "2");
  CHECK(claim(b, "socle-half-0").actual == "102 x complete(4), valency 3");
}

TEST_CASE("outcome text is run-independent") {
  VerificationOutcome one = verify_example("ex-5.2.1");
  VerificationOutcome two = verify_example("ex-5.2.1");
  CHECK(one.elapsed_ms >= 0);
  const std::string t1 = outcome_to_text(one);
  CHECK(t1 == outcome_to_text(two));
  CHECK(t1.find("elapsed") == std::string::npos);
  CHECK(t1.back() == '\n');
}

TEST_CASE("choice sweep of the 21-vertex instance") {
  ChoiceSweep sweep = verify_example_choices("ex-5.2.1");
  CHECK(sweep.choice_count == 4);
  CHECK(sweep.outcomes_agree);
  REQUIRE(sweep.outcomes.size() == 4);
  for (const auto& o : sweep.outcomes) CHECK(o.all_pass);
  const std::string text = sweep_to_text(sweep);
  CHECK(text.find("\"choice_count\"") != std::string::npos);
  CHECK(sweep_to_text(sweep) == text);
}

TEST_CASE("construction artifacts match the committed goldens") {
  ConstructedExample ex = construct_example("ex-5.2.1");
  CHECK(graph_to_text(ex.graph, ex.group.generators()) == golden("ex-5.2.1.graph.json"));
  CHECK(group_to_text(ex.group) == golden("ex-5.2.1.group.json"));
  CHECK(group_to_text(*ex.socle) == golden("ex-5.2.1.socle.json"));
  CHECK(geometry_to_text(*ex.geometry) == golden("ex-5.2.1.geometry.json"));
}

TEST_CASE("verification outcomes match the committed goldens") {
  CHECK(outcome_to_text(verify_example("ex-5.2.1")) == golden("ex-5.2.1.outcome.json"));
  CHECK(outcome_to_text(verify_example("ex-5.1.2")) == golden("ex-5.1.2.outcome.json"));
  CHECK(outcome_to_text(verify_example("complete-7")) == golden("complete-7.outcome.json"));
}
