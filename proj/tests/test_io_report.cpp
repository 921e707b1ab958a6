#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <json.hpp>
#include <string>
#include <vector>

#include "symgraph/catalog.hpp"
#include "symgraph/coset.hpp"
#include "symgraph/errors.hpp"
#include "symgraph/graph.hpp"
#include "symgraph/group_ops.hpp"
#include "symgraph/io.hpp"
#include "symgraph/report.hpp"

using namespace symgraph;

namespace {

Permutation perm(std::vector<int> img) { return Permutation::from_images(std::move(img)); }

PermGroup d12() { return PermGroup(6, {perm({1, 2, 3, 4, 5, 0}), perm({0, 5, 4, 3, 2, 1})}); }

}  // namespace

TEST_CASE("group serialization is byte-stable") {
  const std::string z3 = "{\"degree\":3,\"generators\":[[1,2,0]]}\n";
  PermGroup g = group_from_text(z3);
  CHECK(g.degree() == 3);
  CHECK(g.order() == 3);
  CHECK(group_to_text(g) == z3);
  CHECK(group_to_text(cyclic_group(3)) == z3);

  PermGroup t = group_from_text(group_to_text(PermGroup::trivial(4)));
  CHECK(t.degree() == 4);
  CHECK(t.order() == 1);
  CHECK(group_to_text(t) == group_to_text(PermGroup::trivial(4)));
}

TEST_CASE("generator order survives the round trip") {
  PermGroup g(4, {perm({1, 0, 2, 3}), perm({0, 1, 3, 2}), perm({1, 2, 3, 0})});
  PermGroup back = group_from_text(group_to_text(g));
  CHECK(back.generators() == g.generators());
}

TEST_CASE("graph serialization with and without an action block") {
  const std::string bare = "{\"n\":3,\"edges\":[[0,1],[0,2],[1,2]]}\n";
  CHECK(graph_to_text(complete_graph(3)) == bare);
  ParsedGraph pg = graph_from_text(bare);
  CHECK(pg.graph.edges == complete_graph(3).edges);
  CHECK(pg.action_generators.empty());

  const std::string with_action =
      "{\"n\":3,\"edges\":[[0,1],[0,2],[1,2]],\"action\":{\"generators\":[[1,2,0]]}}\n";
  CHECK(graph_to_text(complete_graph(3), {perm({1, 2, 0})}) == with_action);
  ParsedGraph pa = graph_from_text(with_action);
  REQUIRE(pa.action_generators.size() == 1);
  CHECK(pa.action_generators[0] == perm({1, 2, 0}));
  // unnormalized input normalizes on the way through
  CHECK(graph_to_text(graph_from_text("{\"n\":3,\"edges\":[[2,1],[1,0],[0,2]]}").graph) == bare);
}

TEST_CASE("digraph serialization") {
  const std::string text = "{\"n\":2,\"arcs\":[[0,1]]}\n";
  Digraph d = digraph_from_text(text);
  CHECK(d.arcs.size() == 1);
  CHECK(digraph_to_text(d) == text);
}

TEST_CASE("parse failures carry the file kind") {
  auto what_contains = [](auto fn, const std::string& needle) {
    try {
      fn();
    } catch (const InvalidInput& e) {
      return std::string(e.what()).find(needle) != std::string::npos;
    }
    return false;
  };
  CHECK(what_contains([] { group_from_text("{"); }, "group file"));
  CHECK(what_contains([] { group_from_text("{\"generators\":[]}"); }, "degree"));
  CHECK(what_contains([] { group_from_text("{\"degree\":3,\"generators\":[[0,1]]}"); },
                      "does not match the degree"));
  CHECK(what_contains([] { group_from_text("{\"degree\":2,\"generators\":[[0,\"x\"]]}"); },
                      "non-integer"));
  CHECK(what_contains([] { graph_from_text("{\"n\":3}"); }, "edges"));
  CHECK(what_contains([] { graph_from_text("{\"n\":-1,\"edges\":[]}"); }, "negative"));
  CHECK(what_contains([] { graph_from_text("{\"n\":3,\"edges\":[[0]]}"); }, "pair"));
  CHECK(what_contains([] { graph_from_text("{\"n\":3,\"edges\":[[0,1],\"x\"]}"); }, "pair"));
  CHECK_THROWS_AS(graph_from_text("{\"n\":2,\"edges\":[[0,5]]}"), InvalidInput);
  CHECK(what_contains([] { digraph_from_text("{\"n\":2}"); }, "arcs"));
  CHECK(what_contains(
      [] { graph_from_text("{\"n\":3,\"edges\":[],\"action\":[]}"); }, "action"));
}

TEST_CASE("geometry serialization carries counts and the transversal") {
  PermGroup g = symmetric_group(4);
  PermGroup h = stabilizer(g, StabMode::Point, std::vector<int>{0});
  CosetGeometry geo = enumerate_cosets(g, h);
  const std::string text = geometry_to_text(geo);
  CHECK(text.back() == '\n');
  auto j = nlohmann::json::parse(text);
  CHECK(j["coset_count"] == 4);
  CHECK(j["group_order"] == 24);
  CHECK(j["subgroup_order"] == 6);
  REQUIRE(j["transversal"].size() == 4);
  CHECK(j["transversal"][0].size() == 4);
  CHECK(geometry_to_text(geo) == text);
}

TEST_CASE("text files round trip through the filesystem") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "symgraph-io-test";
  fs::create_directories(dir);
  fs::path p = dir / "sample.json";
  const std::string content = "{\"n\":0,\"edges\":[]}\n";
  write_text_file(p, content);
  CHECK(read_text_file(p) == content);
  CHECK_THROWS_AS(read_text_file(dir / "missing.json"), InvalidInput);
  fs::remove_all(dir);
}

TEST_CASE("analysis of the 6-cycle under its dihedral group") {
  CertifiedAction a = certify_action(d12(), cycle_graph(6));
  PermGroup anti(6, {perm({3, 4, 5, 0, 1, 2})});
  AnalysisReport r = analyze_action(a, {{"anti", anti}}, "c6", "d12");
  CHECK(r.graph_id == "c6");
  CHECK(r.group_id == "d12");
  CHECK(r.n == 6);
  CHECK(r.edge_count == 6);
  CHECK(r.valency == 2);
  CHECK(r.connected);
  CHECK(r.group_order == 12);
  CHECK(r.profile.arc);
  CHECK(r.local_degree == 2);
  CHECK(r.point_stab_order == 2);
  CHECK(r.pi_point_stab == std::vector<std::uint64_t>{2});
  CHECK(r.arc_orbits == 1);
  CHECK(r.self_paired == 1);
  CHECK(r.arc_reversal.status == CheckStatus::Pass);
  CHECK(r.aut.computed);
  CHECK(r.aut.order == 12);
  CHECK(r.aut.contains_action);
  CHECK(r.aut.equals_action);
  REQUIRE(r.normals.size() == 1);
  CHECK(r.normals[0].label == "anti");
  CHECK(r.normals[0].order == 2);
  REQUIRE(r.normals[0].classification.has_value());
  CHECK(r.normals[0].classification->tag == NormalCase::Semiregular);
  CHECK(r.normals[0].classification_error.empty());
  CHECK(r.normals[0].checks.size() == 4);

  const std::string text = report_to_text(r);
  CHECK(text.find("\"graph\": \"c6\"") != std::string::npos);
  CHECK(text.find("\"tag\": \"SEMIREGULAR\"") != std::string::npos);
  CHECK(text.back() == '\n');
}

TEST_CASE("report serialization is deterministic") {
  CertifiedAction a = certify_action(d12(), cycle_graph(6));
  PermGroup anti(6, {perm({3, 4, 5, 0, 1, 2})});
  const std::string one = report_to_text(analyze_action(a, {{"anti", anti}}, "g", "h"));
  const std::string two = report_to_text(analyze_action(a, {{"anti", anti}}, "g", "h"));
  CHECK(one == two);
}

TEST_CASE("aut computation respects the vertex cap") {
  CertifiedAction a = certify_action(d12(), cycle_graph(6));
  AnalysisReport r = analyze_action(a, {}, "g", "h", 3);
  CHECK_FALSE(r.aut.computed);
  CHECK(r.aut.order == 0);
  const std::string text = report_to_text(r);
  CHECK(text.find("\"computed\": false") != std::string::npos);
}

TEST_CASE("out-of-scope classification lands in the error field") {
  CertifiedAction a = certify_action(symmetric_group(4), complete_graph(4));
  AnalysisReport r = analyze_action(a, {{"alt", alternating_group(4)}}, "k4", "s4");
  REQUIRE(r.normals.size() == 1);
  CHECK_FALSE(r.normals[0].classification.has_value());
  CHECK_FALSE(r.normals[0].classification_error.empty());
  CHECK(r.normals[0].checks.size() == 4);
  const std::string text = report_to_text(r);
  CHECK(text.find("classification_error") != std::string::npos);
}
