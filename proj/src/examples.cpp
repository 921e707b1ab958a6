#include "symgraph/examples.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "symgraph/catalog.hpp"
#include "symgraph/errors.hpp"
#include "symgraph/group_ops.hpp"
#include "symgraph/shapes.hpp"

namespace symgraph {

namespace {

using nlohmann::ordered_json;

void expect(bool ok, const std::string& id, const std::string& what) {
  if (!ok) throw SearchFailure(id + ": " + what);
}

// a coset recipe with every choice already resolved except the connecting
// element; xs holds the qualifying candidates in lex order
struct CosetRecipe {
  std::string id;
  PermGroup g;
  PermGroup t;
  std::string gname;
  std::string tname;
  PermGroup h;
  std::vector<Permutation> xs;
  std::function<void(const CosetGraphResult&)> post;  // stated consequences of the choice
};

// shared skeleton of the two smallest entries: H the Sylow 2-subgroup of
// PGL(2,q), K a least Klein four inside H meet T, x an involution in
// N_T(K) minus H
CosetRecipe recipe_sylow_pair(const std::string& id, std::uint64_t q, std::uint64_t cap) {
  Field f = Field::for_q(q);
  CosetRecipe r{id,
                pgl2(f),
                psl2(f),
                "PGL(2," + std::to_string(q) + ")",
                "PSL(2," + std::to_string(q) + ")",
                PermGroup::trivial(1),
                {},
                nullptr};
  r.h = sylow_subgroup(r.g, 2, cap);
  expect(r.h.order() == 16 && is_dihedral_of(r.h, 16, cap), id,
         "the Sylow 2-subgroup is not dihedral of order 16");
  PermGroup h1 = group_intersection(r.h, r.t, cap);
  expect(h1.order() == 8, id, "H meet T does not have order 8");
  auto kleins = find_subgroups_by_shape(h1, {ShapeKind::KleinFour, 4}, 0, cap);
  expect(!kleins.empty(), id, "no klein four subgroup inside H meet T");
  const PermGroup& k = kleins.front();
  PermGroup nh = filtered_subgroup(r.h, FilterMode::Normalizer, k, cap);
  expect(nh.order() == 8 && is_dihedral_of(nh, 8, cap), id,
         "the normalizer of K in H is not dihedral of order 8");
  PermGroup ng = filtered_subgroup(r.g, FilterMode::Normalizer, k, cap);
  PermGroup nt = filtered_subgroup(r.t, FilterMode::Normalizer, k, cap);
  expect(ng.order() == 24 && is_symmetric4(ng), id,
         "the normalizer of K in the full group is not symmetric of degree 4");
  expect(ng.same_group_as(nt), id, "the normalizer of K meets the complement of T");
  r.xs = elements_where(
      nt, [&](const Permutation& p) { return p.is_involution() && !r.h.contains(p); }, cap);
  expect(!r.xs.empty(), id, "no involution in the normalizer of K outside H");
  return r;
}

// H a least dihedral subgroup of order 24 in PGL(2,11), K a least klein four
// in H meet T, x an involution in N_G(K) minus H; the choice is certified to
// generate with H and to intersect H in exactly K
CosetRecipe recipe_dihedral24(std::uint64_t cap) {
  const std::string id = "ex-5.1.2";
  Field f = Field::for_q(11);
  CosetRecipe r{id, pgl2(f), psl2(f), "PGL(2,11)", "PSL(2,11)", PermGroup::trivial(1), {},
                nullptr};
  auto dihedrals = find_subgroups_by_shape(r.g, {ShapeKind::Dihedral, 24}, 1, cap);
  expect(!dihedrals.empty(), id, "no dihedral subgroup of order 24");
  r.h = dihedrals.front();
  PermGroup h1 = group_intersection(r.h, r.t, cap);
  expect(h1.order() == 12, id, "H meet T does not have order 12");
  auto kleins = find_subgroups_by_shape(h1, {ShapeKind::KleinFour, 4}, 0, cap);
  expect(!kleins.empty(), id, "no klein four subgroup inside H meet T");
  PermGroup k = kleins.front();
  PermGroup ng = filtered_subgroup(r.g, FilterMode::Normalizer, k, cap);
  expect(ng.order() == 24 && is_symmetric4(ng), id,
         "the normalizer of K in the full group is not symmetric of degree 4");
  PermGroup nh = filtered_subgroup(r.h, FilterMode::Normalizer, k, cap);
  expect(nh.order() == 8 && is_dihedral_of(nh, 8, cap), id,
         "the normalizer of K in H is not dihedral of order 8");
  PermGroup nt = filtered_subgroup(r.t, FilterMode::Normalizer, k, cap);
  expect(nt.order() == 12 && is_alternating4(nt), id,
         "the normalizer of K in T is not alternating of degree 4");
  PermGroup h = r.h;
  r.xs = elements_where(
      ng, [&](const Permutation& p) { return p.is_involution() && !h.contains(p); }, cap);
  expect(!r.xs.empty(), id, "no involution in the normalizer of K outside H");
  r.post = [id, h, k, cap](const CosetGraphResult& cos) {
    expect(cos.generates, id, "the connecting element does not generate with H");
    PermGroup meet = group_intersection(h, conjugate_group(h, cos.x), cap);
    expect(meet.same_group_as(k), id, "H meet its conjugate is not K");
  };
  return r;
}

// H the direct product of a least symmetric-3 subgroup of T with a least
// centralizing involution outside T; x ranges over the involutions in the
// centralizer of a reflection, filtered by the stated generation and index
// conditions
CosetRecipe recipe_s3_product(std::uint64_t cap) {
  const std::string id = "ex-5.1.3";
  Field f = Field::for_q(17);
  CosetRecipe r{id, pgl2(f), psl2(f), "PGL(2,17)", "PSL(2,17)", PermGroup::trivial(1), {},
                nullptr};
  auto a = least_element_where(
      r.t, [](const Permutation& p) { return p.element_order() == 3; }, cap);
  expect(a.has_value(), id, "no element of order 3 in T");
  Permutation ainv = a->inverse();
  auto b = least_element_where(
      r.t,
      [&](const Permutation& p) { return p.is_involution() && a->conjugated_by(p) == ainv; },
      cap);
  expect(b.has_value(), id, "no involution of T inverting the chosen rotation");
  PermGroup h1 = subgroup_generated(r.g, {*a, *b});
  expect(is_symmetric3(h1), id, "the two chosen elements do not span a symmetric-3 group");
  auto c = least_element_where(
      r.g,
      [&](const Permutation& p) {
        return p.is_involution() && !r.t.contains(p) && *a * p == p * *a && *b * p == p * *b;
      },
      cap);
  expect(c.has_value(), id, "no centralizing involution outside T");
  r.h = subgroup_generated(r.g, {*a, *b, *c});
  expect(r.h.order() == 12, id, "the assembled subgroup does not have order 12");
  auto refl = elements_where(
      h1, [](const Permutation& p) { return p.is_involution(); }, cap);
  expect(!refl.empty(), id, "no involution inside the symmetric-3 subgroup");
  const Permutation o = refl.front();
  PermGroup cent = centralizer_of_element(r.t, o, cap);
  expect(cent.order() == 16 && is_dihedral_of(cent, 16, cap), id,
         "the centralizer of the reflection is not dihedral of order 16");
  PermGroup g = r.g;
  PermGroup h = r.h;
  GroupOrder gorder = g.order();
  Permutation av = *a;
  Permutation bv = *b;
  Permutation cv = *c;
  r.xs = elements_where(
      cent,
      [&, av, bv, cv](const Permutation& p) {
        if (!p.is_involution() || h.contains(p)) return false;
        if (subgroup_generated(g, {av, bv, cv, p}).order() != gorder) return false;
        if (!is_symmetric4(subgroup_generated(g, {av, bv, p}))) return false;
        if (group_intersection(h, conjugate_group(h, p), cap).order() != 2) return false;
        // index 3, matching the valency of the halves; index 6 is unreachable
        // because the centralized reflection sits in every intersection
        return group_intersection(h1, conjugate_group(h1, p), cap).order() == 2;
      },
      cap);
  expect(!r.xs.empty(), id, "no qualifying connecting involution in the centralizer");
  return r;
}

// H an alternating-4 subgroup over a least klein four of T extended by an
// order-3 element outside T; x ranges over the involutions in the centralizer
// of a klein-four element, filtered by the stated intersection and generation
// conditions
CosetRecipe recipe_frobenius_a4(std::uint64_t cap) {
  const std::string id = "ex-5.1.1";
  Field f = Field::for_q(27);
  CosetRecipe r{id, psl2_ext_frob(f, 1), psl2(f), "PSL(2,27):3", "PSL(2,27)",
                PermGroup::trivial(1), {}, nullptr};
  auto kleins = find_subgroups_by_shape(r.t, {ShapeKind::KleinFour, 4}, 1, cap);
  expect(!kleins.empty(), id, "no klein four subgroup in T");
  const PermGroup& v = kleins.front();
  std::vector<Permutation> velems = enumerate_elements(v, cap);
  std::sort(velems.begin(), velems.end());
  auto in_v = [&](const Permutation& p) {
    return std::binary_search(velems.begin(), velems.end(), p);
  };
  PermGroup g = r.g;
  auto c = least_element_where(
      r.g,
      [&](const Permutation& p) {
        if (p.element_order() != 3 || r.t.contains(p)) return false;
        Permutation pinv = p.inverse();
        for (const Permutation& s : v.generators()) {
          if (!in_v(pinv * s * p)) return false;
        }
        std::vector<Permutation> gens = v.generators();
        gens.push_back(p);
        return is_alternating4(subgroup_generated(g, std::move(gens)));
      },
      cap);
  expect(c.has_value(), id, "no order-3 element outside T acting on the klein four");
  std::vector<Permutation> hgens = v.generators();
  hgens.push_back(*c);
  r.h = subgroup_generated(r.g, hgens);
  expect(r.h.order() == 12 && is_alternating4(r.h), id,
         "the assembled subgroup is not alternating of degree 4");
  expect(group_intersection(r.h, r.t, cap).same_group_as(v), id,
         "H meet T is not the chosen klein four");
  const Permutation o = velems[1];  // velems[0] is the identity
  PermGroup cent = centralizer_of_element(r.t, o, cap);
  expect(cent.order() == 28 && is_dihedral_of(cent, 28, cap), id,
         "the centralizer of the involution is not dihedral of order 28");
  PermGroup h = r.h;
  GroupOrder gorder = g.order();
  r.xs = elements_where(
      cent,
      [&](const Permutation& p) {
        if (!p.is_involution() || h.contains(p)) return false;
        if (group_intersection(h, conjugate_group(h, p), cap).order() != 2) return false;
        std::vector<Permutation> gens = hgens;
        gens.push_back(p);
        return subgroup_generated(g, std::move(gens)).order() == gorder;
      },
      cap);
  expect(!r.xs.empty(), id, "no qualifying connecting involution in the centralizer");
  return r;
}

CosetRecipe build_recipe(const std::string& id, std::uint64_t cap) {
  if (id == "ex-5.2.1") return recipe_sylow_pair(id, 7, cap);
  if (id == "ex-5.2.2") return recipe_sylow_pair(id, 9, cap);
  if (id == "ex-5.1.2") return recipe_dihedral24(cap);
  if (id == "ex-5.1.3") return recipe_s3_product(cap);
  if (id == "ex-5.1.1") return recipe_frobenius_a4(cap);
  throw InvalidInput("unknown example id: " + id);
}

ConstructedExample finish_recipe(const CosetRecipe& r, std::size_t xi, std::uint64_t cap) {
  if (xi >= r.xs.size()) throw InvalidInput(r.id + ": connecting-element index out of range");
  CosetGraphResult cos = coset_graph(r.g, r.h, r.xs[xi], kDefaultCosetCap, cap);
  if (r.post) r.post(cos);
  ConstructedExample out{r.id,
                         cos.graph,
                         cos.induced_g,
                         induced_group(cos.geometry, r.t),
                         std::move(cos.geometry),
                         r.gname,
                         r.tname,
                         static_cast<int>(r.xs.size())};
  return out;
}

std::optional<int> complete_param(const std::string& id) {
  const std::string prefix = "complete-";
  if (id.rfind(prefix, 0) != 0) return std::nullopt;
  const std::string tail = id.substr(prefix.size());
  if (tail.empty() || tail.size() > 4 ||
      !std::all_of(tail.begin(), tail.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
    return std::nullopt;
  return std::stoi(tail);
}

ConstructedExample construct_complete(const std::string& id, int n) {
  if (n < 3 || n > 12) throw InvalidInput(id + ": vertex count must be between 3 and 12");
  ConstructedExample out{id,
                         complete_graph(n),
                         symmetric_group(n),
                         std::nullopt,
                         std::nullopt,
                         "S" + std::to_string(n),
                         "",
                         0};
  return out;
}

std::string order_str(GroupOrder n) { return order_to_string(n); }

std::string bool_str(bool b) { return b ? "true" : "false"; }

// component census of a spanning subgraph, e.g. "7 x cycle(3), valency 2"
std::string half_summary(const Graph& g) {
  ComponentsResult comp = components_and_shapes(g);
  std::string shape = "empty";
  if (!comp.shapes.empty()) {
    shape = comp.shapes.front().to_string();
    for (const ComponentShape& s : comp.shapes) {
      if (!(s == comp.shapes.front())) {
        shape = "mixed";
        break;
      }
    }
  }
  auto val = g.regular_valency();
  std::string v = val ? std::to_string(*val) : std::string("irregular");
  return std::to_string(comp.components.size()) + " x " + shape + ", valency " + v;
}

struct ClaimSheet {
  std::vector<ClaimResult> claims;

  void add(const std::string& name, const std::string& expected, const std::string& actual) {
    claims.push_back({name, expected == actual, expected, actual});
  }
  void add_int(const std::string& name, std::int64_t expected, std::int64_t actual) {
    add(name, std::to_string(expected), std::to_string(actual));
  }
  void add_bool(const std::string& name, bool expected, bool actual) {
    add(name, bool_str(expected), bool_str(actual));
  }
};

struct ExampleFacts {
  int n = 0;
  int valency = 0;
  std::int64_t group_order = 0;
  bool primitive_claimed = false;
  int socle_edge_orbits = 0;      // 0 means no socle edge claim
  int half_count = 0;             // per-orbit spanning subgraphs claimed
  std::string half_shape;         // expected half_summary text
  bool socle_arc_pairing = false; // expect 2 arc orbits forming one mutual pair
  bool socle_vertex_transitive_claimed = false;
  bool aut_claimed = false;       // automorphisms equal the induced action
  std::int64_t aut_order = 0;
  bool aut_skip_claimed = false;  // vertex count beyond the default cap
};

ExampleFacts facts_for(const std::string& id) {
  if (id == "ex-5.2.1") return {21, 4, 336, true, 2, 2, "7 x cycle(3), valency 2",
                                false, false, true, 336, false};
  if (id == "ex-5.2.2") return {45, 4, 720, true, 2, 2, "15 x cycle(3), valency 2",
                                false, false, false, 0, false};
  if (id == "ex-5.1.2") return {55, 6, 1320, false, 1, 0, "", true, false, false, 0, false};
  if (id == "ex-5.1.3") return {408, 6, 4896, false, 2, 2, "102 x complete(4), valency 3",
                                false, false, false, 0, false};
  if (id == "ex-5.1.1") return {2457, 6, 29484, false, 3, 3, "351 x cycle(7), valency 2",
                                false, true, false, 0, true};
  throw InvalidInput("unknown example id: " + id);
}

}  // namespace

VerificationOutcome verify_constructed_example(const ConstructedExample& ex, int aut_vertex_cap) {
  VerificationOutcome out;
  out.id = ex.id;
  out.n = ex.graph.n;
  out.edge_count = static_cast<int>(ex.graph.edges.size());
  out.group_order = ex.group.order();
  out.x_candidate_count = ex.x_candidate_count;

  ClaimSheet sheet;
  CertifiedAction act = certify_action(ex.group, ex.graph);
  TransitivityProfile prof = transitivity_profile(act);

  if (auto n = complete_param(ex.id)) {
    GroupOrder fact = 1;
    for (int i = 2; i <= *n; ++i) fact *= static_cast<GroupOrder>(i);
    sheet.add_int("vertex-count", *n, ex.graph.n);
    sheet.add_int("edge-count", static_cast<std::int64_t>(*n) * (*n - 1) / 2,
                  out.edge_count);
    auto val = ex.graph.regular_valency();
    sheet.add_int("valency", *n - 1, val ? *val : -1);
    sheet.add_bool("connected", true, ex.graph.connected());
    sheet.add("group-order", order_str(fact), order_str(out.group_order));
    sheet.add_bool("vertex-transitive", true, prof.vertex);
    sheet.add_bool("edge-transitive", true, prof.edge);
    sheet.add_bool("arc-transitive", true, prof.arc);
    sheet.add_bool("two-arc-transitive", true, prof.two_arc_evaluated && prof.two_arc);
    out.claims = std::move(sheet.claims);
    out.all_pass = std::all_of(out.claims.begin(), out.claims.end(),
                               [](const ClaimResult& c) { return c.pass; });
    return out;
  }

  ExampleFacts f = facts_for(ex.id);
  sheet.add_int("vertex-count", f.n, ex.graph.n);
  sheet.add_int("edge-count", static_cast<std::int64_t>(f.n) * f.valency / 2, out.edge_count);
  auto val = ex.graph.regular_valency();
  sheet.add_int("valency", f.valency, val ? *val : -1);
  sheet.add_bool("connected", true, ex.graph.connected());
  sheet.add("group-order", std::to_string(f.group_order), order_str(out.group_order));
  sheet.add_bool("vertex-transitive", true, prof.vertex);
  sheet.add_bool("edge-transitive", true, prof.edge);
  sheet.add_bool("arc-transitive", true, prof.arc);
  sheet.add_bool("not-two-arc-transitive", true, prof.two_arc_evaluated && !prof.two_arc);
  if (f.primitive_claimed) sheet.add_bool("primitive", true, prof.vertex && prof.primitive);

  if (ex.socle.has_value()) {
    CertifiedAction sact = certify_action(*ex.socle, ex.graph);
    if (f.socle_vertex_transitive_claimed) {
      sheet.add_int("socle-vertex-orbits", 1,
                    orbit_decomposition(sact, ObjectKind::Vertex).orbit_count());
    }
    OrbitDecomposition eo = orbit_decomposition(sact, ObjectKind::Edge);
    if (f.socle_edge_orbits > 0) {
      sheet.add_int("socle-edge-orbits", f.socle_edge_orbits, eo.orbit_count());
      for (int i = 0; i < f.half_count && i < eo.orbit_count(); ++i) {
        Graph half = edge_subgraph(ex.graph, eo.orbits[i]);
        sheet.add("socle-half-" + std::to_string(i), f.half_shape, half_summary(half));
      }
    }
    if (f.socle_arc_pairing) {
      ArcPairing pairing = arc_pairing(sact);
      sheet.add_int("socle-arc-orbits", 2, pairing.arcs.orbit_count());
      sheet.add_int("socle-self-paired-orbits", 0, pairing.self_paired);
      sheet.add_int("socle-mutual-orbit-pairs", 1, pairing.mutual_pairs);
    }
  }

  if (f.aut_claimed) {
    if (ex.graph.n <= aut_vertex_cap) {
      PermGroup aut = graph_automorphisms(ex.graph, aut_vertex_cap);
      sheet.add("automorphism-order", std::to_string(f.aut_order), order_str(aut.order()));
      sheet.add_bool("automorphisms-equal-action", true, aut.same_group_as(ex.group));
    } else {
      sheet.add_bool("automorphisms-computed", true, false);
    }
  }
  if (f.aut_skip_claimed) {
    sheet.add_bool("automorphisms-skipped", true, ex.graph.n > aut_vertex_cap);
  }

  out.claims = std::move(sheet.claims);
  out.all_pass = std::all_of(out.claims.begin(), out.claims.end(),
                             [](const ClaimResult& c) { return c.pass; });
  return out;
}

namespace {

std::int64_t ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                               t0)
      .count();
}

ordered_json outcome_json(const VerificationOutcome& o) {
  ordered_json j;
  j["id"] = o.id;
  j["n"] = o.n;
  j["edge_count"] = o.edge_count;
  j["group_order"] = order_to_string(o.group_order);
  j["x_candidate_count"] = o.x_candidate_count;
  ordered_json claims = ordered_json::array();
  for (const ClaimResult& c : o.claims) {
    ordered_json jc;
    jc["name"] = c.name;
    jc["pass"] = c.pass;
    jc["expected"] = c.expected;
    jc["actual"] = c.actual;
    claims.push_back(std::move(jc));
  }
  j["claims"] = std::move(claims);
  j["all_pass"] = o.all_pass;
  return j;
}

}  // namespace

std::vector<std::string> example_ids() {
  return {"ex-5.1.1", "ex-5.1.2", "ex-5.1.3", "ex-5.2.1", "ex-5.2.2", "complete-7"};
}

bool is_example_id(const std::string& id) {
  if (complete_param(id)) return true;
  for (const char* known : {"ex-5.1.1", "ex-5.1.2", "ex-5.1.3", "ex-5.2.1", "ex-5.2.2"})
    if (id == known) return true;
  return false;
}

ConstructedExample construct_example(const std::string& id, std::uint64_t element_cap) {
  if (auto n = complete_param(id)) return construct_complete(id, *n);
  return finish_recipe(build_recipe(id, element_cap), 0, element_cap);
}

VerificationOutcome verify_example(const std::string& id, int aut_vertex_cap,
                                   std::uint64_t element_cap) {
  auto t0 = std::chrono::steady_clock::now();
  ConstructedExample ex = construct_example(id, element_cap);
  VerificationOutcome out = verify_constructed_example(ex, aut_vertex_cap);
  out.elapsed_ms = ms_since(t0);
  return out;
}

ChoiceSweep verify_example_choices(const std::string& id, int aut_vertex_cap,
                                   std::uint64_t element_cap) {
  ChoiceSweep sweep;
  sweep.id = id;
  if (complete_param(id)) {
    sweep.choice_count = 1;
    sweep.outcomes.push_back(verify_example(id, aut_vertex_cap, element_cap));
    sweep.outcomes_agree = true;
    return sweep;
  }
  CosetRecipe recipe = build_recipe(id, element_cap);
  sweep.choice_count = static_cast<int>(recipe.xs.size());
  for (std::size_t i = 0; i < recipe.xs.size(); ++i) {
    auto t0 = std::chrono::steady_clock::now();
    VerificationOutcome out;
    try {
      ConstructedExample ex = finish_recipe(recipe, i, element_cap);
      out = verify_constructed_example(ex, aut_vertex_cap);
    } catch (const SearchFailure& e) {
      out.id = id;
      out.claims.push_back({"construction", false, "a graph per the recipe", e.what()});
      out.all_pass = false;
    }
    out.elapsed_ms = ms_since(t0);
    sweep.outcomes.push_back(std::move(out));
  }
  sweep.outcomes_agree = !sweep.outcomes.empty();
  const VerificationOutcome& first = sweep.outcomes.front();
  for (const VerificationOutcome& o : sweep.outcomes) {
    bool same = o.n == first.n && o.edge_count == first.edge_count &&
                o.group_order == first.group_order && o.all_pass == first.all_pass &&
                o.claims.size() == first.claims.size();
    if (same) {
      for (std::size_t ci = 0; ci < o.claims.size(); ++ci) {
        if (o.claims[ci].name != first.claims[ci].name ||
            o.claims[ci].pass != first.claims[ci].pass) {
          same = false;
          break;
        }
      }
    }
    if (!same) {
      sweep.outcomes_agree = false;
      break;
    }
  }
  return sweep;
}

std::string outcome_to_text(const VerificationOutcome& o) {
  return outcome_json(o).dump(2) + "\n";
}

std::string sweep_to_text(const ChoiceSweep& s) {
  ordered_json j;
  j["id"] = s.id;
  j["choice_count"] = s.choice_count;
  j["outcomes_agree"] = s.outcomes_agree;
  ordered_json outs = ordered_json::array();
  for (const VerificationOutcome& o : s.outcomes) outs.push_back(outcome_json(o));
  j["outcomes"] = std::move(outs);
  return j.dump(2) + "\n";
}

}  // namespace symgraph
