#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symgraph/action.hpp"
#include "symgraph/coset.hpp"
#include "symgraph/graph.hpp"
#include "symgraph/perm_group.hpp"

namespace symgraph {

// Catalog of named constructions. The coset-built entries follow fixed
// recipes with every choice point resolved to the lexicographically least
// qualifying object; stated side facts are verified during construction and a
// violation aborts with SearchFailure.

std::vector<std::string> example_ids();
bool is_example_id(const std::string& id);

struct ConstructedExample {
  std::string id;
  Graph graph;
  PermGroup group;                 // induced action on the vertices
  std::optional<PermGroup> socle;  // induced simple normal subgroup, when the recipe names one
  std::optional<CosetGeometry> geometry;
  std::string group_name;
  std::string socle_name;
  int x_candidate_count = 0;  // qualifying connecting elements at the last choice point
};

ConstructedExample construct_example(const std::string& id,
                                     std::uint64_t element_cap = kDefaultElementCap);

struct ClaimResult {
  std::string name;
  bool pass = false;
  std::string expected;
  std::string actual;
};

struct VerificationOutcome {
  std::string id;
  int n = 0;
  int edge_count = 0;
  GroupOrder group_order = 1;
  int x_candidate_count = 0;
  std::vector<ClaimResult> claims;
  bool all_pass = false;
  std::int64_t elapsed_ms = 0;  // never serialized; files stay run-independent
};

VerificationOutcome verify_example(const std::string& id,
                                   int aut_vertex_cap = kDefaultAutVertexCap,
                                   std::uint64_t element_cap = kDefaultElementCap);

// claim evaluation alone, for callers that already hold the construction;
// elapsed_ms is left zero
VerificationOutcome verify_constructed_example(const ConstructedExample& ex,
                                               int aut_vertex_cap = kDefaultAutVertexCap);

// rerun over every qualifying connecting element instead of just the least
struct ChoiceSweep {
  std::string id;
  int choice_count = 0;
  bool outcomes_agree = false;  // identical claim verdicts and digests across choices
  std::vector<VerificationOutcome> outcomes;
};

ChoiceSweep verify_example_choices(const std::string& id,
                                   int aut_vertex_cap = kDefaultAutVertexCap,
                                   std::uint64_t element_cap = kDefaultElementCap);

std::string outcome_to_text(const VerificationOutcome& o);
std::string sweep_to_text(const ChoiceSweep& s);

}  // namespace symgraph
