#pragma once

#include <array>
#include <string>
#include <vector>

#include "symgraph/graph.hpp"
#include "symgraph/group_ops.hpp"
#include "symgraph/perm_group.hpp"

namespace symgraph {

inline constexpr int kDefaultAutVertexCap = 256;

// a group paired with a graph it provably acts on; the only way to get one is
// certify_action, which checks every generator edge by edge
struct CertifiedAction {
  PermGroup group;
  Graph graph;
};

CertifiedAction certify_action(const PermGroup& g, const Graph& gamma);

enum class ObjectKind { Vertex, Edge, Arc, TwoArc };
std::string object_kind_name(ObjectKind k);

// canonical object tables; indices into these are the object ids everywhere
std::vector<std::pair<int, int>> arc_table(const Graph& g);      // lex order
std::vector<std::array<int, 3>> two_arc_table(const Graph& g);   // lex order

struct OrbitDecomposition {
  ObjectKind kind = ObjectKind::Vertex;
  int object_count = 0;
  std::vector<std::vector<int>> orbits;  // ascending ids, orbits by least id
  std::vector<int> representatives;      // least id per orbit

  int orbit_count() const { return static_cast<int>(orbits.size()); }
  std::vector<int> orbit_id_of_object() const;
};

OrbitDecomposition orbit_decomposition(const CertifiedAction& a, ObjectKind kind);

struct TransitivityProfile {
  bool vertex = false;
  bool edge = false;
  bool arc = false;
  bool two_arc = false;
  // two_arc is only computed when the action is arc-transitive; otherwise it
  // is reported false without looking at 2-arc orbits
  bool two_arc_evaluated = false;
  bool primitive = false;  // meaningful only when vertex-transitive
  int vertex_orbits = 0;
  int edge_orbits = 0;
  int arc_orbits = 0;
  int two_arc_orbits = 0;  // 0 when not evaluated
};

TransitivityProfile transitivity_profile(const CertifiedAction& a);

struct LocalAction {
  int alpha = 0;
  std::vector<int> neighborhood;  // ascending
  PermGroup induced;              // on indices into neighborhood
  GroupOrder stabilizer_order = 1;
  GroupOrder kernel_order = 1;    // |stabilizer| / |induced|
};

LocalAction local_action(const CertifiedAction& a, int alpha);
// same computation for any subgroup on the out-neighborhood of a digraph
LocalAction local_action_on(const Digraph& d, const PermGroup& sub, int alpha);

// reversal pairing of arc orbits: partner[i] == i means self-paired
struct ArcPairing {
  OrbitDecomposition arcs;
  std::vector<int> partner;
  int self_paired = 0;
  int mutual_pairs = 0;
};

ArcPairing arc_pairing(const CertifiedAction& a);

// exact automorphism group by individualization-refinement backtracking
PermGroup graph_automorphisms(const Graph& g, int vertex_cap = kDefaultAutVertexCap);

}  // namespace symgraph
