#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symgraph/action.hpp"
#include "symgraph/graph.hpp"
#include "symgraph/perm_group.hpp"

namespace symgraph {

enum class CheckStatus { Pass, Fail, Skip };
std::string check_status_name(CheckStatus s);

struct CheckResult {
  std::string id;
  CheckStatus status = CheckStatus::Skip;
  std::string detail;  // counterexample on Fail, reason on Skip
};

// Structural facts about a normal subgroup n of a vertex-transitive g acting on
// a connected digraph d. Each check returns Skip when its hypotheses fail.
//
// pi_local_point: the primes of a point stabilizer in n all survive in its
// action on the out-neighborhood, so the valency bounds the largest one;
// strictly when the arc set is reversal-closed.
CheckResult check_pi_local_point(const PermGroup& g, const PermGroup& n, const Digraph& d);

// pi_local_arc: same survival for an arc stabilizer acting around the head
// vertex, when the arc set is a single g-orbit.
CheckResult check_pi_local_arc(const PermGroup& g, const PermGroup& n, const Digraph& d);

// quotient_valency_product: out-valency factors as quotient out-valency times
// the cross-arc count into any out-class, and the induced group on the classes
// is arc-transitive.
CheckResult check_quotient_valency_product(const PermGroup& g, const PermGroup& n,
                                           const Digraph& d);

// quotient_semiregular_criterion: a quotient of unchanged out-valency forces n
// to be semiregular.
CheckResult check_quotient_semiregular_criterion(const PermGroup& g, const PermGroup& n,
                                                 const Digraph& d);

// all of the above in a fixed order
std::vector<CheckResult> structure_checks(const PermGroup& g, const PermGroup& n,
                                          const Digraph& d);

// witness for rebuilding a connected arc-transitive graph from a point
// stabilizer: a 2-power-order element swapping the ends of the least edge
struct ArcWitness {
  int alpha = 0;
  int beta = 0;
  Permutation x;
  GroupOrder edge_stab_order = 1;      // pointwise stabilizer of {alpha, beta}
  bool normalizes_edge_stab = false;
  bool generates_with_point_stab = false;
  bool rebuild_matches = false;  // coset rebuild maps onto the graph edge for edge
};

ArcWitness find_arc_witness(const CertifiedAction& a, int alpha, int beta);
// same on the least edge
ArcWitness find_arc_witness(const CertifiedAction& a);

// arc_reversal_witness: the witness above exists and all its certificates hold
CheckResult check_arc_reversal_witness(const PermGroup& g, const Graph& gamma);

// Case analysis for a nontrivial normal subgroup of an arc- but not 2-arc-
// transitive group on a connected graph of valency twice a prime.
enum class NormalCase {
  Semiregular,
  Stabilizer2Group,
  CycleQuotient,
  BipartiteHalves,
  EdgeTransitive,
  PairedEdgePartition,
};
std::string normal_case_name(NormalCase c);

struct NormalClassification {
  NormalCase tag = NormalCase::Semiregular;
  GroupOrder point_stab_order = 1;  // stabilizer in n of vertex 0
  int orbit_count = 0;              // n-orbits on vertices
  bool quotient_arc_transitive = false;  // induced action, when n is intransitive
  int quotient_valency = -1;             // -1 when n is transitive
  int n_edge_orbits = 0;
  // PairedEdgePartition only: edge ids of one half and an element swapping the halves
  std::vector<int> half_edge_ids;
  std::optional<Permutation> swapping_element;
};

// Requires a connected regular graph, an arc-transitive action and a
// nontrivial normal subgroup (InvalidInput otherwise). When the valency is
// twice a prime and the action is not 2-arc-transitive, a non-matching case
// throws InternalInconsistency, since that would refute the case analysis;
// outside those hypotheses it throws InvalidInput instead.
NormalClassification classify_normal_subgroup(const CertifiedAction& a, const PermGroup& n);

}  // namespace symgraph
