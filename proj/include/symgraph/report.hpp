#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symgraph/action.hpp"
#include "symgraph/lemmas.hpp"

namespace symgraph {

struct AutSummary {
  bool computed = false;  // skipped when the vertex count exceeds the cap
  GroupOrder order = 0;
  bool contains_action = false;  // every analyzed generator is an automorphism it knows
  bool equals_action = false;    // the automorphism group is exactly the analyzed one
};

struct NormalSection {
  std::string label;
  GroupOrder order = 1;
  std::optional<NormalClassification> classification;
  std::string classification_error;  // set when the case analysis does not apply
  std::vector<CheckResult> checks;   // structure checks on the arc set
};

struct AnalysisReport {
  std::string graph_id;
  std::string group_id;
  int n = 0;
  int edge_count = 0;
  int valency = -1;  // -1 when not regular
  bool connected = false;
  GroupOrder group_order = 1;
  TransitivityProfile profile;
  // local data at vertex 0
  GroupOrder point_stab_order = 1;
  GroupOrder local_order = 1;
  GroupOrder kernel_order = 1;
  int local_degree = 0;
  std::vector<std::uint64_t> pi_point_stab;
  std::vector<std::uint64_t> pi_local;
  // arc orbit structure under reversal
  int arc_orbits = 0;
  int self_paired = 0;
  int mutual_pairs = 0;
  CheckResult arc_reversal;  // witness check for the analyzed group
  AutSummary aut;
  std::vector<NormalSection> normals;
};

AnalysisReport analyze_action(const CertifiedAction& a,
                              const std::vector<std::pair<std::string, PermGroup>>& normals,
                              const std::string& graph_id, const std::string& group_id,
                              int aut_vertex_cap = kDefaultAutVertexCap);

// stable key order, trailing newline; equal reports give equal bytes
std::string report_to_text(const AnalysisReport& r);

}  // namespace symgraph
