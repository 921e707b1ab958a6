// command line front end: construct catalog objects, analyze actions on
// graphs, verify the claim checklists of catalog entries.
// exit codes: 0 success / all claims pass, 1 a claim failed, 2 bad input or a
// failed search.

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "symgraph/action.hpp"
#include "symgraph/catalog.hpp"
#include "symgraph/errors.hpp"
#include "symgraph/examples.hpp"
#include "symgraph/io.hpp"
#include "symgraph/report.hpp"

namespace fs = std::filesystem;
using namespace symgraph;

namespace {

struct GlobalCaps {
  std::uint64_t elements = kDefaultElementCap;
  int aut_vertices = kDefaultAutVertexCap;
};

void write_and_note(const fs::path& path, const std::string& text) {
  write_text_file(path, text);
  std::cout << "wrote " << path.string() << "\n";
}

int run_construct_example(const std::string& id, const fs::path& out, const GlobalCaps& caps) {
  ConstructedExample ex = construct_example(id, caps.elements);
  fs::create_directories(out);
  std::cout << ex.id << ": " << ex.graph.n << " vertices, " << ex.graph.edges.size()
            << " edges, group " << ex.group_name << " of order "
            << order_to_string(ex.group.order());
  if (ex.socle) std::cout << ", socle " << ex.socle_name;
  std::cout << "\n";
  write_and_note(out / "graph.json", graph_to_text(ex.graph, ex.group.generators()));
  write_and_note(out / "group.json", group_to_text(ex.group));
  if (ex.socle) write_and_note(out / "socle.json", group_to_text(*ex.socle));
  if (ex.geometry) write_and_note(out / "geometry.json", geometry_to_text(*ex.geometry));
  return 0;
}

GroupRecipe family_recipe(const std::string& family, std::uint64_t q, int e, int n,
                          std::uint64_t p, int k) {
  GroupRecipe r{};
  if (family == "psl2" || family == "pgl2" || family == "pgammal2" ||
      family == "psl2-ext-frob") {
    if (q == 0) throw InvalidInput("family " + family + " needs --q");
    r.q = q;
    r.e = e;
    r.family = family == "psl2"      ? Family::PSL2
               : family == "pgl2"    ? Family::PGL2
               : family == "pgammal2" ? Family::PGammaL2
                                      : Family::PSL2ExtFrob;
    return r;
  }
  if (family == "cyclic" || family == "symmetric" || family == "alternating") {
    if (n == 0) throw InvalidInput("family " + family + " needs --n");
    r.n = n;
    r.family = family == "cyclic"      ? Family::Cyclic
               : family == "symmetric" ? Family::Symmetric
                                       : Family::Alternating;
    return r;
  }
  if (family == "elem-abelian") {
    if (p == 0 || k == 0) throw InvalidInput("family elem-abelian needs --p and --k");
    r.p = p;
    r.k = k;
    r.family = Family::ElemAbelian;
    return r;
  }
  throw InvalidInput("unknown family: " + family +
                     " (expected psl2, pgl2, pgammal2, psl2-ext-frob, cyclic, symmetric, "
                     "alternating, elem-abelian)");
}

int run_construct_family(const GroupRecipe& recipe, const fs::path& out) {
  CatalogEntry entry = build_catalog_group(recipe);
  fs::create_directories(out);
  std::cout << entry.name << ": degree " << entry.group.degree() << ", order "
            << order_to_string(entry.group.order()) << "\n";
  write_and_note(out / "group.json", group_to_text(entry.group));
  return 0;
}

int run_analyze(const std::string& graph_path, const std::string& group_path,
                const std::vector<std::string>& normal_paths, const std::string& out_path,
                const GlobalCaps& caps) {
  ParsedGraph pg = graph_from_text(read_text_file(graph_path));
  PermGroup g = group_from_text(read_text_file(group_path));
  CertifiedAction act = certify_action(g, pg.graph);
  std::vector<std::pair<std::string, PermGroup>> normals;
  for (const std::string& np : normal_paths)
    normals.emplace_back(np, group_from_text(read_text_file(np)));
  AnalysisReport report =
      analyze_action(act, normals, graph_path, group_path, caps.aut_vertices);
  std::string text = report_to_text(report);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_and_note(out_path, text);
  }
  return 0;
}

void print_outcome(const VerificationOutcome& o) {
  for (const ClaimResult& c : o.claims) {
    if (c.pass) {
      std::cout << "  PASS " << c.name << " = " << c.actual << "\n";
    } else {
      std::cout << "  FAIL " << c.name << ": expected " << c.expected << ", got " << c.actual
                << "\n";
    }
  }
  std::cout << o.id << ": " << (o.all_pass ? "ALL PASS" : "FAIL") << " (" << o.elapsed_ms
            << " ms)\n";
}

// verify one id; writes outcome and report files when out is nonempty
bool run_verify_one(const std::string& id, const fs::path& out, bool enumerate,
                    const GlobalCaps& caps) {
  if (enumerate) {
    ChoiceSweep sweep = verify_example_choices(id, caps.aut_vertices, caps.elements);
    std::cout << id << ": " << sweep.choice_count << " connecting-element choice"
              << (sweep.choice_count == 1 ? "" : "s") << "\n";
    for (std::size_t i = 0; i < sweep.outcomes.size(); ++i) {
      const VerificationOutcome& o = sweep.outcomes[i];
      std::cout << "  choice " << (i + 1) << "/" << sweep.outcomes.size() << ": "
                << (o.all_pass ? "ALL PASS" : "FAIL") << " (" << o.elapsed_ms << " ms)\n";
    }
    std::cout << id << ": outcomes " << (sweep.outcomes_agree ? "agree" : "DISAGREE") << "\n";
    if (!out.empty()) {
      fs::create_directories(out);
      write_and_note(out / (id + ".sweep.json"), sweep_to_text(sweep));
    }
    bool all = sweep.outcomes_agree;
    for (const VerificationOutcome& o : sweep.outcomes) all = all && o.all_pass;
    return all;
  }

  auto t0 = std::chrono::steady_clock::now();
  ConstructedExample ex = construct_example(id, caps.elements);
  VerificationOutcome outcome = verify_constructed_example(ex, caps.aut_vertices);
  outcome.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - t0)
                           .count();
  print_outcome(outcome);
  if (!out.empty()) {
    fs::create_directories(out);
    write_and_note(out / (id + ".outcome.json"), outcome_to_text(outcome));
    std::vector<std::pair<std::string, PermGroup>> normals;
    if (ex.socle) normals.emplace_back("socle", *ex.socle);
    CertifiedAction act = certify_action(ex.group, ex.graph);
    AnalysisReport report = analyze_action(act, normals, id, ex.group_name, caps.aut_vertices);
    write_and_note(out / (id + ".report.json"), report_to_text(report));
  }
  return outcome.all_pass;
}

int run_verify(const std::string& id, const std::string& out, bool enumerate,
               const GlobalCaps& caps) {
  std::vector<std::string> ids;
  if (id == "all") {
    ids = example_ids();
  } else {
    ids.push_back(id);
  }
  bool ok = true;
  for (const std::string& one : ids) ok = run_verify_one(one, out, enumerate, caps) && ok;
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coset, Cayley, and quotient graph constructions with symmetry analysis"};
  app.require_subcommand(1);

  GlobalCaps caps;
  app.add_option("--cap-elements", caps.elements,
                 "largest group order that full element sweeps will attempt");
  app.add_option("--cap-aut-vertices", caps.aut_vertices,
                 "largest vertex count for automorphism-group search");

  auto* construct = app.add_subcommand("construct", "build a catalog entry and write its files");
  construct->fallthrough();
  std::string c_example;
  std::string c_family;
  std::string c_out;
  std::uint64_t c_q = 0;
  int c_e = 1;
  int c_n = 0;
  std::uint64_t c_p = 0;
  int c_k = 0;
  construct->add_option("--example", c_example, "catalog id, e.g. ex-5.2.1 or complete-7");
  construct->add_option("--family", c_family,
                        "group family: psl2, pgl2, pgammal2, psl2-ext-frob, cyclic, symmetric, "
                        "alternating, elem-abelian");
  construct->add_option("--q", c_q, "prime power for the projective families");
  construct->add_option("--e", c_e, "frobenius power adjoined by psl2-ext-frob");
  construct->add_option("--n", c_n, "degree for cyclic, symmetric, alternating");
  construct->add_option("--p", c_p, "prime for elem-abelian");
  construct->add_option("--k", c_k, "rank for elem-abelian");
  construct->add_option("--out", c_out, "output directory")->required();

  auto* analyze = app.add_subcommand("analyze", "analyze a group action on a graph");
  analyze->fallthrough();
  std::string a_graph;
  std::string a_group;
  std::vector<std::string> a_normals;
  std::string a_out;
  analyze->add_option("--graph", a_graph, "graph file")->required();
  analyze->add_option("--group", a_group, "acting group file")->required();
  analyze->add_option("--normal", a_normals, "normal subgroup file (repeatable)");
  analyze->add_option("--out", a_out, "report file (default: stdout)");

  auto* verify = app.add_subcommand("verify", "check a catalog entry's claim checklist");
  verify->fallthrough();
  std::string v_example;
  std::string v_out;
  bool v_enumerate = false;
  verify->add_option("--example", v_example, "catalog id, or 'all'")->required();
  verify->add_flag("--enumerate-choices", v_enumerate,
                   "rerun over every qualifying connecting element and compare outcomes");
  verify->add_option("--out", v_out, "directory for outcome and report files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(construct)) {
      if (!c_example.empty() && !c_family.empty())
        throw InvalidInput("construct takes --example or --family, not both");
      if (!c_example.empty()) return run_construct_example(c_example, c_out, caps);
      if (!c_family.empty())
        return run_construct_family(family_recipe(c_family, c_q, c_e, c_n, c_p, c_k), c_out);
      throw InvalidInput("construct needs --example or --family");
    }
    if (app.got_subcommand(analyze)) return run_analyze(a_graph, a_group, a_normals, a_out, caps);
    if (app.got_subcommand(verify)) return run_verify(v_example, v_out, v_enumerate, caps);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
