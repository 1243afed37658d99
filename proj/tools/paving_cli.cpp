// paving: command-line front end for the sparse paving matroid toolkit.
//
// Exit codes: 0 success / found, 1 absent (search commands), 2 bad input,
// 3 pseudomodularity violated, 4 checker disagreement, 5 verify-paper failure.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "paving/analysis.hpp"
#include "paving/builders.hpp"
#include "paving/io.hpp"
#include "paving/lattice.hpp"
#include "paving/matroid.hpp"
#include "paving/pseudomodular.hpp"

namespace {

using namespace paving;

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::parse_error, "cannot open: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string set_to_labels(const SparsePavingMatroid& m, ElementSet s) {
  std::vector<std::string> names;
  for (int e : s) names.push_back(m.labels().name(e));
  std::sort(names.begin(), names.end());
  std::string out = "{";
  for (size_t i = 0; i < names.size(); ++i) {
    if (i) out += ",";
    out += names[i];
  }
  return out + "}";
}

ElementSet set_from_label_list(const SparsePavingMatroid& m, const std::string& spec) {
  ElementSet out;
  std::stringstream ss(spec);
  std::string token;
  while (std::getline(ss, token, ',')) {
    // trim surrounding spaces
    size_t b = token.find_first_not_of(" \t");
    size_t e = token.find_last_not_of(" \t");
    if (b == std::string::npos)
      throw Error(ErrorCode::parse_error, "empty label in list: " + spec);
    token = token.substr(b, e - b + 1);
    auto idx = m.labels().index_of(token);
    if (!idx) throw Error(ErrorCode::parse_error, "unknown label: " + token);
    out = out.with(*idx);
  }
  return out;
}

PrismRelaxation parse_relaxation(const std::string& spec) {
  // "i,j:fam" with 0-based vertices, fam one of ab, ac, bc
  auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw Error(ErrorCode::parse_error, "relaxation spec must be i,j:fam, got: " + spec);
  std::string pair = spec.substr(0, colon);
  std::string fam = spec.substr(colon + 1);
  auto comma = pair.find(',');
  if (comma == std::string::npos)
    throw Error(ErrorCode::parse_error, "relaxation spec must be i,j:fam, got: " + spec);
  int i = 0, j = 0;
  try {
    i = std::stoi(pair.substr(0, comma));
    j = std::stoi(pair.substr(comma + 1));
  } catch (const std::exception&) {
    throw Error(ErrorCode::parse_error, "bad vertex numbers in: " + spec);
  }
  PrismFamily family;
  if (fam == "ab")
    family = PrismFamily::ab;
  else if (fam == "ac")
    family = PrismFamily::ac;
  else if (fam == "bc")
    family = PrismFamily::bc;
  else
    throw Error(ErrorCode::parse_error, "family must be ab, ac or bc, got: " + fam);
  return {{i, j}, family};
}

void print_summary(const SparsePavingMatroid& m, std::ostream& os) {
  os << "n = " << m.ground_size() << ", rank = " << m.rank()
     << ", circuit hyperplanes = " << m.circuit_hyperplanes().size() << "\n";
}

void emit_matroid(const SparsePavingMatroid& m, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << to_matroid_file(m);
    print_summary(m, std::cerr);
  } else {
    save_matroid(m, out_path);
    print_summary(m, std::cout);
  }
}

void print_flat(const SparsePavingMatroid& m, const char* name, const Flat& f) {
  std::cout << "  " << name << " = " << set_to_labels(m, f.set)
            << "  rank " << f.rank << "\n";
}

void print_pm_report(const SparsePavingMatroid& m, const PmReport& rep) {
  std::cout << "method: " << (rep.method == PmMethod::naive ? "naive" : "pruned")
            << "\nverdict: " << (rep.ok() ? "pseudomodular" : "violated")
            << "\ntriples examined: " << rep.triples_examined << "\n";
  if (rep.witness) {
    const PmWitness& w = *rep.witness;
    std::cout << "witness:\n";
    print_flat(m, "a", w.a);
    print_flat(m, "b", w.b);
    print_flat(m, "c", w.c);
    print_flat(m, "a v b", w.join_ab);
    print_flat(m, "a v c", w.join_ac);
    print_flat(m, "b v c", w.join_bc);
    print_flat(m, "a v b v c", w.join_abc);
    print_flat(m, "(a v c) ^ (b v c)", w.meet_ac_bc);
    print_flat(m, "a ^ b", w.meet_ab);
  }
}

void print_restriction_witness(const SparsePavingMatroid& host,
                               const SparsePavingMatroid& target,
                               const RestrictionWitness& w) {
  std::cout << "kept:    " << set_to_labels(host, w.kept) << "\n"
            << "deleted: " << set_to_labels(host, w.deleted) << "\n"
            << "mapping:\n";
  std::vector<int> kept = w.kept.to_vector();
  for (size_t i = 0; i < kept.size(); ++i)
    std::cout << "  " << host.labels().name(kept[i]) << " -> "
              << target.labels().name(w.perm[i]) << "\n";
}

int cmd_build(const std::string& family, int k, const std::string& graph_path,
              const std::vector<std::string>& relax_specs, int rand_n, int rand_r,
              int rand_chs, std::uint64_t seed, bool seed_given,
              const std::string& out_path) {
  SparsePavingMatroid m = [&] {
    if (family == "mk") return build_mk(k);
    if (family == "tictactoe") return build_tictactoe();
    if (family == "vamos") return build_vamos();
    if (family == "graph-prism") {
      if (graph_path.empty())
        throw Error(ErrorCode::parse_error, "graph-prism needs --graph FILE");
      SimpleGraph g = parse_graph(read_text_file(graph_path));
      std::vector<PrismRelaxation> relaxations;
      for (const auto& spec : relax_specs) relaxations.push_back(parse_relaxation(spec));
      return graph_prism(g, relaxations);
    }
    if (family == "random") {
      if (!seed_given)
        throw Error(ErrorCode::parse_error, "random requires an explicit --seed");
      return random_sparse_paving(rand_n, rand_r, rand_chs, seed);
    }
    throw Error(ErrorCode::parse_error, "unknown family: " + family);
  }();
  emit_matroid(m, out_path);
  return 0;
}

int cmd_check_pm(const std::string& in_path, const std::string& method, int jobs,
                 std::uint64_t flat_cap, bool json) {
  SparsePavingMatroid m = load_matroid(in_path);
  std::optional<PmReport> naive, pruned;
  if (method == "naive" || method == "both")
    naive = is_pseudomodular_naive(m, jobs, flat_cap);
  if (method == "pruned" || method == "both")
    pruned = is_pseudomodular_pruned(m, jobs);

  if (json) {
    nlohmann::ordered_json j;
    if (naive && pruned) {
      j["naive"] = pm_report_json(m, *naive);
      j["pruned"] = pm_report_json(m, *pruned);
      j["agree"] = naive->verdict == pruned->verdict;
    } else {
      j = pm_report_json(m, naive ? *naive : *pruned);
    }
    std::cout << j.dump(2) << "\n";
  } else {
    if (naive) print_pm_report(m, *naive);
    if (naive && pruned) std::cout << "\n";
    if (pruned) print_pm_report(m, *pruned);
    if (naive && pruned)
      std::cout << "\nagreement: "
                << (naive->verdict == pruned->verdict ? "yes" : "NO - METHODS DISAGREE")
                << "\n";
  }

  if (naive && pruned && naive->verdict != pruned->verdict) return 4;
  const PmReport& rep = naive ? *naive : *pruned;
  return rep.ok() ? 0 : 3;
}

int cmd_stats(const std::string& in_path) {
  SparsePavingMatroid m = load_matroid(in_path);
  std::cout << "n: " << m.ground_size() << "\nrank: " << m.rank()
            << "\ncircuit hyperplanes: " << m.circuit_hyperplanes().size()
            << "\nbases: " << m.basis_count() << "\n";
  try {
    GeometricLattice lat = GeometricLattice::enumerate(m);
    std::vector<std::uint64_t> by_rank(m.rank() + 1, 0);
    for (std::uint32_t i = 0; i < lat.flat_count(); ++i) ++by_rank[lat.flat(i).rank];
    std::cout << "flats:\n";
    for (int rk = 0; rk <= m.rank(); ++rk)
      std::cout << "  rank " << rk << ": " << by_rank[rk] << "\n";
    std::cout << "  total: " << lat.flat_count() << "\n";
  } catch (const Error& e) {
    if (e.code() != ErrorCode::too_large) throw;
    std::cout << "flats: not enumerated (" << e.what() << ")\n";
  }
  return 0;
}

int cmd_minor(const std::string& host_path, const std::string& target_path) {
  SparsePavingMatroid host = load_matroid(host_path);
  SparsePavingMatroid target = load_matroid(target_path);
  auto w = find_restriction_isomorphic(host, target);
  if (!w) {
    std::cout << "absent\n";
    return 1;
  }
  std::cout << "found\n";
  print_restriction_witness(host, target, *w);
  return 0;
}

int cmd_find_vamos(const std::string& in_path) {
  SparsePavingMatroid m = load_matroid(in_path);
  auto w = find_vamos(m);
  if (!w) {
    std::cout << "absent\n";
    return 1;
  }
  std::cout << "found\n";
  print_restriction_witness(m, build_vamos(), *w);
  return 0;
}

int cmd_search(const std::vector<std::string>& graph_files,
               const std::vector<int>& cycles, const std::vector<int>& completes,
               const std::vector<std::string>& bipartites, bool json) {
  std::vector<SimpleGraph> graphs;
  for (const auto& path : graph_files) graphs.push_back(parse_graph(read_text_file(path)));
  for (int n : cycles) graphs.push_back(cycle_graph(n));
  for (int n : completes) graphs.push_back(complete_graph(n));
  for (const auto& spec : bipartites) {
    auto comma = spec.find(',');
    if (comma == std::string::npos)
      throw Error(ErrorCode::parse_error, "--bipartite needs m,n, got: " + spec);
    int a = 0, b = 0;
    try {
      a = std::stoi(spec.substr(0, comma));
      b = std::stoi(spec.substr(comma + 1));
    } catch (const std::exception&) {
      throw Error(ErrorCode::parse_error, "--bipartite needs m,n, got: " + spec);
    }
    graphs.push_back(complete_bipartite(a, b));
  }

  SearchReport report = triangle_free_search(graphs);

  bool any_vamos = false;
  for (const auto& rec : report.graphs)
    for (const auto& c : rec.cases)
      if (c.vamos) any_vamos = true;

  if (json) {
    std::cout << search_report_json(graphs, report).dump(2) << "\n";
  } else {
    for (const auto& rec : report.graphs) {
      const SimpleGraph& g = graphs[rec.graph_index];
      LabelMap labels = class_labels(g.vertex_count);
      std::cout << "graph " << rec.graph_index << ": " << g.vertex_count
                << " vertices, " << g.edges.size() << " edges, "
                << (rec.triangle_free ? "triangle-free" : "has a triangle") << ", "
                << (rec.two_connected ? "2-connected" : "not 2-connected") << "\n";
      for (const auto& c : rec.cases) {
        std::cout << "  relax " << labels.set_to_string(c.relaxed_ch) << ": vamos "
                  << (c.vamos ? "found" : "absent") << ", m3 "
                  << (c.m3 ? "found" : "absent") << "\n";
      }
    }
    std::cout << (any_vamos ? "vamos restriction: found\n" : "vamos restriction: absent\n");
  }
  return any_vamos ? 0 : 1;
}

struct PaperCheck {
  std::string name;
  bool passed;
};

int cmd_verify_paper(int kmax, int jobs) {
  if (kmax < 3 || kmax > 6)
    throw Error(ErrorCode::parse_error,
                "kmax must be between 3 and 6, got " + std::to_string(kmax));

  std::vector<PaperCheck> checks;
  auto run = [&](const std::string& name, bool ok) {
    checks.push_back({name, ok});
    std::cout << (ok ? "PASS" : "FAIL") << "  " << name << "\n";
  };

  SparsePavingMatroid m3 = build_mk(3);
  run("mk3 has 9 elements, rank 4, 8 circuit hyperplanes",
      m3.ground_size() == 9 && m3.rank() == 4 && m3.circuit_hyperplanes().size() == 8);
  run("mk3: {a1,a3,c1,c3} is a basis",
      m3.rank_of(set_from_label_list(m3, "a1,a3,c1,c3")) == 4);

  SparsePavingMatroid m3d = m3.dual();
  run("dual of mk3 has rank 5 on 9 elements", m3d.rank() == 5 && m3d.ground_size() == 9);
  {
    bool ok = m3d.circuit_hyperplanes().size() == 8;
    for (ElementSet h : m3.circuit_hyperplanes())
      ok = ok && m3d.is_circuit_hyperplane(h.complement(9));
    run("dual circuit hyperplanes are the 8 complements", ok);
  }

  run("naive checker: dual of mk3 is pseudomodular",
      is_pseudomodular_naive(build_tictactoe(), jobs).ok());
  for (int k = 3; k <= kmax; ++k)
    run("pruned checker: dual of mk" + std::to_string(k) + " is pseudomodular",
        is_pseudomodular_pruned(build_mk(k).dual()).ok());

  SparsePavingMatroid vamos = build_vamos();
  {
    bool ok = vamos.circuit_hyperplanes().size() == 5;
    for (ElementSet h : vamos.circuit_hyperplanes()) ok = ok && vamos.rank_of(h) == 3;
    run("vamos has the five rank-3 circuit hyperplanes", ok);
  }
  run("vamos: {a,a',d,d'} is independent",
      vamos.rank_of(set_from_label_list(vamos, "a,a',d,d'")) == 4);
  run("vamos: {a,a'} is in series in {a,a',b,b',c,c'}",
      is_in_series(vamos, set_from_label_list(vamos, "a,a'"),
                   set_from_label_list(vamos, "a,a',b,b',c,c'")));

  for (int k = 4; k <= kmax; ++k)
    run("mk" + std::to_string(k) + " contains mk3 as a restriction",
        find_restriction_isomorphic(build_mk(k), m3).has_value());

  for (int k = 4; k <= kmax; ++k) {
    SparsePavingMatroid mk = build_mk(k);
    bool ok = true;
    for (int t = 2; t <= k - 1; ++t) {
      ElementSet kept;
      for (int v : {1, t, k})
        for (int off : {0, k, 2 * k}) kept = kept.with(off + v - 1);
      SparsePavingMatroid sub = mk.deleted(kept.complement(3 * k));
      ok = ok && find_isomorphism(sub, m3).has_value();
    }
    run("mk" + std::to_string(k) + ": vertex classes {1,t,k} give copies of mk3", ok);
  }

  for (int k = 3; k <= kmax; ++k) {
    SparsePavingMatroid mk = build_mk(k);
    auto triples = prism_triples(mk);
    ElementSet bad_face;
    for (int v : {1, k}) {
      bad_face = bad_face.with(v - 1);            // a_1, a_k
      bad_face = bad_face.with(2 * k + v - 1);    // c_1, c_k
    }
    int edge_triples = 0;
    bool ok = true;
    for (int i = 1; i <= k && ok; ++i)
      for (int j = i + 1; j <= k && ok; ++j) {
        std::array<ElementSet, 3> lines = {
            ElementSet::of({i - 1, j - 1}),
            ElementSet::of({k + i - 1, k + j - 1}),
            ElementSet::of({2 * k + i - 1, 2 * k + j - 1})};
        std::sort(lines.begin(), lines.end());
        int matches = 0;
        bool edge_ok = false;
        for (const auto& t : triples)
          if (t.lines == lines) {
            ++matches;
            if (i == 1 && j == k)
              edge_ok = t.broken() && t.broken_unions() == std::vector{bad_face};
            else
              edge_ok = t.fully_present();
          }
        ok = matches == 1 && edge_ok;
        edge_triples += matches;
      }
    ok = ok && edge_triples == k * (k - 1) / 2;
    for (const auto& t : triples)
      if (t.broken()) ok = ok && t.broken_unions() == std::vector{bad_face};
    run("mk" + std::to_string(k) + ": one prism per edge, broken only at edge (1," +
            std::to_string(k) + ")",
        ok);
  }

  int failed = 0;
  std::string first_fail;
  for (const auto& c : checks)
    if (!c.passed) {
      ++failed;
      if (first_fail.empty()) first_fail = c.name;
    }
  std::cout << checks.size() - failed << "/" << checks.size() << " checks passed\n";
  if (failed) {
    std::cerr << "first failing check: " << first_fail << "\n";
    return 5;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sparse paving matroid toolkit"};
  app.require_subcommand(1);

  // build
  auto* build = app.add_subcommand("build", "construct a matroid and write a matroid file");
  std::string family, graph_path, out_path;
  std::vector<std::string> relax_specs;
  int k = 3, rand_n = 8, rand_r = 4, rand_chs = 0;
  std::uint64_t seed = 0;
  build->add_option("family", family, "mk | tictactoe | vamos | graph-prism | random")
      ->required();
  build->add_option("--k", k, "vertex count for mk");
  build->add_option("--graph", graph_path, "edge-list file for graph-prism");
  build->add_option("--relax", relax_specs,
                    "relaxation i,j:fam for graph-prism (0-based vertices; repeatable)");
  build->add_option("--n", rand_n, "ground size for random");
  build->add_option("--r", rand_r, "rank for random");
  build->add_option("--chs", rand_chs, "target circuit-hyperplane count for random");
  auto* seed_opt = build->add_option("--seed", seed, "seed for random (required there)");
  build->add_option("--out", out_path, "output path (stdout if omitted)");

  // check-pm
  auto* checkpm = app.add_subcommand("check-pm", "pseudomodularity check");
  std::string in_path, method = "both";
  int jobs = 1;
  std::uint64_t flat_cap = GeometricLattice::default_flat_cap;
  bool json = false;
  checkpm->add_option("matroid", in_path, "matroid file")->required();
  checkpm->add_option("--method", method, "naive | pruned | both")
      ->check(CLI::IsMember({"naive", "pruned", "both"}));
  checkpm->add_option("--jobs", jobs, "worker threads for the naive scan");
  checkpm->add_option("--flat-cap", flat_cap, "refuse lattices larger than this");
  checkpm->add_flag("--json", json, "JSON report");

  // dual
  auto* dual = app.add_subcommand("dual", "write the dual matroid");
  std::string dual_in, dual_out;
  dual->add_option("matroid", dual_in, "matroid file")->required();
  dual->add_option("--out", dual_out, "output path (stdout if omitted)");

  // relax
  auto* relax = app.add_subcommand("relax", "relax one circuit hyperplane");
  std::string relax_in, relax_ch, relax_out;
  relax->add_option("matroid", relax_in, "matroid file")->required();
  relax->add_option("--ch", relax_ch, "circuit hyperplane as labels, e.g. a1,a3,c1,c3")
      ->required();
  relax->add_option("--out", relax_out, "output path (stdout if omitted)");

  // stats
  auto* stats = app.add_subcommand("stats", "print counts and flat profile");
  std::string stats_in;
  stats->add_option("matroid", stats_in, "matroid file")->required();

  // minor
  auto* minor = app.add_subcommand("minor", "search for a spanning restriction isomorphic to a target");
  std::string minor_host, minor_target;
  minor->add_option("host", minor_host, "host matroid file")->required();
  minor->add_option("target", minor_target, "target matroid file")->required();

  // find-vamos
  auto* fv = app.add_subcommand("find-vamos", "search for a Vamos restriction");
  std::string fv_in;
  fv->add_option("matroid", fv_in, "matroid file")->required();

  // search
  auto* search = app.add_subcommand("search", "prism-relaxation search over graphs");
  std::vector<std::string> graph_files, bipartites;
  std::vector<int> cycles, completes;
  bool search_json = false;
  search->add_option("graphs", graph_files, "edge-list files");
  search->add_option("--cycle", cycles, "add a cycle graph C_n (repeatable)");
  search->add_option("--complete", completes, "add a complete graph K_n (repeatable)");
  search->add_option("--bipartite", bipartites, "add K_{m,n} as m,n (repeatable)");
  search->add_flag("--json", search_json, "JSON report");

  // verify-paper
  auto* verify = app.add_subcommand("verify-paper", "run the end-to-end claim checks");
  int kmax = 3, verify_jobs = 1;
  verify->add_option("--kmax", kmax, "check families up to this k (3..6)");
  verify->add_option("--jobs", verify_jobs, "worker threads for the naive scan");

  CLI11_PARSE(app, argc, argv);

  try {
    if (build->parsed())
      return cmd_build(family, k, graph_path, relax_specs, rand_n, rand_r, rand_chs,
                       seed, seed_opt->count() > 0, out_path);
    if (checkpm->parsed()) return cmd_check_pm(in_path, method, jobs, flat_cap, json);
    if (dual->parsed()) {
      emit_matroid(load_matroid(dual_in).dual(), dual_out);
      return 0;
    }
    if (relax->parsed()) {
      SparsePavingMatroid m = load_matroid(relax_in);
      emit_matroid(m.relaxed(set_from_label_list(m, relax_ch)), relax_out);
      return 0;
    }
    if (stats->parsed()) return cmd_stats(stats_in);
    if (minor->parsed()) return cmd_minor(minor_host, minor_target);
    if (fv->parsed()) return cmd_find_vamos(fv_in);
    if (search->parsed())
      return cmd_search(graph_files, cycles, completes, bipartites, search_json);
    if (verify->parsed()) return cmd_verify_paper(kmax, verify_jobs);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
