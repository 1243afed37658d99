#include "paving/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "paving/builders.hpp"

namespace paving {

using nlohmann::ordered_json;

namespace {

std::vector<std::string> sorted_labels(const SparsePavingMatroid& m, ElementSet s) {
  std::vector<std::string> out;
  for (int e : s) out.push_back(m.labels().name(e));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::string to_matroid_file(const SparsePavingMatroid& m) {
  ordered_json j;
  j["format_version"] = 1;
  j["n"] = m.ground_size();
  j["rank"] = m.rank();
  j["labels"] = ordered_json::array();
  for (int e = 0; e < m.ground_size(); ++e) j["labels"].push_back(m.labels().name(e));
  std::vector<std::vector<std::string>> chs;
  for (ElementSet h : m.circuit_hyperplanes()) chs.push_back(sorted_labels(m, h));
  std::sort(chs.begin(), chs.end());
  j["circuit_hyperplanes"] = chs;
  return j.dump(2) + "\n";
}

SparsePavingMatroid from_matroid_file(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::parse_error, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw Error(ErrorCode::parse_error, "top level must be an object");

  auto need = [&](const char* key) -> const ordered_json& {
    auto it = j.find(key);
    if (it == j.end())
      throw Error(ErrorCode::parse_error, std::string("missing field: ") + key);
    return *it;
  };

  const auto& ver = need("format_version");
  if (!ver.is_number_integer() || ver.get<int>() != 1)
    throw Error(ErrorCode::parse_error, "unsupported format_version");
  const auto& jn = need("n");
  const auto& jr = need("rank");
  if (!jn.is_number_integer() || !jr.is_number_integer())
    throw Error(ErrorCode::parse_error, "n and rank must be integers");
  int n = jn.get<int>();
  int r = jr.get<int>();

  const auto& jl = need("labels");
  if (!jl.is_array()) throw Error(ErrorCode::parse_error, "labels must be an array");
  std::vector<std::string> names;
  for (const auto& item : jl) {
    if (!item.is_string())
      throw Error(ErrorCode::parse_error, "labels must be strings");
    names.push_back(item.get<std::string>());
  }
  if (static_cast<int>(names.size()) != n)
    throw Error(ErrorCode::parse_error, "labels length does not match n");
  LabelMap labels = names.empty() ? LabelMap() : LabelMap::from_names(names);

  const auto& jc = need("circuit_hyperplanes");
  if (!jc.is_array())
    throw Error(ErrorCode::parse_error, "circuit_hyperplanes must be an array");
  std::vector<ElementSet> chs;
  for (const auto& harr : jc) {
    if (!harr.is_array())
      throw Error(ErrorCode::parse_error, "each circuit hyperplane must be an array");
    ElementSet h;
    for (const auto& item : harr) {
      if (!item.is_string())
        throw Error(ErrorCode::parse_error, "circuit hyperplane entries must be labels");
      auto idx = labels.index_of(item.get<std::string>());
      if (!idx)
        throw Error(ErrorCode::parse_error,
                    "unknown label in circuit hyperplane: " + item.get<std::string>());
      h = h.with(*idx);
    }
    chs.push_back(h);
  }
  return SparsePavingMatroid::validate(n, r, chs, labels);
}

void save_matroid(const SparsePavingMatroid& m, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::parse_error, "cannot open for writing: " + path);
  out << to_matroid_file(m);
}

SparsePavingMatroid load_matroid(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::parse_error, "cannot open: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_matroid_file(buf.str());
}

ordered_json flat_json(const SparsePavingMatroid& m, const Flat& f) {
  ordered_json j;
  j["set"] = sorted_labels(m, f.set);
  j["rank"] = f.rank;
  return j;
}

ordered_json pm_report_json(const SparsePavingMatroid& m, const PmReport& rep) {
  ordered_json j;
  j["verdict"] = rep.ok() ? "pseudomodular" : "violated";
  j["method"] = rep.method == PmMethod::naive ? "naive" : "pruned";
  j["triples_examined"] = rep.triples_examined;
  if (rep.witness) {
    const PmWitness& w = *rep.witness;
    ordered_json wit;
    wit["a"] = flat_json(m, w.a);
    wit["b"] = flat_json(m, w.b);
    wit["c"] = flat_json(m, w.c);
    wit["join_ab"] = flat_json(m, w.join_ab);
    wit["join_ac"] = flat_json(m, w.join_ac);
    wit["join_bc"] = flat_json(m, w.join_bc);
    wit["join_abc"] = flat_json(m, w.join_abc);
    wit["meet_ac_bc"] = flat_json(m, w.meet_ac_bc);
    wit["meet_ab"] = flat_json(m, w.meet_ab);
    j["witness"] = wit;
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

namespace {

ordered_json labels_json(const LabelMap& labels, ElementSet s) {
  std::vector<std::string> out;
  for (int e : s) out.push_back(labels.name(e));
  std::sort(out.begin(), out.end());
  return out;
}

ordered_json witness_json(const LabelMap& labels, const RestrictionWitness& w) {
  ordered_json j;
  j["kept"] = labels_json(labels, w.kept);
  j["deleted"] = labels_json(labels, w.deleted);
  j["perm"] = w.perm;
  return j;
}

}  // namespace

ordered_json search_report_json(const std::vector<SimpleGraph>& graphs,
                                const SearchReport& rep) {
  ordered_json out = ordered_json::array();
  for (const GraphRecord& rec : rep.graphs) {
    const SimpleGraph& g = graphs.at(rec.graph_index);
    LabelMap labels = class_labels(g.vertex_count);
    ordered_json jg;
    jg["graph"] = rec.graph_index;
    jg["vertices"] = g.vertex_count;
    jg["edges"] = g.edges.size();
    jg["triangle_free"] = rec.triangle_free;
    jg["two_connected"] = rec.two_connected;
    ordered_json cases = ordered_json::array();
    for (const RelaxationOutcome& c : rec.cases) {
      ordered_json jc;
      jc["relaxed"] = labels_json(labels, c.relaxed_ch);
      jc["vamos_found"] = c.vamos.has_value();
      jc["m3_found"] = c.m3.has_value();
      if (c.vamos) jc["vamos_witness"] = witness_json(labels, *c.vamos);
      if (c.m3) jc["m3_witness"] = witness_json(labels, *c.m3);
      cases.push_back(jc);
    }
    jg["cases"] = cases;
    out.push_back(jg);
  }
  return out;
}

}  // namespace paving
