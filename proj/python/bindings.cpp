// Python veneer over the core library.  Sets cross the boundary as sorted
// lists of element indices; labels stay available through Matroid.labels.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "paving/analysis.hpp"
#include "paving/builders.hpp"
#include "paving/io.hpp"
#include "paving/lattice.hpp"
#include "paving/matroid.hpp"
#include "paving/pseudomodular.hpp"

namespace py = pybind11;
using namespace paving;

namespace {

ElementSet to_set(const std::vector<int>& elements) {
  return ElementSet::from_indices(elements);
}

std::vector<int> from_set(ElementSet s) { return s.to_vector(); }

std::vector<std::vector<int>> chs_lists(const SparsePavingMatroid& m) {
  std::vector<std::vector<int>> out;
  for (ElementSet h : m.circuit_hyperplanes()) out.push_back(from_set(h));
  return out;
}

py::dict flat_dict(const Flat& f) {
  py::dict d;
  d["set"] = from_set(f.set);
  d["rank"] = f.rank;
  return d;
}

py::dict pm_report_dict(const PmReport& rep) {
  py::dict d;
  d["verdict"] = rep.ok() ? "pseudomodular" : "violated";
  d["method"] = rep.method == PmMethod::naive ? "naive" : "pruned";
  d["triples_examined"] = rep.triples_examined;
  if (rep.witness) {
    const PmWitness& w = *rep.witness;
    py::dict wit;
    wit["a"] = flat_dict(w.a);
    wit["b"] = flat_dict(w.b);
    wit["c"] = flat_dict(w.c);
    wit["join_ab"] = flat_dict(w.join_ab);
    wit["join_ac"] = flat_dict(w.join_ac);
    wit["join_bc"] = flat_dict(w.join_bc);
    wit["join_abc"] = flat_dict(w.join_abc);
    wit["meet_ac_bc"] = flat_dict(w.meet_ac_bc);
    wit["meet_ab"] = flat_dict(w.meet_ab);
    d["witness"] = wit;
  } else {
    d["witness"] = py::none();
  }
  return d;
}

py::object witness_obj(const std::optional<RestrictionWitness>& w) {
  if (!w) return py::none();
  py::dict d;
  d["kept"] = from_set(w->kept);
  d["deleted"] = from_set(w->deleted);
  d["perm"] = w->perm;
  return d;
}

py::dict prism_dict(const PrismTriple& t) {
  py::dict d;
  py::list lines;
  for (ElementSet l : t.lines) lines.append(from_set(l));
  d["lines"] = lines;
  d["present"] = std::vector<bool>(t.present.begin(), t.present.end());
  d["fully_present"] = t.fully_present();
  d["broken"] = t.broken();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "sparse paving matroid toolkit";

  py::register_exception<Error>(mod, "PavingError");

  py::class_<SparsePavingMatroid>(mod, "Matroid")
      .def_property_readonly("n", &SparsePavingMatroid::ground_size)
      .def_property_readonly("rank", &SparsePavingMatroid::rank)
      .def_property_readonly("circuit_hyperplanes", &chs_lists)
      .def_property_readonly("labels",
                             [](const SparsePavingMatroid& m) {
                               std::vector<std::string> names;
                               for (int e = 0; e < m.ground_size(); ++e)
                                 names.push_back(m.labels().name(e));
                               return names;
                             })
      .def("rank_of",
           [](const SparsePavingMatroid& m, const std::vector<int>& x) {
             return m.rank_of(to_set(x));
           })
      .def("closure_of",
           [](const SparsePavingMatroid& m, const std::vector<int>& x) {
             return from_set(m.closure_of(to_set(x)));
           })
      .def("is_independent",
           [](const SparsePavingMatroid& m, const std::vector<int>& x) {
             return m.is_independent(to_set(x));
           })
      .def("is_basis",
           [](const SparsePavingMatroid& m, const std::vector<int>& x) {
             return m.is_basis(to_set(x));
           })
      .def("basis_count", &SparsePavingMatroid::basis_count)
      .def("dual", &SparsePavingMatroid::dual)
      .def("relaxed",
           [](const SparsePavingMatroid& m, const std::vector<int>& ch) {
             return m.relaxed(to_set(ch));
           })
      .def("deleted",
           [](const SparsePavingMatroid& m, const std::vector<int>& d) {
             return m.deleted(to_set(d));
           })
      .def("contracted",
           [](const SparsePavingMatroid& m, const std::vector<int>& c) {
             return m.contracted(to_set(c));
           })
      .def("__eq__", [](const SparsePavingMatroid& a,
                        const SparsePavingMatroid& b) { return a == b; })
      .def("__repr__", [](const SparsePavingMatroid& m) {
        return "Matroid(n=" + std::to_string(m.ground_size()) +
               ", rank=" + std::to_string(m.rank()) + ", chs=" +
               std::to_string(m.circuit_hyperplanes().size()) + ")";
      });

  mod.def("validate",
          [](int n, int r, const std::vector<std::vector<int>>& chs,
             const std::vector<std::string>& labels) {
            std::vector<ElementSet> sets;
            for (const auto& h : chs) sets.push_back(to_set(h));
            LabelMap lm = labels.empty() ? LabelMap() : LabelMap::from_names(labels);
            return SparsePavingMatroid::validate(n, r, sets, lm);
          },
          py::arg("n"), py::arg("rank"), py::arg("circuit_hyperplanes"),
          py::arg("labels") = std::vector<std::string>{});

  mod.def("build_mk", &build_mk, py::arg("k"));
  mod.def("build_tictactoe", &build_tictactoe);
  mod.def("build_vamos", &build_vamos);
  mod.def("random_sparse_paving", &random_sparse_paving, py::arg("n"), py::arg("rank"),
          py::arg("target_ch_count"), py::arg("seed"));

  mod.def("graph_prism",
          [](int vertex_count, const std::vector<std::pair<int, int>>& edges,
             const std::vector<std::pair<std::pair<int, int>, std::string>>& relaxations) {
            std::vector<PrismRelaxation> rs;
            for (const auto& [edge, fam] : relaxations) {
              PrismFamily family;
              if (fam == "ab")
                family = PrismFamily::ab;
              else if (fam == "ac")
                family = PrismFamily::ac;
              else if (fam == "bc")
                family = PrismFamily::bc;
              else
                throw Error(ErrorCode::parse_error, "family must be ab, ac or bc");
              rs.push_back({edge, family});
            }
            return graph_prism(make_graph(vertex_count, edges), rs);
          },
          py::arg("vertex_count"), py::arg("edges"),
          py::arg("relaxations") = std::vector<std::pair<std::pair<int, int>, std::string>>{});

  mod.def("is_pseudomodular_naive",
          [](const SparsePavingMatroid& m, int jobs) {
            return pm_report_dict(is_pseudomodular_naive(m, jobs));
          },
          py::arg("matroid"), py::arg("jobs") = 1);
  mod.def("is_pseudomodular_pruned",
          [](const SparsePavingMatroid& m) {
            return pm_report_dict(is_pseudomodular_pruned(m));
          },
          py::arg("matroid"));

  mod.def("find_vamos",
          [](const SparsePavingMatroid& m) { return witness_obj(find_vamos(m)); },
          py::arg("matroid"));
  mod.def("find_restriction_isomorphic",
          [](const SparsePavingMatroid& m, const SparsePavingMatroid& target) {
            return witness_obj(find_restriction_isomorphic(m, target));
          },
          py::arg("matroid"), py::arg("target"));

  mod.def("prism_triples",
          [](const SparsePavingMatroid& m) {
            py::list out;
            for (const PrismTriple& t : prism_triples(m)) out.append(prism_dict(t));
            return out;
          },
          py::arg("matroid"));

  mod.def("flat_counts",
          [](const SparsePavingMatroid& m) {
            GeometricLattice lat = GeometricLattice::enumerate(m);
            std::vector<std::uint64_t> by_rank(static_cast<std::size_t>(m.rank()) + 1, 0);
            for (std::uint32_t i = 0; i < lat.flat_count(); ++i)
              ++by_rank[static_cast<std::size_t>(lat.flat(i).rank)];
            return by_rank;
          },
          py::arg("matroid"));

  mod.def("serialize", &to_matroid_file, py::arg("matroid"));
  mod.def("parse", &from_matroid_file, py::arg("text"));
}
