#pragma once

#include <array>
#include <optional>
#include <vector>

#include "paving/graph.hpp"
#include "paving/matroid.hpp"

namespace paving {

// Three disjoint 2-element lines {x,x'}, {y,y'}, {z,z'} whose pairwise
// 4-element unions include at least two circuit hyperplanes.  Lines are kept
// sorted by mask, so the triple has one canonical form.
struct PrismTriple {
  std::array<ElementSet, 3> lines;
  std::array<bool, 3> present;  // present[i]: is unions()[i] a circuit hyperplane

  // unions()[0] = lines[0]|lines[1], [1] = lines[0]|lines[2], [2] = lines[1]|lines[2]
  std::array<ElementSet, 3> unions() const {
    return {lines[0] | lines[1], lines[0] | lines[2], lines[1] | lines[2]};
  }
  int present_count() const {
    return int(present[0]) + int(present[1]) + int(present[2]);
  }
  bool fully_present() const { return present_count() == 3; }
  bool broken() const { return present_count() == 2; }
  std::vector<ElementSet> present_chs() const;
  std::vector<ElementSet> broken_unions() const;
  ElementSet support() const { return lines[0] | lines[1] | lines[2]; }

  bool operator==(const PrismTriple& o) const {
    return lines == o.lines && present == o.present;
  }
};

// Witness that M restricted to `kept` is isomorphic to some target: perm[i]
// is the target element for element i of the restriction (restriction
// elements are relabelled 0..|kept|-1 in ascending ground-set order).
struct RestrictionWitness {
  ElementSet kept;
  ElementSet deleted;
  std::vector<int> perm;
};

// A pair of elements that is in series within the 6-element support of a
// fully-present prism.
struct SeriesSite {
  ElementSet pair;
  PrismTriple prism;
};

struct RelaxationOutcome {
  ElementSet relaxed_ch;
  std::optional<RestrictionWitness> vamos;
  std::optional<RestrictionWitness> m3;
};

struct GraphRecord {
  int graph_index = 0;
  bool triangle_free = false;
  bool two_connected = false;
  std::vector<RelaxationOutcome> cases;
};

struct SearchReport {
  std::vector<GraphRecord> graphs;
};

// Exhaustive search for a spanning restriction of `m` isomorphic to `target`
// (equal ranks required).  Subsets of size |target| are tried in ascending
// mask order; the first hit wins, so results are reproducible.
std::optional<RestrictionWitness> find_restriction_isomorphic(
    const SparsePavingMatroid& m, const SparsePavingMatroid& target);

// find_restriction_isomorphic specialised to the Vamos matroid.
std::optional<RestrictionWitness> find_vamos(const SparsePavingMatroid& m);

// All prism triples of a rank-4 matroid, sorted by their line masks.  Two
// present unions always share a line, so candidates are generated from pairs
// of circuit hyperplanes meeting in exactly two elements.
std::vector<PrismTriple> prism_triples(const SparsePavingMatroid& m);

// For every fully-present prism, each of its three lines that is_in_series
// confirms to be in series within the prism's support.
std::vector<SeriesSite> series_shortcut_sites(const SparsePavingMatroid& m);

// For each graph: record triangle-freeness and 2-connectivity, then for each
// single-circuit-hyperplane relaxation of its prism matroid search for Vamos
// and M_3 restrictions.
SearchReport triangle_free_search(const std::vector<SimpleGraph>& graphs);

}  // namespace paving
