#include "paving/analysis.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "paving/builders.hpp"

namespace paving {

std::vector<ElementSet> PrismTriple::present_chs() const {
  std::vector<ElementSet> out;
  auto u = unions();
  for (int i = 0; i < 3; ++i)
    if (present[i]) out.push_back(u[i]);
  return out;
}

std::vector<ElementSet> PrismTriple::broken_unions() const {
  std::vector<ElementSet> out;
  auto u = unions();
  for (int i = 0; i < 3; ++i)
    if (!present[i]) out.push_back(u[i]);
  return out;
}

std::optional<RestrictionWitness> find_restriction_isomorphic(
    const SparsePavingMatroid& m, const SparsePavingMatroid& target) {
  if (m.rank() != target.rank())
    throw Error(ErrorCode::rank_mismatch,
                "host has rank " + std::to_string(m.rank()) + " but target has rank " +
                    std::to_string(target.rank()));
  const int n = m.ground_size();
  const int k = target.ground_size();
  if (k > n) return std::nullopt;

  std::optional<RestrictionWitness> hit;
  for_each_k_subset(n, k, [&](std::uint64_t mask) {
    if (hit) return;
    ElementSet kept = ElementSet::from_bits(mask);
    if (m.rank_of(kept) != target.rank()) return;  // non-spanning restriction
    SparsePavingMatroid sub = m.deleted(kept.complement(n));
    if (auto perm = find_isomorphism(sub, target))
      hit = RestrictionWitness{kept, kept.complement(n), std::move(*perm)};
  });
  return hit;
}

std::optional<RestrictionWitness> find_vamos(const SparsePavingMatroid& m) {
  if (m.rank() != 4)
    throw Error(ErrorCode::rank_mismatch,
                "Vamos search needs a rank-4 matroid, got rank " +
                    std::to_string(m.rank()));
  return find_restriction_isomorphic(m, build_vamos());
}

std::vector<PrismTriple> prism_triples(const SparsePavingMatroid& m) {
  if (m.rank() != 4)
    throw Error(ErrorCode::rank_mismatch,
                "prism triples are defined for rank-4 matroids, got rank " +
                    std::to_string(m.rank()));
  const auto& chs = m.circuit_hyperplanes();

  std::set<std::array<std::uint64_t, 3>> seen;
  std::vector<PrismTriple> out;
  for (std::size_t i = 0; i < chs.size(); ++i)
    for (std::size_t j = i + 1; j < chs.size(); ++j) {
      ElementSet shared = chs[i] & chs[j];
      if (shared.count() != 2) continue;
      std::array<ElementSet, 3> lines = {shared, chs[i] - shared, chs[j] - shared};
      std::sort(lines.begin(), lines.end());
      if (!seen.insert({lines[0].bits(), lines[1].bits(), lines[2].bits()}).second)
        continue;
      PrismTriple t;
      t.lines = lines;
      auto u = t.unions();
      for (int q = 0; q < 3; ++q) t.present[q] = m.is_circuit_hyperplane(u[q]);
      out.push_back(t);
    }
  std::sort(out.begin(), out.end(), [](const PrismTriple& a, const PrismTriple& b) {
    return std::array{a.lines[0].bits(), a.lines[1].bits(), a.lines[2].bits()} <
           std::array{b.lines[0].bits(), b.lines[1].bits(), b.lines[2].bits()};
  });
  return out;
}

std::vector<SeriesSite> series_shortcut_sites(const SparsePavingMatroid& m) {
  std::vector<SeriesSite> out;
  if (m.rank() != 4) return out;
  for (const PrismTriple& t : prism_triples(m)) {
    if (!t.fully_present()) continue;
    for (const ElementSet& line : t.lines)
      if (is_in_series(m, line, t.support())) out.push_back({line, t});
  }
  return out;
}

SearchReport triangle_free_search(const std::vector<SimpleGraph>& graphs) {
  SearchReport report;
  const SparsePavingMatroid m3 = build_mk(3);
  for (std::size_t g = 0; g < graphs.size(); ++g) {
    const SimpleGraph& graph = graphs[g];
    GraphRecord rec;
    rec.graph_index = static_cast<int>(g);
    rec.triangle_free = is_triangle_free(graph);
    rec.two_connected = is_two_connected(graph);
    SparsePavingMatroid prism = graph_prism(graph, {});
    for (const ElementSet& ch : prism.circuit_hyperplanes()) {
      RelaxationOutcome outcome;
      outcome.relaxed_ch = ch;
      SparsePavingMatroid relaxed = prism.relaxed(ch);
      outcome.vamos = find_vamos(relaxed);
      outcome.m3 = find_restriction_isomorphic(relaxed, m3);
      rec.cases.push_back(std::move(outcome));
    }
    report.graphs.push_back(std::move(rec));
  }
  return report;
}

}  // namespace paving
