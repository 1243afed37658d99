#include "paving/builders.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>

namespace paving {

LabelMap class_labels(int v) {
  std::vector<std::string> names;
  names.reserve(static_cast<size_t>(3 * v));
  for (char cls : {'a', 'b', 'c'})
    for (int i = 1; i <= v; ++i) names.push_back(std::string(1, cls) + std::to_string(i));
  return LabelMap::from_names(std::move(names));
}

SparsePavingMatroid build_mk(int k) {
  if (k < 3) throw Error(ErrorCode::k_too_small, "k = " + std::to_string(k) + ", need k >= 3");
  if (3 * k > ElementSet::max_ground_size)
    throw Error(ErrorCode::out_of_range, "3k = " + std::to_string(3 * k) + " exceeds 64");

  auto a = [&](int i) { return i - 1; };
  auto b = [&](int i) { return k + i - 1; };
  auto c = [&](int i) { return 2 * k + i - 1; };

  std::vector<ElementSet> chs;
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) {
      chs.push_back(ElementSet::of({a(i), a(j), b(i), b(j)}));
      if (!(i == 1 && j == k)) chs.push_back(ElementSet::of({a(i), a(j), c(i), c(j)}));
      chs.push_back(ElementSet::of({b(i), b(j), c(i), c(j)}));
    }
  return SparsePavingMatroid::validate(3 * k, 4, std::move(chs), class_labels(k));
}

SparsePavingMatroid build_tictactoe() { return build_mk(3).dual(); }

SparsePavingMatroid build_vamos() {
  LabelMap labels = LabelMap::from_names({"a", "a'", "b", "b'", "c", "c'", "d", "d'"});
  std::vector<ElementSet> chs = {
      ElementSet::of({0, 1, 2, 3}),  // a a' b b'
      ElementSet::of({0, 1, 4, 5}),  // a a' c c'
      ElementSet::of({2, 3, 4, 5}),  // b b' c c'
      ElementSet::of({2, 3, 6, 7}),  // b b' d d'
      ElementSet::of({4, 5, 6, 7}),  // c c' d d'
  };
  return SparsePavingMatroid::validate(8, 4, std::move(chs), std::move(labels));
}

const char* to_string(PrismFamily family) {
  switch (family) {
    case PrismFamily::ab: return "ab";
    case PrismFamily::ac: return "ac";
    case PrismFamily::bc: return "bc";
  }
  return "?";
}

SparsePavingMatroid graph_prism(const SimpleGraph& g,
                                const std::vector<PrismRelaxation>& relaxations) {
  if (g.edges.size() < 2)
    throw Error(ErrorCode::too_few_edges,
                "need at least 2 edges for rank 4, got " + std::to_string(g.edges.size()));

  std::set<std::pair<std::pair<int, int>, PrismFamily>> relaxed;
  for (const PrismRelaxation& r : relaxations) {
    auto [u, v] = r.edge;
    if (u > v) std::swap(u, v);
    if (!g.has_edge(u, v))
      throw Error(ErrorCode::bad_relaxation, "edge (" + std::to_string(u) + ", " +
                                                 std::to_string(v) + ") is not in the graph");
    if (!relaxed.insert({{u, v}, r.family}).second)
      throw Error(ErrorCode::bad_relaxation,
                  "relaxation (" + std::to_string(u) + ", " + std::to_string(v) + "):" +
                      to_string(r.family) + " repeats");
  }

  int vc = g.vertex_count;
  std::vector<ElementSet> chs;
  for (auto [i, j] : g.edges) {
    auto keep = [&](PrismFamily f) { return relaxed.count({{i, j}, f}) == 0; };
    if (keep(PrismFamily::ab)) chs.push_back(ElementSet::of({i, j, vc + i, vc + j}));
    if (keep(PrismFamily::ac)) chs.push_back(ElementSet::of({i, j, 2 * vc + i, 2 * vc + j}));
    if (keep(PrismFamily::bc))
      chs.push_back(ElementSet::of({vc + i, vc + j, 2 * vc + i, 2 * vc + j}));
  }
  return SparsePavingMatroid::validate(3 * vc, 4, std::move(chs), class_labels(vc));
}

SparsePavingMatroid random_sparse_paving(int n, int r, int target_ch_count, std::uint64_t seed) {
  if (n < 1 || n > 16)
    throw Error(ErrorCode::out_of_range,
                "random instances are capped at 1 <= n <= 16, got n = " + std::to_string(n));
  if (r < 1 || r > n)
    throw Error(ErrorCode::bad_rank, "rank " + std::to_string(r) + " outside [1, " +
                                         std::to_string(n) + "]");
  if (target_ch_count < 0)
    throw Error(ErrorCode::out_of_range, "negative circuit-hyperplane target");

  std::mt19937_64 rng(seed);
  std::vector<ElementSet> kept;
  ElementSet ground = ElementSet::full(n);
  std::vector<int> pool(static_cast<size_t>(n));
  long long attempts = 64LL * target_ch_count + 256;

  while (static_cast<int>(kept.size()) < target_ch_count && attempts-- > 0) {
    for (int i = 0; i < n; ++i) pool[static_cast<size_t>(i)] = i;
    ElementSet candidate;
    for (int i = 0; i < r; ++i) {
      int j = i + static_cast<int>(rng() % static_cast<std::uint64_t>(n - i));
      std::swap(pool[static_cast<size_t>(i)], pool[static_cast<size_t>(j)]);
      candidate = candidate.with(pool[static_cast<size_t>(i)]);
    }
    if (candidate == ground) continue;  // would contradict the stored rank
    bool ok = true;
    for (ElementSet h : kept)
      if (h == candidate || (h & candidate).count() > r - 2) {
        ok = false;
        break;
      }
    if (ok) kept.push_back(candidate);
  }
  return SparsePavingMatroid::validate(n, r, std::move(kept));
}

}  // namespace paving
