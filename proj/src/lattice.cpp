#include "paving/lattice.hpp"

#include <algorithm>
#include <string>

namespace paving {

GeometricLattice GeometricLattice::enumerate(const SparsePavingMatroid& m,
                                             std::uint64_t flat_cap) {
  int n = m.ground_size();
  int r = m.rank();
  const auto& chs = m.circuit_hyperplanes();

  // Structural count first, so oversized lattices fail before allocation.
  std::uint64_t total = 1;  // top
  if (r >= 1) total += 1;   // the rank-0 flat (closure of the empty set)
  for (int i = 1; i <= r - 2; ++i) {
    total += binom(n, i);
    if (total > flat_cap)
      throw Error(ErrorCode::too_large,
                  "flat count exceeds the cap of " + std::to_string(flat_cap));
  }
  if (r >= 2) {
    std::uint64_t hyperplanes =
        binom(n, r - 1) - static_cast<std::uint64_t>(r) * chs.size() + chs.size();
    total += hyperplanes;
  }
  if (total > flat_cap)
    throw Error(ErrorCode::too_large,
                "flat count " + std::to_string(total) + " exceeds the cap of " +
                    std::to_string(flat_cap));

  GeometricLattice lat(m);
  lat.flats_.reserve(total);

  if (r == 0) {
    lat.flats_.push_back({lat.m_.ground_set(), 0});  // everything is a loop
  } else if (r == 1) {
    lat.flats_.push_back({lat.m_.closure_of(ElementSet()), 0});
    lat.flats_.push_back({lat.m_.ground_set(), 1});
  } else {
    for (int size = 0; size <= r - 2; ++size)
      for_each_k_subset(n, size, [&](std::uint64_t mask) {
        lat.flats_.push_back({ElementSet::from_bits(mask), size});
      });
    // Hyperplanes: free (r-1)-sets and the circuit hyperplanes, merged in
    // ascending mask order (chs are already sorted).
    size_t next_ch = 0;
    for_each_k_subset(n, r - 1, [&](std::uint64_t mask) {
      ElementSet x = ElementSet::from_bits(mask);
      bool covered = false;
      for (ElementSet h : chs)
        if (x.subset_of(h)) {
          covered = true;
          break;
        }
      if (covered) return;
      while (next_ch < chs.size() && chs[next_ch] < x)
        lat.flats_.push_back({chs[next_ch++], r - 1});
      lat.flats_.push_back({x, r - 1});
    });
    while (next_ch < chs.size()) lat.flats_.push_back({chs[next_ch++], r - 1});
    lat.flats_.push_back({lat.m_.ground_set(), r});
  }

  lat.use_direct_ = n <= 20;
  if (lat.use_direct_) {
    lat.direct_.assign(std::uint64_t{1} << n, 0);
    for (std::uint32_t id = 0; id < lat.flats_.size(); ++id)
      lat.direct_[lat.flats_[id].set.bits()] = id + 1;
  } else {
    lat.by_mask_.reserve(lat.flats_.size() * 2);
    for (std::uint32_t id = 0; id < lat.flats_.size(); ++id)
      lat.by_mask_.emplace(lat.flats_[id].set.bits(), id);
  }
  return lat;
}

std::optional<std::uint32_t> GeometricLattice::find(ElementSet set) const {
  if (use_direct_) {
    std::uint32_t v = direct_[set.bits()];
    if (v == 0) return std::nullopt;
    return v - 1;
  }
  auto it = by_mask_.find(set.bits());
  if (it == by_mask_.end()) return std::nullopt;
  return it->second;
}

std::uint32_t GeometricLattice::id_of(const Flat& f) const {
  auto id = find(f.set);
  if (!id || flats_[*id].rank != f.rank)
    throw Error(ErrorCode::foreign_flat,
                "flat " + f.set.to_string() + " of rank " + std::to_string(f.rank) +
                    " is not in this lattice");
  return *id;
}

Flat GeometricLattice::join(const Flat& f1, const Flat& f2) const {
  std::uint32_t i = id_of(f1), j = id_of(f2);
  return flats_[join_id(i, j)];
}

Flat GeometricLattice::meet(const Flat& f1, const Flat& f2) const {
  std::uint32_t i = id_of(f1), j = id_of(f2);
  return flats_[meet_id(i, j)];
}

std::vector<Flat> GeometricLattice::colines() const {
  std::vector<Flat> out;
  int target = m_.rank() - 2;
  if (target < 0) return out;
  for (const Flat& f : flats_)
    if (f.rank == target) out.push_back(f);
  return out;
}

std::vector<ChColinePair> ch_coline_incidence(const SparsePavingMatroid& m) {
  std::vector<ChColinePair> out;
  const auto& chs = m.circuit_hyperplanes();
  int r = m.rank();
  for (std::uint32_t i = 0; i < chs.size(); ++i)
    for (std::uint32_t j = i + 1; j < chs.size(); ++j) {
      ElementSet meet = chs[i] & chs[j];
      // Distinct circuit hyperplanes intersect in <= r-2 elements, so the
      // meet flat is the intersection itself and its rank is its size.
      if (meet.count() == r - 2) out.push_back({i, j, Flat{meet, r - 2}});
    }
  return out;
}

}  // namespace paving
