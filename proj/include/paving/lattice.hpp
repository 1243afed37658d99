#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "paving/matroid.hpp"

namespace paving {

/// A closed set together with its rank.
struct Flat {
  ElementSet set;
  int rank = 0;

  friend bool operator==(const Flat& a, const Flat& b) {
    return a.set == b.set && a.rank == b.rank;
  }
  friend bool operator!=(const Flat& a, const Flat& b) { return !(a == b); }
};

/// Lattice of all flats of a sparse paving matroid, enumerated structurally:
/// every set of at most r-2 elements, the hyperplanes (circuit hyperplanes
/// plus the (r-1)-sets inside none of them), and the ground set. Flats are
/// stored sorted by (rank, mask); that order is the canonical flat order used
/// for witness tie-breaking.
class GeometricLattice {
 public:
  static constexpr std::uint64_t default_flat_cap = std::uint64_t{1} << 22;

  /// Throws TooLarge when the structural count exceeds flat_cap.
  static GeometricLattice enumerate(const SparsePavingMatroid& m,
                                    std::uint64_t flat_cap = default_flat_cap);

  const SparsePavingMatroid& matroid() const { return m_; }
  std::uint32_t flat_count() const { return static_cast<std::uint32_t>(flats_.size()); }
  const Flat& flat(std::uint32_t id) const { return flats_[id]; }
  const std::vector<Flat>& flats() const { return flats_; }

  std::optional<std::uint32_t> find(ElementSet set) const;

  /// ForeignFlat unless f (set and rank both) is a member.
  std::uint32_t id_of(const Flat& f) const;

  /// Closure of the union; ForeignFlat on non-members.
  Flat join(const Flat& f1, const Flat& f2) const;
  /// Set intersection (always a flat); ForeignFlat on non-members.
  Flat meet(const Flat& f1, const Flat& f2) const;

  /// id fast paths used by the checkers; arguments must be valid ids.
  std::uint32_t join_id(std::uint32_t i, std::uint32_t j) const {
    return *find(m_.closure_of(flats_[i].set | flats_[j].set));
  }
  std::uint32_t meet_id(std::uint32_t i, std::uint32_t j) const {
    return *find(flats_[i].set & flats_[j].set);
  }

  /// Flats of rank r-2.
  std::vector<Flat> colines() const;

 private:
  explicit GeometricLattice(SparsePavingMatroid m) : m_(std::move(m)) {}

  SparsePavingMatroid m_;
  std::vector<Flat> flats_;
  // mask -> id + 1 (0 = absent) when the ground is small enough for a direct
  // table; otherwise the hash map is used.
  std::vector<std::uint32_t> direct_;
  std::unordered_map<std::uint64_t, std::uint32_t> by_mask_;
  bool use_direct_ = false;
};

/// Pair of circuit hyperplanes (indices into circuit_hyperplanes(), first <
/// second) whose meet is a coline, together with that coline.
struct ChColinePair {
  std::uint32_t ch_a = 0;
  std::uint32_t ch_b = 0;
  Flat coline;
};

/// All circuit-hyperplane pairs meeting in a coline, ascending by (ch_a, ch_b).
std::vector<ChColinePair> ch_coline_incidence(const SparsePavingMatroid& m);

}  // namespace paving
