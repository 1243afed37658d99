#pragma once

#include <cstdint>
#include <optional>
#include <unordered_set>
#include <vector>

#include "paving/element_set.hpp"
#include "paving/errors.hpp"
#include "paving/label_map.hpp"

namespace paving {

/// Matroid determined by its circuit hyperplanes: r-sets pairwise intersecting
/// in at most r-2 elements. Immutable after construction; all operations are
/// pure and safe to call concurrently.
class SparsePavingMatroid {
 public:
  /// Constructor gate. Enforces 1 <= r <= n <= 64, |H| = r for every circuit
  /// hyperplane, pairwise intersections <= r-2, no duplicates. A circuit
  /// hyperplane equal to the whole ground set (only possible when n = r) is
  /// rejected as BadRank: it would force rank(E) = r-1, contradicting the
  /// stored rank.
  static SparsePavingMatroid validate(int n, int r, std::vector<ElementSet> chs,
                                      LabelMap labels = LabelMap());

  int ground_size() const { return n_; }
  int rank() const { return r_; }
  ElementSet ground_set() const { return ElementSet::full(n_); }
  /// Sorted ascending by mask.
  const std::vector<ElementSet>& circuit_hyperplanes() const { return chs_; }
  const LabelMap& labels() const { return labels_; }

  bool is_circuit_hyperplane(ElementSet x) const { return ch_set_.count(x.bits()) != 0; }

  /// rank(X) = |X| if |X| < r; r-1 if |X| = r and X is a circuit hyperplane;
  /// min(|X|, r) otherwise.
  int rank_of(ElementSet x) const {
    check_subset(x);
    int c = x.count();
    if (c < r_) return c;
    if (c == r_ && is_circuit_hyperplane(x)) return r_ - 1;
    return r_;
  }

  ElementSet closure_of(ElementSet x) const {
    check_subset(x);
    int c = x.count();
    if (c <= r_ - 2) return x;
    if (c == r_ - 1) {
      // At most one circuit hyperplane can contain an (r-1)-set: two would
      // intersect in >= r-1 > r-2 elements.
      for (ElementSet h : chs_)
        if (x.subset_of(h)) return h;
      return x;
    }
    if (c == r_ && is_circuit_hyperplane(x)) return x;
    return ground_set();
  }

  bool is_independent(ElementSet x) const { return rank_of(x) == x.count(); }
  bool is_basis(ElementSet x) const { return x.count() == r_ && rank_of(x) == r_; }

  /// Minimal dependent set. In a sparse paving matroid these are the circuit
  /// hyperplanes and the (r+1)-sets containing no circuit hyperplane.
  bool is_circuit(ElementSet x) const {
    check_subset(x);
    if (rank_of(x) >= x.count()) return false;
    for (int e : x)
      if (rank_of(x.without(e)) != x.count() - 1) return false;
    return true;
  }

  std::uint64_t basis_count() const {
    return binom(n_, r_) - static_cast<std::uint64_t>(chs_.size());
  }

  /// Same rank on the complement ground: r* = n - r, chs* = complements.
  SparsePavingMatroid dual() const;

  /// Removes one circuit hyperplane, turning it into a basis.
  SparsePavingMatroid relaxed(ElementSet ch) const;

  /// Deletion M \ D; keeps labels of surviving elements.
  SparsePavingMatroid deleted(ElementSet d) const;

  /// Contraction M / C: contracts a maximal independent subset of C and
  /// deletes the rest (which are loops by then).
  SparsePavingMatroid contracted(ElementSet c) const;

  friend bool operator==(const SparsePavingMatroid& a, const SparsePavingMatroid& b) {
    return a.n_ == b.n_ && a.r_ == b.r_ && a.chs_ == b.chs_ && a.labels_ == b.labels_;
  }
  friend bool operator!=(const SparsePavingMatroid& a, const SparsePavingMatroid& b) {
    return !(a == b);
  }

 private:
  SparsePavingMatroid(int n, int r, std::vector<ElementSet> chs, LabelMap labels);

  /// Shared checking path. Minor and dual results may legitimately reach
  /// rank 0 (then chs must be empty); the public gate insists on r >= 1.
  static SparsePavingMatroid make(int n, int r, std::vector<ElementSet> chs, LabelMap labels,
                                  bool allow_rank_zero);

  void check_subset(ElementSet x) const {
    if (!x.subset_of(ground_set()))
      throw Error(ErrorCode::out_of_range,
                  "set " + x.to_string() + " is not within the ground set of size " +
                      std::to_string(n_));
  }

  int n_ = 0;
  int r_ = 0;
  std::vector<ElementSet> chs_;
  std::unordered_set<std::uint64_t> ch_set_;
  LabelMap labels_;
};

/// S is in series within A when contracting A \ S turns S into a circuit.
/// Throws NotNested if S is not a subset of A, OutOfRange if A leaves the
/// ground set.
bool is_in_series(const SparsePavingMatroid& m, ElementSet s, ElementSet a);

/// Ground-set bijection carrying circuit hyperplanes of `a` onto those of
/// `b`, or nullopt. perm[i] is the image in `b` of element i of `a`; the
/// first permutation in a fixed search order is returned, so results are
/// deterministic.
std::optional<std::vector<int>> find_isomorphism(const SparsePavingMatroid& a,
                                                 const SparsePavingMatroid& b);

}  // namespace paving
