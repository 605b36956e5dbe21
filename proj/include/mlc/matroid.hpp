#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "mlc/graph.hpp"
#include "mlc/rational.hpp"
#include "mlc/subset.hpp"

namespace mlc {

// A matroid given by its validated lattice of flats.  Flat ids follow the
// canonical order, so id 0 is the bottom flat and id flat_count()-1 is E.
// Values are immutable once built.
class Matroid {
 public:
  int ground_size() const { return ground_size_; }
  Subset ground() const { return full_set(ground_size_); }
  int flat_count() const { return static_cast<int>(flats_.size()); }
  const std::vector<Subset>& flats() const { return flats_; }
  Subset flat(int id) const { return flats_[id]; }
  const std::vector<int>& covers(int id) const { return covers_[id]; }
  int rank(int id) const { return rank_[id]; }
  int rank() const { return rank_[top()]; }
  int bottom() const { return 0; }
  int top() const { return flat_count() - 1; }
  bool is_loopless() const { return flats_[0] == 0; }

  // Proper flats P(M) = L(M) \ {bottom, top}; proper index p is flat id p+1.
  int proper_count() const { return flat_count() >= 2 ? flat_count() - 2 : 0; }
  int proper_flat_id(int proper_index) const { return proper_index + 1; }
  int proper_index(int flat_id) const { return flat_id - 1; }
  bool is_proper(int flat_id) const { return flat_id != bottom() && flat_id != top(); }

  std::optional<int> find(Subset s) const;
  // Throws Error(kInvalidParameters) when `s` is not a flat.
  int id_of(Subset s) const;

  // Minimal flat containing `s` (intersection of all flats containing it).
  Subset closure(Subset s) const;
  int closure_id(Subset s) const { return id_of(closure(s)); }

  bool less(int a, int b) const { return a != b && is_subset(flats_[a], flats_[b]); }
  bool comparable(int a, int b) const { return is_subset(flats_[a], flats_[b]) || is_subset(flats_[b], flats_[a]); }

  friend bool operator==(const Matroid& a, const Matroid& b) {
    return a.ground_size_ == b.ground_size_ && a.flats_ == b.flats_;
  }

  friend Matroid validate_flats(std::vector<Subset> subsets, int ground_size);

 private:
  Matroid() = default;

  int ground_size_ = 0;
  std::vector<Subset> flats_;
  std::vector<std::vector<int>> covers_;
  std::vector<int> rank_;
  std::unordered_map<Subset, int> index_;
};

// Checks F1, F2, F3 and builds the indexed lattice.  Throws
// kAxiomF1Violation / kAxiomF2Violation / kAxiomF3Violation with a witness,
// kInvalidParameters for out-of-range or duplicate subsets.
Matroid validate_flats(std::vector<Subset> subsets, int ground_size);

// Independent formulations of the covering axiom, used for cross-checking.
// Both assume F1 and F2 already hold.
bool satisfies_f3(const std::vector<Subset>& subsets, int ground_size);
bool satisfies_f3_prime(const std::vector<Subset>& subsets, int ground_size);

Matroid uniform(int r, int n);

struct IntervalMinor {
  Matroid matroid;
  std::vector<int> elements;  // minor element -> element of the parent
  std::vector<int> flats;     // minor flat id -> flat id of the parent
};

// M_F^G on G \ F.  Throws kNotComparable unless flat(F) is a subset of flat(G).
IntervalMinor interval_minor(const Matroid& m, int lower, int upper);
inline IntervalMinor restriction(const Matroid& m, int flat) { return interval_minor(m, m.bottom(), flat); }
inline IntervalMinor contraction(const Matroid& m, int flat) { return interval_minor(m, flat, m.top()); }

Matroid direct_sum(const Matroid& a, const Matroid& b);
Matroid truncation(const Matroid& m, int i);

// Vertices are proper flats (vertex p is flat id p+1); edges join strictly
// comparable pairs.
Graph flat_graph(const Matroid& m);

// f_k = number of independent k-subsets, k = 0..rank.
std::vector<Integer> independent_set_counts(const Matroid& m);

// Applies `bijection` (old element -> new element) to every flat.
Matroid relabel(const Matroid& m, const std::vector<int>& bijection);
bool is_relabeling(const Matroid& from, const Matroid& to, const std::vector<int>& bijection);

// FNV-1a over the ground size and canonical flat list.
std::uint64_t matroid_hash(const Matroid& m);

}  // namespace mlc
