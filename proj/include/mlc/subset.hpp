#pragma once

#include <cstdint>
#include <vector>

namespace mlc {

// Subsets of the ground set {0..n-1} as machine-word bitsets.
using Subset = std::uint64_t;
inline constexpr int kMaxGround = 64;

inline bool contains(Subset set, int element) { return (set >> element) & 1U; }
inline bool is_subset(Subset a, Subset b) { return (a & ~b) == 0; }
inline int cardinality(Subset s) { return __builtin_popcountll(s); }
inline Subset full_set(int n) { return n >= 64 ? ~Subset{0} : (Subset{1} << n) - 1; }
std::vector<int> members(Subset s);
Subset subset_of(const std::vector<int>& elements);

// (cardinality, lexicographic on sorted members) order used for flat ids.
bool canonical_less(Subset a, Subset b);

}  // namespace mlc
