#include "mlc/matroid.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_set>

#include "mlc/error.hpp"

namespace mlc {

std::vector<int> members(Subset s) {
  std::vector<int> out;
  while (s) {
    out.push_back(__builtin_ctzll(s));
    s &= s - 1;
  }
  return out;
}

Subset subset_of(const std::vector<int>& elements) {
  Subset s = 0;
  for (int e : elements) s |= Subset{1} << e;
  return s;
}

bool canonical_less(Subset a, Subset b) {
  int ca = cardinality(a);
  int cb = cardinality(b);
  if (ca != cb) return ca < cb;
  // Same size: the set whose smallest differing element belongs to it comes
  // first in lexicographic order of sorted member lists.
  Subset diff = a ^ b;
  if (diff == 0) return false;
  Subset lowest = diff & (~diff + 1);
  return (a & lowest) != 0;
}

namespace {

std::string describe(Subset s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int e : members(s)) {
    if (!first) os << ',';
    os << e;
    first = false;
  }
  os << '}';
  return os.str();
}

// Minimal members of `family` strictly containing `f`.
std::vector<Subset> minimal_supersets(const std::vector<Subset>& family, Subset f) {
  std::vector<Subset> above;
  for (Subset g : family) {
    if (g != f && is_subset(f, g)) above.push_back(g);
  }
  std::vector<Subset> minimal;
  for (Subset g : above) {
    bool is_min = true;
    for (Subset h : above) {
      if (h != g && is_subset(h, g)) {
        is_min = false;
        break;
      }
    }
    if (is_min) minimal.push_back(g);
  }
  return minimal;
}

}  // namespace

std::optional<int> Matroid::find(Subset s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int Matroid::id_of(Subset s) const {
  auto id = find(s);
  if (!id) throw Error(ErrorCode::kInvalidParameters, describe(s) + " is not a flat");
  return *id;
}

Subset Matroid::closure(Subset s) const {
  Subset acc = ground();
  for (Subset f : flats_) {
    if (is_subset(s, f)) acc &= f;
  }
  return acc;
}

Matroid validate_flats(std::vector<Subset> subsets, int ground_size) {
  if (ground_size < 0 || ground_size > kMaxGround) {
    throw Error(ErrorCode::kInvalidParameters, "ground size must lie in [0, 64]");
  }
  const Subset ground = full_set(ground_size);
  std::unordered_set<Subset> seen;
  for (Subset s : subsets) {
    if (!is_subset(s, ground)) {
      throw Error(ErrorCode::kInvalidParameters, describe(s) + " is not inside the ground set");
    }
    if (!seen.insert(s).second) {
      throw Error(ErrorCode::kInvalidParameters, "duplicate subset " + describe(s));
    }
  }
  if (!seen.contains(ground)) {
    throw Error(ErrorCode::kAxiomF1Violation, "ground set " + describe(ground) + " is not listed");
  }
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    for (std::size_t j = i + 1; j < subsets.size(); ++j) {
      if (!seen.contains(subsets[i] & subsets[j])) {
        throw Error(ErrorCode::kAxiomF2Violation,
                    describe(subsets[i]) + " and " + describe(subsets[j]) + " meet in " +
                        describe(subsets[i] & subsets[j]) + ", which is not listed");
      }
    }
  }
  std::sort(subsets.begin(), subsets.end(), canonical_less);

  Matroid m;
  m.ground_size_ = ground_size;
  m.flats_ = std::move(subsets);
  const int n = m.flat_count();
  for (int id = 0; id < n; ++id) m.index_.emplace(m.flats_[id], id);

  m.covers_.assign(n, {});
  for (int id = 0; id < n; ++id) {
    const Subset f = m.flats_[id];
    for (Subset g : minimal_supersets(m.flats_, f)) m.covers_[id].push_back(m.index_.at(g));
    std::sort(m.covers_[id].begin(), m.covers_[id].end());
    for (int e : members(ground & ~f)) {
      int hits = 0;
      for (int c : m.covers_[id]) hits += contains(m.flats_[c], e) ? 1 : 0;
      if (hits != 1) {
        throw Error(ErrorCode::kAxiomF3Violation,
                    "at flat " + describe(f) + ", element " + std::to_string(e) + " lies in " +
                        std::to_string(hits) + " cover differences");
      }
    }
  }

  // Rank by breadth-first layering of the cover relation from the bottom.
  m.rank_.assign(n, -1);
  m.rank_[0] = 0;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int id = queue.front();
    queue.pop_front();
    for (int c : m.covers_[id]) {
      if (m.rank_[c] == -1) {
        m.rank_[c] = m.rank_[id] + 1;
        queue.push_back(c);
      } else if (m.rank_[c] != m.rank_[id] + 1) {
        throw Error(ErrorCode::kInternalMismatch, "maximal chains of unequal length reach " + describe(m.flats_[c]));
      }
    }
  }
  for (int id = 0; id < n; ++id) {
    if (m.rank_[id] < 0) {
      throw Error(ErrorCode::kInternalMismatch, "flat " + describe(m.flats_[id]) + " unreachable from bottom");
    }
  }
  return m;
}

bool satisfies_f3(const std::vector<Subset>& subsets, int ground_size) {
  const Subset ground = full_set(ground_size);
  for (Subset f : subsets) {
    Subset seen = 0;
    for (Subset c : minimal_supersets(subsets, f)) {
      Subset part = c & ~f;
      if (seen & part) return false;
      seen |= part;
    }
    if (seen != (ground & ~f)) return false;
  }
  return true;
}

bool satisfies_f3_prime(const std::vector<Subset>& subsets, int ground_size) {
  const Subset ground = full_set(ground_size);
  for (Subset f : subsets) {
    auto cov = minimal_supersets(subsets, f);
    for (int e : members(ground & ~f)) {
      bool found = std::any_of(cov.begin(), cov.end(), [&](Subset c) { return contains(c, e); });
      if (!found) return false;
    }
  }
  return true;
}

Matroid uniform(int r, int n) {
  if (r < 0 || n < 0 || r > n || n > kMaxGround) {
    throw Error(ErrorCode::kInvalidParameters, "uniform matroid needs 0 <= r <= n <= 64");
  }
  std::vector<Subset> flats;
  const Subset ground = full_set(n);
  // Subsets of size <= r-1 by Gosper enumeration per size.
  for (int k = 0; k <= r - 1; ++k) {
    if (k == 0) {
      flats.push_back(0);
      continue;
    }
    Subset s = full_set(k);
    while (is_subset(s, ground) && s != 0) {
      flats.push_back(s);
      Subset c = s & (~s + 1);
      Subset rr = s + c;
      if (rr == 0) break;
      s = (((rr ^ s) >> 2) / c) | rr;
    }
  }
  if (std::find(flats.begin(), flats.end(), ground) == flats.end()) flats.push_back(ground);
  return validate_flats(std::move(flats), n);
}

IntervalMinor interval_minor(const Matroid& m, int lower, int upper) {
  const Subset f = m.flat(lower);
  const Subset g = m.flat(upper);
  if (!is_subset(f, g)) {
    throw Error(ErrorCode::kNotComparable, "flat " + std::to_string(lower) + " is not below flat " + std::to_string(upper));
  }
  std::vector<int> elements = members(g & ~f);
  std::vector<int> position(kMaxGround, -1);
  for (std::size_t i = 0; i < elements.size(); ++i) position[elements[i]] = static_cast<int>(i);

  auto relabel_down = [&](Subset h) {
    Subset out = 0;
    for (int e : members(h & ~f)) out |= Subset{1} << position[e];
    return out;
  };
  std::vector<Subset> minor_flats;
  std::vector<std::pair<Subset, int>> origin;
  for (int id = 0; id < m.flat_count(); ++id) {
    const Subset h = m.flat(id);
    if (is_subset(f, h) && is_subset(h, g)) {
      minor_flats.push_back(relabel_down(h));
      origin.emplace_back(minor_flats.back(), id);
    }
  }
  Matroid minor = validate_flats(std::move(minor_flats), static_cast<int>(elements.size()));
  std::vector<int> flat_map(minor.flat_count());
  for (auto [s, id] : origin) flat_map[minor.id_of(s)] = id;
  return IntervalMinor{std::move(minor), std::move(elements), std::move(flat_map)};
}

Matroid direct_sum(const Matroid& a, const Matroid& b) {
  const int n = a.ground_size() + b.ground_size();
  if (n > kMaxGround) throw Error(ErrorCode::kInvalidParameters, "direct sum exceeds 64 elements");
  std::vector<Subset> flats;
  flats.reserve(static_cast<std::size_t>(a.flat_count()) * b.flat_count());
  for (Subset fa : a.flats()) {
    for (Subset fb : b.flats()) {
      flats.push_back(fa | (b.ground_size() == 0 ? 0 : fb << a.ground_size()));
    }
  }
  return validate_flats(std::move(flats), n);
}

Matroid truncation(const Matroid& m, int i) {
  if (i < 1 || i > m.rank() - 1) {
    throw Error(ErrorCode::kInvalidParameters, "truncation index must lie in [1, rank-1]");
  }
  std::vector<Subset> flats;
  for (int id = 0; id < m.flat_count(); ++id) {
    if (m.rank(id) <= m.rank() - 1 - i || id == m.top()) flats.push_back(m.flat(id));
  }
  return validate_flats(std::move(flats), m.ground_size());
}

Graph flat_graph(const Matroid& m) {
  std::vector<Edge> edges;
  const int p = m.proper_count();
  for (int a = 0; a < p; ++a) {
    for (int b = a + 1; b < p; ++b) {
      if (m.comparable(m.proper_flat_id(a), m.proper_flat_id(b))) edges.push_back({a, b});
    }
  }
  return Graph(p, std::move(edges));
}

std::vector<Integer> independent_set_counts(const Matroid& m) {
  if (m.ground_size() > 24) throw Error(ErrorCode::kSizeCapExceeded, "independent set enumeration capped at 24 elements");
  std::vector<Integer> counts(m.rank() + 1, 0);
  const Subset limit = Subset{1} << m.ground_size();
  for (Subset s = 0; s < limit; ++s) {
    const int k = cardinality(s);
    if (k > m.rank()) continue;
    if (m.rank(m.closure_id(s)) == k) counts[k] += 1;
  }
  return counts;
}

Matroid relabel(const Matroid& m, const std::vector<int>& bijection) {
  if (static_cast<int>(bijection.size()) != m.ground_size()) {
    throw Error(ErrorCode::kInvalidParameters, "bijection size differs from ground size");
  }
  Subset image = 0;
  for (int v : bijection) {
    if (v < 0 || v >= m.ground_size()) throw Error(ErrorCode::kInvalidParameters, "bijection value out of range");
    image |= Subset{1} << v;
  }
  if (image != m.ground()) throw Error(ErrorCode::kInvalidParameters, "map is not a bijection");
  std::vector<Subset> flats;
  for (Subset f : m.flats()) {
    Subset out = 0;
    for (int e : members(f)) out |= Subset{1} << bijection[e];
    flats.push_back(out);
  }
  return validate_flats(std::move(flats), m.ground_size());
}

bool is_relabeling(const Matroid& from, const Matroid& to, const std::vector<int>& bijection) {
  if (from.ground_size() != to.ground_size()) return false;
  return relabel(from, bijection) == to;
}

std::uint64_t matroid_hash(const Matroid& m) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xFF;
      h *= 1099511628211ULL;
    }
  };
  mix(static_cast<std::uint64_t>(m.ground_size()));
  for (Subset f : m.flats()) mix(f);
  return h;
}

}  // namespace mlc
