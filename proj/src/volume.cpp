#include "mlc/volume.hpp"

#include <algorithm>
#include <map>

#include "mlc/error.hpp"

namespace mlc {

ClassVector zero_class(const Matroid& m) { return ClassVector(m.proper_count()); }

ClassVector delta_vector(const Matroid& m, int flat_id) {
  if (flat_id < 0 || flat_id >= m.flat_count() || !m.is_proper(flat_id)) {
    throw Error(ErrorCode::kImproperFlat, "flat " + std::to_string(flat_id) + " is not proper");
  }
  ClassVector v = zero_class(m);
  v[m.proper_index(flat_id)] = 1;
  return v;
}

namespace {

void check_element(const Matroid& m, int element) {
  if (element < 0 || element >= m.ground_size()) {
    throw Error(ErrorCode::kElementOutOfRange, "element " + std::to_string(element) + " is outside the ground set");
  }
  if (contains(m.flat(m.bottom()), element)) {
    throw Error(ErrorCode::kElementOutOfRange, "element " + std::to_string(element) + " is a loop");
  }
}

int pick(Subset s, Representative rep) {
  auto e = members(s);
  return rep == Representative::kSmallest ? e.front() : e.back();
}

}  // namespace

ClassVector alpha_vector(const Matroid& m, int element) {
  check_element(m, element);
  ClassVector v = zero_class(m);
  for (int p = 0; p < m.proper_count(); ++p) {
    if (contains(m.flat(m.proper_flat_id(p)), element)) v[p] = 1;
  }
  return v;
}

ClassVector beta_vector(const Matroid& m, int element) {
  check_element(m, element);
  ClassVector v = zero_class(m);
  for (int p = 0; p < m.proper_count(); ++p) {
    if (!contains(m.flat(m.proper_flat_id(p)), element)) v[p] = 1;
  }
  return v;
}

int default_element(const Matroid& m, Representative rep) {
  Subset usable = m.ground() & ~m.flat(m.bottom());
  if (usable == 0) throw Error(ErrorCode::kLoopyMatroid, "no element outside the bottom flat");
  return pick(usable, rep);
}

QuotientBasis::QuotientBasis(const Matroid& m) : ambient_(m.proper_count()) {
  if (m.ground() == m.flat(m.bottom())) return;
  const int i0 = default_element(m);
  const ClassVector a0 = alpha_vector(m, i0);
  for (int i : members(m.ground() & ~m.flat(m.bottom()))) {
    if (i == i0) continue;
    ClassVector g = alpha_vector(m, i);
    for (int p = 0; p < ambient_; ++p) g[p] -= a0[p];
    generators_.push_back(g);
  }
  // Reduced row echelon form.
  for (const auto& g : generators_) {
    ClassVector v = reduce(g);
    auto it = std::find_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
    if (it == v.end()) continue;
    const int p = static_cast<int>(it - v.begin());
    const Rational inv = 1 / v[p];
    for (auto& x : v) x *= inv;
    for (auto& row : rows_) {
      if (row[p] == 0) continue;
      const Rational f = row[p];
      for (int k = 0; k < ambient_; ++k) row[k] -= f * v[k];
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
  }
}

ClassVector QuotientBasis::reduce(ClassVector v) const {
  if (static_cast<int>(v.size()) != ambient_) throw Error(ErrorCode::kArityMismatch, "class vector has wrong length");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const int p = pivots_[r];
    if (v[p] == 0) continue;
    const Rational f = v[p];
    for (int k = 0; k < ambient_; ++k) {
      if (rows_[r][k] != 0) v[k] -= f * rows_[r][k];
    }
  }
  return v;
}

bool QuotientBasis::in_w(const ClassVector& v) const {
  auto r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](const Rational& x) { return x == 0; });
}

bool QuotientBasis::same_class(const ClassVector& a, const ClassVector& b) const {
  if (a.size() != b.size()) return false;
  ClassVector d = a;
  for (std::size_t k = 0; k < d.size(); ++k) d[k] -= b[k];
  return in_w(d);
}

LinearMap projection_between(const Matroid& m, int lower, int upper, Representative rep) {
  if (lower < 0 || upper < 0 || lower >= m.flat_count() || upper >= m.flat_count()) {
    throw Error(ErrorCode::kImproperFlat, "flat id out of range");
  }
  if (lower == upper) throw Error(ErrorCode::kNotComparable, "projection needs a strict pair of flats");
  IntervalMinor minor = interval_minor(m, lower, upper);
  const Matroid& mm = minor.matroid;
  LinearMap a(mm.proper_count(), m.proper_count());
  const Subset diff = m.flat(upper) & ~m.flat(lower);
  const int element = pick(diff, rep);
  for (int q = 0; q < mm.proper_count(); ++q) {
    const int k = minor.flats[mm.proper_flat_id(q)];
    a.a[q][m.proper_index(k)] = 1;
    const bool has = contains(m.flat(k), element);
    // delta_lower -> -beta, delta_upper -> -alpha, both with `element`.
    if (m.is_proper(lower) && !has) a.a[q][m.proper_index(lower)] = -1;
    if (m.is_proper(upper) && has) a.a[q][m.proper_index(upper)] = -1;
  }
  return a;
}

LinearMap projection_up(const Matroid& m, int flat, Representative rep) {
  if (flat < 0 || flat >= m.flat_count() || !m.is_proper(flat)) {
    throw Error(ErrorCode::kImproperFlat, "flat " + std::to_string(flat) + " is not proper");
  }
  return projection_between(m, m.bottom(), flat, rep);
}

LinearMap projection_down(const Matroid& m, int flat, Representative rep) {
  if (flat < 0 || flat >= m.flat_count() || !m.is_proper(flat)) {
    throw Error(ErrorCode::kImproperFlat, "flat " + std::to_string(flat) + " is not proper");
  }
  return projection_between(m, flat, m.top(), rep);
}

namespace {

// Volume polynomials of all intervals, in variables indexed by flat ids of
// the ambient matroid.
class IntervalVolumes {
 public:
  IntervalVolumes(const Matroid& m, Representative rep) : m_(m), rep_(rep), n_(m.flat_count()) {
    for (int f = 0; f < n_; ++f) {
      for (int g = f; g < n_; ++g) {
        if (is_subset(m.flat(f), m.flat(g))) inside_[f].push_back(g);
      }
    }
  }

  const MultiPoly& volume(int f, int g) {
    auto key = std::make_pair(f, g);
    if (auto it = volume_.find(key); it != volume_.end()) return it->second;
    const int d = m_.rank(g) - m_.rank(f);
    MultiPoly v(n_);
    if (d == 1) {
      v = MultiPoly::constant(n_, 1);
    } else if (d >= 2) {
      for (int h : inside_[f]) {
        if (h == f || h == g || !is_subset(m_.flat(h), m_.flat(g))) continue;
        MultiPoly term = MultiPoly::variable(n_, h) * up(f, h);
        v += term * down(f, h, g);
      }
      v *= Rational(1, d - 1);
    }
    return volume_.emplace(key, std::move(v)).first->second;
  }

 private:
  // V_{[f,h]} after t_K -> t_K - [i in K] t_h.
  const MultiPoly& up(int f, int h) {
    auto key = std::make_pair(f, h);
    if (auto it = up_.find(key); it != up_.end()) return it->second;
    const int i = pick(m_.flat(h) & ~m_.flat(f), rep_);
    std::vector<LinearForm> images = identity_forms();
    for (int k : inside_[f]) {
      if (k != f && k != h && is_subset(m_.flat(k), m_.flat(h)) && contains(m_.flat(k), i)) {
        images[k].emplace_back(h, -1);
      }
    }
    MultiPoly p = substitute_forms(volume(f, h), images, n_);
    return up_.emplace(key, std::move(p)).first->second;
  }

  // V_{[h,g]} after t_K -> t_K - [j not in K] t_h.
  const MultiPoly& down(int, int h, int g) {
    auto key = std::make_pair(h, g);
    if (auto it = down_.find(key); it != down_.end()) return it->second;
    const int j = pick(m_.flat(g) & ~m_.flat(h), rep_);
    std::vector<LinearForm> images = identity_forms();
    for (int k : inside_[h]) {
      if (k != h && k != g && is_subset(m_.flat(k), m_.flat(g)) && !contains(m_.flat(k), j)) {
        images[k].emplace_back(h, -1);
      }
    }
    MultiPoly p = substitute_forms(volume(h, g), images, n_);
    return down_.emplace(key, std::move(p)).first->second;
  }

  std::vector<LinearForm> identity_forms() const {
    std::vector<LinearForm> images(n_);
    for (int k = 0; k < n_; ++k) images[k].emplace_back(k, 1);
    return images;
  }

  const Matroid& m_;
  Representative rep_;
  int n_;
  std::map<int, std::vector<int>> inside_;
  std::map<std::pair<int, int>, MultiPoly> volume_;
  std::map<std::pair<int, int>, MultiPoly> up_;
  std::map<std::pair<int, int>, MultiPoly> down_;
};

}  // namespace

MultiPoly volume_polynomial(const Matroid& m, Representative rep) {
  if (!m.is_loopless()) throw Error(ErrorCode::kLoopyMatroid, "volume polynomial needs a loopless matroid");
  if (m.rank() == 0) return MultiPoly(m.proper_count());
  IntervalVolumes memo(m, rep);
  const MultiPoly& full = memo.volume(m.bottom(), m.top());
  std::vector<int> rename(m.flat_count(), -1);
  for (int p = 0; p < m.proper_count(); ++p) rename[m.proper_flat_id(p)] = p;
  return rename_variables(full, rename, m.proper_count());
}

Rational mixed_degree(const Matroid& m, const MultiPoly& volume, int k, int element) {
  const int r = m.rank() - 1;
  if (k < 0 || k > r) {
    throw Error(ErrorCode::kRankOutOfRange, "k = " + std::to_string(k) + " outside [0, " + std::to_string(r) + "]");
  }
  const ClassVector a = alpha_vector(m, element);
  const ClassVector b = beta_vector(m, element);
  MultiPoly g = volume;
  for (int s = 0; s < k; ++s) g = directional_derivative(g, b);
  for (int s = 0; s < r - k; ++s) g = directional_derivative(g, a);
  return evaluate(g, zero_class(m));
}

Rational mixed_degree(const Matroid& m, int k, Representative rep) {
  const int r = m.rank() - 1;
  if (k < 0 || k > r) {
    throw Error(ErrorCode::kRankOutOfRange, "k = " + std::to_string(k) + " outside [0, " + std::to_string(r) + "]");
  }
  return mixed_degree(m, volume_polynomial(m, rep), k, default_element(m, rep));
}

void validate_chain(const Matroid& m, const std::vector<int>& chain) {
  for (std::size_t j = 0; j < chain.size(); ++j) {
    const int f = chain[j];
    if (f < 0 || f >= m.flat_count() || !m.is_proper(f)) {
      throw Error(ErrorCode::kImproperFlat, "chain flat " + std::to_string(f) + " is not proper");
    }
    if (j > 0 && !m.less(chain[j - 1], f)) {
      throw Error(ErrorCode::kNotComparable,
                  "chain flats " + std::to_string(chain[j - 1]) + " and " + std::to_string(f) + " are not increasing");
    }
  }
}

ClassVector flat_avoiding_representative(const Matroid& m, const ClassVector& u, const std::vector<int>& chain) {
  validate_chain(m, chain);
  if (static_cast<int>(u.size()) != m.proper_count()) throw Error(ErrorCode::kArityMismatch, "class vector has wrong length");
  if (chain.empty()) return u;
  // t = u - sum_j (u_{F_j} - u_{F_{j-1}}) (alpha_{i_j} - alpha_i) with
  // i_j in F_j \ F_{j-1} and i outside the last chain flat.
  ClassVector t = u;
  const ClassVector a_out = alpha_vector(m, pick(m.ground() & ~m.flat(chain.back()), Representative::kSmallest));
  Subset previous = m.flat(m.bottom());
  Rational previous_value = 0;
  for (int f : chain) {
    const Rational value = u[m.proper_index(f)];
    const Rational step = value - previous_value;
    if (step != 0) {
      const ClassVector a_in = alpha_vector(m, pick(m.flat(f) & ~previous, Representative::kSmallest));
      for (int p = 0; p < m.proper_count(); ++p) t[p] -= step * (a_in[p] - a_out[p]);
    }
    previous = m.flat(f);
    previous_value = value;
  }
  return t;
}

ChainProduct chain_product(const Matroid& m, const std::vector<int>& chain) {
  validate_chain(m, chain);
  if (!m.is_loopless()) throw Error(ErrorCode::kLoopyMatroid, "chain products need a loopless matroid");
  ChainProduct out;
  std::vector<int> ends{m.bottom()};
  ends.insert(ends.end(), chain.begin(), chain.end());
  ends.push_back(m.top());
  int total = 0;
  for (std::size_t j = 1; j < ends.size(); ++j) {
    out.blocks.push_back(interval_minor(m, ends[j - 1], ends[j]));
    out.offsets.push_back(total);
    total += out.blocks.back().matroid.proper_count();
  }
  out.f = MultiPoly::constant(total, 1);
  out.pi = LinearMap(total, m.proper_count());
  for (std::size_t j = 0; j < out.blocks.size(); ++j) {
    const Matroid& b = out.blocks[j].matroid;
    std::vector<int> rename(b.proper_count());
    for (int q = 0; q < b.proper_count(); ++q) rename[q] = out.offsets[j] + q;
    out.f = out.f * rename_variables(volume_polynomial(b), rename, total);
    LinearMap block = projection_between(m, ends[j], ends[j + 1]);
    for (int q = 0; q < b.proper_count(); ++q) out.pi.a[out.offsets[j] + q] = block.a[q];
  }
  return out;
}

MultiPoly chain_derivative(const Matroid& m, const MultiPoly& volume, const std::vector<int>& chain) {
  validate_chain(m, chain);
  MultiPoly g = volume;
  for (int f : chain) g = differentiate(g, m.proper_index(f));
  return g;
}

}  // namespace mlc
