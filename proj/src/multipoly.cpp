#include "mlc/multipoly.hpp"

#include <algorithm>
#include <sstream>

#include "mlc/error.hpp"

namespace mlc {

namespace {

void require_arity(int expected, std::size_t got, const char* what) {
  if (static_cast<std::size_t>(expected) != got) {
    throw Error(ErrorCode::kArityMismatch, std::string(what) + ": expected " + std::to_string(expected) +
                                               " entries, got " + std::to_string(got));
  }
}

Rational monomial_value(const Monomial& m, const RationalVector& x) {
  Rational v = 1;
  for (int i : m) {
    if (x[i] == 0) return 0;
    v *= x[i];
  }
  return v;
}

// Removes one occurrence of `index` from the sorted monomial.
Monomial drop_one(const Monomial& m, int index) {
  Monomial out = m;
  out.erase(std::lower_bound(out.begin(), out.end(), index));
  return out;
}

// (variable, multiplicity) runs of a sorted monomial.
std::vector<std::pair<int, int>> runs(const Monomial& m) {
  std::vector<std::pair<int, int>> out;
  for (int i : m) {
    if (!out.empty() && out.back().first == i) {
      ++out.back().second;
    } else {
      out.emplace_back(i, 1);
    }
  }
  return out;
}

// terms * (sum_j c_j y_j)
std::map<Monomial, Rational> times_form(const std::map<Monomial, Rational>& terms, const LinearForm& form) {
  std::map<Monomial, Rational> out;
  for (const auto& [m, c] : terms) {
    for (const auto& [var, a] : form) {
      Monomial n = m;
      n.insert(std::upper_bound(n.begin(), n.end(), var), var);
      auto [it, inserted] = out.try_emplace(std::move(n), c * a);
      if (!inserted) it->second += c * a;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

}  // namespace

MultiPoly MultiPoly::constant(int arity, const Rational& c) {
  MultiPoly p(arity);
  p.add_term({}, c);
  return p;
}

MultiPoly MultiPoly::variable(int arity, int index) {
  MultiPoly p(arity);
  p.add_term({index}, 1);
  return p;
}

void MultiPoly::add_term(Monomial m, const Rational& c) {
  if (c == 0) return;
  for (int i : m) {
    if (i < 0 || i >= arity_) {
      throw Error(ErrorCode::kArityMismatch, "variable " + std::to_string(i) + " outside arity " + std::to_string(arity_));
    }
  }
  std::sort(m.begin(), m.end());
  auto [it, inserted] = terms_.try_emplace(std::move(m), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational MultiPoly::coefficient(const Monomial& m) const {
  Monomial s = m;
  std::sort(s.begin(), s.end());
  auto it = terms_.find(s);
  return it == terms_.end() ? Rational(0) : it->second;
}

int MultiPoly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.size()));
  return d;
}

std::optional<int> MultiPoly::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  const int d = static_cast<int>(terms_.begin()->first.size());
  for (const auto& [m, c] : terms_) {
    if (static_cast<int>(m.size()) != d) return std::nullopt;
  }
  return d;
}

bool MultiPoly::is_homogeneous(int d) const {
  return std::all_of(terms_.begin(), terms_.end(), [d](const auto& kv) { return static_cast<int>(kv.first.size()) == d; });
}

void MultiPoly::check_arity(const MultiPoly& o) const {
  if (o.arity_ != arity_) {
    throw Error(ErrorCode::kArityMismatch, "arities " + std::to_string(arity_) + " and " + std::to_string(o.arity_));
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_arity(o);
  for (const auto& [m, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_arity(o);
  for (const auto& [m, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(m, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_arity(b);
  MultiPoly out(a.arity_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m;
      m.reserve(ma.size() + mb.size());
      std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(m));
      auto [it, inserted] = out.terms_.try_emplace(std::move(m), ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  }
  std::erase_if(out.terms_, [](const auto& kv) { return kv.second == 0; });
  return out;
}

std::string MultiPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  auto name = [&](int i) { return i < static_cast<int>(names.size()) ? names[i] : "x" + std::to_string(i); };
  std::ostringstream os;
  bool first = true;
  // Descending degree, then monomial order.
  std::vector<std::pair<const Monomial*, const Rational*>> order;
  for (const auto& [m, c] : terms_) order.emplace_back(&m, &c);
  std::stable_sort(order.begin(), order.end(), [](const auto& x, const auto& y) { return x.first->size() > y.first->size(); });
  for (const auto& [m, c] : order) {
    Rational mag = abs(*c);
    if (first) {
      if (*c < 0) os << '-';
    } else {
      os << (*c < 0 ? " - " : " + ");
    }
    first = false;
    bool need_star = false;
    if (m->empty() || mag != 1) {
      os << mlc::to_string(mag);
      need_star = true;
    }
    for (const auto& [v, k] : runs(*m)) {
      if (need_star) os << '*';
      os << name(v);
      if (k > 1) os << '^' << k;
      need_star = true;
    }
  }
  return os.str();
}

LinearMap LinearMap::identity(int n) {
  LinearMap a(n, n);
  for (int i = 0; i < n; ++i) a.a[i][i] = 1;
  return a;
}

RationalVector LinearMap::apply(const RationalVector& x) const {
  require_arity(cols, x.size(), "linear map input");
  RationalVector y(rows);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      if (a[i][j] != 0) y[i] += a[i][j] * x[j];
    }
  }
  return y;
}

LinearMap compose(const LinearMap& outer, const LinearMap& inner) {
  if (outer.cols != inner.rows) throw Error(ErrorCode::kArityMismatch, "composed maps do not match");
  LinearMap out(outer.rows, inner.cols);
  for (int i = 0; i < outer.rows; ++i) {
    for (int k = 0; k < outer.cols; ++k) {
      if (outer.a[i][k] == 0) continue;
      for (int j = 0; j < inner.cols; ++j) out.a[i][j] += outer.a[i][k] * inner.a[k][j];
    }
  }
  return out;
}

MultiPoly differentiate(const MultiPoly& f, int index) {
  if (index < 0 || index >= f.arity()) throw Error(ErrorCode::kArityMismatch, "no variable " + std::to_string(index));
  MultiPoly out(f.arity());
  for (const auto& [m, c] : f.terms()) {
    auto k = std::count(m.begin(), m.end(), index);
    if (k == 0) continue;
    out.add_term(drop_one(m, index), c * static_cast<long>(k));
  }
  return out;
}

MultiPoly directional_derivative(const MultiPoly& f, const RationalVector& d) {
  require_arity(f.arity(), d.size(), "direction");
  MultiPoly out(f.arity());
  for (const auto& [m, c] : f.terms()) {
    for (const auto& [v, k] : runs(m)) {
      if (d[v] == 0) continue;
      out.add_term(drop_one(m, v), c * d[v] * k);
    }
  }
  return out;
}

Rational evaluate(const MultiPoly& f, const RationalVector& x) {
  require_arity(f.arity(), x.size(), "point");
  Rational acc = 0;
  for (const auto& [m, c] : f.terms()) acc += c * monomial_value(m, x);
  return acc;
}

double evaluate(const MultiPoly& f, const std::vector<double>& x) {
  require_arity(f.arity(), x.size(), "point");
  double acc = 0;
  for (const auto& [m, c] : f.terms()) {
    double v = c.get_d();
    for (int i : m) v *= x[i];
    acc += v;
  }
  return acc;
}

RationalVector gradient_at(const MultiPoly& f, const RationalVector& x) {
  require_arity(f.arity(), x.size(), "point");
  RationalVector g(f.arity());
  for (const auto& [m, c] : f.terms()) {
    for (const auto& [v, k] : runs(m)) g[v] += c * k * monomial_value(drop_one(m, v), x);
  }
  return g;
}

SymMatrix hessian_at(const MultiPoly& f, const RationalVector& x) {
  require_arity(f.arity(), x.size(), "point");
  SymMatrix h(f.arity());
  for (const auto& [m, c] : f.terms()) {
    if (m.size() < 2) continue;
    for (const auto& [a, ka] : runs(m)) {
      Monomial m1 = drop_one(m, a);
      for (const auto& [b, kb] : runs(m1)) {
        h(a, b) += c * ka * kb * monomial_value(drop_one(m1, b), x);
      }
    }
  }
  return h;
}

MultiPoly substitute_forms(const MultiPoly& f, const std::vector<LinearForm>& images, int arity) {
  require_arity(f.arity(), images.size(), "substitution");
  for (const auto& form : images) {
    for (const auto& [v, c] : form) {
      if (v < 0 || v >= arity) throw Error(ErrorCode::kArityMismatch, "substituted variable out of range");
    }
  }
  MultiPoly out(arity);
  // Terms arrive in lexicographic order, so consecutive monomials share
  // prefixes; keep the partial products along the current prefix.
  std::vector<std::map<Monomial, Rational>> prefix{{{Monomial{}, Rational(1)}}};
  Monomial current;
  std::map<Monomial, Rational> acc;
  for (const auto& [m, c] : f.terms()) {
    std::size_t common = 0;
    while (common < current.size() && common < m.size() && current[common] == m[common]) ++common;
    prefix.resize(common + 1);
    for (std::size_t k = common; k < m.size(); ++k) prefix.push_back(times_form(prefix.back(), images[m[k]]));
    current = m;
    for (const auto& [mm, cc] : prefix.back()) {
      auto [it, inserted] = acc.try_emplace(mm, c * cc);
      if (!inserted) it->second += c * cc;
    }
  }
  for (auto& [m, c] : acc) out.add_term(m, c);
  return out;
}

MultiPoly substitute_linear(const MultiPoly& f, const LinearMap& a) {
  require_arity(f.arity(), static_cast<std::size_t>(a.rows), "linear map rows");
  std::vector<LinearForm> images(a.rows);
  for (int i = 0; i < a.rows; ++i) {
    for (int j = 0; j < a.cols; ++j) {
      if (a.a[i][j] != 0) images[i].emplace_back(j, a.a[i][j]);
    }
  }
  return substitute_forms(f, images, a.cols);
}

MultiPoly rename_variables(const MultiPoly& f, const std::vector<int>& map, int arity) {
  require_arity(f.arity(), map.size(), "renaming");
  MultiPoly out(arity);
  for (const auto& [m, c] : f.terms()) {
    Monomial n;
    n.reserve(m.size());
    for (int v : m) {
      if (map[v] < 0) throw Error(ErrorCode::kArityMismatch, "variable " + std::to_string(v) + " has no image");
      n.push_back(map[v]);
    }
    out.add_term(std::move(n), c);
  }
  return out;
}

}  // namespace mlc
