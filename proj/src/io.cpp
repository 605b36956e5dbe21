#include "mlc/io.hpp"

#include <fstream>
#include <sstream>

#include "mlc/error.hpp"

namespace mlc {

namespace {

Rational rational_field(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
  throw Error(ErrorCode::kParseError, "expected a rational, got " + j.dump());
}

}  // namespace

Matroid parse_matroid(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
  if (!doc.is_object() || !doc.contains("ground") || !doc.contains("flats") || !doc["ground"].is_number_integer() ||
      !doc["flats"].is_array()) {
    throw Error(ErrorCode::kParseError, "matroid needs integer \"ground\" and array \"flats\"");
  }
  const int n = doc["ground"].get<int>();
  if (n < 0 || n > 64) throw Error(ErrorCode::kSizeCapExceeded, "ground set must have at most 64 elements");
  std::vector<Subset> flats;
  for (const auto& f : doc["flats"]) {
    if (!f.is_array()) throw Error(ErrorCode::kParseError, "flat must be an array of elements");
    Subset s = 0;
    for (const auto& e : f) {
      if (!e.is_number_integer()) throw Error(ErrorCode::kParseError, "element must be an integer");
      const int x = e.get<int>();
      if (x < 0 || x >= n) throw Error(ErrorCode::kElementOutOfRange, "element " + std::to_string(x) + " outside ground");
      s |= Subset{1} << x;
    }
    flats.push_back(s);
  }
  return validate_flats(std::move(flats), n);
}

Json matroid_to_json(const Matroid& m) {
  Json flats = Json::array();
  for (Subset f : m.flats()) flats.push_back(members(f));
  return Json{{"ground", m.ground_size()}, {"flats", flats}};
}

Json polynomial_to_json(const MultiPoly& f) {
  Json out = Json::array();
  for (const auto& [mono, c] : f.terms()) {
    std::vector<int> exps(f.arity(), 0);
    for (int v : mono) ++exps[v];
    out.push_back(Json{{"exponents", exps}, {"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}});
  }
  return out;
}

MultiPoly polynomial_from_json(const Json& j, int arity) {
  if (!j.is_array()) throw Error(ErrorCode::kParseError, "polynomial must be an array of terms");
  MultiPoly f(arity);
  for (const auto& t : j) {
    if (!t.contains("exponents") || !t.contains("num") || !t.contains("den")) {
      throw Error(ErrorCode::kParseError, "term needs exponents, num and den");
    }
    const auto exps = t["exponents"].get<std::vector<int>>();
    if (static_cast<int>(exps.size()) != arity) throw Error(ErrorCode::kArityMismatch, "exponent vector length");
    Monomial m;
    for (int v = 0; v < arity; ++v) {
      if (exps[v] < 0) throw Error(ErrorCode::kParseError, "negative exponent");
      m.insert(m.end(), exps[v], v);
    }
    f.add_term(std::move(m), rational_field(t["num"]) / rational_field(t["den"]));
  }
  return f;
}

Json class_to_json(const Matroid& m, const ClassVector& v) {
  if (static_cast<int>(v.size()) != m.proper_count()) throw Error(ErrorCode::kArityMismatch, "class length");
  Json out = Json::array();
  for (int p = 0; p < m.proper_count(); ++p) out.push_back(Json::array({m.proper_flat_id(p), to_string(v[p])}));
  return out;
}

ClassVector class_from_json(const Matroid& m, const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::kParseError, "class must be an array of pairs");
  ClassVector v = zero_class(m);
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer()) {
      throw Error(ErrorCode::kParseError, "class entry must be [flat id, rational]");
    }
    const int id = pair[0].get<int>();
    if (id < 0 || id >= m.flat_count() || !m.is_proper(id)) {
      throw Error(ErrorCode::kImproperFlat, "flat " + std::to_string(id) + " is not proper");
    }
    v[m.proper_index(id)] = rational_field(pair[1]);
  }
  return v;
}

Json set_function_to_json(const SetFunction& c) {
  Json out = Json::array();
  for (const auto& v : c.values()) out.push_back(to_string(v));
  return out;
}

SetFunction set_function_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::kParseError, "set function must be an array");
  const std::size_t size = j.size();
  int n = 0;
  while ((std::size_t{1} << n) < size) ++n;
  if ((std::size_t{1} << n) != size) throw Error(ErrorCode::kParseError, "set function length is not a power of two");
  std::vector<Rational> values;
  for (const auto& v : j) values.push_back(rational_field(v));
  return SetFunction::from_values(n, std::move(values));
}

Json signature_to_json(const Signature& s) {
  return Json{{"positive", s.positive}, {"negative", s.negative}, {"zero", s.zero}};
}

namespace {

Json vector_json(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

std::string hex(std::uint64_t h) {
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

}  // namespace

Json certificate_to_json(const Certificate& c) {
  Json dirs = Json::array();
  for (const auto& d : c.directions) dirs.push_back(vector_json(d));
  Json out{{"kind", c.kind}, {"matroid_hash", hex(c.matroid_hash)}};
  if (!c.chain.empty()) out["chain"] = c.chain;
  out["point"] = vector_json(c.point);
  out["directions"] = dirs;
  out["value"] = to_string(c.value);
  out["signature"] = signature_to_json(c.signature);
  if (c.kind == "chain") out["graph_matches"] = c.graph_matches;
  out["pass"] = c.pass;
  if (!c.witness.empty()) out["witness"] = c.witness;
  return out;
}

std::string certificate_to_text(const Certificate& c) {
  std::ostringstream os;
  os << "kind: " << c.kind << "\n";
  os << "matroid hash: " << hex(c.matroid_hash) << "\n";
  if (!c.chain.empty()) {
    os << "chain:";
    for (int f : c.chain) os << " " << f;
    os << "\n";
  }
  os << "point:";
  for (const auto& x : c.point) os << " " << to_string(x);
  os << "\ndirections: " << c.directions.size() << "\n";
  os << "value: " << to_string(c.value) << "\n";
  os << "signature (p,n,z): " << to_string(c.signature) << "\n";
  if (c.kind == "chain") os << "incidence graph matches: " << (c.graph_matches ? "yes" : "no") << "\n";
  if (!c.witness.empty()) os << "witness: " << c.witness << "\n";
  os << (c.pass ? "PASS" : "FAIL") << "\n";
  return os.str();
}

SymMatrix parse_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  int n = 0;
  if (!(in >> n) || n < 0) throw Error(ErrorCode::kParseError, "matrix file must start with its dimension");
  std::vector<RationalVector> rows(n, RationalVector(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::string tok;
      if (!(in >> tok)) throw Error(ErrorCode::kParseError, "matrix has fewer than n*n entries");
      rows[i][j] = parse_rational(tok);
    }
  }
  std::string extra;
  if (in >> extra) throw Error(ErrorCode::kParseError, "trailing data after matrix: " + extra);
  return SymMatrix::from_rows(rows);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParseError, "cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace mlc
