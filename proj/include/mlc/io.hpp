#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "mlc/cone.hpp"
#include "mlc/lorentz.hpp"
#include "mlc/matroid.hpp"
#include "mlc/multipoly.hpp"
#include "mlc/symmatrix.hpp"
#include "mlc/volume.hpp"

namespace mlc {

using Json = nlohmann::ordered_json;

// {"ground": n, "flats": [[0, 2], ...]}; throws kParseError on malformed
// documents and the axiom errors on invalid lattices.
Matroid parse_matroid(std::string_view text);
Json matroid_to_json(const Matroid& m);

// Records {"exponents": [...], "num": "p", "den": "q"} with dense exponent
// vectors, in monomial order.
Json polynomial_to_json(const MultiPoly& f);
MultiPoly polynomial_from_json(const Json& j, int arity);

// [[flat id, "p/q"], ...] over the proper flats.
Json class_to_json(const Matroid& m, const ClassVector& v);
ClassVector class_from_json(const Matroid& m, const Json& j);

// Values indexed by subset bitmask.
Json set_function_to_json(const SetFunction& c);
SetFunction set_function_from_json(const Json& j);

Json signature_to_json(const Signature& s);
Json certificate_to_json(const Certificate& c);
// Multi-line human form of the same fields.
std::string certificate_to_text(const Certificate& c);

// First line n, then n rows of n rationals.
SymMatrix parse_matrix(std::string_view text);

// Whole file; throws kParseError if it cannot be read.
std::string read_file(const std::string& path);

}  // namespace mlc
