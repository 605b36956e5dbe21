#include "mlc/rational.hpp"

#include <cctype>

#include "mlc/error.hpp"

namespace mlc {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kAxiomF1Violation: return "AxiomF1Violation";
    case ErrorCode::kAxiomF2Violation: return "AxiomF2Violation";
    case ErrorCode::kAxiomF3Violation: return "AxiomF3Violation";
    case ErrorCode::kInvalidParameters: return "InvalidParameters";
    case ErrorCode::kNotComparable: return "NotComparable";
    case ErrorCode::kSizeCapExceeded: return "SizeCapExceeded";
    case ErrorCode::kNotInvertible: return "NotInvertible";
    case ErrorCode::kInternalMismatch: return "InternalMismatch";
    case ErrorCode::kNotDivisible: return "NotDivisible";
    case ErrorCode::kNotPrime: return "NotPrime";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kArityMismatch: return "ArityMismatch";
    case ErrorCode::kElementOutOfRange: return "ElementOutOfRange";
    case ErrorCode::kImproperFlat: return "ImproperFlat";
    case ErrorCode::kLoopyMatroid: return "LoopyMatroid";
    case ErrorCode::kRankOutOfRange: return "RankOutOfRange";
    case ErrorCode::kBoundaryViolation: return "BoundaryViolation";
    case ErrorCode::kCertificationFailed: return "CertificationFailed";
    case ErrorCode::kNotSymmetric: return "NotSymmetric";
    case ErrorCode::kZeroVector: return "ZeroVector";
    case ErrorCode::kNotIrreducible: return "NotIrreducible";
    case ErrorCode::kNotWeaklyNonnegative: return "NotWeaklyNonnegative";
    case ErrorCode::kNoConvergence: return "NoConvergence";
    case ErrorCode::kPreconditionViolated: return "PreconditionViolated";
    case ErrorCode::kHypothesisFailed: return "HypothesisFailed";
    case ErrorCode::kConclusionFailed: return "ConclusionFailed";
    case ErrorCode::kRankTooSmall: return "RankTooSmall";
    case ErrorCode::kNonPositiveRepresentative: return "NonPositiveRepresentative";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-') {
    throw Error(ErrorCode::kParseError, "malformed rational '" + std::string(text) + "'");
  }
  std::string n(num[0] == '+' ? num.substr(1) : num);
  std::string d(den[0] == '+' ? den.substr(1) : den);
  Integer nz(n, 10);
  Integer dz(d, 10);
  if (dz == 0) throw Error(ErrorCode::kParseError, "zero denominator in '" + std::string(text) + "'");
  Rational r(nz, dz);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(); }

std::string to_string(const Integer& value) { return value.get_str(); }

bool is_integer(const Rational& value) { return value.get_den() == 1; }

Integer binomial(unsigned n, unsigned k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  Rational acc = 0;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) acc += a[i] * b[i];
  return acc;
}

}  // namespace mlc
