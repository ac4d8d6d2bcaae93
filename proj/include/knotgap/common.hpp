#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace knotgap {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct KnotgapError : std::runtime_error {
  std::string kind;
  KnotgapError(std::string k, const std::string& msg)
      : std::runtime_error(k + ": " + msg), kind(std::move(k)) {}
};

#define KNOTGAP_ERROR_KIND(Name)                        \
  struct Name : KnotgapError {                          \
    explicit Name(const std::string& msg)               \
        : KnotgapError(#Name, msg) {}                   \
  }

KNOTGAP_ERROR_KIND(SyntaxError);
KNOTGAP_ERROR_KIND(ValidationError);
KNOTGAP_ERROR_KIND(NotReduced);
KNOTGAP_ERROR_KIND(Disconnected);
KNOTGAP_ERROR_KIND(MissingSign);
KNOTGAP_ERROR_KIND(NotHomogeneous);
KNOTGAP_ERROR_KIND(NoMixedCircle);
KNOTGAP_ERROR_KIND(PatternMismatch);
KNOTGAP_ERROR_KIND(DegenerateProjection);
KNOTGAP_ERROR_KIND(VerificationFailed);
KNOTGAP_ERROR_KIND(HypothesisViolated);
KNOTGAP_ERROR_KIND(SearchExhausted);
KNOTGAP_ERROR_KIND(FactorizationTooLarge);
KNOTGAP_ERROR_KIND(NoUnitCoordinate);
KNOTGAP_ERROR_KIND(InternalError);

#undef KNOTGAP_ERROR_KIND

inline void check_internal(bool cond, const std::string& msg) {
  if (!cond) throw InternalError(msg);
}

inline int sgn(const Int& x) { return x == 0 ? 0 : (x > 0 ? 1 : -1); }
inline int sgn(const Rat& x) { return x == 0 ? 0 : (x > 0 ? 1 : -1); }
inline int sgn(long long x) { return x == 0 ? 0 : (x > 0 ? 1 : -1); }

}  // namespace knotgap
