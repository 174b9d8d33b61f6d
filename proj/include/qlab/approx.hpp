#pragma once

#include <optional>
#include <string>

#include "qlab/quotient.hpp"
#include "qlab/setspec.hpp"

namespace qlab {

enum class ApproxMethod { IntervalUnionConstructive, BoundedExponentSearch };

// A quotient of two set elements close to a requested target. The fraction is
// kept unreduced: numerator and denominator are the actual set elements.
struct ApproxResult {
  Int numerator;
  Int denominator;
  Rat value;   // numerator/denominator in lowest terms
  Rat target;
  Rat error;   // |value - target|, exact
  ApproxMethod method;
};

// Constructive approximation of xi by a quotient of interval-union elements,
// valid whenever b <= a^2. Locates the scale j with xi in [b^j/a, b^j) or
// [b^j, a*b^j), then picks a power-of-b denominator large enough that the
// truncation error stays below eps. The result is one-sided:
// 0 <= xi - value < eps. Requires integer b so the denominator is itself a
// set element.
ApproxResult approximate_interval_union(const SetSpec& spec, const Rat& xi,
                                        const Rat& eps);

// Best-effort approximation of xi by a quotient of two distinct elements of
// {2^j : j >= 2} union {3^k : k >= 2} with all exponents <= exp_bound.
// Candidate exponent pairs are ordered by max exponent M ascending, with
// (x, M), x < M, before (M, y), each side ascending; within a pair the forms
// run 2^x/2^y, 3^x/3^y, 2^x/3^y, 3^x/2^y. The first candidate with error
// < eps wins. Throws a "bound exhausted" error when no candidate fits;
// callers should raise exp_bound and retry (a large enough bound always
// succeeds).
ApproxResult approximate_power_pair(const Rat& xi, const Rat& eps,
                                    const Int& exp_bound);

enum class Density { Dense, NotDense, Unknown };

struct DensityVerdict {
  Density verdict;
  std::string reason;
  // Present exactly when the verdict is NotDense: an analytic interval
  // witnessing that quotients avoid some window.
  std::optional<GapCertificate> certificate;
};

// Decides whether the closure of the quotient set covers [0, infinity).
// Block families are decided by whether consecutive quotient bands overlap;
// pure powers and finite sets are never dense; the union of 2-powers and
// 3-powers is dense. Everything else is Unknown.
DensityVerdict classify_fractional_density(const SetSpec& spec);

// The interval-union family whose lower density is exactly delta while its
// quotient set still has certified gaps (a^2 < b whenever delta > 0):
// a = 1 + e/2, b = 1 + e + e^2/2 with e = 1/delta - 2. delta = 0 degenerates
// to the powers of two. Requires 0 <= delta < 1/2; at 1/2 and above no such
// set exists, which is the point of the construction.
SetSpec build_delta_family(const Rat& delta);

}  // namespace qlab
