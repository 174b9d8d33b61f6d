#pragma once

#include <string>
#include <vector>

#include "qlab/setspec.hpp"

namespace qlab {

struct QuotientHit {
  Rat value;
  Int num;
  Int den;
  friend bool operator==(const QuotientHit&, const QuotientHit&) = default;
};

struct QuotientWindow {
  SetSpec spec;
  Int cutoff;
  Rat lo;
  Rat hi;
  // Sorted by value, one entry per distinct value; the kept witness is the
  // one with the smallest denominator.
  std::vector<QuotientHit> quotients;
};

enum class GapKind { Analytic, Empirical };

// An interval claimed free of quotients. Analytic certificates assert the
// claim for the full infinite set on the closed interval [lo, hi]. Empirical
// ones assert it only for elements <= cutoff, on the open interior (the
// reported endpoints are realized quotients or window edges).
struct GapCertificate {
  Rat lo;
  Rat hi;
  GapKind kind;
  std::string family;  // analytic only: which gap family produced it
  long ell = 0;        // analytic only: index within the family
  Int cutoff = 0;      // empirical only: element bound the scan used
};

// All distinct quotient values p/q in [lo, hi] with p, q in A, both <= cutoff.
// Walks denominators in ascending order and binary-searches the enumerated
// elements for admissible numerators; pairs are never materialized wholesale.
// The full list is the output, so callers asking about large windows at large
// cutoffs should prefer gap_scan or verify_gap.
QuotientWindow quotients_in_window(const SetSpec& spec, const Int& cutoff,
                                   const Rat& lo, const Rat& hi);

// Maximal subintervals of [lo, hi] of width >= min_width containing no
// quotient realizable with both elements <= cutoff. Deterministic; output
// matches a scan of the sorted quotient list, but is computed from runs of
// consecutive members so the quotient values are never all materialized.
std::vector<GapCertificate> gap_scan(const SetSpec& spec, const Int& cutoff,
                                     const Rat& lo, const Rat& hi,
                                     const Rat& min_width);

// The analytic gap family [ (d/c)*b^l, (c/d)*b^(l+1) ] for block-family specs
// with (d/c)^2 < b: consecutive-block quotient bands cannot reach into these
// intervals. Throws "no analytic certificate" for any other spec.
std::vector<GapCertificate> certified_gaps(const SetSpec& spec, long ell_lo,
                                           long ell_hi);

// True iff no quotient of elements <= cutoff lies in the certificate's
// interval (closed for analytic certificates, open interior for empirical).
bool verify_gap(const SetSpec& spec, const GapCertificate& cert,
                const Int& cutoff);

// Identity for certificates inside (0, 1]; otherwise the reciprocal interval
// [1/hi, 1/lo], which is quotient-free exactly when the original is.
GapCertificate normalize_gap_to_unit(const GapCertificate& cert);

// Analytic certificate for a pure-power set: every quotient is an integer
// power of the base, so [ (5/4)*base^l, (4/5)*base^(l+1) ] is quotient-free.
// Nonempty for base >= 2 because (5/4)^2 < 2.
GapCertificate powers_gap_certificate(const Int& base, long ell);

}  // namespace qlab
