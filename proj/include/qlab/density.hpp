#pragma once

#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "qlab/setspec.hpp"

namespace qlab {

struct ProfilePoint {
  Int x;
  Int count;  // members of A in [1, x]
  Rat ratio;  // count / x, exact
  friend bool operator==(const ProfilePoint&, const ProfilePoint&) = default;
};

// Finite-scale evidence for liminf/limsup of |A(x)|/x. The bounds are the
// min/max of the ratios at the listed points; they are empirical observations,
// not proofs of the limits.
struct DensityEstimate {
  Rat liminf_bound;
  Rat limsup_bound;
  std::vector<ProfilePoint> liminf_points;
  std::vector<ProfilePoint> limsup_points;
};

// Exact ratios |A(x)|/x at the requested points (each >= 1).
std::vector<ProfilePoint> density_profile(const SetSpec& spec,
                                          const std::vector<Int>& points);

// For interval-union specs, samples |A(x)|/x where the ratio is locally
// extremal: x = ceil(b^k) - 1 (count constant since the previous block ended)
// and x = ceil(a*b^k) - 1 (last member of block k), k = 1..depth. Other specs
// are sampled on the grid x = 2^k. Bounds are min/max of sampled ratios.
DensityEstimate estimate_lower_density(const SetSpec& spec, int depth);

// (a-1)/(b-1): the exact liminf of |A(x)|/x for the union of [b^k, a*b^k).
// Rejects all other spec shapes.
Rat closed_form_lower_density(const SetSpec& spec);

// (a-1)*b / (a*(b-1)): the exact limsup, attained along x -> a*b^k.
Rat closed_form_upper_density(const SetSpec& spec);

// A = union of [c*b^k, d*b^k) over k >= 0, with 1 <= c < d <= b. Covers both
// interval-union specs (c = 1, d = a) and contiguous leading-digit sets
// (c = first digit, d = last digit + 1, b = base).
struct BlockFamily {
  Rat c;
  Rat d;
  Rat b;
};

std::optional<BlockFamily> block_family_of(const SetSpec& spec);

Rat block_lower_density(const BlockFamily& f);   // (d-c)/(c*(b-1))
Rat block_upper_density(const BlockFamily& f);   // (d-c)*b/(d*(b-1))

// The two difference quotients of the count of FactorialBlocks(A) across its
// quiet stretch (x_n = S_{2n-1} to S_{2n+1}) and its active stretch
// (y_n = S_{2n} to S_{2n+2}). Computed from exact counts and checked against
// the closed forms 1/(2n+3) and (2n+1)/(2n+2) before returning.
std::pair<Rat, Rat> stolz_cesaro_check(int n);

// Columns: x,count,ratio_numerator,ratio_denominator,ratio_decimal.
void write_profile_csv(std::ostream& out, const std::vector<ProfilePoint>& points);

}  // namespace qlab
