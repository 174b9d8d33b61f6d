#pragma once

#include <optional>

#include "qlab/setspec.hpp"

namespace qlab {

struct Progression {
  Int first;
  Int difference;  // >= 1
  Int length;      // >= 2; all terms first + i*difference are members
  friend bool operator==(const Progression&, const Progression&) = default;
};

// First arithmetic progression of the requested length inside A's members
// <= upto, ordered by first term, then by difference. Walks ordered member
// pairs as (first, second term) and membership-checks the remaining terms.
std::optional<Progression> find_progression(const SetSpec& spec,
                                            const Int& upto,
                                            const Int& length);

// Longest maximal run of consecutive members within [1, upto]; ties go to
// the smallest start. Returns (start, length).
std::pair<Int, Int> longest_consecutive_run(const SetSpec& spec,
                                            const Int& upto);

// Exhaustive 3-term progression scan over {2^j : j >= 2} union
// {3^k : k >= 2} up to the bound. Each ordered member pair (x, y) proposes
// z = 2y - x; the pair counts toward the case of x's base. aps_found stays
// zero: a progression led by a power of two forces an impossible equation
// between powers of two, and one led by a power of three is inconsistent
// modulo 3.
struct ThreeApReport {
  Int bound;
  Int member_count;
  Int pairs_checked;
  Int power2_led_eliminated;  // pairs whose smaller element is a 2-power
  Int power3_led_eliminated;  // pairs whose smaller element is a 3-power
  Int aps_found;
};

ThreeApReport verify_no_3ap_proof_cases(const Int& prefix_bound);

}  // namespace qlab
