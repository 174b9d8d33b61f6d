#pragma once

#include <string>
#include <vector>

#include "qlab/approx.hpp"
#include "qlab/quotient.hpp"
#include "qlab/setspec.hpp"

namespace qlab {

// Roster of specs used by the demo reports and the cross-checking tests.
// Names are the canonical spec strings.
struct NamedSpec {
  std::string name;
  SetSpec spec;
};

const std::vector<NamedSpec>& builtin_specs();

// Every analytic gap certificate the built-in sets give rise to (band
// indices 0..2 per set), carrying the exact closed-form density bounds of
// its set: block-family formulas for block families, zero for pure powers.
struct CertifiedSpec {
  std::string name;
  SetSpec spec;
  GapCertificate cert;
  Rat lower_density;
  Rat upper_density;
};

std::vector<CertifiedSpec> builtin_analytic_certificates();

// approximate_power_pair, restarting with a doubled exponent bound (up to
// the cap) whenever the search reports "bound exhausted".
ApproxResult approximate_power_pair_escalating(const Rat& xi, const Rat& eps,
                                               Int exp_bound,
                                               const Int& exp_bound_cap);

struct GemCheck {
  std::string label;
  bool pass;
  std::string detail;
};

// One of the four showcase computations. `notes` carries context lines the
// CLI prints before the pass/fail list.
struct GemReport {
  int which;
  std::string title;
  std::vector<std::string> notes;
  std::vector<GemCheck> checks;

  bool all_pass() const {
    for (const auto& c : checks) {
      if (!c.pass) return false;
    }
    return true;
  }
};

// which = 1: the a^2 threshold for unions of blocks [b^k, 2*b^k).
// which = 2: prescribed lower densities below 1/2 with certified gaps.
// which = 3: partitions of N cannot keep quotients out of fixed windows.
// which = 4: the 2-power/3-power union: progression-free, quotient-dense.
GemReport run_gem(int which);

}  // namespace qlab
