#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "qlab/setspec.hpp"

namespace qlab {

enum class PartitionName { ThreeWayBase5, FactorialBlocks, Custom };

// A claimed partition of N into 2 or 3 parts. Disjointness and coverage are
// not assumed; verify_partition checks them on any prefix.
struct PartitionSpec {
  PartitionName name;
  std::vector<SetSpec> parts;
};

// Parts [5^k, 2*5^k), [2*5^k, 3*5^k), [3*5^k, 5^(k+1)): leading base-5 digit
// 1, 2, or 3-4.
PartitionSpec build_three_way();

// Alternating factorial-length blocks: A = {1, 4..9, 34..153, ...},
// B = {2, 3, 10..33, 154..873, ...}.
PartitionSpec build_factorial();

PartitionSpec make_custom_partition(std::vector<SetSpec> parts);

// True iff every n <= upto belongs to exactly one part.
bool verify_partition(const PartitionSpec& p, const Int& upto);

// A same-part pair whose quotient lands inside a claimed quotient-free
// interval, produced by running the two-part density argument.
struct RefutationWitness {
  int part_index;
  Int numerator;
  Int denominator;
  Rat quotient;  // numerator/denominator
  Rat center;    // the violated gap is (center - epsilon, center + epsilon)
  Rat epsilon;
  // The search transcript: n0, n, orientation, s, t, branch, in order.
  std::vector<std::pair<std::string, Rat>> trace;
};

using Membership = std::function<bool(const Int&)>;

// Refutes the claim that quotients of part 0 avoid (alpha-eps, alpha+eps)
// while quotients of part 1 avoid (beta-eps, beta+eps), for alpha, beta > 1.
// Runs the constructive argument: pick n0 with (1+alpha+beta+2*alpha*beta)/n0
// < eps, scan n > alpha*beta*(n0+1) for a boundary pair n, n+1 split across
// the parts (either orientation), set s = floor(n/(alpha*beta)) - 1, and
// follow the membership of s and t = floor(center_of_s's_part * s) to one of
// four witness branches. Every returned quotient is re-checked exactly.
// Throws when no boundary pair exists below the bound (degenerate partition)
// or when the scan exhausts the bound without a verified witness.
RefutationWitness refute_two_partition(const Membership& part0,
                                       const Membership& part1,
                                       const Rat& alpha, const Rat& beta,
                                       const Rat& eps, const Int& search_bound);

// Same, over the two parts of a PartitionSpec.
RefutationWitness refute_two_partition(const PartitionSpec& p,
                                       const Rat& alpha, const Rat& beta,
                                       const Rat& eps, const Int& search_bound);

}  // namespace qlab
