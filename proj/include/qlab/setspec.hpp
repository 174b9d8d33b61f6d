#pragma once

#include <memory>
#include <variant>
#include <vector>

#include "qlab/numeric.hpp"

namespace qlab {

// A closed run of consecutive integers [lo, hi], lo <= hi.
struct Run {
  Int lo;
  Int hi;
  friend bool operator==(const Run&, const Run&) = default;
};

struct SetSpec;

// Elements n with b^k <= n < a * b^k for some k >= 0, given 1 < a <= b.
// a and b are rational; a == b means the blocks tile all of N.
struct IntervalUnion {
  Rat a;
  Rat b;
  friend bool operator==(const IntervalUnion&, const IntervalUnion&) = default;
};

// Elements whose leading digit in the given base lies in `digits`
// (strictly increasing, each in [1, base-1]).
struct LeadingDigit {
  Int base;
  std::vector<Int> digits;
  friend bool operator==(const LeadingDigit&, const LeadingDigit&) = default;
};

// {base^k : k >= min_exp}, base >= 2, min_exp >= 0.
struct GeometricPowers {
  Int base;
  Int min_exp;
  friend bool operator==(const GeometricPowers&, const GeometricPowers&) = default;
};

// The two factorial-boundary classes: block k (k = 1, 2, ...) holds the k!
// integers following block k-1, i.e. (S_{k-1}, S_k] with S_k = 1! + ... + k!.
// Odd-index blocks form part A = {1, 4..9, 34..153, ...}, even-index part B.
enum class FactorialPart { A, B };

struct FactorialBlocks {
  FactorialPart part;
  friend bool operator==(const FactorialBlocks&, const FactorialBlocks&) = default;
};

struct UnionSpec {
  std::shared_ptr<const SetSpec> left;
  std::shared_ptr<const SetSpec> right;
};

// A finite, strictly increasing list of positive integers.
struct Explicit {
  std::vector<Int> elements;
  friend bool operator==(const Explicit&, const Explicit&) = default;
};

struct SetSpec {
  std::variant<IntervalUnion, LeadingDigit, GeometricPowers, FactorialBlocks,
               UnionSpec, Explicit>
      node;
};

bool operator==(const SetSpec& x, const SetSpec& y);
inline bool operator==(const UnionSpec& x, const UnionSpec& y) {
  return *x.left == *y.left && *x.right == *y.right;
}

// Validating factories; each throws domain_error on bad parameters.
SetSpec make_interval_union(const Rat& a, const Rat& b);
SetSpec make_leading_digit(const Int& base, std::vector<Int> digits);
SetSpec make_geometric_powers(const Int& base, const Int& min_exp);
SetSpec make_factorial_blocks(FactorialPart part);
SetSpec make_union(SetSpec left, SetSpec right);
SetSpec make_explicit(std::vector<Int> elements);

bool contains(const SetSpec& spec, const Int& n);

// The maximal runs of consecutive members in [1, x], ascending, abutting runs
// merged. Every counting and enumeration question reduces to this.
std::vector<Run> runs_upto(const SetSpec& spec, const Int& x);

Int count_upto(const SetSpec& spec, const Int& x);
std::vector<Int> enumerate_upto(const SetSpec& spec, const Int& x);

// S_k = 1! + 2! + ... + k!.
Int factorial_sum(int k);

}  // namespace qlab
