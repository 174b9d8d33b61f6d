#include "qlab/setspec.hpp"

#include <algorithm>

namespace qlab {

bool operator==(const SetSpec& x, const SetSpec& y) { return x.node == y.node; }

SetSpec make_interval_union(const Rat& a, const Rat& b) {
  if (a <= 1) throw domain_error("interval-union: need a > 1");
  if (b < a) throw domain_error("interval-union: need b >= a");
  return SetSpec{IntervalUnion{a, b}};
}

SetSpec make_leading_digit(const Int& base, std::vector<Int> digits) {
  if (base < 2) throw domain_error("leading-digit: base must be >= 2");
  if (digits.empty()) throw domain_error("leading-digit: need at least one digit");
  for (size_t i = 0; i < digits.size(); ++i) {
    if (digits[i] < 1 || digits[i] >= base) {
      throw domain_error("leading-digit: digit out of range [1, base-1]");
    }
    if (i > 0 && digits[i] <= digits[i - 1]) {
      throw domain_error("leading-digit: digits must be strictly increasing");
    }
  }
  return SetSpec{LeadingDigit{base, std::move(digits)}};
}

SetSpec make_geometric_powers(const Int& base, const Int& min_exp) {
  if (base < 2) throw domain_error("powers: base must be >= 2");
  if (min_exp < 0) throw domain_error("powers: min-exp must be >= 0");
  return SetSpec{GeometricPowers{base, min_exp}};
}

SetSpec make_factorial_blocks(FactorialPart part) {
  return SetSpec{FactorialBlocks{part}};
}

SetSpec make_union(SetSpec left, SetSpec right) {
  return SetSpec{UnionSpec{std::make_shared<SetSpec>(std::move(left)),
                           std::make_shared<SetSpec>(std::move(right))}};
}

SetSpec make_explicit(std::vector<Int> elements) {
  if (elements.empty()) throw domain_error("explicit: need at least one element");
  for (size_t i = 0; i < elements.size(); ++i) {
    if (elements[i] < 1) throw domain_error("explicit: elements must be >= 1");
    if (i > 0 && elements[i] <= elements[i - 1]) {
      throw domain_error("explicit: elements must be strictly increasing");
    }
  }
  return SetSpec{Explicit{std::move(elements)}};
}

Int factorial_sum(int k) {
  if (k < 0) throw domain_error("factorial_sum: k must be >= 0");
  Int sum = 0;
  Int fact = 1;
  for (int i = 1; i <= k; ++i) {
    fact *= i;
    sum += fact;
  }
  return sum;
}

namespace {

// Sorted-by-lo runs, possibly overlapping -> disjoint ascending, abutting
// runs merged.
std::vector<Run> normalize_runs(std::vector<Run> runs) {
  std::sort(runs.begin(), runs.end(),
            [](const Run& p, const Run& q) { return p.lo < q.lo; });
  std::vector<Run> out;
  for (auto& r : runs) {
    if (r.lo > r.hi) continue;
    if (!out.empty() && r.lo <= out.back().hi + 1) {
      if (r.hi > out.back().hi) out.back().hi = r.hi;
    } else {
      out.push_back(r);
    }
  }
  return out;
}

std::vector<Run> interval_union_runs(const IntervalUnion& s, const Int& x) {
  std::vector<Run> runs;
  Rat p(1);  // b^k
  Rat bound(x);
  while (p <= bound) {
    Int lo = ceil_rat(p);
    Int hi = ceil_rat(s.a * p) - 1;
    if (hi > x) hi = x;
    if (lo <= hi) runs.push_back({lo, hi});
    p *= s.b;
  }
  return runs;
}

std::vector<Run> leading_digit_runs(const LeadingDigit& s, const Int& x) {
  std::vector<Run> runs;
  Int p(1);  // base^k
  while (p <= x) {
    for (const Int& d : s.digits) {
      Int lo = d * p;
      if (lo > x) break;
      Int hi = (d + 1) * p - 1;
      if (hi > x) hi = x;
      runs.push_back({lo, hi});
    }
    p *= s.base;
  }
  return runs;
}

std::vector<Run> powers_runs(const GeometricPowers& s, const Int& x) {
  std::vector<Run> runs;
  Int p(1);
  for (Int k = 0; k < s.min_exp; ++k) {
    p *= s.base;
    if (p > x) return runs;
  }
  while (p <= x) {
    runs.push_back({p, p});
    p *= s.base;
  }
  return runs;
}

std::vector<Run> factorial_runs(const FactorialBlocks& s, const Int& x) {
  // Block k (1-based) is (S_{k-1}, S_k]; part A takes odd k, B even k.
  std::vector<Run> runs;
  Int prev = 0;  // S_{k-1}
  Int fact = 1;
  for (int k = 1; prev < x; ++k) {
    if (k > 1) fact *= k;
    Int cur = prev + fact;  // S_k
    bool odd = k % 2 == 1;
    if (odd == (s.part == FactorialPart::A)) {
      Int lo = prev + 1;
      Int hi = cur < x ? cur : x;
      if (lo <= hi) runs.push_back({lo, hi});
    }
    prev = cur;
  }
  return runs;
}

std::vector<Run> explicit_runs(const Explicit& s, const Int& x) {
  std::vector<Run> runs;
  for (const Int& n : s.elements) {
    if (n > x) break;
    if (!runs.empty() && runs.back().hi + 1 == n) {
      runs.back().hi = n;
    } else {
      runs.push_back({n, n});
    }
  }
  return runs;
}

}  // namespace

std::vector<Run> runs_upto(const SetSpec& spec, const Int& x) {
  if (x < 1) return {};
  std::vector<Run> raw = std::visit(
      [&](const auto& s) -> std::vector<Run> {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, IntervalUnion>) {
          return interval_union_runs(s, x);
        } else if constexpr (std::is_same_v<T, LeadingDigit>) {
          return leading_digit_runs(s, x);
        } else if constexpr (std::is_same_v<T, GeometricPowers>) {
          return powers_runs(s, x);
        } else if constexpr (std::is_same_v<T, FactorialBlocks>) {
          return factorial_runs(s, x);
        } else if constexpr (std::is_same_v<T, UnionSpec>) {
          auto left = runs_upto(*s.left, x);
          auto right = runs_upto(*s.right, x);
          left.insert(left.end(), right.begin(), right.end());
          return left;
        } else {
          return explicit_runs(s, x);
        }
      },
      spec.node);
  return normalize_runs(std::move(raw));
}

bool contains(const SetSpec& spec, const Int& n) {
  if (n < 1) return false;
  return std::visit(
      [&](const auto& s) -> bool {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, IntervalUnion>) {
          // Blocks [b^k, a*b^k) are disjoint (a <= b), so only the largest
          // power b^k <= n matters.
          Rat p(1);
          while (p * s.b <= Rat(n)) p *= s.b;
          return Rat(n) < s.a * p;
        } else if constexpr (std::is_same_v<T, LeadingDigit>) {
          Int p(1);
          while (p * s.base <= n) p *= s.base;
          Int lead = n / p;
          return std::binary_search(s.digits.begin(), s.digits.end(), lead);
        } else if constexpr (std::is_same_v<T, GeometricPowers>) {
          Int p(1);
          for (Int k = 0; k < s.min_exp; ++k) {
            p *= s.base;
            if (p > n) return false;
          }
          while (p < n) p *= s.base;
          return p == n;
        } else if constexpr (std::is_same_v<T, FactorialBlocks>) {
          Int prev = 0;
          Int fact = 1;
          for (int k = 1;; ++k) {
            if (k > 1) fact *= k;
            Int cur = prev + fact;
            if (n <= cur) {
              bool odd = k % 2 == 1;
              return odd == (s.part == FactorialPart::A);
            }
            prev = cur;
          }
        } else if constexpr (std::is_same_v<T, UnionSpec>) {
          return contains(*s.left, n) || contains(*s.right, n);
        } else {
          return std::binary_search(s.elements.begin(), s.elements.end(), n);
        }
      },
      spec.node);
}

Int count_upto(const SetSpec& spec, const Int& x) {
  Int total = 0;
  for (const Run& r : runs_upto(spec, x)) total += r.hi - r.lo + 1;
  return total;
}

std::vector<Int> enumerate_upto(const SetSpec& spec, const Int& x) {
  std::vector<Int> out;
  for (const Run& r : runs_upto(spec, x)) {
    for (Int n = r.lo; n <= r.hi; ++n) out.push_back(n);
  }
  return out;
}

}  // namespace qlab
