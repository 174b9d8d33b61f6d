#include "qlab/partition.hpp"

#include <algorithm>

namespace qlab {

PartitionSpec build_three_way() {
  std::vector<SetSpec> parts;
  parts.push_back(make_leading_digit(5, {1}));
  parts.push_back(make_leading_digit(5, {2}));
  parts.push_back(make_leading_digit(5, {3, 4}));
  return PartitionSpec{PartitionName::ThreeWayBase5, std::move(parts)};
}

PartitionSpec build_factorial() {
  std::vector<SetSpec> parts;
  parts.push_back(make_factorial_blocks(FactorialPart::A));
  parts.push_back(make_factorial_blocks(FactorialPart::B));
  return PartitionSpec{PartitionName::FactorialBlocks, std::move(parts)};
}

PartitionSpec make_custom_partition(std::vector<SetSpec> parts) {
  if (parts.size() != 2 && parts.size() != 3) {
    throw domain_error("custom partition: need exactly 2 or 3 parts");
  }
  return PartitionSpec{PartitionName::Custom, std::move(parts)};
}

bool verify_partition(const PartitionSpec& p, const Int& upto) {
  if (upto < 1) throw domain_error("verify_partition: upto must be >= 1");
  std::vector<Run> runs;
  for (const SetSpec& part : p.parts) {
    auto r = runs_upto(part, upto);
    runs.insert(runs.end(), r.begin(), r.end());
  }
  std::sort(runs.begin(), runs.end(),
            [](const Run& x, const Run& y) { return x.lo < y.lo; });
  // Exactly-one membership: the per-part runs must tile [1, upto] with no
  // overlap and no hole.
  Int expect = 1;
  for (const Run& r : runs) {
    if (r.lo != expect) return false;
    expect = r.hi + 1;
  }
  return expect == upto + 1;
}

namespace {

struct BranchHit {
  int part_index;
  Int num;
  Int den;
  Rat center;
  long branch;
  Int s;
  Int t;
};

// One orientation of the boundary-pair argument: n in X (gap center chi),
// n+1 in Y (gap center psi). Returns the branch the proof takes, without yet
// checking the quotient against the gap.
std::optional<BranchHit> run_branches(const Membership& in_x,
                                      const Membership& in_y, int x_index,
                                      int y_index, const Rat& chi,
                                      const Rat& psi, const Int& n,
                                      const Int& s) {
  if (in_x(s)) {
    Int t = floor_rat(chi * s);
    if (t >= 1 && in_x(t)) return BranchHit{x_index, t, s, chi, 1, s, t};
    if (t >= 1 && in_y(t)) return BranchHit{y_index, n + 1, t, psi, 2, s, t};
    return std::nullopt;
  }
  if (in_y(s)) {
    Int t = floor_rat(psi * s);
    if (t >= 1 && in_y(t)) return BranchHit{y_index, t, s, psi, 3, s, t};
    if (t >= 1 && in_x(t)) return BranchHit{x_index, n, t, chi, 4, s, t};
  }
  return std::nullopt;
}

}  // namespace

RefutationWitness refute_two_partition(const Membership& part0,
                                       const Membership& part1,
                                       const Rat& alpha, const Rat& beta,
                                       const Rat& eps,
                                       const Int& search_bound) {
  if (alpha <= 1 || beta <= 1) {
    throw domain_error("refute_two_partition: gap centers must exceed 1");
  }
  if (eps <= 0) {
    throw domain_error("refute_two_partition: epsilon must be positive");
  }
  const Rat ab = alpha * beta;
  const Int n0 = floor_rat((1 + alpha + beta + 2 * ab) / eps) + 1;
  const Int start = floor_rat(ab * (n0 + 1)) + 1;
  if (start > search_bound) {
    throw domain_error(
        "refute_two_partition: search bound " + search_bound.str() +
        " is below the scan start " + start.str() + "; raise it");
  }

  bool saw_boundary = false;
  for (Int n = start; n < search_bound; ++n) {
    for (int orient = 0; orient < 2; ++orient) {
      const Membership& in_x = orient == 0 ? part0 : part1;
      const Membership& in_y = orient == 0 ? part1 : part0;
      if (!in_x(n) || !in_y(n + 1)) continue;
      saw_boundary = true;
      const Rat& chi = orient == 0 ? alpha : beta;
      const Rat& psi = orient == 0 ? beta : alpha;
      const Int s = floor_rat(Rat(n) / ab) - 1;
      auto hit = run_branches(in_x, in_y, orient == 0 ? 0 : 1,
                              orient == 0 ? 1 : 0, chi, psi, n, s);
      if (!hit) continue;
      Rat q(hit->num, hit->den);
      Rat err = q > hit->center ? Rat(q - hit->center) : Rat(hit->center - q);
      if (err >= eps) continue;
      RefutationWitness w;
      w.part_index = hit->part_index;
      w.numerator = hit->num;
      w.denominator = hit->den;
      w.quotient = q;
      w.center = hit->center;
      w.epsilon = eps;
      w.trace = {{"n0", Rat(n0)},
                 {"n", Rat(n)},
                 {"orientation", Rat(orient + 1)},
                 {"s", Rat(hit->s)},
                 {"t", Rat(hit->t)},
                 {"branch", Rat(hit->branch)}};
      return w;
    }
  }
  if (!saw_boundary) {
    throw domain_error(
        "refute_two_partition: no boundary pair n, n+1 split across the "
        "parts below " + search_bound.str() +
        "; the partition is degenerate on this range");
  }
  throw domain_error(
      "refute_two_partition: scan exhausted below " + search_bound.str() +
      " without a verified witness; raise the bound");
}

RefutationWitness refute_two_partition(const PartitionSpec& p,
                                       const Rat& alpha, const Rat& beta,
                                       const Rat& eps,
                                       const Int& search_bound) {
  if (p.parts.size() != 2) {
    throw domain_error(
        "refute_two_partition: partition must have exactly 2 parts");
  }
  const SetSpec& a = p.parts[0];
  const SetSpec& b = p.parts[1];
  return refute_two_partition(
      [&a](const Int& n) { return contains(a, n); },
      [&b](const Int& n) { return contains(b, n); }, alpha, beta, eps,
      search_bound);
}

}  // namespace qlab
