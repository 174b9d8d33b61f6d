#include "qlab/density.hpp"

#include <algorithm>

namespace qlab {

namespace {

ProfilePoint point_at(const SetSpec& spec, const Int& x) {
  Int c = count_upto(spec, x);
  return ProfilePoint{x, c, Rat(c, x)};
}

}  // namespace

std::vector<ProfilePoint> density_profile(const SetSpec& spec,
                                          const std::vector<Int>& points) {
  if (points.empty()) throw domain_error("density_profile: no points");
  std::vector<ProfilePoint> out;
  out.reserve(points.size());
  for (const Int& x : points) {
    if (x < 1) throw domain_error("density_profile: points must be >= 1");
    out.push_back(point_at(spec, x));
  }
  return out;
}

DensityEstimate estimate_lower_density(const SetSpec& spec, int depth) {
  if (depth < 2) throw domain_error("estimate_lower_density: depth must be >= 2");

  std::vector<Int> lo_xs;
  std::vector<Int> hi_xs;
  if (const auto* iu = std::get_if<IntervalUnion>(&spec.node)) {
    Rat p = iu->b;  // b^k, k from 1
    for (int k = 1; k <= depth; ++k) {
      Int before = ceil_rat(p) - 1;
      if (before >= 1 && (lo_xs.empty() || before != lo_xs.back())) {
        lo_xs.push_back(before);
      }
      Int last = ceil_rat(iu->a * p) - 1;
      if (last >= 1 && (hi_xs.empty() || last != hi_xs.back())) {
        hi_xs.push_back(last);
      }
      p *= iu->b;
    }
  } else {
    Int x = 2;
    for (int k = 1; k <= depth; ++k) {
      lo_xs.push_back(x);
      hi_xs.push_back(x);
      x *= 2;
    }
  }

  DensityEstimate est;
  est.liminf_points = density_profile(spec, lo_xs);
  est.limsup_points = density_profile(spec, hi_xs);
  est.liminf_bound = est.liminf_points.front().ratio;
  for (const auto& pt : est.liminf_points) {
    est.liminf_bound = std::min(est.liminf_bound, pt.ratio);
  }
  est.limsup_bound = est.limsup_points.front().ratio;
  for (const auto& pt : est.limsup_points) {
    est.limsup_bound = std::max(est.limsup_bound, pt.ratio);
  }
  return est;
}

Rat closed_form_lower_density(const SetSpec& spec) {
  const auto* iu = std::get_if<IntervalUnion>(&spec.node);
  if (!iu) {
    throw domain_error("closed_form_lower_density: only interval-union specs have this formula");
  }
  return (iu->a - 1) / (iu->b - 1);
}

Rat closed_form_upper_density(const SetSpec& spec) {
  const auto* iu = std::get_if<IntervalUnion>(&spec.node);
  if (!iu) {
    throw domain_error("closed_form_upper_density: only interval-union specs have this formula");
  }
  return (iu->a - 1) * iu->b / (iu->a * (iu->b - 1));
}

std::optional<BlockFamily> block_family_of(const SetSpec& spec) {
  if (const auto* iu = std::get_if<IntervalUnion>(&spec.node)) {
    return BlockFamily{Rat(1), iu->a, iu->b};
  }
  if (const auto* ld = std::get_if<LeadingDigit>(&spec.node)) {
    for (size_t i = 1; i < ld->digits.size(); ++i) {
      if (ld->digits[i] != ld->digits[i - 1] + 1) return std::nullopt;
    }
    return BlockFamily{Rat(ld->digits.front()), Rat(ld->digits.back() + 1),
                       Rat(ld->base)};
  }
  return std::nullopt;
}

Rat block_lower_density(const BlockFamily& f) {
  return (f.d - f.c) / (f.c * (f.b - 1));
}

Rat block_upper_density(const BlockFamily& f) {
  return (f.d - f.c) * f.b / (f.d * (f.b - 1));
}

std::pair<Rat, Rat> stolz_cesaro_check(int n) {
  if (n < 1) throw domain_error("stolz_cesaro_check: n must be >= 1");
  SetSpec part_a = make_factorial_blocks(FactorialPart::A);

  Int s2nm1 = factorial_sum(2 * n - 1);
  Int s2n = factorial_sum(2 * n);
  Int s2np1 = factorial_sum(2 * n + 1);
  Int s2np2 = factorial_sum(2 * n + 2);

  Rat active = Rat(count_upto(part_a, s2np2) - count_upto(part_a, s2n),
                   s2np2 - s2n);
  Rat quiet = Rat(count_upto(part_a, s2np1) - count_upto(part_a, s2nm1),
                  s2np1 - s2nm1);

  if (active != Rat(1, 2 * n + 3) || quiet != Rat(2 * n + 1, 2 * n + 2)) {
    throw domain_error("stolz_cesaro_check: counts disagree with closed forms");
  }
  return {active, quiet};
}

void write_profile_csv(std::ostream& out, const std::vector<ProfilePoint>& points) {
  out << "x,count,ratio_numerator,ratio_denominator,ratio_decimal\n";
  for (const auto& pt : points) {
    out << pt.x.str() << ',' << pt.count.str() << ','
        << numerator(pt.ratio).str() << ',' << denominator(pt.ratio).str()
        << ',' << rat_to_decimal(pt.ratio) << '\n';
  }
}

}  // namespace qlab
