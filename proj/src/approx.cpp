#include "qlab/approx.hpp"

#include <limits>
#include <optional>
#include <utility>

#include "qlab/density.hpp"

namespace qlab {

namespace {

using boost::multiprecision::msb;

// Smallest exponent t with 2^t > x, for x >= 0.
long bits_above(const Int& x) {
  if (x == 0) return 0;
  return static_cast<long>(msb(x)) + 1;
}

Int pow3(long e) {
  Int out = 1;
  for (long i = 0; i < e; ++i) out *= 3;
  return out;
}

}  // namespace

ApproxResult approximate_interval_union(const SetSpec& spec, const Rat& xi,
                                        const Rat& eps) {
  const auto* iu = std::get_if<IntervalUnion>(&spec.node);
  if (!iu) {
    throw domain_error(
        "interval-union approximation: spec is not an interval union");
  }
  if (xi <= 0) {
    throw domain_error("interval-union approximation: target must be positive");
  }
  if (eps <= 0) {
    throw domain_error(
        "interval-union approximation: epsilon must be positive");
  }
  if (iu->b > iu->a * iu->a) {
    throw domain_error(
        "interval-union approximation: b > a^2, so the quotient set has gaps "
        "and cannot approximate arbitrary targets");
  }
  if (denominator(iu->b) != 1) {
    throw domain_error(
        "interval-union approximation: b must be an integer so that powers "
        "of b are set elements");
  }
  const Rat a = iu->a;
  const Int B = numerator(iu->b);

  // Scale so that b^j <= xi < b^(j+1).
  long j = 0;
  Rat bj = 1;
  if (xi >= 1) {
    while (bj * B <= xi) {
      bj *= B;
      ++j;
    }
  } else {
    while (xi < bj) {
      bj /= B;
      --j;
    }
  }

  Int num, den;
  if (xi < a * bj) {
    // xi in [b^j, a*b^j): floor(b^k*xi) lies in the same block scaled by b^k,
    // and the truncation error is below 1/b^k < eps.
    long k = 0;
    Int bk = 1;
    while (j + k < 0 || bk * eps <= 1) {
      bk *= B;
      ++k;
    }
    num = floor_rat(bk * xi);
    den = bk;
  } else {
    // xi in [b^j/a, b^j) for the next j: put the power of b on top and round
    // the denominator up, which keeps the value at or below xi.
    ++j;
    bj *= B;
    if (xi * a == bj) {
      // Left endpoint b^j/a. Reached only when b = a^2 (otherwise the scale
      // scan classifies xi as direct), which forces a to be an integer; the
      // numerator a*b^(j+k-1) - 1 is the top element of its block.
      Int ai = numerator(a);
      long k = 0;
      Int bk = 1;
      while (j + k - 1 < 0 || bk * eps <= 1) {
        bk *= B;
        ++k;
      }
      Rat block = bj * bk / B;  // b^(j+k-1), integral since j+k-1 >= 0
      num = ai * numerator(block) - 1;
      den = bk;
    } else {
      long k = 0;
      Int bk = 1;
      while (j + k < 0 || bk * eps <= xi) {
        bk *= B;
        ++k;
      }
      Int pnum = numerator(Rat(bj * bk));  // b^(j+k), integral since j+k >= 0
      Int q = ceil_rat(Rat(pnum) / xi);
      // ceil can land exactly on the excluded right endpoint a*b^k of the
      // denominator's block; whenever it leaves the set, rescale. xi sits
      // strictly above b^j/a here, so the gap a*b^k - b^(j+k)/xi grows with k
      // and the loop stops.
      while (!contains(spec, q)) {
        ++k;
        bk *= B;
        pnum *= B;
        q = ceil_rat(Rat(pnum) / xi);
      }
      num = pnum;
      den = q;
    }
  }

  Rat value(num, den);
  return ApproxResult{num,      den, value,
                      xi,       xi - value,
                      ApproxMethod::IntervalUnionConstructive};
}

ApproxResult approximate_power_pair(const Rat& xi, const Rat& eps,
                                    const Int& exp_bound) {
  if (xi <= 0) {
    throw domain_error("power-pair approximation: target must be positive");
  }
  if (eps <= 0) {
    throw domain_error("power-pair approximation: epsilon must be positive");
  }
  const long bound =
      exp_bound > 2000000 ? 2000000 : exp_bound.convert_to<long>();
  if (bound < 2) {
    throw domain_error(
        "power-pair approximation: bound exhausted (no exponent pair <= " +
        exp_bound.str() + "); raise exp_bound and retry");
  }

  const Int u = numerator(xi), v = denominator(xi);
  const Int e1 = numerator(eps), e2 = denominator(eps);
  // n/d qualifies iff d*CL < n*W < d*CU (both strict).
  const Int W = v * e2;
  const Int CL = u * e2 - e1 * v;
  const Int CU = u * e2 + e1 * v;

  // Exponent windows for same-base quotients: base^e within eps of xi.
  constexpr long kNoLo = std::numeric_limits<long>::min() / 4;
  auto same_base_range = [&](long base) {
    Rat up = xi + eps;
    long ehi = 0;
    Rat pw = 1;
    if (up > 1) {
      while (pw * base < up) {
        pw *= base;
        ++ehi;
      }
    } else {
      while (pw >= up) {
        pw /= base;
        --ehi;
      }
    }
    long elo = kNoLo;
    Rat low = xi - eps;
    if (low > 0) {
      elo = 0;
      pw = 1;
      if (pw <= low) {
        while (pw <= low) {
          pw *= base;
          ++elo;
        }
      } else {
        while (pw / base > low) {
          pw /= base;
          --elo;
        }
      }
    }
    return std::pair<long, long>(elo, ehi);
  };
  const auto [elo2, ehi2] = same_base_range(2);
  const auto [elo3, ehi3] = same_base_range(3);

  struct Candidate {
    long exp;
    int form;
    Int num;
    Int den;
  };
  auto consider = [](std::optional<Candidate>& best, long exp, int form,
                     Int num, Int den) {
    if (best &&
        (best->exp < exp || (best->exp == exp && best->form < form))) {
      return;
    }
    best = Candidate{exp, form, std::move(num), std::move(den)};
  };

  Int p2 = 4, p3 = 9;  // 2^M, 3^M
  // Running thresholds for the two forms whose free exponent is on base 3:
  // the products they compare against only grow with M, so the smallest
  // admissible exponent never moves backwards.
  long a3 = 2;
  Int p3a = 9;  // 3^a3; a3 = smallest a >= 2 with 3^a * W > 2^M * CL
  long b3 = 2;
  Int p3b = 9;  // 3^b3; b3 = smallest b >= 2 with 3^b * CU > 2^M * W

  for (long M = 2; M <= bound; ++M) {
    if (M > 2) {
      p2 <<= 1;
      p3 *= 3;
    }
    while (p3a * W <= p2 * CL) {
      p3a *= 3;
      ++a3;
    }
    while (p3b * CU <= p2 * W) {
      p3b *= 3;
      ++b3;
    }

    // Pairs (a, M) with a < M; value forms 2^a/2^M, 3^a/3^M, 2^a/3^M,
    // 3^a/2^M. For each form only its smallest qualifying a matters.
    std::optional<Candidate> best;
    if (M >= 3) {
      long e_lo = std::max(elo2, 2 - M);
      long e_hi = std::min(ehi2, -1L);
      if (e_lo <= e_hi) {
        consider(best, M + e_lo, 0, Int(1) << (M + e_lo), p2);
      }
      e_lo = std::max(elo3, 2 - M);
      e_hi = std::min(ehi3, -1L);
      if (e_lo <= e_hi) consider(best, M + e_lo, 1, pow3(M + e_lo), p3);

      long acand = 2;
      if (CL > 0) {
        acand = std::max(bits_above(p3 * CL / W), 2L);
      }
      if (acand <= M - 1) {
        Int num = Int(1) << acand;
        if (num * W < p3 * CU) consider(best, acand, 2, std::move(num), p3);
      }
      if (a3 <= M - 1 && p3a * W < p2 * CU) consider(best, a3, 3, p3a, p2);
    }

    // Pairs (M, b) with b <= M come after every (a, M) pair; skip them when
    // one of those already qualified.
    if (!best) {
      long e_hi = std::min(ehi2, M - 2);
      long e_lo = std::max(elo2, 1L);
      if (e_lo <= e_hi) consider(best, M - e_hi, 0, p2, Int(1) << (M - e_hi));
      e_hi = std::min(ehi3, M - 2);
      e_lo = std::max(elo3, 1L);
      if (e_lo <= e_hi) consider(best, M - e_hi, 1, p3, pow3(M - e_hi));

      if (b3 <= M && p2 * W > p3b * CL) consider(best, b3, 2, p2, p3b);

      long bcand = std::max(bits_above(p3 * W / CU), 2L);
      if (bcand <= M) {
        Int den = Int(1) << bcand;
        if (p3 * W > den * CL) consider(best, bcand, 3, p3, std::move(den));
      }
    }

    if (best) {
      Rat value(best->num, best->den);
      Rat err = value > xi ? Rat(value - xi) : Rat(xi - value);
      return ApproxResult{std::move(best->num),
                          std::move(best->den),
                          std::move(value),
                          xi,
                          std::move(err),
                          ApproxMethod::BoundedExponentSearch};
    }
  }
  throw domain_error(
      "power-pair approximation: bound exhausted (no exponent pair <= " +
      exp_bound.str() + " gets within epsilon); raise exp_bound and retry");
}

DensityVerdict classify_fractional_density(const SetSpec& spec) {
  if (const auto* un = std::get_if<UnionSpec>(&spec.node)) {
    const auto* l = std::get_if<GeometricPowers>(&un->left->node);
    const auto* r = std::get_if<GeometricPowers>(&un->right->node);
    if (l && r && ((l->base == 2 && r->base == 3) ||
                   (l->base == 3 && r->base == 2))) {
      return {Density::Dense,
              "quotients 3^k/2^j land within any tolerance of any positive "
              "real: the fractional parts of k*log2(3) fill the unit "
              "interval densely",
              std::nullopt};
    }
    return {Density::Unknown, "no classification rule for this union",
            std::nullopt};
  }
  if (const auto* g = std::get_if<GeometricPowers>(&spec.node)) {
    return {Density::NotDense,
            "every quotient of two powers of " + g->base.str() +
                " is itself an integer power of " + g->base.str(),
            powers_gap_certificate(g->base, 1)};
  }
  if (const auto* ex = std::get_if<Explicit>(&spec.node)) {
    GapCertificate cert;
    Rat top(ex->elements.back(), ex->elements.front());
    cert.lo = top + 1;
    cert.hi = top + 2;
    cert.kind = GapKind::Analytic;
    cert.family = "above the largest quotient of a finite set";
    cert.ell = 0;
    return {Density::NotDense, "a finite set has a finite quotient set",
            std::move(cert)};
  }
  if (auto bf = block_family_of(spec)) {
    Rat ratio = bf->d / bf->c;
    if (ratio * ratio < bf->b) {
      return {Density::NotDense,
              "(d/c)^2 < b, so an interval between consecutive quotient "
              "bands contains no quotient at all",
              certified_gaps(spec, 1, 1).front()};
    }
    if (bf->c == 1) {
      return {Density::Dense,
              "b <= a^2, so consecutive quotient bands overlap and every "
              "positive real can be approximated by a truncation argument",
              std::nullopt};
    }
    return {Density::Unknown,
            "adjacent quotient bands overlap, which rules out the band-gap "
            "certificate but does not by itself prove density",
            std::nullopt};
  }
  return {Density::Unknown, "no classification rule for this set",
          std::nullopt};
}

SetSpec build_delta_family(const Rat& delta) {
  if (delta < 0 || delta >= Rat(1, 2)) {
    throw domain_error("delta family: need 0 <= delta < 1/2");
  }
  if (delta == 0) return make_geometric_powers(2, 1);
  Rat e = Rat(1) / delta - 2;
  Rat a = 1 + e / 2;
  Rat b = 1 + e + e * e / 2;
  return make_interval_union(a, b);
}

}  // namespace qlab
