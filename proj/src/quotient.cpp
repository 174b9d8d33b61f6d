#include "qlab/quotient.hpp"

#include <algorithm>
#include <optional>

#include "qlab/density.hpp"

namespace qlab {

namespace {

void check_window(const Int& cutoff, const Rat& lo, const Rat& hi) {
  if (cutoff < 1) throw domain_error("quotient window: cutoff must be >= 1");
  if (lo <= 0) throw domain_error("quotient window: lower bound must be positive");
  if (lo >= hi) throw domain_error("quotient window: window empty or inverted");
}

// Unnormalized fraction, d > 0. The gap engine compares millions of these;
// skipping gcd reduction keeps every comparison a single cross-multiply.
struct Frac {
  Int n;
  Int d;
};

int frac_cmp(const Frac& x, const Frac& y) {
  Int lhs = x.n * y.d;
  Int rhs = y.n * x.d;
  if (lhs < rhs) return -1;
  if (lhs > rhs) return 1;
  return 0;
}

Frac frac_add(const Frac& x, const Frac& y) {
  return {x.n * y.d + y.n * x.d, x.d * y.d};
}

Frac frac_sub(const Frac& x, const Frac& y) {
  return {x.n * y.d - y.n * x.d, x.d * y.d};
}

Rat frac_to_rat(const Frac& x) { return Rat(x.n, x.d); }

struct Seg {
  Frac l;
  Frac r;
};

}  // namespace

QuotientWindow quotients_in_window(const SetSpec& spec, const Int& cutoff,
                                   const Rat& lo, const Rat& hi) {
  check_window(cutoff, lo, hi);
  std::vector<Int> elems = enumerate_upto(spec, cutoff);
  std::vector<QuotientHit> hits;
  const Int lon = numerator(lo), lod = denominator(lo);
  const Int hin = numerator(hi), hid = denominator(hi);
  for (const Int& q : elems) {
    // ceil(lo*q) and floor(hi*q)
    Int pmin = (lon * q + lod - 1) / lod;
    Int pmax = hin * q / hid;
    auto it = std::lower_bound(elems.begin(), elems.end(), pmin);
    for (; it != elems.end() && *it <= pmax; ++it) {
      hits.push_back({Rat(*it, q), *it, q});
    }
  }
  // Generation order has ascending denominators, so after a stable sort by
  // value the first entry of each equal-value group carries the smallest
  // denominator witness.
  std::stable_sort(hits.begin(), hits.end(),
                   [](const QuotientHit& x, const QuotientHit& y) {
                     return x.value < y.value;
                   });
  hits.erase(std::unique(hits.begin(), hits.end(),
                         [](const QuotientHit& x, const QuotientHit& y) {
                           return x.value == y.value;
                         }),
             hits.end());
  return QuotientWindow{spec, cutoff, lo, hi, std::move(hits)};
}

std::vector<GapCertificate> gap_scan(const SetSpec& spec, const Int& cutoff,
                                     const Rat& lo, const Rat& hi,
                                     const Rat& min_width) {
  check_window(cutoff, lo, hi);
  if (min_width <= 0) throw domain_error("gap_scan: min_width must be positive");

  const std::vector<Run> runs = runs_upto(spec, cutoff);
  const Frac wlo{numerator(lo), denominator(lo)};
  const Frac whi{numerator(hi), denominator(hi)};
  const Frac mw{numerator(min_width), denominator(min_width)};
  const Int lon = numerator(lo), lod = denominator(lo);
  const Int hin = numerator(hi), hid = denominator(hi);

  // Quotients from one run share a denominator and step by exactly 1/q, so a
  // whole run contributes the segment [p1/q, p2/q]: no reportable gap can sit
  // strictly inside it once 1/q < min_width. Denominators coarser than that
  // are expanded into their individual quotient points instead.
  const Int q_coarse = denominator(min_width) / numerator(min_width);

  std::vector<Seg> segs;
  std::vector<std::optional<Seg>> pending(runs.size());
  size_t first_run = 0;

  auto flush = [&](std::optional<Seg>& p) {
    if (p) {
      segs.push_back(*p);
      p.reset();
    }
  };

  for (const Run& dr : runs) {
    for (Int q = dr.lo; q <= dr.hi; ++q) {
      Int pmin = (lon * q + lod - 1) / lod;  // ceil(lo*q)
      if (pmin < 1) pmin = 1;
      Int pmax = hin * q / hid;  // floor(hi*q)
      while (first_run < runs.size() && runs[first_run].hi < pmin) {
        flush(pending[first_run]);
        ++first_run;
      }
      for (size_t i = first_run; i < runs.size() && runs[i].lo <= pmax; ++i) {
        Int p1 = std::max(runs[i].lo, pmin);
        Int p2 = std::min(runs[i].hi, pmax);
        if (p1 > p2) continue;
        if (q <= q_coarse) {
          for (Int p = p1; p <= p2; ++p) {
            segs.push_back({{p, q}, {p, q}});
          }
          continue;
        }
        Seg cur{{p1, q}, {p2, q}};
        auto& slot = pending[i];
        if (slot) {
          // Merge when the intervals overlap or the space between them is
          // narrower than min_width; that space cannot hold a reportable gap
          // because its ends are realized quotients. A space of exactly
          // min_width is reportable, so it must keep the segments apart.
          bool apart = frac_cmp(cur.l, frac_add(slot->r, mw)) >= 0 ||
                       frac_cmp(slot->l, frac_add(cur.r, mw)) >= 0;
          if (apart) {
            segs.push_back(*slot);
            *slot = cur;
          } else {
            if (frac_cmp(cur.l, slot->l) < 0) slot->l = cur.l;
            if (frac_cmp(cur.r, slot->r) > 0) slot->r = cur.r;
          }
        } else {
          slot = cur;
        }
      }
    }
  }
  for (auto& p : pending) flush(p);

  std::sort(segs.begin(), segs.end(), [](const Seg& x, const Seg& y) {
    int c = frac_cmp(x.l, y.l);
    if (c != 0) return c < 0;
    return frac_cmp(x.r, y.r) < 0;
  });

  std::vector<GapCertificate> gaps;
  auto emit = [&](const Frac& glo, const Frac& ghi) {
    if (frac_cmp(frac_sub(ghi, glo), mw) >= 0) {
      GapCertificate cert;
      cert.lo = frac_to_rat(glo);
      cert.hi = frac_to_rat(ghi);
      cert.kind = GapKind::Empirical;
      cert.cutoff = cutoff;
      gaps.push_back(std::move(cert));
    }
  };

  Frac reach = wlo;
  for (const Seg& s : segs) {
    if (frac_cmp(s.l, reach) > 0) emit(reach, s.l);
    if (frac_cmp(s.r, reach) > 0) reach = s.r;
  }
  if (frac_cmp(whi, reach) > 0) emit(reach, whi);
  return gaps;
}

std::vector<GapCertificate> certified_gaps(const SetSpec& spec, long ell_lo,
                                           long ell_hi) {
  if (ell_lo > ell_hi) throw domain_error("certified_gaps: empty index range");
  auto bf = block_family_of(spec);
  if (!bf) {
    throw domain_error("no analytic certificate: set is not a block family");
  }
  Rat ratio = bf->d / bf->c;
  if (ratio * ratio >= bf->b) {
    throw domain_error(
        "no analytic certificate: consecutive quotient bands overlap");
  }
  std::vector<GapCertificate> out;
  for (long l = ell_lo; l <= ell_hi; ++l) {
    GapCertificate cert;
    cert.lo = ratio * rat_pow(bf->b, l);
    cert.hi = rat_pow(bf->b, l + 1) / ratio;
    cert.kind = GapKind::Analytic;
    cert.family = "between consecutive quotient bands of " +
                  rat_to_string(bf->c) + ":" + rat_to_string(bf->d) +
                  " blocks, base " + rat_to_string(bf->b);
    cert.ell = l;
    out.push_back(std::move(cert));
  }
  return out;
}

bool verify_gap(const SetSpec& spec, const GapCertificate& cert,
                const Int& cutoff) {
  if (cert.lo <= 0 || cert.lo >= cert.hi) {
    throw domain_error("verify_gap: certificate interval empty or inverted");
  }
  if (cutoff < 1) throw domain_error("verify_gap: cutoff must be >= 1");
  const std::vector<Run> runs = runs_upto(spec, cutoff);
  const bool open = cert.kind == GapKind::Empirical;
  const Int lon = numerator(cert.lo), lod = denominator(cert.lo);
  const Int hin = numerator(cert.hi), hid = denominator(cert.hi);

  size_t ptr = 0;
  for (const Run& dr : runs) {
    for (Int q = dr.lo; q <= dr.hi; ++q) {
      Int pmin, pmax;
      if (open) {
        pmin = lon * q / lod + 1;                // floor(lo*q) + 1
        pmax = (hin * q + hid - 1) / hid - 1;    // ceil(hi*q) - 1
      } else {
        pmin = (lon * q + lod - 1) / lod;        // ceil(lo*q)
        pmax = hin * q / hid;                    // floor(hi*q)
      }
      if (pmin < 1) pmin = 1;
      if (pmax > cutoff) pmax = cutoff;
      if (pmin > pmax) continue;
      while (ptr < runs.size() && runs[ptr].hi < pmin) ++ptr;
      if (ptr < runs.size() && runs[ptr].lo <= pmax) return false;
    }
  }
  return true;
}

GapCertificate powers_gap_certificate(const Int& base, long ell) {
  if (base < 2) throw domain_error("powers_gap_certificate: base must be >= 2");
  GapCertificate cert;
  cert.lo = Rat(5, 4) * rat_pow(Rat(base), ell);
  cert.hi = Rat(4, 5) * rat_pow(Rat(base), ell + 1);
  cert.kind = GapKind::Analytic;
  cert.family = "between consecutive powers of " + base.str();
  cert.ell = ell;
  return cert;
}

GapCertificate normalize_gap_to_unit(const GapCertificate& cert) {
  if (cert.lo <= 0) {
    throw domain_error("normalize_gap_to_unit: lower bound must be positive");
  }
  if (cert.hi <= 1) return cert;
  GapCertificate out = cert;
  out.lo = Rat(1) / cert.hi;
  out.hi = Rat(1) / cert.lo;
  return out;
}

}  // namespace qlab
