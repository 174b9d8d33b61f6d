#include "qlab/gems.hpp"

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qlab/density.hpp"
#include "qlab/partition.hpp"
#include "qlab/progression.hpp"
#include "qlab/specparse.hpp"

namespace qlab {

namespace {

NamedSpec named(SetSpec spec) {
  std::string name = render_spec(spec);
  return {std::move(name), std::move(spec)};
}

Int ipow(Int base, int e) {
  Int r = 1;
  while (e-- > 0) r *= base;
  return r;
}

// Large pure powers print as "2^389" rather than a wall of digits.
std::string power_name(const Int& x) {
  if (x < 1000000) return x.str();
  for (int base : {2, 3}) {
    Int v = x;
    long e = 0;
    while (v % base == 0) {
      v /= base;
      ++e;
    }
    if (v == 1) return std::to_string(base) + "^" + std::to_string(e);
  }
  return x.str();
}

}  // namespace

const std::vector<NamedSpec>& builtin_specs() {
  static const std::vector<NamedSpec> specs = [] {
    std::vector<NamedSpec> v;
    auto add = [&](SetSpec s) { v.push_back(named(std::move(s))); };
    add(make_interval_union(2, 2));
    add(make_interval_union(2, 3));
    add(make_interval_union(2, 4));
    add(make_interval_union(2, 5));
    add(make_interval_union(2, 10));
    add(make_interval_union(3, 7));
    add(make_interval_union(Rat(3, 2), 2));
    add(make_interval_union(Rat(5, 4), Rat(13, 8)));
    add(make_interval_union(5, 41));
    add(make_interval_union(Rat(50, 49), Rat(2501, 2401)));
    add(make_leading_digit(10, {1}));
    add(make_leading_digit(5, {1}));
    add(make_leading_digit(5, {2}));
    add(make_leading_digit(5, {3, 4}));
    add(make_leading_digit(10, {3, 7}));
    add(make_geometric_powers(2, 1));
    add(make_geometric_powers(2, 2));
    add(make_geometric_powers(3, 2));
    add(make_geometric_powers(10, 1));
    add(make_factorial_blocks(FactorialPart::A));
    add(make_factorial_blocks(FactorialPart::B));
    add(make_union(make_geometric_powers(2, 2), make_geometric_powers(3, 2)));
    add(make_explicit({1, 2}));
    add(make_explicit({4, 8, 12}));
    add(make_explicit({5, 6, 7, 9}));
    return v;
  }();
  return specs;
}

std::vector<CertifiedSpec> builtin_analytic_certificates() {
  std::vector<CertifiedSpec> out;
  for (const auto& ns : builtin_specs()) {
    if (auto fam = block_family_of(ns.spec)) {
      Rat ratio = fam->d / fam->c;
      if (ratio * ratio < fam->b) {
        Rat dlow = block_lower_density(*fam);
        Rat dhigh = block_upper_density(*fam);
        for (GapCertificate& cert : certified_gaps(ns.spec, 0, 2)) {
          out.push_back({ns.name, ns.spec, std::move(cert), dlow, dhigh});
        }
      }
    } else if (const auto* gp = std::get_if<GeometricPowers>(&ns.spec.node)) {
      for (long ell = 0; ell <= 2; ++ell) {
        out.push_back({ns.name, ns.spec, powers_gap_certificate(gp->base, ell),
                       Rat(0), Rat(0)});
      }
    }
  }
  return out;
}

ApproxResult approximate_power_pair_escalating(const Rat& xi, const Rat& eps,
                                               Int exp_bound,
                                               const Int& exp_bound_cap) {
  for (;;) {
    try {
      return approximate_power_pair(xi, eps, exp_bound);
    } catch (const domain_error& e) {
      if (std::string(e.what()).find("bound exhausted") == std::string::npos) {
        throw;
      }
      if (exp_bound >= exp_bound_cap) throw;
      exp_bound *= 2;
      if (exp_bound > exp_bound_cap) exp_bound = exp_bound_cap;
    }
  }
}

namespace {

GemReport gem_one() {
  GemReport rep{1, "the a^2 threshold for doubling blocks", {}, {}};
  rep.notes.push_back(
      "Sets are unions of blocks [b^k, 2*b^k). Quotients of elements drawn "
      "from blocks j and k cluster in bands around b^(j-k); consecutive "
      "bands overlap exactly when b <= 4, so the quotient set is dense in "
      "[0, oo) iff b <= 4.");
  rep.notes.push_back(
      "Scan legs are finite evidence: at cutoff b^8, any genuine "
      "quotient-free interval of width >= 4/b^6 inside [1/b, b] would "
      "survive truncation and be reported.");
  for (int b = 2; b <= 4; ++b) {
    SetSpec spec = make_interval_union(2, b);
    Rat width = Rat(4) / ipow(b, 6);
    auto gaps = gap_scan(spec, ipow(b, 8), Rat(1, b), Rat(b), width);
    rep.checks.push_back(
        {"b = " + std::to_string(b) + ": no empirical gap", gaps.empty(),
         "cutoff " + ipow(b, 8).str() + ", window [1/" + std::to_string(b) +
             ", " + std::to_string(b) + "], min width " + rat_to_string(width) +
             (gaps.empty()
                  ? "; none found"
                  : "; found " + std::to_string(gaps.size()))});
  }
  for (int b = 5; b <= 9; ++b) {
    SetSpec spec = make_interval_union(2, b);
    bool ok = true;
    for (auto& cert : certified_gaps(spec, 0, 2)) {
      ok = ok && verify_gap(spec, cert, Int(100000));
    }
    rep.checks.push_back(
        {"b = " + std::to_string(b) + ": certified gaps", ok,
         "bands [2*" + std::to_string(b) + "^l, " + std::to_string(b) +
             "^(l+1)/2], l = 0..2, each verified to 100000"});
  }
  return rep;
}

GemReport gem_two() {
  GemReport rep{2, "prescribed lower density with quotient gaps", {}, {}};
  rep.notes.push_back(
      "The half threshold (lower density >= 1/2 forces quotients dense in "
      "[0, oo)) is a proven theorem, not a computation; the checks below "
      "only exercise the constructions showing the threshold is sharp.");
  const Rat deltas[] = {Rat(0), Rat(1, 10), Rat(1, 4), Rat(2, 5),
                        Rat(49, 100)};
  for (const Rat& delta : deltas) {
    SetSpec spec = build_delta_family(delta);
    std::string name = render_spec(spec);
    if (delta == 0) {
      GapCertificate cert = powers_gap_certificate(2, 1);
      bool ok = verify_gap(spec, cert, Int(10000));
      rep.checks.push_back({"delta = 0", ok,
                            name + "; lower density 0, gap [" +
                                rat_to_string(cert.lo) + ", " +
                                rat_to_string(cert.hi) + "] verified to 10^4"});
      continue;
    }
    const auto& iu = std::get<IntervalUnion>(spec.node);
    bool ok = closed_form_lower_density(spec) == delta && iu.a * iu.a < iu.b;
    GapCertificate cert = certified_gaps(spec, 0, 0).front();
    ok = ok && verify_gap(spec, cert, Int(10000));
    rep.checks.push_back(
        {"delta = " + rat_to_string(delta), ok,
         name + "; lower density exactly " + rat_to_string(delta) +
             ", a^2 < b, gap [" + rat_to_string(cert.lo) + ", " +
             rat_to_string(cert.hi) + "] verified to 10^4"});
  }

  bool rejected = false;
  std::string msg;
  try {
    build_delta_family(Rat(1, 2));
  } catch (const domain_error& e) {
    rejected = true;
    msg = e.what();
  }
  rep.checks.push_back({"delta = 1/2 refused", rejected, msg});

  auto certs = builtin_analytic_certificates();
  bool all_ok = true;
  std::string bad;
  for (const auto& cs : certs) {
    GapCertificate unit = normalize_gap_to_unit(cs.cert);
    const Rat& al = unit.lo;
    const Rat& be = unit.hi;
    Rat ratio = al / be;
    Rat spread = cs.upper_density <= 1 - cs.upper_density
                     ? cs.upper_density
                     : 1 - cs.upper_density;
    bool ok = (1 + ratio) * cs.lower_density <= ratio &&
              cs.lower_density <= ratio * spread &&
              cs.upper_density <= 1 - (be - al);
    if (!ok && bad.empty()) {
      bad = cs.name + ", band " + std::to_string(cs.cert.ell);
    }
    all_ok = all_ok && ok;
  }
  rep.checks.push_back(
      {"density bounds vs gap positions", all_ok,
       all_ok ? std::to_string(certs.size()) +
                    " built-in certificates, 3 exact inequalities each"
              : "violated by " + bad});
  return rep;
}

GemReport gem_three() {
  GemReport rep{3, "partitions cannot avoid quotient windows", {}, {}};
  rep.notes.push_back(
      "However N is split into two or three parts, some part's quotients "
      "meet any fixed window (alpha - eps, alpha + eps) with alpha > 1. The "
      "refutation checks run the constructive two-part argument and "
      "re-verify each witness exactly.");

  PartitionSpec three = build_three_way();
  rep.checks.push_back({"three-way split tiles [1, 10^6]",
                        verify_partition(three, Int(1000000)),
                        "parts: leading base-5 digit 1 | 2 | 3 or 4"});

  bool parts_ok = true;
  for (const SetSpec& part : three.parts) {
    for (auto& cert : certified_gaps(part, 0, 1)) {
      parts_ok = parts_ok && verify_gap(part, cert, Int(100000));
    }
  }
  rep.checks.push_back({"each part keeps its own certified gaps", parts_ok,
                        "bands l = 0..1 per part, verified to 100000; no "
                        "part is quotient-dense on its own"});

  PartitionSpec fact = build_factorial();
  rep.checks.push_back({"factorial split tiles [1, 10^6]",
                        verify_partition(fact, Int(1000000)),
                        "alternating blocks of length k!"});

  auto describe = [](const RefutationWitness& w) {
    return "part " + std::to_string(w.part_index) + " realizes " +
           w.numerator.str() + "/" + w.denominator.str() + " = " +
           rat_to_string(w.quotient) + " inside (" +
           rat_to_string(w.center - w.epsilon) + ", " +
           rat_to_string(w.center + w.epsilon) + ")";
  };
  auto refute_check = [&](const std::string& label, const PartitionSpec& p,
                          const Rat& alpha, const Rat& beta, const Rat& eps) {
    try {
      RefutationWitness w =
          refute_two_partition(p, alpha, beta, eps, Int(1000000));
      rep.checks.push_back({label, true, describe(w)});
    } catch (const domain_error& e) {
      rep.checks.push_back({label, false, e.what()});
    }
  };
  refute_check("factorial split refuted", fact, Rat(2), Rat(3, 2), Rat(1, 20));

  PartitionSpec merged = make_custom_partition(
      {three.parts[0], make_union(three.parts[1], three.parts[2])});
  refute_check("three-way split (first part vs rest) refuted", merged, Rat(2),
               Rat(2), Rat(1, 10));
  return rep;
}

GemReport gem_four() {
  GemReport rep{4, "the power union: progression-free, quotient-dense", {}, {}};
  rep.notes.push_back(
      "U = {2^j : j >= 2} union {3^k : k >= 2} contains no 3-term arithmetic "
      "progression, yet its quotient set is dense in [0, oo). Long runs of "
      "consecutive integers, by contrast, force progressions while keeping "
      "quotients confined.");
  SetSpec u =
      make_union(make_geometric_powers(2, 2), make_geometric_powers(3, 2));

  ThreeApReport ap = verify_no_3ap_proof_cases(Int(1000000));
  rep.checks.push_back(
      {"no 3-term progression to 10^6", ap.aps_found == 0,
       ap.member_count.str() + " members, " + ap.pairs_checked.str() +
           " pairs checked (" + ap.power2_led_eliminated.str() +
           " led by a 2-power, " + ap.power3_led_eliminated.str() +
           " by a 3-power), progressions found: " + ap.aps_found.str()});

  auto found = find_progression(u, Int(1000000), Int(3));
  rep.checks.push_back({"direct progression search agrees", !found.has_value(),
                        "first-terms scan for length 3 up to 10^6: none"});

  DensityVerdict v = classify_fractional_density(u);
  rep.checks.push_back(
      {"quotient set is dense", v.verdict == Density::Dense, v.reason});

  auto run = longest_consecutive_run(make_interval_union(2, 10), Int(10000));
  rep.checks.push_back(
      {"contrast: a block union has runs of length 1000",
       run.first == 1000 && run.second == 1000,
       "longest run of consecutive members up to 10^4 starts at " +
           run.first.str() + " and has length " + run.second.str()});

  const Rat targets[] = {Rat(1), Rat(4), Rat(5), Rat(21, 10), Rat(1, 10)};
  bool ok = true;
  std::string sample;
  for (const Rat& xi : targets) {
    ApproxResult r =
        approximate_power_pair_escalating(xi, Rat(1, 1000), 64, 4096);
    Rat err = r.value >= xi ? r.value - xi : xi - r.value;
    bool good = contains(u, r.numerator) && contains(u, r.denominator) &&
                r.numerator != r.denominator && r.error < Rat(1, 1000) &&
                err == r.error;
    ok = ok && good;
    if (xi == Rat(21, 10)) {
      sample = "e.g. " + rat_to_string(xi) + " ~ " + power_name(r.numerator) +
               "/" + power_name(r.denominator) + ", error " +
               rat_to_decimal(r.error, 3);
    }
  }
  rep.checks.push_back(
      {"power quotients approximate 5 targets to within 1/1000", ok, sample});
  return rep;
}

}  // namespace

GemReport run_gem(int which) {
  switch (which) {
    case 1:
      return gem_one();
    case 2:
      return gem_two();
    case 3:
      return gem_three();
    case 4:
      return gem_four();
    default:
      throw domain_error("gem number must be 1, 2, 3, or 4");
  }
}

}  // namespace qlab
