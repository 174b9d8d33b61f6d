#include "qlab/cli.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qlab/approx.hpp"
#include "qlab/density.hpp"
#include "qlab/gems.hpp"
#include "qlab/numeric.hpp"
#include "qlab/partition.hpp"
#include "qlab/progression.hpp"
#include "qlab/quotient.hpp"
#include "qlab/setspec.hpp"
#include "qlab/specparse.hpp"

namespace qlab {

namespace {

using nlohmann::json;

// Exact values travel as "p/q" strings; *_decimal siblings are rounded
// renderings for human readers and carry no authority.
json jrat(const Rat& x) { return rat_to_string(x); }

json jint(const Int& x) {
  if (x >= (std::numeric_limits<long long>::min)() &&
      x <= (std::numeric_limits<long long>::max)()) {
    return x.convert_to<long long>();
  }
  return x.str();
}

void put_rat(json& j, const std::string& key, const Rat& x) {
  j[key] = jrat(x);
  j[key + "_decimal"] = rat_to_decimal(x);
}

Rat flag_rat(const std::string& text, const char* flag) {
  try {
    return rat_from_string(text);
  } catch (const domain_error& e) {
    throw CLI::ValidationError(flag, e.what());
  }
}

std::pair<Rat, Rat> flag_window(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) {
    throw CLI::ValidationError("--window", "expected LO,HI");
  }
  return {flag_rat(text.substr(0, comma), "--window"),
          flag_rat(text.substr(comma + 1), "--window")};
}

bool is_power_pair_set(const SetSpec& s) {
  const auto* u = std::get_if<UnionSpec>(&s.node);
  if (u == nullptr) return false;
  const auto* l = std::get_if<GeometricPowers>(&u->left->node);
  const auto* r = std::get_if<GeometricPowers>(&u->right->node);
  if (l == nullptr || r == nullptr) return false;
  if (l->min_exp != 2 || r->min_exp != 2) return false;
  return (l->base == 2 && r->base == 3) || (l->base == 3 && r->base == 2);
}

const char* verdict_name(Density d) {
  switch (d) {
    case Density::Dense:
      return "dense";
    case Density::NotDense:
      return "not-dense";
    default:
      return "unknown";
  }
}

void print_gem(std::ostream& os, const GemReport& rep) {
  os << "gem " << rep.which << ": " << rep.title << "\n";
  for (const auto& note : rep.notes) os << "\n" << note << "\n";
  os << "\n";
  int passed = 0;
  for (const auto& c : rep.checks) {
    os << (c.pass ? "PASS  " : "FAIL  ") << c.label << "\n";
    if (!c.detail.empty()) os << "      " << c.detail << "\n";
    if (c.pass) ++passed;
  }
  os << "\n"
     << passed << "/" << rep.checks.size() << " checks passed\n";
}

}  // namespace

int run_subcommand(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
  CLI::App app{"laboratory for quotient sets {a/a' : a, a' in A} of subsets "
               "of the positive integers"};
  app.require_subcommand(1);

  std::string set_text;
  std::string window_text;
  std::string min_width_text = "1/100";
  std::string target_text;
  std::string eps_text;
  std::string format = "json";
  std::string out_path;
  std::string part_name;
  std::string alpha_text = "2";
  std::string beta_text = "2";
  long long upto = 0;
  long long cutoff = 0;
  long long length = 3;
  long long exp_bound = 64;
  int gem_number = 0;
  int rc = 0;

  auto add_set = [&](CLI::App* sub) {
    sub->add_option("--set", set_text, "set description, e.g. "
                    "\"interval-union(a=2, b=5)\"")
        ->required();
  };
  auto add_io = [&](CLI::App* sub, bool csv_allowed) {
    sub->add_option("--format", format,
                    csv_allowed ? "output format" : "output format (json)")
        ->check(CLI::IsMember(csv_allowed
                                  ? std::vector<std::string>{"json", "csv"}
                                  : std::vector<std::string>{"json"}))
        ->capture_default_str();
    sub->add_option("--out", out_path, "write the report here instead of stdout");
  };
  auto resolve_out = [&](auto&& writer) {
    if (out_path.empty()) {
      writer(out);
      return;
    }
    std::ofstream file(out_path);
    if (!file) {
      throw domain_error("cannot open output file '" + out_path + "'");
    }
    writer(file);
  };
  auto emit_json = [&](const json& j) {
    resolve_out([&](std::ostream& os) { os << j.dump(2) << "\n"; });
  };

  // gen: list members
  {
    CLI::App* sub = app.add_subcommand("gen", "list the members of a set");
    add_set(sub);
    sub->add_option("--upto", upto, "list members <= this bound")
        ->required()
        ->check(CLI::PositiveNumber);
    add_io(sub, false);
    sub->callback([&] {
      SetSpec spec = parse_spec(set_text);
      std::vector<Int> elems = enumerate_upto(spec, Int(upto));
      json j;
      j["spec"] = render_spec(spec);
      j["upto"] = upto;
      j["count"] = static_cast<long long>(elems.size());
      json arr = json::array();
      for (const Int& e : elems) arr.push_back(jint(e));
      j["elements"] = std::move(arr);
      emit_json(j);
    });
  }

  // density: counting profile and liminf/limsup evidence
  {
    CLI::App* sub = app.add_subcommand(
        "density", "sample |A(x)|/x where it is extremal");
    add_set(sub);
    sub->add_option("--upto", upto, "sample up to this bound")
        ->required()
        ->check(CLI::PositiveNumber);
    add_io(sub, true);
    sub->callback([&] {
      SetSpec spec = parse_spec(set_text);
      int depth = 0;
      if (const auto* iu = std::get_if<IntervalUnion>(&spec.node)) {
        Rat scale = iu->b;
        while (ceil_rat(iu->a * scale) - 1 <= upto && depth < 1000) {
          ++depth;
          scale *= iu->b;
        }
      } else {
        Int x = 2;
        while (x <= upto && depth < 1000) {
          ++depth;
          x *= 2;
        }
      }
      if (depth < 2) {
        throw CLI::ValidationError(
            "--upto", "too small to fit this set's first two sample scales");
      }
      DensityEstimate est = estimate_lower_density(spec, depth);
      if (format == "csv") {
        std::vector<ProfilePoint> points = est.liminf_points;
        points.insert(points.end(), est.limsup_points.begin(),
                      est.limsup_points.end());
        std::sort(points.begin(), points.end(),
                  [](const ProfilePoint& p, const ProfilePoint& q) {
                    return p.x < q.x;
                  });
        points.erase(std::unique(points.begin(), points.end()), points.end());
        resolve_out([&](std::ostream& os) { write_profile_csv(os, points); });
        return;
      }
      json j;
      j["spec"] = render_spec(spec);
      j["upto"] = upto;
      j["depth"] = depth;
      put_rat(j, "liminf_bound", est.liminf_bound);
      put_rat(j, "limsup_bound", est.limsup_bound);
      auto points_json = [&](const std::vector<ProfilePoint>& points) {
        json arr = json::array();
        for (const ProfilePoint& p : points) {
          json e;
          e["x"] = jint(p.x);
          e["count"] = jint(p.count);
          put_rat(e, "ratio", p.ratio);
          arr.push_back(std::move(e));
        }
        return arr;
      };
      j["liminf_points"] = points_json(est.liminf_points);
      j["limsup_points"] = points_json(est.limsup_points);
      emit_json(j);
    });
  }

  // gaps: empirical quotient-free intervals
  {
    CLI::App* sub = app.add_subcommand(
        "gaps", "scan a window for quotient-free intervals");
    add_set(sub);
    sub->add_option("--cutoff", cutoff, "use elements <= this bound")
        ->required()
        ->check(CLI::PositiveNumber);
    sub->add_option("--window", window_text, "scan window LO,HI")->required();
    sub->add_option("--min-width", min_width_text,
                    "report gaps at least this wide")
        ->capture_default_str();
    add_io(sub, false);
    sub->callback([&] {
      SetSpec spec = parse_spec(set_text);
      auto [lo, hi] = flag_window(window_text);
      Rat min_width = flag_rat(min_width_text, "--min-width");
      auto gaps = gap_scan(spec, Int(cutoff), lo, hi, min_width);
      json j;
      j["spec"] = render_spec(spec);
      j["cutoff"] = cutoff;
      j["window"] = json::array({jrat(lo), jrat(hi)});
      j["window_decimal"] =
          json::array({rat_to_decimal(lo), rat_to_decimal(hi)});
      put_rat(j, "min_width", min_width);
      json arr = json::array();
      for (const GapCertificate& g : gaps) {
        json e;
        put_rat(e, "lo", g.lo);
        put_rat(e, "hi", g.hi);
        e["kind"] = "empirical";
        arr.push_back(std::move(e));
      }
      j["gaps"] = std::move(arr);
      emit_json(j);
    });
  }

  // classify: dense / not-dense / unknown with certificate
  {
    CLI::App* sub = app.add_subcommand(
        "classify", "decide whether the quotient set is dense in [0, oo)");
    add_set(sub);
    add_io(sub, false);
    sub->callback([&] {
      SetSpec spec = parse_spec(set_text);
      DensityVerdict v = classify_fractional_density(spec);
      json j;
      j["spec"] = render_spec(spec);
      j["verdict"] = verdict_name(v.verdict);
      j["reason"] = v.reason;
      if (v.certificate) {
        json c;
        put_rat(c, "lo", v.certificate->lo);
        put_rat(c, "hi", v.certificate->hi);
        c["kind"] = "analytic";
        c["family"] = v.certificate->family;
        c["ell"] = v.certificate->ell;
        j["certificate"] = std::move(c);
      } else {
        j["certificate"] = nullptr;
      }
      emit_json(j);
    });
  }

  // approx: rational approximation by a quotient
  {
    CLI::App* sub = app.add_subcommand(
        "approx", "approximate a target by a quotient of set elements");
    add_set(sub);
    sub->add_option("--target", target_text, "value to approximate")
        ->required();
    sub->add_option("--eps", eps_text, "required accuracy")->required();
    sub->add_option("--exp-bound", exp_bound,
                    "exponent bound for power-pair search")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_io(sub, false);
    sub->callback([&] {
      SetSpec spec = parse_spec(set_text);
      Rat xi = flag_rat(target_text, "--target");
      Rat eps = flag_rat(eps_text, "--eps");
      ApproxResult r;
      if (std::holds_alternative<IntervalUnion>(spec.node)) {
        r = approximate_interval_union(spec, xi, eps);
      } else if (is_power_pair_set(spec)) {
        r = approximate_power_pair(xi, eps, Int(exp_bound));
      } else {
        throw domain_error(
            "approx supports interval-union sets and union(powers(base=2, "
            "min-exp=2); powers(base=3, min-exp=2))");
      }
      json j;
      j["spec"] = render_spec(spec);
      put_rat(j, "target", r.target);
      j["epsilon"] = jrat(eps);
      j["witness"] = {{"num", r.numerator.str()}, {"den", r.denominator.str()}};
      put_rat(j, "value", r.value);
      put_rat(j, "error", r.error);
      j["method"] = r.method == ApproxMethod::IntervalUnionConstructive
                        ? "interval-union-constructive"
                        : "bounded-exponent-search";
      emit_json(j);
    });
  }

  // ap: arithmetic progressions among members
  {
    CLI::App* sub = app.add_subcommand(
        "ap", "search members for an arithmetic progression");
    add_set(sub);
    sub->add_option("--upto", upto, "consider members <= this bound")
        ->required()
        ->check(CLI::PositiveNumber);
    sub->add_option("--length", length, "progression length to search for")
        ->capture_default_str();
    add_io(sub, false);
    sub->callback([&] {
      SetSpec spec = parse_spec(set_text);
      auto found = find_progression(spec, Int(upto), Int(length));
      json j;
      j["set"] = render_spec(spec);
      j["upto"] = upto;
      j["ap_length_requested"] = length;
      if (found) {
        j["found"] = {{"first", jint(found->first)},
                      {"diff", jint(found->difference)},
                      {"len", jint(found->length)}};
      } else {
        j["found"] = nullptr;
      }
      emit_json(j);
    });
  }

  // partition: tiling check
  {
    CLI::App* sub = app.add_subcommand(
        "partition", "verify that a named split tiles [1, upto]");
    sub->add_option("name", part_name, "three-way | factorial")
        ->required()
        ->check(CLI::IsMember({"three-way", "factorial"}));
    sub->add_option("--upto", upto, "verify the tiling up to this bound")
        ->required()
        ->check(CLI::PositiveNumber);
    add_io(sub, false);
    sub->callback([&] {
      PartitionSpec p =
          part_name == "three-way" ? build_three_way() : build_factorial();
      json j;
      j["name"] = part_name;
      j["upto"] = upto;
      json parts = json::array();
      for (const SetSpec& part : p.parts) parts.push_back(render_spec(part));
      j["parts"] = std::move(parts);
      j["valid"] = verify_partition(p, Int(upto));
      emit_json(j);
    });
  }

  // refute: same-part quotient inside a claimed-free window
  {
    CLI::App* sub = app.add_subcommand(
        "refute",
        "produce a same-part quotient inside the windows a two-part split "
        "claims to avoid");
    sub->add_option("name", part_name, "factorial | three-way-ab")
        ->required()
        ->check(CLI::IsMember({"factorial", "three-way-ab"}));
    sub->add_option("--alpha", alpha_text, "window center for part 0")
        ->capture_default_str();
    sub->add_option("--beta", beta_text, "window center for part 1")
        ->capture_default_str();
    sub->add_option("--eps", eps_text, "window half-width")->required();
    sub->add_option("--upto", upto, "boundary-pair search bound")
        ->required()
        ->check(CLI::PositiveNumber);
    add_io(sub, false);
    sub->callback([&] {
      PartitionSpec p;
      if (part_name == "factorial") {
        p = build_factorial();
      } else {
        PartitionSpec three = build_three_way();
        p = make_custom_partition(
            {three.parts[0], make_union(three.parts[1], three.parts[2])});
      }
      Rat alpha = flag_rat(alpha_text, "--alpha");
      Rat beta = flag_rat(beta_text, "--beta");
      Rat eps = flag_rat(eps_text, "--eps");
      RefutationWitness w =
          refute_two_partition(p, alpha, beta, eps, Int(upto));
      json j;
      j["partition"] = part_name;
      j["alpha"] = jrat(alpha);
      j["beta"] = jrat(beta);
      j["epsilon"] = jrat(eps);
      j["search_bound"] = upto;
      json wit;
      wit["part_index"] = w.part_index;
      wit["num"] = w.numerator.str();
      wit["den"] = w.denominator.str();
      put_rat(wit, "quotient", w.quotient);
      wit["center"] = jrat(w.center);
      j["witness"] = std::move(wit);
      json trace = json::array();
      for (const auto& [step, value] : w.trace) {
        trace.push_back({{"step", step}, {"value", jrat(value)}});
      }
      j["trace"] = std::move(trace);
      emit_json(j);
    });
  }

  // gem: the four showcase reports
  {
    CLI::App* sub = app.add_subcommand("gem", "run one of the four showcase "
                                              "reports");
    sub->add_option("number", gem_number, "which report, 1..4")
        ->required()
        ->check(CLI::Range(1, 4));
    sub->add_option("--out", out_path, "write the report here instead of stdout");
    sub->callback([&] {
      GemReport rep = run_gem(gem_number);
      resolve_out([&](std::ostream& os) { print_gem(os, rep); });
      if (!rep.all_pass()) rc = 1;
    });
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const parse_error& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}

}  // namespace qlab
