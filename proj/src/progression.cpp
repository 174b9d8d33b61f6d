#include "qlab/progression.hpp"

#include <algorithm>

namespace qlab {

std::optional<Progression> find_progression(const SetSpec& spec,
                                            const Int& upto,
                                            const Int& length) {
  if (length < 3) throw domain_error("find_progression: length must be >= 3");
  if (upto < length) {
    throw domain_error("find_progression: upto must be >= length");
  }
  const std::vector<Int> members = enumerate_upto(spec, upto);
  auto is_member = [&](const Int& n) {
    return std::binary_search(members.begin(), members.end(), n);
  };
  const Int steps = length - 1;
  for (size_t i = 0; i < members.size(); ++i) {
    const Int& first = members[i];
    for (size_t j = i + 1; j < members.size(); ++j) {
      Int diff = members[j] - first;
      if (first + steps * diff > upto) break;
      bool ok = true;
      for (Int idx = 2; idx <= steps; ++idx) {
        if (!is_member(first + idx * diff)) {
          ok = false;
          break;
        }
      }
      if (ok) return Progression{first, diff, length};
    }
  }
  return std::nullopt;
}

std::pair<Int, Int> longest_consecutive_run(const SetSpec& spec,
                                            const Int& upto) {
  if (upto < 1) {
    throw domain_error("longest_consecutive_run: upto must be >= 1");
  }
  std::pair<Int, Int> best{0, 0};
  for (const Run& r : runs_upto(spec, upto)) {
    Int len = r.hi - r.lo + 1;
    if (len > best.second) best = {r.lo, len};
  }
  if (best.second == 0) {
    throw domain_error("longest_consecutive_run: no members up to bound");
  }
  return best;
}

ThreeApReport verify_no_3ap_proof_cases(const Int& prefix_bound) {
  if (prefix_bound < 16) {
    throw domain_error(
        "verify_no_3ap_proof_cases: bound must be >= 16 so both power "
        "families are inhabited");
  }
  const SetSpec set =
      make_union(make_geometric_powers(2, 2), make_geometric_powers(3, 2));
  const std::vector<Int> members = enumerate_upto(set, prefix_bound);
  auto is_member = [&](const Int& n) {
    return std::binary_search(members.begin(), members.end(), n);
  };
  auto is_power_of_two = [](Int n) {
    while (n % 2 == 0) n /= 2;
    return n == 1;
  };
  ThreeApReport rep{prefix_bound, Int(members.size()), 0, 0, 0, 0};
  for (size_t i = 0; i < members.size(); ++i) {
    for (size_t j = i + 1; j < members.size(); ++j) {
      ++rep.pairs_checked;
      Int z = 2 * members[j] - members[i];
      if (is_member(z)) {
        ++rep.aps_found;
      } else if (is_power_of_two(members[i])) {
        ++rep.power2_led_eliminated;
      } else {
        ++rep.power3_led_eliminated;
      }
    }
  }
  return rep;
}

}  // namespace qlab
