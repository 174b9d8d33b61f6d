#include "qlab/numeric.hpp"

#include <cctype>
#include <sstream>

namespace qlab {

Rat rat_pow(const Rat& base, long exp) {
  if (base <= 0) throw domain_error("rat_pow: base must be positive");
  if (exp == 0) return Rat(1);
  bool invert = exp < 0;
  unsigned long e = invert ? static_cast<unsigned long>(-(exp + 1)) + 1
                           : static_cast<unsigned long>(exp);
  Rat acc(1);
  Rat sq = base;
  while (e > 0) {
    if (e & 1) acc *= sq;
    sq *= sq;
    e >>= 1;
  }
  if (invert) acc = Rat(1) / acc;
  return acc;
}

Int floor_rat(const Rat& x) {
  if (x < 0) throw domain_error("floor_rat: negative argument");
  return numerator(x) / denominator(x);
}

Int ceil_rat(const Rat& x) {
  if (x < 0) throw domain_error("ceil_rat: negative argument");
  Int q = numerator(x) / denominator(x);
  if (q * denominator(x) != numerator(x)) ++q;
  return q;
}

std::string rat_to_string(const Rat& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

std::string rat_to_decimal(const Rat& x, unsigned digits) {
  if (digits == 0) digits = 1;
  if (x == 0) {
    std::string s = "0.";
    s.append(digits, '0');
    return s;
  }
  bool neg = x < 0;
  Int p = numerator(x);
  Int q = denominator(x);
  if (p < 0) p = -p;

  // Decimal exponent e: the value lies in [10^(e-1), 10^e), so the first
  // significant digit sits just left of position e.
  long e = 0;
  while (p >= q) {
    q *= 10;
    ++e;
  }
  while (p * 10 < q) {
    p *= 10;
    --e;
  }
  // Now p/q in [1/10, 1). Extract `digits` digits, then one more for rounding.
  std::string raw;
  Int rem = p;
  for (unsigned i = 0; i < digits + 1; ++i) {
    rem *= 10;
    Int d = rem / q;
    raw.push_back(static_cast<char>('0' + static_cast<int>(d)));
    rem -= d * q;
  }
  int guard = raw.back() - '0';
  raw.pop_back();
  bool round_up = guard > 5 || (guard == 5 && (rem != 0 || ((raw.back() - '0') & 1)));
  if (round_up) {
    int i = static_cast<int>(raw.size()) - 1;
    while (i >= 0) {
      if (raw[static_cast<size_t>(i)] != '9') {
        ++raw[static_cast<size_t>(i)];
        break;
      }
      raw[static_cast<size_t>(i)] = '0';
      --i;
    }
    if (i < 0) {
      raw.insert(raw.begin(), '1');
      raw.pop_back();
      ++e;
    }
  }

  std::string out;
  if (neg) out.push_back('-');
  if (e <= 0) {
    out += "0.";
    out.append(static_cast<size_t>(-e), '0');
    out += raw;
  } else if (static_cast<size_t>(e) >= raw.size()) {
    out += raw;
    out.append(static_cast<size_t>(e) - raw.size(), '0');
    out += ".0";
  } else {
    out += raw.substr(0, static_cast<size_t>(e));
    out += ".";
    out += raw.substr(static_cast<size_t>(e));
  }
  return out;
}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rat rat_from_string(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw domain_error("rat_from_string: empty input");
  bool neg = false;
  if (s[0] == '+' || s[0] == '-') {
    neg = s[0] == '-';
    s.erase(s.begin());
  }
  Rat value;
  auto slash = s.find('/');
  auto dot = s.find('.');
  if (slash != std::string::npos) {
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw domain_error("rat_from_string: malformed fraction '" + text + "'");
    }
    Int d(den);
    if (d == 0) throw domain_error("rat_from_string: zero denominator");
    value = Rat(Int(num), d);
  } else if (dot != std::string::npos) {
    std::string whole = s.substr(0, dot);
    std::string frac = s.substr(dot + 1);
    if (whole.empty()) whole = "0";
    if (!all_digits(whole) || (!frac.empty() && !all_digits(frac))) {
      throw domain_error("rat_from_string: malformed decimal '" + text + "'");
    }
    Int scale = 1;
    for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Int units = Int(whole) * scale + (frac.empty() ? Int(0) : Int(frac));
    value = Rat(units, scale);
  } else {
    if (!all_digits(s)) {
      throw domain_error("rat_from_string: malformed number '" + text + "'");
    }
    value = Rat(Int(s));
  }
  return neg ? -value : value;
}

}  // namespace qlab
