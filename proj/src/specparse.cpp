#include "qlab/specparse.hpp"

#include <cctype>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qlab/approx.hpp"
#include "qlab/numeric.hpp"

namespace qlab {

namespace {

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  }

  [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
    throw parse_error(msg, at);
  }

  // Consumes `c` (after whitespace) and returns its position.
  std::size_t expect(char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c) {
      fail(std::string("expected '") + c + "'", pos);
    }
    return pos++;
  }

  bool try_consume(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  // Lowercase-and-hyphen word, e.g. "interval-union" or "min-exp".
  std::pair<std::string, std::size_t> ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::islower(static_cast<unsigned char>(text[pos])) ||
            text[pos] == '-')) {
      ++pos;
    }
    if (pos == start) fail("expected a name", start);
    return {text.substr(start, pos - start), start};
  }

  void keyword(const std::string& kw) {
    auto [word, at] = ident();
    if (word != kw) fail("expected '" + kw + "'", at);
  }

  std::size_t digits() {
    std::size_t start = pos;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    return pos - start;
  }

  Int nat() {
    skip_ws();
    std::size_t start = pos;
    if (digits() == 0) fail("expected an integer", start);
    return Int(text.substr(start, pos - start));
  }

  // integer, fraction "p/q", or exact decimal like "0.49".
  Rat rational() {
    skip_ws();
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    if (digits() == 0) fail("expected a number", start);
    if (pos < text.size() && text[pos] == '/') {
      ++pos;
      if (digits() == 0) fail("expected a denominator", pos);
    } else if (pos < text.size() && text[pos] == '.') {
      ++pos;
      if (digits() == 0) fail("expected digits after the decimal point", pos);
    }
    try {
      return rat_from_string(text.substr(start, pos - start));
    } catch (const domain_error& e) {
      fail(e.what(), start);
    }
  }

  std::vector<Int> nat_list() {
    std::vector<Int> out;
    out.push_back(nat());
    while (try_consume(',')) out.push_back(nat());
    return out;
  }
};

// Parameter validation lives in the factories; here their domain_error is
// re-raised as a parse_error anchored to the constructor's parenthesis.
template <typename Build>
SetSpec checked(std::size_t open, Build&& build) {
  try {
    return build();
  } catch (const domain_error& e) {
    throw parse_error(e.what(), open);
  }
}

SetSpec parse_node(Cursor& cur) {
  auto [name, at] = cur.ident();
  std::size_t open = cur.expect('(');

  if (name == "interval-union") {
    cur.keyword("a");
    cur.expect('=');
    Rat a = cur.rational();
    cur.expect(',');
    cur.keyword("b");
    cur.expect('=');
    Rat b = cur.rational();
    cur.expect(')');
    return checked(open, [&] { return make_interval_union(a, b); });
  }
  if (name == "leading-digit") {
    cur.keyword("base");
    cur.expect('=');
    Int base = cur.nat();
    cur.expect(',');
    cur.keyword("digits");
    cur.expect('=');
    cur.expect('{');
    std::vector<Int> ds = cur.nat_list();
    cur.expect('}');
    cur.expect(')');
    return checked(open,
                   [&] { return make_leading_digit(base, std::move(ds)); });
  }
  if (name == "powers") {
    cur.keyword("base");
    cur.expect('=');
    Int base = cur.nat();
    cur.expect(',');
    cur.keyword("min-exp");
    cur.expect('=');
    Int min_exp = cur.nat();
    cur.expect(')');
    return checked(open, [&] { return make_geometric_powers(base, min_exp); });
  }
  if (name == "factorial") {
    cur.skip_ws();
    FactorialPart part;
    if (cur.pos < cur.text.size() && cur.text[cur.pos] == 'A') {
      part = FactorialPart::A;
    } else if (cur.pos < cur.text.size() && cur.text[cur.pos] == 'B') {
      part = FactorialPart::B;
    } else {
      cur.fail("expected 'A' or 'B'", cur.pos);
    }
    ++cur.pos;
    cur.expect(')');
    return make_factorial_blocks(part);
  }
  if (name == "union") {
    SetSpec left = parse_node(cur);
    cur.expect(';');
    SetSpec right = parse_node(cur);
    cur.expect(')');
    return make_union(std::move(left), std::move(right));
  }
  if (name == "explicit") {
    std::vector<Int> es = cur.nat_list();
    cur.expect(')');
    return checked(open, [&] { return make_explicit(std::move(es)); });
  }
  if (name == "delta-family") {
    Rat delta = cur.rational();
    cur.expect(')');
    return checked(open, [&] { return build_delta_family(delta); });
  }
  cur.fail("unknown set constructor '" + name + "'", at);
}

std::string join(const std::vector<Int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += xs[i].str();
  }
  return out;
}

}  // namespace

SetSpec parse_spec(const std::string& text) {
  Cursor cur{text};
  SetSpec spec = parse_node(cur);
  cur.skip_ws();
  if (cur.pos != text.size()) {
    throw parse_error("unexpected trailing characters", cur.pos);
  }
  return spec;
}

std::string render_spec(const SetSpec& spec) {
  struct Render {
    std::string operator()(const IntervalUnion& iu) const {
      return "interval-union(a=" + rat_to_string(iu.a) +
             ", b=" + rat_to_string(iu.b) + ")";
    }
    std::string operator()(const LeadingDigit& ld) const {
      return "leading-digit(base=" + ld.base.str() + ", digits={" +
             join(ld.digits) + "})";
    }
    std::string operator()(const GeometricPowers& gp) const {
      return "powers(base=" + gp.base.str() +
             ", min-exp=" + gp.min_exp.str() + ")";
    }
    std::string operator()(const FactorialBlocks& fb) const {
      return fb.part == FactorialPart::A ? "factorial(A)" : "factorial(B)";
    }
    std::string operator()(const UnionSpec& u) const {
      return "union(" + render_spec(*u.left) + "; " + render_spec(*u.right) +
             ")";
    }
    std::string operator()(const Explicit& ex) const {
      return "explicit(" + join(ex.elements) + ")";
    }
  };
  return std::visit(Render{}, spec.node);
}

}  // namespace qlab
