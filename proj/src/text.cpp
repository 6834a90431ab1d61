#include "mzv/text.hpp"

#include <charconv>
#include <vector>

namespace mzv {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\n' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::uint64_t parse_uint(std::string_view s) {
  s = trim(s);
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw Error(Errc::ParseError, "expected an unsigned integer, got '" + std::string(s) + "'");
  }
  return v;
}

// Splits at top-level occurrences of sep (outside parentheses).
std::vector<std::string_view> split_top(std::string_view s, std::string_view sep) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (depth == 0 && s.substr(i, sep.size()) == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + sep.size();
      i = start - 1;
    }
  }
  out.push_back(s.substr(start));
  return out;
}

std::string_view unparen(std::string_view s) {
  s = trim(s);
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') {
    throw Error(Errc::ParseError, "expected a parenthesized polynomial");
  }
  return s.substr(1, s.size() - 2);
}

}  // namespace

std::string to_string(const Poly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (std::size_t i = f.size(); i-- > 0;) {
    const FieldElem c = f.coeff(i);
    if (c.is_zero()) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += std::to_string(c.v);
      continue;
    }
    if (c.v != 1) out += std::to_string(c.v) + "*";
    out += 't';
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

std::string to_string(const RatFunc& r) { return "(" + to_string(r.num()) + ")/(" + to_string(r.den()) + ")"; }

std::string to_string(const BiPoly& h) {
  if (h.is_zero()) return "0";
  std::string out;
  auto terms = h.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += "T^" + std::to_string(it->first) + "*" + to_string(it->second);
  }
  return out;
}

Poly parse_poly(const Field& f, std::string_view s) {
  s = trim(s);
  if (s.empty()) throw Error(Errc::ParseError, "empty polynomial");
  Poly out(f);
  if (s == "0") return out;
  for (std::string_view term : split_top(s, "+")) {
    term = trim(term);
    const auto tpos = term.find('t');
    std::uint64_t coeff = 1, exp = 0;
    if (tpos == std::string_view::npos) {
      coeff = parse_uint(term);
    } else {
      std::string_view head = term.substr(0, tpos);
      if (!head.empty()) {
        if (head.back() != '*') throw Error(Errc::ParseError, "malformed term '" + std::string(term) + "'");
        coeff = parse_uint(head.substr(0, head.size() - 1));
      }
      std::string_view tail = term.substr(tpos + 1);
      if (tail.empty()) {
        exp = 1;
      } else {
        if (tail.front() != '^') throw Error(Errc::ParseError, "malformed term '" + std::string(term) + "'");
        exp = parse_uint(tail.substr(1));
      }
    }
    if (coeff >= f->q()) throw Error(Errc::ParseError, "coefficient code out of range");
    detail::check_degree(exp);
    out += Poly::monomial(f, FieldElem{static_cast<std::uint32_t>(coeff)}, exp);
  }
  return out;
}

RatFunc parse_ratfunc(const Field& f, std::string_view s) {
  auto parts = split_top(trim(s), "/");
  if (parts.size() == 1) return RatFunc(parse_poly(f, parts[0]));
  if (parts.size() != 2) throw Error(Errc::ParseError, "malformed rational function");
  return rat_normalize(parse_poly(f, unparen(parts[0])), parse_poly(f, unparen(parts[1])));
}

BiPoly parse_bipoly(const Field& f, std::string_view s) {
  s = trim(s);
  if (s == "0") return BiPoly(f);
  std::vector<std::pair<std::uint64_t, RatFunc>> terms;
  for (std::string_view term : split_top(s, " + ")) {
    term = trim(term);
    if (term.substr(0, 2) != "T^") throw Error(Errc::ParseError, "bivariate term must start with T^");
    const auto star = term.find('*');
    if (star == std::string_view::npos) throw Error(Errc::ParseError, "bivariate term lacks '*'");
    terms.emplace_back(parse_uint(term.substr(2, star - 2)), parse_ratfunc(f, term.substr(star + 1)));
  }
  return BiPoly::from_terms(f, terms);
}

std::string to_storage(const BiPoly& h) {
  std::string out = "den " + to_string(h.den()) + "\n";
  for (const auto& [e, p] : h.numerators()) out += "T" + std::to_string(e) + " " + to_string(p) + "\n";
  return out;
}

BiPoly from_storage(const Field& f, std::string_view s) {
  Poly den(f);
  std::vector<std::pair<std::uint64_t, Poly>> nums;
  bool have_den = false;
  while (!s.empty()) {
    const auto nl = s.find('\n');
    std::string_view line = trim(s.substr(0, nl));
    s = nl == std::string_view::npos ? std::string_view{} : s.substr(nl + 1);
    if (line.empty()) continue;
    const auto sp = line.find(' ');
    if (sp == std::string_view::npos) throw Error(Errc::ParseError, "malformed storage line");
    std::string_view key = line.substr(0, sp), val = line.substr(sp + 1);
    if (key == "den") {
      den = parse_poly(f, val);
      have_den = true;
    } else if (key.front() == 'T') {
      nums.emplace_back(parse_uint(key.substr(1)), parse_poly(f, val));
    } else {
      throw Error(Errc::ParseError, "unknown storage key '" + std::string(key) + "'");
    }
  }
  if (!have_den) throw Error(Errc::ParseError, "storage lacks a denominator");
  BiPoly h = BiPoly::from_numerators(den, nums);
  if (!(h.den() == den) || h.numerators().size() != nums.size()) {
    throw Error(Errc::ParseError, "stored bivariate polynomial is not canonical");
  }
  return h;
}

}  // namespace mzv
