#include "cliquecomm/prob_table.hpp"

#include <charconv>

namespace cliquecomm {

std::string to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

namespace {

std::int64_t parse_int(const std::string& s, const std::string& whole) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw Error(ErrorKind::kInvalidParams, "malformed rational: " + whole);
  return v;
}

}  // namespace

Rational parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(parse_int(s, s));
  const std::int64_t den = parse_int(s.substr(slash + 1), s);
  if (den == 0) throw Error(ErrorKind::kInvalidParams, "zero denominator: " + s);
  return Rational(parse_int(s.substr(0, slash), s), den);
}

RealTable to_real(const ExactTable& t) {
  RealTable out(t.n(), t.omega());
  for (int r = 0; r < t.rows(); ++r)
    for (int c = 0; c < t.rows(); ++c) out.at(r, c) = to_double(t.at(r, c));
  return out;
}

}  // namespace cliquecomm
