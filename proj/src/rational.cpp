#include "belief/rational.hpp"

#include <cctype>

#include "belief/errors.hpp"

namespace belt {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rat parse_rational(std::string_view text) {
  using Int = boost::multiprecision::cpp_int;
  bool negative = false;
  std::string_view body = text;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
    negative = body[0] == '-';
    body.remove_prefix(1);
  }
  auto fail = [&] { throw Error(ErrKind::Syntax, "malformed rational '" + std::string(text) + "'"); };

  Rat result;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    std::string_view num = body.substr(0, slash), den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) fail();
    Int d{std::string(den)};
    if (d == 0)
      throw Error(ErrKind::Schema, "zero denominator in '" + std::string(text) + "'");
    Int n{std::string(num)};
    result = Rat(n, d);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    std::string_view whole = body.substr(0, dot), frac = body.substr(dot + 1);
    if (!all_digits(whole) || !all_digits(frac)) fail();
    Int den = 1;
    for (std::size_t k = 0; k < frac.size(); ++k) den *= 10;
    Int w{std::string(whole)}, f{std::string(frac)};
    result = Rat(w * den + f, den);
  } else {
    if (!all_digits(body)) fail();
    result = Rat(Int{std::string(body)});
  }
  return negative ? -result : result;
}

std::string rat_to_string(const Rat& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

std::string rat_to_fraction_string(const Rat& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace belt
