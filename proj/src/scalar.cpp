#include "trihom/scalar.hpp"

#include <cctype>
#include <cstddef>

namespace trihom {

namespace {

bool valid_rational_literal(const std::string& s) {
  std::size_t pos = 0;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
  std::size_t digits = 0;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
    ++pos;
    ++digits;
  }
  if (digits == 0) return false;
  if (pos == s.size()) return true;
  if (s[pos] != '/') return false;
  ++pos;
  digits = 0;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
    ++pos;
    ++digits;
  }
  return digits > 0 && pos == s.size();
}

}  // namespace

Rat rat_parse(const std::string& text) {
  if (!valid_rational_literal(text))
    throw ParseError("cannot parse '" + text + "' as a rational p/q");
  // mpq_set_str rejects an explicit leading plus sign.
  Rat r(text[0] == '+' ? text.substr(1) : text, 10);
  if (sgn(r.get_den()) == 0)
    throw ParseError("zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

std::string rat_to_string(const Rat& r) { return r.get_str(); }

Scalar scalar_parse(const std::string& text, bool allow_imaginary) {
  if (text.empty()) throw ParseError("empty scalar literal");
  if (text.back() != 'i') return Scalar(rat_parse(text));
  if (!allow_imaginary)
    throw ParseError("imaginary literal '" + text +
                     "' in a non-complex document");

  std::string body = text.substr(0, text.size() - 1);
  // Split off a real part at the last top-level sign. Rational literals
  // only carry a sign at position 0, so any later +/- separates the parts.
  std::size_t split = std::string::npos;
  for (std::size_t p = body.size(); p-- > 1;) {
    if (body[p] == '+' || body[p] == '-') {
      split = p;
      break;
    }
  }
  std::string re_text, im_text;
  if (split == std::string::npos) {
    im_text = body;
  } else {
    re_text = body.substr(0, split);
    im_text = body.substr(split);
  }
  if (im_text.empty() || im_text == "+")
    im_text = "1";
  else if (im_text == "-")
    im_text = "-1";
  Rat re = re_text.empty() ? Rat(0) : rat_parse(re_text);
  return Scalar(re, rat_parse(im_text));
}

std::string scalar_to_string(const Scalar& s) {
  if (s.is_real()) return rat_to_string(s.re());
  std::string imag = rat_to_string(rat_abs(s.im())) + "i";
  if (sgn(s.re()) == 0) return (sgn(s.im()) < 0 ? "-" : "") + imag;
  return rat_to_string(s.re()) + (sgn(s.im()) < 0 ? "-" : "+") + imag;
}

}  // namespace trihom
