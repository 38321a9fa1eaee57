#include "netavg/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace netavg {

BigInt floor_rat(const Rat& x) {
  BigInt q = numerator(x) / denominator(x);  // truncates toward zero
  if (numerator(x) < 0 && q * denominator(x) != numerator(x)) {
    --q;
  }
  return q;
}

BigInt ceil_rat(const Rat& x) { return -floor_rat(-x); }

BigInt round_half_up_rat(const Rat& x) { return floor_rat(x + Rat(1, 2)); }

double to_double(const Rat& x) { return x.convert_to<double>(); }

Rat rat_from_double_exact(double x) { return Rat(x); }

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rat parse_rational(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw std::invalid_argument("empty rational literal");

  bool negative = false;
  if (s[0] == '+' || s[0] == '-') {
    negative = (s[0] == '-');
    s.erase(0, 1);
  }
  if (s.empty()) throw std::invalid_argument("sign with no digits: " + text);

  Rat value;
  if (auto slash = s.find('/'); slash != std::string::npos) {
    const std::string num = s.substr(0, slash);
    const std::string den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw std::invalid_argument("malformed p/q literal: " + text);
    }
    BigInt d(den);
    if (d == 0) throw std::invalid_argument("zero denominator: " + text);
    value = Rat(BigInt(num), d);
  } else if (auto dot = s.find('.'); dot != std::string::npos) {
    const std::string whole = s.substr(0, dot);
    const std::string frac = s.substr(dot + 1);
    if ((whole.empty() && frac.empty()) ||
        (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac))) {
      throw std::invalid_argument("malformed decimal literal: " + text);
    }
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    BigInt digits = (whole.empty() ? BigInt(0) : BigInt(whole)) * scale +
                    (frac.empty() ? BigInt(0) : BigInt(frac));
    value = Rat(digits, scale);
  } else {
    if (!all_digits(s)) {
      throw std::invalid_argument("malformed integer literal: " + text);
    }
    value = Rat(BigInt(s));
  }
  return negative ? Rat(-value) : value;
}

std::string rat_to_string(const Rat& x) {
  std::string out = numerator(x).str();
  if (denominator(x) != 1) {
    out += "/";
    out += denominator(x).str();
  }
  return out;
}

}  // namespace netavg
