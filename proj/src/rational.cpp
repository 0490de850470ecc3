#include "symdom/rational.hpp"

#include "symdom/errors.hpp"

#include <cctype>

namespace symdom {

std::string rat_to_string(const Rat& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

std::optional<Rat> parse_rational(const std::string& s) {
  if (s.empty()) return std::nullopt;
  auto valid_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den)) return std::nullopt;
    Int d(den);
    if (d == 0) return std::nullopt;
    return Rat(Int(num), d);
  }
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string head = s.substr(0, dot), tail = s.substr(dot + 1);
    if (head.empty() || head == "-" || head == "+") head += "0";
    if (!valid_int(head)) return std::nullopt;
    if (tail.empty()) return Rat(Int(head));
    for (char c : tail)
      if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    Int scale = 1;
    for (std::size_t i = 0; i < tail.size(); ++i) scale *= 10;
    Rat r{Int(tail), scale};
    Rat h{Int(head)};
    return (s[0] == '-') ? Rat(h - r) : Rat(h + r);
  }
  if (!valid_int(s)) return std::nullopt;
  return Rat(Int(s));
}

Rat rising(const Rat& x, int m) {
  Rat out = 1;
  for (int i = 0; i < m; ++i) out *= x + i;
  return out;
}

bool is_integer(const Rat& x) { return denominator(x) == 1; }

bool is_nonneg_integer(const Rat& x) { return is_integer(x) && numerator(x) >= 0; }

GRat operator/(const GRat& a, const GRat& b) {
  Rat n2 = b.norm2();
  if (n2 == 0) throw ParameterError("division by zero Gaussian rational");
  GRat c = a * b.conj();
  return GRat(c.re / n2, c.im / n2);
}

std::string grat_to_string(const GRat& z) {
  if (z.im == 0) return rat_to_string(z.re);
  std::string im = rat_to_string(z.im) + "i";
  if (z.re == 0) return im;
  if (z.im > 0) return rat_to_string(z.re) + "+" + im;
  return rat_to_string(z.re) + im;  // sign carried by the imaginary part
}

}  // namespace symdom
