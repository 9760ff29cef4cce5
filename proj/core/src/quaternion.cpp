#include "sympres/kleinian/quaternion.hpp"

namespace sympres {

Quaternion Quaternion::zeta(int m)
{
  // cos = (z + z^-1)/2, sin = (z - z^-1)/(2i) with z = zeta_m.
  Cyclotomic z = Cyclotomic::zeta(m, 1), zi = Cyclotomic::zeta(m, -1);
  Cyclotomic half(Rational(1, 2));
  Cyclotomic i = Cyclotomic::zeta(4, 1);
  return {half * (z + zi), half * (z - zi) * (-i), 0, 0};
}

Quaternion Quaternion::operator+(const Quaternion &o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
Quaternion Quaternion::operator-(const Quaternion &o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }
Quaternion Quaternion::operator-() const { return {-a, -b, -c, -d}; }

Quaternion Quaternion::operator*(const Quaternion &o) const
{
  return {a * o.a - b * o.b - c * o.c - d * o.d,
          a * o.b + b * o.a + c * o.d - d * o.c,
          a * o.c - b * o.d + c * o.a + d * o.b,
          a * o.d + b * o.c - c * o.b + d * o.a};
}

Quaternion Quaternion::scaled(const Cyclotomic &s) const { return {a * s, b * s, c * s, d * s}; }
Quaternion Quaternion::conjugate() const { return {a, -b, -c, -d}; }
Cyclotomic Quaternion::norm() const { return a * a + b * b + c * c + d * d; }

bool Quaternion::operator==(const Quaternion &o) const
{
  return a == o.a && b == o.b && c == o.c && d == o.d;
}

std::string Quaternion::to_string() const
{
  std::string out;
  const Cyclotomic *coeff[] = {&a, &b, &c, &d};
  const char *unit[] = {"", "i", "j", "k"};
  for (int t = 0; t < 4; ++t) {
    if (coeff[t]->is_zero())
      continue;
    std::string c = coeff[t]->pretty();
    bool compound = c.find_first_of("+-", 1) != std::string::npos;
    if (compound)
      c = "(" + c + ")";
    if (t > 0 && (c == "1" || c == "-1"))
      c.pop_back();
    if (!out.empty() && c[0] != '-')
      out += "+";
    out += c + unit[t];
  }
  return out.empty() ? "0" : out;
}

Cyclotomic inv_sqrt2()
{
  return (Cyclotomic::zeta(8, 1) + Cyclotomic::zeta(8, -1)) * Cyclotomic(Rational(1, 2));
}

Cyclotomic golden_rho() { return Cyclotomic::zeta(10, 1) + Cyclotomic::zeta(10, -1); }
Cyclotomic golden_sigma() { return Cyclotomic::zeta(10, 3) + Cyclotomic::zeta(10, -3); }

Matrix complexify(const Quaternion &q)
{
  Cyclotomic i = Cyclotomic::zeta(4, 1);
  // [[a + b i, -c i + d], [-c i - d, a - b i]]
  return Matrix::from_rows({{q.a + q.b * i, q.d - q.c * i}, {-q.c * i - q.d, q.a - q.b * i}});
}

} // namespace sympres
