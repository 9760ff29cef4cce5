#include "sympres/exactnum/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>

#include "sympres/error.hpp"

namespace sympres {

std::int64_t gcd64(std::int64_t a, std::int64_t b)
{
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t lcm64(std::int64_t a, std::int64_t b)
{
  if (a == 0 || b == 0)
    return 0;
  return a / gcd64(a, b) * b;
}

int euler_phi(int n)
{
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0)
        n /= p;
      result -= result / p;
    }
  }
  if (n > 1)
    result -= result / n;
  return result;
}

namespace {

std::vector<int> prime_divisors(int n)
{
  std::vector<int> ps;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0)
        n /= p;
    }
  }
  if (n > 1)
    ps.push_back(n);
  return ps;
}

std::int64_t mod(std::int64_t a, std::int64_t n)
{
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

// Exact division of integer polynomials (divisor monic).
std::vector<std::int64_t> poly_divide(std::vector<std::int64_t> num, const std::vector<std::int64_t> &den)
{
  std::size_t dn = den.size() - 1;
  std::vector<std::int64_t> q(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    std::int64_t c = num[i];
    q[i - dn] = c;
    if (c == 0)
      continue;
    for (std::size_t j = 0; j <= dn; ++j)
      num[i - dn + j] -= c * den[j];
  }
  return q;
}

std::recursive_mutex &registry_mutex()
{
  static std::recursive_mutex m;
  return m;
}

std::map<int, std::unique_ptr<CyclotomicField>> &registry()
{
  static std::map<int, std::unique_ptr<CyclotomicField>> r;
  return r;
}

constexpr long double kPi = 3.141592653589793238462643383279502884L;

// Integer form of a coefficient vector: c_e = nums[e] / den.
struct IntForm {
  std::vector<std::int64_t> nums;
  std::int64_t den = 1;
};

constexpr std::int64_t kNumBound = std::int64_t(1) << 40;
constexpr std::int64_t kDenBound = std::int64_t(1) << 30;

bool to_int_form(const std::vector<Rational> &c, IntForm &out)
{
  std::int64_t den = 1;
  for (const auto &r : c) {
    if (!r.is_small())
      return false;
    if (r.small_den() != 1) {
      den = lcm64(den, r.small_den());
      if (den > kDenBound)
        return false;
    }
  }
  out.den = den;
  out.nums.resize(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    std::int64_t n = c[i].small_num();
    if (n > kNumBound || n < -kNumBound)
      return false;
    out.nums[i] = n * (den / c[i].small_den());
    if (out.nums[i] > kNumBound || out.nums[i] < -kNumBound)
      return false;
  }
  return true;
}

} // namespace

CyclotomicField::CyclotomicField(int order) : order_(order), degree_(euler_phi(order))
{
  // Phi_N = (x^N - 1) / prod_{d | N, d < N} Phi_d
  std::vector<std::int64_t> p(order + 1, 0);
  p[0] = -1;
  p[order] = 1;
  for (int d = 1; d < order; ++d)
    if (order % d == 0)
      p = poly_divide(p, CyclotomicField::get(d).polynomial());
  poly_ = std::move(p);

  powers_.assign(order, std::vector<std::int64_t>(degree_, 0));
  powers_[0][0] = 1;
  for (int j = 1; j < order; ++j) {
    const auto &prev = powers_[j - 1];
    auto &cur = powers_[j];
    std::int64_t top = prev[degree_ - 1];
    for (int i = degree_ - 1; i > 0; --i)
      cur[i] = prev[i - 1];
    cur[0] = 0;
    if (top != 0)
      for (int i = 0; i < degree_; ++i)
        cur[i] -= top * poly_[i];
  }
}

const CyclotomicField &CyclotomicField::get(int order)
{
  if (order < 1)
    throw Error(ErrorCode::ParseError, "cyclotomic order must be positive");
  std::lock_guard<std::recursive_mutex> lock(registry_mutex());
  auto &reg = registry();
  auto it = reg.find(order);
  if (it != reg.end())
    return *it->second;
  std::unique_ptr<CyclotomicField> f(new CyclotomicField(order));
  const CyclotomicField &ref = *f;
  reg.emplace(order, std::move(f));
  return ref;
}

const std::vector<std::int64_t> &CyclotomicField::power(std::int64_t j) const noexcept
{
  return powers_[static_cast<std::size_t>(mod(j, order_))];
}

Cyclotomic::Cyclotomic(const Rational &v) : field_(&CyclotomicField::get(1))
{
  if (!v.is_zero())
    c_.push_back(v);
}

void Cyclotomic::normalize()
{
  for (const auto &r : c_)
    if (!r.is_zero())
      return;
  c_.clear();
}

Cyclotomic Cyclotomic::zeta(int n, std::int64_t k)
{
  const auto &f = CyclotomicField::get(n);
  const auto &p = f.power(k);
  std::vector<Rational> c(p.begin(), p.end());
  return Cyclotomic(&f, std::move(c));
}

Cyclotomic Cyclotomic::from_terms(int n, const std::vector<std::pair<std::int64_t, Rational>> &terms)
{
  const auto &f = CyclotomicField::get(n);
  std::vector<Rational> c(f.degree());
  for (const auto &[e, r] : terms) {
    if (r.is_zero())
      continue;
    const auto &p = f.power(e);
    for (int i = 0; i < f.degree(); ++i)
      if (p[i] != 0)
        c[i] += r * Rational(p[i]);
  }
  return Cyclotomic(&f, std::move(c));
}

bool Cyclotomic::is_one() const noexcept
{
  if (c_.empty() || !c_[0].is_one())
    return false;
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (!c_[i].is_zero())
      return false;
  return true;
}

bool Cyclotomic::is_rational() const noexcept
{
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (!c_[i].is_zero())
      return false;
  return true;
}

Rational Cyclotomic::rational_value() const
{
  if (!is_rational())
    throw Error(ErrorCode::AssertionFailure, "cyclotomic value is not rational");
  return c_.empty() ? Rational() : c_[0];
}

Cyclotomic Cyclotomic::lifted(int m) const
{
  int n = order();
  if (m == n)
    return *this;
  if (m % n != 0)
    throw Error(ErrorCode::DimensionMismatch,
                "cannot lift order " + std::to_string(n) + " to " + std::to_string(m));
  const auto &f = CyclotomicField::get(m);
  if (c_.empty())
    return Cyclotomic(&f, {});
  std::int64_t factor = m / n;
  std::vector<Rational> c(f.degree());
  for (std::size_t e = 0; e < c_.size(); ++e) {
    if (c_[e].is_zero())
      continue;
    const auto &p = f.power(static_cast<std::int64_t>(e) * factor);
    for (int i = 0; i < f.degree(); ++i)
      if (p[i] != 0)
        c[i] += c_[e] * Rational(p[i]);
  }
  return Cyclotomic(&f, std::move(c));
}

Cyclotomic Cyclotomic::galois(std::int64_t k) const
{
  int n = order();
  if (gcd64(k, n) != 1)
    throw Error(ErrorCode::AssertionFailure, "galois exponent not coprime to order");
  if (c_.empty() || n <= 2)
    return *this;
  std::vector<Rational> c(field_->degree());
  for (std::size_t e = 0; e < c_.size(); ++e) {
    if (c_[e].is_zero())
      continue;
    const auto &p = field_->power(static_cast<std::int64_t>(e) * k);
    for (int i = 0; i < field_->degree(); ++i)
      if (p[i] != 0)
        c[i] += c_[e] * Rational(p[i]);
  }
  return Cyclotomic(field_, std::move(c));
}

bool Cyclotomic::in_subfield(int d) const
{
  int n = order();
  for (int k = 2; k < n; ++k)
    if (k % d == 1 % d && gcd64(k, n) == 1 && !(galois(k) == *this))
      return false;
  return true;
}

int Cyclotomic::minimal_order() const
{
  if (is_rational())
    return 1;
  int d = order();
  bool changed = true;
  while (changed) {
    changed = false;
    for (int p : prime_divisors(d)) {
      if (in_subfield(d / p)) {
        d /= p;
        changed = true;
        break;
      }
    }
  }
  if (d % 4 == 2)
    d /= 2;
  return d;
}

Cyclotomic Cyclotomic::descended(int d) const
{
  int n = order();
  if (d == n)
    return *this;
  if (c_.empty())
    return Cyclotomic(&CyclotomicField::get(d), {});
  if (n % d != 0) {
    int g = static_cast<int>(gcd64(n, d));
    return descended(g).lifted(d);
  }
  if (is_rational()) {
    Cyclotomic r(c_[0]);
    return r.lifted(d);
  }
  // Solve sum_e b_e * zeta_d^e = value in the order-n power basis.
  const auto &fd = CyclotomicField::get(d);
  int rows = field_->degree(), cols = fd.degree();
  std::int64_t factor = n / d;
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols + 1));
  for (int e = 0; e < cols; ++e) {
    const auto &p = field_->power(e * factor);
    for (int i = 0; i < rows; ++i)
      a[i][e] = Rational(p[i]);
  }
  for (int i = 0; i < rows; ++i)
    a[i][cols] = c_[i];
  int r = 0;
  std::vector<int> pivot_col;
  for (int col = 0; col < cols && r < rows; ++col) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (!a[i][col].is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0)
      continue;
    std::swap(a[piv], a[r]);
    Rational inv = a[r][col].reciprocal();
    for (int j = col; j <= cols; ++j)
      a[r][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][col].is_zero())
        continue;
      Rational f = a[i][col];
      for (int j = col; j <= cols; ++j)
        if (!a[r][j].is_zero())
          a[i][j] -= f * a[r][j];
    }
    pivot_col.push_back(col);
    ++r;
  }
  for (int i = r; i < rows; ++i)
    if (!a[i][cols].is_zero())
      throw Error(ErrorCode::NotAMember,
                  "value does not lie in Q(zeta_" + std::to_string(d) + ")");
  std::vector<Rational> b(cols);
  for (int i = 0; i < r; ++i)
    b[pivot_col[i]] = a[i][cols];
  return Cyclotomic(&fd, std::move(b));
}

Cyclotomic Cyclotomic::operator-() const
{
  std::vector<Rational> c(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i)
    c[i] = -c_[i];
  return Cyclotomic(field_, std::move(c));
}

namespace {

struct Aligned {
  const Cyclotomic *a;
  const Cyclotomic *b;
  Cyclotomic la, lb;
};

void align(const Cyclotomic &a, const Cyclotomic &b, Aligned &out)
{
  out.a = &a;
  out.b = &b;
  if (a.order() == b.order())
    return;
  int m = static_cast<int>(lcm64(a.order(), b.order()));
  if (a.order() != m) {
    out.la = a.lifted(m);
    out.a = &out.la;
  }
  if (b.order() != m) {
    out.lb = b.lifted(m);
    out.b = &out.lb;
  }
}

} // namespace

Cyclotomic operator+(const Cyclotomic &a, const Cyclotomic &b)
{
  if (b.is_zero())
    return a;
  if (a.is_zero())
    return b;
  Aligned al;
  align(a, b, al);
  std::vector<Rational> c(al.a->c_.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = al.a->c_[i] + al.b->c_[i];
  return Cyclotomic(al.a->field_, std::move(c));
}

Cyclotomic operator-(const Cyclotomic &a, const Cyclotomic &b)
{
  if (b.is_zero())
    return a;
  if (a.is_zero())
    return -b;
  Aligned al;
  align(a, b, al);
  std::vector<Rational> c(al.a->c_.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = al.a->c_[i] - al.b->c_[i];
  return Cyclotomic(al.a->field_, std::move(c));
}

Cyclotomic operator*(const Cyclotomic &a, const Cyclotomic &b)
{
  if (a.is_zero() || b.is_zero()) {
    int m = static_cast<int>(lcm64(a.order(), b.order()));
    return Cyclotomic(&CyclotomicField::get(m), {});
  }
  Aligned al;
  align(a, b, al);
  const CyclotomicField &f = *al.a->field_;
  const auto &x = al.a->c_;
  const auto &y = al.b->c_;
  int deg = f.degree();

  if (al.b->is_rational() || al.a->is_rational()) {
    const auto &s = al.b->is_rational() ? y[0] : x[0];
    const auto &v = al.b->is_rational() ? x : y;
    std::vector<Rational> c(deg);
    for (int i = 0; i < deg; ++i)
      if (!v[i].is_zero())
        c[i] = v[i] * s;
    return Cyclotomic(&f, std::move(c));
  }

  IntForm ix, iy;
  if (to_int_form(x, ix) && to_int_form(y, iy)) {
    std::vector<__int128> acc(2 * deg - 1, 0);
    for (int i = 0; i < deg; ++i) {
      if (ix.nums[i] == 0)
        continue;
      for (int j = 0; j < deg; ++j)
        if (iy.nums[j] != 0)
          acc[i + j] += static_cast<__int128>(ix.nums[i]) * iy.nums[j];
    }
    for (int e = 2 * deg - 2; e >= deg; --e) {
      if (acc[e] == 0)
        continue;
      const auto &p = f.power(e);
      for (int i = 0; i < deg; ++i)
        acc[i] += acc[e] * p[i];
    }
    __int128 den = static_cast<__int128>(ix.den) * iy.den;
    std::vector<Rational> c(deg);
    for (int i = 0; i < deg; ++i)
      if (acc[i] != 0)
        c[i] = Rational::fraction(acc[i], den);
    return Cyclotomic(&f, std::move(c));
  }

  std::vector<Rational> acc(2 * deg - 1);
  for (int i = 0; i < deg; ++i) {
    if (x[i].is_zero())
      continue;
    for (int j = 0; j < deg; ++j)
      if (!y[j].is_zero())
        acc[i + j] += x[i] * y[j];
  }
  for (int e = 2 * deg - 2; e >= deg; --e) {
    if (acc[e].is_zero())
      continue;
    const auto &p = f.power(e);
    for (int i = 0; i < deg; ++i)
      if (p[i] != 0)
        acc[i] += acc[e] * Rational(p[i]);
  }
  acc.resize(deg);
  return Cyclotomic(&f, std::move(acc));
}

Rational Cyclotomic::norm() const
{
  if (c_.empty())
    return Rational();
  int n = order();
  Cyclotomic prod = *this;
  for (int k = 2; k < n; ++k)
    if (gcd64(k, n) == 1)
      prod = prod * galois(k);
  return prod.rational_value();
}

Cyclotomic Cyclotomic::inverse() const
{
  if (c_.empty())
    throw Error(ErrorCode::DivisionByZero, "inverse of zero cyclotomic");
  if (is_rational())
    return Cyclotomic(c_[0].reciprocal()).lifted(order());
  int n = order();
  Cyclotomic others(Rational(1));
  for (int k = 2; k < n; ++k)
    if (gcd64(k, n) == 1)
      others = others * galois(k);
  Rational nrm = (*this * others).rational_value();
  return others * Cyclotomic(nrm.reciprocal());
}

Cyclotomic operator/(const Cyclotomic &a, const Cyclotomic &b)
{
  if (b.is_zero())
    throw Error(ErrorCode::DivisionByZero, "division by zero cyclotomic");
  return a * b.inverse();
}

Cyclotomic Cyclotomic::pow(std::int64_t e) const
{
  if (e < 0)
    return inverse().pow(-e);
  Cyclotomic result = Cyclotomic(Rational(1)).lifted(order());
  Cyclotomic base = *this;
  while (e > 0) {
    if (e & 1)
      result = result * base;
    e >>= 1;
    if (e)
      base = base * base;
  }
  return result;
}

bool operator==(const Cyclotomic &a, const Cyclotomic &b)
{
  if (a.is_zero() || b.is_zero())
    return a.is_zero() && b.is_zero();
  if (a.order() == b.order())
    return a.c_ == b.c_;
  Aligned al;
  align(a, b, al);
  return al.a->c_ == al.b->c_;
}

std::complex<long double> Cyclotomic::approx() const
{
  long double re = 0, im = 0;
  int n = order();
  for (std::size_t e = 0; e < c_.size(); ++e) {
    if (c_[e].is_zero())
      continue;
    long double v = c_[e].to_long_double();
    long double t = 2 * kPi * static_cast<long double>(e) / n;
    re += v * std::cos(t);
    im += v * std::sin(t);
  }
  return {re, im};
}

std::string Cyclotomic::to_string() const
{
  Cyclotomic r = reduced();
  std::string out = "cyc(" + std::to_string(r.order()) + "):[";
  bool first = true;
  for (std::size_t e = 0; e < r.c_.size(); ++e) {
    if (r.c_[e].is_zero())
      continue;
    if (!first)
      out += ",";
    first = false;
    out += std::to_string(e) + ":" + r.c_[e].numerator_string() + "/" + r.c_[e].denominator_string();
  }
  out += "]";
  return out;
}

std::string Cyclotomic::pretty() const
{
  Cyclotomic r = reduced();
  std::string out;
  for (std::size_t e = 0; e < r.c_.size(); ++e) {
    const Rational &c = r.c_[e];
    if (c.is_zero())
      continue;
    std::string coeff = c.to_string();
    bool negative = coeff[0] == '-';
    if (negative)
      coeff.erase(0, 1);
    out += negative ? "-" : (out.empty() ? "" : "+");
    if (e == 0) {
      out += coeff;
      continue;
    }
    if (coeff != "1")
      out += coeff + "*";
    out += "E(" + std::to_string(r.order()) + ")";
    if (e > 1)
      out += "^" + std::to_string(e);
  }
  return out.empty() ? "0" : out;
}

Cyclotomic Cyclotomic::parse(std::string_view text)
{
  auto fail = [&]() { return Error(ErrorCode::ParseError, "bad cyclotomic '" + std::string(text) + "'"); };
  if (text.substr(0, 4) != "cyc(")
    throw fail();
  auto close = text.find("):[");
  if (close == std::string_view::npos || text.back() != ']')
    throw fail();
  int n = 0;
  for (char ch : text.substr(4, close - 4)) {
    if (ch < '0' || ch > '9' || n > 1000000)
      throw fail();
    n = n * 10 + (ch - '0');
  }
  if (n < 1)
    throw fail();
  std::string_view body = text.substr(close + 3, text.size() - close - 4);
  std::vector<std::pair<std::int64_t, Rational>> terms;
  while (!body.empty()) {
    auto comma = body.find(',');
    std::string_view item = body.substr(0, comma);
    auto colon = item.find(':');
    if (colon == std::string_view::npos || colon == 0)
      throw fail();
    std::int64_t e = 0;
    for (char ch : item.substr(0, colon)) {
      if (ch < '0' || ch > '9')
        throw fail();
      e = e * 10 + (ch - '0');
      if (e > 1000000)
        throw fail();
    }
    terms.emplace_back(e, Rational::parse(item.substr(colon + 1)));
    if (comma == std::string_view::npos)
      break;
    body = body.substr(comma + 1);
    if (body.empty())
      throw fail();
  }
  return from_terms(n, terms);
}

void Cyclotomic::append_key(std::string &out) const
{
  if (c_.empty()) {
    out.push_back('z');
    return;
  }
  out.push_back('c');
  for (const auto &r : c_)
    r.append_key(out);
}

int compare(const Cyclotomic &a, const Cyclotomic &b)
{
  Cyclotomic ra = a.reduced(), rb = b.reduced();
  if (ra.order() != rb.order())
    return ra.order() < rb.order() ? -1 : 1;
  const auto &x = ra.coeffs();
  const auto &y = rb.coeffs();
  if (x.size() != y.size())
    return x.size() < y.size() ? -1 : 1;
  for (std::size_t i = 0; i < x.size(); ++i) {
    auto c = x[i] <=> y[i];
    if (c != 0)
      return c < 0 ? -1 : 1;
  }
  return 0;
}

int common_order(const std::vector<Cyclotomic> &values)
{
  std::int64_t m = 1;
  for (const auto &v : values)
    m = lcm64(m, v.order());
  return static_cast<int>(m);
}

} // namespace sympres
