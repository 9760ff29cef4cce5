#include "sympres/exactnum/rational.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstring>
#include <limits>

#include "sympres/error.hpp"

namespace sympres {

namespace mp = boost::multiprecision;

struct BigRational {
  mp::cpp_rational value;
};

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();
constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

u128 gcd_u128(u128 a, u128 b)
{
  while (b != 0) {
    // Drop to 64-bit Euclid as soon as both operands fit.
    if ((a >> 64) == 0 && (b >> 64) == 0) {
      std::uint64_t x = static_cast<std::uint64_t>(a);
      std::uint64_t y = static_cast<std::uint64_t>(b);
      while (y != 0) {
        std::uint64_t t = x % y;
        x = y;
        y = t;
      }
      return x;
    }
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b)
{
  while (b != 0) {
    std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::uint64_t abs_u64(std::int64_t v)
{
  return v < 0 ? std::uint64_t(0) - static_cast<std::uint64_t>(v)
               : static_cast<std::uint64_t>(v);
}

bool fits(i128 v) { return v > kMin && v <= kMax; }

mp::cpp_int to_cpp_int(i128 v)
{
  bool neg = v < 0;
  u128 u = neg ? u128(0) - static_cast<u128>(v) : static_cast<u128>(v);
  mp::cpp_int r = static_cast<std::uint64_t>(u >> 64);
  r <<= 64;
  r += static_cast<std::uint64_t>(u);
  return neg ? mp::cpp_int(-r) : r;
}

} // namespace

struct RationalOps {
  static Rational from_big(mp::cpp_rational v)
  {
    Rational r;
    const auto &n = mp::numerator(v);
    const auto &d = mp::denominator(v);
    if (n > kMin && n <= kMax && d <= kMax) {
      r.num_ = static_cast<std::int64_t>(n);
      r.den_ = static_cast<std::int64_t>(d);
      return r;
    }
    r.num_ = 0;
    r.den_ = 0;
    r.big_ = std::make_shared<const BigRational>(BigRational{std::move(v)});
    return r;
  }

  static mp::cpp_rational to_big(const Rational &a)
  {
    if (a.big_)
      return a.big_->value;
    return mp::cpp_rational(mp::cpp_int(a.num_), mp::cpp_int(a.den_));
  }

  // n/d with d > 0, not necessarily reduced.
  static Rational from_i128(i128 n, i128 d)
  {
    if (n == 0)
      return Rational();
    u128 un = n < 0 ? u128(0) - static_cast<u128>(n) : static_cast<u128>(n);
    u128 g = gcd_u128(un, static_cast<u128>(d));
    if (g != 1) {
      n /= static_cast<i128>(g);
      d /= static_cast<i128>(g);
    }
    if (fits(n) && fits(d)) {
      Rational r;
      r.num_ = static_cast<std::int64_t>(n);
      r.den_ = static_cast<std::int64_t>(d);
      return r;
    }
    return from_big(mp::cpp_rational(to_cpp_int(n), to_cpp_int(d)));
  }

  static Rational add(const Rational &a, const Rational &b, bool negate_b)
  {
    if (!a.big_ && !b.big_) {
      std::int64_t bn = b.num_;
      if (negate_b)
        bn = -bn; // safe: INT64_MIN never stored inline
      if (a.den_ == 1 && b.den_ == 1) {
        std::int64_t s;
        if (!__builtin_add_overflow(a.num_, bn, &s) && s != kMin) {
          Rational r;
          r.num_ = s;
          return r;
        }
      }
      if (a.den_ == b.den_) {
        i128 n = static_cast<i128>(a.num_) + bn;
        return from_i128(n, a.den_);
      }
      i128 n = static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(bn) * a.den_;
      i128 d = static_cast<i128>(a.den_) * b.den_;
      return from_i128(n, d);
    }
    mp::cpp_rational x = to_big(a);
    mp::cpp_rational y = to_big(b);
    return from_big(negate_b ? mp::cpp_rational(x - y) : mp::cpp_rational(x + y));
  }

  static Rational mul(const Rational &a, const Rational &b)
  {
    if (!a.big_ && !b.big_) {
      if (a.num_ == 0 || b.num_ == 0)
        return Rational();
      std::int64_t an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
      if (ad != 1 || bd != 1) {
        std::int64_t g1 = static_cast<std::int64_t>(gcd_u64(abs_u64(an), static_cast<std::uint64_t>(bd)));
        std::int64_t g2 = static_cast<std::int64_t>(gcd_u64(abs_u64(bn), static_cast<std::uint64_t>(ad)));
        an /= g1;
        bd /= g1;
        bn /= g2;
        ad /= g2;
      }
      std::int64_t n, d;
      if (!__builtin_mul_overflow(an, bn, &n) && !__builtin_mul_overflow(ad, bd, &d) && n != kMin) {
        Rational r;
        r.num_ = n;
        r.den_ = d;
        return r;
      }
      return from_big(mp::cpp_rational(to_cpp_int(static_cast<i128>(an) * bn),
                                       to_cpp_int(static_cast<i128>(ad) * bd)));
    }
    return from_big(to_big(a) * to_big(b));
  }
};

Rational::Rational(std::int64_t n, std::int64_t d)
{
  if (d == 0)
    throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
  i128 nn = n, dd = d;
  if (dd < 0) {
    nn = -nn;
    dd = -dd;
  }
  *this = RationalOps::from_i128(nn, dd);
}

Rational Rational::fraction(__int128 n, __int128 d)
{
  if (d == 0)
    throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
  if (d < 0) {
    // Negating the 128-bit minimum is undefined; route through the big path.
    if (n == std::numeric_limits<i128>::min() || d == std::numeric_limits<i128>::min())
      return RationalOps::from_big(mp::cpp_rational(to_cpp_int(n), to_cpp_int(d)));
    n = -n;
    d = -d;
  }
  return RationalOps::from_i128(n, d);
}

void Rational::promote_min()
{
  *this = RationalOps::from_big(mp::cpp_rational(mp::cpp_int(num_)));
}

Rational Rational::parse(std::string_view text)
{
  std::string s(text);
  auto slash = s.find('/');
  try {
    auto check = [&](const std::string &part, bool allow_sign) {
      std::size_t i = 0;
      if (allow_sign && !part.empty() && part[0] == '-')
        i = 1;
      if (i >= part.size())
        throw Error(ErrorCode::ParseError, "bad rational '" + s + "'");
      for (; i < part.size(); ++i)
        if (part[i] < '0' || part[i] > '9')
          throw Error(ErrorCode::ParseError, "bad rational '" + s + "'");
    };
    if (slash == std::string::npos) {
      check(s, true);
      return RationalOps::from_big(mp::cpp_rational(mp::cpp_int(s)));
    }
    std::string ns = s.substr(0, slash), ds = s.substr(slash + 1);
    check(ns, true);
    check(ds, false);
    mp::cpp_int d(ds);
    if (d == 0)
      throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
    return RationalOps::from_big(mp::cpp_rational(mp::cpp_int(ns), d));
  } catch (const Error &) {
    throw;
  } catch (const std::exception &) {
    throw Error(ErrorCode::ParseError, "bad rational '" + s + "'");
  }
}

bool Rational::is_integer() const noexcept
{
  if (big_)
    return mp::denominator(big_->value) == 1;
  return den_ == 1;
}

int Rational::sign() const noexcept
{
  if (big_)
    return big_->value.sign();
  return (num_ > 0) - (num_ < 0);
}

std::string Rational::to_string() const
{
  if (big_)
    return big_->value.str();
  if (den_ == 1)
    return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Rational::numerator_string() const
{
  return big_ ? mp::numerator(big_->value).str() : std::to_string(num_);
}

std::string Rational::denominator_string() const
{
  return big_ ? mp::denominator(big_->value).str() : std::to_string(den_);
}

long double Rational::to_long_double() const
{
  if (big_) {
    // Scale both parts down together so neither overflows long double.
    mp::cpp_int n = mp::numerator(big_->value);
    mp::cpp_int d = mp::denominator(big_->value);
    std::size_t bits = std::max(mp::msb(mp::abs(n)), mp::msb(d));
    if (bits > 16000) {
      std::size_t shift = bits - 16000;
      n >>= shift;
      d >>= shift;
      if (d == 0)
        return n.sign() * std::numeric_limits<long double>::infinity();
    }
    return n.convert_to<long double>() / d.convert_to<long double>();
  }
  return static_cast<long double>(num_) / static_cast<long double>(den_);
}

Rational Rational::operator-() const
{
  if (big_)
    return RationalOps::from_big(-big_->value);
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational Rational::reciprocal() const
{
  if (is_zero())
    throw Error(ErrorCode::DivisionByZero, "reciprocal of zero");
  if (big_)
    return RationalOps::from_big(mp::cpp_rational(1) / big_->value);
  Rational r;
  if (num_ < 0) {
    r.num_ = -den_;
    r.den_ = -num_;
  } else {
    r.num_ = den_;
    r.den_ = num_;
  }
  return r;
}

Rational operator+(const Rational &a, const Rational &b) { return RationalOps::add(a, b, false); }
Rational operator-(const Rational &a, const Rational &b) { return RationalOps::add(a, b, true); }
Rational operator*(const Rational &a, const Rational &b) { return RationalOps::mul(a, b); }

Rational operator/(const Rational &a, const Rational &b)
{
  return RationalOps::mul(a, b.reciprocal());
}

bool operator==(const Rational &a, const Rational &b)
{
  if (!a.big_ && !b.big_)
    return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_)
    return a.big_->value == b.big_->value;
  return false; // canonical forms differ in representation only if values differ
}

std::strong_ordering operator<=>(const Rational &a, const Rational &b)
{
  if (!a.big_ && !b.big_) {
    i128 l = static_cast<i128>(a.num_) * b.den_;
    i128 r = static_cast<i128>(b.num_) * a.den_;
    return l <=> r;
  }
  auto x = RationalOps::to_big(a), y = RationalOps::to_big(b);
  if (x < y)
    return std::strong_ordering::less;
  if (x > y)
    return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

void Rational::append_key(std::string &out) const
{
  if (!big_) {
    char buf[17];
    buf[0] = 'q';
    std::memcpy(buf + 1, &num_, 8);
    std::memcpy(buf + 9, &den_, 8);
    out.append(buf, 17);
    return;
  }
  out.push_back('Q');
  out += big_->value.str();
  out.push_back(';');
}

} // namespace sympres
