#ifndef SYMPRES_EXACTNUM_RATIONAL_HPP
#define SYMPRES_EXACTNUM_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

namespace sympres {

struct BigRational;

/// Arbitrary precision rational number in lowest terms.
///
/// Values whose numerator and denominator fit in a signed 64-bit word are
/// stored inline; everything else lives in a shared immutable big-integer
/// representation. Every operation re-normalizes, so a value that shrinks
/// back into range is demoted to the inline form and equality is always
/// structural.
class Rational {
public:
  Rational() = default;
  Rational(std::int64_t n) : num_(n) { if (n == INT64_MIN) promote_min(); }
  Rational(std::int64_t n, std::int64_t d);

  /// n/d for 128-bit inputs; d must be nonzero.
  static Rational fraction(__int128 n, __int128 d);

  /// Parses "p", "-p" or "p/q" with arbitrary length digits.
  static Rational parse(std::string_view text);

  bool is_zero() const noexcept { return !big_ && num_ == 0; }
  bool is_one() const noexcept { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const noexcept;
  bool is_small() const noexcept { return !big_; }
  int sign() const noexcept;

  // Only meaningful when is_small().
  std::int64_t small_num() const noexcept { return num_; }
  std::int64_t small_den() const noexcept { return den_; }

  std::string to_string() const;
  /// Numerator and denominator as decimal strings.
  std::string numerator_string() const;
  std::string denominator_string() const;
  long double to_long_double() const;
  double to_double() const { return static_cast<double>(to_long_double()); }

  Rational operator-() const;
  Rational reciprocal() const;

  friend Rational operator+(const Rational &a, const Rational &b);
  friend Rational operator-(const Rational &a, const Rational &b);
  friend Rational operator*(const Rational &a, const Rational &b);
  friend Rational operator/(const Rational &a, const Rational &b);

  Rational &operator+=(const Rational &b) { return *this = *this + b; }
  Rational &operator-=(const Rational &b) { return *this = *this - b; }
  Rational &operator*=(const Rational &b) { return *this = *this * b; }
  Rational &operator/=(const Rational &b) { return *this = *this / b; }

  friend bool operator==(const Rational &a, const Rational &b);
  friend std::strong_ordering operator<=>(const Rational &a, const Rational &b);

  /// Appends a compact, injective byte encoding (used for hashing keys).
  void append_key(std::string &out) const;

private:
  friend struct RationalOps;

  void promote_min();

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const BigRational> big_;
};

} // namespace sympres

#endif // SYMPRES_EXACTNUM_RATIONAL_HPP
