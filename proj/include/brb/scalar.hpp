#ifndef BRB_SCALAR_HPP
#define BRB_SCALAR_HPP

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace brb
{

/// Raised for malformed numeric or file input.
class ParseError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Element of the Gaussian rationals Q(i): re + im*i with exact rational parts.
///
/// Both parts are kept in GMP canonical form (coprime, positive denominator),
/// so structural equality is field equality. Text form:
///   "0", "1/2", "-3", "i", "-i", "2/5i", "-3+2/5i", "1-i".
class Scalar
{
public:
  Scalar() = default;
  Scalar(long value) : re_(value) {}
  Scalar(long num, long den);
  Scalar(mpq_class re, mpq_class im = 0);

  static Scalar i() { return Scalar(0, mpq_class(1)); }

  /// Parses the canonical grammar; throws ParseError.
  static Scalar parse(std::string_view text);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  Scalar conj() const { return Scalar(re_, -im_); }
  /// re^2 + im^2
  mpq_class norm() const { return re_ * re_ + im_ * im_; }
  /// Throws std::domain_error on zero.
  Scalar inverse() const;

  std::string to_string() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  /// this += a * b without temporaries for the real case.
  void add_product(const Scalar& a, const Scalar& b);

  friend Scalar operator-(const Scalar& a) { return Scalar(-a.re_, -a.im_); }
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b)
  {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s);

private:
  mpq_class re_{0};
  mpq_class im_{0};
};

/// (-1)^(a*b) for parity bits.
inline Scalar graded_sign(bool a, bool b) { return (a && b) ? Scalar(-1) : Scalar(1); }

} // namespace brb

#endif
