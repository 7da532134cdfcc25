#include "brb/scalar.hpp"

#include <cctype>
#include <ostream>

namespace brb
{

Scalar::Scalar(long num, long den)
{
  if (den == 0)
    throw std::domain_error("zero denominator");
  re_ = mpq_class(num, den);
  re_.canonicalize();
}

Scalar::Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im))
{
  re_.canonicalize();
  im_.canonicalize();
}

Scalar& Scalar::operator+=(const Scalar& o)
{
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o)
{
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o)
{
  if (is_real() && o.is_real()) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar Scalar::inverse() const
{
  if (is_zero())
    throw std::domain_error("division by zero");
  if (is_real())
    return Scalar(1 / re_);
  mpq_class n = norm();
  return Scalar(re_ / n, -im_ / n);
}

Scalar& Scalar::operator/=(const Scalar& o)
{
  if (o.is_zero())
    throw std::domain_error("division by zero");
  if (o.is_real()) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

void Scalar::add_product(const Scalar& a, const Scalar& b)
{
  if (a.is_zero() || b.is_zero())
    return;
  if (a.is_real() && b.is_real()) {
    re_ += a.re_ * b.re_;
    return;
  }
  re_ += a.re_ * b.re_ - a.im_ * b.im_;
  im_ += a.re_ * b.im_ + a.im_ * b.re_;
}

std::string Scalar::to_string() const
{
  if (is_zero())
    return "0";
  std::string out;
  if (sgn(re_) != 0)
    out = re_.get_str();
  if (sgn(im_) != 0) {
    mpq_class mag = abs(im_);
    if (sgn(im_) < 0)
      out += '-';
    else if (!out.empty())
      out += '+';
    if (mag != 1)
      out += mag.get_str();
    out += 'i';
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

namespace
{

struct Cursor
{
  std::string_view text;
  std::size_t pos = 0;

  bool done() const { return pos == text.size(); }
  char peek() const { return done() ? '\0' : text[pos]; }
};

[[noreturn]] void fail(std::string_view text, const char* why)
{
  throw ParseError("malformed scalar '" + std::string(text) + "': " + why);
}

std::string take_digits(Cursor& c)
{
  std::size_t start = c.pos;
  while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek())))
    ++c.pos;
  return std::string(c.text.substr(start, c.pos - start));
}

bool at_rational(const Cursor& c) { return std::isdigit(static_cast<unsigned char>(c.peek())) != 0; }

// int ("/" posint)?
mpq_class take_rational(Cursor& c)
{
  mpz_class num(take_digits(c), 10);
  mpz_class den = 1;
  if (c.peek() == '/') {
    ++c.pos;
    std::string d = take_digits(c);
    if (d.empty())
      fail(c.text, "missing denominator");
    den = mpz_class(d, 10);
    if (den == 0)
      fail(c.text, "zero denominator");
  }
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

int take_sign(Cursor& c)
{
  if (c.peek() == '+' || c.peek() == '-')
    return c.text[c.pos++] == '-' ? -1 : 1;
  return 0;
}

} // namespace

Scalar Scalar::parse(std::string_view text)
{
  Cursor c{text};
  if (text.empty())
    fail(text, "empty");

  int s1 = take_sign(c);
  mpq_class first = 1;
  bool have_first = false;
  if (at_rational(c)) {
    first = take_rational(c);
    have_first = true;
  }
  if (c.peek() == 'i') {
    ++c.pos;
    if (!c.done())
      fail(text, "trailing characters");
    return Scalar(0, s1 < 0 ? mpq_class(-first) : first);
  }
  if (!have_first)
    fail(text, "expected a number");
  mpq_class re = s1 < 0 ? mpq_class(-first) : first;
  if (c.done())
    return Scalar(re);

  int s2 = take_sign(c);
  if (s2 == 0)
    fail(text, "expected '+' or '-'");
  mpq_class second = 1;
  if (at_rational(c))
    second = take_rational(c);
  if (c.peek() != 'i')
    fail(text, "expected 'i'");
  ++c.pos;
  if (!c.done())
    fail(text, "trailing characters");
  return Scalar(re, s2 < 0 ? mpq_class(-second) : second);
}

} // namespace brb
