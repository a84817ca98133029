#include "elemop/gaussian_rational.hpp"
#include "elemop/error.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace elemop {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

// [+-]digits[/digits]
mpq_class parse_rational(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : s.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw ParseError("malformed scalar '" + std::string(whole) + "'");
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0)
    throw ParseError("zero denominator in scalar '" + std::string(whole) + "'");
  mpq_class q(negative ? mpz_class(-n) : n, d);
  q.canonicalize();
  return q;
}

std::string rational_str(const mpq_class &q) {
  return q.get_den() == 1 ? q.get_num().get_str() : q.get_str();
}

} // namespace

bool is_canonical(const mpq_class &q) {
  if (sgn(q.get_den()) <= 0)
    return false;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return g == 1;
}

GaussianRational::GaussianRational(mpq_class re, mpq_class im)
    : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational GaussianRational::from_parts(long re_num, long re_den, long im_num, long im_den) {
  if (re_den == 0 || im_den == 0)
    throw std::domain_error("zero denominator");
  return {mpq_class(re_num, re_den), mpq_class(im_num, im_den)};
}

GaussianRational GaussianRational::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)))
      s.push_back(c);
  if (s.empty())
    throw ParseError("empty scalar");

  if (s.back() != 'i')
    return {parse_rational(s, text), 0};

  s.pop_back();
  if (!s.empty() && s.back() == '*')
    s.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t p = s.size(); p-- > 1;) {
    if (s[p] == '+' || s[p] == '-') {
      split = p;
      break;
    }
  }
  mpq_class re = 0;
  std::string coeff = s;
  if (split != std::string::npos) {
    re = parse_rational(std::string_view(s).substr(0, split), text);
    coeff = s.substr(split);
  }
  if (coeff.empty() || coeff == "+")
    return {re, 1};
  if (coeff == "-")
    return {re, -1};
  return {re, parse_rational(coeff, text)};
}

std::string GaussianRational::str() const {
  if (is_real())
    return rational_str(re_);
  std::string out = rational_str(re_);
  if (sgn(im_) > 0)
    out += '+';
  out += rational_str(im_);
  out += "*i";
  return out;
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero())
    throw std::domain_error("inverse of zero");
  mpq_class norm = re_ * re_ + im_ * im_;
  return {re_ / norm, -im_ / norm};
}

GaussianRational &GaussianRational::operator+=(const GaussianRational &o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational &GaussianRational::operator-=(const GaussianRational &o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational &GaussianRational::operator*=(const GaussianRational &o) {
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

GaussianRational &GaussianRational::operator/=(const GaussianRational &o) {
  if (o.is_real()) {
    if (sgn(o.re_) == 0)
      throw std::domain_error("division by zero");
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

} // namespace elemop
