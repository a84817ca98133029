#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace elemop {

/// Exact element of Q(i): re + im*i with both parts kept canonical
/// (coprime numerator/denominator, positive denominator).
class GaussianRational {
public:
  GaussianRational() = default;
  GaussianRational(long re) : re_(re) {} // NOLINT(google-explicit-constructor)
  GaussianRational(mpq_class re, mpq_class im = 0);

  /// re_num/re_den + (im_num/im_den) i
  static GaussianRational from_parts(long re_num, long re_den, long im_num = 0,
                                     long im_den = 1);

  /// Accepts "p", "p/q", "p/q+r/s*i", "p/q-r/s*i", "r/s*i", "i", "-i", "2i",
  /// surrounding and interior whitespace. Throws ParseError.
  static GaussianRational parse(std::string_view text);

  /// Canonical whitespace-free form: "p/q" when real, "p/q+r/s*i" otherwise.
  std::string str() const;

  const mpq_class &re() const { return re_; }
  const mpq_class &im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  /// Throws std::domain_error on zero.
  GaussianRational inverse() const;

  GaussianRational &operator+=(const GaussianRational &o);
  GaussianRational &operator-=(const GaussianRational &o);
  GaussianRational &operator*=(const GaussianRational &o);
  GaussianRational &operator/=(const GaussianRational &o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational &b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational &b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational &b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational &b) { return a /= b; }
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussianRational &a, const GaussianRational &b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  friend std::ostream &operator<<(std::ostream &os, const GaussianRational &z) {
    return os << z.str();
  }

private:
  mpq_class re_{0};
  mpq_class im_{0};
};

/// True when numerator and denominator are coprime and the denominator is positive.
bool is_canonical(const mpq_class &q);

} // namespace elemop
