#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <limits>
#include <memory>
#include <string>
#include <string_view>

#include "chevhopf/errors.hpp"

namespace chevhopf {

namespace detail {

using i128 = __int128;
using u128 = unsigned __int128;

inline u128 gcd_u128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline bool fits_i64(i128 v) {
  return v >= static_cast<i128>(std::numeric_limits<std::int64_t>::min()) &&
         v <= static_cast<i128>(std::numeric_limits<std::int64_t>::max());
}

inline mpz_class to_mpz(i128 v) {
  const bool neg = v < 0;
  u128 mag = neg ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(mag >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(mag)));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

}  // namespace detail

/// Exact rational in lowest terms with a positive denominator.
///
/// Values whose numerator and denominator fit in 64 bits are stored inline;
/// anything larger is promoted to a GMP rational and demoted again as soon as
/// it fits. The representation is canonical, so a promoted value never equals
/// an inline one.
class Rational {
 public:
  Rational() noexcept = default;
  Rational(std::int64_t n) noexcept : num_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
    assign_i128(n, d);
  }
  explicit Rational(const mpq_class& q) { assign_mpq(q); }

  Rational(const Rational& o)
      : num_(o.num_), den_(o.den_), big_(o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr) {}
  Rational(Rational&&) noexcept = default;
  Rational& operator=(const Rational& o) {
    if (this != &o) {
      num_ = o.num_;
      den_ = o.den_;
      big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
    }
    return *this;
  }
  Rational& operator=(Rational&&) noexcept = default;
  ~Rational() = default;

  /// Parses "p", "-p" or "p/q".
  static Rational parse(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw Error(ErrorCode::InvalidInput, "empty rational literal");
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw Error(ErrorCode::InvalidInput, "bad rational literal '" + s + "'");
    if (q.get_den() == 0) throw Error(ErrorCode::DivisionByZero, "rational literal '" + s + "'");
    q.canonicalize();
    return Rational(q);
  }

  bool is_zero() const noexcept { return !big_ && num_ == 0; }
  bool is_one() const noexcept { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }
  int sign() const { return big_ ? sgn(*big_) : (num_ > 0) - (num_ < 0); }
  bool is_small() const noexcept { return !big_; }

  mpz_class numerator() const { return big_ ? mpz_class(big_->get_num()) : mpz_class(static_cast<long>(num_)); }
  mpz_class denominator() const { return big_ ? mpz_class(big_->get_den()) : mpz_class(static_cast<long>(den_)); }

  mpq_class to_mpq() const {
    if (big_) return *big_;
    return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
  }

  std::string str() const {
    if (big_) return big_->get_str(10);
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  Rational operator-() const {
    if (!big_ && num_ != std::numeric_limits<std::int64_t>::min()) {
      Rational r;
      r.num_ = -num_;
      r.den_ = den_;
      return r;
    }
    return Rational(mpq_class(-to_mpq()));
  }

  Rational inverse() const {
    if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero rational");
    if (!big_) return Rational(den_, num_);
    return Rational(mpq_class(1 / *big_));
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      if (a.den_ == b.den_) {
        Rational r;
        r.assign_i128(static_cast<detail::i128>(a.num_) + b.num_, a.den_);
        return r;
      }
      Rational r;
      r.assign_i128(static_cast<detail::i128>(a.num_) * b.den_ + static_cast<detail::i128>(b.num_) * a.den_,
                    static_cast<detail::i128>(a.den_) * b.den_);
      return r;
    }
    return Rational(mpq_class(a.to_mpq() + b.to_mpq()));
  }

  friend Rational operator-(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      Rational r;
      r.assign_i128(static_cast<detail::i128>(a.num_) * b.den_ - static_cast<detail::i128>(b.num_) * a.den_,
                    static_cast<detail::i128>(a.den_) * b.den_);
      return r;
    }
    return Rational(mpq_class(a.to_mpq() - b.to_mpq()));
  }

  friend Rational operator*(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      if (a.num_ == 0 || b.num_ == 0) return Rational();
      Rational r;
      r.assign_i128(static_cast<detail::i128>(a.num_) * b.num_, static_cast<detail::i128>(a.den_) * b.den_);
      return r;
    }
    return Rational(mpq_class(a.to_mpq() * b.to_mpq()));
  }

  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational division by zero");
    if (!a.big_ && !b.big_) {
      Rational r;
      r.assign_i128(static_cast<detail::i128>(a.num_) * b.den_, static_cast<detail::i128>(a.den_) * b.num_);
      return r;
    }
    return Rational(mpq_class(a.to_mpq() / b.to_mpq()));
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;
  }

  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      const detail::i128 l = static_cast<detail::i128>(a.num_) * b.den_;
      const detail::i128 r = static_cast<detail::i128>(b.num_) * a.den_;
      return l <=> r;
    }
    const int c = cmp(a.to_mpq(), b.to_mpq());
    return c <=> 0;
  }

 private:
  void assign_i128(detail::i128 n, detail::i128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    if (n == 0) {
      num_ = 0;
      den_ = 1;
      big_.reset();
      return;
    }
    const detail::u128 mag = n < 0 ? static_cast<detail::u128>(-n) : static_cast<detail::u128>(n);
    const detail::u128 g = detail::gcd_u128(mag, static_cast<detail::u128>(d));
    if (g > 1) {
      n /= static_cast<detail::i128>(g);
      d /= static_cast<detail::i128>(g);
    }
    if (detail::fits_i64(n) && detail::fits_i64(d)) {
      num_ = static_cast<std::int64_t>(n);
      den_ = static_cast<std::int64_t>(d);
      big_.reset();
      return;
    }
    mpq_class q(detail::to_mpz(n), detail::to_mpz(d));
    big_ = std::make_unique<mpq_class>(std::move(q));
  }

  void assign_mpq(const mpq_class& q) {
    const mpz_class& n = q.get_num();
    const mpz_class& d = q.get_den();
    if (n.fits_slong_p() && d.fits_slong_p()) {
      num_ = n.get_si();
      den_ = d.get_si();
      big_.reset();
      return;
    }
    big_ = std::make_unique<mpq_class>(q);
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

}  // namespace chevhopf
