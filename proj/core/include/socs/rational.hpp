#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace socs {

/// Exact rational scalar. Every coordinate, length, and proportion in the
/// library is a Rat; there is no floating point anywhere in the computation
/// path. Stored normalized: positive denominator, gcd(|num|, den) = 1.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(int n) : v_(n) {}                // NOLINT: implicit by design
  Rat(long n) : v_(n) {}               // NOLINT
  explicit Rat(const mpz_class& n) : v_(n) {}

  /// num/den, normalized. Throws ValidationError if den == 0.
  Rat(long num, long den);
  Rat(const mpz_class& num, const mpz_class& den);

  /// Accepts "p", "p/q", or a decimal string such as "-0.25" (converted
  /// exactly). Throws ValidationError on anything else.
  static Rat parse(const std::string& text);

  const mpz_class num() const { return v_.get_num(); }
  const mpz_class den() const { return v_.get_den(); }

  bool is_integer() const { return v_.get_den() == 1; }

  /// Largest integer <= value / smallest integer >= value.
  mpz_class floor() const;
  mpz_class ceil() const;

  /// floor()/ceil() narrowed to long. Throws ValidationError on overflow.
  long floor_long() const;
  long ceil_long() const;

  /// Canonical text form: "p" when the value is an integer, "p/q" otherwise.
  std::string str() const;

  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ + b.v_)); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ - b.v_)); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ * b.v_)); }
  friend Rat operator/(const Rat& a, const Rat& b);
  friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.v_)); }

  Rat& operator+=(const Rat& b) { v_ += b.v_; return *this; }
  Rat& operator-=(const Rat& b) { v_ -= b.v_; return *this; }
  Rat& operator*=(const Rat& b) { v_ *= b.v_; return *this; }
  Rat& operator/=(const Rat& b);

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r);

  /// Display-only approximation; never used in computations.
  double approx() const { return v_.get_d(); }

 private:
  explicit Rat(mpq_class v) : v_(std::move(v)) {}

  mpq_class v_;
};

/// x reduced into [0, modulus). Requires modulus > 0.
Rat reduce_mod(const Rat& x, const Rat& modulus);

}  // namespace socs
