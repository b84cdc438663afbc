#include "socs/rational.hpp"

#include <cctype>
#include <ostream>

#include "socs/errors.hpp"

namespace socs {

namespace {

mpq_class make_canonical(const mpz_class& num, const mpz_class& den) {
  if (den == 0) {
    throw ValidationError("rational denominator must be nonzero");
  }
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace

Rat::Rat(long num, long den) : v_(make_canonical(mpz_class(num), mpz_class(den))) {}

Rat::Rat(const mpz_class& num, const mpz_class& den) : v_(make_canonical(num, den)) {}

Rat Rat::parse(const std::string& text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  auto digits = [&](std::string& out) {
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      out.push_back(text[i]);
      ++i;
    }
    return i > start;
  };

  std::string whole;
  if (!digits(whole)) {
    throw ValidationError("invalid rational '" + text + "'");
  }

  mpz_class num;
  mpz_class den = 1;
  if (i < text.size() && text[i] == '/') {
    ++i;
    std::string d;
    if (!digits(d) || i != text.size()) {
      throw ValidationError("invalid rational '" + text + "'");
    }
    num = mpz_class(whole, 10);
    den = mpz_class(d, 10);
    if (den == 0) {
      throw ValidationError("invalid rational '" + text + "': zero denominator");
    }
  } else if (i < text.size() && text[i] == '.') {
    ++i;
    std::string frac;
    if (!digits(frac) || i != text.size()) {
      throw ValidationError("invalid rational '" + text + "'");
    }
    num = mpz_class(whole + frac, 10);
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
  } else if (i == text.size()) {
    num = mpz_class(whole, 10);
  } else {
    throw ValidationError("invalid rational '" + text + "'");
  }

  if (negative) {
    num = -num;
  }
  return Rat(num, den);
}

Rat operator/(const Rat& a, const Rat& b) {
  if (b.v_ == 0) {
    throw ValidationError("division by zero");
  }
  return Rat(mpq_class(a.v_ / b.v_));
}

Rat& Rat::operator/=(const Rat& b) {
  if (b.v_ == 0) {
    throw ValidationError("division by zero");
  }
  v_ /= b.v_;
  return *this;
}

mpz_class Rat::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
  return q;
}

mpz_class Rat::ceil() const {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
  return q;
}

namespace {

long narrow(const mpz_class& z) {
  if (!z.fits_slong_p()) {
    throw ValidationError("integer value out of range: " + z.get_str());
  }
  return z.get_si();
}

}  // namespace

long Rat::floor_long() const { return narrow(floor()); }

long Rat::ceil_long() const { return narrow(ceil()); }

std::string Rat::str() const {
  if (is_integer()) {
    return v_.get_num().get_str();
  }
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Rat reduce_mod(const Rat& x, const Rat& modulus) {
  if (modulus <= Rat(0)) {
    throw ValidationError("modulus must be positive");
  }
  Rat r = x - modulus * Rat((x / modulus).floor());
  return r;
}

}  // namespace socs
