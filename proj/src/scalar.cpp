#include "samuel/scalar.hpp"

namespace samuel {

bool is_prime_number(unsigned long n) {
  if (n < 2) return false;
  mpz_class z(static_cast<unsigned long>(n));
  // 2 = "definitely prime" or "probably prime"; exact for desk-scale inputs.
  return mpz_probab_prime_p(z.get_mpz_t(), 32) > 0;
}

FieldSpec FieldSpec::prime_field(unsigned long p) {
  if (!is_prime_number(p))
    throw Error(ErrorCode::Parse, std::to_string(p) + " is not a prime");
  return FieldSpec{p};
}

std::string FieldSpec::str() const {
  return is_prime_field() ? "F" + std::to_string(characteristic) : "Q";
}

Scalar::Scalar(FieldSpec f, long n) : field_(f), value_(n) { canonicalize_(); }

Scalar::Scalar(FieldSpec f, const mpz_class& n) : field_(f), value_(n) {
  canonicalize_();
}

Scalar::Scalar(FieldSpec f, const mpq_class& q) : field_(f), value_(q) {
  value_.canonicalize();
  if (field_.is_prime_field() && value_.get_den() != 1) {
    // n/d with gcd(d, p) = 1 reduces to n * d^{-1} mod p.
    Scalar den(f, mpz_class(value_.get_den()));
    Scalar num(f, mpz_class(value_.get_num()));
    value_ = (num * den.inverse()).value_;
  }
  canonicalize_();
}

void Scalar::canonicalize_() {
  value_.canonicalize();
  if (field_.is_prime_field()) {
    mpz_class p(field_.characteristic);
    mpz_class r = value_.get_num() % p;
    if (r < 0) r += p;
    value_ = r;
  }
}

void Scalar::require_same_field_(const Scalar& o) const {
  if (!(field_ == o.field_))
    throw Error(ErrorCode::BadArgument,
                "scalar arithmetic across different fields (" + field_.str() +
                    " vs " + o.field_.str() + ")");
}

Scalar Scalar::operator-() const {
  Scalar r(field_);
  r.value_ = -value_;
  r.canonicalize_();
  return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
  require_same_field_(o);
  Scalar r(field_);
  r.value_ = value_ + o.value_;
  r.canonicalize_();
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  require_same_field_(o);
  Scalar r(field_);
  r.value_ = value_ * o.value_;
  r.canonicalize_();
  return r;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::BadArgument, "division by zero");
  Scalar r(field_);
  if (field_.is_prime_field()) {
    mpz_class p(field_.characteristic), inv;
    if (mpz_invert(inv.get_mpz_t(), value_.get_num().get_mpz_t(),
                   p.get_mpz_t()) == 0)
      throw Error(ErrorCode::Internal, "non-invertible residue");
    r.value_ = inv;
  } else {
    r.value_ = 1 / value_;
  }
  r.canonicalize_();
  return r;
}

Scalar Scalar::pow(unsigned long e) const {
  Scalar acc = Scalar::one(field_);
  Scalar b = *this;
  while (e > 0) {
    if (e & 1) acc = acc * b;
    b = b * b;
    e >>= 1;
  }
  return acc;
}

bool Scalar::operator==(const Scalar& o) const {
  return field_ == o.field_ && value_ == o.value_;
}

std::string Scalar::str() const { return value_.get_str(); }

}  // namespace samuel
