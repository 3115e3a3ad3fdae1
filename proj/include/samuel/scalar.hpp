#ifndef SAMUEL_SCALAR_HPP
#define SAMUEL_SCALAR_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace samuel {

enum class ErrorCode {
  Parse,
  BadArgument,
  NotOnVariety,
  NotSquarefree,
  SearchExhausted,
  NotTransversal,
  CapExceeded,
  Unsupported,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(msg), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

bool is_prime_number(unsigned long n);

// Coefficient field: the rationals (characteristic 0) or F_p for a prime p.
struct FieldSpec {
  unsigned long characteristic = 0;

  static FieldSpec rationals() { return FieldSpec{0}; }
  static FieldSpec prime_field(unsigned long p);

  bool is_prime_field() const { return characteristic != 0; }
  bool operator==(const FieldSpec&) const = default;
  std::string str() const;
};

// Exact field element. Over Q the value is an arbitrary-precision rational;
// over F_p it is kept as the least residue 0..p-1.
class Scalar {
 public:
  Scalar() = default;  // zero over Q; containers only
  explicit Scalar(FieldSpec f) : field_(f) {}
  Scalar(FieldSpec f, long n);
  Scalar(FieldSpec f, const mpz_class& n);
  Scalar(FieldSpec f, const mpq_class& q);

  static Scalar zero(FieldSpec f) { return Scalar(f); }
  static Scalar one(FieldSpec f) { return Scalar(f, 1); }

  const FieldSpec& field() const { return field_; }
  bool is_zero() const { return value_ == 0; }
  bool is_one() const { return value_ == 1; }

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar inverse() const;
  Scalar pow(unsigned long e) const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  const mpq_class& value() const { return value_; }
  std::string str() const;

 private:
  FieldSpec field_{};
  mpq_class value_{0};

  void canonicalize_();
  void require_same_field_(const Scalar& o) const;
};

}  // namespace samuel

#endif
