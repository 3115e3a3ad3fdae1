#ifndef SAMUEL_ORDER_VALUE_HPP
#define SAMUEL_ORDER_VALUE_HPP

#include <gmpxx.h>

#include <string>

#include "samuel/scalar.hpp"

namespace samuel {

// Non-negative rational order (exact) or the distinguished value infinity.
// Infinity is maximal and absorbing under addition.
class OrderValue {
 public:
  OrderValue() : infinite_(false), v_(0) {}

  static OrderValue infinity() {
    OrderValue r;
    r.infinite_ = true;
    return r;
  }
  static OrderValue integer(long n) { return OrderValue(mpq_class(n)); }
  static OrderValue ratio(long num, long den) {
    return OrderValue(mpq_class(num, den));
  }
  static OrderValue exact(const mpq_class& q) { return OrderValue(q); }

  bool is_infinite() const { return infinite_; }
  bool is_integer() const { return !infinite_ && v_.get_den() == 1; }
  bool is_zero() const { return !infinite_ && v_ == 0; }
  const mpq_class& value() const {
    if (infinite_)
      throw Error(ErrorCode::Internal, "no finite value for infinity");
    return v_;
  }
  mpz_class numerator() const { return value().get_num(); }
  mpz_class denominator() const { return value().get_den(); }
  long to_long() const;

  OrderValue operator+(const OrderValue& o) const;
  OrderValue scaled(long k) const;      // k * value
  OrderValue divided_by(long k) const;  // value / k

  bool operator==(const OrderValue& o) const {
    return infinite_ == o.infinite_ && (infinite_ || v_ == o.v_);
  }
  bool operator!=(const OrderValue& o) const { return !(*this == o); }
  bool operator<(const OrderValue& o) const {
    if (infinite_) return false;
    if (o.infinite_) return true;
    return v_ < o.v_;
  }
  bool operator<=(const OrderValue& o) const { return *this < o || *this == o; }
  bool operator>(const OrderValue& o) const { return o < *this; }
  bool operator>=(const OrderValue& o) const { return o <= *this; }

  static OrderValue min(const OrderValue& a, const OrderValue& b) {
    return a < b ? a : b;
  }
  static OrderValue max(const OrderValue& a, const OrderValue& b) {
    return a < b ? b : a;
  }

  // "a/b" in lowest terms, plain integer when b = 1, "inf" for infinity.
  std::string str() const;

 private:
  explicit OrderValue(const mpq_class& q) : infinite_(false), v_(q) {
    v_.canonicalize();
    if (v_ < 0)
      throw Error(ErrorCode::Internal, "negative order value");
  }

  bool infinite_;
  mpq_class v_;
};

}  // namespace samuel

#endif
