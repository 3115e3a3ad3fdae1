#include "samuel/order_value.hpp"

namespace samuel {

long OrderValue::to_long() const {
  if (!is_integer())
    throw Error(ErrorCode::Internal, "order value " + str() + " is not an integer");
  if (!v_.get_num().fits_slong_p())
    throw Error(ErrorCode::Internal, "order value does not fit a machine integer");
  return v_.get_num().get_si();
}

OrderValue OrderValue::operator+(const OrderValue& o) const {
  if (infinite_ || o.infinite_) return infinity();
  return OrderValue(v_ + o.v_);
}

OrderValue OrderValue::scaled(long k) const {
  if (infinite_) return infinity();
  return OrderValue(mpq_class(v_ * k));
}

OrderValue OrderValue::divided_by(long k) const {
  if (k <= 0) throw Error(ErrorCode::Internal, "division by non-positive integer");
  if (infinite_) return infinity();
  mpq_class q = v_ / k;
  return OrderValue(q);
}

std::string OrderValue::str() const {
  if (infinite_) return "inf";
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

}  // namespace samuel
