#ifndef SAMUEL_SAMUEL_FUNCTION_HPP
#define SAMUEL_SAMUEL_FUNCTION_HPP

#include <optional>
#include <string>
#include <vector>

#include "samuel/transversal.hpp"

namespace samuel {

enum class Route { Hickel, Oracle, RegularLocal };
std::string route_name(Route r);

enum class Strategy { Auto, Hickel, Oracle };
Strategy strategy_from_name(const std::string& name);

struct OrderCertificate {
  OrderValue value;
  Route route = Route::Oracle;
  bool certified = false;
  // Hickel witness: the minimizing index and the coefficient order.
  std::optional<int> witness_index;
  std::optional<OrderValue> witness_coeff_order;
  long charpoly_degree = 0;
  // Oracle witness: the power achieving the best bound.
  std::optional<int> witness_n;
  std::vector<OracleRow> oracle_rows;
  std::vector<std::string> notes;

  std::string witness_str() const;
};

struct SamuelOptions {
  int nmax = kDefaultOracleDepth;
  int cap = kDefaultOrderCap;
};

struct FrameSpec {
  enum class Kind { None, Search, Explicit };
  Kind kind = Kind::None;
  std::vector<std::string> base;
  std::vector<std::string> fiber;

  static FrameSpec none() { return {}; }
  static FrameSpec search() {
    FrameSpec s;
    s.kind = Kind::Search;
    return s;
  }
  static FrameSpec explicit_split(std::vector<std::string> base,
                                  std::vector<std::string> fiber) {
    FrameSpec s;
    s.kind = Kind::Explicit;
    s.base = std::move(base);
    s.fiber = std::move(fiber);
    return s;
  }
};

// ν̄ through Hickel's formula: min_i ν_q(a_i)/i over the coefficients of the
// characteristic polynomial of g in the frame. Prime centers require the
// frame to be transversal there.
OrderCertificate hickel_order(const TransversalFrame& F, const Polynomial& g,
                              const Center& c);

// Strategy dispatcher for ν̄ at a center. "auto" prefers the regular-local
// shortcut (multiplicity one), then a frame, then falls back to the oracle
// with an explicit non-certified marker.
OrderCertificate samuel_order(const LocalRingPresentation& P,
                              const Polynomial& g, const Center& c,
                              Strategy strategy = Strategy::Auto,
                              const FrameSpec& frame = FrameSpec::none(),
                              const SamuelOptions& opts = {});

// ν̄_p without localizing: the limit estimate over the filtration p^a + I.
// Certified (equal to the localized value) exactly when the multiplicity at
// the prime matches the multiplicity at the origin.
OrderCertificate samuel_order_nonlocalized_at_prime(
    const LocalRingPresentation& P, const Polynomial& g, const Center& prime,
    const FrameSpec& frame = FrameSpec::none(), const SamuelOptions& opts = {});

// Shared helper: obtain a frame per the spec, or nullopt when the strategy
// allows falling back (errors propagate for explicit requests).
std::optional<TransversalFrame> acquire_frame(const LocalRingPresentation& P,
                                              const FrameSpec& spec,
                                              bool allow_failure,
                                              std::vector<std::string>* notes);

}  // namespace samuel

#endif
