#include "samuel/slope.hpp"

#include <algorithm>
#include <sstream>

namespace samuel {

Polynomial WeightedForm::as_polynomial() const {
  Polynomial w = Polynomial::variable(ring, wvar);
  Polynomial out = w.pow((unsigned long)degree);
  for (long j = 1; j <= degree; ++j) {
    const Polynomial& A = components[(std::size_t)j - 1];
    if (A.is_zero()) continue;
    out = out + A * w.pow((unsigned long)(degree - j));
  }
  return out;
}

std::string WeightedForm::str() const { return as_polynomial().str(); }

WeightedForm weighted_initial_form(const Polynomial& chi, std::size_t wvar,
                                   const std::vector<std::size_t>& qvars) {
  long m = chi.degree_in(wvar);
  if (m <= 0)
    throw Error(ErrorCode::BadArgument, "expected a monic polynomial in w");
  Polynomial lc = chi.coeff_of_power(wvar, (unsigned)m);
  if (!(lc.is_constant() && lc.constant_term().is_one()))
    throw Error(ErrorCode::BadArgument,
                "the weighted initial form needs a monic input");

  WeightedForm W;
  W.ring = chi.ring();
  W.wvar = wvar;
  W.qvars = qvars;
  W.degree = m;
  W.weight = OrderValue::infinity();

  std::vector<Polynomial> coeffs;
  std::vector<OrderValue> orders;
  for (long j = 1; j <= m; ++j) {
    Polynomial aj = chi.coeff_of_power(wvar, (unsigned)(m - j));
    OrderValue nu = aj.order_at_monomial_prime(qvars);
    coeffs.push_back(std::move(aj));
    orders.push_back(nu);
    if (!nu.is_infinite()) W.weight = OrderValue::min(W.weight, nu.divided_by(j));
  }
  if (W.weight.is_infinite())
    throw Error(ErrorCode::NotSquarefree,
                "the characteristic polynomial is a pure power of w; "
                "non-reduced input upstream");
  for (long j = 1; j <= m; ++j) {
    const OrderValue want = W.weight.scaled(j);
    if (!orders[(std::size_t)j - 1].is_infinite() &&
        orders[(std::size_t)j - 1] == want) {
      W.components.push_back(coeffs[(std::size_t)j - 1].graded_part(
          qvars, (unsigned)want.to_long()));
    } else {
      W.components.push_back(Polynomial::zero(chi.ring()));
    }
  }
  return W;
}

namespace {

// p^e-th root of a polynomial over F_p, when every exponent is divisible by
// p^e. Coefficients are their own Frobenius roots in the prime field.
std::optional<Polynomial> frobenius_root(const Polynomial& f,
                                         unsigned long pe) {
  std::vector<Term> out;
  for (auto& t : f.terms()) {
    Term u = t;
    for (auto& e : u.mono.exp) {
      if (e % pe != 0) return std::nullopt;
      e = (std::uint32_t)(e / pe);
    }
    out.push_back(std::move(u));
  }
  return Polynomial::from_terms(f.ring(), std::move(out));
}

}  // namespace

std::optional<Polynomial> mth_power_root(const WeightedForm& W) {
  // An m-th power (w - α)^m forces α of integral degree.
  if (!W.weight.is_integer()) return std::nullopt;
  const FieldSpec& k = W.ring->field();
  unsigned long m = (unsigned long)W.degree;
  unsigned long pe = 1;
  unsigned long mprime = m;
  if (k.is_prime_field()) {
    while (mprime % k.characteristic == 0) {
      mprime /= k.characteristic;
      pe *= k.characteristic;
    }
  }
  const Polynomial& A = W.components[(std::size_t)pe - 1];
  if (A.is_zero()) return std::nullopt;

  Scalar mp_inv = Scalar(k, (long)mprime).inverse();
  Polynomial beta = (-A).scaled(mp_inv);  // α^{p^e}
  Polynomial alpha;
  if (pe == 1) {
    alpha = beta;
  } else {
    auto root = frobenius_root(beta, pe);
    if (!root) return std::nullopt;
    alpha = *root;
  }
  Polynomial candidate =
      (Polynomial::variable(W.ring, W.wvar) - alpha).pow(m);
  if (candidate == W.as_polynomial()) return alpha;
  return std::nullopt;
}

Polynomial translation_step(const Polynomial& chi, std::size_t wvar,
                            const Polynomial& s,
                            const std::vector<std::size_t>& qvars) {
  if (!s.valid() || !s.ring()->same(*chi.ring()))
    throw Error(ErrorCode::BadArgument, "translation outside the frame ring");
  if (s.involves(wvar))
    throw Error(ErrorCode::BadArgument, "translation must come from the base");
  OrderValue before = weighted_initial_form(chi, wvar, qvars).weight;
  std::map<std::size_t, Polynomial> images;
  images[wvar] = Polynomial::variable(chi.ring(), wvar) + s;
  Polynomial moved = chi.substitute(images);
  OrderValue after = weighted_initial_form(moved, wvar, qvars).weight;
  if (!(after > before))
    throw Error(ErrorCode::Internal,
                "translation did not increase the weighted order (" +
                    before.str() + " -> " + after.str() + ")");
  return moved;
}

PrimitiveSlopeResult slope_loop(Polynomial chi, std::size_t wvar,
                                const std::vector<std::size_t>& qvars,
                                int iter_cap) {
  PrimitiveSlopeResult out;
  out.total_translation = Polynomial::zero(chi.ring());
  for (int iter = 0; iter <= iter_cap; ++iter) {
    WeightedForm W = weighted_initial_form(chi, wvar, qvars);
    SlopeTraceStep step;
    step.q = W.weight;
    step.wwin = W.str();
    step.translation_total = out.total_translation.str();
    if (!W.weight.is_integer()) {
      step.stop_reason = "weight " + W.weight.str() +
                         " is not an integer: no translation improves it";
      out.trace.push_back(std::move(step));
      out.value = W.weight;
      out.final_chi = std::move(chi);
      return out;
    }
    std::optional<Polynomial> alpha = mth_power_root(W);
    if (!alpha) {
      step.stop_reason =
          "weighted initial form is not an m-th power: no translation "
          "improves it";
      out.trace.push_back(std::move(step));
      out.value = W.weight;
      out.final_chi = std::move(chi);
      return out;
    }
    step.root = alpha->str();
    chi = translation_step(chi, wvar, *alpha, qvars);
    out.total_translation = out.total_translation + *alpha;
    step.translation_total = out.total_translation.str();
    out.trace.push_back(std::move(step));
  }
  throw Error(ErrorCode::CapExceeded,
              "the translation loop did not terminate within " +
                  std::to_string(iter_cap) +
                  " steps; the input is suspected non-reduced");
}

PrimitiveSlopeResult primitive_slope(const TransversalFrame& F,
                                     std::size_t fiber_pos, const Center& c,
                                     int iter_cap) {
  if (!c.origin) {
    PrimeTransversality pt = transversal_at_prime(F, c.pvars);
    if (!pt.ok) {
      std::string msg = "the frame is not transversal at " +
                        c.str(F.presentation.ring());
      for (auto& d : pt.detail) msg += "; " + d;
      throw Error(ErrorCode::NotTransversal, msg);
    }
  }
  std::vector<std::size_t> qvars = prime_grading_vars(F, c, false);
  return slope_loop(F.charpolys.at(fiber_pos), F.wvar, qvars, iter_cap);
}

SlopeReport samuel_slope(const LocalRingPresentation& P, const Center& c,
                         const FrameSpec& frame, int iter_cap) {
  validate_center(P, c);
  SlopeReport rep;

  long mult = -1;
  if (P.is_hypersurface() || P.is_ambient_regular()) mult = multiplicity(P, c);

  if (mult == 1) {
    rep.slope = OrderValue::infinity();
    rep.extremal = false;
    rep.excess = embedding_data(P, c).excess;
    rep.notes.push_back(
        "the local ring at the center is regular; the slope is infinite by "
        "convention");
    return rep;
  }

  std::optional<TransversalFrame> found =
      acquire_frame(P, frame, /*allow_failure=*/false, &rep.notes);
  if (!found)
    throw Error(ErrorCode::Unsupported,
                "the slope of a multi-generator presentation needs an "
                "explicit frame (supply --base and --fiber)");
  TransversalFrame F = std::move(*found);
  if (mult < 0) {
    mult = F.generic_rank;
    rep.notes.push_back("multiplicity taken from the frame's generic rank");
  }
  if (!c.origin) {
    PrimeTransversality pt = transversal_at_prime(F, c.pvars);
    if (!pt.ok) {
      std::string msg =
          "the frame is not transversal at " + c.str(P.ring()) +
          "; the slope at this center needs a frame transversal there "
          "(the center must sit in the top multiplicity locus)";
      for (auto& d : pt.detail) msg += "; " + d;
      throw Error(ErrorCode::NotTransversal, msg);
    }
  }
  rep.excess = embedding_data(P, c).excess;
  rep.partial_validation = !F.fully_validated;
  if (rep.partial_validation)
    rep.notes.insert(rep.notes.end(), F.notes.begin(), F.notes.end());

  OrderValue best = OrderValue::infinity();
  for (std::size_t i = 0; i < F.fiber_vars.size(); ++i) {
    SlopeGeneratorReport gen;
    gen.generator = F.fiber_name(i);
    gen.result = primitive_slope(F, i, c, iter_cap);
    best = OrderValue::min(best, gen.result.value);
    rep.per_generator.push_back(std::move(gen));
  }
  if (best > OrderValue::integer(1)) {
    rep.extremal = true;
    rep.slope = best;
  } else {
    rep.extremal = false;
    rep.slope = OrderValue::integer(1);
  }
  return rep;
}

ProbeReport semicontinuity_probe(
    const LocalRingPresentation& P, const Center& prime,
    const std::vector<std::map<std::size_t, Scalar>>& samples,
    const FrameSpec& frame) {
  if (prime.origin)
    throw Error(ErrorCode::BadArgument,
                "the probe compares a proper monomial prime with maximal "
                "ideals above it");
  ProbeReport rep;
  rep.prime_slope = samuel_slope(P, prime, frame).slope;

  for (auto& point : samples) {
    ProbeSample s;
    std::ostringstream label;
    bool first = true;
    for (auto& [v, cval] : point) {
      if (!first) label << ",";
      first = false;
      label << P.ring()->var_name(v) << "=" << cval.str();
    }
    s.label = point.empty() ? "(the prime itself)" : label.str();
    if (point.empty()) {
      s.degenerate = true;
      s.holds = true;
      s.slope = rep.prime_slope;
      rep.samples.push_back(std::move(s));
      continue;
    }
    for (auto& [v, cval] : point) {
      if (std::binary_search(prime.pvars.begin(), prime.pvars.end(), v) &&
          !cval.is_zero())
        throw Error(ErrorCode::BadArgument,
                    "sample point must lie on V(p): '" + P.ring()->var_name(v) +
                        "' belongs to the prime but is assigned " + cval.str());
    }
    LocalRingPresentation moved = recenter(P, point);
    SlopeReport at_point =
        samuel_slope(moved, Center::at_origin(moved.ring()), frame);
    s.slope = at_point.slope;
    s.holds = rep.prime_slope <= s.slope;
    if (!s.holds)
      rep.violations.push_back(
          "slope at " + s.label + " is " + s.slope.str() +
          " < slope at the prime " + rep.prime_slope.str() +
          " (allowed outside the dense open set)");
    rep.samples.push_back(std::move(s));
  }
  return rep;
}

}  // namespace samuel
