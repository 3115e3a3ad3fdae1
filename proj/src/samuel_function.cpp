#include "samuel/samuel_function.hpp"

#include <sstream>

namespace samuel {

std::string route_name(Route r) {
  switch (r) {
    case Route::Hickel: return "hickel";
    case Route::Oracle: return "oracle";
    case Route::RegularLocal: return "regular-local";
  }
  return "?";
}

Strategy strategy_from_name(const std::string& name) {
  if (name == "auto") return Strategy::Auto;
  if (name == "hickel") return Strategy::Hickel;
  if (name == "oracle") return Strategy::Oracle;
  throw Error(ErrorCode::BadArgument,
              "unknown strategy '" + name + "' (use auto, hickel or oracle)");
}

std::string OrderCertificate::witness_str() const {
  std::ostringstream os;
  if (route == Route::Hickel && witness_index) {
    os << "min at i=" << *witness_index << ", nu(a_" << *witness_index
       << ")=" << witness_coeff_order->str();
  } else if (route == Route::Oracle && witness_n) {
    os << "best bound at n=" << *witness_n;
  } else {
    os << "-";
  }
  return os.str();
}

OrderCertificate hickel_order(const TransversalFrame& F, const Polynomial& g,
                              const Center& c) {
  if (!c.origin) {
    PrimeTransversality pt = transversal_at_prime(F, c.pvars);
    if (!pt.ok) {
      std::string msg =
          "the frame is not transversal at " + c.str(F.presentation.ring());
      for (auto& d : pt.detail) msg += "; " + d;
      throw Error(ErrorCode::NotTransversal, msg);
    }
  }
  std::vector<std::size_t> qvars = prime_grading_vars(F, c, false);

  Polynomial chi = char_poly_of_element(F, g);
  long m = chi.degree_in(F.wvar);

  OrderCertificate cert;
  cert.route = Route::Hickel;
  cert.certified = true;
  cert.charpoly_degree = m;
  cert.value = OrderValue::infinity();
  for (long i = 1; i <= m; ++i) {
    Polynomial ai = chi.coeff_of_power(F.wvar, (unsigned)(m - i));
    if (ai.is_zero()) continue;
    OrderValue nu = ai.order_at_monomial_prime(qvars);
    OrderValue slope = nu.divided_by(i);
    if (slope < cert.value) {
      cert.value = slope;
      cert.witness_index = (int)i;
      cert.witness_coeff_order = nu;
    }
  }
  if (cert.value.is_infinite())
    cert.notes.push_back(
        "characteristic polynomial is w^" + std::to_string(m) +
        "; the element vanishes in the localized ring");
  if (!F.fully_validated)
    cert.notes.insert(cert.notes.end(), F.notes.begin(), F.notes.end());
  return cert;
}

std::optional<TransversalFrame> acquire_frame(const LocalRingPresentation& P,
                                              const FrameSpec& spec,
                                              bool allow_failure,
                                              std::vector<std::string>* notes) {
  auto note = [&](const std::string& s) {
    if (notes) notes->push_back(s);
  };
  try {
    switch (spec.kind) {
      case FrameSpec::Kind::Explicit:
        return frame_from_split(P, spec.base, spec.fiber);
      case FrameSpec::Kind::Search:
        return find_transversal_frame(P);
      case FrameSpec::Kind::None:
        if (P.is_hypersurface()) return find_transversal_frame(P);
        note("no frame supplied for the multi-generator presentation");
        return std::nullopt;
    }
  } catch (const Error& e) {
    if (!allow_failure) throw;
    note(std::string("frame unavailable: ") + e.what());
    return std::nullopt;
  }
  return std::nullopt;
}

namespace {

OrderCertificate oracle_certificate(const LocalRingPresentation& P,
                                    const Polynomial& g, const Center& c,
                                    const SamuelOptions& opts) {
  OracleResult res = samuel_limit_oracle(P, g, c, opts.nmax, opts.cap);
  OrderCertificate cert;
  cert.route = Route::Oracle;
  cert.oracle_rows = res.rows;
  if (res.infinite) {
    cert.value = OrderValue::infinity();
    cert.certified = true;
    cert.notes.push_back("the element maps into the ideal at the center");
    return cert;
  }
  cert.value = res.best;
  cert.witness_n = res.best_n;
  cert.certified = false;
  cert.notes.push_back(
      "oracle value is a certified lower bound, NOT CERTIFIED equal to the "
      "asymptotic order (raise --nmax to refine)");
  return cert;
}

bool center_multiplicity_one(const LocalRingPresentation& P, const Center& c) {
  if (P.is_ambient_regular()) return true;
  if (!P.is_hypersurface()) return false;  // unknown without a frame
  return multiplicity(P, c) == 1;
}

}  // namespace

OrderCertificate samuel_order(const LocalRingPresentation& P,
                              const Polynomial& g, const Center& c,
                              Strategy strategy, const FrameSpec& frame,
                              const SamuelOptions& opts) {
  validate_center(P, c);

  if (strategy == Strategy::Oracle) return oracle_certificate(P, g, c, opts);

  std::vector<std::string> notes;
  if (strategy == Strategy::Auto && center_multiplicity_one(P, c)) {
    OrderCertificate cert;
    cert.route = Route::RegularLocal;
    cert.certified = true;
    cert.value = local_order(P, g, c, opts.cap);
    cert.notes.push_back(
        "multiplicity 1 at the center: the asymptotic order equals the "
        "ordinary order of the regular local ring");
    return cert;
  }

  bool allow_failure = strategy == Strategy::Auto;
  std::optional<TransversalFrame> F = acquire_frame(P, frame, allow_failure, &notes);
  if (F) {
    if (!c.origin) {
      PrimeTransversality pt = transversal_at_prime(*F, c.pvars);
      if (!pt.ok && strategy == Strategy::Hickel) {
        std::string msg = "the frame is not transversal at " + c.str(P.ring());
        for (auto& d : pt.detail) msg += "; " + d;
        throw Error(ErrorCode::NotTransversal, msg);
      }
      if (!pt.ok) {
        notes.push_back(
            "frame not transversal at the center; falling back to the oracle");
        F.reset();
      }
    }
  }
  if (F) {
    OrderCertificate cert = hickel_order(*F, g, c);
    cert.notes.insert(cert.notes.begin(), notes.begin(), notes.end());
    return cert;
  }
  if (strategy == Strategy::Hickel)
    throw Error(ErrorCode::NotTransversal,
                "no usable frame for the hickel strategy");
  OrderCertificate cert = oracle_certificate(P, g, c, opts);
  cert.notes.insert(cert.notes.begin(), notes.begin(), notes.end());
  return cert;
}

OrderCertificate samuel_order_nonlocalized_at_prime(
    const LocalRingPresentation& P, const Polynomial& g, const Center& prime,
    const FrameSpec& frame, const SamuelOptions& opts) {
  if (prime.origin)
    throw Error(ErrorCode::BadArgument,
                "the nonlocalized order is taken at a proper monomial prime");
  validate_center(P, prime);

  OrderEngine engine(P, prime, opts.cap);
  OrderCertificate cert;
  cert.route = Route::Oracle;

  if (g.is_zero() || in_ideal(g, engine.ideal_basis())) {
    cert.value = OrderValue::infinity();
    cert.certified = true;
    cert.notes.push_back("the element lies in the ideal");
    return cert;
  }

  OrderValue best = OrderValue::integer(0);
  int best_n = 0;
  Polynomial power = Polynomial::constant(g.ring(), 1);
  for (int n = 1; n <= opts.nmax; ++n) {
    power = power * g;
    OrderValue nu = engine.order_nonlocalized(power);
    OrderValue scaled = nu.divided_by(n);
    cert.oracle_rows.push_back({n, nu, scaled});
    if (scaled > best) {
      best = scaled;
      best_n = n;
    }
  }
  cert.value = best;
  cert.witness_n = best_n;

  // On the top multiplicity stratum the nonlocalized and localized orders
  // agree, which upgrades the estimate to a certified value.
  if (P.is_hypersurface() || P.is_ambient_regular()) {
    long mult_prime = multiplicity(P, prime);
    long mult_origin = multiplicity(P, Center::at_origin(P.ring()));
    std::ostringstream os;
    os << "multiplicity at the prime = " << mult_prime
       << ", at the origin = " << mult_origin;
    if (mult_prime == mult_origin) {
      OrderCertificate localized =
          samuel_order(P, g, prime, Strategy::Auto, frame, opts);
      if (localized.certified) {
        cert.value = localized.value;
        cert.certified = true;
        cert.notes.push_back(
            os.str() + ": the prime lies in the top multiplicity locus, so "
                       "the nonlocalized order equals the localized one");
        return cert;
      }
    } else {
      cert.notes.push_back(
          os.str() + ": the multiplicities differ, so the nonlocalized order "
                     "can be strictly smaller than the localized one; the "
                     "value is an estimate");
    }
  } else {
    cert.notes.push_back(
        "multiplicity comparison unavailable for the multi-generator "
        "presentation; the value is an estimate");
  }
  cert.certified = false;
  return cert;
}

}  // namespace samuel
