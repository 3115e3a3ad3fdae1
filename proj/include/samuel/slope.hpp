#ifndef SAMUEL_SLOPE_HPP
#define SAMUEL_SLOPE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "samuel/samuel_function.hpp"

namespace samuel {

inline constexpr int kDefaultSlopeIterationCap = 64;

// The weighted initial form of a monic polynomial chi(w) over k[base] with
// respect to the grading by qvars: w carries weight q = min ν_q(a_j)/j and
// A_j is the degree-jq initial form of a_j (zero when ν_q(a_j) > jq).
struct WeightedForm {
  RingPtr ring;
  std::size_t wvar = 0;
  std::vector<std::size_t> qvars;
  long degree = 0;  // m
  OrderValue weight;
  std::vector<Polynomial> components;  // A_1..A_m

  Polynomial as_polynomial() const;  // w^m + Σ A_j w^{m-j}
  std::string str() const;
};

WeightedForm weighted_initial_form(const Polynomial& chi, std::size_t wvar,
                                   const std::vector<std::size_t>& qvars);

// α with (w - α)^m equal to the weighted form, when it exists. In
// characteristic p the p^e-th part of m is handled by reading α^{p^e} off
// A_{p^e} and extracting the Frobenius root (F_p coefficients are fixed
// points). Every candidate is verified against the full binomial expansion.
std::optional<Polynomial> mth_power_root(const WeightedForm& W);

// chi(w + s). The weighted order must strictly increase; a violation is an
// internal logic error.
Polynomial translation_step(const Polynomial& chi, std::size_t wvar,
                            const Polynomial& s,
                            const std::vector<std::size_t>& qvars);

struct SlopeTraceStep {
  OrderValue q;
  std::string wwin;
  std::optional<std::string> root;  // nullopt: stopped here
  std::string stop_reason;          // only on the final step
  std::string translation_total;
};

struct PrimitiveSlopeResult {
  OrderValue value;
  std::vector<SlopeTraceStep> trace;
  Polynomial total_translation;  // accumulated s with value = ν̄(θ - s)
  Polynomial final_chi;
};

// The translation loop on a single characteristic polynomial.
PrimitiveSlopeResult slope_loop(Polynomial chi, std::size_t wvar,
                                const std::vector<std::size_t>& qvars,
                                int iter_cap = kDefaultSlopeIterationCap);

// sup_s ν̄(θ - s) for one fiber generator of the frame.
PrimitiveSlopeResult primitive_slope(const TransversalFrame& F,
                                     std::size_t fiber_pos, const Center& c,
                                     int iter_cap = kDefaultSlopeIterationCap);

struct SlopeGeneratorReport {
  std::string generator;
  PrimitiveSlopeResult result;
};

struct SlopeReport {
  OrderValue slope;
  bool extremal = false;
  long excess = 0;
  std::vector<SlopeGeneratorReport> per_generator;
  bool partial_validation = false;
  std::vector<std::string> notes;
};

SlopeReport samuel_slope(const LocalRingPresentation& P, const Center& c,
                         const FrameSpec& frame = FrameSpec::none(),
                         int iter_cap = kDefaultSlopeIterationCap);

struct ProbeSample {
  std::string label;
  bool degenerate = false;
  OrderValue slope;
  bool holds = false;
};

struct ProbeReport {
  OrderValue prime_slope;
  std::vector<ProbeSample> samples;
  std::vector<std::string> violations;
};

// Compares the slope at the prime with the slope at sampled maximal ideals
// on V(p). Violations are reported, not failed: only a dense open set is
// promised.
ProbeReport semicontinuity_probe(
    const LocalRingPresentation& P, const Center& prime,
    const std::vector<std::map<std::size_t, Scalar>>& samples,
    const FrameSpec& frame = FrameSpec::none());

}  // namespace samuel

#endif
