#ifndef SAMUEL_TRANSVERSAL_HPP
#define SAMUEL_TRANSVERSAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "samuel/local_ring.hpp"

namespace samuel {

// An invertible linear substitution x_i -> Σ_j mat[i][j]·x_j over the
// coefficient field.
struct LinearChange {
  std::vector<std::vector<Scalar>> mat;

  static LinearChange identity(const RingPtr& ring);
  static LinearChange shear(const RingPtr& ring, std::size_t i, std::size_t j,
                            const Scalar& c);
  LinearChange then(const LinearChange& next) const;

  bool is_identity() const;
  Polynomial apply(const Polynomial& f) const;
  // The change maps the monomial prime <pvars> to itself.
  bool preserves_prime(const std::vector<std::size_t>& pvars) const;
  std::vector<std::string> describe(const RingPtr& ring) const;
};

struct CoefficientOrder {
  int index;         // i in a_i
  OrderValue order;  // ν_n(a_i)
  bool ok;           // ν_n(a_i) ≥ i
};

struct TransversalCheck {
  bool ok = false;
  long fiber_degree = 0;
  OrderValue total_order;
  std::vector<CoefficientOrder> coefficients;
  int failing_index = 0;  // first i with ν(a_i) < i, 0 when none
};

// Whether S = k[base] ⊂ B is transversal for a hypersurface monic in the
// fiber variable: the total order of the equation equals its fiber degree.
TransversalCheck check_transversal(const LocalRingPresentation& P,
                                   const std::vector<std::size_t>& base,
                                   std::size_t fiber);

struct TransversalFrame {
  LocalRingPresentation presentation;  // in the transformed coordinates
  LinearChange change;                 // applied to reach those coordinates
  std::vector<std::size_t> base_vars;
  std::vector<std::size_t> fiber_vars;
  RingPtr ext_ring;  // transformed ring extended by the class variable
  std::size_t wvar;
  // Monic in w over k[base]; for hypersurfaces the single defining
  // characteristic polynomial, otherwise one per fiber generator.
  std::vector<Polynomial> charpolys;
  long generic_rank = 0;
  bool fully_validated = true;  // user multi-generator frames stay partial
  std::vector<std::string> notes;

  std::vector<std::size_t> base_vars_in_ext() const;
  std::string fiber_name(std::size_t pos) const;
};

// Builds and validates a frame for an explicitly chosen split.
TransversalFrame frame_from_split(const LocalRingPresentation& P,
                                  const std::vector<std::string>& base_names,
                                  const std::vector<std::string>& fiber_names);

// Deterministic search over linear changes: identity, then single shears
// x_i -> x_i + c·x_j, then composed double shears. Throws SearchExhausted
// with the number of enumerated candidates when nothing works.
TransversalFrame find_transversal_frame(const LocalRingPresentation& P);

// χ_g(w), monic over k[base], with χ_g(g) ≡ 0 mod I. The element is given
// in the original coordinates; the frame's change is applied internally.
Polynomial char_poly_of_element(const TransversalFrame& F, const Polynomial& g);

struct PrimeTransversality {
  bool ok = false;
  std::vector<std::string> detail;
};

// Transversality of the frame at the monomial prime <pvars> (original
// coordinates): the order of each defining characteristic polynomial in
// the prime-restricted grading equals its w-degree.
PrimeTransversality transversal_at_prime(const TransversalFrame& F,
                                         const std::vector<std::size_t>& pvars);

// Grading variables in ext_ring for a center given in original coordinates:
// the base part of the prime (plus w when with_w is set).
std::vector<std::size_t> prime_grading_vars(const TransversalFrame& F,
                                            const Center& c, bool with_w);

// Multiplicity through a frame (hypersurfaces report the equation's order;
// partially-validated frames report the generic rank bound).
long multiplicity(const LocalRingPresentation& P, const Center& c,
                  const TransversalFrame& F);

}  // namespace samuel

#endif
