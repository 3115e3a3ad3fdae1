#ifndef SAMUEL_LOCAL_RING_HPP
#define SAMUEL_LOCAL_RING_HPP

#include <map>
#include <optional>
#include <vector>

#include "samuel/groebner.hpp"
#include "samuel/polynomial.hpp"

namespace samuel {

inline constexpr int kDefaultOrderCap = 64;
inline constexpr int kDefaultOracleDepth = 8;

// A presented local ring (B, m) = k[x_1..x_n]/I localized at the origin or
// at a monomial prime. Generators vanish at the origin, and hypersurface
// generators are required squarefree (reduced presentations only).
class LocalRingPresentation {
 public:
  static LocalRingPresentation make(RingPtr ring, std::vector<Polynomial> gens,
                                    std::optional<long> dim = std::nullopt);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& gens() const { return gens_; }
  bool is_hypersurface() const { return gens_.size() == 1; }
  bool is_ambient_regular() const { return gens_.empty(); }
  const Polynomial& equation() const;
  bool dimension_known() const;
  long dimension() const;
  std::optional<long> supplied_dimension() const { return dim_; }

 private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::optional<long> dim_;
};

// Rejects non-squarefree F; over F_p a generator all of whose partials
// vanish is a p-th power and is reported as such.
void require_squarefree(const Polynomial& f);

struct Center {
  bool origin = true;
  std::vector<std::size_t> pvars;  // all variables for the origin

  static Center at_origin(const RingPtr& ring);
  static Center monomial_prime(const RingPtr& ring,
                               const std::vector<std::string>& names);
  std::string str(const RingPtr& ring) const;
};

// Checks I ⊆ <pvars>, i.e. the center lies on the variety.
void validate_center(const LocalRingPresentation& P, const Center& c);

struct EmbeddingData {
  long embedding_dim;
  long excess;
};

// Embedding dimension and excess of embedding dimension at the center.
// At a monomial prime the Jacobian columns of the prime variables are
// evaluated at the generic point of V(p).
EmbeddingData embedding_data(const LocalRingPresentation& P, const Center& c);
inline EmbeddingData embedding_data(const LocalRingPresentation& P) {
  return embedding_data(P, Center::at_origin(P.ring()));
}

// Order computations at a fixed presentation/center pair. Gröbner bases of
// I, <pvars> + I and p^a + I are cached across calls.
class OrderEngine {
 public:
  OrderEngine(LocalRingPresentation P, Center c, int cap = kDefaultOrderCap);

  const LocalRingPresentation& presentation() const { return P_; }
  const Center& center() const { return c_; }
  int cap() const { return cap_; }

  // ν at the localized center: the largest a with g ∈ p^a·B_p.
  OrderValue order(const Polynomial& g);
  // g maps to zero in B_p (so every order is infinite).
  bool is_zero_in_localization(const Polynomial& g);
  // g ∈ p^a·B_p, decided as (I + p^a : g) ⊄ <pvars> + I.
  bool member_localized(const Polynomial& g, int a);
  // Same membership through the colon route regardless of center kind.
  bool member_via_colon(const Polynomial& g, int a);
  // Membership in p^a + I without localizing.
  bool member_plus_ideal(const Polynomial& g, int a);
  // max{a : g ∈ p^a + I}; infinity when g ∈ I.
  OrderValue order_nonlocalized(const Polynomial& g);

  const GroebnerBasis& ideal_basis() const { return gb_ideal_; }

 private:
  LocalRingPresentation P_;
  Center c_;
  int cap_;
  GroebnerBasis gb_ideal_;   // <I>
  GroebnerBasis gb_center_;  // <pvars> + I
  std::map<int, GroebnerBasis> gb_power_;

  const GroebnerBasis& power_basis(int a);
  bool quotient_escapes_center(const GroebnerBasis& numerator,
                               const Polynomial& g);
};

OrderValue local_order(const LocalRingPresentation& P, const Polynomial& g,
                       const Center& c, int cap = kDefaultOrderCap);

struct OracleRow {
  int n;
  OrderValue naive;   // ν(g^n)
  OrderValue scaled;  // ν(g^n)/n, a certified lower bound
};

struct OracleResult {
  std::vector<OracleRow> rows;
  OrderValue best;  // running maximum of the scaled rows
  int best_n = 0;
  bool infinite = false;
};

// The limit definition, evaluated along powers g^n for n = 1..n_max.
OracleResult samuel_limit_oracle(const LocalRingPresentation& P,
                                 const Polynomial& g, const Center& c,
                                 int n_max = kDefaultOracleDepth,
                                 int cap = kDefaultOrderCap);
OracleResult samuel_limit_oracle(OrderEngine& engine, const Polynomial& g,
                                 int n_max = kDefaultOracleDepth);

// Hypersurface multiplicity at the center: the order of the equation.
long multiplicity(const LocalRingPresentation& P, const Center& c);

// Translate the given point to the origin. Every coordinate not listed is
// taken to be zero; the point must lie on the variety.
LocalRingPresentation recenter(const LocalRingPresentation& P,
                               const std::map<std::size_t, Scalar>& point);

}  // namespace samuel

#endif
