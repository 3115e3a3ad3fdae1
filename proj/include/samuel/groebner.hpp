#ifndef SAMUEL_GROEBNER_HPP
#define SAMUEL_GROEBNER_HPP

#include <vector>

#include "samuel/polynomial.hpp"

namespace samuel {

struct GroebnerBasis {
  std::vector<Polynomial> gens;  // reduced: monic, pairwise irreducible lts
  MonomialOrder order = MonomialOrder::grevlex();
  RingPtr ring;
  bool reduced = true;

  bool is_zero_ideal() const { return gens.empty(); }
  bool is_unit_ideal() const {
    return gens.size() == 1 && gens[0].is_constant() && !gens[0].is_zero();
  }
};

// Buchberger with the normal selection strategy and both classical pair
// criteria. Output is the reduced basis, deterministic for fixed input.
GroebnerBasis groebner(std::vector<Polynomial> gens, MonomialOrder order);

// Unique remainder of f modulo G; zero iff f lies in the ideal.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G);

bool in_ideal(const Polynomial& f, const GroebnerBasis& G);

// Colon ideal (I : g) for a single nonzero g.
GroebnerBasis ideal_quotient(const GroebnerBasis& I, const Polynomial& g);

// Generators of <gens> intersected with k[keep], via a block order.
GroebnerBasis eliminate(const std::vector<Polynomial>& gens,
                        const std::vector<std::size_t>& keep);

// Intersection of two principal ideals; zero when either input is zero.
Polynomial poly_lcm(const Polynomial& a, const Polynomial& b);
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

}  // namespace samuel

#endif
