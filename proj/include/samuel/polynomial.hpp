#ifndef SAMUEL_POLYNOMIAL_HPP
#define SAMUEL_POLYNOMIAL_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "samuel/order_value.hpp"
#include "samuel/scalar.hpp"

namespace samuel {

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

// A polynomial ring is a coefficient field plus an ordered variable list.
// The declared order of the list breaks all monomial-order ties.
class PolyRing {
 public:
  static RingPtr make(FieldSpec field, std::vector<std::string> vars);

  const FieldSpec& field() const { return field_; }
  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const std::string& var_name(std::size_t i) const { return vars_.at(i); }
  std::optional<std::size_t> index_of(std::string_view name) const;
  std::size_t require_index(std::string_view name) const;

  RingPtr extended(const std::vector<std::string>& extra) const;
  std::string fresh_var(std::string_view stem) const;
  bool same(const PolyRing& o) const {
    return field_ == o.field_ && vars_ == o.vars_;
  }

 private:
  PolyRing(FieldSpec field, std::vector<std::string> vars)
      : field_(field), vars_(std::move(vars)) {}
  FieldSpec field_;
  std::vector<std::string> vars_;
};

struct Monomial {
  std::vector<std::uint32_t> exp;

  explicit Monomial(std::size_t nvars = 0) : exp(nvars, 0) {}

  unsigned total_degree() const;
  unsigned degree_over(const std::vector<std::size_t>& vars) const;
  bool is_one() const;
  bool divides(const Monomial& o) const;
  Monomial operator*(const Monomial& o) const;
  Monomial divided_by(const Monomial& o) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);
  bool coprime_with(const Monomial& o) const;
  bool operator==(const Monomial& o) const { return exp == o.exp; }
};

// Total monomial orders: lex, graded reverse lex, and block (elimination)
// orders. A block order eliminates exactly its front block of variables;
// both blocks are compared by grevlex internally.
class MonomialOrder {
 public:
  enum class Kind { Lex, Grevlex, Block };

  static MonomialOrder lex() { return MonomialOrder(Kind::Lex); }
  static MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex); }
  static MonomialOrder block(std::vector<std::size_t> front, std::size_t nvars);

  Kind kind() const { return kind_; }
  bool less(const Monomial& a, const Monomial& b) const;
  std::string str() const;

 private:
  explicit MonomialOrder(Kind k) : kind_(k) {}
  Kind kind_;
  std::vector<std::size_t> front_, back_;
};

struct Term {
  Monomial mono;
  Scalar coeff;
};

// Sparse multivariate polynomial with exact coefficients. Terms are kept in
// canonical form: no zero coefficients, no duplicate monomials, sorted in
// descending grevlex.
class Polynomial {
 public:
  Polynomial() = default;  // invalid; containers only

  static Polynomial zero(RingPtr ring);
  static Polynomial constant(RingPtr ring, const Scalar& c);
  static Polynomial constant(RingPtr ring, long n);
  static Polynomial variable(RingPtr ring, std::size_t var);
  static Polynomial from_term(RingPtr ring, Monomial m, Scalar c);
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);
  static Polynomial parse(RingPtr ring, std::string_view text);

  const RingPtr& ring() const { return ring_; }
  bool valid() const { return ring_ != nullptr; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
  }
  const std::vector<Term>& terms() const { return terms_; }

  long total_degree() const;  // -1 for the zero polynomial
  long degree_in(std::size_t var) const;
  Scalar coeff(const Monomial& m) const;
  Scalar constant_term() const;
  // Terms with exp[var] == k, with that exponent cleared.
  Polynomial coeff_of_power(std::size_t var, unsigned k) const;
  bool involves(std::size_t var) const { return degree_in(var) > 0; }
  std::vector<std::size_t> support_vars() const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const Scalar& c) const;
  Polynomial pow(unsigned long e) const;
  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  // Composition: each mapped variable is replaced by its image. Images must
  // all live in one target ring; unmapped variables are matched by name.
  Polynomial substitute(const std::map<std::size_t, Polynomial>& images,
                        RingPtr target = nullptr) const;
  Polynomial lift_to(RingPtr bigger) const;
  Polynomial restrict_to(RingPtr smaller) const;
  Polynomial derivative(std::size_t var) const;

  // min over terms of the total exponent in qvars; infinity for zero.
  OrderValue order_at_monomial_prime(const std::vector<std::size_t>& qvars) const;
  // Sum of the terms of minimal qvars-degree.
  Polynomial initial_form_at(const std::vector<std::size_t>& qvars) const;
  // Terms whose qvars-degree equals d.
  Polynomial graded_part(const std::vector<std::size_t>& qvars, unsigned d) const;

  const Term& leading_term(const MonomialOrder& ord) const;
  Polynomial make_monic(const MonomialOrder& ord) const;
  // Over Q: clear denominators, divide by integer content, make the leading
  // grevlex coefficient positive. Over F_p: make monic. Scales by a unit only.
  Polynomial normalized_primitive() const;

  std::string str() const;

 private:
  RingPtr ring_;
  std::vector<Term> terms_;

  void sort_and_combine_();
  void require_same_ring_(const Polynomial& o) const;
};

// Determinant of the Sylvester matrix of f and g with respect to var,
// computed by fraction-free Bareiss elimination.
Polynomial resultant_in_var(const Polynomial& f, const Polynomial& g,
                            std::size_t var);

// Exact quotient f / g, or nullopt when g does not divide f.
std::optional<Polynomial> try_divide(const Polynomial& f, const Polynomial& g);

// Determinant of a square matrix of polynomials (Bareiss).
Polynomial matrix_determinant(std::vector<std::vector<Polynomial>> m,
                              RingPtr ring);

}  // namespace samuel

#endif
