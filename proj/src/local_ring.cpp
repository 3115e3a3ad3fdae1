#include "samuel/local_ring.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace samuel {

void require_squarefree(const Polynomial& f) {
  if (f.is_zero() || f.is_constant()) return;
  std::vector<Polynomial> partials;
  for (std::size_t v = 0; v < f.ring()->nvars(); ++v) {
    Polynomial d = f.derivative(v);
    if (!d.is_zero()) partials.push_back(std::move(d));
  }
  if (partials.empty())
    throw Error(ErrorCode::NotSquarefree,
                "every partial derivative of '" + f.str() +
                    "' vanishes; the generator is a p-th power "
                    "(non-reduced presentation)");
  Polynomial g = f;
  for (auto& d : partials) g = poly_gcd(g, d);
  if (!g.is_constant())
    throw Error(ErrorCode::NotSquarefree,
                "generator '" + f.str() + "' is not squarefree (repeated factor '" +
                    g.str() + "')");
}

LocalRingPresentation LocalRingPresentation::make(RingPtr ring,
                                                  std::vector<Polynomial> gens,
                                                  std::optional<long> dim) {
  LocalRingPresentation P;
  P.ring_ = std::move(ring);
  for (auto& g : gens) {
    if (!g.valid() || !g.ring()->same(*P.ring_))
      throw Error(ErrorCode::BadArgument, "generator outside the ambient ring");
    if (g.is_zero()) continue;
    if (!g.constant_term().is_zero())
      throw Error(ErrorCode::NotOnVariety,
                  "generator '" + g.str() + "' has a nonzero constant term; "
                  "the origin does not lie on the variety");
    P.gens_.push_back(g);
  }
  if (P.gens_.size() == 1) require_squarefree(P.gens_[0]);
  long n = (long)P.ring_->nvars();
  if (dim) {
    if (*dim < 0 || *dim > n)
      throw Error(ErrorCode::BadArgument, "dimension out of range");
    if (P.gens_.empty() && *dim != n)
      throw Error(ErrorCode::BadArgument,
                  "the zero ideal has dimension " + std::to_string(n));
    if (P.gens_.size() == 1 && *dim != n - 1)
      throw Error(ErrorCode::BadArgument,
                  "a hypersurface in " + std::to_string(n) +
                      " variables has dimension " + std::to_string(n - 1));
    P.dim_ = dim;
  }
  return P;
}

const Polynomial& LocalRingPresentation::equation() const {
  if (!is_hypersurface())
    throw Error(ErrorCode::BadArgument, "not a hypersurface presentation");
  return gens_[0];
}

bool LocalRingPresentation::dimension_known() const {
  return dim_.has_value() || gens_.size() <= 1;
}

long LocalRingPresentation::dimension() const {
  if (dim_) return *dim_;
  long n = (long)ring_->nvars();
  if (gens_.empty()) return n;
  if (gens_.size() == 1) return n - 1;
  throw Error(ErrorCode::Unsupported,
              "dimension of a multi-generator presentation must be supplied "
              "(add a 'dim' line to the ring file)");
}

Center Center::at_origin(const RingPtr& ring) {
  Center c;
  c.origin = true;
  for (std::size_t v = 0; v < ring->nvars(); ++v) c.pvars.push_back(v);
  return c;
}

Center Center::monomial_prime(const RingPtr& ring,
                              const std::vector<std::string>& names) {
  if (names.empty())
    throw Error(ErrorCode::BadArgument, "a center needs at least one variable");
  Center c;
  for (auto& n : names) c.pvars.push_back(ring->require_index(n));
  std::sort(c.pvars.begin(), c.pvars.end());
  c.pvars.erase(std::unique(c.pvars.begin(), c.pvars.end()), c.pvars.end());
  c.origin = c.pvars.size() == ring->nvars();
  return c;
}

std::string Center::str(const RingPtr& ring) const {
  std::ostringstream os;
  os << "<";
  for (std::size_t i = 0; i < pvars.size(); ++i) {
    if (i) os << ",";
    os << ring->var_name(pvars[i]);
  }
  os << ">";
  return os.str();
}

void validate_center(const LocalRingPresentation& P, const Center& c) {
  for (auto& g : P.gens()) {
    OrderValue o = g.order_at_monomial_prime(c.pvars);
    if (!o.is_infinite() && o.is_zero())
      throw Error(ErrorCode::BadArgument,
                  "center " + c.str(P.ring()) + " does not contain the ideal: "
                  "generator '" + g.str() + "' escapes it");
  }
}

namespace {

// Rank over the coefficient field of a small dense scalar matrix.
long scalar_rank(std::vector<std::vector<Scalar>> m) {
  if (m.empty()) return 0;
  std::size_t rows = m.size(), cols = m[0].size();
  long rank = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pivot = row;
    while (pivot < rows && m[pivot][col].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[row]);
    Scalar inv = m[row][col].inverse();
    for (std::size_t j = col; j < cols; ++j) m[row][j] = m[row][j] * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == row || m[i][col].is_zero()) continue;
      Scalar f = m[i][col];
      for (std::size_t j = col; j < cols; ++j)
        m[i][j] = m[i][j] - f * m[row][j];
    }
    ++row;
    ++rank;
  }
  return rank;
}

// Rank of a polynomial matrix over the fraction field of its ring.
long polynomial_rank(std::vector<std::vector<Polynomial>> m, RingPtr ring) {
  if (m.empty()) return 0;
  std::size_t rows = m.size(), cols = m[0].size();
  long rank = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pivot = row;
    while (pivot < rows && m[pivot][col].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[row]);
    for (std::size_t i = row + 1; i < rows; ++i) {
      if (m[i][col].is_zero()) continue;
      // Cross-multiplication keeps everything polynomial.
      for (std::size_t j = 0; j < cols; ++j) {
        if (j == col) continue;
        m[i][j] = m[i][j] * m[row][col] - m[row][j] * m[i][col];
      }
      m[i][col] = Polynomial::zero(ring);
    }
    ++row;
    ++rank;
  }
  return rank;
}

}  // namespace

EmbeddingData embedding_data(const LocalRingPresentation& P, const Center& c) {
  validate_center(P, c);
  const RingPtr& ring = P.ring();
  long rank = 0;
  if (c.origin) {
    std::vector<std::vector<Scalar>> lin;
    for (auto& g : P.gens()) {
      std::vector<Scalar> row;
      for (std::size_t v = 0; v < ring->nvars(); ++v) {
        Monomial m(ring->nvars());
        m.exp[v] = 1;
        row.push_back(g.coeff(m));
      }
      lin.push_back(std::move(row));
    }
    rank = scalar_rank(std::move(lin));
  } else {
    // Jacobian columns of the prime variables at the generic point of V(p).
    std::map<std::size_t, Polynomial> zeros;
    for (auto v : c.pvars) zeros[v] = Polynomial::zero(ring);
    std::vector<std::vector<Polynomial>> jac;
    for (auto& g : P.gens()) {
      std::vector<Polynomial> row;
      for (auto v : c.pvars) row.push_back(g.derivative(v).substitute(zeros));
      jac.push_back(std::move(row));
    }
    rank = polynomial_rank(std::move(jac), ring);
  }
  long nloc = (long)c.pvars.size();
  long dim_quotient = (long)ring->nvars() - nloc;  // V(p) is regular
  long dim_local = P.dimension() - dim_quotient;
  EmbeddingData d;
  d.embedding_dim = nloc - rank;
  d.excess = d.embedding_dim - dim_local;
  if (d.excess < 0)
    throw Error(ErrorCode::BadArgument,
                "negative excess of embedding dimension; the supplied "
                "dimension is inconsistent");
  return d;
}

OrderEngine::OrderEngine(LocalRingPresentation P, Center c, int cap)
    : P_(std::move(P)), c_(std::move(c)), cap_(cap) {
  validate_center(P_, c_);
  gb_ideal_ = groebner(P_.gens(), MonomialOrder::grevlex());
  std::vector<Polynomial> center_gens = P_.gens();
  for (auto v : c_.pvars)
    center_gens.push_back(Polynomial::variable(P_.ring(), v));
  gb_center_ = groebner(center_gens, MonomialOrder::grevlex());
}

const GroebnerBasis& OrderEngine::power_basis(int a) {
  auto it = gb_power_.find(a);
  if (it != gb_power_.end()) return it->second;
  // p^a is generated by the monomials of degree a in the prime variables.
  std::vector<Polynomial> gens = P_.gens();
  std::vector<Monomial> monos;
  // Enumerate exponent vectors over pvars summing to a.
  std::vector<unsigned> stack(c_.pvars.size(), 0);
  auto emit = [&]() {
    Monomial m(P_.ring()->nvars());
    for (std::size_t i = 0; i < c_.pvars.size(); ++i)
      m.exp[c_.pvars[i]] = stack[i];
    monos.push_back(std::move(m));
  };
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i,
                                                       unsigned left) {
    if (i + 1 == stack.size()) {
      stack[i] = left;
      emit();
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      stack[i] = e;
      rec(i + 1, left - e);
    }
  };
  rec(0, (unsigned)a);
  for (auto& m : monos)
    gens.push_back(
        Polynomial::from_term(P_.ring(), m, Scalar::one(P_.ring()->field())));
  auto [pos, ok] =
      gb_power_.emplace(a, groebner(gens, MonomialOrder::grevlex()));
  (void)ok;
  return pos->second;
}

bool OrderEngine::quotient_escapes_center(const GroebnerBasis& numerator,
                                          const Polynomial& g) {
  GroebnerBasis colon = ideal_quotient(numerator, g);
  for (auto& h : colon.gens)
    if (!in_ideal(h, gb_center_)) return true;
  return false;
}

bool OrderEngine::is_zero_in_localization(const Polynomial& g) {
  if (g.is_zero()) return true;
  if (gb_ideal_.gens.empty()) return false;
  if (in_ideal(g, gb_ideal_)) return true;
  return quotient_escapes_center(gb_ideal_, g);
}

bool OrderEngine::member_via_colon(const Polynomial& g, int a) {
  if (a <= 0) return true;
  return quotient_escapes_center(power_basis(a), g);
}

bool OrderEngine::member_localized(const Polynomial& g, int a) {
  if (a <= 0) return true;
  if (c_.origin) {
    // I + m^a is m-primary, so membership needs no colon at the origin.
    return in_ideal(g, power_basis(a));
  }
  return member_via_colon(g, a);
}

bool OrderEngine::member_plus_ideal(const Polynomial& g, int a) {
  if (a <= 0) return true;
  return in_ideal(g, power_basis(a));
}

OrderValue OrderEngine::order(const Polynomial& g) {
  if (!g.valid() || !g.ring()->same(*P_.ring()))
    throw Error(ErrorCode::BadArgument, "element outside the ambient ring");
  if (g.is_zero() ||
      (!gb_ideal_.gens.empty() && in_ideal(g, gb_ideal_)))
    return OrderValue::infinity();
  int a = 0;
  while (true) {
    if (!member_localized(g, a + 1)) return OrderValue::integer(a);
    ++a;
    if (a > cap_) {
      // Either the element vanishes in the localized ring (the colon test
      // decides exactly) or the order genuinely overflows the cap.
      if (is_zero_in_localization(g)) return OrderValue::infinity();
      throw Error(ErrorCode::CapExceeded,
                  "order exceeds the cap " + std::to_string(cap_) +
                      " (raise --cap if the value is expected to be large)");
    }
  }
}

OrderValue OrderEngine::order_nonlocalized(const Polynomial& g) {
  if (!g.valid() || !g.ring()->same(*P_.ring()))
    throw Error(ErrorCode::BadArgument, "element outside the ambient ring");
  if (g.is_zero() || (!gb_ideal_.gens.empty() && in_ideal(g, gb_ideal_)))
    return OrderValue::infinity();
  int a = 0;
  while (member_plus_ideal(g, a + 1)) {
    ++a;
    if (a > cap_)
      throw Error(ErrorCode::CapExceeded,
                  "order exceeds the cap " + std::to_string(cap_));
  }
  return OrderValue::integer(a);
}

OrderValue local_order(const LocalRingPresentation& P, const Polynomial& g,
                       const Center& c, int cap) {
  OrderEngine engine(P, c, cap);
  return engine.order(g);
}

OracleResult samuel_limit_oracle(OrderEngine& engine, const Polynomial& g,
                                 int n_max) {
  if (n_max < 1) throw Error(ErrorCode::BadArgument, "n_max must be positive");
  OracleResult res;
  if (engine.is_zero_in_localization(g)) {
    res.infinite = true;
    res.best = OrderValue::infinity();
    res.best_n = 1;
    return res;
  }
  Polynomial power = Polynomial::constant(g.ring(), 1);
  res.best = OrderValue::integer(0);
  for (int n = 1; n <= n_max; ++n) {
    power = power * g;
    OrderValue nu = engine.order(power);
    OrderValue scaled = nu.divided_by(n);
    res.rows.push_back({n, nu, scaled});
    if (scaled > res.best) {
      res.best = scaled;
      res.best_n = n;
    }
  }
  return res;
}

OracleResult samuel_limit_oracle(const LocalRingPresentation& P,
                                 const Polynomial& g, const Center& c,
                                 int n_max, int cap) {
  OrderEngine engine(P, c, cap);
  return samuel_limit_oracle(engine, g, n_max);
}

long multiplicity(const LocalRingPresentation& P, const Center& c) {
  validate_center(P, c);
  if (P.is_ambient_regular()) return 1;
  if (!P.is_hypersurface())
    throw Error(ErrorCode::Unsupported,
                "multiplicity of a multi-generator presentation needs a "
                "transversal frame");
  OrderValue o = P.equation().order_at_monomial_prime(c.pvars);
  return o.to_long();
}

LocalRingPresentation recenter(const LocalRingPresentation& P,
                               const std::map<std::size_t, Scalar>& point) {
  const RingPtr& ring = P.ring();
  std::map<std::size_t, Polynomial> shift;
  std::map<std::size_t, Polynomial> eval;
  for (auto& [v, cval] : point) {
    if (v >= ring->nvars())
      throw Error(ErrorCode::BadArgument, "point coordinate out of range");
    shift[v] =
        Polynomial::variable(ring, v) + Polynomial::constant(ring, cval);
    eval[v] = Polynomial::constant(ring, cval);
  }
  for (std::size_t v = 0; v < ring->nvars(); ++v)
    if (!eval.count(v)) eval[v] = Polynomial::zero(ring);
  for (auto& g : P.gens()) {
    Polynomial value = g.substitute(eval);
    if (!value.is_zero())
      throw Error(ErrorCode::NotOnVariety,
                  "the point does not lie on the variety: generator '" +
                      g.str() + "' evaluates to " + value.str());
  }
  std::vector<Polynomial> moved;
  for (auto& g : P.gens()) moved.push_back(g.substitute(shift));
  return LocalRingPresentation::make(ring, std::move(moved),
                                     P.supplied_dimension());
}

}  // namespace samuel
