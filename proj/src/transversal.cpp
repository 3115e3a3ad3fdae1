#include "samuel/transversal.hpp"

#include <algorithm>
#include <sstream>

namespace samuel {

// ------------------------------------------------------------- LinearChange

LinearChange LinearChange::identity(const RingPtr& ring) {
  std::size_t n = ring->nvars();
  LinearChange ch;
  ch.mat.assign(n, std::vector<Scalar>(n, Scalar::zero(ring->field())));
  for (std::size_t i = 0; i < n; ++i) ch.mat[i][i] = Scalar::one(ring->field());
  return ch;
}

LinearChange LinearChange::shear(const RingPtr& ring, std::size_t i,
                                 std::size_t j, const Scalar& c) {
  LinearChange ch = identity(ring);
  ch.mat[i][j] = ch.mat[i][j] + c;
  return ch;
}

LinearChange LinearChange::then(const LinearChange& next) const {
  std::size_t n = mat.size();
  LinearChange out;
  out.mat.assign(n, std::vector<Scalar>(n, Scalar::zero(mat[0][0].field())));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Scalar acc = Scalar::zero(mat[0][0].field());
      for (std::size_t k = 0; k < n; ++k)
        acc = acc + mat[i][k] * next.mat[k][j];
      out.mat[i][j] = acc;
    }
  return out;
}

bool LinearChange::is_identity() const {
  for (std::size_t i = 0; i < mat.size(); ++i)
    for (std::size_t j = 0; j < mat.size(); ++j) {
      if (i == j && !mat[i][j].is_one()) return false;
      if (i != j && !mat[i][j].is_zero()) return false;
    }
  return true;
}

Polynomial LinearChange::apply(const Polynomial& f) const {
  if (is_identity()) return f;
  const RingPtr& ring = f.ring();
  std::map<std::size_t, Polynomial> images;
  for (std::size_t i = 0; i < mat.size(); ++i) {
    Polynomial img = Polynomial::zero(ring);
    for (std::size_t j = 0; j < mat.size(); ++j)
      if (!mat[i][j].is_zero())
        img = img + Polynomial::variable(ring, j).scaled(mat[i][j]);
    images[i] = img;
  }
  return f.substitute(images);
}

bool LinearChange::preserves_prime(const std::vector<std::size_t>& pvars) const {
  std::vector<bool> in_p(mat.size(), false);
  for (auto v : pvars) in_p.at(v) = true;
  for (auto v : pvars)
    for (std::size_t j = 0; j < mat.size(); ++j)
      if (!mat[v][j].is_zero() && !in_p[j]) return false;
  return true;
}

std::vector<std::string> LinearChange::describe(const RingPtr& ring) const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < mat.size(); ++i) {
    bool trivial = true;
    std::ostringstream os;
    os << ring->var_name(i) << " -> ";
    bool first = true;
    for (std::size_t j = 0; j < mat.size(); ++j) {
      if (mat[i][j].is_zero()) continue;
      if (!(i == j && mat[i][j].is_one())) trivial = false;
      if (!first) os << " + ";
      first = false;
      if (!mat[i][j].is_one()) os << mat[i][j].str() << "*";
      os << ring->var_name(j);
    }
    if (!trivial) out.push_back(os.str());
  }
  if (out.empty()) out.push_back("identity");
  return out;
}

// --------------------------------------------------------- transversality

namespace {

// Leading coefficient of f in the candidate fiber variable; the frame needs
// it to be a nonzero constant so f can be scaled monic.
std::optional<Scalar> monic_unit(const Polynomial& f, std::size_t fiber) {
  long d = f.degree_in(fiber);
  if (d <= 0) return std::nullopt;
  Polynomial lc = f.coeff_of_power(fiber, (unsigned)d);
  if (!lc.is_constant() || lc.is_zero()) return std::nullopt;
  return lc.constant_term();
}

std::vector<std::size_t> complement_of(std::size_t n,
                                       const std::vector<std::size_t>& sub) {
  std::vector<bool> flag(n, false);
  for (auto v : sub) flag.at(v) = true;
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < n; ++v)
    if (!flag[v]) out.push_back(v);
  return out;
}

}  // namespace

TransversalCheck check_transversal(const LocalRingPresentation& P,
                                   const std::vector<std::size_t>& base,
                                   std::size_t fiber) {
  const Polynomial& F = P.equation();
  const RingPtr& ring = P.ring();
  std::vector<std::size_t> split = base;
  split.push_back(fiber);
  std::sort(split.begin(), split.end());
  for (std::size_t v = 0; v < ring->nvars(); ++v)
    if (!std::binary_search(split.begin(), split.end(), v) ||
        std::count(split.begin(), split.end(), v) != 1)
      throw Error(ErrorCode::BadArgument,
                  "base and fiber must partition the variable list");

  auto unit = monic_unit(F, fiber);
  if (!unit)
    throw Error(ErrorCode::NotTransversal,
                "the equation cannot be scaled monic in '" +
                    ring->var_name(fiber) +
                    "' (leading coefficient is not a nonzero constant)");
  Polynomial f = F.scaled(unit->inverse());
  long m = f.degree_in(fiber);

  TransversalCheck rep;
  rep.fiber_degree = m;
  rep.total_order = f.order_at_monomial_prime(Center::at_origin(ring).pvars);
  for (long i = 1; i <= m; ++i) {
    Polynomial ai = f.coeff_of_power(fiber, (unsigned)(m - i));
    OrderValue nu = ai.order_at_monomial_prime(base);
    bool ok = nu >= OrderValue::integer(i);
    if (!ok && rep.failing_index == 0) rep.failing_index = (int)i;
    rep.coefficients.push_back({(int)i, nu, ok});
  }
  rep.ok = rep.total_order == OrderValue::integer(m);
  return rep;
}

std::vector<std::size_t> TransversalFrame::base_vars_in_ext() const {
  return base_vars;  // ext_ring appends w, earlier indices are unchanged
}

std::string TransversalFrame::fiber_name(std::size_t pos) const {
  return presentation.ring()->var_name(fiber_vars.at(pos));
}

namespace {

TransversalFrame build_hypersurface_frame(LocalRingPresentation transformed,
                                          LinearChange change,
                                          std::size_t fiber) {
  const RingPtr& ring = transformed.ring();
  auto unit = monic_unit(transformed.equation(), fiber);
  if (!unit)
    throw Error(ErrorCode::NotTransversal,
                "equation not monic-normalizable in the fiber variable");
  Polynomial f = transformed.equation().scaled(unit->inverse());

  TransversalFrame F;
  F.presentation = transformed;
  F.change = std::move(change);
  F.fiber_vars = {fiber};
  F.base_vars = complement_of(ring->nvars(), F.fiber_vars);
  std::string wname = ring->fresh_var("w");
  F.ext_ring = ring->extended({wname});
  F.wvar = F.ext_ring->require_index(wname);
  std::map<std::size_t, Polynomial> to_w;
  to_w[fiber] = Polynomial::variable(F.ext_ring, F.wvar);
  F.charpolys = {f.substitute(to_w, F.ext_ring)};
  F.generic_rank = f.degree_in(fiber);
  F.fully_validated = true;
  return F;
}

}  // namespace

TransversalFrame frame_from_split(const LocalRingPresentation& P,
                                  const std::vector<std::string>& base_names,
                                  const std::vector<std::string>& fiber_names) {
  const RingPtr& ring = P.ring();
  std::vector<std::size_t> base, fiber;
  for (auto& n : base_names) base.push_back(ring->require_index(n));
  for (auto& n : fiber_names) fiber.push_back(ring->require_index(n));
  if (fiber.empty())
    throw Error(ErrorCode::BadArgument, "a frame needs a fiber variable");

  if (P.is_hypersurface()) {
    if (fiber.size() != 1)
      throw Error(ErrorCode::BadArgument,
                  "a hypersurface frame has exactly one fiber variable");
    TransversalCheck rep = check_transversal(P, base, fiber[0]);
    if (!rep.ok) {
      std::ostringstream os;
      os << "the split is not transversal: the equation has order "
         << rep.total_order.str() << " but degree " << rep.fiber_degree
         << " in '" << ring->var_name(fiber[0]) << "'";
      if (rep.failing_index > 0)
        os << " (coefficient a_" << rep.failing_index << " has order "
           << rep.coefficients[rep.failing_index - 1].order.str() << " < "
           << rep.failing_index << ")";
      throw Error(ErrorCode::NotTransversal, os.str());
    }
    return build_hypersurface_frame(P, LinearChange::identity(ring), fiber[0]);
  }

  // General frame from user input: validated per fiber generator only.
  std::vector<std::size_t> split = base;
  split.insert(split.end(), fiber.begin(), fiber.end());
  std::sort(split.begin(), split.end());
  split.erase(std::unique(split.begin(), split.end()), split.end());
  if (split.size() != ring->nvars())
    throw Error(ErrorCode::BadArgument,
                "base and fiber must partition the variable list");

  TransversalFrame F;
  F.presentation = P;
  F.change = LinearChange::identity(ring);
  F.base_vars = base;
  std::sort(F.base_vars.begin(), F.base_vars.end());
  F.fiber_vars = fiber;
  std::string wname = ring->fresh_var("w");
  F.ext_ring = ring->extended({wname});
  F.wvar = F.ext_ring->require_index(wname);
  F.fully_validated = false;
  F.notes.push_back(
      "partially validated: multi-generator frames are checked per fiber "
      "generator; the generic rank assumes independent generators");

  std::vector<std::size_t> grading = F.base_vars_in_ext();
  grading.push_back(F.wvar);
  F.generic_rank = 1;
  for (auto th : fiber) {
    std::vector<Polynomial> gens;
    for (auto& g : P.gens()) gens.push_back(g.lift_to(F.ext_ring));
    gens.push_back(Polynomial::variable(F.ext_ring, F.wvar) -
                   Polynomial::variable(ring, th).lift_to(F.ext_ring));
    std::vector<std::size_t> keep = F.base_vars_in_ext();
    keep.push_back(F.wvar);
    GroebnerBasis elim = eliminate(gens, keep);
    if (elim.gens.size() != 1)
      throw Error(ErrorCode::NotTransversal,
                  "the projection is not finite over the base: the "
                  "characteristic ideal of '" +
                      ring->var_name(th) + "' is not principal");
    auto unit = monic_unit(elim.gens[0], F.wvar);
    if (!unit)
      throw Error(ErrorCode::NotTransversal,
                  "characteristic polynomial of '" + ring->var_name(th) +
                      "' is not monic-normalizable over the base");
    Polynomial chi = elim.gens[0].scaled(unit->inverse());
    long deg = chi.degree_in(F.wvar);
    if (!(chi.order_at_monomial_prime(grading) == OrderValue::integer(deg)))
      throw Error(ErrorCode::NotTransversal,
                  "order/degree mismatch for the characteristic polynomial "
                  "of '" +
                      ring->var_name(th) + "'");
    F.charpolys.push_back(chi);
    F.generic_rank *= deg;
  }
  return F;
}

TransversalFrame find_transversal_frame(const LocalRingPresentation& P) {
  if (!P.is_hypersurface())
    throw Error(ErrorCode::Unsupported,
                "automatic frame search covers hypersurfaces; supply an "
                "explicit base/fiber split");
  const RingPtr& ring = P.ring();
  const FieldSpec& k = ring->field();
  std::size_t n = ring->nvars();

  std::vector<Scalar> coeffs;
  if (k.is_prime_field()) {
    for (unsigned long c = 1; c < k.characteristic; ++c)
      coeffs.push_back(Scalar(k, (long)c));
  } else {
    for (long c = 1; c <= 8; ++c) {
      coeffs.push_back(Scalar(k, c));
      coeffs.push_back(Scalar(k, -c));
    }
  }

  struct ShearSpec { std::size_t i, j; Scalar c; };
  std::vector<ShearSpec> singles;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      for (auto& c : coeffs) singles.push_back({i, j, c});
    }

  long tried = 0;
  auto attempt = [&](const LinearChange& change)
      -> std::optional<TransversalFrame> {
    ++tried;
    Polynomial moved = change.apply(P.equation());
    LocalRingPresentation Q =
        LocalRingPresentation::make(ring, {moved}, P.supplied_dimension());
    for (std::size_t z = 0; z < n; ++z) {
      if (!monic_unit(moved, z)) continue;
      TransversalCheck rep =
          check_transversal(Q, complement_of(n, {z}), z);
      if (rep.ok) return build_hypersurface_frame(Q, change, z);
    }
    return std::nullopt;
  };

  if (auto F = attempt(LinearChange::identity(ring))) return *F;
  for (auto& s : singles)
    if (auto F = attempt(LinearChange::shear(ring, s.i, s.j, s.c))) return *F;
  for (auto& s1 : singles)
    for (auto& s2 : singles) {
      if (s1.i == s2.i && s1.j == s2.j) continue;  // composes to a single shear
      LinearChange ch = LinearChange::shear(ring, s1.i, s1.j, s1.c)
                            .then(LinearChange::shear(ring, s2.i, s2.j, s2.c));
      if (auto F = attempt(ch)) return *F;
    }
  throw Error(ErrorCode::SearchExhausted,
              "no transversal fiber found among " + std::to_string(tried) +
                  " enumerated linear changes; the tangent cone may vanish on "
                  "every rational direction");
}

Polynomial char_poly_of_element(const TransversalFrame& F,
                                const Polynomial& g) {
  const RingPtr& ring = F.presentation.ring();
  if (!g.valid() || !g.ring()->same(*ring))
    throw Error(ErrorCode::BadArgument, "element outside the ambient ring");
  Polynomial moved = F.change.apply(g);

  if (F.presentation.is_hypersurface()) {
    std::size_t fiber = F.fiber_vars[0];
    // Reduce the fiber degree of g against the monic equation first.
    GroebnerBasis gb = groebner(
        {F.presentation.equation()},
        MonomialOrder::block({fiber}, ring->nvars()));
    moved = normal_form(moved, gb);
    Polynomial f = F.charpolys[0];  // already written in w
    std::map<std::size_t, Polynomial> fiber_to_w;
    fiber_to_w[fiber] = Polynomial::variable(F.ext_ring, F.wvar);
    Polynomial chi;
    if (!moved.involves(fiber)) {
      chi = Polynomial::variable(F.ext_ring, F.wvar) -
            moved.lift_to(F.ext_ring);
      chi = chi.pow((unsigned long)F.generic_rank);
    } else {
      // Res_z(f(z), w - g(z)) with f back in the fiber variable.
      std::map<std::size_t, Polynomial> w_to_fiber;
      w_to_fiber[F.wvar] =
          Polynomial::variable(ring, fiber).lift_to(F.ext_ring);
      Polynomial fz = f.substitute(w_to_fiber, F.ext_ring);
      Polynomial h = Polynomial::variable(F.ext_ring, F.wvar) -
                     moved.lift_to(F.ext_ring);
      chi = resultant_in_var(fz, h, F.ext_ring->require_index(
                                        ring->var_name(fiber)));
    }
    auto unit = monic_unit(chi, F.wvar);
    if (!unit)
      throw Error(ErrorCode::Internal,
                  "resultant is not monic-normalizable in w");
    return chi.scaled(unit->inverse());
  }

  std::vector<Polynomial> gens;
  for (auto& q : F.presentation.gens()) gens.push_back(q.lift_to(F.ext_ring));
  gens.push_back(Polynomial::variable(F.ext_ring, F.wvar) -
                 moved.lift_to(F.ext_ring));
  std::vector<std::size_t> keep = F.base_vars_in_ext();
  keep.push_back(F.wvar);
  GroebnerBasis elim = eliminate(gens, keep);
  if (elim.gens.size() != 1)
    throw Error(ErrorCode::NotTransversal,
                "the characteristic ideal of the element is not principal "
                "(projection not finite)");
  auto unit = monic_unit(elim.gens[0], F.wvar);
  if (!unit)
    throw Error(ErrorCode::NotTransversal,
                "characteristic polynomial not monic-normalizable over the "
                "base");
  return elim.gens[0].scaled(unit->inverse());
}

std::vector<std::size_t> prime_grading_vars(const TransversalFrame& F,
                                            const Center& c, bool with_w) {
  std::vector<std::size_t> grading;
  if (c.origin) {
    grading = F.base_vars_in_ext();
  } else {
    if (!F.change.is_identity() && !F.change.preserves_prime(c.pvars))
      throw Error(ErrorCode::NotTransversal,
                  "the frame's coordinate change does not preserve the "
                  "monomial prime; supply a frame adapted to the center");
    for (auto th : F.fiber_vars)
      if (!std::binary_search(c.pvars.begin(), c.pvars.end(), th))
        throw Error(ErrorCode::BadArgument,
                    "the prime must contain the fiber generator '" +
                        F.presentation.ring()->var_name(th) + "'");
    for (auto v : c.pvars)
      if (std::find(F.base_vars.begin(), F.base_vars.end(), v) !=
          F.base_vars.end())
        grading.push_back(v);
    if (grading.empty())
      throw Error(ErrorCode::BadArgument,
                  "the prime meets the base ring in the zero ideal");
  }
  if (with_w) grading.push_back(F.wvar);
  return grading;
}

PrimeTransversality transversal_at_prime(const TransversalFrame& F,
                                         const std::vector<std::size_t>& pvars) {
  Center c;
  c.pvars = pvars;
  std::sort(c.pvars.begin(), c.pvars.end());
  c.origin = c.pvars.size() == F.presentation.ring()->nvars();
  std::vector<std::size_t> grading = prime_grading_vars(F, c, true);

  PrimeTransversality rep;
  rep.ok = true;
  for (std::size_t i = 0; i < F.charpolys.size(); ++i) {
    long deg = F.charpolys[i].degree_in(F.wvar);
    OrderValue ord = F.charpolys[i].order_at_monomial_prime(grading);
    bool ok = ord == OrderValue::integer(deg);
    std::ostringstream os;
    os << "charpoly of " << F.fiber_name(i) << ": order " << ord.str()
       << (ok ? " = " : " < ") << "degree " << deg;
    rep.detail.push_back(os.str());
    rep.ok = rep.ok && ok;
  }
  return rep;
}

long multiplicity(const LocalRingPresentation& P, const Center& c,
                  const TransversalFrame& F) {
  if (P.is_hypersurface() || P.is_ambient_regular()) return multiplicity(P, c);
  return F.generic_rank;
}

}  // namespace samuel
