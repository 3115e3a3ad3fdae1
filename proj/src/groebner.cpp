#include "samuel/groebner.hpp"

#include <algorithm>
#include <set>

namespace samuel {

namespace {

// One full division pass. With normalize set, the running pair (r, h) is
// rescaled to put h in primitive integer form after each reduction step;
// both parts must carry the same unit or the remainder mixes scales.
Polynomial reduce_against(const Polynomial& f,
                          const std::vector<Polynomial>& basis,
                          const MonomialOrder& ord, bool normalize) {
  Polynomial r = Polynomial::zero(f.ring());
  Polynomial h = f;
  while (!h.is_zero()) {
    const Term lt = h.leading_term(ord);
    bool reduced = false;
    for (const Polynomial& g : basis) {
      if (g.is_zero()) continue;
      const Term& lg = g.leading_term(ord);
      if (!lg.mono.divides(lt.mono)) continue;
      Polynomial t = Polynomial::from_term(
          f.ring(), lt.mono.divided_by(lg.mono), lt.coeff / lg.coeff);
      h = h - t * g;
      if (normalize && !h.is_zero()) {
        Polynomial scaled = h.normalized_primitive();
        const Term& before = h.leading_term(ord);
        const Term& after = scaled.leading_term(ord);
        Scalar unit = after.coeff / before.coeff;
        r = r.scaled(unit);
        h = std::move(scaled);
      }
      reduced = true;
      break;
    }
    if (!reduced) {
      Polynomial t = Polynomial::from_term(f.ring(), lt.mono, lt.coeff);
      r = r + t;
      h = h - t;
    }
  }
  return r;
}

}  // namespace

GroebnerBasis groebner(std::vector<Polynomial> input, MonomialOrder order) {
  RingPtr ring;
  std::vector<Polynomial> basis;
  for (auto& g : input) {
    if (!g.valid()) throw Error(ErrorCode::BadArgument, "invalid polynomial");
    if (!ring)
      ring = g.ring();
    else if (!ring->same(*g.ring()))
      throw Error(ErrorCode::BadArgument, "generators in different rings");
    if (!g.is_zero()) basis.push_back(g.normalized_primitive());
  }
  GroebnerBasis out;
  out.order = order;
  out.ring = ring;
  if (!ring) throw Error(ErrorCode::BadArgument, "no ambient ring");
  if (basis.empty()) return out;

  auto lm = [&](std::size_t i) { return basis[i].leading_term(order).mono; };

  struct Pair {
    Monomial lcm;
    std::size_t i, j;
  };
  // Normal strategy queue: smallest lcm under the order first, ties by index.
  auto pair_less = [&order](const Pair& a, const Pair& b) {
    if (order.less(a.lcm, b.lcm)) return true;
    if (order.less(b.lcm, a.lcm)) return false;
    return a.i < b.i || (a.i == b.i && a.j < b.j);
  };
  std::set<Pair, decltype(pair_less)> pairs(pair_less);
  std::set<std::pair<std::size_t, std::size_t>> pending;

  auto add_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      pairs.insert({Monomial::lcm(lm(i), lm(j)), i, j});
      pending.insert({i, j});
    }
  };
  for (std::size_t j = 0; j < basis.size(); ++j) add_pairs_for(j);

  auto pair_pending = [&](std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    return pending.count({a, b}) != 0;
  };

  while (!pairs.empty()) {
    Pair p = *pairs.begin();
    pairs.erase(pairs.begin());
    pending.erase({p.i, p.j});

    // Product criterion.
    if (lm(p.i).coprime_with(lm(p.j))) continue;
    // Single-term pairs have identically vanishing S-polynomials.
    if (basis[p.i].terms().size() == 1 && basis[p.j].terms().size() == 1)
      continue;
    // Chain criterion: some k divides the lcm and both side pairs are done.
    bool skip = false;
    for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
      if (k == p.i || k == p.j) continue;
      if (lm(k).divides(p.lcm) && !pair_pending(p.i, k) && !pair_pending(p.j, k))
        skip = true;
    }
    if (skip) continue;

    const Polynomial &gi = basis[p.i], &gj = basis[p.j];
    const Term &li = gi.leading_term(order), &lj = gj.leading_term(order);
    Polynomial s =
        gi * Polynomial::from_term(ring, p.lcm.divided_by(li.mono),
                                   li.coeff.inverse()) -
        gj * Polynomial::from_term(ring, p.lcm.divided_by(lj.mono),
                                   lj.coeff.inverse());
    Polynomial r = reduce_against(s, basis, order, true);
    if (!r.is_zero()) {
      basis.push_back(r.normalized_primitive());
      add_pairs_for(basis.size() - 1);
    }
  }

  // Minimalize: drop generators whose leading term another one divides.
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial &mi = lm(i), &mj = lm(j);
      if (mj.divides(mi) && !(mi == mj)) redundant = true;
      if (mi == mj && j < i) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  // Tail-reduce each against the others, then make monic.
  std::vector<Polynomial> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Polynomial r = others.empty()
                       ? minimal[i]
                       : reduce_against(minimal[i], others, order, false);
    reduced.push_back(r.make_monic(order));
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const Polynomial& a, const Polynomial& b) {
              return order.less(a.leading_term(order).mono,
                                b.leading_term(order).mono);
            });
  out.gens = std::move(reduced);
  return out;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G) {
  if (!f.valid()) throw Error(ErrorCode::BadArgument, "invalid polynomial");
  if (G.ring && !f.ring()->same(*G.ring))
    throw Error(ErrorCode::BadArgument, "polynomial outside the basis ring");
  if (G.gens.empty()) return f;
  return reduce_against(f, G.gens, G.order, false);
}

bool in_ideal(const Polynomial& f, const GroebnerBasis& G) {
  return normal_form(f, G).is_zero();
}

GroebnerBasis eliminate(const std::vector<Polynomial>& gens,
                        const std::vector<std::size_t>& keep) {
  RingPtr ring;
  for (auto& g : gens)
    if (g.valid()) {
      ring = g.ring();
      break;
    }
  if (!ring) throw Error(ErrorCode::BadArgument, "no ambient ring");
  std::vector<bool> kept(ring->nvars(), false);
  for (auto v : keep) kept.at(v) = true;
  std::vector<std::size_t> front;
  for (std::size_t v = 0; v < ring->nvars(); ++v)
    if (!kept[v]) front.push_back(v);

  if (front.empty()) return groebner(gens, MonomialOrder::grevlex());

  GroebnerBasis g = groebner(gens, MonomialOrder::block(front, ring->nvars()));
  GroebnerBasis out;
  out.ring = ring;
  out.order = MonomialOrder::grevlex();
  for (auto& p : g.gens) {
    bool pure = true;
    for (auto v : front)
      if (p.involves(v)) {
        pure = false;
        break;
      }
    if (pure) out.gens.push_back(p);
  }
  return out;
}

GroebnerBasis ideal_quotient(const GroebnerBasis& I, const Polynomial& g) {
  if (!g.valid() || g.is_zero())
    throw Error(ErrorCode::BadArgument, "colon ideal by zero");
  RingPtr ring = I.ring ? I.ring : g.ring();
  if (!g.ring()->same(*ring))
    throw Error(ErrorCode::BadArgument, "colon element outside the ideal ring");
  GroebnerBasis out;
  out.ring = ring;
  out.order = I.order;
  if (I.gens.empty()) return out;  // (0 : g) = 0

  // (I : g) = (I ∩ <g>) / g, the intersection via the tag-variable trick.
  std::string tname = ring->fresh_var("t");
  RingPtr ext = ring->extended({tname});
  std::size_t t = ext->require_index(tname);
  Polynomial tpoly = Polynomial::variable(ext, t);
  std::vector<Polynomial> mixed;
  for (auto& f : I.gens) mixed.push_back(tpoly * f.lift_to(ext));
  mixed.push_back((Polynomial::constant(ext, 1) - tpoly) * g.lift_to(ext));
  std::vector<std::size_t> keep;
  for (std::size_t v = 0; v < ext->nvars(); ++v)
    if (v != t) keep.push_back(v);
  GroebnerBasis inter = eliminate(mixed, keep);

  std::vector<Polynomial> quot;
  for (auto& h : inter.gens) {
    auto q = try_divide(h.restrict_to(ring), g);
    if (!q)
      throw Error(ErrorCode::Internal,
                  "intersection generator not divisible by the colon element");
    quot.push_back(std::move(*q));
  }
  return groebner(quot, I.order);
}

Polynomial poly_lcm(const Polynomial& a, const Polynomial& b) {
  if (!a.valid() || !b.valid())
    throw Error(ErrorCode::BadArgument, "invalid polynomial");
  RingPtr ring = a.ring();
  if (a.is_zero() || b.is_zero()) return Polynomial::zero(ring);
  std::string tname = ring->fresh_var("t");
  RingPtr ext = ring->extended({tname});
  std::size_t t = ext->require_index(tname);
  Polynomial tpoly = Polynomial::variable(ext, t);
  std::vector<Polynomial> mixed = {
      tpoly * a.lift_to(ext),
      (Polynomial::constant(ext, 1) - tpoly) * b.lift_to(ext)};
  std::vector<std::size_t> keep;
  for (std::size_t v = 0; v < ext->nvars(); ++v)
    if (v != t) keep.push_back(v);
  GroebnerBasis inter = eliminate(mixed, keep);
  if (inter.gens.size() != 1)
    throw Error(ErrorCode::Internal,
                "intersection of principal ideals is not principal");
  return inter.gens[0].restrict_to(ring).normalized_primitive();
}

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
  if (!a.valid() || !b.valid())
    throw Error(ErrorCode::BadArgument, "invalid polynomial");
  RingPtr ring = a.ring();
  if (a.is_zero()) return b.is_zero() ? b : b.normalized_primitive();
  if (b.is_zero()) return a.normalized_primitive();
  Polynomial l = poly_lcm(a, b);
  auto g = try_divide(a * b, l);
  if (!g) throw Error(ErrorCode::Internal, "lcm does not divide the product");
  return g->normalized_primitive();
}

}  // namespace samuel
