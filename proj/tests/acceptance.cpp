// Acceptance suite. Every numeric expectation is exact (tolerance zero);
// each criterion prints one PASS/FAIL line and the process exits nonzero
// if anything failed.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "samuel/corpus.hpp"
#include "samuel/driver.hpp"
#include "samuel/ring_file.hpp"
#include "samuel/slope.hpp"

using namespace samuel;

namespace {

std::vector<std::string> issues;
int failures = 0;

void require(bool ok, const std::string& what) {
  if (!ok) issues.push_back(what);
}

void require_value(const OrderValue& got, const std::string& want,
                   const std::string& what) {
  if (got.str() != want)
    issues.push_back(what + ": got " + got.str() + ", expected " + want);
}

void criterion(const std::string& label, const std::function<void()>& body) {
  issues.clear();
  try {
    body();
  } catch (const std::exception& e) {
    issues.push_back(std::string("unexpected exception: ") + e.what());
  }
  if (issues.empty()) {
    std::printf("PASS %s\n", label.c_str());
  } else {
    ++failures;
    std::printf("FAIL %s\n", label.c_str());
    for (auto& i : issues) std::printf("     - %s\n", i.c_str());
  }
  std::fflush(stdout);
}

Polynomial P(const RingPtr& r, const std::string& text) {
  return Polynomial::parse(r, text);
}

Polynomial random_element(const RingPtr& r, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> deg(0, 2);
  std::vector<Term> ts;
  for (int t = 0; t < 3; ++t) {
    Monomial m(r->nvars());
    for (std::size_t v = 0; v < r->nvars(); ++v) m.exp[v] = (unsigned)deg(rng);
    ts.push_back({m, Scalar(r->field(), (long)coeff(rng))});
  }
  return Polynomial::from_terms(r, std::move(ts));
}

mpz_class factorial(long n) {
  mpz_class f = 1;
  for (long i = 2; i <= n; ++i) f *= i;
  return f;
}

struct CorpusElement {
  std::string ring_src;
  std::string elem;
  std::vector<std::string> prime;  // empty: the origin
};

// Every element whose asymptotic order the suite certifies.
std::vector<CorpusElement> certified_elements() {
  return {
      {corpus::kCusp, "x", {}},
      {corpus::kCone, "x", {}},
      {corpus::kCone, "y", {}},
      {corpus::kCone, "z", {}},
      {corpus::kCone, "x*y", {}},
      {corpus::kCone, "x*z", {}},
      {corpus::kCone, "y*z", {}},
      {corpus::kZX3, "z", {}},
      {corpus::kZX3, "z", {"y", "z"}},
      {corpus::kChar2, "x", {}},
      {corpus::kChar2, "x + y^2", {}},
      {corpus::whitney(2), "x", {}},
      {corpus::whitney(2), "x", {"x", "y1"}},
      {corpus::whitney(3), "x", {}},
      {corpus::whitney(3), "x", {"x", "y1"}},
      {corpus::whitney(5), "x", {}},
      {corpus::whitney(5), "x", {"x", "y1"}},
  };
}

Center center_for(const LocalRingPresentation& Pr,
                  const std::vector<std::string>& prime) {
  if (prime.empty()) return Center::at_origin(Pr.ring());
  return Center::monomial_prime(Pr.ring(), prime);
}

}  // namespace

int main() {
  criterion("criterion 0: embedded example suite green in under 10 s", [] {
    auto start = std::chrono::steady_clock::now();
    auto outcomes = run_corpus_entries();
    auto elapsed = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    for (auto& o : outcomes)
      require(o.ok, o.id + ": " + o.detail);
    require(elapsed < 10.0,
            "corpus took " + std::to_string(elapsed) + " s (budget 10 s)");
  });

  criterion("criterion 1: cusp curve orders and 3/2 by both routes", [] {
    auto Pr = parse_ring_file(corpus::kCusp);
    Center m = Center::at_origin(Pr.ring());
    require_value(local_order(Pr, P(Pr.ring(), "x"), m), "1", "nu_m(x)");
    require_value(local_order(Pr, P(Pr.ring(), "x^2"), m), "3", "nu_m(x^2)");
    OrderCertificate h = samuel_order(Pr, P(Pr.ring(), "x"), m,
                                      Strategy::Hickel, FrameSpec::search());
    require_value(h.value, "3/2", "hickel nubar_m(x)");
    require(h.certified, "hickel value must be certified");
    OracleResult o = samuel_limit_oracle(Pr, P(Pr.ring(), "x"), m, 2);
    require_value(o.best, "3/2", "oracle nubar_m(x) at n_max = 2");
    require(o.best == h.value, "the two routes must agree exactly");
  });

  criterion("criterion 2: cone orders, failed base split, slope 1", [] {
    auto Pr = parse_ring_file(corpus::kCone);
    Center m = Center::at_origin(Pr.ring());
    const std::vector<std::pair<std::string, std::string>> expected = {
        {"x", "1"}, {"y", "1"}, {"z", "1"},
        {"x*y", "3"}, {"x*z", "2"}, {"y*z", "2"}};
    for (auto& [e, want] : expected) {
      OrderCertificate c = samuel_order(Pr, P(Pr.ring(), e), m);
      require_value(c.value, want, "nubar_m(" + e + ")");
      require(c.certified && c.route == Route::Hickel,
              "nubar_m(" + e + ") must be certified through a discovered frame");
    }
    TransversalCheck chk = check_transversal(
        Pr, {Pr.ring()->require_index("x"), Pr.ring()->require_index("y")},
        Pr.ring()->require_index("z"));
    require(!chk.ok, "<x,y> must fail the transversality check");
    SlopeReport slope = samuel_slope(Pr, m);
    require_value(slope.slope, "1", "slope");
    require(!slope.extremal, "the cone ring is not extremal");
  });

  criterion("criterion 3: localized vs nonlocalized orders at <y,z>", [] {
    auto Pr = parse_ring_file(corpus::kZX3);
    Center m = Center::at_origin(Pr.ring());
    Center p = Center::monomial_prime(Pr.ring(), {"y", "z"});
    OrderCertificate at_m = samuel_order(Pr, P(Pr.ring(), "z"), m);
    require_value(at_m.value, "1", "nubar_m(z)");
    OrderCertificate at_p = samuel_order(Pr, P(Pr.ring(), "z"), p);
    require_value(at_p.value, "2", "nubar_{pB_p}(z)");
    OrderCertificate nl =
        samuel_order_nonlocalized_at_prime(Pr, P(Pr.ring(), "z"), p);
    require_value(nl.value, "1", "nubar_p(z)");
    require(multiplicity(Pr, p) == 1, "multiplicity at p must be 1");
    require(multiplicity(Pr, m) == 2, "multiplicity at m must be 2");
    bool reported = false;
    for (auto& n : nl.notes)
      reported = reported ||
                 (n.find("multiplicity at the prime = 1") != std::string::npos &&
                  n.find("at the origin = 2") != std::string::npos);
    require(reported,
            "the report must show the multiplicity mismatch 1 against 2");
    require(at_p.value > at_m.value,
            "the order comparison must genuinely fail here (2 > 1)");
  });

  criterion("criterion 4: characteristic-2 slope 5/2 with its trace", [] {
    auto Pr = parse_ring_file(corpus::kChar2);
    Center m = Center::at_origin(Pr.ring());
    require_value(samuel_order(Pr, P(Pr.ring(), "x"), m).value, "2",
                  "nubar_m(x)");
    require_value(samuel_order(Pr, P(Pr.ring(), "x + y^2"), m).value, "5/2",
                  "nubar_m(x + y^2)");
    SlopeReport rep = samuel_slope(Pr, m);
    require_value(rep.slope, "5/2", "slope");
    require(rep.extremal, "extremal case expected");
    const auto& tr = rep.per_generator.at(0).result.trace;
    require(tr.size() == 2, "the trace must have exactly two steps");
    if (tr.size() == 2) {
      require(tr[0].q == OrderValue::integer(2), "first weight must be 2");
      require(tr[0].root.has_value() && *tr[0].root == "y^2",
              "the translation must be y^2");
      require(tr[1].q == OrderValue::ratio(5, 2), "final weight must be 5/2");
    }
  });

  criterion("criterion 5: Whitney slopes for p in {2,3,5}", [] {
    for (unsigned long p : {2ul, 3ul, 5ul}) {
      std::string tag = "p=" + std::to_string(p);
      std::string frac = std::to_string(p + 1) + "/" + std::to_string(p);
      auto Pr = parse_ring_file(corpus::whitney(p));
      SlopeReport at_p = samuel_slope(
          Pr, Center::monomial_prime(Pr.ring(), {"x", "y1"}));
      require_value(at_p.slope, "1", tag + ": slope at the prime");
      SlopeReport at_m = samuel_slope(Pr, Center::at_origin(Pr.ring()));
      require_value(at_m.slope, frac, tag + ": slope at the origin");
      for (long c : {1L, 2L}) {
        if ((unsigned long)c % p == 0) continue;
        std::map<std::size_t, Scalar> pt;
        pt[Pr.ring()->require_index("y2")] = Scalar(Pr.ring()->field(), c);
        auto moved = recenter(Pr, pt);
        SlopeReport at_c =
            samuel_slope(moved, Center::at_origin(moved.ring()));
        std::string where = tag + ", y2=" + std::to_string(c);
        require_value(at_c.slope, frac, where + ": slope");
        const auto& tr = at_c.per_generator.at(0).result.trace;
        require(tr.size() == 2 && tr[0].root.has_value(),
                where + ": must pass through the Frobenius-root translation");
      }
    }
  });

  criterion("criterion 6: slope semicontinuity over the prime", [] {
    for (unsigned long p : {2ul, 3ul, 5ul}) {
      auto Pr = parse_ring_file(corpus::whitney(p));
      Center prime = Center::monomial_prime(Pr.ring(), {"x", "y1"});
      std::vector<std::map<std::size_t, Scalar>> samples;
      for (unsigned long c = 0; c < std::min(p, 3ul); ++c) {
        std::map<std::size_t, Scalar> pt;
        pt[Pr.ring()->require_index("y2")] =
            Scalar(Pr.ring()->field(), (long)c);
        samples.push_back(pt);
      }
      ProbeReport rep = semicontinuity_probe(Pr, prime, samples);
      require(rep.violations.empty(),
              "p=" + std::to_string(p) + ": no violations expected");
      for (auto& s : rep.samples)
        require(s.holds, "p=" + std::to_string(p) + " at " + s.label +
                             ": slope inequality must hold");
    }
  });

  criterion("criterion 7a: order-function axioms, 200 pairs per ring", [] {
    std::mt19937_64 rng(20260810);
    for (auto src : {std::string(corpus::kCusp), std::string(corpus::kCone),
                     std::string(corpus::kZX3), std::string(corpus::kChar2),
                     corpus::whitney(2), corpus::whitney(3),
                     corpus::whitney(5)}) {
      auto Pr = parse_ring_file(src);
      OrderEngine engine(Pr, Center::at_origin(Pr.ring()));
      require(engine.order(Polynomial::constant(Pr.ring(), 1)) ==
                  OrderValue::integer(0),
              "nu(1) = 0");
      require(engine.order(Polynomial::zero(Pr.ring())).is_infinite(),
              "nu(0) = inf");
      for (int i = 0; i < 200; ++i) {
        Polynomial f = random_element(Pr.ring(), rng);
        Polynomial g = random_element(Pr.ring(), rng);
        OrderValue of = engine.order(f), og = engine.order(g);
        if (!(engine.order(f + g) >= OrderValue::min(of, og))) {
          issues.push_back("axiom (i) fails for f=" + f.str() +
                           ", g=" + g.str());
          return;
        }
        if (!(engine.order(f * g) >= of + og)) {
          issues.push_back("axiom (ii) fails for f=" + f.str() +
                           ", g=" + g.str());
          return;
        }
      }
    }
  });

  criterion("criterion 7b: homogeneity of nubar under powers", [] {
    const std::vector<std::pair<std::string, std::string>> cases = {
        {corpus::kCusp, "x"},   {corpus::kCone, "x*z"},
        {corpus::kCone, "x*y"}, {corpus::kChar2, "x"},
        {corpus::kChar2, "x + y^2"}, {corpus::whitney(2), "x"}};
    for (auto& [src, etxt] : cases) {
      auto Pr = parse_ring_file(src);
      Center m = Center::at_origin(Pr.ring());
      Polynomial g = P(Pr.ring(), etxt);
      OrderCertificate base = samuel_order(Pr, g, m);
      require(base.route == Route::Hickel, etxt + ": hickel route expected");
      for (unsigned long mm : {2ul, 3ul}) {
        OrderCertificate powd = samuel_order(Pr, g.pow(mm), m);
        require(powd.value == base.value.scaled((long)mm),
                src.substr(0, 12) + " " + etxt + "^" + std::to_string(mm) +
                    ": expected " + base.value.scaled((long)mm).str() +
                    ", got " + powd.value.str());
      }
    }
  });

  criterion("criterion 7c: additivity over the base ring", [] {
    struct Case {
      std::string src;
      std::vector<std::string> bases;
      std::vector<std::string> gs;
    };
    const std::vector<Case> cases = {
        {corpus::kCusp, {"y", "y^2 - y^3"}, {"x", "x + y^2"}},
        {corpus::kZX3, {"x*z", "x^2 + z"}, {"y", "y + x*z"}},
        {corpus::kChar2, {"y", "y^3"}, {"x", "x + y^2"}},
        {corpus::whitney(3), {"y1*y2", "y1^2 - y2^2"}, {"x", "x + y1*y2"}},
    };
    for (auto& c : cases) {
      auto Pr = parse_ring_file(c.src);
      Center m = Center::at_origin(Pr.ring());
      TransversalFrame F = find_transversal_frame(Pr);
      require(F.change.is_identity(), "expected an identity frame");
      for (auto& atxt : c.bases) {
        Polynomial a = P(Pr.ring(), atxt);
        OrderCertificate ca = samuel_order(Pr, a, m);
        require(ca.value == a.order_at_monomial_prime(F.base_vars),
                atxt + ": nubar must equal the plain base order");
        for (auto& gtxt : c.gs) {
          Polynomial g = P(Pr.ring(), gtxt);
          OrderCertificate cg = samuel_order(Pr, g, m);
          OrderCertificate cag = samuel_order(Pr, a * g, m);
          require(cag.value == ca.value + cg.value,
                  "additivity fails for a=" + atxt + ", g=" + gtxt);
        }
      }
    }
  });

  criterion("criterion 7d: oracle vs hickel differential certification", [] {
    for (auto& ce : certified_elements()) {
      auto Pr = parse_ring_file(ce.ring_src);
      Center c = center_for(Pr, ce.prime);
      Polynomial g = P(Pr.ring(), ce.elem);
      OrderCertificate ref = samuel_order(Pr, g, c);
      require(ref.certified, ce.elem + ": reference value must be certified");
      long den = (long)ref.value.denominator().get_si();
      int depth = std::max(8L, 2 * den);
      OracleResult o = samuel_limit_oracle(Pr, g, c, depth);
      OrderValue running = OrderValue::integer(0);
      bool reached = false;
      for (auto& row : o.rows) {
        running = OrderValue::max(running, row.scaled);
        if (row.n <= 8 && !(row.scaled <= ref.value)) {
          issues.push_back(ce.elem + " at n=" + std::to_string(row.n) +
                           ": oracle bound " + row.scaled.str() +
                           " exceeds the certified value " + ref.value.str());
          return;
        }
        if (row.n <= 2 * den && running == ref.value) reached = true;
      }
      require(reached, ce.elem + " (" + ce.ring_src.substr(0, 12) +
                           "): equality not attained by n = 2*denominator");
    }
  });

  criterion("criterion 7e: rationality and denominator bounds", [] {
    for (auto& ce : certified_elements()) {
      auto Pr = parse_ring_file(ce.ring_src);
      Center c = center_for(Pr, ce.prime);
      OrderCertificate cert = samuel_order(Pr, P(Pr.ring(), ce.elem), c);
      require(cert.certified, ce.elem + ": must be certified");
      require(!cert.value.is_infinite(), ce.elem + ": finite value expected");
      std::string s = cert.value.str();
      require(s.find('.') == std::string::npos,
              "values are never rendered as decimals");
      TransversalFrame F = find_transversal_frame(Pr);
      mpz_class bound = factorial(F.generic_rank);
      require(bound % cert.value.denominator() == 0,
              ce.elem + ": denominator " + cert.value.denominator().get_str() +
                  " must divide rank! = " + bound.get_str());
    }
    // The slope itself obeys the same bound.
    auto char2 = parse_ring_file(corpus::kChar2);
    SlopeReport rep = samuel_slope(char2, Center::at_origin(char2.ring()));
    require(factorial(2) % rep.slope.denominator() == 0,
            "slope denominator must divide rank!");
    auto w5 = parse_ring_file(corpus::whitney(5));
    SlopeReport rep5 = samuel_slope(w5, Center::at_origin(w5.ring()));
    require(factorial(5) % rep5.slope.denominator() == 0,
            "Whitney slope denominator must divide 5!");
  });

  criterion("criterion 7f: strict ascent and stop-value soundness", [] {
    struct SlopeCase {
      std::string src;
      bool recenter_y2;
    };
    const std::vector<SlopeCase> cases = {
        {corpus::kChar2, false},     {corpus::kCone, false},
        {corpus::whitney(2), false}, {corpus::whitney(2), true},
        {corpus::whitney(3), true},  {corpus::whitney(5), true},
    };
    for (auto& sc : cases) {
      auto Pr = parse_ring_file(sc.src);
      LocalRingPresentation used = Pr;
      if (sc.recenter_y2) {
        std::map<std::size_t, Scalar> pt;
        pt[Pr.ring()->require_index("y2")] = Scalar(Pr.ring()->field(), 1);
        used = recenter(Pr, pt);
      }
      TransversalFrame F = find_transversal_frame(used);
      Center m = Center::at_origin(used.ring());
      PrimitiveSlopeResult r = primitive_slope(F, 0, m);
      std::vector<std::size_t> qvars = F.base_vars_in_ext();
      Polynomial chi = F.charpolys[0];
      for (std::size_t i = 0; i < r.trace.size(); ++i) {
        if (i + 1 < r.trace.size()) {
          require(r.trace[i].q < r.trace[i + 1].q,
                  sc.src.substr(0, 12) + ": weights must strictly increase");
          require(r.trace[i].q.is_integer(),
                  "non-final weights must be integers");
          // The applied translation has base order equal to the weight.
          Polynomial s = P(F.ext_ring, *r.trace[i].root);
          require(s.order_at_monomial_prime(qvars) == r.trace[i].q,
                  "translation order must match the weight");
        }
      }
      // The slope value is reproduced by the limit oracle on the translated
      // element θ - s_total.
      if (!r.value.is_infinite()) {
        Polynomial theta =
            Polynomial::variable(used.ring(), F.fiber_vars[0]);
        Polynomial s = r.total_translation.restrict_to(used.ring());
        long den = (long)r.value.denominator().get_si();
        OracleResult o = samuel_limit_oracle(used, theta - s, m,
                                             std::max(8L, 2 * den));
        require(o.best == r.value,
                sc.src.substr(0, 12) +
                    ": the oracle must reach the slope value on the "
                    "translated generator (got " +
                    o.best.str() + ", slope " + r.value.str() + ")");
      }
      // Stop-value soundness for non-integer stops: probing translations of
      // the neighboring degrees cannot push the weight above the stop value.
      if (!r.value.is_infinite() && !r.value.is_integer()) {
        mpz_class ceil_num =
            r.value.numerator() + r.value.denominator() - 1;
        mpz_class ceil_div = ceil_num / r.value.denominator();
        long ceil_q = ceil_div.get_si();
        for (long d : {ceil_q - 1, ceil_q}) {
          if (d < 1) continue;
          for (auto v : qvars) {
            Polynomial probe =
                Polynomial::variable(F.ext_ring, v).pow((unsigned long)d);
            std::map<std::size_t, Polynomial> img;
            img[F.wvar] = Polynomial::variable(F.ext_ring, F.wvar) + probe;
            WeightedForm W = weighted_initial_form(
                r.final_chi.substitute(img), F.wvar, qvars);
            require(W.weight <= r.value,
                    "a degree-" + std::to_string(d) +
                        " translation must not beat the stop value");
          }
        }
      }
    }
  });

  criterion("criterion 8: negative paths", [] {
    try {
      parse_ring_file(corpus::kNonSquarefree);
      issues.push_back("x^2 + y^4 over F2 must be rejected");
    } catch (const Error& e) {
      require(e.code() == ErrorCode::NotSquarefree,
              "the rejection must identify the non-squarefree input");
      require(std::string(e.what()).find("p-th power") != std::string::npos,
              "the message must identify the p-th power");
    }
    auto bad = parse_ring_file(corpus::kConeF2);
    try {
      find_transversal_frame(bad);
      issues.push_back("the search over F2 must exhaust");
    } catch (const Error& e) {
      require(e.code() == ErrorCode::SearchExhausted,
              "exhaustion must be reported as such, not as intransversality");
      require(std::string(e.what()).find("enumerated") != std::string::npos,
              "the error must carry the enumerated set size");
    }
  });

  std::printf("%s\n", failures == 0 ? "ACCEPTANCE: all criteria passed"
                                    : "ACCEPTANCE: FAILURES PRESENT");
  return failures == 0 ? 0 : 1;
}
