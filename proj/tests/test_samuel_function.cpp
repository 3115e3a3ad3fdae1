#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "samuel/corpus.hpp"
#include "samuel/ring_file.hpp"
#include "samuel/samuel_function.hpp"

using namespace samuel;

namespace {

Polynomial P(const RingPtr& r, const std::string& text) {
  return Polynomial::parse(r, text);
}

mpz_class factorial(long n) {
  mpz_class f = 1;
  for (long i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

TEST_CASE("hickel values on the worked examples") {
  auto char2 = parse_ring_file(corpus::kChar2);
  TransversalFrame F2 = find_transversal_frame(char2);
  OrderCertificate a =
      hickel_order(F2, P(char2.ring(), "x"), Center::at_origin(char2.ring()));
  CHECK(a.value == OrderValue::integer(2));
  CHECK(a.certified);
  CHECK(a.witness_index == 2);

  auto cone = parse_ring_file(corpus::kCone);
  TransversalFrame Fc = find_transversal_frame(cone);
  OrderCertificate b =
      hickel_order(Fc, P(cone.ring(), "x*y"), Center::at_origin(cone.ring()));
  CHECK(b.value == OrderValue::integer(3));

  auto w2 = parse_ring_file(corpus::whitney(2));
  TransversalFrame Fw = find_transversal_frame(w2);
  OrderCertificate c = hickel_order(
      Fw, P(w2.ring(), "x"),
      Center::monomial_prime(w2.ring(), {"x", "y1"}));
  CHECK(c.value == OrderValue::integer(1));
}

TEST_CASE("hickel rejects centers where the frame is not transversal") {
  auto zx3 = parse_ring_file(corpus::kZX3);
  TransversalFrame F = find_transversal_frame(zx3);
  CHECK_THROWS_AS(hickel_order(F, P(zx3.ring(), "z"),
                               Center::monomial_prime(zx3.ring(), {"y", "z"})),
                  Error);
}

TEST_CASE("vanishing elements get infinite order on the hickel route") {
  auto cusp = parse_ring_file(corpus::kCusp);
  TransversalFrame F = find_transversal_frame(cusp);
  OrderCertificate inf = hickel_order(F, P(cusp.ring(), "x^2 - y^3"),
                                      Center::at_origin(cusp.ring()));
  CHECK(inf.value.is_infinite());
  CHECK(inf.certified);
}

TEST_CASE("samuel_order dispatch") {
  auto cone = parse_ring_file(corpus::kCone);
  Center m = Center::at_origin(cone.ring());
  OrderCertificate yz = samuel_order(cone, P(cone.ring(), "y*z"), m);
  CHECK(yz.value == OrderValue::integer(2));
  CHECK(yz.route == Route::Hickel);

  OrderCertificate unit = samuel_order(cone, P(cone.ring(), "1 + x"), m);
  CHECK(unit.value == OrderValue::integer(0));

  auto zx3 = parse_ring_file(corpus::kZX3);
  Center p = Center::monomial_prime(zx3.ring(), {"y", "z"});
  OrderCertificate z = samuel_order(zx3, P(zx3.ring(), "z"), p);
  CHECK(z.value == OrderValue::integer(2));
  CHECK(z.route == Route::RegularLocal);
  CHECK(z.certified);

  // Forced oracle stays a lower bound and says so.
  auto cusp = parse_ring_file(corpus::kCusp);
  OrderCertificate est =
      samuel_order(cusp, P(cusp.ring(), "x"), Center::at_origin(cusp.ring()),
                   Strategy::Oracle, FrameSpec::none(), {.nmax = 1});
  CHECK(est.value == OrderValue::integer(1));
  CHECK(!est.certified);
  CHECK(est.route == Route::Oracle);
}

TEST_CASE("auto strategy falls back to the oracle when the search fails") {
  auto bad = parse_ring_file(corpus::kConeF2);
  Center m = Center::at_origin(bad.ring());
  OrderCertificate c = samuel_order(bad, P(bad.ring(), "x"), m);
  CHECK(c.route == Route::Oracle);
  CHECK(!c.certified);
  bool mentioned = false;
  for (auto& n : c.notes)
    mentioned = mentioned || n.find("frame unavailable") != std::string::npos;
  CHECK(mentioned);
  // The hickel strategy propagates the failure instead.
  CHECK_THROWS_AS(samuel_order(bad, P(bad.ring(), "x"), m, Strategy::Hickel),
                  Error);
}

TEST_CASE("nonlocalized orders at primes") {
  auto zx3 = parse_ring_file(corpus::kZX3);
  Center p = Center::monomial_prime(zx3.ring(), {"y", "z"});
  OrderCertificate c =
      samuel_order_nonlocalized_at_prime(zx3, P(zx3.ring(), "z"), p);
  CHECK(c.value == OrderValue::integer(1));
  CHECK(!c.certified);
  bool mentions_mult = false;
  for (auto& n : c.notes)
    mentions_mult = mentions_mult ||
                    (n.find("multiplicity at the prime = 1") != std::string::npos &&
                     n.find("at the origin = 2") != std::string::npos);
  CHECK(mentions_mult);

  // Membership in p gives at least 1 already at n = 1.
  OrderCertificate yv =
      samuel_order_nonlocalized_at_prime(zx3, P(zx3.ring(), "y"), p,
                                         FrameSpec::none(), {.nmax = 1});
  CHECK(yv.value >= OrderValue::integer(1));

  auto w2 = parse_ring_file(corpus::whitney(2));
  Center pw = Center::monomial_prime(w2.ring(), {"x", "y1"});
  OrderCertificate x =
      samuel_order_nonlocalized_at_prime(w2, P(w2.ring(), "x"), pw);
  CHECK(x.value == OrderValue::integer(1));
  CHECK(x.certified);
}

TEST_CASE("oracle bounds never exceed the hickel value") {
  struct Case {
    const char* ring;
    const char* elem;
  };
  std::vector<std::pair<std::string, std::string>> cases = {
      {corpus::kCusp, "x"},        {corpus::kCone, "x*z"},
      {corpus::kCone, "x*y"},      {corpus::kChar2, "x"},
      {corpus::kChar2, "x + y^2"}, {corpus::whitney(2), "x"},
  };
  for (auto& [src, etxt] : cases) {
    auto Pres = parse_ring_file(src);
    Center m = Center::at_origin(Pres.ring());
    Polynomial g = P(Pres.ring(), etxt);
    OrderCertificate h = samuel_order(Pres, g, m, Strategy::Hickel,
                                      FrameSpec::search());
    OracleResult o = samuel_limit_oracle(Pres, g, m, 8);
    OrderValue running = OrderValue::integer(0);
    for (auto& row : o.rows) {
      CHECK(row.scaled <= h.value);
      running = OrderValue::max(running, row.scaled);
      CHECK(running <= h.value);
    }
    // Equality is reached at some n <= 2 * denominator.
    long den = (long)h.value.denominator().get_si();
    OracleResult deep = samuel_limit_oracle(Pres, g, m, std::max(8L, 2 * den));
    CHECK(deep.best == h.value);
    CHECK(deep.best_n <= 2 * den);
  }
}

TEST_CASE("additivity over the base and base-order agreement") {
  // Identity frames: base elements are plain base-variable polynomials.
  struct Case {
    std::string src;
    std::vector<std::string> bases;
    std::vector<std::string> gs;
  };
  std::vector<Case> cases = {
      {corpus::kCusp, {"y", "y^2 - y^3"}, {"x", "x + y^2"}},
      {corpus::kZX3, {"x*z", "x^2 + z"}, {"y", "y + x*z"}},
      {corpus::whitney(3), {"y1*y2", "y1^2 - y2^2"}, {"x", "x + y1*y2"}},
  };
  for (auto& [src, bases, gs] : cases) {
    auto Pres = parse_ring_file(src);
    Center m = Center::at_origin(Pres.ring());
    TransversalFrame F = find_transversal_frame(Pres);
    REQUIRE(F.change.is_identity());
    std::vector<std::size_t> base_idx = F.base_vars;
    for (auto& atxt : bases) {
      Polynomial a = P(Pres.ring(), atxt);
      OrderCertificate ca = samuel_order(Pres, a, m);
      // ν̄(a) equals the plain monomial order of a in the base ring.
      CHECK(ca.value == a.order_at_monomial_prime(base_idx));
      for (auto& gtxt : gs) {
        Polynomial g = P(Pres.ring(), gtxt);
        OrderCertificate cg = samuel_order(Pres, g, m);
        OrderCertificate cag = samuel_order(Pres, a * g, m);
        CHECK(cag.value == ca.value + cg.value);
      }
    }
  }
}

TEST_CASE("homogeneity of the asymptotic order on the hickel route") {
  std::vector<std::pair<std::string, std::string>> cases = {
      {corpus::kCusp, "x"},
      {corpus::kChar2, "x + y^2"},
      {corpus::kCone, "x*z"},
  };
  for (auto& [src, etxt] : cases) {
    auto Pres = parse_ring_file(src);
    Center m = Center::at_origin(Pres.ring());
    Polynomial g = P(Pres.ring(), etxt);
    OrderCertificate base = samuel_order(Pres, g, m);
    for (unsigned long mm : {2ul, 3ul}) {
      OrderCertificate powd = samuel_order(Pres, g.pow(mm), m);
      CHECK(powd.value == base.value.scaled((long)mm));
    }
  }
}

TEST_CASE("denominators divide the factorial of the generic rank") {
  std::vector<std::pair<std::string, std::string>> cases = {
      {corpus::kCusp, "x"},
      {corpus::kChar2, "x + y^2"},
      {corpus::whitney(5), "x"},
  };
  for (auto& [src, etxt] : cases) {
    auto Pres = parse_ring_file(src);
    TransversalFrame F = find_transversal_frame(Pres);
    OrderCertificate c = hickel_order(F, P(Pres.ring(), etxt),
                                      Center::at_origin(Pres.ring()));
    mpz_class f = factorial(F.generic_rank);
    CHECK(f % c.value.denominator() == 0);
  }
}

TEST_CASE("nested centers with equal multiplicity compare correctly") {
  // Same multiplicity at p and m: the order at the prime is bounded by the
  // order at the maximal ideal.
  for (unsigned long pr : {2ul, 3ul}) {
    auto w = parse_ring_file(corpus::whitney(pr));
    Center m = Center::at_origin(w.ring());
    Center p = Center::monomial_prime(w.ring(), {"x", "y1"});
    OrderCertificate at_p = samuel_order(w, P(w.ring(), "x"), p);
    OrderCertificate at_m = samuel_order(w, P(w.ring(), "x"), m);
    CHECK(at_p.value <= at_m.value);
  }
  // Different multiplicities: the conclusion genuinely fails.
  auto zx3 = parse_ring_file(corpus::kZX3);
  OrderCertificate at_p = samuel_order(
      zx3, P(zx3.ring(), "z"), Center::monomial_prime(zx3.ring(), {"y", "z"}));
  OrderCertificate at_m =
      samuel_order(zx3, P(zx3.ring(), "z"), Center::at_origin(zx3.ring()));
  CHECK(at_p.value > at_m.value);
}
