#include "samuel/corpus.hpp"

#include <functional>
#include <sstream>

#include "samuel/ring_file.hpp"
#include "samuel/slope.hpp"

namespace samuel {

namespace corpus {
const char* kCusp = "field Q\nvars x y\nideal x^2 - y^3\n";
const char* kCone = "field Q\nvars x y z\nideal x*y - z^3\n";
const char* kZX3 = "field Q\nvars x y z\nideal y^2 + z*x^3\n";
const char* kChar2 = "field F 2\nvars x y\nideal x^2 + y^4 + y^5\n";
const char* kRegular = "field Q\nvars x y z\nideal z - x*y\n";
const char* kNonSquarefree = "field F 2\nvars x y\nideal x^2 + y^4\n";
const char* kConeF2 = "field F 2\nvars x y\nideal x^2*y + x*y^2\n";

std::string whitney(unsigned long p) {
  std::ostringstream os;
  os << "field F " << p << "\nvars x y1 y2\nideal x^" << p << " - y1^" << p
     << "*y2\n";
  return os.str();
}
}  // namespace corpus

namespace {

struct Mismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Mismatch(what);
}

void expect_value(const OrderValue& got, const std::string& want,
                  const std::string& what) {
  if (got.str() != want)
    throw Mismatch(what + ": got " + got.str() + ", expected " + want);
}

Polynomial elem(const LocalRingPresentation& P, const std::string& text) {
  return Polynomial::parse(P.ring(), text);
}

OrderCertificate order_auto(const LocalRingPresentation& P,
                            const std::string& g, const Center& c) {
  return samuel_order(P, elem(P, g), c);
}

struct Entry {
  std::string id;
  std::function<void()> run;
};

std::vector<Entry> build_entries() {
  std::vector<Entry> es;
  auto add = [&](std::string id, std::function<void()> run) {
    es.push_back({std::move(id), std::move(run)});
  };

  add("cusp/naive-orders", [] {
    auto P = parse_ring_file(corpus::kCusp);
    Center m = Center::at_origin(P.ring());
    expect_value(local_order(P, elem(P, "x"), m), "1", "nu_m(x)");
    expect_value(local_order(P, elem(P, "x^2"), m), "3", "nu_m(x^2)");
  });

  add("cusp/asymptotic-order", [] {
    auto P = parse_ring_file(corpus::kCusp);
    Center m = Center::at_origin(P.ring());
    OrderCertificate h = samuel_order(P, elem(P, "x"), m, Strategy::Hickel,
                                      FrameSpec::search());
    expect_value(h.value, "3/2", "hickel nubar_m(x)");
    expect(h.certified, "hickel certificate must be certified");
    OracleResult o = samuel_limit_oracle(P, elem(P, "x"), m, 2);
    expect_value(o.best, "3/2", "oracle nubar_m(x) at n_max=2");
    expect(o.best_n == 2, "oracle best bound should land at n=2");
  });

  add("cone/orders", [] {
    auto P = parse_ring_file(corpus::kCone);
    Center m = Center::at_origin(P.ring());
    for (auto& [g, want] :
         std::vector<std::pair<std::string, std::string>>{{"x", "1"},
                                                          {"y", "1"},
                                                          {"z", "1"},
                                                          {"x*y", "3"},
                                                          {"x*z", "2"},
                                                          {"y*z", "2"}}) {
      OrderCertificate c = order_auto(P, g, m);
      expect_value(c.value, want, "nubar_m(" + g + ")");
      expect(c.certified, "order of " + g + " must be certified");
    }
  });

  add("cone/base-split-fails", [] {
    auto P = parse_ring_file(corpus::kCone);
    auto ring = P.ring();
    TransversalCheck rep = check_transversal(
        P, {ring->require_index("x"), ring->require_index("y")},
        ring->require_index("z"));
    expect(!rep.ok, "<x,y> must not be a reduction of the maximal ideal");
    expect(rep.fiber_degree == 3 && rep.total_order == OrderValue::integer(2),
           "expected degree 3 against order 2");
  });

  add("cone/slope", [] {
    auto P = parse_ring_file(corpus::kCone);
    SlopeReport rep = samuel_slope(P, Center::at_origin(P.ring()));
    expect_value(rep.slope, "1", "slope of the cone ring");
    expect(!rep.extremal, "the cone ring is not extremal");
  });

  add("cone/multiplicity", [] {
    auto P = parse_ring_file(corpus::kCone);
    expect(multiplicity(P, Center::at_origin(P.ring())) == 2,
           "multiplicity at the origin must be 2");
  });

  add("zx3/orders", [] {
    auto P = parse_ring_file(corpus::kZX3);
    Center m = Center::at_origin(P.ring());
    Center p = Center::monomial_prime(P.ring(), {"y", "z"});
    OrderCertificate at_m = order_auto(P, "z", m);
    expect_value(at_m.value, "1", "nubar_m(z)");
    OrderCertificate at_p = order_auto(P, "z", p);
    expect_value(at_p.value, "2", "nubar_{pB_p}(z)");
    expect(at_p.route == Route::RegularLocal,
           "the localized ring at p is regular; expected the regular-local "
           "route");
    OrderCertificate nl =
        samuel_order_nonlocalized_at_prime(P, elem(P, "z"), p);
    expect_value(nl.value, "1", "nubar_p(z) without localizing");
    expect(!nl.certified,
           "the multiplicities at p and m differ; the nonlocalized value "
           "stays an estimate");
    expect(multiplicity(P, p) == 1 &&
               multiplicity(P, Center::at_origin(P.ring())) == 2,
           "multiplicity report must show 1 at p against 2 at m");
  });

  add("char2/orders-and-slope", [] {
    auto P = parse_ring_file(corpus::kChar2);
    Center m = Center::at_origin(P.ring());
    expect_value(order_auto(P, "x", m).value, "2", "nubar_m(x)");
    expect_value(order_auto(P, "x + y^2", m).value, "5/2", "nubar_m(x+y^2)");
    SlopeReport rep = samuel_slope(P, m);
    expect_value(rep.slope, "5/2", "slope");
    expect(rep.extremal, "extremal case expected");
    expect(rep.excess == 1, "excess of embedding dimension must be 1");
    const auto& tr = rep.per_generator.at(0).result.trace;
    expect(tr.size() == 2, "expected a two-step trace");
    expect(tr[0].q == OrderValue::integer(2) && tr[0].root.has_value(),
           "first step: q=2 with a translation");
    expect(*tr[0].root == "y^2", "the translation must be y^2");
    expect(tr[1].q == OrderValue::ratio(5, 2) && !tr[1].root.has_value(),
           "second step: stop at q=5/2");
  });

  for (unsigned long p : {2ul, 3ul, 5ul}) {
    std::string frac = std::to_string(p + 1) + "/" + std::to_string(p);
    add("whitney-" + std::to_string(p) + "/prime", [p] {
      auto P = parse_ring_file(corpus::whitney(p));
      Center pr = Center::monomial_prime(P.ring(), {"x", "y1"});
      expect(multiplicity(P, pr) == (long)p,
             "multiplicity at the prime must be " + std::to_string(p));
      OrderCertificate ord = order_auto(P, "x", pr);
      expect_value(ord.value, "1", "nubar at the prime of x");
      expect(ord.route == Route::Hickel && ord.certified,
             "expected a certified hickel value at the prime");
      SlopeReport rep = samuel_slope(P, pr);
      expect_value(rep.slope, "1", "slope at the prime");
      expect(!rep.extremal, "not extremal at the prime");
      OrderCertificate nl =
          samuel_order_nonlocalized_at_prime(P, elem(P, "x"), pr);
      expect_value(nl.value, "1", "nonlocalized order of x");
      expect(nl.certified,
             "the prime is in the top multiplicity locus; the nonlocalized "
             "order is certified equal to the localized one");
    });
    add("whitney-" + std::to_string(p) + "/maximal", [p, frac] {
      auto P = parse_ring_file(corpus::whitney(p));
      Center m = Center::at_origin(P.ring());
      SlopeReport rep = samuel_slope(P, m);
      expect_value(rep.slope, frac, "slope at the origin");
      expect(rep.extremal, "extremal at the origin");
      for (long c : {1L, 2L}) {
        if (p == 2 && c == 2) continue;  // 2 = 0 mod 2: the origin again
        std::map<std::size_t, Scalar> point;
        point[P.ring()->require_index("y2")] = Scalar(P.ring()->field(), c);
        LocalRingPresentation moved = recenter(P, point);
        SlopeReport at_c = samuel_slope(moved, Center::at_origin(moved.ring()));
        expect_value(at_c.slope, frac,
                     "slope at y2=" + std::to_string(c));
        const auto& tr = at_c.per_generator.at(0).result.trace;
        expect(tr.size() == 2 && tr[0].root.has_value(),
               "recentered slope must pass through one Frobenius-root "
               "translation");
      }
    });
  }

  for (unsigned long p : {2ul, 3ul}) {
    add("whitney-" + std::to_string(p) + "/semicontinuity", [p] {
      auto P = parse_ring_file(corpus::whitney(p));
      Center pr = Center::monomial_prime(P.ring(), {"x", "y1"});
      std::vector<std::map<std::size_t, Scalar>> samples;
      for (unsigned long c = 0; c < (p == 2 ? 2ul : 3ul); ++c) {
        std::map<std::size_t, Scalar> pt;
        pt[P.ring()->require_index("y2")] =
            Scalar(P.ring()->field(), (long)c);
        samples.push_back(pt);
      }
      ProbeReport rep = semicontinuity_probe(P, pr, samples);
      expect_value(rep.prime_slope, "1", "slope at the prime");
      expect(rep.violations.empty(), "no violations expected");
      for (auto& s : rep.samples)
        expect(s.holds, "inequality must hold at " + s.label);
    });
  }

  add("regular/slope-infinite", [] {
    auto P = parse_ring_file(corpus::kRegular);
    Center m = Center::at_origin(P.ring());
    expect(multiplicity(P, m) == 1, "regular point has multiplicity 1");
    SlopeReport rep = samuel_slope(P, m);
    expect(rep.slope.is_infinite(), "regular rings have infinite slope");
    OrderCertificate unit = order_auto(P, "1 + x", m);
    expect_value(unit.value, "0", "units have order 0");
  });

  add("reject/non-squarefree", [] {
    try {
      parse_ring_file(corpus::kNonSquarefree);
    } catch (const Error& e) {
      expect(e.code() == ErrorCode::NotSquarefree,
             std::string("expected the p-th power rejection, got: ") +
                 e.what());
      return;
    }
    throw Mismatch("x^2 + y^4 over F2 must be rejected as non-squarefree");
  });

  add("reject/search-exhausted", [] {
    auto P = parse_ring_file(corpus::kConeF2);
    try {
      find_transversal_frame(P);
    } catch (const Error& e) {
      expect(e.code() == ErrorCode::SearchExhausted,
             std::string("expected search exhaustion, got: ") + e.what());
      std::string msg = e.what();
      expect(msg.find("enumerated") != std::string::npos,
             "the error must report the enumerated set size");
      return;
    }
    throw Mismatch(
        "the F2 surface with a fully rational tangent cone must exhaust the "
        "frame search");
  });

  return es;
}

}  // namespace

std::vector<CorpusOutcome> run_corpus_entries() {
  std::vector<CorpusOutcome> out;
  for (auto& e : build_entries()) {
    CorpusOutcome o;
    o.id = e.id;
    try {
      e.run();
      o.ok = true;
    } catch (const std::exception& ex) {
      o.ok = false;
      o.detail = ex.what();
    }
    out.push_back(std::move(o));
  }
  return out;
}

}  // namespace samuel
