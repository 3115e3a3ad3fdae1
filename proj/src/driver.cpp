#include "samuel/driver.hpp"

#include <cctype>
#include <sstream>

#include "samuel/corpus.hpp"

namespace samuel {

namespace {

std::vector<std::string> split_list(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

Center center_of(const LocalRingPresentation& P, const DriverOptions& o) {
  if (o.prime.empty()) return Center::at_origin(P.ring());
  return Center::monomial_prime(P.ring(), split_list(o.prime, ','));
}

std::map<std::size_t, Scalar> parse_point(const RingPtr& ring,
                                          const std::string& text) {
  std::map<std::size_t, Scalar> point;
  for (auto& item : split_list(text, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorCode::BadArgument,
                  "expected 'var=constant' in '" + item + "'");
    std::size_t v = ring->require_index(item.substr(0, eq));
    std::string val = item.substr(eq + 1);
    try {
      point[v] = Scalar(ring->field(), mpz_class(val));
    } catch (const std::exception&) {
      throw Error(ErrorCode::BadArgument,
                  "expected an integer constant in '" + item + "'");
    }
  }
  return point;
}

LocalRingPresentation maybe_recenter(const LocalRingPresentation& P,
                                     const DriverOptions& o) {
  if (o.at.empty()) return P;
  return recenter(P, parse_point(P.ring(), o.at));
}

FrameSpec frame_spec_of(const DriverOptions& o) {
  if (!o.base.empty() || !o.fiber.empty()) {
    if (o.base.empty() || o.fiber.empty())
      throw Error(ErrorCode::BadArgument,
                  "an explicit frame needs both --base and --fiber");
    return FrameSpec::explicit_split(split_list(o.base, ','),
                                     split_list(o.fiber, ','));
  }
  if (o.search) return FrameSpec::search();
  return FrameSpec::none();
}

Polynomial required_elem(const LocalRingPresentation& P,
                         const DriverOptions& o) {
  if (o.elem.empty())
    throw Error(ErrorCode::BadArgument, "--elem is required for this verb");
  return Polynomial::parse(P.ring(), o.elem);
}

SamuelOptions samuel_opts(const DriverOptions& o) {
  SamuelOptions s;
  if (o.nmax > 0) s.nmax = o.nmax;
  if (o.cap > 0) s.cap = o.cap;
  return s;
}

void append_oracle_rows(Report& rep, const std::vector<OracleRow>& rows) {
  for (auto& r : rows) {
    std::ostringstream os;
    os << "n=" << r.n << ": nu=" << r.naive.str()
       << ", bound=" << r.scaled.str();
    rep.trace.push_back(os.str());
  }
}

void fill_certificate(Report& rep, const OrderCertificate& cert) {
  rep.value = cert.value.str();
  rep.certified = cert.certified;
  rep.route = route_name(cert.route);
  if (cert.route == Route::Hickel && cert.witness_index)
    rep.trace.push_back("witness: " + cert.witness_str() + " (charpoly degree " +
                        std::to_string(cert.charpoly_degree) + ")");
  if (cert.route == Route::Oracle) {
    append_oracle_rows(rep, cert.oracle_rows);
    if (cert.witness_n)
      rep.trace.push_back("witness: " + cert.witness_str());
  }
  rep.diagnostics = cert.notes;
}

}  // namespace

Report run_order(const LocalRingPresentation& input, const DriverOptions& o) {
  LocalRingPresentation P = maybe_recenter(input, o);
  Polynomial g = required_elem(P, o);
  Center c = center_of(P, o);
  Report rep;
  if (o.nonlocalized) {
    if (c.origin)
      throw Error(ErrorCode::BadArgument,
                  "--nonlocalized needs a proper --prime center");
    OrderCertificate cert = samuel_order_nonlocalized_at_prime(
        P, g, c, frame_spec_of(o), samuel_opts(o));
    fill_certificate(rep, cert);
    return rep;
  }
  OrderCertificate cert = samuel_order(P, g, c, strategy_from_name(o.strategy),
                                       frame_spec_of(o), samuel_opts(o));
  fill_certificate(rep, cert);
  return rep;
}

Report run_oracle(const LocalRingPresentation& input, const DriverOptions& o) {
  LocalRingPresentation P = maybe_recenter(input, o);
  Polynomial g = required_elem(P, o);
  Center c = center_of(P, o);
  SamuelOptions opts = samuel_opts(o);
  OracleResult res = samuel_limit_oracle(P, g, c, opts.nmax, opts.cap);
  Report rep;
  rep.route = "oracle";
  rep.value = res.best.str();
  rep.certified = res.infinite;
  append_oracle_rows(rep, res.rows);
  if (res.infinite) {
    rep.diagnostics.push_back("the element maps into the ideal at the center");
  } else {
    rep.trace.push_back("witness: best bound at n=" +
                        std::to_string(res.best_n));
    rep.diagnostics.push_back(
        "oracle value is a certified lower bound, NOT CERTIFIED equal to the "
        "asymptotic order (raise --nmax to refine)");
  }
  return rep;
}

Report run_multiplicity(const LocalRingPresentation& input,
                        const DriverOptions& o) {
  LocalRingPresentation P = maybe_recenter(input, o);
  Center c = center_of(P, o);
  Report rep;
  if (P.is_hypersurface() || P.is_ambient_regular()) {
    rep.value = std::to_string(multiplicity(P, c));
    rep.route = "order";
    rep.certified = true;
    return rep;
  }
  FrameSpec spec = frame_spec_of(o);
  std::optional<TransversalFrame> F =
      acquire_frame(P, spec, /*allow_failure=*/false, &rep.diagnostics);
  if (!F)
    throw Error(ErrorCode::Unsupported,
                "multiplicity of a multi-generator presentation needs an "
                "explicit frame (--base/--fiber)");
  rep.value = std::to_string(multiplicity(P, c, *F));
  rep.route = "frame";
  rep.certified = F->fully_validated;
  for (auto& n : F->notes) rep.diagnostics.push_back(n);
  return rep;
}

Report run_frame(const LocalRingPresentation& input, const DriverOptions& o) {
  LocalRingPresentation P = maybe_recenter(input, o);
  Report rep;
  rep.route = "frame";

  auto describe_frame = [&](const TransversalFrame& F) {
    for (auto& line : F.change.describe(P.ring()))
      rep.trace.push_back("change: " + line);
    std::ostringstream base;
    base << "base:";
    for (auto v : F.base_vars) base << " " << F.presentation.ring()->var_name(v);
    rep.trace.push_back(base.str());
    std::ostringstream fib;
    fib << "fiber:";
    for (auto v : F.fiber_vars) fib << " " << F.presentation.ring()->var_name(v);
    rep.trace.push_back(fib.str());
    for (std::size_t i = 0; i < F.charpolys.size(); ++i)
      rep.trace.push_back("charpoly(" + F.fiber_name(i) +
                          ") = " + F.charpolys[i].str());
    rep.trace.push_back("generic rank: " + std::to_string(F.generic_rank));
    std::vector<std::size_t> base_idx = F.base_vars_in_ext();
    for (std::size_t k = 0; k < F.charpolys.size(); ++k) {
      const Polynomial& chi = F.charpolys[k];
      long m = chi.degree_in(F.wvar);
      for (long i = 1; i <= m; ++i) {
        Polynomial ai = chi.coeff_of_power(F.wvar, (unsigned)(m - i));
        rep.trace.push_back(
            "nu(a_" + std::to_string(i) + " of " + F.fiber_name(k) +
            ") = " + ai.order_at_monomial_prime(base_idx).str());
      }
    }
    for (auto& n : F.notes) rep.diagnostics.push_back(n);
  };

  FrameSpec spec = frame_spec_of(o);
  if (spec.kind == FrameSpec::Kind::Explicit && P.is_hypersurface() &&
      spec.fiber.size() == 1) {
    // Boolean transversality report for an explicit hypersurface split.
    std::vector<std::size_t> base;
    for (auto& n : spec.base) base.push_back(P.ring()->require_index(n));
    std::size_t fiber = P.ring()->require_index(spec.fiber[0]);
    TransversalCheck chk = check_transversal(P, base, fiber);
    rep.value = chk.ok ? "true" : "false";
    rep.certified = true;
    rep.trace.push_back("fiber degree: " + std::to_string(chk.fiber_degree));
    rep.trace.push_back("total order: " + chk.total_order.str());
    for (auto& c : chk.coefficients)
      rep.trace.push_back("nu(a_" + std::to_string(c.index) +
                          ") = " + c.order.str() + (c.ok ? " (ok)" : " (fails)"));
    if (!chk.ok && chk.failing_index > 0)
      rep.diagnostics.push_back("first failing coefficient: a_" +
                                std::to_string(chk.failing_index));
    if (chk.ok) describe_frame(frame_from_split(P, spec.base, spec.fiber));
    return rep;
  }

  if (spec.kind == FrameSpec::Kind::None) spec = FrameSpec::search();
  std::optional<TransversalFrame> F =
      acquire_frame(P, spec, /*allow_failure=*/false, &rep.diagnostics);
  if (!F)
    throw Error(ErrorCode::Unsupported,
                "no frame: multi-generator presentations need --base/--fiber");
  rep.value = std::to_string(F->generic_rank);
  rep.certified = F->fully_validated;
  describe_frame(*F);
  return rep;
}

Report run_slope(const LocalRingPresentation& input, const DriverOptions& o) {
  LocalRingPresentation P = maybe_recenter(input, o);
  Center c = center_of(P, o);
  SlopeReport srep = samuel_slope(P, c, frame_spec_of(o));
  Report rep;
  rep.value = srep.slope.str();
  rep.certified = !srep.partial_validation;
  rep.route = srep.slope.is_infinite() && srep.per_generator.empty()
                  ? "regular-local"
                  : "frame";
  for (auto& gen : srep.per_generator) {
    int step = 0;
    for (auto& st : gen.result.trace) {
      std::ostringstream os;
      os << "theta=" << gen.generator << " step " << ++step
         << ": q=" << st.q.str() << ", wwin=" << st.wwin;
      if (st.root)
        os << ", translate by " << *st.root;
      else
        os << ", stop: " << st.stop_reason;
      if (!st.translation_total.empty() && st.translation_total != "0")
        os << " [s_total=" << st.translation_total << "]";
      rep.trace.push_back(os.str());
    }
  }
  rep.diagnostics.push_back(std::string("extremal: ") +
                            (srep.extremal ? "true" : "false"));
  rep.diagnostics.push_back("excess of embedding dimension: " +
                            std::to_string(srep.excess));
  for (auto& n : srep.notes) rep.diagnostics.push_back(n);
  return rep;
}

Report run_probe(const LocalRingPresentation& input, const DriverOptions& o) {
  if (o.prime.empty())
    throw Error(ErrorCode::BadArgument, "the probe needs a --prime center");
  Center c = center_of(input, o);
  std::vector<std::map<std::size_t, Scalar>> samples;
  for (auto& chunk : split_list(o.at, ';'))
    samples.push_back(parse_point(input.ring(), chunk));
  if (samples.empty())
    throw Error(ErrorCode::BadArgument,
                "the probe needs at least one sample point (--at)");
  ProbeReport prep = semicontinuity_probe(input, c, samples, frame_spec_of(o));
  Report rep;
  rep.route = "probe";
  rep.value = prep.prime_slope.str();
  rep.certified = true;
  for (auto& s : prep.samples) {
    std::ostringstream os;
    if (s.degenerate) {
      os << "at " << s.label << ": skipped as trivial";
    } else {
      os << "at " << s.label << ": slope " << s.slope.str() << " "
         << (s.holds ? ">=" : "<") << " " << prep.prime_slope.str()
         << (s.holds ? " (holds)" : " (violation)");
    }
    rep.trace.push_back(os.str());
  }
  for (auto& v : prep.violations) rep.diagnostics.push_back(v);
  return rep;
}

Report run_corpus() {
  std::vector<CorpusOutcome> outcomes = run_corpus_entries();
  Report rep;
  rep.route = "corpus";
  std::size_t passed = 0;
  for (auto& o : outcomes) {
    if (o.ok) {
      ++passed;
      rep.trace.push_back("PASS " + o.id);
    } else {
      rep.trace.push_back("FAIL " + o.id + ": " + o.detail);
      rep.diagnostics.push_back(o.id + ": " + o.detail);
    }
  }
  rep.value = std::to_string(passed) + "/" + std::to_string(outcomes.size());
  rep.certified = true;
  return rep;
}

}  // namespace samuel
