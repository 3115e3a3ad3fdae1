#include "samuel.h"

#include <cstdlib>
#include <cstring>
#include <new>

#include "samuel/driver.hpp"

struct samuel_ring {
  samuel::LocalRingPresentation presentation;
};

struct samuel_report {
  samuel::Report report;
};

namespace {

samuel_status status_of(samuel::ErrorCode code) {
  using samuel::ErrorCode;
  switch (code) {
    case ErrorCode::Parse: return SAMUEL_ERR_PARSE;
    case ErrorCode::BadArgument: return SAMUEL_ERR_BAD_ARGUMENT;
    case ErrorCode::NotOnVariety: return SAMUEL_ERR_NOT_ON_VARIETY;
    case ErrorCode::NotSquarefree: return SAMUEL_ERR_NOT_SQUAREFREE;
    case ErrorCode::SearchExhausted: return SAMUEL_ERR_SEARCH_EXHAUSTED;
    case ErrorCode::NotTransversal: return SAMUEL_ERR_NOT_TRANSVERSAL;
    case ErrorCode::CapExceeded: return SAMUEL_ERR_CAP_EXCEEDED;
    case ErrorCode::Unsupported: return SAMUEL_ERR_UNSUPPORTED;
    case ErrorCode::Internal: return SAMUEL_ERR_INTERNAL;
  }
  return SAMUEL_ERR_INTERNAL;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

samuel::DriverOptions driver_options(const samuel_options* opts) {
  samuel::DriverOptions o;
  if (!opts) return o;
  if (opts->elem) o.elem = opts->elem;
  if (opts->prime) o.prime = opts->prime;
  if (opts->at) o.at = opts->at;
  if (opts->base) o.base = opts->base;
  if (opts->fiber) o.fiber = opts->fiber;
  if (opts->strategy) o.strategy = opts->strategy;
  o.search = opts->search != 0;
  o.nonlocalized = opts->nonlocalized != 0;
  o.trace = opts->trace != 0;
  if (opts->nmax > 0) o.nmax = opts->nmax;
  if (opts->order_cap > 0) o.cap = opts->order_cap;
  return o;
}

template <typename Fn>
samuel_status run_verb(const samuel_ring* ring, const samuel_options* opts,
                       samuel_report** out_report, Fn&& fn) {
  if (!out_report) return SAMUEL_ERR_BAD_ARGUMENT;
  *out_report = nullptr;
  auto* rep = new (std::nothrow) samuel_report;
  if (!rep) return SAMUEL_ERR_NOMEM;
  samuel_status status = SAMUEL_OK;
  try {
    if (!ring) throw samuel::Error(samuel::ErrorCode::BadArgument, "null ring");
    rep->report = fn(ring->presentation, driver_options(opts));
  } catch (const samuel::Error& e) {
    status = status_of(e.code());
    rep->report.value = "";
    rep->report.certified = false;
    rep->report.route = "error";
    rep->report.diagnostics = {e.what()};
  } catch (const std::bad_alloc&) {
    delete rep;
    return SAMUEL_ERR_NOMEM;
  } catch (const std::exception& e) {
    status = SAMUEL_ERR_INTERNAL;
    rep->report.value = "";
    rep->report.certified = false;
    rep->report.route = "error";
    rep->report.diagnostics = {e.what()};
  }
  *out_report = rep;
  return status;
}

}  // namespace

extern "C" {

const char* samuel_version(void) { return "1.0.0"; }

const char* samuel_status_name(samuel_status status) {
  switch (status) {
    case SAMUEL_OK: return "ok";
    case SAMUEL_ERR_PARSE: return "parse error";
    case SAMUEL_ERR_BAD_ARGUMENT: return "bad argument";
    case SAMUEL_ERR_NOT_ON_VARIETY: return "point not on the variety";
    case SAMUEL_ERR_NOT_SQUAREFREE: return "non-squarefree (non-reduced) input";
    case SAMUEL_ERR_SEARCH_EXHAUSTED: return "frame search exhausted";
    case SAMUEL_ERR_NOT_TRANSVERSAL: return "not transversal";
    case SAMUEL_ERR_CAP_EXCEEDED: return "iteration cap exceeded";
    case SAMUEL_ERR_UNSUPPORTED: return "unsupported";
    case SAMUEL_ERR_CORPUS_MISMATCH: return "corpus mismatch";
    case SAMUEL_ERR_INTERNAL: return "internal error";
    case SAMUEL_ERR_NOMEM: return "out of memory";
  }
  return "unknown";
}

samuel_status samuel_ring_parse(const char* text, samuel_ring** out_ring,
                                char** out_error) {
  if (out_error) *out_error = nullptr;
  if (!text || !out_ring) return SAMUEL_ERR_BAD_ARGUMENT;
  *out_ring = nullptr;
  try {
    auto* ring = new samuel_ring{samuel::parse_ring_file(text)};
    *out_ring = ring;
    return SAMUEL_OK;
  } catch (const samuel::Error& e) {
    if (out_error) *out_error = dup_string(e.what());
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    return SAMUEL_ERR_NOMEM;
  } catch (const std::exception& e) {
    if (out_error) *out_error = dup_string(e.what());
    return SAMUEL_ERR_INTERNAL;
  }
}

void samuel_ring_free(samuel_ring* ring) { delete ring; }

void samuel_string_free(char* s) { std::free(s); }

void samuel_options_init(samuel_options* opts) {
  if (opts) std::memset(opts, 0, sizeof(*opts));
}

samuel_status samuel_compute_order(const samuel_ring* ring,
                                   const samuel_options* opts,
                                   samuel_report** out_report) {
  return run_verb(ring, opts, out_report, samuel::run_order);
}

samuel_status samuel_compute_oracle(const samuel_ring* ring,
                                    const samuel_options* opts,
                                    samuel_report** out_report) {
  return run_verb(ring, opts, out_report, samuel::run_oracle);
}

samuel_status samuel_compute_multiplicity(const samuel_ring* ring,
                                          const samuel_options* opts,
                                          samuel_report** out_report) {
  return run_verb(ring, opts, out_report, samuel::run_multiplicity);
}

samuel_status samuel_compute_frame(const samuel_ring* ring,
                                   const samuel_options* opts,
                                   samuel_report** out_report) {
  return run_verb(ring, opts, out_report, samuel::run_frame);
}

samuel_status samuel_compute_slope(const samuel_ring* ring,
                                   const samuel_options* opts,
                                   samuel_report** out_report) {
  return run_verb(ring, opts, out_report, samuel::run_slope);
}

samuel_status samuel_compute_probe(const samuel_ring* ring,
                                   const samuel_options* opts,
                                   samuel_report** out_report) {
  return run_verb(ring, opts, out_report, samuel::run_probe);
}

samuel_status samuel_run_corpus(samuel_report** out_report) {
  if (!out_report) return SAMUEL_ERR_BAD_ARGUMENT;
  *out_report = nullptr;
  auto* rep = new (std::nothrow) samuel_report;
  if (!rep) return SAMUEL_ERR_NOMEM;
  samuel_status status = SAMUEL_OK;
  try {
    rep->report = samuel::run_corpus();
    if (!rep->report.diagnostics.empty()) status = SAMUEL_ERR_CORPUS_MISMATCH;
  } catch (const std::exception& e) {
    status = SAMUEL_ERR_INTERNAL;
    rep->report.route = "error";
    rep->report.diagnostics = {e.what()};
  }
  *out_report = rep;
  return status;
}

const char* samuel_report_value(const samuel_report* report) {
  return report ? report->report.value.c_str() : "";
}

int samuel_report_certified(const samuel_report* report) {
  return report && report->report.certified ? 1 : 0;
}

const char* samuel_report_route(const samuel_report* report) {
  return report ? report->report.route.c_str() : "";
}

size_t samuel_report_trace_count(const samuel_report* report) {
  return report ? report->report.trace.size() : 0;
}

const char* samuel_report_trace_line(const samuel_report* report,
                                     size_t index) {
  if (!report || index >= report->report.trace.size()) return nullptr;
  return report->report.trace[index].c_str();
}

size_t samuel_report_diagnostic_count(const samuel_report* report) {
  return report ? report->report.diagnostics.size() : 0;
}

const char* samuel_report_diagnostic(const samuel_report* report,
                                     size_t index) {
  if (!report || index >= report->report.diagnostics.size()) return nullptr;
  return report->report.diagnostics[index].c_str();
}

char* samuel_report_to_json(const samuel_report* report) {
  if (!report) return nullptr;
  return dup_string(report->report.to_json());
}

void samuel_report_free(samuel_report* report) { delete report; }

}  // extern "C"
