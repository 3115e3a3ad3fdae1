// Exercises the shared library through its C surface only.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <samuel.h>

#include <json.hpp>

#include <string>

namespace {

const char* kCusp = "field Q\nvars x y\nideal x^2 - y^3\n";
const char* kChar2 = "field F 2\nvars x y\nideal x^2 + y^4 + y^5\n";
const char* kWhitney2 = "field F 2\nvars x y1 y2\nideal x^2 - y1^2*y2\n";

struct Ring {
  samuel_ring* handle = nullptr;
  explicit Ring(const char* text) {
    char* err = nullptr;
    REQUIRE(samuel_ring_parse(text, &handle, &err) == SAMUEL_OK);
    REQUIRE(err == nullptr);
  }
  ~Ring() { samuel_ring_free(handle); }
};

struct Rep {
  samuel_report* handle = nullptr;
  ~Rep() { samuel_report_free(handle); }
};

}  // namespace

TEST_CASE("parse errors come back with status and message") {
  samuel_ring* ring = nullptr;
  char* err = nullptr;
  samuel_status st = samuel_ring_parse("field F 4\nvars x\n", &ring, &err);
  CHECK(st == SAMUEL_ERR_PARSE);
  CHECK(ring == nullptr);
  REQUIRE(err != nullptr);
  CHECK(std::string(err).find("not a prime") != std::string::npos);
  samuel_string_free(err);

  st = samuel_ring_parse("field F 2\nvars x y\nideal x^2 + y^4\n", &ring, &err);
  CHECK(st == SAMUEL_ERR_NOT_SQUAREFREE);
  samuel_string_free(err);
}

TEST_CASE("orders through the C API") {
  Ring ring(kCusp);
  samuel_options opts;
  samuel_options_init(&opts);
  opts.elem = "x";
  Rep rep;
  CHECK(samuel_compute_order(ring.handle, &opts, &rep.handle) == SAMUEL_OK);
  CHECK(std::string(samuel_report_value(rep.handle)) == "3/2");
  CHECK(samuel_report_certified(rep.handle) == 1);
  CHECK(std::string(samuel_report_route(rep.handle)) == "hickel");
}

TEST_CASE("oracle reports are marked as estimates") {
  Ring ring(kCusp);
  samuel_options opts;
  samuel_options_init(&opts);
  opts.elem = "x";
  opts.nmax = 1;
  Rep rep;
  CHECK(samuel_compute_oracle(ring.handle, &opts, &rep.handle) == SAMUEL_OK);
  CHECK(std::string(samuel_report_value(rep.handle)) == "1");
  CHECK(samuel_report_certified(rep.handle) == 0);
  CHECK(samuel_report_trace_count(rep.handle) >= 1);
}

TEST_CASE("slopes and traces through the C API") {
  Ring ring(kChar2);
  samuel_options opts;
  samuel_options_init(&opts);
  opts.trace = 1;
  Rep rep;
  CHECK(samuel_compute_slope(ring.handle, &opts, &rep.handle) == SAMUEL_OK);
  CHECK(std::string(samuel_report_value(rep.handle)) == "5/2");
  bool saw_translation = false;
  for (size_t i = 0; i < samuel_report_trace_count(rep.handle); ++i) {
    std::string line = samuel_report_trace_line(rep.handle, i);
    if (line.find("translate by y^2") != std::string::npos)
      saw_translation = true;
  }
  CHECK(saw_translation);
  bool extremal_noted = false;
  for (size_t i = 0; i < samuel_report_diagnostic_count(rep.handle); ++i) {
    std::string d = samuel_report_diagnostic(rep.handle, i);
    if (d == "extremal: true") extremal_noted = true;
  }
  CHECK(extremal_noted);
}

TEST_CASE("errors surface as statuses with diagnostics") {
  Ring ring(kWhitney2);
  samuel_options opts;
  samuel_options_init(&opts);
  Rep rep;
  // slope needs --prime to contain the fiber: <y1,y2> does not contain x,
  // and the frame cannot be transversal there.
  opts.prime = "y1,y2";
  samuel_status st = samuel_compute_slope(ring.handle, &opts, &rep.handle);
  CHECK(st != SAMUEL_OK);
  REQUIRE(rep.handle != nullptr);
  CHECK(samuel_report_diagnostic_count(rep.handle) >= 1);
}

TEST_CASE("probe and multiplicity verbs") {
  Ring ring(kWhitney2);
  samuel_options opts;
  samuel_options_init(&opts);
  opts.prime = "x,y1";
  Rep mult;
  CHECK(samuel_compute_multiplicity(ring.handle, &opts, &mult.handle) ==
        SAMUEL_OK);
  CHECK(std::string(samuel_report_value(mult.handle)) == "2");

  opts.at = "y2=0;y2=1";
  Rep probe;
  CHECK(samuel_compute_probe(ring.handle, &opts, &probe.handle) == SAMUEL_OK);
  CHECK(std::string(samuel_report_value(probe.handle)) == "1");
  CHECK(samuel_report_diagnostic_count(probe.handle) == 0);
}

TEST_CASE("json output mirrors the accessors") {
  Ring ring(kChar2);
  samuel_options opts;
  samuel_options_init(&opts);
  opts.elem = "x + y^2";
  Rep rep;
  REQUIRE(samuel_compute_order(ring.handle, &opts, &rep.handle) == SAMUEL_OK);
  char* json = samuel_report_to_json(rep.handle);
  REQUIRE(json != nullptr);
  auto parsed = nlohmann::json::parse(json);
  samuel_string_free(json);
  CHECK(parsed["value"] == samuel_report_value(rep.handle));
  CHECK(parsed["certified"].get<bool>() ==
        (samuel_report_certified(rep.handle) == 1));
  CHECK(parsed["route"] == samuel_report_route(rep.handle));
  CHECK(parsed["trace"].size() == samuel_report_trace_count(rep.handle));
  CHECK(parsed["diagnostics"].size() ==
        samuel_report_diagnostic_count(rep.handle));
  CHECK(parsed["value"] == "5/2");
}

TEST_CASE("the built-in corpus runs through the C API") {
  samuel_report* rep = nullptr;
  CHECK(samuel_run_corpus(&rep) == SAMUEL_OK);
  REQUIRE(rep != nullptr);
  CHECK(samuel_report_diagnostic_count(rep) == 0);
  std::string value = samuel_report_value(rep);
  CHECK(value.find('/') != std::string::npos);
  samuel_report_free(rep);
}

TEST_CASE("frame verb reports the applied change") {
  Ring ring("field Q\nvars x y z\nideal x*y - z^3\n");
  samuel_options opts;
  samuel_options_init(&opts);
  opts.search = 1;
  Rep rep;
  CHECK(samuel_compute_frame(ring.handle, &opts, &rep.handle) == SAMUEL_OK);
  CHECK(std::string(samuel_report_value(rep.handle)) == "2");
  bool saw_change = false;
  for (size_t i = 0; i < samuel_report_trace_count(rep.handle); ++i) {
    std::string line = samuel_report_trace_line(rep.handle, i);
    if (line.rfind("change:", 0) == 0) saw_change = true;
  }
  CHECK(saw_change);

  // Explicit split check mirrors the boolean contract.
  samuel_options chk;
  samuel_options_init(&chk);
  chk.base = "x,y";
  chk.fiber = "z";
  Rep rep2;
  CHECK(samuel_compute_frame(ring.handle, &chk, &rep2.handle) == SAMUEL_OK);
  CHECK(std::string(samuel_report_value(rep2.handle)) == "false");
}

TEST_CASE("search exhaustion maps to its own status") {
  Ring ring("field F 2\nvars x y\nideal x^2*y + x*y^2\n");
  samuel_options opts;
  samuel_options_init(&opts);
  opts.search = 1;
  Rep rep;
  samuel_status st = samuel_compute_frame(ring.handle, &opts, &rep.handle);
  CHECK(st == SAMUEL_ERR_SEARCH_EXHAUSTED);
}
