// Command-line front end. Everything goes through the shared library's C
// interface in samuel.h; this file only parses flags and formats output.

#include <samuel.h>

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Flags {
  std::string ringfile;
  std::string elem;
  std::string prime;
  std::vector<std::string> at;
  std::string base;
  std::string fiber;
  std::string strategy = "auto";
  bool search = false;
  bool nonlocalized = false;
  bool trace = false;
  int nmax = 0;
  int cap = 0;
  std::string format = "text";
};

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

int finish(samuel_status status, samuel_report* report, const Flags& flags) {
  if (flags.format == "json") {
    char* json = samuel_report_to_json(report);
    if (json) {
      std::cout << json << "\n";
      samuel_string_free(json);
    }
  } else {
    if (status != SAMUEL_OK) {
      std::cerr << "error (" << samuel_status_name(status) << ")";
      for (size_t i = 0; i < samuel_report_diagnostic_count(report); ++i)
        std::cerr << ": " << samuel_report_diagnostic(report, i);
      std::cerr << "\n";
    } else {
      std::cout << "value: " << samuel_report_value(report) << "\n";
      std::cout << "route: " << samuel_report_route(report) << "\n";
      std::cout << "certified: "
                << (samuel_report_certified(report) ? "yes" : "no") << "\n";
      size_t traces = samuel_report_trace_count(report);
      if (flags.trace && traces > 0) {
        std::cout << "trace:\n";
        for (size_t i = 0; i < traces; ++i)
          std::cout << "  " << samuel_report_trace_line(report, i) << "\n";
      }
      for (size_t i = 0; i < samuel_report_diagnostic_count(report); ++i)
        std::cout << "note: " << samuel_report_diagnostic(report, i) << "\n";
    }
  }
  int exit_code = 0;
  if (status != SAMUEL_OK)
    exit_code = 1;
  else if (!samuel_report_certified(report))
    exit_code = 2;
  samuel_report_free(report);
  return exit_code;
}

int fail_text(const std::string& msg, const Flags& flags,
              samuel_status status) {
  if (flags.format == "json") {
    // Shape the error like every other report.
    std::string escaped;
    for (char c : msg) {
      if (c == '"' || c == '\\') escaped.push_back('\\');
      if (c == '\n')
        escaped += "\\n";
      else
        escaped.push_back(c);
    }
    std::cout << "{\"value\":\"\",\"certified\":false,\"route\":\"error\","
              << "\"trace\":[],\"diagnostics\":[\"" << escaped << "\"]}\n";
  } else {
    std::cerr << "error (" << samuel_status_name(status) << "): " << msg
              << "\n";
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact asymptotic Samuel orders and Samuel slopes of presented "
               "local rings"};
  app.require_subcommand(1);

  Flags flags;
  bool corpus_wants_file = false;

  auto add_common = [&](CLI::App* cmd, bool needs_file) {
    if (needs_file)
      cmd->add_option("ringfile", flags.ringfile, "ring file")->required();
    cmd->add_option("--format", flags.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--nmax", flags.nmax, "oracle depth (default 8)");
    cmd->add_option("--cap", flags.cap, "order iteration cap (default 64)");
    cmd->add_flag("--trace", flags.trace, "print computation traces");
    cmd->add_option("--at", flags.at,
                    "recenter at a point, e.g. --at y2=1 (probe: repeatable)");
    cmd->add_option("--prime", flags.prime,
                    "monomial prime center, e.g. --prime x,y1");
    cmd->add_option("--base", flags.base, "explicit frame: base variables");
    cmd->add_option("--fiber", flags.fiber, "explicit frame: fiber variable");
    cmd->add_flag("--search", flags.search, "search for a transversal frame");
  };

  CLI::App* order = app.add_subcommand("order", "asymptotic Samuel order of an element");
  add_common(order, true);
  order->add_option("--elem", flags.elem, "element expression")->required();
  order->add_option("--strategy", flags.strategy, "auto|hickel|oracle")
      ->check(CLI::IsMember({"auto", "hickel", "oracle"}));
  order->add_flag("--nonlocalized", flags.nonlocalized,
                  "order along p^a + I without localizing");

  CLI::App* oracle = app.add_subcommand("oracle", "limit-definition lower bounds");
  add_common(oracle, true);
  oracle->add_option("--elem", flags.elem, "element expression")->required();

  CLI::App* mult = app.add_subcommand("mult", "multiplicity at the center");
  add_common(mult, true);

  CLI::App* frame = app.add_subcommand("frame", "finite-transversal frame check/search");
  add_common(frame, true);

  CLI::App* slope = app.add_subcommand("slope", "Samuel slope at the center");
  add_common(slope, true);

  CLI::App* probe = app.add_subcommand("probe", "slope semicontinuity probe over sample points");
  add_common(probe, true);

  CLI::App* corpus = app.add_subcommand("corpus", "run the built-in example suite");
  corpus->add_option("--format", flags.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  (void)corpus_wants_file;

  CLI11_PARSE(app, argc, argv);

  samuel_options opts;
  samuel_options_init(&opts);
  std::string at_joined = join(flags.at, ";");
  if (!flags.elem.empty()) opts.elem = flags.elem.c_str();
  if (!flags.prime.empty()) opts.prime = flags.prime.c_str();
  if (!at_joined.empty()) opts.at = at_joined.c_str();
  if (!flags.base.empty()) opts.base = flags.base.c_str();
  if (!flags.fiber.empty()) opts.fiber = flags.fiber.c_str();
  opts.strategy = flags.strategy.c_str();
  opts.search = flags.search ? 1 : 0;
  opts.nonlocalized = flags.nonlocalized ? 1 : 0;
  opts.trace = flags.trace ? 1 : 0;
  opts.nmax = flags.nmax;
  opts.order_cap = flags.cap;

  if (corpus->parsed()) {
    samuel_report* rep = nullptr;
    samuel_status status = samuel_run_corpus(&rep);
    if (!rep) return 1;
    if (flags.format == "json") {
      char* json = samuel_report_to_json(rep);
      std::cout << json << "\n";
      samuel_string_free(json);
    } else {
      for (size_t i = 0; i < samuel_report_trace_count(rep); ++i)
        std::cout << samuel_report_trace_line(rep, i) << "\n";
      std::cout << "corpus: " << samuel_report_value(rep) << " passed\n";
    }
    samuel_report_free(rep);
    return status == SAMUEL_OK ? 0 : 1;
  }

  std::ifstream in(flags.ringfile);
  if (!in)
    return fail_text("cannot open ring file '" + flags.ringfile + "'", flags,
                     SAMUEL_ERR_BAD_ARGUMENT);
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::string text = buffer.str();

  samuel_ring* ring = nullptr;
  char* parse_error = nullptr;
  samuel_status status = samuel_ring_parse(text.c_str(), &ring, &parse_error);
  if (status != SAMUEL_OK) {
    std::string msg = parse_error ? parse_error : "unparseable ring file";
    samuel_string_free(parse_error);
    return fail_text(msg, flags, status);
  }

  samuel_report* rep = nullptr;
  if (order->parsed())
    status = samuel_compute_order(ring, &opts, &rep);
  else if (oracle->parsed())
    status = samuel_compute_oracle(ring, &opts, &rep);
  else if (mult->parsed())
    status = samuel_compute_multiplicity(ring, &opts, &rep);
  else if (frame->parsed())
    status = samuel_compute_frame(ring, &opts, &rep);
  else if (slope->parsed())
    status = samuel_compute_slope(ring, &opts, &rep);
  else if (probe->parsed())
    status = samuel_compute_probe(ring, &opts, &rep);
  samuel_ring_free(ring);
  if (!rep) return 1;
  return finish(status, rep, flags);
}
