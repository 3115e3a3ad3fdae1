#include "samuel/ring_file.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace samuel {

namespace {

std::vector<std::string> split_words(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  std::string w;
  while (is >> w) out.push_back(w);
  return out;
}

[[noreturn]] void fail(int lineno, const std::string& msg) {
  throw Error(ErrorCode::Parse,
              "ring file line " + std::to_string(lineno) + ": " + msg);
}

}  // namespace

LocalRingPresentation parse_ring_file(std::string_view text) {
  std::optional<FieldSpec> field;
  std::vector<std::string> vars;
  std::vector<std::pair<int, std::string>> ideal_lines;
  std::optional<long> dim;

  std::istringstream is{std::string(text)};
  std::string raw;
  int lineno = 0;
  while (std::getline(is, raw)) {
    ++lineno;
    std::string line = raw.substr(0, raw.find('#'));
    std::vector<std::string> words = split_words(line);
    if (words.empty()) continue;
    const std::string& key = words[0];
    if (key == "field") {
      if (field) fail(lineno, "duplicate 'field' line");
      if (words.size() == 2 && words[1] == "Q") {
        field = FieldSpec::rationals();
      } else if (words.size() == 3 && words[1] == "F") {
        unsigned long p = 0;
        try {
          p = std::stoul(words[2]);
        } catch (...) {
          fail(lineno, "expected a prime after 'field F'");
        }
        if (!is_prime_number(p)) fail(lineno, words[2] + " is not a prime");
        field = FieldSpec::prime_field(p);
      } else {
        fail(lineno, "expected 'field Q' or 'field F <p>'");
      }
    } else if (key == "vars") {
      if (!vars.empty()) fail(lineno, "duplicate 'vars' line");
      vars.assign(words.begin() + 1, words.end());
      if (vars.empty()) fail(lineno, "expected at least one variable");
    } else if (key == "ideal") {
      std::string rest = line.substr(line.find("ideal") + 5);
      ideal_lines.emplace_back(lineno, rest);
    } else if (key == "dim") {
      if (words.size() != 2) fail(lineno, "expected 'dim <n>'");
      try {
        dim = std::stol(words[1]);
      } catch (...) {
        fail(lineno, "expected an integer dimension");
      }
    } else {
      fail(lineno, "unknown directive '" + key + "'");
    }
  }
  if (!field) throw Error(ErrorCode::Parse, "ring file: missing 'field' line");
  if (vars.empty()) throw Error(ErrorCode::Parse, "ring file: missing 'vars' line");

  RingPtr ring;
  try {
    ring = PolyRing::make(*field, vars);
  } catch (const Error& e) {
    throw Error(ErrorCode::Parse, std::string("ring file: ") + e.what());
  }
  std::vector<Polynomial> gens;
  for (auto& [ln, src] : ideal_lines) {
    try {
      gens.push_back(Polynomial::parse(ring, src));
    } catch (const Error& e) {
      fail(ln, e.what());
    }
  }
  if (gens.size() > 1 && !dim)
    throw Error(ErrorCode::Parse,
                "ring file: multi-generator ideals need a 'dim' line");
  return LocalRingPresentation::make(ring, std::move(gens), dim);
}

}  // namespace samuel
