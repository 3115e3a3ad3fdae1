#ifndef SAMUEL_CORPUS_HPP
#define SAMUEL_CORPUS_HPP

#include <string>
#include <vector>

namespace samuel {

struct CorpusOutcome {
  std::string id;
  bool ok;
  std::string detail;
};

// Built-in example suite: embedded ring files with their known exact
// invariants. Deterministic; any mismatch is a failure.
std::vector<CorpusOutcome> run_corpus_entries();

namespace corpus {
// The embedded ring files, exposed for tests.
extern const char* kCusp;      // Q[x,y]/(x^2 - y^3)
extern const char* kCone;      // Q[x,y,z]/(xy - z^3)
extern const char* kZX3;       // Q[x,y,z]/(y^2 + z x^3)
extern const char* kChar2;     // F2[x,y]/(x^2 + y^4 + y^5)
extern const char* kRegular;   // Q[x,y,z]/(z - xy)
extern const char* kNonSquarefree;  // F2: x^2 + y^4
extern const char* kConeF2;         // F2: x^2 y + x y^2
std::string whitney(unsigned long p);  // Fp[x,y1,y2]/(x^p - y1^p y2)
}  // namespace corpus

}  // namespace samuel

#endif
