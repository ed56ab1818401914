#ifndef XHO_VERIFY_HPP
#define XHO_VERIFY_HPP

#include <functional>
#include <string>
#include <vector>

#include "xho/complex.hpp"
#include "xho/graph.hpp"

namespace xho::verify {

struct CheckResult {
  std::string name;
  bool pass = false;
  double seconds = 0.0;
  std::string note;
};

// The acceptance criteria, one entry per criterion, plus the extra
// regression checks run by `xho verify-paper`. All deterministic. The
// callback, when given, sees each result as it lands.
using Progress = std::function<void(const CheckResult&)>;
std::vector<CheckResult> run_acceptance(const Progress& progress = {});
std::vector<CheckResult> run_paper_suite(const Progress& progress = {});

// Deterministic complex corpus used by the flag and homology checks.
std::vector<Complex> flag_corpus();      // >= 50 complexes
std::vector<Complex> homology_corpus();  // small complexes, exact homology scale

// Exhaustive small-object generators shared with the tests.
std::vector<Complex> complexes_up_to_3_vertices();
std::vector<Graph> loop_graphs_up_to_3_vertices();
std::vector<Graph> reflexive_graphs_up_to_3_vertices();

}  // namespace xho::verify

#endif  // XHO_VERIFY_HPP
