#ifndef XHO_COLLAPSE_HPP
#define XHO_COLLAPSE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "xho/complex.hpp"
#include "xho/homotopy.hpp"

namespace xho {

// Least vertex dominating v (every facet through v also contains it), or
// absence. A vertex never dominates itself.
std::optional<int> dominated(const Complex& k, int v);

// Deletion of a dominated vertex; throws if v is not dominated.
Complex elementary_collapse(const Complex& k, int v);

// Replayable collapse certificate. Steps are recorded by vertex label so
// they survive the reindexing that deletion performs.
struct CollapseSequence {
  std::vector<std::pair<std::string, std::string>> steps;  // (deleted, dominator)
};

// Replays the sequence, validating domination at every step.
Complex replay(const Complex& k, const CollapseSequence& seq);

// Greedy core: repeatedly deletes the least dominated vertex until none
// remains. Deterministic.
std::pair<Complex, CollapseSequence> core(const Complex& k);

// Strong-collapse search from l to the label-matched subcomplex k: only
// vertices outside k may be deleted. Greedy first, then backtracking over
// deletion choices within the budget.
Outcome<CollapseSequence> collapses_to(const Complex& l, const Complex& k,
                                       std::int64_t budget = 100000);

// Witness that (l, k) is a strong NDR pair: a subcomplex l_prime
// containing the neighborhood n_l(k) that strongly collapses to k.
struct NdrWitness {
  Complex l_prime;
  CollapseSequence collapse;
};

// Grows l_prime from the neighborhood closure, retrying the protected
// collapse after each growth step (vertices added in id order).
Outcome<NdrWitness> ndr_witness(const Complex& l, const Complex& k,
                                std::int64_t budget = 100000);

bool verify_ndr(const Complex& l, const Complex& k, const NdrWitness& w);

// Converts a collapse of l to the label-matched subcomplex k into the
// explicit deformation-retract certificate: one contiguity step per
// elementary collapse, constant on V(k).
Retraction retraction_from_collapse(const Complex& l, const Complex& k,
                                    const CollapseSequence& seq);

}  // namespace xho

#endif  // XHO_COLLAPSE_HPP
