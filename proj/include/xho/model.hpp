#ifndef XHO_MODEL_HPP
#define XHO_MODEL_HPP

#include <string>
#include <vector>

#include "xho/complex.hpp"
#include "xho/homotopy.hpp"
#include "xho/subdivision.hpp"

namespace xho {

// An inclusion of complexes packaged with its map.
struct Inclusion {
  Complex source, target;
  VertexMap map;
};

// Generating cofibration Sd^2 boundary(n) -> Sd^2 delta(n). The inclusion
// is the label-matched one (subdivision vertices are named by the faces
// they denote, so the sources embed canonically).
Inclusion gen_cofibration(int n, int size_budget = 4);

// Generating trivial cofibration Sd^2 horn(n, k) -> Sd^2 delta(n), n >= 1.
Inclusion gen_trivial_cofibration(int n, int k, int size_budget = 4);

// Edge attachment K^1 -> I_1 (endpoint 0). A retract of gen_cofibration(1)
// rather than a generator itself; recorded in cell structures to express
// tree growth.
Inclusion edge_generator();

enum class GenKind { Boundary, Horn, Edge };

struct Attachment {
  GenKind kind = GenKind::Boundary;
  int n = 0;
  int k = 0;  // horn index, Horn only
  // generator-source vertex -> stage vertex label at attach time
  std::vector<std::string> attach_labels;
};

// A finite relative cell structure: base complex plus recorded pushouts
// along generating inclusions. Certificate, replayable.
struct CellStructure {
  Complex base;
  std::vector<Attachment> attachments;
};

Inclusion generator_for(const Attachment& a);

// One pushout stage; the attaching map is from the generator's source into
// the current stage.
Complex attach(const Complex& stage, const Inclusion& gen, const VertexMap& attaching);

// Replays all stages; stages[0] = base, stages.back() = final complex.
std::vector<Complex> replay_cell_structure(const CellStructure& cs);
bool verify_cell_structure(const CellStructure& cs);

// Convenience builders used by tests and the regression suite.
CellStructure tree_cell_structure(int extra_edges);  // path grown edge by edge
CellStructure cycle_cell_structure();                // C_4 from a point
CellStructure sphere_cell_structure(int n);          // two n-cells glued along Sd^2 boundary

// I_n as a retract of I_{4n} = Sd^2 I_n: j then r with r o j = identity.
struct PathRetraction {
  VertexMap j;  // I_n -> I_{4n}
  VertexMap r;  // I_{4n} -> I_n
};
PathRetraction path_retraction(int n);

// A commuting lifting square: p o top = bottom o i.
struct LiftingProblem {
  VertexMap i;       // A -> B
  VertexMap p;       // X -> Y
  VertexMap top;     // A -> X
  VertexMap bottom;  // B -> Y

  void validate() const;  // throws unless the square commutes
};

// Backtracking over images of V(B) \ i(V(A)), constrained by both
// triangles and simpliciality.
Outcome<VertexMap> solve_lifting(const LiftingProblem& lp, std::int64_t budget = 100000);

// Checks p against gen_cofibration(n) for n <= n_max over commuting
// squares enumerated in deterministic order, at most `square_budget` per
// n. Verdict Found = every enumerated square lifted; No = some square has
// no lift; Unknown = an individual lift search ran out of budget.
struct FibrationReport {
  Status verdict = Status::Unknown;
  int n_max = 0;
  std::int64_t squares_checked = 0;
};
FibrationReport is_trivial_fibration_up_to(const VertexMap& p, int n_max,
                                           std::int64_t square_budget = 2000,
                                           std::int64_t lift_budget = 100000);

}  // namespace xho

#endif  // XHO_MODEL_HPP
