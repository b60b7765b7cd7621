#pragma once
// Moves on embedded trees, seen through their arc systems: forest collapses,
// vertex expansions, metric balls in the resulting complex, boundaries of
// regular neighbourhoods of subforests, and diagram emitters.
#include <set>

#include "treelift/faces.hpp"

namespace tl {

// subset of arcs, indexed by position in sys.strands
using EdgeSet = std::vector<char>;

// every component of the forest touches at most one labelled vertex
bool forest_collapsible(const RibbonTree& t, const EdgeSet& forest);

// keep the arcs outside the forest
System delete_arcs(const System& sys, const EdgeSet& forest);

// taut arcs that can be added to a filling system disjointly, up to isotopy
// and excluding parallels of existing arcs
std::vector<Strand> addable_arcs(const System& sys);

// filling systems obtained by adding arcs (any number that fits)
std::vector<System> supersets(const System& sys);

// neighbours of a filling system under a single collapse / expansion
std::vector<System> collapses(const System& sys);
std::vector<System> expansions(const System& sys);

// metric ball of radius r in the 1-skeleton of the tree complex
std::set<System> neighborhood(const System& sys, int r);

// 1-neighbourhood, in the complex of all arc systems, of the 1-neighbourhood
// of a filling system in the tree complex: the nearby trees plus all their
// subsystems and supersystems
std::set<System> restricted_two_neighborhood(const System& sys);

// boundary of a regular neighbourhood of the subforest (arcs + incident
// vertices); essential components only, deduplicated
System subforest_boundary(const System& sys, const EdgeSet& forest);

// a non-filling system seen as curves around its crowded faces
struct BubbleView {
  System curves;                         // one closed curve per crowded face
  std::vector<std::vector<int>> inside;  // labels enclosed by each curve
  std::vector<int> outside;              // labels in singly-occupied faces
};
BubbleView bubble_view(const System& sys);

// arc lengths; normalized means they sum to 1
struct MetricAssignment {
  std::vector<Rat> len;
  bool normalized = false;
};

// diagram emitters; the System forms accept non-filling systems and render
// crowded faces as bubble nodes.  layout in the tikz form is advisory only
std::string emit_dot(const RibbonTree& t);
std::string emit_tikz(const RibbonTree& t);
std::string emit_dot(const System& sys);
std::string emit_tikz(const System& sys);

}  // namespace tl
