#pragma once
// Canonical embedding data for a taut system: the linear order of crossings
// along each track edge and the fan order of strand ends at each corner.
// Both are recovered purely combinatorially by walking "germ itineraries":
// two germs on the same boundary feature of the track-complement disk are
// ordered by chasing their chords until the destinations diverge.
#include "treelift/strand.hpp"

namespace tl {

struct CrossRef {
  int strand = -1;
  int tok = -1;
  auto operator<=>(const CrossRef&) const = default;
};

struct GermRef {
  int strand = -1;
  int end = 0;  // 0 = a, 1 = b
  auto operator<=>(const GermRef&) const = default;
};

struct Positions {
  int n = 0;
  std::vector<std::vector<CrossRef>> slot;  // [edge 1..n] -> crossings, west to east
  std::map<Corner, std::vector<GermRef>> fan;  // boundary-walk order at each corner
};

// Throws if the system is not in taut form or contains indistinguishable
// (parallel) strands -- callers dedup first.
Positions position_system(const System& sys);

// exposed for tests: -1 if ga is earlier in the boundary-walk direction at
// their common feature, +1 if gb is, 0 if the itineraries never diverge
struct Germ {
  int strand;
  int kind;  // 0 = end a, 1 = end b, 2 = side port at a crossing
  int tok;
  Side port;
};
int compare_germs(const System& sys, const Germ& ga, const Germ& gb);

}  // namespace tl
