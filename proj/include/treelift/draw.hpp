#pragma once
// Exact piecewise-linear drawings of taut systems, used as the geometric
// engine behind twist surgery.  A strand's chords are drawn as "rainbows"
// hugging rectangular offset curves of the track (L-infinity offsets, so
// every hug is axis-parallel); nesting depth decides the offset, which makes
// disjointness automatic for a valid system.  Two drawings made with
// different shift parameters sit in general position after finitely many
// retries, giving exact crossing data for Dehn-twist splicing.
#include "treelift/position.hpp"

namespace tl {

struct Pt {
  Rat x, y;
  bool operator==(const Pt&) const = default;
};
inline Pt operator-(const Pt& a, const Pt& b) { return {a.x - b.x, a.y - b.y}; }
inline Rat cross(const Pt& a, const Pt& b) { return a.x * b.y - a.y * b.x; }
inline Rat dot(const Pt& a, const Pt& b) { return a.x * b.x + a.y * b.y; }

// one polyline segment; gap = index of the word gap the segment belongs to
// (the chord entering token g has gap g; a pinned strand's final chord has
// gap len)
struct PSeg {
  Pt a, b;
  int gap = 0;
};

struct Drawing {
  System sys;
  std::vector<std::vector<PSeg>> polys;  // per strand, in travel order
};

// Exact drawing of a canonical system.  Guarantees: strands are pairwise
// disjoint except for shared pinned endpoints at marked vertices; each
// strand meets the track transversally, exactly at its word's crossings, in
// word order.  shift in [0,1) nudges every free parameter.
Drawing draw_system(const System& sys, const Rat& shift = Rat(0));

// throws err if any drawing guarantee fails (test oracle)
void validate_drawing(const Drawing& d);

struct retry_needed : err {
  using err::err;
};

struct Crossing {
  int bs = 0, bgap = 0;  // strand / word gap in B
  int as = 0, agap = 0;  // strand / word gap in A
  int sign = 0;          // +1 if (B direction, A direction) is a positive frame
};

// all crossings between strands of A and strands of B, sorted by travel
// order along B; throws retry_needed on any degenerate contact
std::vector<Crossing> overlay(const Drawing& A, const Drawing& B);

// Dehn twist about a closed curve applied to a whole system; positive k is
// the left-handed twist.  The curve must be taut and closed.
System act_twist(const System& sys, const Strand& curve, int k);

}  // namespace tl
