#pragma once
// Isotopy classes of disjoint simple curves/arcs in the plane with n marked
// points, encoded by taut crossing words against a fixed "track": the marked
// points sit at 1..n on a horizontal line, joined by segment edges
// e_1..e_{n-1}, plus a ray e_n from point n off to infinity (vertex 0).  The
// complement of the track is a single disk, so a curve class is determined by
// its cyclic (or end-pinned) sequence of track crossings, each tagged with the
// side the crossing enters from: U = from above, D = from below.
#include "treelift/basic.hpp"

namespace tl {

enum Side : uint8_t { U = 0, D = 1 };
inline Side flip(Side s) { return s == U ? D : U; }
inline char side_ch(Side s) { return s == U ? 'L' : 'R'; }  // file format: L/R

struct Tok {
  int edge = 0;  // 1..n
  Side side = U;
  auto operator<=>(const Tok&) const = default;
};

// A corner is a germ position at a vertex: above (U) or below (D) the track.
// Vertex 0 is the point at infinity; vertices 0 and 1 have a single corner,
// normalised to sector U.
struct Corner {
  int v = 0;      // 0 = infinity, else 1..n
  Side sec = U;
  auto operator<=>(const Corner&) const = default;
};

struct Strand {
  bool closed = false;
  Corner a{}, b{};       // pinned endpoints; ignored when closed
  std::vector<Tok> w;    // crossing word

  auto operator<=>(const Strand&) const = default;

  bool is_inf_arc() const { return !closed && a.v == 0 && b.v == 0; }
  std::string str() const;
};

// word helpers -------------------------------------------------------------

// remove (e,s)(e,!s) pairs; cyclic when closed
bool cancel_pass(std::vector<Tok>& w, bool closed);

// Taut representative of the same class.  For pinned strands, leading and
// trailing crossings of edges incident to the endpoint vertex on the matching
// sector can be pulled across the vertex (flipping the sector, except at the
// single-corner vertices 0 and 1).
void tauten(Strand& s, int n);

// reverse orientation in place (swaps endpoints, flips entry sides)
void reverse_strand(Strand& s);

// canonical representative of the isotopy class: taut, minimal over the
// bounded germ-rotation orbit at the endpoints, over orientation reversal,
// and over cyclic rotation for closed strands
void canonicalize(Strand& s, int n);

struct System {
  int n = 0;
  std::vector<Strand> strands;

  auto operator<=>(const System&) const = default;
  std::string str() const;
};

// canonicalize every strand, drop empty closed words, sort
void canonicalize(System& sys);

// edges incident to a vertex (v=0 -> {n}, v=1 -> {1}, else {v-1,v})
std::vector<int> vertex_edges(int v, int n);

// parse / emit the plain text format (see io notes in serialization tests)
std::string emit_system(const System& sys);
System parse_system(const std::string& text);

}  // namespace tl
