#pragma once
// Planar map of a positioned system: the track is cut into fragments at
// crossing slots and marked vertices, strands into chords between successive
// ports.  Cells are faces of this map; complementary faces of the system are
// cells glued across track fragments.  The map drives face contents, ribbon
// tree extraction, and offset boundary walks.
#include <functional>
#include "treelift/position.hpp"

namespace tl {

struct Dcel {
  int n = 0;
  const System* sys = nullptr;

  // stops along the track, west to east: marked vertex or crossing slot
  struct Stop {
    int vert = -1;  // >=0: marked vertex id (0 = infinity); -1: slot
    CrossRef cr{};
  };
  std::vector<Stop> stops;
  std::map<std::pair<int, int>, int> slot_stop;  // (strand,tok) -> stop
  std::vector<int> vert_stop;                    // [0..n] -> stop index

  // half-edges: fragment k (between stops k,k+1) owns halves 2k (east-going)
  // and 2k+1; chord j owns halves 2F+2j, 2F+2j+1 where F = #fragments
  int nfrag = 0;
  struct Chord {
    int strand = -1;
    int stop0 = -1, stop1 = -1;  // endpoints
    Side at0 = U, at1 = U;       // attachment side at a slot endpoint
    bool germ0 = false, germ1 = false;
  };
  std::vector<Chord> chords;
  std::vector<int> half_head;
  std::vector<int> half_next;  // face-walk successor (interior on the left)
  std::vector<int> cell_of;    // half -> cell id
  int ncell = 0;
  std::vector<int> sysface_of_cell;
  int nsysface = 0;

  std::vector<std::vector<int>> face_points;   // sysface -> bare marked pts
  std::vector<char> face_omega;                // sysface touches infinity

  int twin(int h) const { return h ^ 1; }
  bool is_frag(int h) const { return h < 2 * nfrag; }
  int frag_of(int h) const { return h / 2; }
  bool east_going(int h) const { return is_frag(h) && (h & 1) == 0; }
  int frag_edge(int f) const { return frag_edge_[f]; }
  int chord_of(int h) const { return (h - 2 * nfrag) / 2; }
  int sysface(int h) const { return sysface_of_cell[cell_of[h]]; }

  std::vector<int> frag_edge_;  // fragment -> track edge id

  // glued boundary successor: skips across track fragments
  int next_sys(int h) const;
};

Dcel build_dcel(const System& sys, const Positions& pos);

// convenience: contents of every complementary face
struct FaceInfo {
  std::vector<int> points;
  bool omega = false;
};
std::vector<FaceInfo> system_faces(const System& sys);

// single strand separation test: infinity-based arcs need a marked point on
// both sides, closed curves two inside and one outside
bool essential_alone(const Strand& s, int n);

// ribbon tree dual to a filling arc system: vertices are faces, edges arcs
struct RibbonTree {
  int n = 0;
  System arcs;                               // arc i = tree edge i
  std::vector<std::pair<int, int>> ends;     // arc -> the two face ids
  std::vector<int> label;                    // face -> marked pt or -1
  std::vector<std::vector<int>> ribbon;      // face -> arcs in boundary order
  std::vector<char> omega;                   // face touches infinity

  int nv() const { return (int)label.size(); }
  int ne() const { return (int)ends.size(); }
  int other(int arc, int v) const { return ends[arc].first == v ? ends[arc].second : ends[arc].first; }
};
RibbonTree extract_tree(const System& sys);

// boundary words of a regular neighbourhood of a region (a set of cells);
// chords of passable strands are crossed silently, track fragments interior
// to the region are crossed emitting a token
std::vector<Strand> region_boundary(const Dcel& D, const std::vector<char>& cell_in,
                                    const std::vector<char>& strand_passable);

}  // namespace tl
