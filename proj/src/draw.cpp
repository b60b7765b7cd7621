#include "treelift/draw.hpp"

#include "treelift/position.hpp"

#include <algorithm>
#include <map>
#include <numeric>

// Geometry of a drawing.  The track is the segment y=0, x in [1, n] plus the
// ray drawn as [n, n+2] with the infinity vertex at (n+2, 0).  Crossings of
// edge e sit at rational columns strictly inside the edge's x-range.  Every
// chord of a strand runs: down/up a vertical column (or out of a vertex along
// a short leg), then hugs the boundary of the axis-aligned rectangle
// [1-o, n+2+o] x [-o, o] clockwise (= the boundary-walk direction), then back
// in at the far port.  The offset o shrinks with the chord's nesting depth in
// the laminar family of walk intervals, which is what makes distinct chords
// disjoint: a chord's vertical approach can only be crossed by a chord whose
// interval strictly contains one of its endpoints, and such a chord is
// shallower, i.e. hugs strictly farther out.
namespace tl {

namespace {

constexpr int kChir = 1;  // left-handed twist = detour along the curve's
                          // orientation at a positively signed crossing

int pos_side_(int e, Side s, int n) {
  if (s == U) return 2 * e - 1;
  return 4 * n - 2 * e + 1;
}

int pos_corner_(Corner c, int n) {
  if (c.v == 0) return 2 * n;
  if (c.v == 1) return 0;
  if (c.sec == U) return 2 * c.v - 2;
  return 4 * n - 2 * c.v + 2;
}

Rat rfrac(int idx, int m, const Rat& shift) {  // strictly increasing, in (0,1)
  return (Rat(idx + 1) + shift) / (Rat(m + 1) + shift);
}

Rat rmin(const Rat& a, const Rat& b) { return a < b ? a : b; }

struct PortG {
  Rat t;         // walk coordinate = feature position + fraction
  int kind = 0;  // 0 slot, 1 interior corner, 2 west cap, 3 east cap
  Rat col;       // column x (slot / corner)
  int ysgn = 1;  // +1 above the track, -1 below
  Rat sigma;     // cap fan fraction
  Pt term;       // terminal point on the track / at the vertex
};

struct ChordG {
  PortG pa, pb;
  int gap = 0;
  int depth = 0;
};

int ysign(Side s) { return s == U ? 1 : -1; }

// clockwise perimeter coordinate on the offset rectangle
struct RectO {
  Rat o, W, total;
  int n;
  RectO(int n_, const Rat& o_) : o(o_), n(n_) {
    W = Rat(n + 1) + 2 * o;
    total = 2 * W + 4 * o;
  }
  Rat xw() const { return Rat(1) - o; }          // west wall
  Rat xe() const { return Rat(n + 2) + o; }      // east wall
  Rat top(const Rat& x) const { return x - xw(); }
  Rat right(const Rat& y) const { return W + (o - y); }
  Rat bottom(const Rat& x) const { return W + 2 * o + (xe() - x); }
  Rat left(const Rat& y) const { return 2 * W + 2 * o + (y + o); }
};

struct Foot {
  Pt p;
  Rat perim;
};

Foot port_foot(const PortG& g, const RectO& r) {
  if (g.kind == 0 || g.kind == 1) {
    Pt p{g.col, Rat(g.ysgn) * r.o};
    return {p, g.ysgn > 0 ? r.top(g.col) : r.bottom(g.col)};
  }
  Rat a = 4 * r.o * g.sigma;  // arclength along the cap path
  if (g.kind == 3) {          // east cap: (n+2,o) -> TR -> BR -> (n+2,-o)
    Rat base{g.term.x};
    if (a <= r.o) {
      Pt p{base + a, r.o};
      return {p, r.top(p.x)};
    }
    if (a <= 3 * r.o) {
      Pt p{r.xe(), 2 * r.o - a};
      return {p, r.right(p.y)};
    }
    Pt p{base + 4 * r.o - a, -r.o};
    return {p, r.bottom(p.x)};
  }
  // west cap: (1,-o) -> BL -> TL-side -> (1,o)
  if (a <= r.o) {
    Pt p{Rat(1) - a, -r.o};
    return {p, r.bottom(p.x)};
  }
  if (a <= 3 * r.o) {
    Pt p{r.xw(), a - 2 * r.o};
    return {p, r.left(p.y)};
  }
  Pt p{Rat(1) + a - 4 * r.o, r.o};
  return {p, r.top(p.x)};
}

std::vector<Pt> port_path(const PortG& g, const RectO& r, const Rat& rho_h) {
  Foot f = port_foot(g, r);
  if (g.kind == 0) return {g.term, f.p};
  if (g.kind == 1) return {g.term, Pt{g.col, Rat(g.ysgn) * rho_h}, f.p};
  return {g.term, f.p};
}

Rat rmod(const Rat& x, const Rat& m) {
  BigInt q = boost::rational_cast<BigInt>(x / m);
  Rat r = x - Rat(q) * m;
  if (rsgn(r) < 0) r += m;
  return r;
}

// chord polyline from the lower-t port to the higher-t port
std::vector<Pt> chord_points(const ChordG& c, int n, const Rat& shift, const Rat& rho_h) {
  const PortG& lo = c.pa.t < c.pb.t ? c.pa : c.pb;
  const PortG& hi = c.pa.t < c.pb.t ? c.pb : c.pa;
  Rat o = rho_h + rho_h / (Rat(c.depth + 1) + shift);
  RectO r(n, o);
  Foot flo = port_foot(lo, r), fhi = port_foot(hi, r);
  std::vector<Pt> pts = port_path(lo, r, rho_h);
  Rat span = rmod(fhi.perim - flo.perim, r.total);
  std::vector<std::pair<Rat, Pt>> corners = {
      {rmod(Rat(0) - flo.perim, r.total), Pt{r.xw(), o}},
      {rmod(r.W - flo.perim, r.total), Pt{r.xe(), o}},
      {rmod(r.W + 2 * o - flo.perim, r.total), Pt{r.xe(), -o}},
      {rmod(2 * r.W + 2 * o - flo.perim, r.total), Pt{r.xw(), -o}}};
  std::sort(corners.begin(), corners.end(),
            [](auto& a, auto& b) { return a.first < b.first; });
  for (auto& [rel, p] : corners)
    if (rsgn(rel) > 0 && rel < span) pts.push_back(p);
  auto back = port_path(hi, r, rho_h);
  pts.insert(pts.end(), back.rbegin(), back.rend());
  if (c.pa.t > c.pb.t) std::reverse(pts.begin(), pts.end());
  return pts;
}

}  // namespace

Drawing draw_system(const System& sys, const Rat& shift) {
  Drawing d;
  d.sys = sys;
  int n = sys.n;
  Positions P = position_system(sys);
  const Rat rho_h(1, 8);

  // column and fraction bookkeeping
  std::map<std::pair<int, int>, int> slot_idx;  // (strand, tok) -> index on its edge
  for (int e = 1; e <= n; ++e)
    for (size_t j = 0; j < P.slot[e].size(); ++j)
      slot_idx[{P.slot[e][j].strand, P.slot[e][j].tok}] = (int)j;
  std::map<std::pair<int, int>, std::pair<Corner, int>> fan_idx;  // (strand,end)
  for (auto& [c, fan] : P.fan)
    for (size_t i = 0; i < fan.size(); ++i)
      fan_idx[{fan[i].strand, fan[i].end}] = {c, (int)i};

  std::vector<Rat> rho_x(n + 1, Rat(1, 8));  // corner column half-width
  auto slot_col = [&](int e, int j) {
    Rat w = e == n ? Rat(2) : Rat(1);
    return Rat(e) + w * rfrac(j, (int)P.slot[e].size(), shift);
  };
  for (int v = 2; v <= n; ++v) {
    Rat g = Rat(1, 4);
    if (!P.slot[v - 1].empty())
      g = rmin(g, Rat(v) - slot_col(v - 1, (int)P.slot[v - 1].size() - 1));
    if (v <= n && !P.slot[v].empty()) g = rmin(g, slot_col(v, 0) - Rat(v));
    rho_x[v] = g / 2;
  }

  auto tok_port = [&](int si, int g, bool entry) {
    const Strand& s = sys.strands[si];
    Tok tk = s.w[g];
    int e = tk.edge;
    int j = slot_idx.at({si, g});
    int k = (int)P.slot[e].size();
    Side sd = entry ? tk.side : flip(tk.side);
    int idx = sd == U ? j : k - 1 - j;
    PortG p;
    p.t = Rat(pos_side_(e, sd, n)) + rfrac(idx, k, shift);
    p.kind = 0;
    p.col = slot_col(e, j);
    p.ysgn = ysign(sd);
    p.term = Pt{p.col, Rat(0)};
    return p;
  };
  auto end_port = [&](int si, int end) {
    auto [c, i] = fan_idx.at({si, end});
    int m = (int)P.fan.at(c).size();
    Rat sg = rfrac(i, m, shift);
    PortG p;
    p.t = Rat(pos_corner_(c, n)) + sg;
    p.sigma = sg;
    if (c.v == 0) {
      p.kind = 3;
      p.term = Pt{Rat(n + 2), Rat(0)};
    } else if (c.v == 1) {
      p.kind = 2;
      p.term = Pt{Rat(1), Rat(0)};
    } else {
      p.kind = 1;
      p.ysgn = ysign(c.sec);
      p.col = c.sec == U ? Rat(c.v) - rho_x[c.v] + 2 * rho_x[c.v] * sg
                         : Rat(c.v) + rho_x[c.v] - 2 * rho_x[c.v] * sg;
      p.term = Pt{Rat(c.v), Rat(0)};
    }
    return p;
  };

  // chords, in travel order per strand
  std::vector<std::vector<ChordG>> chords(sys.strands.size());
  for (size_t si = 0; si < sys.strands.size(); ++si) {
    const Strand& s = sys.strands[si];
    int L = (int)s.w.size();
    auto& cs = chords[si];
    if (s.closed) {
      TL_CHECK(L >= 1, "closed strand with empty word in drawing");
      for (int g = 1; g <= L; ++g) {
        ChordG c;
        c.pa = tok_port((int)si, g - 1, false);
        c.pb = tok_port((int)si, g % L, true);
        c.gap = g % L;
        cs.push_back(c);
      }
    } else if (L == 0) {
      ChordG c;
      c.pa = end_port((int)si, 0);
      c.pb = end_port((int)si, 1);
      c.gap = 0;
      cs.push_back(c);
    } else {
      for (int g = 0; g <= L; ++g) {
        ChordG c;
        c.pa = g == 0 ? end_port((int)si, 0) : tok_port((int)si, g - 1, false);
        c.pb = g == L ? end_port((int)si, 1) : tok_port((int)si, g, true);
        c.gap = g;
        cs.push_back(c);
      }
    }
  }

  // laminar depths over all chords of the system
  std::vector<ChordG*> all;
  for (auto& cs : chords)
    for (auto& c : cs) all.push_back(&c);
  auto lo = [](const ChordG* c) { return c->pa.t < c->pb.t ? c->pa.t : c->pb.t; };
  auto hi = [](const ChordG* c) { return c->pa.t < c->pb.t ? c->pb.t : c->pa.t; };
  for (auto* c : all)
    for (auto* e : all) {
      if (c == e) continue;
      bool nest = lo(e) < lo(c) && hi(c) < hi(e);
      bool disj = hi(c) < lo(e) || hi(e) < lo(c) || (lo(c) < lo(e) && hi(e) < hi(c));
      TL_CHECK(nest || disj, "chord intervals cross: system is not embeddable");
      if (nest) ++c->depth;
    }

  // polylines
  for (size_t si = 0; si < sys.strands.size(); ++si) {
    std::vector<PSeg> segs;
    Pt prev_end;
    bool have_prev = false;
    for (auto& c : chords[si]) {
      auto pts = chord_points(c, n, shift, rho_h);
      if (have_prev) TL_CHECK(pts.front() == prev_end, "chord chain discontinuity");
      for (size_t i = 0; i + 1 < pts.size(); ++i)
        if (!(pts[i] == pts[i + 1])) segs.push_back(PSeg{pts[i], pts[i + 1], c.gap});
      prev_end = pts.back();
      have_prev = true;
    }
    if (sys.strands[si].closed)
      TL_CHECK(segs.back().b == segs.front().a, "closed polyline does not close");
    d.polys.push_back(std::move(segs));
  }
  return d;
}

namespace {

// exact segment contact classification
enum ContactKind { kNone, kProper, kTouch };
struct Contact {
  ContactKind kind = kNone;
  Rat tp;  // parameter along p where they cross
  int sign = 0;
};

// for a point known to lie on the segment's line, box membership decides
// whether it lies on the segment itself
bool on_seg_box(const Pt& p, const Pt& a, const Pt& b) {
  if (p.x < rmin(a.x, b.x) || (a.x < b.x ? b.x : a.x) < p.x) return false;
  if (p.y < rmin(a.y, b.y) || (a.y < b.y ? b.y : a.y) < p.y) return false;
  return true;
}

Contact seg_contact(const Pt& p1, const Pt& p2, const Pt& q1, const Pt& q2) {
  Pt r = p2 - p1, s = q2 - q1;
  Rat d1 = cross(s, p1 - q1), d2 = cross(s, p2 - q1);
  Rat d3 = cross(r, q1 - p1), d4 = cross(r, q2 - p1);
  int s1 = rsgn(d1), s2 = rsgn(d2), s3 = rsgn(d3), s4 = rsgn(d4);
  if (s1 == 0 || s2 == 0 || s3 == 0 || s4 == 0) {
    // an endpoint sits on the other segment's line; the segments meet iff
    // such an endpoint lies on the other segment itself (any further common
    // point would have to be a line intersection, which that endpoint is)
    bool touch = (s1 == 0 && on_seg_box(p1, q1, q2)) ||
                 (s2 == 0 && on_seg_box(p2, q1, q2)) ||
                 (s3 == 0 && on_seg_box(q1, p1, p2)) ||
                 (s4 == 0 && on_seg_box(q2, p1, p2));
    return {touch ? kTouch : kNone, Rat(0), 0};
  }
  if (s1 != s2 && s3 != s4) {
    Contact c;
    c.kind = kProper;
    c.tp = d1 / (d1 - d2);
    c.sign = rsgn(cross(r, s));
    return c;
  }
  return {kNone, Rat(0), 0};
}

}  // namespace

std::vector<Crossing> overlay(const Drawing& A, const Drawing& B) {
  struct Rec {
    Crossing x;
    int bseg;
    Rat tb;
  };
  std::vector<Rec> recs;
  for (size_t bs = 0; bs < B.polys.size(); ++bs)
    for (size_t ib = 0; ib < B.polys[bs].size(); ++ib) {
      const PSeg& pb = B.polys[bs][ib];
      for (size_t as = 0; as < A.polys.size(); ++as)
        for (const PSeg& pa : A.polys[as]) {
          Contact c = seg_contact(pb.a, pb.b, pa.a, pa.b);
          if (c.kind == kTouch) throw retry_needed("degenerate contact in overlay");
          if (c.kind != kProper) continue;
          Rec r;
          r.x = Crossing{(int)bs, pb.gap, (int)as, pa.gap, c.sign};
          r.bseg = (int)ib;
          r.tb = c.tp;
          recs.push_back(r);
        }
    }
  std::sort(recs.begin(), recs.end(), [](const Rec& a, const Rec& b) {
    if (a.x.bs != b.x.bs) return a.x.bs < b.x.bs;
    if (a.bseg != b.bseg) return a.bseg < b.bseg;
    return a.tb < b.tb;
  });
  std::vector<Crossing> out;
  for (auto& r : recs) out.push_back(r.x);
  return out;
}

void validate_drawing(const Drawing& d) {
  int n = d.sys.n;
  // pairwise disjointness
  for (size_t i = 0; i < d.polys.size(); ++i) {
    auto& si = d.polys[i];
    const Strand& st = d.sys.strands[i];
    // consecutive continuity + no backtracking
    for (size_t a = 0; a < si.size(); ++a) {
      size_t b = a + 1;
      if (b == si.size()) {
        if (!st.closed) break;
        b = 0;
      }
      TL_CHECK(si[a].b == si[b].a, "polyline discontinuity");
      Pt u = si[a].b - si[a].a, v = si[b].b - si[b].a;
      if (rsgn(cross(u, v)) == 0) TL_CHECK(rsgn(dot(u, v)) > 0, "polyline backtracks");
    }
    // self-disjointness of non-consecutive segments
    for (size_t a = 0; a < si.size(); ++a)
      for (size_t b = a + 1; b < si.size(); ++b) {
        bool adj = b == a + 1 || (st.closed && a == 0 && b + 1 == si.size());
        // an open strand pinned at one vertex at both ends touches itself there
        bool endpair = !st.closed && a == 0 && b + 1 == si.size() && st.a.v == st.b.v;
        if (adj) continue;
        Contact c = seg_contact(si[a].a, si[a].b, si[b].a, si[b].b);
        if (endpair) {
          TL_CHECK(c.kind != kProper, "strand crosses itself");
          continue;  // box-touch at the shared vertex is fine
        }
        TL_CHECK(c.kind == kNone, "strand touches itself");
      }
    // disjointness from other strands
    for (size_t j = i + 1; j < d.polys.size(); ++j) {
      const Strand& su = d.sys.strands[j];
      bool sharev = !st.closed && !su.closed &&
                    (st.a.v == su.a.v || st.a.v == su.b.v || st.b.v == su.a.v ||
                     st.b.v == su.b.v);
      for (auto& sa : si)
        for (auto& sb : d.polys[j]) {
          Contact c = seg_contact(sa.a, sa.b, sb.a, sb.b);
          TL_CHECK(c.kind != kProper, "strands cross in drawing");
          if (c.kind == kTouch) {
            TL_CHECK(sharev, "strands touch in drawing");
            // the only permitted contact is the shared pinned vertex point
            bool ok = false;
            for (Pt p : {sa.a, sa.b})
              for (Pt q : {sb.a, sb.b})
                if (p == q && rsgn(p.y) == 0) ok = true;
            TL_CHECK(ok, "strands touch away from a shared vertex");
          }
        }
    }
  }
  // track crossings match the words
  for (size_t i = 0; i < d.polys.size(); ++i) {
    auto& si = d.polys[i];
    const Strand& st = d.sys.strands[i];
    std::vector<Tok> seen;
    size_t lim = si.size();
    // a segment may lie on the track line only beyond the caps
    for (auto& sg : si)
      if (rsgn(sg.a.y) == 0 && rsgn(sg.b.y) == 0) {
        Rat lo = rmin(sg.a.x, sg.b.x);
        Rat hi = sg.a.x < sg.b.x ? sg.b.x : sg.a.x;
        TL_CHECK(!(lo < Rat(n + 2) && Rat(1) < hi),
                 "polyline runs along the track");
      }
    for (size_t a = 0; a + 1 < lim || (st.closed && a < lim); ++a) {
      Pt p = si[a].b;  // interior polyline vertex (closed: cyclic)
      if (rsgn(p.y) != 0) continue;
      // on-axis waypoints off the track (cap feet) are not crossings
      if (!(p.x > Rat(1) && p.x < Rat(n + 2))) continue;
      Pt before = si[a].a, after = si[(a + 1) % lim].b;
      TL_CHECK(rsgn(before.y) != 0 && rsgn(after.y) != 0 &&
                   rsgn(before.y) != rsgn(after.y),
               "polyline tangent to the track");
      int e = 0;
      for (int k = 1; k <= n; ++k) {
        Rat hi = k == n ? Rat(n + 2) : Rat(k + 1);
        if (Rat(k) < p.x && p.x < hi) e = k;
      }
      TL_CHECK(e > 0, "crossing at a vertex");
      seen.push_back(Tok{e, rsgn(before.y) > 0 ? U : D});
    }
    if (st.closed && !seen.empty()) {
      // closed polylines start at the exit of token 0
      seen.insert(seen.begin(), seen.back());
      seen.pop_back();
    }
    TL_CHECK(seen == st.w, "drawn crossings disagree with the word");
    // every other contact with the track line must be east/west of the track
    for (auto& sg : si) {
      if (rsgn(sg.a.y) == rsgn(sg.b.y) || rsgn(sg.a.y) == 0 || rsgn(sg.b.y) == 0)
        continue;
      Rat x = sg.a.x + (Rat(0) - sg.a.y) / (sg.b.y - sg.a.y) * (sg.b.x - sg.a.x);
      TL_CHECK(x < Rat(1) || x > Rat(n + 2), "stray interior track crossing");
    }
  }
}

System act_twist(const System& sys, const Strand& curve, int k) {
  System base = sys;
  canonicalize(base);
  if (k == 0) return base;
  System A;
  A.n = base.n;
  A.strands = {curve};
  canonicalize(A);
  if (A.strands.empty()) return base;  // curve bounds a once-marked disk
  const Strand& c = A.strands[0];
  TL_CHECK(c.closed, "twists are about closed curves");
  int L = (int)c.w.size();

  Drawing db = draw_system(base, Rat(0));
  std::vector<Crossing> xs;
  bool ok = false;
  for (int q = 2; q <= 64 && !ok; ++q)
    for (int p = 1; p < q && !ok; ++p) {
      if (std::gcd(p, q) != 1) continue;
      try {
        Drawing da = draw_system(A, Rat(p, q));
        xs = overlay(da, db);
        ok = true;
      } catch (const retry_needed&) {
      }
    }
  TL_CHECK(ok, "could not reach general position");

  System out;
  out.n = base.n;
  for (size_t si = 0; si < base.strands.size(); ++si) {
    const Strand& s = base.strands[si];
    std::vector<std::vector<Tok>> detour(s.w.size() + 1);
    for (auto& x : xs) {
      if (x.bs != (int)si) continue;
      int dir = kChir * x.sign * (k > 0 ? 1 : -1);
      auto& slot = detour[x.bgap];
      for (int rep = 0; rep < std::abs(k); ++rep)
        for (int i = 0; i < L; ++i) {
          Tok t = dir > 0 ? c.w[(x.agap + i) % L]
                          : Tok{c.w[((x.agap - 1 - i) % L + L) % L].edge,
                                flip(c.w[((x.agap - 1 - i) % L + L) % L].side)};
          slot.push_back(t);
        }
    }
    Strand r = s;
    r.w.clear();
    int len = (int)s.w.size();
    int gmax = s.closed ? len - 1 : len;
    for (int g = 0; g <= gmax; ++g) {
      for (auto& t : detour[g]) r.w.push_back(t);
      if (g < len) r.w.push_back(s.w[g]);
    }
    tauten(r, out.n);
    out.strands.push_back(r);
  }
  canonicalize(out);
  return out;
}

}  // namespace tl
