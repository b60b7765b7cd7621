#include "treelift/position.hpp"

namespace tl {

namespace {

// boundary features of the track-complement disk, in walk order:
//   C(1), S(1,U), C(2,U), S(2,U), ..., C(n,U), S(n,U), C(w), S(n,D),
//   C(n,D), S(n-1,D), ..., C(2,D), S(1,D)
// 4n features total; C(w) is the corner at infinity.
int pos_side(int e, Side s, int n) {
  if (s == U) return 2 * e - 1;
  return 4 * n - 2 * e + 1;
}

int pos_corner(Corner c, int n) {
  if (c.v == 0) return 2 * n;
  if (c.v == 1) return 0;
  if (c.sec == U) return 2 * c.v - 2;
  return 4 * n - 2 * c.v + 2;
}

struct Feat {
  bool corner = false;
  int edge = 0;
  Side side = U;
  Corner c{};
  bool operator==(const Feat&) const = default;
  int pos(int n) const { return corner ? pos_corner(c, n) : pos_side(edge, side, n); }
};

// walks the chord sequence of a germ into the disk; yields successive
// destination features, teleporting across each crossing it consumes
struct Ray {
  const Strand* s = nullptr;
  bool fwd = true;
  int cur = 0;
  bool exhausted = false;

  Feat dest() const {
    if (exhausted || (!s->closed && (cur < 0 || cur >= (int)s->w.size()))) {
      Corner t = fwd ? s->b : s->a;
      return Feat{true, 0, U, t};
    }
    const Tok& t = s->w[cur];
    return Feat{false, t.edge, fwd ? t.side : flip(t.side), {}};
  }

  bool terminal() const {
    return !s->closed && (cur < 0 || cur >= (int)s->w.size());
  }

  void consume() {
    int len = (int)s->w.size();
    cur += fwd ? 1 : -1;
    if (s->closed) cur = (cur % len + len) % len;
  }
};

Ray make_ray(const System& sys, const Germ& g) {
  const Strand& s = sys.strands[g.strand];
  Ray r;
  r.s = &s;
  if (g.kind == 0) {
    r.fwd = true;
    r.cur = 0;
  } else if (g.kind == 1) {
    r.fwd = false;
    r.cur = (int)s.w.size() - 1;
  } else {
    TL_CHECK(g.tok >= 0 && g.tok < (int)s.w.size(), "bad token ref");
    if (g.port == s.w[g.tok].side) {
      // entry-side port: the chord arriving here is walked backwards
      r.fwd = false;
      r.cur = g.tok - 1;
    } else {
      r.fwd = true;
      r.cur = g.tok + 1;
    }
    if (s.closed) {
      int len = (int)s.w.size();
      r.cur = (r.cur % len + len) % len;
    }
  }
  return r;
}

Feat start_feature(const System& sys, const Germ& g) {
  const Strand& s = sys.strands[g.strand];
  if (g.kind == 2) return Feat{false, s.w[g.tok].edge, g.port, {}};
  return Feat{true, 0, U, g.kind == 0 ? s.a : s.b};
}

}  // namespace

int compare_germs(const System& sys, const Germ& ga, const Germ& gb) {
  int n = sys.n;
  Feat f0 = start_feature(sys, ga);
  TL_CHECK(f0 == start_feature(sys, gb), "germs on different features");
  Ray ra = make_ray(sys, ga), rb = make_ray(sys, gb);
  Feat cur = f0;
  int cap = 2 * (int)(sys.strands[ga.strand].w.size() + sys.strands[gb.strand].w.size()) + 8;
  for (int step = 0; step < cap; ++step) {
    Feat da = ra.dest(), db = rb.dest();
    if (da == db) {
      if (ra.terminal() && rb.terminal()) return 0;  // end together: parallel here
      TL_CHECK(!ra.terminal() && !rb.terminal(), "corner/side feature clash");
      // teleport together across the crossing; the hop reverses chord
      // nesting and the side switch reverses the walk direction, so the
      // relative order carries over unchanged
      cur = Feat{false, da.edge, flip(da.side), {}};
      ra.consume();
      rb.consume();
      continue;
    }
    int base = cur.pos(n);
    int oa = ((da.pos(n) - base) % (4 * n) + 4 * n) % (4 * n);
    int ob = ((db.pos(n) - base) % (4 * n) + 4 * n) % (4 * n);
    TL_CHECK(oa != 0 && ob != 0 && oa != ob, "degenerate divergence");
    // the germ aiming farther along the walk direction sits earlier: its
    // chord must enclose the other to stay disjoint
    return (oa > ob) ? -1 : 1;
  }
  return 0;
}

Positions position_system(const System& sys) {
  int n = sys.n;
  Positions P;
  P.n = n;
  P.slot.assign(n + 1, {});
  for (int si = 0; si < (int)sys.strands.size(); ++si) {
    const Strand& s = sys.strands[si];
    for (int k = 0; k < (int)s.w.size(); ++k) P.slot[s.w[k].edge].push_back({si, k});
    if (!s.closed) {
      P.fan[s.a].push_back({si, 0});
      P.fan[s.b].push_back({si, 1});
    }
  }
  for (int e = 1; e <= n; ++e) {
    auto cmp = [&](const CrossRef& x, const CrossRef& y) {
      if (x == y) return false;
      int ru = compare_germs(sys, Germ{x.strand, 2, x.tok, U}, Germ{y.strand, 2, y.tok, U});
      int rd = compare_germs(sys, Germ{x.strand, 2, x.tok, D}, Germ{y.strand, 2, y.tok, D});
      // walk direction runs west to east above the track, east to west below
      if (ru != 0 && rd != 0) TL_CHECK(ru == -rd, "inconsistent side orders");
      int r = ru != 0 ? ru : -rd;
      TL_CHECK(r != 0, "parallel strands in positioned system");
      return r < 0;
    };
    std::sort(P.slot[e].begin(), P.slot[e].end(), cmp);
  }
  for (auto& [c, germs] : P.fan) {
    auto cmp = [&](const GermRef& x, const GermRef& y) {
      if (x == y) return false;
      int r = compare_germs(sys, Germ{x.strand, x.end, 0, U}, Germ{y.strand, y.end, 0, U});
      TL_CHECK(r != 0, "parallel pinned strands");
      return r < 0;
    };
    std::sort(germs.begin(), germs.end(), cmp);
  }
  return P;
}

}  // namespace tl
