// Collapse and expansion moves on filling systems.  A collapse deletes the
// arcs dual to a collapsible forest.  An expansion adds arcs; the candidates
// are enumerated per complementary face by walking the face's cell graph
// between corners at infinity.  That graph is a tree plus at most one extra
// fragment (a cycle around the face's marked point), and a simple arc can use
// the cycle at most once, so reduced walks with at most one cycle crossing
// enumerate every class.
#include "treelift/planar.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "treelift/draw.hpp"

namespace tl {

namespace {

struct Uf {
  std::vector<int> p;
  explicit Uf(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

}  // namespace

bool forest_collapsible(const RibbonTree& t, const EdgeSet& forest) {
  TL_CHECK((int)forest.size() == t.ne(), "forest mask does not match tree");
  Uf uf(t.nv());
  for (int e = 0; e < t.ne(); ++e)
    if (forest[e]) uf.unite(t.ends[e].first, t.ends[e].second);
  std::vector<int> labels(t.nv(), 0);
  for (int v = 0; v < t.nv(); ++v)
    if (t.label[v] >= 0 && ++labels[uf.find(v)] > 1) return false;
  return true;
}

System delete_arcs(const System& sys, const EdgeSet& forest) {
  TL_CHECK(forest.size() == sys.strands.size(), "arc mask does not match system");
  System out;
  out.n = sys.n;
  for (size_t i = 0; i < sys.strands.size(); ++i)
    if (!forest[i]) out.strands.push_back(sys.strands[i]);
  canonicalize(out);
  return out;
}

std::vector<Strand> addable_arcs(const System& sys) {
  Positions P = position_system(sys);
  Dcel M = build_dcel(sys, P);

  // cells and track fragments of each face (a fragment always has the same
  // face on both sides)
  std::vector<std::vector<int>> fcell(M.nsysface), ffrag(M.nsysface);
  for (int c = 0; c < M.ncell; ++c) fcell[M.sysface_of_cell[c]].push_back(c);
  for (int k = 0; k < M.nfrag; ++k) ffrag[M.sysface(2 * k)].push_back(k);

  // cells owning a corner at infinity: a new arc's germs start in these
  int wstop = M.vert_stop[0];
  std::vector<std::set<int>> fomega(M.nsysface);
  for (int h = 0; h < (int)M.half_head.size(); ++h)
    if (M.half_head[h] == wstop) fomega[M.sysface(h)].insert(M.cell_of[h]);

  auto cross_from = [&](int k, int from) {
    return Tok{M.frag_edge(k), M.cell_of[2 * k] == from ? U : D};
  };

  std::set<Strand> out;
  for (int f = 0; f < M.nsysface; ++f) {
    if (fomega[f].empty()) continue;

    std::map<int, std::vector<std::pair<int, int>>> adj;  // cell -> (cell, frag)
    for (int k : ffrag[f]) {
      int cu = M.cell_of[2 * k], cd = M.cell_of[2 * k + 1];
      adj[cu].push_back({cd, k});
      if (cd != cu) adj[cd].push_back({cu, k});
    }
    std::map<int, std::pair<int, int>> par;  // cell -> (parent cell, frag)
    std::map<int, int> depth;
    std::set<int> used;
    int root = fcell[f][0];
    par[root] = {-1, -1};
    depth[root] = 0;
    std::vector<int> bfs{root};
    for (size_t i = 0; i < bfs.size(); ++i)
      for (auto [d, k] : adj[bfs[i]])
        if (!par.count(d)) {
          par[d] = {bfs[i], k};
          depth[d] = depth[bfs[i]] + 1;
          used.insert(k);
          bfs.push_back(d);
        }
    TL_CHECK(bfs.size() == fcell[f].size(), "face cells are not connected");
    std::vector<int> extra;
    for (int k : ffrag[f])
      if (!used.count(k)) extra.push_back(k);
    TL_CHECK(extra.size() <= 1, "face has several track cycles: system is not filling");

    // word of the unique reduced tree walk between two cells
    auto tree_walk = [&](int a, int b) {
      std::vector<std::pair<int, int>> ra, rb;  // (frag, cell crossed from)
      int x = a, y = b;
      while (depth[x] > depth[y]) {
        ra.push_back({par[x].second, x});
        x = par[x].first;
      }
      while (depth[y] > depth[x]) {
        rb.push_back({par[y].second, y});
        y = par[y].first;
      }
      while (x != y) {
        ra.push_back({par[x].second, x});
        x = par[x].first;
        rb.push_back({par[y].second, y});
        y = par[y].first;
      }
      std::vector<Tok> w;
      for (auto [k, from] : ra) w.push_back(cross_from(k, from));
      for (auto it = rb.rbegin(); it != rb.rend(); ++it) {
        auto [k, into] = *it;
        w.push_back(Tok{M.frag_edge(k), M.cell_of[2 * k] == into ? D : U});
      }
      return w;
    };

    auto consider = [&](std::vector<Tok> w) {
      Strand s;
      s.a = s.b = Corner{0, U};
      s.w = std::move(w);
      canonicalize(s, sys.n);
      if (s.w.empty()) return;
      if (!essential_alone(s, sys.n)) return;
      if (std::binary_search(sys.strands.begin(), sys.strands.end(), s)) return;
      out.insert(std::move(s));
    };

    std::vector<int> om(fomega[f].begin(), fomega[f].end());
    for (size_t i = 0; i < om.size(); ++i)
      for (size_t j = i; j < om.size(); ++j) {
        if (om[i] != om[j]) consider(tree_walk(om[i], om[j]));
        for (int k : extra) {
          int cu = M.cell_of[2 * k], cd = M.cell_of[2 * k + 1];
          for (int dir = 0; dir < 2; ++dir) {
            int in = dir ? cd : cu, outc = dir ? cu : cd;
            auto w = tree_walk(om[i], in);
            w.push_back(Tok{M.frag_edge(k), dir ? D : U});
            auto tail = tree_walk(outc, om[j]);
            w.insert(w.end(), tail.begin(), tail.end());
            consider(std::move(w));
          }
        }
      }
  }
  return {out.begin(), out.end()};
}

std::vector<System> supersets(const System& sys) {
  std::vector<System> out;
  int room = 2 * sys.n - 3 - (int)sys.strands.size();
  if (room <= 0) return out;
  auto pool = addable_arcs(sys);
  int m = (int)pool.size();

  auto fits = [&](System s) {
    canonicalize(s);
    try {
      draw_system(s);
      return true;
    } catch (const err&) {
      return false;
    }
  };
  for (int i = 0; i < m; ++i) {
    System s = sys;
    s.strands.push_back(pool[i]);
    TL_CHECK(fits(s), "candidate arc cannot be drawn");
  }
  std::vector<std::vector<char>> duo(m, std::vector<char>(m, 0));
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      System s = sys;
      s.strands.push_back(pool[i]);
      s.strands.push_back(pool[j]);
      duo[i][j] = duo[j][i] = fits(s);
    }

  std::vector<int> pick;
  auto emit = [&]() {
    System cand = sys;
    for (int i : pick) cand.strands.push_back(pool[i]);
    canonicalize(cand);
    for (size_t q = 0; q + 1 < cand.strands.size(); ++q)
      if (cand.strands[q] == cand.strands[q + 1]) return;
    try {
      RibbonTree t = extract_tree(cand);
      for (int v = 0; v < t.nv(); ++v)
        if (t.label[v] < 0 && (int)t.ribbon[v].size() < 3) return;
    } catch (const err&) {
      return;
    }
    out.push_back(std::move(cand));
  };
  std::function<void(int)> go = [&](int next) {
    if (!pick.empty()) emit();
    if ((int)pick.size() == room) return;
    for (int i = next; i < m; ++i) {
      bool ok = true;
      for (int j : pick) ok = ok && duo[j][i];
      if (!ok) continue;
      pick.push_back(i);
      go(i + 1);
      pick.pop_back();
    }
  };
  go(0);
  return out;
}

std::vector<System> collapses(const System& sys) {
  RibbonTree t = extract_tree(sys);
  int m = t.ne();
  TL_CHECK(m <= 20, "tree too large for subset enumeration");
  std::vector<System> out;
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    EdgeSet forest(m, 0);
    for (int e = 0; e < m; ++e) forest[e] = (mask >> e) & 1;
    if (!forest_collapsible(t, forest)) continue;
    out.push_back(delete_arcs(sys, forest));
  }
  return out;
}

std::vector<System> expansions(const System& sys) {
  std::vector<System> out;
  for (auto& cand : supersets(sys)) {
    RibbonTree t = extract_tree(cand);
    EdgeSet added(t.ne(), 0);
    for (int e = 0; e < t.ne(); ++e)
      added[e] = !std::binary_search(sys.strands.begin(), sys.strands.end(),
                                     cand.strands[e]);
    if (forest_collapsible(t, added)) out.push_back(cand);
  }
  return out;
}

std::set<System> neighborhood(const System& sys, int r) {
  System s0 = sys;
  canonicalize(s0);
  std::set<System> seen{s0};
  std::vector<System> frontier{s0};
  for (int d = 0; d < r; ++d) {
    std::vector<System> next;
    for (auto& t : frontier) {
      for (auto& nb : collapses(t))
        if (seen.insert(nb).second) next.push_back(nb);
      for (auto& nb : expansions(t))
        if (seen.insert(nb).second) next.push_back(nb);
    }
    frontier = std::move(next);
  }
  return seen;
}

std::set<System> restricted_two_neighborhood(const System& sys) {
  System s0 = sys;
  canonicalize(s0);
  std::set<System> one{s0};
  for (auto& t : collapses(s0)) one.insert(t);
  for (auto& t : expansions(s0)) one.insert(t);
  std::set<System> out;
  for (const System& t : one) {
    out.insert(t);
    int m = (int)t.strands.size();
    TL_CHECK(m <= 20, "tree too large for subset enumeration");
    for (unsigned mask = 1; mask + 1 < (1u << m); ++mask) {
      System sub;
      sub.n = t.n;
      for (int e = 0; e < m; ++e)
        if ((mask >> e) & 1) sub.strands.push_back(t.strands[e]);
      out.insert(std::move(sub));
    }
    for (auto& sup : supersets(t)) out.insert(sup);
  }
  return out;
}

System subforest_boundary(const System& sys, const EdgeSet& forest) {
  TL_CHECK(forest.size() == sys.strands.size(), "arc mask does not match system");
  System out;
  out.n = sys.n;
  if (std::find(forest.begin(), forest.end(), 1) == forest.end()) return out;
  RibbonTree t = extract_tree(sys);
  Positions P = position_system(sys);
  Dcel M = build_dcel(sys, P);
  std::vector<char> fin(t.nv(), 0);
  for (int e = 0; e < t.ne(); ++e)
    if (forest[e]) fin[t.ends[e].first] = fin[t.ends[e].second] = 1;
  std::vector<char> cin(M.ncell, 0);
  for (int c = 0; c < M.ncell; ++c) cin[c] = fin[M.sysface_of_cell[c]];
  std::vector<char> pass(forest.begin(), forest.end());
  for (Strand s : region_boundary(M, cin, pass)) {
    canonicalize(s, sys.n);
    if (essential_alone(s, sys.n)) out.strands.push_back(s);
  }
  std::sort(out.strands.begin(), out.strands.end());
  out.strands.erase(std::unique(out.strands.begin(), out.strands.end()),
                    out.strands.end());
  return out;
}

BubbleView bubble_view(const System& sys) {
  TL_CHECK(!sys.strands.empty(), "bubble view of an empty system");
  for (auto& s : sys.strands) TL_CHECK(!s.closed, "bubble view needs an arc system");
  Positions P = position_system(sys);
  Dcel M = build_dcel(sys, P);
  std::vector<char> none(sys.strands.size(), 0);
  std::vector<std::pair<Strand, std::vector<int>>> bub;
  BubbleView out;
  out.curves.n = sys.n;
  for (int f = 0; f < M.nsysface; ++f) {
    auto& pts = M.face_points[f];
    if ((int)pts.size() < 2) {
      for (int p : pts) out.outside.push_back(p);
      continue;
    }
    std::vector<char> cin(M.ncell, 0);
    for (int c = 0; c < M.ncell; ++c) cin[c] = M.sysface_of_cell[c] == f;
    auto bd = region_boundary(M, cin, none);
    TL_CHECK(bd.size() == 1, "crowded face bounded by several curves");
    canonicalize(bd[0], sys.n);
    TL_CHECK(essential_alone(bd[0], sys.n), "crowded face boundary is inessential");
    bub.push_back({bd[0], pts});
  }
  std::sort(bub.begin(), bub.end());
  for (auto& [c, pts] : bub) {
    out.curves.strands.push_back(c);
    out.inside.push_back(pts);
  }
  std::sort(out.outside.begin(), out.outside.end());
  return out;
}

namespace {

// face labels and arc endpoints of a possibly non-filling system
struct Dual {
  int nv = 0;
  std::vector<std::vector<int>> pts;       // face -> marked points
  std::vector<std::pair<int, int>> ends;   // arc -> faces
};

Dual dual_of(const System& sys) {
  for (auto& s : sys.strands) TL_CHECK(!s.closed, "diagram needs an arc system");
  Positions P = position_system(sys);
  Dcel M = build_dcel(sys, P);
  Dual d;
  d.nv = M.nsysface;
  d.pts = M.face_points;
  d.ends.assign(sys.strands.size(), {-1, -1});
  for (size_t j = 0; j < M.chords.size(); ++j) {
    int i = M.chords[j].strand;
    if (d.ends[i].first >= 0) continue;
    int h = 2 * M.nfrag + 2 * (int)j;
    d.ends[i] = {M.sysface(h), M.sysface(h ^ 1)};
  }
  return d;
}

std::string face_text(const std::vector<int>& pts) {
  std::ostringstream o;
  for (size_t i = 0; i < pts.size(); ++i) o << (i ? " " : "") << 'p' << pts[i];
  return o.str();
}

std::string dot_of(const Dual& d) {
  std::ostringstream o;
  o << "graph {\n";
  for (int v = 0; v < d.nv; ++v) {
    o << "  v" << v;
    if (d.pts[v].empty())
      o << " [shape=point]";
    else if (d.pts[v].size() == 1)
      o << " [shape=circle, label=\"" << face_text(d.pts[v]) << "\"]";
    else
      o << " [shape=doublecircle, label=\"" << face_text(d.pts[v]) << "\"]";
    o << ";\n";
  }
  for (auto& [a, b] : d.ends) o << "  v" << a << " -- v" << b << ";\n";
  o << "}\n";
  return o.str();
}

std::string tikz_of(const Dual& d) {
  // advisory layout: breadth-first layers from face 0
  std::vector<std::vector<std::pair<int, int>>> adj(d.nv);
  for (size_t e = 0; e < d.ends.size(); ++e) {
    adj[d.ends[e].first].push_back({d.ends[e].second, (int)e});
    adj[d.ends[e].second].push_back({d.ends[e].first, (int)e});
  }
  std::vector<int> depth(d.nv, -1), row(d.nv, 0), rows;
  std::vector<int> bfs;
  for (int s = 0; s < d.nv; ++s) {
    if (depth[s] >= 0) continue;
    depth[s] = 0;
    bfs.push_back(s);
    for (size_t i = bfs.size() - 1; i < bfs.size(); ++i)
      for (auto [w, e] : adj[bfs[i]])
        if (depth[w] < 0) {
          depth[w] = depth[bfs[i]] + 1;
          bfs.push_back(w);
        }
  }
  for (int v : bfs) {
    if ((int)rows.size() <= depth[v]) rows.resize(depth[v] + 1, 0);
    row[v] = rows[depth[v]]++;
  }
  std::ostringstream o;
  o << "\\begin{tikzpicture}[every node/.style={draw, circle, inner sep=2pt}]\n";
  for (int v : bfs)
    o << "  \\node (v" << v << ") at (" << 2 * depth[v] << ", " << -2 * row[v]
      << ") {" << face_text(d.pts[v]) << "};\n";
  for (auto& [a, b] : d.ends) o << "  \\draw (v" << a << ") -- (v" << b << ");\n";
  o << "\\end{tikzpicture}\n";
  return o.str();
}

Dual dual_of(const RibbonTree& t) {
  Dual d;
  d.nv = t.nv();
  d.pts.resize(t.nv());
  for (int v = 0; v < t.nv(); ++v)
    if (t.label[v] >= 0) d.pts[v] = {t.label[v]};
  d.ends = t.ends;
  return d;
}

}  // namespace

std::string emit_dot(const RibbonTree& t) { return dot_of(dual_of(t)); }
std::string emit_tikz(const RibbonTree& t) { return tikz_of(dual_of(t)); }
std::string emit_dot(const System& sys) { return dot_of(dual_of(sys)); }
std::string emit_tikz(const System& sys) { return tikz_of(dual_of(sys)); }

}  // namespace tl
