#include "treelift/faces.hpp"

#include <numeric>

namespace tl {

namespace {
struct UF {
  std::vector<int> p;
  explicit UF(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void join(int a, int b) { p[find(a)] = find(b); }
};
}  // namespace

int Dcel::next_sys(int h) const {
  int y = half_next[h];
  while (is_frag(y)) y = half_next[twin(y)];
  return y;
}

Dcel build_dcel(const System& sys, const Positions& pos) {
  Dcel M;
  M.n = sys.n;
  M.sys = &sys;
  int n = sys.n;

  // stops west to east
  M.vert_stop.assign(n + 1, -1);
  for (int v = 1; v <= n; ++v) {
    M.vert_stop[v] = (int)M.stops.size();
    M.stops.push_back({v, {}});
    for (const CrossRef& cr : pos.slot[v]) {
      M.slot_stop[{cr.strand, cr.tok}] = (int)M.stops.size();
      M.stops.push_back({-1, cr});
    }
  }
  M.vert_stop[0] = (int)M.stops.size();
  M.stops.push_back({0, {}});

  int S = (int)M.stops.size();
  M.nfrag = S - 1;
  M.frag_edge_.assign(M.nfrag, 0);
  {
    int cur = 0;
    for (int k = 0; k < M.nfrag; ++k) {
      if (M.stops[k].vert >= 1) cur = M.stops[k].vert;
      M.frag_edge_[k] = cur;
    }
  }

  // chords, with lookup of the half leaving each port
  int F = M.nfrag;
  std::vector<std::vector<int>> entry_half(sys.strands.size()), exit_half(sys.strands.size());
  std::vector<std::array<int, 2>> germ_half(sys.strands.size(), {-1, -1});
  auto slot_of = [&](int si, int k) { return M.slot_stop.at({si, k}); };
  for (int si = 0; si < (int)sys.strands.size(); ++si) {
    const Strand& s = sys.strands[si];
    int len = (int)s.w.size();
    entry_half[si].assign(len, -1);
    exit_half[si].assign(len, -1);
    if (!s.closed) {
      for (int j = 0; j <= len; ++j) {
        Dcel::Chord c;
        c.strand = si;
        int id = (int)M.chords.size();
        int h0 = 2 * F + 2 * id, h1 = h0 + 1;
        if (j == 0) {
          c.stop0 = M.vert_stop[s.a.v];
          c.germ0 = true;
          germ_half[si][0] = h0;
        } else {
          c.stop0 = slot_of(si, j - 1);
          c.at0 = flip(s.w[j - 1].side);
          exit_half[si][j - 1] = h0;
        }
        if (j == len) {
          c.stop1 = M.vert_stop[s.b.v];
          c.germ1 = true;
          germ_half[si][1] = h1;
        } else {
          c.stop1 = slot_of(si, j);
          c.at1 = s.w[j].side;
          entry_half[si][j] = h1;
        }
        M.chords.push_back(c);
      }
    } else {
      TL_CHECK(len >= 1, "empty closed strand in map");
      for (int j = 0; j < len; ++j) {
        Dcel::Chord c;
        c.strand = si;
        int id = (int)M.chords.size();
        int h0 = 2 * F + 2 * id, h1 = h0 + 1;
        c.stop0 = slot_of(si, j);
        c.at0 = flip(s.w[j].side);
        exit_half[si][j] = h0;
        int k = (j + 1) % len;
        c.stop1 = slot_of(si, k);
        c.at1 = s.w[k].side;
        entry_half[si][k] = h1;
        M.chords.push_back(c);
      }
    }
  }

  int H = 2 * F + 2 * (int)M.chords.size();
  M.half_head.assign(H, -1);
  for (int k = 0; k < F; ++k) {
    M.half_head[2 * k] = k + 1;
    M.half_head[2 * k + 1] = k;
  }
  for (int c = 0; c < (int)M.chords.size(); ++c) {
    M.half_head[2 * F + 2 * c] = M.chords[c].stop1;
    M.half_head[2 * F + 2 * c + 1] = M.chords[c].stop0;
  }

  // rotations (outgoing halves, counterclockwise starting east)
  std::vector<std::vector<int>> rot(S);
  for (int i = 0; i < S; ++i) {
    const auto& st = M.stops[i];
    auto add_fan_rev = [&](Corner c) {
      auto it = pos.fan.find(c);
      if (it == pos.fan.end()) return;
      for (auto g = it->second.rbegin(); g != it->second.rend(); ++g)
        rot[i].push_back(germ_half[g->strand][g->end]);
    };
    if (st.vert == 0) {
      rot[i].push_back(2 * (i - 1) + 1);
      add_fan_rev(Corner{0, U});
    } else if (st.vert == 1) {
      rot[i].push_back(2 * i);
      add_fan_rev(Corner{1, U});
    } else if (st.vert > 1) {
      rot[i].push_back(2 * i);
      add_fan_rev(Corner{st.vert, U});
      rot[i].push_back(2 * (i - 1) + 1);
      add_fan_rev(Corner{st.vert, D});
    } else {
      int si = st.cr.strand, k = st.cr.tok;
      Side entry = sys.strands[si].w[k].side;
      int hu = entry == U ? entry_half[si][k] : exit_half[si][k];
      int hd = entry == D ? entry_half[si][k] : exit_half[si][k];
      rot[i] = {2 * i, hu, 2 * (i - 1) + 1, hd};
    }
  }
  std::vector<int> rot_stop(H, -1), rot_idx(H, -1);
  for (int i = 0; i < S; ++i)
    for (int j = 0; j < (int)rot[i].size(); ++j) {
      rot_stop[rot[i][j]] = i;
      rot_idx[rot[i][j]] = j;
    }
  for (int h = 0; h < H; ++h) TL_CHECK(rot_stop[h] >= 0, "half missing from rotation");

  M.half_next.assign(H, -1);
  for (int h = 0; h < H; ++h) {
    int t = h ^ 1;
    int i = rot_stop[t];
    const auto& r = rot[i];
    M.half_next[h] = r[(rot_idx[t] + (int)r.size() - 1) % r.size()];
  }

  // cells = face orbits
  M.cell_of.assign(H, -1);
  for (int h = 0; h < H; ++h) {
    if (M.cell_of[h] >= 0) continue;
    int c = M.ncell++;
    for (int x = h; M.cell_of[x] < 0; x = M.half_next[x]) M.cell_of[x] = c;
  }

  // complementary faces: cells glued across fragments
  UF uf(M.ncell);
  for (int k = 0; k < F; ++k) uf.join(M.cell_of[2 * k], M.cell_of[2 * k + 1]);
  std::map<int, int> rename;
  M.sysface_of_cell.assign(M.ncell, -1);
  for (int c = 0; c < M.ncell; ++c) {
    int r = uf.find(c);
    auto [it, fresh] = rename.try_emplace(r, (int)rename.size());
    M.sysface_of_cell[c] = it->second;
  }
  M.nsysface = (int)rename.size();

  M.face_points.assign(M.nsysface, {});
  M.face_omega.assign(M.nsysface, 0);
  for (int v = 1; v <= n; ++v) {
    int i = M.vert_stop[v];
    if ((int)rot[i].size() != (v == 1 ? 1 : 2)) continue;  // pinned: on the system
    int f = M.sysface(2 * i);
    if (v > 1) {
      TL_CHECK(f == M.sysface(2 * (i - 1)) && f == M.sysface(2 * (i - 1) + 1) &&
                   f == M.sysface(2 * i + 1),
               "vertex cells disagree");
    }
    M.face_points[f].push_back(v);
  }
  {
    int i = M.vert_stop[0];
    for (int h : rot[i]) M.face_omega[M.sysface(h)] = 1;
    M.face_omega[M.sysface(2 * (i - 1))] = 1;
  }
  return M;
}

std::vector<FaceInfo> system_faces(const System& sys) {
  Positions P = position_system(sys);
  Dcel M = build_dcel(sys, P);
  std::vector<FaceInfo> out(M.nsysface);
  for (int f = 0; f < M.nsysface; ++f) {
    out[f].points = M.face_points[f];
    out[f].omega = M.face_omega[f];
  }
  return out;
}

bool essential_alone(const Strand& s0, int n) {
  Strand s = s0;
  canonicalize(s, n);
  if (s.closed && s.w.empty()) return false;
  if (!s.closed) TL_CHECK(s.is_inf_arc(), "essentiality is for curves and infinity arcs");
  System one{n, {s}};
  auto faces = system_faces(one);
  TL_CHECK(faces.size() == 2, "simple strand must split the sphere in two");
  if (!s.closed) return !faces[0].points.empty() && !faces[1].points.empty();
  const FaceInfo& inner = faces[0].omega ? faces[1] : faces[0];
  const FaceInfo& outer = faces[0].omega ? faces[0] : faces[1];
  TL_CHECK(inner.omega == false, "curve fails to separate infinity");
  return inner.points.size() >= 2 && !outer.points.empty();
}

RibbonTree extract_tree(const System& sys) {
  Positions P = position_system(sys);
  Dcel M = build_dcel(sys, P);
  RibbonTree T;
  T.n = sys.n;
  T.arcs = sys;
  T.label.assign(M.nsysface, -1);
  T.omega.assign(M.nsysface, 0);
  for (int f = 0; f < M.nsysface; ++f) {
    TL_CHECK(M.face_points[f].size() <= 1, "system is not filling");
    if (!M.face_points[f].empty()) T.label[f] = M.face_points[f][0];
    T.omega[f] = M.face_omega[f];
  }
  int F = M.nfrag;
  int H = 2 * F + 2 * (int)M.chords.size();
  std::vector<char> seen(H, 0);
  std::vector<int> orbits_of_face(M.nsysface, 0);
  T.ribbon.assign(M.nsysface, {});
  for (int h = 2 * F; h < H; ++h) {
    if (seen[h]) continue;
    int f = M.sysface(h);
    orbits_of_face[f]++;
    std::vector<int> strands_cyc;
    int x = h;
    do {
      seen[x] = 1;
      int st = M.chords[M.chord_of(x)].strand;
      if (strands_cyc.empty() || strands_cyc.back() != st) strands_cyc.push_back(st);
      x = M.next_sys(x);
    } while (x != h);
    while (strands_cyc.size() > 1 && strands_cyc.front() == strands_cyc.back())
      strands_cyc.pop_back();
    std::set<int> uniq(strands_cyc.begin(), strands_cyc.end());
    TL_CHECK(uniq.size() == strands_cyc.size(), "arc repeats around a face");
    T.ribbon[f] = strands_cyc;
  }
  for (int f = 0; f < M.nsysface; ++f)
    TL_CHECK(orbits_of_face[f] == 1, "face boundary is not a single cycle");
  T.ends.assign(sys.strands.size(), {-1, -1});
  for (int c = 0; c < (int)M.chords.size(); ++c) {
    int si = M.chords[c].strand;
    int h = 2 * F + 2 * c;
    std::pair<int, int> pr{M.sysface(h), M.sysface(h ^ 1)};
    if (T.ends[si].first < 0) {
      T.ends[si] = pr;
    } else {
      TL_CHECK((T.ends[si] == pr) ||
                   (T.ends[si] == std::make_pair(pr.second, pr.first)),
               "arc side faces drift");
    }
  }
  for (auto& [x, y] : T.ends) TL_CHECK(x != y && x >= 0, "arc fails to separate");
  TL_CHECK((int)sys.strands.size() + 1 == M.nsysface, "dual graph is not a tree");
  UF uf(M.nsysface);
  for (auto& [x, y] : T.ends) uf.join(x, y);
  std::set<int> comps;
  for (int f = 0; f < M.nsysface; ++f) comps.insert(uf.find(f));
  TL_CHECK(comps.size() == 1, "dual graph is disconnected");
  return T;
}

std::vector<Strand> region_boundary(const Dcel& M, const std::vector<char>& cell_in,
                                    const std::vector<char>& strand_passable) {
  int F = M.nfrag;
  int H = 2 * F + 2 * (int)M.chords.size();
  auto passable = [&](int h) {
    if (M.is_frag(h)) return false;
    int st = M.chords[M.chord_of(h)].strand;
    return (bool)strand_passable[st];
  };
  std::vector<char> seen(H, 0);
  std::vector<Strand> out;
  for (int h = 2 * F; h < H; ++h) {
    if (seen[h] || !cell_in[M.cell_of[h]] || passable(h)) continue;
    Strand b;
    b.closed = true;
    int x = h;
    do {
      seen[x] = 1;
      int y = M.half_next[x];
      while (true) {
        if (M.is_frag(y)) {
          bool inside = cell_in[M.cell_of[y]] && cell_in[M.cell_of[M.twin(y)]];
          if (inside) {
            b.w.push_back(Tok{M.frag_edge(M.frag_of(y)), M.east_going(y) ? U : D});
            y = M.half_next[M.twin(y)];
          } else {
            y = M.half_next[y];
          }
        } else if (passable(y)) {
          TL_CHECK(cell_in[M.cell_of[y]] && cell_in[M.cell_of[M.twin(y)]],
                   "passable arc leaves the region");
          y = M.half_next[M.twin(y)];
        } else {
          break;
        }
      }
      TL_CHECK(cell_in[M.cell_of[y]], "region boundary walked outside");
      x = y;
    } while (x != h);
    out.push_back(b);
  }
  return out;
}

}  // namespace tl
