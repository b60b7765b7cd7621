#include "doctest.h"
#include "treelift/faces.hpp"

using namespace tl;

namespace {
Strand inf_arc(std::vector<Tok> w) {
  Strand s;
  s.a = s.b = Corner{0, U};
  s.w = std::move(w);
  return s;
}
Strand closed_curve(std::vector<Tok> w) {
  Strand s;
  s.closed = true;
  s.w = std::move(w);
  return s;
}
System tripod() {
  System sys;
  sys.n = 3;
  sys.strands = {inf_arc({{1, U}}), inf_arc({{1, U}, {2, D}}), inf_arc({{2, U}})};
  canonicalize(sys);
  return sys;
}
System path_dual(int n) {
  System sys;
  sys.n = n;
  for (int e = 1; e < n; ++e) sys.strands.push_back(inf_arc({{e, U}}));
  canonicalize(sys);
  return sys;
}
std::multiset<std::vector<int>> face_sets(const System& sys) {
  std::multiset<std::vector<int>> out;
  for (auto& f : system_faces(sys)) out.insert(f.points);
  return out;
}
}  // namespace

TEST_CASE("nested arcs around p1 and p2 order west to east") {
  System sys;
  sys.n = 3;
  sys.strands = {inf_arc({{1, U}}), inf_arc({{1, U}, {2, D}})};
  canonicalize(sys);
  REQUIRE(sys.strands[0].w.size() == 1);  // arc around p1 sorts first
  Positions P = position_system(sys);
  REQUIRE(P.slot[1].size() == 2);
  CHECK(P.slot[1][0].strand == 0);  // the p1 loop crosses e1 closer to p1
  CHECK(P.slot[1][1].strand == 1);
  REQUIRE(P.slot[2].size() == 1);
  // at the infinity corner the two ends of each arc are adjacent, with the
  // p2 loop innermost (its return chord hugs the track over p3)
  auto& fan = P.fan.at(Corner{0, U});
  REQUIRE(fan.size() == 4);
  CHECK(fan[0] == GermRef{1, 1});
  CHECK(fan[1] == GermRef{1, 0});
  CHECK(fan[2] == GermRef{0, 0});
  CHECK(fan[3] == GermRef{0, 1});
}

TEST_CASE("tripod dual system has four one-point faces") {
  auto fs = face_sets(tripod());
  REQUIRE(fs.size() == 4);
  CHECK(fs.count({1}) == 1);
  CHECK(fs.count({2}) == 1);
  CHECK(fs.count({3}) == 1);
  CHECK(fs.count({}) == 1);
  for (auto& f : system_faces(tripod())) CHECK(f.omega);
}

TEST_CASE("tripod extracts to a three-spoke ribbon tree") {
  RibbonTree T = extract_tree(tripod());
  REQUIRE(T.nv() == 4);
  REQUIRE(T.ne() == 3);
  int center = -1;
  for (int v = 0; v < T.nv(); ++v)
    if (T.label[v] < 0) center = v;
  REQUIRE(center >= 0);
  CHECK(T.ribbon[center].size() == 3);
  for (int e = 0; e < 3; ++e) {
    CHECK((T.ends[e].first == center || T.ends[e].second == center));
  }
}

TEST_CASE("path dual extracts to a path") {
  RibbonTree T = extract_tree(path_dual(4));
  REQUIRE(T.nv() == 4);
  int leaves = 0;
  for (int v = 0; v < T.nv(); ++v) {
    CHECK(T.label[v] >= 1);
    leaves += T.ribbon[v].size() == 1;
  }
  CHECK(leaves == 2);
}

TEST_CASE("mirror tripods are different systems") {
  System a = tripod();
  System b;
  b.n = 3;
  b.strands = {inf_arc({{1, U}}), inf_arc({{1, D}, {2, U}}), inf_arc({{2, U}})};
  canonicalize(b);
  CHECK(!(a == b));
  // but both are filling with the same face contents
  CHECK(face_sets(a) == face_sets(b));
}

TEST_CASE("region boundary of the middle of a path gives the two-point loop") {
  System sys = path_dual(4);
  Positions P = position_system(sys);
  Dcel M = build_dcel(sys, P);
  RibbonTree T = extract_tree(sys);
  // faces containing p2 and p3, glued across the arc separating {p1,p2}
  int f2 = -1, f3 = -1;
  for (int v = 0; v < T.nv(); ++v) {
    if (T.label[v] == 2) f2 = v;
    if (T.label[v] == 3) f3 = v;
  }
  int mid = -1;
  for (int e = 0; e < T.ne(); ++e) {
    auto [x, y] = T.ends[e];
    if ((x == f2 && y == f3) || (x == f3 && y == f2)) mid = e;
  }
  REQUIRE(mid >= 0);
  std::vector<char> cell_in(M.ncell, 0);
  for (int c = 0; c < M.ncell; ++c) {
    int f = M.sysface_of_cell[c];
    if (f == f2 || f == f3) cell_in[c] = 1;
  }
  std::vector<char> pass(sys.strands.size(), 0);
  pass[mid] = 1;
  auto bd = region_boundary(M, cell_in, pass);
  REQUIRE(bd.size() == 1);
  Strand got = bd[0];
  canonicalize(got, 4);
  Strand want = closed_curve({{1, U}, {3, D}});
  canonicalize(want, 4);
  CHECK(got == want);
}

TEST_CASE("essential tests for arcs and curves") {
  CHECK(essential_alone(inf_arc({{1, U}}), 2));
  CHECK(essential_alone(inf_arc({{1, U}}), 3));
  CHECK(!essential_alone(closed_curve({{1, U}}), 3));   // one point inside
  CHECK(essential_alone(closed_curve({{2, U}}), 3));    // p1,p2 inside, p3 out
  CHECK(!essential_alone(closed_curve({{3, U}}), 3));   // everything inside
  CHECK(!essential_alone(closed_curve({}), 3));
}
