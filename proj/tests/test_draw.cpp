#include "doctest.h"

#include <numeric>
#include <random>

#include "treelift/draw.hpp"

using namespace tl;

namespace {

Strand closed_w(std::vector<Tok> w) {
  Strand s;
  s.closed = true;
  s.w = std::move(w);
  return s;
}

Strand inf_arc(std::vector<Tok> w) {
  Strand s;
  s.a = s.b = Corner{0, U};
  s.w = std::move(w);
  return s;
}

Strand pin_arc(Corner a, Corner b, std::vector<Tok> w) {
  Strand s;
  s.a = a;
  s.b = b;
  s.w = std::move(w);
  return s;
}

System mk(int n, std::vector<Strand> ss) {
  System s;
  s.n = n;
  s.strands = std::move(ss);
  canonicalize(s);
  return s;
}

System tripod() {
  return mk(3, {inf_arc({{1, U}}), inf_arc({{1, U}, {2, D}}), inf_arc({{2, U}})});
}

void check_drawing(const System& s, const Rat& shift = Rat(0)) {
  INFO(s.str());
  Drawing d = draw_system(s, shift);
  CHECK_NOTHROW(validate_drawing(d));
}

}  // namespace

TEST_CASE("drawings of basic systems validate") {
  check_drawing(tripod());
  check_drawing(tripod(), Rat(1, 3));
  // nested fan of arcs around initial segments
  for (int n = 2; n <= 6; ++n) {
    std::vector<Strand> ss;
    for (int e = 1; e <= n; ++e) ss.push_back(inf_arc({{e, U}}));
    check_drawing(mk(n, ss));
  }
  // closed curves alone and over arc systems
  check_drawing(mk(3, {closed_w({{2, U}})}));
  check_drawing(mk(3, {closed_w({{1, U}, {2, D}})}));
  check_drawing(mk(4, {closed_w({{2, U}, {4, D}}), inf_arc({{1, U}})}));
  // arcs pinned at marked points
  check_drawing(mk(3, {pin_arc({2, U}, {3, U}, {})}));
  // the curve encloses both arc endpoints, so the arc nests inside it
  check_drawing(mk(3, {pin_arc({2, U}, {3, U}, {}), closed_w({{1, U}, {3, D}})}));
  check_drawing(mk(4, {pin_arc({2, D}, {4, D}, {}), pin_arc({1, U}, {4, U}, {})}));
}

TEST_CASE("overlay reports even transversal counts against closed curves") {
  Drawing db = draw_system(tripod(), Rat(0));
  System A = mk(3, {closed_w({{2, U}})});
  bool done = false;
  for (int q = 2; q <= 20 && !done; ++q)
    for (int p = 1; p < q && !done; ++p) {
      if (std::gcd(p, q) != 1) continue;
      try {
        auto xs = overlay(draw_system(A, Rat(p, q)), db);
        std::map<int, int> per;
        for (auto& x : xs) {
          CHECK((x.sign == 1 || x.sign == -1));
          CHECK(x.as == 0);
          CHECK(x.agap >= 0);
          CHECK(x.agap < 1);
          per[x.bs]++;
        }
        for (auto& [bs, c] : per) CHECK(c % 2 == 0);
        done = true;
      } catch (const retry_needed&) {
      }
    }
  CHECK(done);
}

TEST_CASE("twists about trivial curves act as the identity") {
  System base = tripod();
  // word cancels entirely: bounds a disk
  CHECK(act_twist(base, closed_w({{1, U}, {1, D}}), 5) == base);
  // curve around a single marked point: trivial twist even though taut
  CHECK(act_twist(base, closed_w({{1, U}, {2, D}}), 1) == base);
  CHECK(act_twist(base, closed_w({{1, U}, {2, D}}), -3) == base);
  // k = 0
  CHECK(act_twist(base, closed_w({{2, U}}), 0) == base);
}

TEST_CASE("twists about curves disjoint from the system act as the identity") {
  System base = mk(4, {inf_arc({{1, U}})});
  // curve around the last two points is disjoint from an arc around the first
  CHECK(act_twist(base, closed_w({{2, U}, {4, D}}), 1) == base);
  CHECK(act_twist(base, closed_w({{2, U}, {4, D}}), -2) == base);
  // a closed strand parallel to the twisting curve is unmoved
  System par = mk(4, {closed_w({{2, U}})});
  CHECK(act_twist(par, closed_w({{2, U}}), 3) == par);
}

TEST_CASE("every curve on the three marked point sphere twists trivially") {
  // with infinity the sphere has three marked points, so the mapping class
  // group is trivial and the surgery must always tauten back to the input
  System base = mk(2, {inf_arc({{1, U}})});
  for (auto& g : {closed_w({{2, U}}), closed_w({{1, U}, {2, D}})})
    for (int k : {1, -1, 2}) CHECK(act_twist(base, g, k) == base);
}

TEST_CASE("single wrap of an arc around a two point curve") {
  System base = mk(3, {inf_arc({{1, U}})});
  Strand g = closed_w({{2, U}});  // curve around the first two marked points
  System plus = act_twist(base, g, 1);
  System minus = act_twist(base, g, -1);
  REQUIRE(plus.strands.size() == 1);
  REQUIRE(minus.strands.size() == 1);
  CHECK(plus.strands[0].w.size() == 3);
  CHECK(minus.strands[0].w.size() == 3);
  CHECK(plus != minus);
  CHECK(plus != base);
  CHECK(act_twist(plus, g, -1) == base);
  CHECK(act_twist(minus, g, 1) == base);
  check_drawing(plus);
  check_drawing(minus);
}

TEST_CASE("twist powers compose") {
  System base = tripod();
  Strand g = closed_w({{2, U}});
  System one = act_twist(base, g, 1);
  System two = act_twist(one, g, 1);
  CHECK(two == act_twist(base, g, 2));
  CHECK(act_twist(two, g, -2) == base);
  check_drawing(two);
}

TEST_CASE("twists about disjoint curves commute") {
  System base = mk(4, {inf_arc({{1, U}}), inf_arc({{3, U}})});
  Strand g1 = closed_w({{2, U}});          // around p1 p2
  Strand g2 = closed_w({{2, U}, {4, D}});  // around p3 p4
  System ab = act_twist(act_twist(base, g1, 1), g2, 1);
  System ba = act_twist(act_twist(base, g2, 1), g1, 1);
  CHECK(ab == ba);
  CHECK(act_twist(act_twist(ab, g1, -1), g2, -1) == base);
}

TEST_CASE("random twist words unwind to the identity") {
  std::mt19937 rng(20240812);
  System sys = mk(4, {inf_arc({{1, U}}), inf_arc({{2, U}}), inf_arc({{3, U}}),
                      inf_arc({{4, U}})});
  std::vector<Strand> pool = {
      closed_w({{2, U}}),          // around p1 p2
      closed_w({{2, U}, {4, D}}),  // around p3 p4
      closed_w({{1, U}, {3, D}}),  // around p2 p3
      closed_w({{3, U}}),          // around p1 p2 p3
  };
  std::vector<System> hist;
  std::vector<std::pair<int, int>> moves;  // (pool index, k)
  for (int step = 0; step < 8; ++step) {
    hist.push_back(sys);
    int c = (int)(rng() % pool.size());
    int k = rng() % 2 == 0 ? 1 : -1;
    moves.push_back({c, k});
    sys = act_twist(sys, pool[c], k);
    check_drawing(sys);
  }
  for (int step = 7; step >= 0; --step) {
    sys = act_twist(sys, pool[moves[step].first], -moves[step].second);
    CHECK(sys == hist[step]);
  }
}
