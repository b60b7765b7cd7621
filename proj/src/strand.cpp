#include "treelift/strand.hpp"

namespace tl {

std::vector<int> vertex_edges(int v, int n) {
  TL_CHECK(v >= 0 && v <= n, "vertex out of range");
  if (v == 0) return {n};
  if (v == 1) return {1};
  if (v == n) return {n - 1, n};
  return {v - 1, v};
}

bool cancel_pass(std::vector<Tok>& w, bool closed) {
  bool any = false;
  bool again = true;
  while (again) {
    again = false;
    for (size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i].edge == w[i + 1].edge && w[i].side == flip(w[i + 1].side)) {
        w.erase(w.begin() + i, w.begin() + i + 2);
        any = again = true;
        break;
      }
    }
    if (!again && closed && w.size() >= 2) {
      if (w.back().edge == w.front().edge && w.back().side == flip(w.front().side)) {
        w.erase(w.begin());
        w.pop_back();
        any = again = true;
      }
    }
  }
  return any;
}

static bool incident(int edge, int v, int n) {
  auto es = vertex_edges(v, n);
  return std::find(es.begin(), es.end(), edge) != es.end();
}

static bool single_corner(int v) { return v == 0 || v == 1; }

// trim one crossing at the front if the germ can be pulled across the
// endpoint vertex; returns true if changed
static bool trim_front(Strand& s, int n) {
  if (s.closed || s.w.empty()) return false;
  const Tok& t = s.w.front();
  if (!incident(t.edge, s.a.v, n)) return false;
  if (!single_corner(s.a.v) && t.side != s.a.sec) return false;
  s.w.erase(s.w.begin());
  if (!single_corner(s.a.v)) s.a.sec = flip(s.a.sec);
  return true;
}

static bool trim_back(Strand& s, int n) {
  if (s.closed || s.w.empty()) return false;
  const Tok& t = s.w.back();
  if (!incident(t.edge, s.b.v, n)) return false;
  // walking in from b, the crossing is met on its exit side
  if (!single_corner(s.b.v) && flip(t.side) != s.b.sec) return false;
  s.w.pop_back();
  if (!single_corner(s.b.v)) s.b.sec = flip(s.b.sec);
  return true;
}

void tauten(Strand& s, int n) {
  if (single_corner(s.a.v)) s.a.sec = U;
  if (single_corner(s.b.v)) s.b.sec = U;
  bool changed = true;
  while (changed) {
    changed = cancel_pass(s.w, s.closed);
    if (!s.closed) {
      while (trim_front(s, n)) changed = true;
      while (trim_back(s, n)) changed = true;
    }
  }
}

void reverse_strand(Strand& s) {
  std::reverse(s.w.begin(), s.w.end());
  for (auto& t : s.w) t.side = flip(t.side);
  if (!s.closed) std::swap(s.a, s.b);
}

static Strand reversed(Strand s) {
  reverse_strand(s);
  return s;
}

static Strand min_rotation(const Strand& s) {
  Strand best = s;
  Strand cur = s;
  for (size_t k = 1; k < s.w.size(); ++k) {
    std::rotate(cur.w.begin(), cur.w.begin() + 1, cur.w.end());
    if (cur < best) best = cur;
  }
  return best;
}

void canonicalize(Strand& s, int n) {
  tauten(s, n);
  if (s.closed) {
    if (s.w.empty()) return;
    Strand best = min_rotation(s);
    Strand r = min_rotation(reversed(s));
    if (r < best) best = r;
    s = best;
    return;
  }
  // explore the germ-rotation orbit: all taut forms of the class, reachable
  // by pulling an end germ back across an incident edge end
  std::set<Strand> seen;
  std::vector<Strand> queue{s};
  seen.insert(s);
  const size_t len = s.w.size();
  size_t qi = 0;
  while (qi < queue.size()) {
    TL_CHECK(queue.size() < 4096, "strand rotation orbit blew up");
    Strand cur = queue[qi++];
    for (int end = 0; end < 2; ++end) {
      Corner& c = end == 0 ? cur.a : cur.b;
      for (int e : vertex_edges(c.v, n)) {
        for (Side sd : {U, D}) {
          if (!single_corner(c.v) && sd != flip(c.sec)) continue;
          Strand next = cur;
          Corner& nc = end == 0 ? next.a : next.b;
          Tok t{e, sd};
          if (end == 0) {
            if (!single_corner(nc.v)) nc.sec = flip(nc.sec);
            next.w.insert(next.w.begin(), t);
          } else {
            // appended crossing is met from its entry side when walking
            // out of the far end, so store the exit-side flip
            if (!single_corner(nc.v)) nc.sec = flip(nc.sec);
            next.w.push_back(Tok{e, flip(sd)});
          }
          tauten(next, n);
          if (next.w.size() != len) continue;
          if (seen.insert(next).second) queue.push_back(next);
        }
      }
    }
  }
  Strand best = s;
  for (const auto& x : queue) {
    if (x < best) best = x;
    Strand r = reversed(x);
    if (r < best) best = r;
  }
  s = best;
}

void canonicalize(System& sys) {
  for (auto& s : sys.strands) canonicalize(s, sys.n);
  // a taut closed strand with no crossings bounds an empty disk; a taut
  // pinned strand with no crossings and equal endpoints retracts into its
  // corner.  both are trivial and vanish.
  std::erase_if(sys.strands, [](const Strand& s) {
    return s.w.empty() && (s.closed || s.a == s.b);
  });
  std::sort(sys.strands.begin(), sys.strands.end());
}

std::string Strand::str() const {
  std::ostringstream o;
  if (closed) {
    o << "o";
  } else {
    o << a.v << side_ch(a.sec) << "-" << b.v << side_ch(b.sec);
  }
  o << "[";
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) o << " ";
    o << w[i].edge << side_ch(w[i].side);
  }
  o << "]";
  return o.str();
}

std::string System::str() const {
  std::ostringstream o;
  o << "n=" << n << "{";
  for (size_t i = 0; i < strands.size(); ++i) {
    if (i) o << ", ";
    o << strands[i].str();
  }
  o << "}";
  return o.str();
}

}  // namespace tl
