// Line-oriented text format for arc/curve systems.
//
//   sphere n=<n>
//   arc <id> [closed] [from=<corner> to=<corner>] word=<tok>,<tok>,...
//   ends <endid>,<endid>,...          (derived: fan order at infinity)
//   face <id> labels=p<i>,p<j>,...    (derived: marked points per face)
//
// Tokens are x:<edge>:<L|R> with L = entering from above.  Corners are p<i>,
// p<i>:L, p<i>:R, or inf.  Arcs with both ends at infinity omit from=/to=.
// The derived lines are emitted for readers and re-checked on parse; they are
// not independent inputs.  emit . parse . emit is byte-identical.
#include <sstream>

#include "treelift/faces.hpp"
#include "treelift/position.hpp"

namespace tl {

namespace {

std::string corner_str(const Corner& c) {
  if (c.v == 0) return "inf";
  std::string s = "p" + std::to_string(c.v);
  if (c.v != 1) {
    s += ':';
    s += side_ch(c.sec);
  }
  return s;
}

std::string word_str(const std::vector<Tok>& w) {
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ',';
    s += "x:" + std::to_string(w[i].edge) + ":";
    s += side_ch(w[i].side);
  }
  return s;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

int parse_int(const std::string& s) {
  TL_CHECK(!s.empty(), "expected integer, got empty field");
  size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(s, &pos);
  } catch (...) {
    throw err("bad integer '" + s + "'");
  }
  TL_CHECK(pos == s.size(), "bad integer '" + s + "'");
  return v;
}

Side parse_side(const std::string& s) {
  TL_CHECK(s == "L" || s == "R", "bad side '" + s + "' (want L or R)");
  return s == "L" ? U : D;
}

Corner parse_corner(const std::string& s, int n) {
  if (s == "inf") return Corner{0, U};
  TL_CHECK(s.size() >= 2 && s[0] == 'p', "bad corner '" + s + "'");
  auto parts = split(s.substr(1), ':');
  int v = parse_int(parts[0]);
  TL_CHECK(v >= 1 && v <= n, "corner vertex out of range in '" + s + "'");
  if (v == 1) {
    TL_CHECK(parts.size() == 1, "p1 has a single corner, drop the side");
    return Corner{1, U};
  }
  TL_CHECK(parts.size() == 2, "corner '" + s + "' needs a :L or :R side");
  return Corner{v, parse_side(parts[1])};
}

std::vector<Tok> parse_word(const std::string& s, int n) {
  std::vector<Tok> w;
  if (s.empty()) return w;
  for (auto& t : split(s, ',')) {
    auto f = split(t, ':');
    TL_CHECK(f.size() == 3 && f[0] == "x", "bad token '" + t + "'");
    int e = parse_int(f[1]);
    TL_CHECK(e >= 1 && e <= n, "edge out of range in token '" + t + "'");
    w.push_back(Tok{e, parse_side(f[2])});
  }
  return w;
}

}  // namespace

std::string emit_system(const System& sys) {
  System c = sys;
  canonicalize(c);
  std::ostringstream out;
  out << "sphere n=" << c.n << "\n";
  for (size_t i = 0; i < c.strands.size(); ++i) {
    const Strand& s = c.strands[i];
    out << "arc " << i;
    if (s.closed) {
      out << " closed";
    } else if (!s.is_inf_arc()) {
      out << " from=" << corner_str(s.a) << " to=" << corner_str(s.b);
    }
    out << " word=" << word_str(s.w) << "\n";
  }
  Positions P = position_system(c);
  out << "ends ";
  auto it = P.fan.find(Corner{0, U});
  if (it != P.fan.end()) {
    for (size_t i = 0; i < it->second.size(); ++i) {
      if (i) out << ',';
      out << it->second[i].strand << (it->second[i].end == 0 ? 'a' : 'b');
    }
  }
  out << "\n";
  auto fs = system_faces(c);
  for (size_t i = 0; i < fs.size(); ++i) {
    out << "face " << i << " labels=";
    for (size_t j = 0; j < fs[i].points.size(); ++j) {
      if (j) out << ',';
      out << 'p' << fs[i].points[j];
    }
    out << "\n";
  }
  return out.str();
}

System parse_system(const std::string& text) {
  System sys;
  bool have_sphere = false;
  std::vector<std::string> ends_seen;
  std::vector<std::vector<int>> faces_seen;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string kw;
    ls >> kw;
    if (kw == "sphere") {
      TL_CHECK(!have_sphere, "duplicate sphere line");
      std::string f;
      ls >> f;
      TL_CHECK(f.rfind("n=", 0) == 0, "sphere line needs n=<count>");
      sys.n = parse_int(f.substr(2));
      TL_CHECK(sys.n >= 1, "need at least one marked point");
      have_sphere = true;
    } else if (kw == "arc") {
      TL_CHECK(have_sphere, "arc before sphere line");
      std::string f;
      ls >> f;
      TL_CHECK(parse_int(f) == (int)sys.strands.size(), "arc ids must be 0,1,... in order");
      Strand s;
      s.a = s.b = Corner{0, U};
      bool have_word = false;
      while (ls >> f) {
        if (f == "closed") {
          s.closed = true;
        } else if (f.rfind("from=", 0) == 0) {
          s.a = parse_corner(f.substr(5), sys.n);
        } else if (f.rfind("to=", 0) == 0) {
          s.b = parse_corner(f.substr(3), sys.n);
        } else if (f.rfind("word=", 0) == 0) {
          s.w = parse_word(f.substr(5), sys.n);
          have_word = true;
        } else {
          throw err("unknown arc field '" + f + "'");
        }
      }
      TL_CHECK(have_word, "arc line without word=");
      Strand taut = s;
      tauten(taut, sys.n);
      TL_CHECK(taut.w == s.w, "arc " + std::to_string(sys.strands.size()) + " is not taut");
      sys.strands.push_back(s);
    } else if (kw == "ends") {
      std::string f;
      ls >> f;
      if (!f.empty())
        for (auto& e : split(f, ',')) ends_seen.push_back(e);
    } else if (kw == "face") {
      std::string idf, f;
      ls >> idf >> f;
      TL_CHECK(f.rfind("labels=", 0) == 0, "face line needs labels=");
      std::vector<int> pts;
      if (f.size() > 7)
        for (auto& p : split(f.substr(7), ',')) {
          TL_CHECK(p.size() >= 2 && p[0] == 'p', "bad face label '" + p + "'");
          pts.push_back(parse_int(p.substr(1)));
        }
      faces_seen.push_back(pts);
    } else {
      throw err("unknown record '" + kw + "'");
    }
  }
  TL_CHECK(have_sphere, "missing sphere line");
  canonicalize(sys);
  // derived lines, when present, must agree with what we recompute
  if (!ends_seen.empty()) {
    Positions P = position_system(sys);
    std::vector<std::string> want;
    auto it = P.fan.find(Corner{0, U});
    if (it != P.fan.end())
      for (auto& g : it->second)
        want.push_back(std::to_string(g.strand) + (g.end == 0 ? "a" : "b"));
    TL_CHECK(want == ends_seen, "ends line disagrees with arc words");
  }
  if (!faces_seen.empty()) {
    auto fs = system_faces(sys);
    TL_CHECK(fs.size() == faces_seen.size(), "face count disagrees with arc words");
    for (size_t i = 0; i < fs.size(); ++i)
      TL_CHECK(fs[i].points == faces_seen[i], "face " + std::to_string(i) + " labels disagree");
  }
  return sys;
}

}  // namespace tl
