#pragma once
// shared small utilities and exact arithmetic
#include <algorithm>
#include <cassert>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

namespace tl {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::rational<BigInt>;

inline Rat rat(long p, long q = 1) { return Rat(BigInt(p), BigInt(q)); }

// NB: never compare a Rat against an int literal.  Under C++20 rewritten
// candidates boost::rational's heterogeneous operator== resolves to itself
// and recurses forever.  Compare signs via rsgn, or build a Rat first.
inline int rsgn(const Rat& x) {
  return x.numerator() < 0 ? -1 : (x.numerator() == 0 ? 0 : 1);
}

struct err : std::runtime_error {
  explicit err(const std::string& m) : std::runtime_error(m) {}
};

#define TL_CHECK(cond, msg) \
  do { if (!(cond)) throw ::tl::err(std::string("check failed: ") + (msg)); } while (0)

template <class T>
int sgn(const T& x) { return x < T(0) ? -1 : (T(0) < x ? 1 : 0); }

// floor division for possibly-negative m
inline long long fdiv(long long a, long long b) {
  long long q = a / b, r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}
inline long long fmod(long long a, long long b) { return a - fdiv(a, b) * b; }

}  // namespace tl
