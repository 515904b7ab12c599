#ifndef CLUSTERFLIP_STAIRPATH_HPP
#define CLUSTERFLIP_STAIRPATH_HPP

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>
#include <stdexcept>
#include <utility>
#include <vector>

#include "clusterflip/laurent.hpp"

namespace cflip {

struct IndexOutOfDomain : std::domain_error {
  IndexOutOfDomain() : std::domain_error("index outside 0 <= t <= k+1") {}
};

inline VarId grid_var(int i, int j) { return VarId::ix2('x', i, j); }

inline LaurentPoly grid_value(int i, int j) {
  return LaurentPoly::var(grid_var(i, j));
}

// Substitutes x_{a,b} -> x_{a+di,b+dj} throughout; every variable of p must be
// a two-index grid variable.
inline LaurentPoly shift_grid(const LaurentPoly& p, int di, int dj) {
  if (di == 0 && dj == 0) return p;
  LaurentPoly out;
  for (const auto& [m, c] : p.terms()) {
    std::vector<Monomial::Entry> es;
    es.reserve(m.entries().size());
    for (const auto& [v, e] : m.entries()) {
      if (v.arity != 2) throw std::invalid_argument("shift_grid: not a grid variable");
      es.push_back({VarId::ix2(v.tag, v.i0 + di, v.i1 + dj), e});
    }
    out = out + LaurentPoly(Monomial(std::move(es)), c);
  }
  return out;
}

// psi_{t,k} on the infinite grid, defined for 0 <= t <= k+1:
//   psi_{0,k} = psi_{k+1,k} = x_{i,j}
//   psi_{1,1} = (x_{i-1,j}x_{i+1,j} + x_{i,j-1}x_{i,j+1}) / x_{i,j}
//   psi_{t,k} = (psi_{t,k-1}(x_{i-1,j}) psi_{t-1,k-1}(x_{i+1,j})
//              + psi_{t-1,k-1}(x_{i,j-1}) psi_{t,k-1}(x_{i,j+1})) / psi_{t-1,k-2}(x_{i,j})
// The recurrence is translation-equivariant, so values are memoized at the
// origin and index-shifted.
class PsiTable {
 public:
  LaurentPoly operator()(int t, int k, int i, int j) {
    if (t < 0 || t > k + 1) throw IndexOutOfDomain();
    if (t == 0 || t == k + 1) return grid_value(i, j);
    return shift_grid(at_origin(t, k), i, j);
  }

 private:
  LaurentPoly at_origin(int t, int k) {
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = memo_.find({t, k});
      if (it != memo_.end()) return it->second;
    }
    PsiTable& self = *this;
    LaurentPoly r;
    if (t == 1 && k == 1) {
      r = div_exact(grid_value(-1, 0) * grid_value(1, 0) +
                        grid_value(0, -1) * grid_value(0, 1),
                    grid_value(0, 0));
    } else {
      r = div_exact(self(t, k - 1, -1, 0) * self(t - 1, k - 1, 1, 0) +
                        self(t - 1, k - 1, 0, -1) * self(t, k - 1, 0, 1),
                    self(t - 1, k - 2, 0, 0));
    }
    std::lock_guard<std::mutex> lock(mu_);
    memo_.emplace(std::pair<int, int>{t, k}, r);
    return r;
  }

  std::mutex mu_;
  std::map<std::pair<int, int>, LaurentPoly> memo_;
};

inline LaurentPoly psi(int t, int k, int i, int j) {
  static PsiTable table;
  return table(t, k, i, j);
}

struct GridPoint {
  int i = 0;
  int j = 0;
  friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

enum class StairFlavor { LeftUp, RightDown };

// An alternating path on the grid. For LeftUp the lengths come in pairs
// (l_1,u_1,...,l_g,u_g) of left and up segments; the first left and last up
// length may be zero, interior lengths are positive. The path starts one step
// right of `start` (so `start` is the second point of the first segment),
// consecutive segments connect across a unit diagonal, and the ending point E
// lies one step past the head of the last segment. RightDown is the mirrored
// flavor with right and down segments starting one step left of `start`.
struct StairPath {
  GridPoint start;
  StairFlavor flavor = StairFlavor::LeftUp;
  std::vector<int> lengths;

  int total_length() const {
    int n = 0;
    for (int l : lengths) n += l;
    return n;
  }

  GridPoint end() const {
    int a = 0, b = 0;
    for (std::size_t w = 0; w < lengths.size(); w += 2) {
      a += lengths[w];
      b += lengths[w + 1];
    }
    if (flavor == StairFlavor::LeftUp) return {start.i - a, start.j + b};
    return {start.i + a, start.j - b};
  }

  // Segments as (tail, head) pairs; zero-length segments are omitted.
  std::vector<std::pair<GridPoint, GridPoint>> segments() const {
    std::vector<std::pair<GridPoint, GridPoint>> out;
    const int i = start.i, j = start.j;
    int L = 0, U = 0;
    for (std::size_t w = 0; w < lengths.size(); w += 2) {
      int lv = lengths[w], uv = lengths[w + 1];
      if (flavor == StairFlavor::LeftUp) {
        if (lv > 0) out.push_back({{i + 1 - L, j + U}, {i + 1 - L - lv, j + U}});
        L += lv;
        if (uv > 0) out.push_back({{i - L, j - 1 + U}, {i - L, j - 1 + U + uv}});
        U += uv;
      } else {
        if (lv > 0) out.push_back({{i - 1 + L, j - U}, {i - 1 + L + lv, j - U}});
        L += lv;
        if (uv > 0) out.push_back({{i + L, j + 1 - U}, {i + L, j + 1 - U - uv}});
        U += uv;
      }
    }
    return out;
  }

  // Product of x_tail/x_head over the segments, times the ending variable.
  LaurentPoly weight() const {
    LaurentPoly w(1);
    for (const auto& [tail, head] : segments())
      w = w * grid_value(tail.i, tail.j) * grid_value(head.i, head.j).pow(-1);
    GridPoint e = end();
    return w * grid_value(e.i, e.j);
  }
};

// All n-stair (or n-reversed-stair) paths of (i,j); exactly 2^n of them.
inline std::vector<StairPath> enumerate_stairs(int n, int i, int j,
                                               StairFlavor flavor) {
  if (n < 0) throw std::invalid_argument("enumerate_stairs: negative length");
  std::vector<StairPath> out;
  if (n == 0) {
    out.push_back({{i, j}, flavor, {}});
    return out;
  }
  std::vector<int> cur;
  auto rec = [&](auto&& rec, int rem) -> void {
    int lmin = cur.empty() ? 0 : 1;
    for (int l = lmin; l <= rem; ++l) {
      if (l == rem) {
        cur.push_back(l);
        cur.push_back(0);
        out.push_back({{i, j}, flavor, cur});
        cur.pop_back();
        cur.pop_back();
      }
      for (int u = 1; l + u <= rem; ++u) {
        cur.push_back(l);
        cur.push_back(u);
        if (l + u == rem)
          out.push_back({{i, j}, flavor, cur});
        else
          rec(rec, rem - l - u);
        cur.pop_back();
        cur.pop_back();
      }
    }
  };
  rec(rec, n);
  return out;
}

// Sum of weights of all stair paths from one point to another, with the
// conventions: same point -> x_{i,j}, unreachable quadrant -> 0.
inline LaurentPoly stair_sum(GridPoint from, GridPoint to) {
  if (to == from) return grid_value(from.i, from.j);
  if (to.i > from.i || to.j < from.j) return LaurentPoly();
  LaurentPoly s;
  int n = (from.i - to.i) + (to.j - from.j);
  for (const auto& p : enumerate_stairs(n, from.i, from.j, StairFlavor::LeftUp))
    if (p.end() == to) s = s + p.weight();
  return s;
}

inline LaurentPoly reversed_stair_sum(GridPoint from, GridPoint to) {
  if (to == from) return grid_value(from.i, from.j);
  if (to.i < from.i || to.j > from.j) return LaurentPoly();
  LaurentPoly s;
  int n = (to.i - from.i) + (from.j - to.j);
  for (const auto& p : enumerate_stairs(n, from.i, from.j, StairFlavor::RightDown))
    if (p.end() == to) s = s + p.weight();
  return s;
}

// psi_{1,k+l}(x_{i,j}) = sum_t stair_sum to the midpoint times psi_{1,k} there,
// divided by the midpoint variable (and the reversed-stair dual for psi_{k+l,k+l}).
inline bool check_sum_decomposition(int k, int l, int i, int j) {
  if (k < 0 || l < 0) throw std::invalid_argument("check_sum_decomposition: negative index");
  LaurentPoly rhs_s, rhs_r;
  for (int t = 0; t <= l; ++t) {
    GridPoint ms{i - t, j + l - t}, mr{i + t, j - l + t};
    rhs_s = rhs_s + div_exact(stair_sum({i, j}, ms) * psi(1, k, ms.i, ms.j),
                              grid_value(ms.i, ms.j));
    rhs_r = rhs_r + div_exact(reversed_stair_sum({i, j}, mr) * psi(k, k, mr.i, mr.j),
                              grid_value(mr.i, mr.j));
  }
  return psi(1, k + l, i, j) == rhs_s && psi(k + l, k + l, i, j) == rhs_r;
}

// Recomputes psi_{t,k}(x_{i,j}) as the stair-path sum whose segment weights are
// ratios of psi_{t-1,*} values, over paths of total length k-t+1. Each path
// term is a fraction of psi products; the identity is checked after clearing
// the common denominator, so every comparison stays polynomial.
inline bool check_stair_structure(int t, int k, int i, int j) {
  if (t < 1 || t > k) throw IndexOutOfDomain();
  using Atom = std::tuple<int, int, int>;
  struct Fraction {
    LaurentPoly num;
    std::map<Atom, int> den;
  };
  std::vector<Fraction> parts;
  for (const auto& p : enumerate_stairs(k - t + 1, i, j, StairFlavor::LeftUp)) {
    Fraction f;
    f.num = LaurentPoly(1);
    int L = 0, U = 0;
    for (std::size_t w = 0; w < p.lengths.size(); w += 2) {
      int lv = p.lengths[w], uv = p.lengths[w + 1];
      if (lv > 0) {
        f.num = f.num * psi(t - 1, k - 1 - L - U, i + 1 - L, j + U);
        L += lv;
        ++f.den[Atom{k - 1 - L - U, i + 1 - L, j + U}];
      } else {
        L += lv;
      }
      if (uv > 0) {
        f.num = f.num * psi(t - 1, k - 1 - L - U, i - L, j - 1 + U);
        U += uv;
        ++f.den[Atom{k - 1 - L - U, i - L, j - 1 + U}];
      } else {
        U += uv;
      }
    }
    f.num = f.num * grid_value(i - L, j + U);
    parts.push_back(std::move(f));
  }

  std::map<Atom, int> common;
  for (const auto& f : parts)
    for (const auto& [a, m] : f.den) common[a] = std::max(common[a], m);

  LaurentPoly rhs;
  for (const auto& f : parts) {
    LaurentPoly c = f.num;
    for (const auto& [a, m] : common) {
      auto it = f.den.find(a);
      int extra = m - (it == f.den.end() ? 0 : it->second);
      for (int r = 0; r < extra; ++r)
        c = c * psi(t - 1, std::get<0>(a), std::get<1>(a), std::get<2>(a));
    }
    rhs = rhs + c;
  }
  LaurentPoly lhs = psi(t, k, i, j);
  for (const auto& [a, m] : common)
    for (int r = 0; r < m; ++r)
      lhs = lhs * psi(t - 1, std::get<0>(a), std::get<1>(a), std::get<2>(a));
  return lhs == rhs;
}

}  // namespace cflip

#endif
