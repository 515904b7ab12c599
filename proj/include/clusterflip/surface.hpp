#ifndef CLUSTERFLIP_SURFACE_HPP
#define CLUSTERFLIP_SURFACE_HPP

#include <algorithm>
#include <array>
#include <cstdlib>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "clusterflip/quiver.hpp"
#include "clusterflip/seed.hpp"

namespace cflip {

struct UnknownDiagonal : std::runtime_error {
  UnknownDiagonal(int u, int v)
      : std::runtime_error("no diagonal between corners " + std::to_string(u) +
                           " and " + std::to_string(v)) {}
};

// Adds the arrows of one n-subdivided triangle to q.  Points are addressed
// by barycentric coordinates (a,b,c) with a+b+c = n+1, taken relative to a
// counterclockwise listing of the three corners.  Every small triangle of
// the subdivision contributes a half-weight 3-cycle: inverted triangles run
// counterclockwise, upright ones clockwise.  Arrows with a corner endpoint
// are dropped (corners carry no quiver vertex), so each interior edge picks
// up two aligned half contributions (a full arrow) while each boundary edge
// between consecutive subdivision points keeps a single half arrow.
inline void add_subdivision_arrows(
    Quiver& q, int n, const std::function<std::string(int, int, int)>& id_at) {
  auto is_corner = [n](int a, int b, int c) {
    return a == n + 1 || b == n + 1 || c == n + 1;
  };
  auto add = [&](int a0, int b0, int c0, int a1, int b1, int c1) {
    if (is_corner(a0, b0, c0) || is_corner(a1, b1, c1)) return;
    q.add_arrow(id_at(a0, b0, c0), id_at(a1, b1, c1), 3);
  };
  for (int a = 0; a <= n; ++a)
    for (int b = 0; a + b <= n; ++b) {
      int c = n - a - b;
      add(a + 1, b, c, a, b, c + 1);
      add(a, b, c + 1, a, b + 1, c);
      add(a, b + 1, c, a + 1, b, c);
    }
  for (int a = 0; a + 1 <= n; ++a)
    for (int b = 0; a + b + 1 <= n; ++b) {
      int c = n - 1 - a - b;
      add(a, b + 1, c + 1, a + 1, b, c + 1);
      add(a + 1, b, c + 1, a + 1, b + 1, c);
      add(a + 1, b + 1, c, a, b + 1, c + 1);
    }
}

inline void sort_by_var(std::vector<std::string>& ids) {
  std::sort(ids.begin(), ids.end(), [](const std::string& a, const std::string& b) {
    return VarId::parse(a) < VarId::parse(b);
  });
}

// An n-subdivided triangulated convex polygon, tracked combinatorially.
// Corners are indexed 0..m-1 in clockwise order and carry no quiver
// vertices.  Every edge (side or diagonal) carries n labelled points,
// stored in order from its lower-indexed corner; every triangle of the
// triangulation carries n(n-1)/2 labelled interior points keyed by
// barycentric coordinates relative to its sorted corner triple.  Side
// points are frozen, diagonal and interior points are mutable.
class TriangulatedPolygon {
 public:
  TriangulatedPolygon(int corners, int n) : m_(corners), n_(n) {
    if (corners < 3) throw std::invalid_argument("polygon needs at least 3 corners");
    if (n < 1) throw std::invalid_argument("subdivision depth must be at least 1");
  }

  int corners() const { return m_; }
  int depth() const { return n_; }

  // Registers the n points of the side between consecutive corners u and v,
  // listed in order from u.
  void set_side(int u, int v, std::vector<std::string> ids) {
    if ((u - v + m_) % m_ != 1 && (v - u + m_) % m_ != 1)
      throw std::invalid_argument("corners are not consecutive");
    insert_edge(u, v, std::move(ids), true);
  }

  // Registers a triangulation diagonal and its n points, listed from u.
  void add_diagonal(int u, int v, std::vector<std::string> ids) {
    if ((u - v + m_) % m_ == 1 || (v - u + m_) % m_ == 1 || u == v)
      throw std::invalid_argument("not a diagonal");
    insert_edge(u, v, std::move(ids), false);
  }

  // Registers the interior point of triangle (c0,c1,c2) with barycentric
  // coordinates (a,b,c) relative to that corner listing.
  void set_interior(int c0, int c1, int c2, int a, int b, int c, std::string id) {
    if (a + b + c != n_ + 1 || a < 1 || b < 1 || c < 1)
      throw std::invalid_argument("not an interior point");
    std::array<int, 3> L{c0, c1, c2}, bary{a, b, c};
    auto [tri, key] = sorted_key(L, bary);
    interior_[tri][key] = std::move(id);
  }

  bool has_diagonal(int u, int v) const {
    auto it = edges_.find(norm(u, v));
    return it != edges_.end() && !it->second.side;
  }

  // Points of the edge between corners u and v, listed in order from u.
  std::vector<std::string> edge_points(int u, int v) const {
    auto it = edges_.find(norm(u, v));
    if (it == edges_.end()) throw std::invalid_argument("no such edge");
    std::vector<std::string> out(it->second.ids.begin(), it->second.ids.end());
    if (u > v) std::reverse(out.begin(), out.end());
    return out;
  }

  std::vector<std::pair<int, int>> diagonals() const {
    std::vector<std::pair<int, int>> out;
    for (const auto& [key, e] : edges_)
      if (!e.side) out.push_back(key);
    return out;
  }

  // The triangles of the current triangulation, as sorted corner triples.
  std::vector<std::array<int, 3>> faces() const {
    std::vector<int> ring(m_);
    for (int i = 0; i < m_; ++i) ring[i] = i;
    std::vector<std::array<int, 3>> out;
    while (ring.size() > 3) {
      bool clipped = false;
      for (std::size_t i = 0; i < ring.size(); ++i) {
        int p = ring[(i + ring.size() - 1) % ring.size()];
        int q = ring[i];
        int r = ring[(i + 1) % ring.size()];
        if (edges_.count(norm(p, r))) {
          out.push_back(sort3(p, q, r));
          ring.erase(ring.begin() + static_cast<std::ptrdiff_t>(i));
          clipped = true;
          break;
        }
      }
      if (!clipped) throw std::logic_error("triangulation is incomplete");
    }
    out.push_back(sort3(ring[0], ring[1], ring[2]));
    std::sort(out.begin(), out.end());
    return out;
  }

  // Builds the quiver of the current triangulation.  A sorted corner triple
  // lists its corners clockwise (polygon corners are indexed clockwise), so
  // the counterclockwise listing passed to the subdivision is (c0,c2,c1).
  Quiver quiver() const {
    Quiver q;
    for (const auto& [key, e] : edges_)
      for (const auto& id : e.ids) q.add_vertex(id, e.side);
    for (const auto& [tri, pts] : interior_)
      for (const auto& [bary, id] : pts) q.add_vertex(id, false);
    for (const auto& f : faces()) {
      std::array<int, 3> ccw{f[0], f[2], f[1]};
      add_subdivision_arrows(q, n_, [&](int a, int b, int c) {
        return point_id(ccw, {a, b, c});
      });
    }
    return q;
  }

  Seed initial_seed() const { return Seed(quiver()); }

  // Flips the diagonal (u,v).  Returns the mutation plan of the flip (one
  // layer per mutation round, each sorted by variable id) and updates the
  // triangulation: the flipped quadrilateral P Q R S (clockwise, with the
  // old diagonal P R) is mapped onto the local grid P=(0,0), Q=(n+1,0),
  // R=(n+1,n+1), S=(0,n+1); points keep their ids at fixed local positions,
  // the new diagonal Q S picks up the local anti-diagonal.
  FlipPlan flip(int u, int v) {
    auto key = norm(u, v);
    auto eit = edges_.find(key);
    if (eit == edges_.end() || eit->second.side) throw UnknownDiagonal(u, v);
    const int P = key.first, R = key.second;
    int Q = -1, S = -1;
    for (const auto& f : faces()) {
      bool hasP = f[0] == P || f[1] == P || f[2] == P;
      bool hasR = f[0] == R || f[1] == R || f[2] == R;
      if (!hasP || !hasR) continue;
      int w = f[0] + f[1] + f[2] - P - R;
      (w > P && w < R ? Q : S) = w;
    }
    if (Q < 0 || S < 0) throw std::logic_error("diagonal is not shared by two faces");

    const int N = n_;
    std::map<std::pair<int, int>, std::string> at;
    for (int i = 1; i <= N; ++i) at[{i, i}] = eit->second.ids[i - 1];
    collect_triangle(at, {P, Q, R}, [](std::array<int, 3> b) {
      return std::pair<int, int>{b[1] + b[2], b[2]};
    });
    collect_triangle(at, {P, R, S}, [](std::array<int, 3> b) {
      return std::pair<int, int>{b[1], b[1] + b[2]};
    });

    FlipPlan plan;
    for (int k = 1; k <= N; ++k) {
      std::vector<std::string> layer;
      for (int x = 1; x <= N; ++x)
        for (int y = 1; y <= N; ++y) {
          if (std::abs(x - y) > k - 1) continue;
          if (std::abs(x - y) % 2 != (k - 1) % 2) continue;
          if (x + y < k + 1 || x + y > 2 * N + 1 - k) continue;
          layer.push_back(at.at({x, y}));
        }
      sort_by_var(layer);
      plan.push_back(std::move(layer));
    }

    std::vector<std::string> nids;
    for (int i = 1; i <= N; ++i) nids.push_back(at.at({N + 1 - i, i}));
    if (Q > S) std::reverse(nids.begin(), nids.end());

    edges_.erase(key);
    interior_.erase(sort3(P, Q, R));
    interior_.erase(sort3(P, R, S));
    edges_[norm(Q, S)] = EdgeData{false, std::move(nids)};
    for (const auto& [xy, id] : at) {
      auto [x, y] = xy;
      if (x + y == N + 1) continue;
      if (x + y <= N)
        set_interior(P, Q, S, N + 1 - x - y, x, y, id);
      else
        set_interior(Q, R, S, N + 1 - y, x + y - N - 1, N + 1 - x, id);
    }
    return plan;
  }

 private:
  struct EdgeData {
    bool side = false;
    std::vector<std::string> ids;
  };

  static std::pair<int, int> norm(int u, int v) {
    return {std::min(u, v), std::max(u, v)};
  }

  static std::array<int, 3> sort3(int a, int b, int c) {
    std::array<int, 3> t{a, b, c};
    std::sort(t.begin(), t.end());
    return t;
  }

  // Permutes a (listing, barycentric) pair so the corners are sorted.
  static std::pair<std::array<int, 3>, std::array<int, 3>> sorted_key(
      const std::array<int, 3>& L, const std::array<int, 3>& bary) {
    std::array<int, 3> idx{0, 1, 2};
    std::sort(idx.begin(), idx.end(), [&](int i, int j) { return L[i] < L[j]; });
    return {{L[idx[0]], L[idx[1]], L[idx[2]]},
            {bary[idx[0]], bary[idx[1]], bary[idx[2]]}};
  }

  void insert_edge(int u, int v, std::vector<std::string> ids, bool side) {
    if (u < 0 || u >= m_ || v < 0 || v >= m_) throw std::invalid_argument("corner out of range");
    if (static_cast<int>(ids.size()) != n_)
      throw std::invalid_argument("edge needs exactly n points");
    if (u > v) std::reverse(ids.begin(), ids.end());
    if (!edges_.emplace(norm(u, v), EdgeData{side, std::move(ids)}).second)
      throw std::invalid_argument("edge registered twice");
  }

  // Moves the interior points of triangle (L0,L1,L2) into the local map,
  // converting barycentric coordinates relative to the listing L into local
  // grid positions via `pos`.
  void collect_triangle(std::map<std::pair<int, int>, std::string>& at,
                        const std::array<int, 3>& L,
                        const std::function<std::pair<int, int>(std::array<int, 3>)>& pos) const {
    auto tri = sort3(L[0], L[1], L[2]);
    auto it = interior_.find(tri);
    if (it == interior_.end()) return;
    for (const auto& [beta, id] : it->second) {
      std::array<int, 3> b{};
      for (int i = 0; i < 3; ++i)
        for (int t = 0; t < 3; ++t)
          if (L[i] == tri[t]) b[i] = beta[t];
      at[pos(b)] = id;
    }
  }

  // Resolves a barycentric point of the face whose counterclockwise corner
  // listing is L to its vertex id.
  std::string point_id(const std::array<int, 3>& L, const std::array<int, 3>& bary) const {
    int zeros = (bary[0] == 0) + (bary[1] == 0) + (bary[2] == 0);
    if (zeros >= 2) throw std::logic_error("corners carry no vertex id");
    if (zeros == 1) {
      int zk = bary[0] == 0 ? 0 : bary[1] == 0 ? 1 : 2;
      int i = (zk + 1) % 3, j = (zk + 2) % 3;
      auto it = edges_.find(norm(L[i], L[j]));
      if (it == edges_.end())
        throw std::invalid_argument("no edge between corners " + std::to_string(L[i]) +
                                    " and " + std::to_string(L[j]));
      int idx = L[i] < L[j] ? bary[j] - 1 : n_ - bary[j];
      return it->second.ids.at(static_cast<std::size_t>(idx));
    }
    auto [tri, key] = sorted_key(L, bary);
    auto it = interior_.find(tri);
    if (it == interior_.end() || !it->second.count(key))
      throw std::invalid_argument("missing interior point of a face");
    return it->second.at(key);
  }

  int m_;
  int n_;
  std::map<std::pair<int, int>, EdgeData> edges_;
  std::map<std::array<int, 3>, std::map<std::array<int, 3>, std::string>> interior_;
};

// A single n-subdivided triangle: sides s1..s3n clockwise from corner 0,
// interior points u[a,b] by their first two barycentric coordinates.
inline TriangulatedPolygon triangle_pattern(int n) {
  TriangulatedPolygon P(3, n);
  for (int s = 0; s < 3; ++s) {
    std::vector<std::string> ids;
    for (int i = 1; i <= n; ++i) ids.push_back("s" + std::to_string(s * n + i));
    P.set_side(s, (s + 1) % 3, ids);
  }
  for (int a = 1; a <= n; ++a)
    for (int b = 1; a + b <= n; ++b)
      P.set_interior(0, 1, 2, a, b, n + 1 - a - b,
                     "u[" + std::to_string(a) + "," + std::to_string(b) + "]");
  return P;
}

inline Quiver build_triangle_quiver(int n) { return triangle_pattern(n).quiver(); }

// Vertex labels of the n-subdivided quadrilateral drawn on the integer grid
// [0,n+1]^2 with V1 = (n+1,n+1) and V1 V2 V3 V4 clockwise (V2 bottom-right,
// V3 bottom-left, V4 top-left).  Boundary points are y_1..y_{4n} clockwise
// starting next to V4 on the top side; the main diagonal V1 V3 carries
// x_1..x_n from V1; the anti-diagonal V2 V4 continues x_{n+1}.. from V2,
// except that for odd n its centre point already lies on the main diagonal
// and keeps that label; remaining interior points are labelled along
// concentric square frames, outermost first, clockwise from the frame's
// top-left corner.
inline std::map<std::pair<int, int>, std::string> quad_grid_labels(int n) {
  std::map<std::pair<int, int>, std::string> lab;
  const int N = n + 1;
  auto put = [&](int x, int y, int idx, char tag) {
    lab[{x, y}] = std::string(1, tag) + std::to_string(idx);
  };
  for (int i = 1; i <= n; ++i) {
    put(i, N, i, 'y');
    put(N, N - i, n + i, 'y');
    put(N - i, 0, 2 * n + i, 'y');
    put(0, i, 3 * n + i, 'y');
  }
  for (int i = 1; i <= n; ++i) put(N - i, N - i, i, 'x');
  int next = n + 1;
  for (int j = 1; j <= n; ++j) {
    if (2 * j == N) continue;
    put(N - j, j, next++, 'x');
  }
  for (int t = 1; 2 * t <= N; ++t) {
    int hi = N - t;
    std::vector<std::pair<int, int>> walk;
    for (int x = t; x <= hi; ++x) walk.emplace_back(x, hi);
    for (int y = hi - 1; y >= t; --y) walk.emplace_back(hi, y);
    for (int x = hi - 1; x >= t; --x) walk.emplace_back(x, t);
    for (int y = t + 1; y <= hi - 1; ++y) walk.emplace_back(t, y);
    for (const auto& p : walk)
      if (!lab.count(p)) put(p.first, p.second, next++, 'x');
  }
  return lab;
}

// The labelled quadrilateral as a triangulated polygon with corners
// V1..V4 = 0..3 and the diagonal V1 V3.
inline TriangulatedPolygon quad_pattern(int n) {
  TriangulatedPolygon P(4, n);
  auto lab = quad_grid_labels(n);
  auto at = [&](int x, int y) { return lab.at({x, y}); };
  const int N = n + 1;
  std::vector<std::string> right, bottom, left, top, diag;
  for (int i = 1; i <= n; ++i) {
    right.push_back(at(N, N - i));
    bottom.push_back(at(N - i, 0));
    left.push_back(at(0, i));
    top.push_back(at(i, N));
    diag.push_back(at(N - i, N - i));
  }
  P.set_side(0, 1, right);
  P.set_side(1, 2, bottom);
  P.set_side(2, 3, left);
  P.set_side(3, 0, top);
  P.add_diagonal(0, 2, diag);
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y) {
      if (x == y) continue;
      if (x > y)
        P.set_interior(0, 1, 2, y, x - y, N - x, at(x, y));
      else
        P.set_interior(0, 2, 3, x, N - y, y - x, at(x, y));
    }
  return P;
}

struct QuadSeed {
  int n = 0;
  Seed seed;
};

inline QuadSeed build_quadrilateral(int n) { return {n, quad_pattern(n).initial_seed()}; }

// Mutation layers for flipping the sub-square [lo,hi]^2 of the n-grid whose
// old diagonal lies on the main grid diagonal.  The full quadrilateral is
// the case lo = 0, hi = n+1.
inline FlipPlan subsquare_flip_plan(int n, int lo, int hi) {
  if (lo < 0 || hi > n + 1 || hi - lo < 2)
    throw std::invalid_argument("invalid sub-square");
  auto lab = quad_grid_labels(n);
  const int NP = hi - lo - 1;
  FlipPlan plan;
  for (int k = 1; k <= NP; ++k) {
    std::vector<std::string> layer;
    for (int x = 1; x <= NP; ++x)
      for (int y = 1; y <= NP; ++y) {
        if (std::abs(x - y) > k - 1) continue;
        if (std::abs(x - y) % 2 != (k - 1) % 2) continue;
        if (x + y < k + 1 || x + y > 2 * NP + 1 - k) continue;
        layer.push_back(lab.at({lo + x, lo + y}));
      }
    sort_by_var(layer);
    plan.push_back(std::move(layer));
  }
  return plan;
}

// Ids along the new diagonal of the flipped sub-square, listed from the
// bottom-right local corner (hi,lo); for the full quadrilateral this is the
// V2 V4 diagonal read from V2.
inline std::vector<std::string> subsquare_result_ids(int n, int lo, int hi) {
  auto lab = quad_grid_labels(n);
  const int NP = hi - lo - 1;
  std::vector<std::string> out;
  for (int i = 1; i <= NP; ++i) out.push_back(lab.at({lo + NP + 1 - i, lo + i}));
  return out;
}

inline FlipPlan flip_plan(int n) { return subsquare_flip_plan(n, 0, n + 1); }

// Flips the full quadrilateral and reads the variables along the new
// diagonal V2 V4 in order from V2.
inline std::vector<LaurentPoly> upsilon(int n) {
  Seed s = build_quadrilateral(n).seed.run_layers(flip_plan(n));
  std::vector<LaurentPoly> out;
  for (const auto& id : subsquare_result_ids(n, 0, n + 1)) out.push_back(s.value(id));
  return out;
}

}  // namespace cflip

#endif  // CLUSTERFLIP_SURFACE_HPP
