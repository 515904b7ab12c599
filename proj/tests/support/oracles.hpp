#ifndef CLUSTERFLIP_TESTS_SUPPORT_ORACLES_HPP
#define CLUSTERFLIP_TESTS_SUPPORT_ORACLES_HPP

#include <cstdint>
#include <cstdlib>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "clusterflip/laurent.hpp"
#include "clusterflip/quiver.hpp"

namespace cflip::testing {

using Mat = std::vector<std::vector<std::int64_t>>;

// Independent mutation oracle on the 6-scaled exchange matrix:
//   b6'(i,j) = -b6(i,j)                                  if k in {i,j}
//   b6'(i,j) = b6(i,j) + (|b6(i,k)| b6(k,j) + b6(i,k) |b6(k,j)|) / 12
// (the /12 restores the 6-scaling of the product of two scaled entries).
inline Mat mutate_b6_oracle(const Mat& b, int k) {
  int n = static_cast<int>(b.size());
  Mat r = b;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == k || j == k) {
        r[i][j] = -b[i][j];
      } else {
        std::int64_t num = std::abs(b[i][k]) * b[k][j] + b[i][k] * std::abs(b[k][j]);
        if (num % 12 != 0) throw std::logic_error("oracle: non-integral step");
        r[i][j] = b[i][j] + num / 12;
      }
    }
  return r;
}

// Labelled quiver equality that ignores vertex insertion order.
inline bool quivers_equal_unordered(const Quiver& a, const Quiver& b) {
  if (a.size() != b.size()) return false;
  for (const auto& v : a.vertices()) {
    if (!b.has(v.id)) return false;
    const auto& w = b.vertex(b.at(v.id));
    if (v.frozen != w.frozen || v.d6 != w.d6) return false;
  }
  for (const auto& u : a.vertices())
    for (const auto& v : a.vertices())
      if (a.w6(u.id, v.id) != b.w6(u.id, v.id)) return false;
  return true;
}

// Like quivers_equal_unordered, but only compares arrows with at least one
// mutable endpoint.  Mutation composes arrows between frozen vertices that a
// triangulation quiver does not track, so the frozen-frozen part is excluded
// when checking a mutated quiver against a rebuilt one.
inline bool quivers_equal_mutable_part(const Quiver& a, const Quiver& b) {
  if (a.size() != b.size()) return false;
  for (const auto& v : a.vertices()) {
    if (!b.has(v.id)) return false;
    const auto& w = b.vertex(b.at(v.id));
    if (v.frozen != w.frozen || v.d6 != w.d6) return false;
  }
  for (const auto& u : a.vertices())
    for (const auto& v : a.vertices()) {
      if (u.frozen && v.frozen) continue;
      if (a.w6(u.id, v.id) != b.w6(u.id, v.id)) return false;
    }
  return true;
}

// Random ice quiver; every weight is a multiple of 6, so mutation stays
// integral for both plain and d6 = 2 vertices.
inline Quiver random_quiver(std::mt19937& rng, int size, bool weighted) {
  Quiver q;
  std::uniform_int_distribution<int> coin(0, 3), w(-2, 2);
  for (int i = 0; i < size; ++i) {
    bool frozen = i != 0 && coin(rng) == 0;
    int d6 = weighted && coin(rng) == 0 ? 2 : 6;
    q.add_vertex("v" + std::to_string(i), frozen, d6);
  }
  for (int i = 0; i < size; ++i)
    for (int j = i + 1; j < size; ++j) {
      std::int64_t wij = 6 * w(rng);
      if (wij != 0) q.add_arrow("v" + std::to_string(i), "v" + std::to_string(j), wij);
    }
  return q;
}

inline std::vector<int> mutable_indices(const Quiver& q) {
  std::vector<int> out;
  for (int i = 0; i < q.size(); ++i)
    if (!q.vertex(i).frozen) out.push_back(i);
  return out;
}

// Sends every variable of p to the single symbol x.
inline LaurentPoly specialize_all_x(const LaurentPoly& p) {
  std::map<VarId, LaurentPoly> img;
  for (const auto& [m, c] : p.terms())
    for (const auto& [v, e] : m.entries())
      img.emplace(v, LaurentPoly::var(VarId::sym('x')));
  return p.substitute(img);
}

inline std::int64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace cflip::testing

#endif  // CLUSTERFLIP_TESTS_SUPPORT_ORACLES_HPP
