#ifndef CLUSTERFLIP_QUIVER_HPP
#define CLUSTERFLIP_QUIVER_HPP

#include <cstdint>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace cflip {

struct NonIntegerEntry : std::runtime_error {
  NonIntegerEntry() : std::runtime_error("exchange-matrix entry is not an integer") {}
};

struct FrozenVertex : std::runtime_error {
  explicit FrozenVertex(const std::string& id)
      : std::runtime_error("mutation at frozen vertex " + id) {}
};

struct GlueMutableVertex : std::runtime_error {
  explicit GlueMutableVertex(const std::string& id)
      : std::runtime_error("cannot glue mutable vertex " + id) {}
};

struct SymmetrizerMismatch : std::runtime_error {
  SymmetrizerMismatch() : std::runtime_error("glued vertices have different symmetrizers") {}
};

// Ice quiver with fractional arrow weights.  Weights are stored in units of
// one sixth of a full arrow (full = 6, half = 3, third = 2), as a signed
// matrix: w6(i,j) > 0 means an arrow i -> j of that weight, and
// w6(i,j) == -w6(j,i) always, so no 2-cycles can be represented.
// Symmetrizers d are stored the same way (d6 = 6 means d = 1, d6 = 2 means
// d = 1/3).  The exchange matrix is b_ij = w_ij/d_i, i.e. b6_ij =
// 6*w6_ij/d6_i in sixths-scaled form, which is always integral.
class Quiver {
 public:
  struct Vertex {
    std::string id;
    bool frozen = false;
    int d6 = 6;
  };

  int add_vertex(const std::string& id, bool frozen, int d6 = 6) {
    if (d6 != 6 && d6 != 2) throw std::invalid_argument("d6 must be 6 or 2");
    if (index_.count(id)) throw std::invalid_argument("duplicate vertex id " + id);
    int k = static_cast<int>(verts_.size());
    index_[id] = k;
    verts_.push_back({id, frozen, d6});
    for (auto& row : w6_) row.push_back(0);
    w6_.emplace_back(verts_.size(), 0);
    return k;
  }

  // Adds w6 (signed) to the arrow weight from `from` to `to`.
  void add_arrow(const std::string& from, const std::string& to, std::int64_t w6) {
    int i = at(from), j = at(to);
    if (i == j) throw std::invalid_argument("loop at vertex " + from);
    w6_[i][j] += w6;
    w6_[j][i] -= w6;
  }

  int size() const { return static_cast<int>(verts_.size()); }
  const Vertex& vertex(int i) const { return verts_[i]; }
  const std::vector<Vertex>& vertices() const { return verts_; }
  bool has(const std::string& id) const { return index_.count(id) != 0; }

  int at(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw std::invalid_argument("unknown vertex id " + id);
    return it->second;
  }

  // Signed weight of the arrow i -> j, in sixths.
  std::int64_t w6(int i, int j) const { return w6_[i][j]; }
  std::int64_t w6(const std::string& i, const std::string& j) const {
    return w6_[at(i)][at(j)];
  }

  // Exchange-matrix entry scaled by 6: b6_ij = 6 w6_ij / d6_i (always exact).
  std::int64_t b6(int i, int j) const { return 6 * w6_[i][j] / verts_[i].d6; }

  std::vector<std::vector<std::int64_t>> b6_matrix() const {
    int n = size();
    std::vector<std::vector<std::int64_t>> b(n, std::vector<std::int64_t>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) b[i][j] = b6(i, j);
    return b;
  }

  // Plain exchange matrix.  Entries incident to a mutable vertex are
  // guaranteed integral by the quiver invariants; a fractional entry there
  // raises NonIntegerEntry.  Fractional frozen-frozen entries (half arrows)
  // cannot be represented here either, so they raise too; callers that need
  // them exact should use b6_matrix().
  std::vector<std::vector<std::int64_t>> b_matrix() const {
    int n = size();
    std::vector<std::vector<std::int64_t>> b(n, std::vector<std::int64_t>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (w6_[i][j] % verts_[i].d6 != 0) throw NonIntegerEntry();
        b[i][j] = w6_[i][j] / verts_[i].d6;
      }
    return b;
  }

  // Exchange exponent b_ij for one pair; used by the exchange relation where
  // j is the mutated (mutable) vertex, so integrality is an invariant.
  std::int64_t b_entry(int i, int j) const {
    if (w6_[i][j] % verts_[i].d6 != 0) throw NonIntegerEntry();
    return w6_[i][j] / verts_[i].d6;
  }

  bool adjacent(int i, int j) const { return w6_[i][j] != 0; }

  // Quiver mutation at vertex k on the (weight, symmetrizer) data:
  //   w6'(i,j) = w6(i,j) + (|w6(i,k)| w6(k,j) + w6(i,k) |w6(k,j)|) / (2 d6_k)
  // for i,j != k, then all arrows through k reverse.  The signed storage
  // makes the usual 2-cycle cancellation automatic.
  Quiver mutate(const std::string& id) const { return mutate_at(at(id)); }

  Quiver mutate_at(int k) const {
    if (verts_[k].frozen) throw FrozenVertex(verts_[k].id);
    Quiver q = *this;
    int n = size();
    std::int64_t dk = verts_[k].d6;
    for (int i = 0; i < n; ++i) {
      if (i == k) continue;
      std::int64_t wik = w6_[i][k];
      if (wik == 0) continue;
      for (int j = 0; j < n; ++j) {
        if (j == k || j == i) continue;
        std::int64_t wkj = w6_[k][j];
        if (wkj == 0) continue;
        std::int64_t num = std::abs(wik) * wkj + wik * std::abs(wkj);
        if (num % (2 * dk) != 0) throw NonIntegerEntry();
        q.w6_[i][j] += num / (2 * dk);
      }
    }
    for (int i = 0; i < n; ++i) {
      if (i == k) continue;
      q.w6_[i][k] = -w6_[i][k];
      q.w6_[k][i] = -w6_[k][i];
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (q.w6_[i][j] != -q.w6_[j][i]) throw std::logic_error("mutation broke skew storage");
    return q;
  }

  // Glues pairs of frozen vertices of two quivers into single mutable
  // vertices; all other vertices and arrows are the disjoint union.  Arrow
  // weights between glued vertices add (two opposite half arrows cancel).
  // The glued vertex keeps the id from `a`.
  static Quiver amalgamate(const Quiver& a, const Quiver& b,
                           const std::vector<std::pair<std::string, std::string>>& glue) {
    std::map<std::string, std::string> b_to_a;
    std::set<std::string> glued_a;
    for (const auto& [ida, idb] : glue) {
      const Vertex& va = a.verts_[a.at(ida)];
      const Vertex& vb = b.verts_[b.at(idb)];
      if (!va.frozen) throw GlueMutableVertex(ida);
      if (!vb.frozen) throw GlueMutableVertex(idb);
      if (va.d6 != vb.d6) throw SymmetrizerMismatch();
      if (!glued_a.insert(ida).second || !b_to_a.emplace(idb, ida).second)
        throw std::invalid_argument("vertex glued twice: " + ida + "/" + idb);
    }
    Quiver q;
    for (const auto& v : a.verts_) q.add_vertex(v.id, v.frozen && !glued_a.count(v.id), v.d6);
    for (const auto& v : b.verts_)
      if (!b_to_a.count(v.id)) q.add_vertex(v.id, v.frozen, v.d6);
    for (int i = 0; i < a.size(); ++i)
      for (int j = i + 1; j < a.size(); ++j)
        if (a.w6_[i][j] != 0) q.add_arrow(a.verts_[i].id, a.verts_[j].id, a.w6_[i][j]);
    for (int i = 0; i < b.size(); ++i)
      for (int j = i + 1; j < b.size(); ++j)
        if (b.w6_[i][j] != 0)
          q.add_arrow(mapped(b_to_a, b.verts_[i].id), mapped(b_to_a, b.verts_[j].id),
                      b.w6_[i][j]);
    return q;
  }

  // Returns a copy with vertices renamed via the map (ids not present are
  // kept); useful after amalgamation to install the published labels.
  Quiver renamed(const std::map<std::string, std::string>& names) const {
    Quiver q = *this;
    q.index_.clear();
    for (int i = 0; i < q.size(); ++i) {
      auto it = names.find(q.verts_[i].id);
      if (it != names.end()) q.verts_[i].id = it->second;
      if (q.index_.count(q.verts_[i].id))
        throw std::invalid_argument("rename collision at " + q.verts_[i].id);
      q.index_[q.verts_[i].id] = i;
    }
    return q;
  }

  friend bool operator==(const Quiver& x, const Quiver& y) {
    if (x.size() != y.size()) return false;
    for (int i = 0; i < x.size(); ++i) {
      const Vertex &u = x.verts_[i], &v = y.verts_[i];
      if (u.id != v.id || u.frozen != v.frozen || u.d6 != v.d6) return false;
    }
    return x.w6_ == y.w6_;
  }

  // Invariant check: no loops (by construction), storage skew, symmetrizer
  // integrality on pairs with a mutable endpoint, D*B skew-symmetric.
  void check_invariants() const {
    for (int i = 0; i < size(); ++i) {
      if (w6_[i][i] != 0) throw std::logic_error("loop in quiver");
      for (int j = 0; j < size(); ++j) {
        if (w6_[i][j] != -w6_[j][i]) throw std::logic_error("storage not skew");
        if (!verts_[i].frozen || !verts_[j].frozen) {
          if (w6_[i][j] % verts_[i].d6 != 0) throw NonIntegerEntry();
        }
        // d_i b_ij + d_j b_ji = w_ij + (-w_ij) = 0; in sixths both sides are
        // w6 values, so skew storage already certifies D*B skew-symmetry.
      }
    }
  }

 private:
  static const std::string& mapped(const std::map<std::string, std::string>& m,
                                   const std::string& k) {
    auto it = m.find(k);
    return it == m.end() ? k : it->second;
  }

  std::vector<Vertex> verts_;
  std::map<std::string, int> index_;
  std::vector<std::vector<std::int64_t>> w6_;
};

}  // namespace cflip

#endif
