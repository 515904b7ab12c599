#ifndef CLUSTERFLIP_SEED_HPP
#define CLUSTERFLIP_SEED_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "clusterflip/laurent.hpp"
#include "clusterflip/quiver.hpp"

namespace cflip {

struct NonCommutingLayer : std::runtime_error {
  NonCommutingLayer(const std::string& a, const std::string& b)
      : std::runtime_error("layer vertices " + a + " and " + b + " are adjacent") {}
};

// A flip expressed as mutation layers: vertices within one layer are
// pairwise non-adjacent, so their mutations commute.
using FlipPlan = std::vector<std::vector<std::string>>;

// Seed: a quiver together with one cluster variable per vertex, plus a
// per-vertex counter of how many times each vertex has been mutated (the
// superscript in x_i^{(j)}).
class Seed {
 public:
  Seed() = default;
  explicit Seed(Quiver q) : quiver_(std::move(q)) {
    for (const auto& v : quiver_.vertices()) {
      vars_[v.id] = LaurentPoly::var(VarId::parse(v.id));
      count_[v.id] = 0;
    }
  }

  Seed(Quiver q, std::map<std::string, LaurentPoly> vars)
      : quiver_(std::move(q)), vars_(std::move(vars)) {
    for (const auto& v : quiver_.vertices()) {
      if (!vars_.count(v.id))
        throw std::invalid_argument("seed has no value for vertex " + v.id);
      count_[v.id] = 0;
    }
  }

  const Quiver& quiver() const { return quiver_; }
  const std::map<std::string, LaurentPoly>& vars() const { return vars_; }
  const LaurentPoly& value(const std::string& id) const { return vars_.at(id); }
  int mutation_count(const std::string& id) const { return count_.at(id); }

  void set_value(const std::string& id, LaurentPoly v) {
    quiver_.at(id);
    vars_.at(id) = std::move(v);
  }

  // Exchange relation at mutable k:
  //   x_k x'_k = prod_{b_ik > 0} x_i^{b_ik} + prod_{b_ik < 0} x_i^{-b_ik},
  // empty products read as 1.  The division is exact for every seed reached
  // from an initial seed (Laurent phenomenon); failure raises NotDivisible.
  Seed exchange(const std::string& id) const {
    int k = quiver_.at(id);
    if (quiver_.vertex(k).frozen) throw FrozenVertex(id);
    LaurentPoly plus(1), minus(1);
    for (int i = 0; i < quiver_.size(); ++i) {
      std::int64_t e = quiver_.b_entry(i, k);
      if (e == 0) continue;
      const LaurentPoly& xi = vars_.at(quiver_.vertex(i).id);
      if (e > 0) plus = plus * xi.pow(static_cast<std::int32_t>(e));
      else minus = minus * xi.pow(static_cast<std::int32_t>(-e));
    }
    Seed s = *this;
    s.vars_[id] = div_exact(plus + minus, vars_.at(id));
    s.quiver_ = quiver_.mutate_at(k);
    s.count_[id] += 1;
    return s;
  }

  Seed run_sequence(const std::vector<std::string>& seq) const {
    Seed s = *this;
    for (const auto& id : seq) s = s.exchange(id);
    return s;
  }

  // Runs the layers in order; within a layer the given order is used, after
  // checking that the layer's vertices are pairwise non-adjacent in the
  // quiver as it stands at the start of the layer.
  Seed run_layers(const FlipPlan& layers) const {
    Seed s = *this;
    for (const auto& layer : layers) {
      for (std::size_t i = 0; i < layer.size(); ++i)
        for (std::size_t j = i + 1; j < layer.size(); ++j)
          if (s.quiver_.adjacent(s.quiver_.at(layer[i]), s.quiver_.at(layer[j])))
            throw NonCommutingLayer(layer[i], layer[j]);
      for (const auto& id : layer) s = s.exchange(id);
    }
    return s;
  }

  friend bool operator==(const Seed& a, const Seed& b) {
    return a.quiver_ == b.quiver_ && a.vars_ == b.vars_;
  }

 private:
  Quiver quiver_;
  std::map<std::string, LaurentPoly> vars_;
  std::map<std::string, int> count_;
};

}  // namespace cflip

#endif
