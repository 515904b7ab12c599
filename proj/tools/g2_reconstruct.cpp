// Recovers the vertex labeling of the glued two-triangle quadrilateral from
// the recorded flip-sequence outputs.  The triangle quivers and the gluing
// rule are fixed; what is unknown is which glued vertex carries which of the
// published names x1..x10 / y1..y8 for each of the two flip sequences.  The
// search enumerates every class-compatible gluing of two triangles along
// one side each, then every root-class-respecting assignment of the mutable
// names, runs the flip sequence on evaluations of the seed in a 64-bit prime
// field, and keeps the assignments whose per-vertex results match the
// recorded specializations.  Survivors are re-run symbolically and matched
// against the recorded diagonal expansions to pin the frozen names as well.
//
// Modular evaluation is what keeps wrong assignments cheap: their values
// stop being Laurent polynomial evaluations, so over the rationals they
// grow without bound, while mod p every step stays constant time.  A zero
// divisor mod p counts as a pass; the symbolic replay settles those.
//
// Usage: g2_reconstruct <golden-dir>

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "clusterflip/laurent.hpp"
#include "clusterflip/quiver.hpp"
#include "clusterflip/seed.hpp"

using namespace cflip;

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kP = 0xFFFFFFFFFFFFFFC5ull;  // 2^64 - 59, prime

u64 mulmod(u64 a, u64 b) { return static_cast<u64>(static_cast<u128>(a) * b % kP); }
u64 addmod(u64 a, u64 b) {
  u64 s = a + b;
  if (s < a || s >= kP) s -= kP;
  return s;
}
u64 powmod(u64 a, u64 e) {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1;
  }
  return r;
}
u64 invmod(u64 a) { return powmod(a, kP - 2); }

struct Arrow {
  const char* from;
  const char* to;
  int w6;
};

struct TrianglePattern {
  const char* name;
  std::vector<Arrow> arrows;
  // Sides in counterclockwise order: bottom, right, left; each lists its two
  // vertices in traversal order.
  std::array<std::array<const char*, 2>, 3> sides;
};

const TrianglePattern& pattern_21() {
  static const TrianglePattern p{
      "21",
      {
          {"L1", "S1", 3},
          {"L4", "S4", 3},
          {"S5", "L5", 3},
          {"L1", "L2", 6},
          {"L2", "L3", 6},
          {"L3", "L4", 6},
          {"L4", "L5", 6},
          {"L5", "L3", 6},
          {"S4", "L3", 6},
          {"L3", "S3", 6},
          {"S3", "L2", 6},
          {"L2", "S2", 6},
          {"S2", "L1", 6},
          {"S2", "S5", 2},
          {"S5", "S1", 2},
          {"S1", "S2", 2},
          {"S2", "S3", 2},
          {"S3", "S4", 2},
      },
      {{{"L1", "S1"}, {"S4", "L4"}, {"L5", "S5"}}},
  };
  return p;
}

const TrianglePattern& pattern_12() {
  static const TrianglePattern p{
      "12",
      {
          {"S1", "L1", 3},
          {"S4", "L4", 3},
          {"L5", "S5", 3},
          {"L2", "L5", 6},
          {"L5", "L1", 6},
          {"L1", "L2", 6},
          {"L2", "L3", 6},
          {"L3", "L4", 6},
          {"L4", "S3", 6},
          {"S3", "L3", 6},
          {"L3", "S2", 6},
          {"S2", "L2", 6},
          {"L2", "S1", 6},
          {"S1", "S2", 2},
          {"S2", "S3", 2},
          {"S3", "S4", 2},
          {"S4", "S5", 2},
          {"S5", "S3", 2},
      },
      {{{"S4", "L4"}, {"S5", "L5"}, {"L1", "S1"}}},
  };
  return p;
}

bool is_long(const std::string& id) { return id.find('L') != std::string::npos; }

Quiver build_triangle(const TrianglePattern& p, const std::string& prefix) {
  Quiver q;
  static const char* interior[] = {"L2", "L3", "S2", "S3"};
  static const char* boundary[] = {"L1", "S1", "L4", "S4", "L5", "S5"};
  for (const char* id : interior) q.add_vertex(prefix + id, false, id[0] == 'L' ? 6 : 2);
  for (const char* id : boundary) q.add_vertex(prefix + id, true, id[0] == 'L' ? 6 : 2);
  for (const Arrow& a : p.arrows) q.add_arrow(prefix + a.from, prefix + a.to, a.w6);
  return q;
}

struct Shape {
  int lf, ls, rf, rs;
  Quiver quad;
  std::string describe() const {
    static const char* side[] = {"bottom", "right", "left"};
    std::ostringstream os;
    os << "left=" << (lf == 0 ? "21" : "12") << "." << side[ls]
       << " right=" << (rf == 0 ? "21" : "12") << "." << side[rs];
    return os.str();
  }
};

std::vector<Shape> enumerate_shapes() {
  std::vector<Shape> out;
  const TrianglePattern* pats[2] = {&pattern_21(), &pattern_12()};
  for (int lf = 0; lf < 2; ++lf)
    for (int ls = 0; ls < 3; ++ls)
      for (int rf = 0; rf < 2; ++rf)
        for (int rs = 0; rs < 3; ++rs) {
          auto [p1, p2] = pats[lf]->sides[ls];
          auto [q1, q2] = pats[rf]->sides[rs];
          // The shared side is traversed in opposite directions by the two
          // triangles, so the first vertex of one glues to the second of the
          // other; gluing needs equal symmetrizers.
          if ((p1[0] == 'L') != (q2[0] == 'L')) continue;
          if ((p2[0] == 'L') != (q1[0] == 'L')) continue;
          Quiver a = build_triangle(*pats[lf], "a.");
          Quiver b = build_triangle(*pats[rf], "b.");
          Quiver quad = Quiver::amalgamate(
              a, b,
              {{"a." + std::string(p1), "b." + std::string(q2)},
               {"a." + std::string(p2), "b." + std::string(q1)}});
          quad.check_invariants();
          out.push_back({lf, ls, rf, rs, std::move(quad)});
        }
  return out;
}

// Compact copy of a quad for the inner search loop.
struct Pod {
  int n = 0;
  std::vector<std::string> ids;
  std::vector<int> d6;
  std::vector<char> frozen;
  std::vector<std::int64_t> w;  // row-major n*n
  std::vector<int> long_mut, short_mut;
  std::int64_t& at(std::vector<std::int64_t>& m, int i, int j) const { return m[i * n + j]; }
};

Pod extract(const Quiver& q) {
  Pod p;
  p.n = q.size();
  p.w.assign(p.n * p.n, 0);
  for (int i = 0; i < p.n; ++i) {
    const auto& v = q.vertex(i);
    p.ids.push_back(v.id);
    p.d6.push_back(v.d6);
    p.frozen.push_back(v.frozen ? 1 : 0);
    for (int j = 0; j < p.n; ++j) p.w[i * p.n + j] = q.w6(i, j);
    if (!v.frozen) (v.d6 == 6 ? p.long_mut : p.short_mut).push_back(i);
  }
  return p;
}

void mutate(std::vector<std::int64_t>& w, const Pod& p, int k) {
  std::int64_t dk = p.d6[k];
  int n = p.n;
  for (int i = 0; i < n; ++i) {
    if (i == k) continue;
    std::int64_t wik = w[i * n + k];
    if (wik == 0) continue;
    for (int j = 0; j < n; ++j) {
      if (j == k || j == i) continue;
      std::int64_t wkj = w[k * n + j];
      if (wkj == 0) continue;
      std::int64_t num = std::abs(wik) * wkj + wik * std::abs(wkj);
      w[i * n + j] += num / (2 * dk);
    }
  }
  for (int i = 0; i < n; ++i) {
    if (i == k) continue;
    w[i * n + k] = -w[i * n + k];
    w[k * n + i] = -w[k * n + i];
  }
}

// Exchange at k in the prime field; false means a zero divisor came up and
// the run cannot tell anything (callers treat that as a pass).
bool exchange(const std::vector<std::int64_t>& w, const Pod& p, std::vector<u64>& val,
              int k) {
  u64 plus = 1, minus = 1;
  int n = p.n;
  for (int i = 0; i < n; ++i) {
    std::int64_t e = w[i * n + k] / p.d6[i];
    if (e > 0) plus = mulmod(plus, powmod(val[i], static_cast<u64>(e)));
    else if (e < 0) minus = mulmod(minus, powmod(val[i], static_cast<u64>(-e)));
  }
  if (val[k] == 0) return false;
  val[k] = mulmod(addmod(plus, minus), invmod(val[k]));
  return true;
}

u64 eval_xy(const LaurentPoly& p, u64 x0, u64 y0) {
  u64 ix = invmod(x0), iy = invmod(y0);
  u64 s = 0;
  for (const auto& [m, c] : p.terms()) {
    mpz_class r = c % kP;
    if (r < 0) r += kP;
    u64 t = r.get_ui();
    for (const auto& [v, e] : m.entries()) {
      u64 base = v.text() == "x" ? (e >= 0 ? x0 : ix) : (e >= 0 ? y0 : iy);
      t = mulmod(t, powmod(base, static_cast<u64>(e >= 0 ? e : -e)));
    }
    s = addmod(s, t);
  }
  return s;
}

std::map<std::pair<std::string, int>, LaurentPoly> read_golden(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::map<std::pair<std::string, int>, LaurentPoly> m;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto eq = line.find(" = ");
    std::string nm = line.substr(0, eq);
    int primes = 0;
    while (!nm.empty() && nm.back() == '\'') {
      nm.pop_back();
      ++primes;
    }
    m[{nm, primes}] = LaurentPoly::parse(line.substr(eq + 3));
  }
  return m;
}

struct SequenceData {
  std::vector<int> steps;      // label indices, 1-based
  std::array<int, 11> last{};  // last step (1-based) touching label i
  std::array<int, 11> count{};
};

SequenceData make_sequence(const std::vector<int>& steps) {
  SequenceData s;
  s.steps = steps;
  s.last.fill(0);
  s.count.fill(0);
  for (std::size_t i = 0; i < steps.size(); ++i) {
    s.last[steps[i]] = static_cast<int>(i) + 1;
    s.count[steps[i]] += 1;
  }
  return s;
}

const std::vector<int> kMu1 = {1, 7, 8, 9, 7, 2, 9, 7, 2, 8, 7, 10, 6, 7, 8, 2, 7, 5,
                               2, 7, 5, 8, 7, 9, 3, 7, 8, 5, 7, 4, 5, 7, 4, 8, 7, 2};
const std::vector<int> kMu2 = {1, 2, 7, 8, 10, 7, 9, 10, 7, 9, 8, 7, 6, 5, 7, 8, 9, 7,
                               2, 9, 7, 2, 8, 7, 3, 4, 7, 8, 2, 7, 5, 2, 7, 5, 8, 7};

const std::array<int, 5> kLongLabels = {1, 3, 6, 7, 8};
const std::array<int, 5> kShortLabels = {2, 4, 5, 9, 10};

struct Candidate {
  int shape;
  std::array<int, 11> vertex_of{};  // label -> pod vertex index
};

// Runs one labeled flip sequence with early exit at each label's final
// mutation; `skip` labels are not checked (their recorded values are under
// suspicion and get compared symbolically later).
bool run_checked(const Pod& p, const SequenceData& seq,
                 const std::array<int, 11>& vertex_of, const std::array<u64, 11>& expected,
                 const std::set<int>& skip, u64 x0, u64 y0,
                 std::vector<std::int64_t>& w, std::vector<u64>& val) {
  w = p.w;
  val.assign(p.n, 0);
  for (int i = 0; i < p.n; ++i) val[i] = p.frozen[i] ? y0 : x0;
  for (std::size_t s = 0; s < seq.steps.size(); ++s) {
    int label = seq.steps[s];
    int k = vertex_of[label];
    if (!exchange(w, p, val, k)) return true;
    mutate(w, p, k);
    if (static_cast<int>(s) + 1 == seq.last[label] && !skip.count(label)) {
      if (val[k] != expected[label]) return false;
    }
  }
  return true;
}

std::vector<Candidate> search(const std::vector<Shape>& shapes, const std::vector<Pod>& pods,
                              const SequenceData& seq,
                              const std::map<std::pair<std::string, int>, LaurentPoly>& spec,
                              const std::set<int>& skip) {
  const u64 x0 = 0x9E3779B97F4A7C15ull % kP, y0 = 0xC2B2AE3D27D4EB4Full % kP;
  std::array<u64, 11> expected{};
  for (int l = 1; l <= 10; ++l) {
    auto it = spec.find({"x" + std::to_string(l), seq.count[l]});
    if (it == spec.end())
      throw std::runtime_error("missing recorded value for x" + std::to_string(l));
    expected[l] = eval_xy(it->second, x0, y0);
  }
  std::vector<Candidate> out;
  std::vector<std::int64_t> w;
  std::vector<u64> val;
  long runs = 0;
  for (std::size_t si = 0; si < pods.size(); ++si) {
    const Pod& p = pods[si];
    // The first step mutates the label-1 vertex exactly once, so its final
    // value only depends on that vertex; prefilter the choices.
    std::set<int> first_ok;
    for (int v : p.long_mut) {
      w = p.w;
      val.assign(p.n, 0);
      for (int i = 0; i < p.n; ++i) val[i] = p.frozen[i] ? y0 : x0;
      if (!exchange(w, p, val, v) || val[v] == expected[1]) first_ok.insert(v);
    }
    if (first_ok.empty()) continue;
    std::array<int, 11> vertex_of{};
    std::vector<int> lidx = {0, 1, 2, 3, 4};
    do {
      for (int i = 0; i < 5; ++i) vertex_of[kLongLabels[i]] = p.long_mut[lidx[i]];
      if (!first_ok.count(vertex_of[1])) continue;
      std::vector<int> sidx = {0, 1, 2, 3, 4};
      do {
        for (int i = 0; i < 5; ++i) vertex_of[kShortLabels[i]] = p.short_mut[sidx[i]];
        if (run_checked(p, seq, vertex_of, expected, skip, x0, y0, w, val))
          out.push_back({static_cast<int>(si), vertex_of});
      } while (std::next_permutation(sidx.begin(), sidx.end()));
    } while (std::next_permutation(lidx.begin(), lidx.end()));
  }
  return out;
}

// Relabels the quad so the search's assignment shows up as x1..x10 and the
// frozen vertices as y1..y8 in structural order, then replays the sequence
// symbolically.
struct SymbolicRun {
  Quiver quad;
  std::vector<std::string> frozen_ids;  // structural names behind y1..y8
  std::map<std::string, LaurentPoly> finals;
};

SymbolicRun replay(const Shape& shape, const Pod& pod, const Candidate& c,
                   const SequenceData& seq) {
  std::map<std::string, std::string> names;
  for (int l = 1; l <= 10; ++l) names[pod.ids[c.vertex_of[l]]] = "x" + std::to_string(l);
  SymbolicRun r;
  for (int i = 0; i < pod.n; ++i)
    if (pod.frozen[i]) r.frozen_ids.push_back(pod.ids[i]);
  std::sort(r.frozen_ids.begin(), r.frozen_ids.end());
  for (std::size_t i = 0; i < r.frozen_ids.size(); ++i)
    names[r.frozen_ids[i]] = "y" + std::to_string(i + 1);
  r.quad = shape.quad.renamed(names);
  Seed s(r.quad);
  for (int label : seq.steps) s = s.exchange("x" + std::to_string(label));
  for (const auto& [id, v] : s.vars()) r.finals[id] = v;
  return r;
}

std::string term_str(const LaurentPoly::Term& t) {
  return LaurentPoly(t.first, t.second).to_string();
}

// Multiset difference between two polynomials, reported as (only-in-a,
// only-in-b) term lists.
std::pair<std::vector<std::string>, std::vector<std::string>> poly_diff(
    const LaurentPoly& a, const LaurentPoly& b) {
  std::map<Monomial, mpz_class> d;
  for (const auto& [m, c] : a.terms()) d[m] += c;
  for (const auto& [m, c] : b.terms()) d[m] -= c;
  std::vector<std::string> only_a, only_b;
  for (const auto& [m, c] : d) {
    if (c > 0) only_a.push_back(term_str({m, c}));
    if (c < 0) only_b.push_back(term_str({m, -c}));
  }
  return {only_a, only_b};
}

struct YMatch {
  std::array<int, 9> to_printed{};  // our y index -> printed y index
  int diff_terms = 0;
  std::vector<std::string> engine_only, recorded_only;
};

// Finds the frozen-name bijection (respecting root classes) that makes the
// symbolic finals match the recorded diagonal expansions, allowing a small
// term diff to surface misprints in the record.
std::optional<YMatch> match_frozen(
    const SymbolicRun& run, const std::map<std::pair<std::string, int>, LaurentPoly>& diag,
    const std::set<int>& printed_long_y) {
  std::vector<int> our_long, our_short;
  for (std::size_t i = 0; i < run.frozen_ids.size(); ++i)
    (is_long(run.frozen_ids[i]) ? our_long : our_short).push_back(static_cast<int>(i) + 1);
  std::vector<int> printed_long, printed_short;
  for (int j = 1; j <= 8; ++j)
    (printed_long_y.count(j) ? printed_long : printed_short).push_back(j);
  if (our_long.size() != printed_long.size()) return std::nullopt;

  std::optional<YMatch> best;
  std::vector<int> lp = printed_long;
  std::sort(lp.begin(), lp.end());
  do {
    std::vector<int> sp = printed_short;
    std::sort(sp.begin(), sp.end());
    do {
      std::map<VarId, LaurentPoly> img;
      YMatch m;
      for (std::size_t i = 0; i < our_long.size(); ++i) {
        img[VarId::parse("y" + std::to_string(our_long[i]))] =
            LaurentPoly::var(VarId::parse("y" + std::to_string(lp[i])));
        m.to_printed[our_long[i]] = lp[i];
      }
      for (std::size_t i = 0; i < our_short.size(); ++i) {
        img[VarId::parse("y" + std::to_string(our_short[i]))] =
            LaurentPoly::var(VarId::parse("y" + std::to_string(sp[i])));
        m.to_printed[our_short[i]] = sp[i];
      }
      bool feasible = true;
      for (const auto& [key, golden] : diag) {
        LaurentPoly ours = run.finals.at(key.first).substitute(img);
        auto [eo, ro] = poly_diff(ours, golden);
        m.diff_terms += static_cast<int>(eo.size() + ro.size());
        for (auto& t : eo) m.engine_only.push_back(key.first + ": " + t);
        for (auto& t : ro) m.recorded_only.push_back(key.first + ": " + t);
        if (m.diff_terms > 8) {
          feasible = false;
          break;
        }
      }
      if (feasible && (!best || m.diff_terms < best->diff_terms)) best = m;
    } while (std::next_permutation(sp.begin(), sp.end()));
  } while (std::next_permutation(lp.begin(), lp.end()));
  return best;
}

void report(const char* tag, const std::vector<Shape>& shapes, const std::vector<Pod>& pods,
            const std::vector<Candidate>& cands, const SequenceData& seq,
            const std::map<std::pair<std::string, int>, LaurentPoly>& diag,
            const std::set<int>& printed_long_y,
            const std::map<std::pair<std::string, int>, LaurentPoly>& spec) {
  std::cout << "== " << tag << ": " << cands.size() << " spec-matching labeling(s)\n";
  for (const Candidate& c : cands) {
    const Shape& sh = shapes[c.shape];
    const Pod& pod = pods[c.shape];
    std::cout << "shape " << c.shape << " [" << sh.describe() << "]\n  mutable:";
    for (int l = 1; l <= 10; ++l) std::cout << " x" << l << "=" << pod.ids[c.vertex_of[l]];
    std::cout << "\n";
    SymbolicRun run = replay(sh, pod, c, seq);
    auto m = match_frozen(run, diag, printed_long_y);
    if (!m) {
      std::cout << "  no frozen-name bijection within diff budget\n";
      continue;
    }
    std::cout << "  frozen:";
    for (std::size_t i = 0; i < run.frozen_ids.size(); ++i)
      std::cout << " y" << m->to_printed[i + 1] << "=" << run.frozen_ids[i];
    std::cout << "\n  diagonal diff terms: " << m->diff_terms << "\n";
    for (const auto& t : m->engine_only) std::cout << "    engine only:   " << t << "\n";
    for (const auto& t : m->recorded_only) std::cout << "    recorded only: " << t << "\n";
    // Specialize every final value and diff it against the recorded table,
    // to double-check the skipped labels and surface misprinted bands.
    std::map<VarId, LaurentPoly> allxy;
    for (int l = 1; l <= 10; ++l)
      allxy[VarId::parse("x" + std::to_string(l))] = LaurentPoly::var(VarId::sym('x'));
    for (int j = 1; j <= 8; ++j)
      allxy[VarId::parse("y" + std::to_string(j))] = LaurentPoly::var(VarId::sym('y'));
    for (int l = 1; l <= 10; ++l) {
      std::string id = "x" + std::to_string(l);
      LaurentPoly ours = run.finals.at(id).substitute(allxy);
      auto it = spec.find({id, seq.count[l]});
      if (it == spec.end()) continue;
      auto [eo, ro] = poly_diff(ours, it->second);
      if (eo.empty() && ro.empty()) continue;
      std::cout << "  specialized diff at " << id << ":\n";
      for (const auto& t : eo) std::cout << "    engine only:   " << t << "\n";
      for (const auto& t : ro) std::cout << "    recorded only: " << t << "\n";
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: g2_reconstruct <golden-dir>\n";
    return 2;
  }
  std::string dir = argv[1];
  std::vector<Shape> shapes = enumerate_shapes();
  std::vector<Pod> pods;
  for (const Shape& s : shapes) pods.push_back(extract(s.quad));
  std::cerr << shapes.size() << " class-compatible gluings\n";

  SequenceData mu1 = make_sequence(kMu1), mu2 = make_sequence(kMu2);
  auto spec1 = read_golden(dir + "/g2_mu1_spec.txt");
  auto diag1 = read_golden(dir + "/g2_mu1_diag.txt");
  auto spec2 = read_golden(dir + "/g2_mu2_spec.txt");
  auto diag2 = read_golden(dir + "/g2_mu2_diag.txt");

  std::cerr << "searching first sequence...\n";
  auto c1 = search(shapes, pods, mu1, spec1, {});
  report("mu1", shapes, pods, c1, mu1, diag1, {2, 3, 5, 8}, spec1);

  std::cerr << "searching second sequence...\n";
  auto c2 = search(shapes, pods, mu2, spec2, {7});
  report("mu2", shapes, pods, c2, mu2, diag2, {2, 3, 5, 7}, spec2);
  return 0;
}
