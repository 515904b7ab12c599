#ifndef CLUSTERFLIP_LAURENT_HPP
#define CLUSTERFLIP_LAURENT_HPP

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "clusterflip/varid.hpp"

namespace cflip {

struct NotDivisible : std::runtime_error {
  NotDivisible() : std::runtime_error("laurent division is not exact") {}
};

struct ZeroToNegativePower : std::runtime_error {
  ZeroToNegativePower() : std::runtime_error("zero raised to a negative power") {}
};

// Product of variable powers with integer (possibly negative) exponents.
// Entries are sorted by VarId and exponents are never zero.
class Monomial {
 public:
  using Entry = std::pair<VarId, std::int32_t>;

  Monomial() = default;
  explicit Monomial(std::vector<Entry> entries) : e_(std::move(entries)) {
    std::sort(e_.begin(), e_.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    std::size_t w = 0;
    for (std::size_t r = 0; r < e_.size(); ++r) {
      if (w > 0 && e_[w - 1].first == e_[r].first) e_[w - 1].second += e_[r].second;
      else e_[w++] = e_[r];
    }
    e_.resize(w);
    std::erase_if(e_, [](const Entry& a) { return a.second == 0; });
  }

  static Monomial var(VarId v, std::int32_t exp = 1) {
    Monomial m;
    if (exp != 0) m.e_.push_back({v, exp});
    return m;
  }

  const std::vector<Entry>& entries() const { return e_; }
  bool is_one() const { return e_.empty(); }

  std::int32_t exponent(VarId v) const {
    auto it = std::lower_bound(
        e_.begin(), e_.end(), v,
        [](const Entry& a, const VarId& b) { return a.first < b; });
    return (it != e_.end() && it->first == v) ? it->second : 0;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.e_.reserve(a.e_.size() + b.e_.size());
    std::size_t i = 0, j = 0;
    while (i < a.e_.size() || j < b.e_.size()) {
      if (j == b.e_.size() || (i < a.e_.size() && a.e_[i].first < b.e_[j].first)) {
        r.e_.push_back(a.e_[i++]);
      } else if (i == a.e_.size() || b.e_[j].first < a.e_[i].first) {
        r.e_.push_back(b.e_[j++]);
      } else {
        std::int32_t s = a.e_[i].second + b.e_[j].second;
        if (s != 0) r.e_.push_back({a.e_[i].first, s});
        ++i, ++j;
      }
    }
    return r;
  }

  Monomial inverse() const {
    Monomial r = *this;
    for (auto& [v, x] : r.e_) x = -x;
    return r;
  }

  Monomial pow(std::int32_t k) const {
    Monomial r = *this;
    if (k == 0) return Monomial();
    for (auto& [v, x] : r.e_) x *= k;
    return r;
  }

  // a / b, defined for every pair since all variables are invertible.
  friend Monomial operator/(const Monomial& a, const Monomial& b) { return a * b.inverse(); }

  // Lexicographic comparison of exponent vectors over the VarId order, with
  // absent variables read as exponent 0.  Compatible with multiplication,
  // which is what exact division relies on.
  static int compare(const Monomial& a, const Monomial& b) {
    std::size_t i = 0, j = 0;
    while (i < a.e_.size() || j < b.e_.size()) {
      std::int64_t ea, eb;
      if (j == b.e_.size() || (i < a.e_.size() && a.e_[i].first < b.e_[j].first)) {
        ea = a.e_[i].second, eb = 0;
        ++i;
      } else if (i == a.e_.size() || b.e_[j].first < a.e_[i].first) {
        ea = 0, eb = b.e_[j].second;
        ++j;
      } else {
        ea = a.e_[i].second, eb = b.e_[j].second;
        ++i, ++j;
      }
      if (ea != eb) return ea < eb ? -1 : 1;
    }
    return 0;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
  friend bool operator<(const Monomial& a, const Monomial& b) { return compare(a, b) < 0; }

  // True when every exponent is nonnegative (an honest polynomial monomial).
  bool is_polynomial() const {
    return std::all_of(e_.begin(), e_.end(), [](const Entry& a) { return a.second >= 0; });
  }

 private:
  std::vector<Entry> e_;
};

// Laurent polynomial with arbitrary-precision integer coefficients.  Terms
// are kept sorted with the leading (largest) monomial first; coefficients are
// never zero.
class LaurentPoly {
 public:
  using Term = std::pair<Monomial, mpz_class>;

  LaurentPoly() = default;
  LaurentPoly(long c) { if (c != 0) t_.push_back({Monomial(), mpz_class(c)}); }
  LaurentPoly(const mpz_class& c) { if (c != 0) t_.push_back({Monomial(), c}); }
  explicit LaurentPoly(const Monomial& m, mpz_class c = 1) {
    if (c != 0) t_.push_back({m, std::move(c)});
  }

  static LaurentPoly var(VarId v, std::int32_t exp = 1) {
    return LaurentPoly(Monomial::var(v, exp));
  }

  const std::vector<Term>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t num_terms() const { return t_.size(); }

  // Value at the all-ones point; equals the number of monomials counted with
  // multiplicity when all coefficients are positive.
  mpz_class sum_coeffs() const {
    mpz_class s = 0;
    for (const auto& [m, c] : t_) s += c;
    return s;
  }

  bool is_monomial() const { return t_.size() == 1; }

  bool is_polynomial() const {
    return std::all_of(t_.begin(), t_.end(),
                       [](const Term& t) { return t.first.is_polynomial(); });
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.t_ == b.t_; }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    r.t_.reserve(a.t_.size() + b.t_.size());
    std::size_t i = 0, j = 0;
    while (i < a.t_.size() || j < b.t_.size()) {
      int c;
      if (j == b.t_.size()) c = 1;
      else if (i == a.t_.size()) c = -1;
      else c = Monomial::compare(a.t_[i].first, b.t_[j].first);
      if (c > 0) r.t_.push_back(a.t_[i++]);
      else if (c < 0) r.t_.push_back(b.t_[j++]);
      else {
        mpz_class s = a.t_[i].second + b.t_[j].second;
        if (s != 0) r.t_.push_back({a.t_[i].first, std::move(s)});
        ++i, ++j;
      }
    }
    return r;
  }

  friend LaurentPoly operator-(const LaurentPoly& a) {
    LaurentPoly r = a;
    for (auto& [m, c] : r.t_) c = -c;
    return r;
  }

  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return LaurentPoly();
    if (b.is_monomial()) return mul_term(a, b.t_[0]);
    if (a.is_monomial()) return mul_term(b, a.t_[0]);
    std::map<Monomial, mpz_class, Desc> acc;
    for (const auto& [ma, ca] : a.t_)
      for (const auto& [mb, cb] : b.t_) acc[ma * mb] += ca * cb;
    return from_map(acc);
  }

  LaurentPoly pow(std::int32_t k) const {
    if (k == 0) return LaurentPoly(1);
    if (k < 0) {
      if (is_zero()) throw ZeroToNegativePower();
      if (!is_monomial()) throw NotDivisible();
      const auto& [m, c] = t_[0];
      if (c != 1 && c != -1) throw NotDivisible();
      LaurentPoly r(m.pow(k), (c == -1 && (k % 2)) ? -1 : 1);
      return r;
    }
    LaurentPoly base = *this, r(1);
    std::int32_t e = k;
    while (e > 0) {
      if (e & 1) r = r * base;
      base = (e >>= 1) ? base * base : base;
    }
    return r;
  }

  // Exact division: returns q with q*d == *this, throws NotDivisible
  // otherwise.  Both operands are first shifted by a common monomial so that
  // all exponents are nonnegative; classic long division then terminates.
  friend LaurentPoly div_exact(const LaurentPoly& p, const LaurentPoly& d) {
    if (d.is_zero()) throw NotDivisible();
    if (p.is_zero()) return LaurentPoly();
    if (d.is_monomial()) {
      const auto& [dm, dc] = d.t_[0];
      LaurentPoly r;
      r.t_.reserve(p.t_.size());
      Monomial inv = dm.inverse();
      for (const auto& [m, c] : p.t_) {
        mpz_class q, rem;
        mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), c.get_mpz_t(), dc.get_mpz_t());
        if (rem != 0) throw NotDivisible();
        r.t_.push_back({m * inv, std::move(q)});
      }
      return r;
    }
    // Shift each operand independently to land in the polynomial ring.
    Monomial sp = p.min_shift().inverse(), sd = d.min_shift().inverse();
    LaurentPoly P = mul_term(p, {sp, 1}), D = mul_term(d, {sd, 1});
    std::map<Monomial, mpz_class, Desc> rem;
    for (const auto& [m, c] : P.t_) rem[m] = c;
    const auto& [dlead_m, dlead_c] = D.t_[0];
    LaurentPoly q;
    std::vector<Term> qterms;
    while (!rem.empty()) {
      const auto& [rm, rc] = *rem.begin();
      Monomial qm = rm / dlead_m;
      if (!qm.is_polynomial()) throw NotDivisible();
      mpz_class qc, r2;
      mpz_tdiv_qr(qc.get_mpz_t(), r2.get_mpz_t(), rc.get_mpz_t(), dlead_c.get_mpz_t());
      if (r2 != 0) throw NotDivisible();
      for (const auto& [dm, dc] : D.t_) {
        Monomial key = qm * dm;
        auto it = rem.find(key);
        mpz_class delta = qc * dc;
        if (it == rem.end()) {
          rem.emplace(std::move(key), -delta);
        } else {
          it->second -= delta;
          if (it->second == 0) rem.erase(it);
        }
      }
      qterms.push_back({std::move(qm), std::move(qc)});
    }
    std::sort(qterms.begin(), qterms.end(), [](const Term& a, const Term& b) {
      return Monomial::compare(a.first, b.first) > 0;
    });
    q.t_ = std::move(qterms);
    // Undo the two shifts: q was computed for (p*sp)/(d*sd) = q_true*sp/sd.
    return mul_term(q, {(sp / sd).inverse(), 1});
  }

  // Ring homomorphism determined by a variable-to-value map; unmapped
  // variables are sent to themselves.  When a variable occurring with a
  // negative exponent maps to a non-monomial, the term is accumulated as a
  // fraction and resolved by one exact division at the end.
  LaurentPoly substitute(const std::map<VarId, LaurentPoly>& images) const {
    LaurentPoly num, den(1);
    for (const auto& [m, c] : t_) {
      LaurentPoly tn(Monomial(), c), td(1);
      for (const auto& [v, e] : m.entries()) {
        auto it = images.find(v);
        if (it == images.end()) {
          tn = mul_term(tn, {Monomial::var(v, e), 1});
          continue;
        }
        const LaurentPoly& img = it->second;
        if (e >= 0) {
          tn = tn * img.pow(e);
        } else if (img.is_zero()) {
          throw ZeroToNegativePower();
        } else if (img.is_monomial() && (img.t_[0].second == 1 || img.t_[0].second == -1)) {
          tn = tn * img.pow(e);
        } else {
          td = td * img.pow(-e);
        }
      }
      // num/den + tn/td = (num*td + tn*den) / (den*td)
      num = num * td + tn * den;
      den = den * td;
    }
    if (den == LaurentPoly(1)) return num;
    return div_exact(num, den);
  }

  // ---- Formatting -------------------------------------------------------

  // Terms joined by " + " / " - ", leading monomial first; within a term,
  // y-tagged variables print before the rest (the display convention for
  // frozen coefficients), each group in increasing order.
  std::string to_string() const {
    if (t_.empty()) return "0";
    std::string s;
    for (std::size_t k = 0; k < t_.size(); ++k) {
      const auto& [m, c] = t_[k];
      mpz_class a = abs(c);
      if (k == 0) {
        if (c < 0) s += "-";
      } else {
        s += (c < 0) ? " - " : " + ";
      }
      bool wrote = false;
      if (a != 1 || m.is_one()) {
        s += a.get_str();
        wrote = true;
      }
      for (const auto& [v, e] : m.entries()) {
        if (wrote) s += "*";
        s += v.text();
        if (e != 1) s += "^" + std::to_string(e);
        wrote = true;
      }
    }
    return s;
  }

  static LaurentPoly parse(const std::string& s);

 private:
  struct Desc {
    bool operator()(const Monomial& a, const Monomial& b) const {
      return Monomial::compare(a, b) > 0;
    }
  };

  static LaurentPoly mul_term(const LaurentPoly& a, const Term& t) {
    LaurentPoly r;
    r.t_.reserve(a.t_.size());
    for (const auto& [m, c] : a.t_) r.t_.push_back({m * t.first, c * t.second});
    return r;
  }

  static LaurentPoly from_map(const std::map<Monomial, mpz_class, Desc>& acc) {
    LaurentPoly r;
    r.t_.reserve(acc.size());
    for (const auto& [m, c] : acc)
      if (c != 0) r.t_.push_back({m, c});
    return r;
  }

  // Monomial whose exponents are the per-variable minima of min(exponent, 0);
  // dividing by it clears all negative exponents.
  Monomial min_shift() const {
    std::map<VarId, std::int32_t> low;
    for (const auto& [m, c] : t_)
      for (const auto& [v, e] : m.entries()) {
        auto [it, fresh] = low.try_emplace(v, std::min(e, 0));
        if (!fresh) it->second = std::min(it->second, std::min(e, 0));
      }
    std::vector<Monomial::Entry> es;
    for (const auto& [v, e] : low)
      if (e < 0) es.push_back({v, e});
    return Monomial(std::move(es));
  }

  std::vector<Term> t_;
};

// ---- Parser --------------------------------------------------------------

namespace detail {

struct PolyLexer {
  const std::string& s;
  std::size_t i = 0;
  explicit PolyLexer(const std::string& str) : s(str) {}
  void skip_ws() {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\n')) ++i;
  }
  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
};

inline long long parse_int(PolyLexer& lx) {
  lx.skip_ws();
  std::size_t j = lx.i;
  if (j < lx.s.size() && (lx.s[j] == '-' || lx.s[j] == '+')) ++j;
  std::size_t k = j;
  while (k < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[k]))) ++k;
  if (k == j) throw std::invalid_argument("expected integer in polynomial at offset " +
                                          std::to_string(lx.i));
  long long v = std::stoll(lx.s.substr(lx.i, k - lx.i));
  lx.i = k;
  return v;
}

}  // namespace detail

inline LaurentPoly LaurentPoly::parse(const std::string& str) {
  detail::PolyLexer lx(str);
  LaurentPoly total;
  bool first = true;
  while (true) {
    lx.skip_ws();
    if (lx.i >= lx.s.size()) break;
    int sign = 1;
    if (lx.eat('-')) sign = -1;
    else if (lx.eat('+')) sign = 1;
    else if (!first) throw std::invalid_argument("expected + or - at offset " +
                                                 std::to_string(lx.i));
    first = false;
    lx.skip_ws();
    mpz_class coeff = 1;
    std::vector<Monomial::Entry> es;
    bool any = false;
    while (true) {
      char c = lx.peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t k = lx.i;
        while (k < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[k]))) ++k;
        coeff *= mpz_class(lx.s.substr(lx.i, k - lx.i));
        lx.i = k;
        any = true;
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        char tag = c;
        ++lx.i;
        VarId v;
        if (lx.peek() == '[') {
          ++lx.i;
          long long a = detail::parse_int(lx);
          if (lx.eat(',')) {
            long long b = detail::parse_int(lx);
            if (!lx.eat(']')) throw std::invalid_argument("expected ]");
            v = VarId::ix2(tag, static_cast<std::int32_t>(a), static_cast<std::int32_t>(b));
          } else {
            if (!lx.eat(']')) throw std::invalid_argument("expected ]");
            v = VarId::ix(tag, static_cast<std::int32_t>(a));
          }
        } else if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
          v = VarId::ix(tag, static_cast<std::int32_t>(detail::parse_int(lx)));
        } else {
          v = VarId::sym(tag);
        }
        std::int32_t e = 1;
        if (lx.eat('^')) e = static_cast<std::int32_t>(detail::parse_int(lx));
        es.push_back({v, e});
        any = true;
      } else {
        break;
      }
      if (!lx.eat('*')) break;
    }
    if (!any) throw std::invalid_argument("empty term at offset " + std::to_string(lx.i));
    total = total + LaurentPoly(Monomial(std::move(es)), sign * coeff);
  }
  return total;
}

}  // namespace cflip

#endif
