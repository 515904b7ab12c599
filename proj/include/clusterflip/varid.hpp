#ifndef CLUSTERFLIP_VARID_HPP
#define CLUSTERFLIP_VARID_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace cflip {

// Identifier of one symbolic variable: a single-character tag plus up to two
// integer indices.  Examples: x1 ("x", index 1), y12, x[2,3] (grid variable),
// or a bare symbol like "a" with no index.  The comparison order (tag, arity,
// indices) is the fixed total order used everywhere monomials are sorted.
struct VarId {
  char tag = '?';
  std::int8_t arity = 0;
  std::int32_t i0 = 0;
  std::int32_t i1 = 0;

  friend auto operator<=>(const VarId&, const VarId&) = default;

  static VarId sym(char t) { return VarId{t, 0, 0, 0}; }
  static VarId ix(char t, std::int32_t a) { return VarId{t, 1, a, 0}; }
  static VarId ix2(char t, std::int32_t a, std::int32_t b) { return VarId{t, 2, a, b}; }

  // Compact text form: "a", "x1", "x[2,3]".  Bracketed whenever an index is
  // negative or two indices are present, so the form stays parseable.
  std::string text() const {
    std::string s(1, tag);
    if (arity == 0) return s;
    if (arity == 1) {
      if (i0 < 0) return s + "[" + std::to_string(i0) + "]";
      return s + std::to_string(i0);
    }
    return s + "[" + std::to_string(i0) + "," + std::to_string(i1) + "]";
  }

  // Bracketed form used as JSON object key: "a", "x[1]", "x[2,3]".
  std::string json_key() const {
    std::string s(1, tag);
    if (arity == 0) return s;
    if (arity == 1) return s + "[" + std::to_string(i0) + "]";
    return s + "[" + std::to_string(i0) + "," + std::to_string(i1) + "]";
  }

  // Accepts both the compact and the bracketed form.
  static VarId parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty variable name");
    char t = s[0];
    if (s.size() == 1) return sym(t);
    if (s[1] == '[') {
      if (s.back() != ']') throw std::invalid_argument("bad variable: " + s);
      std::string body = s.substr(2, s.size() - 3);
      auto comma = body.find(',');
      if (comma == std::string::npos) return ix(t, std::stoi(body));
      return ix2(t, std::stoi(body.substr(0, comma)), std::stoi(body.substr(comma + 1)));
    }
    return ix(t, std::stoi(s.substr(1)));
  }
};

}  // namespace cflip

#endif
