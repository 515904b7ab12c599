#ifndef CLUSTERFLIP_JSON_IO_HPP
#define CLUSTERFLIP_JSON_IO_HPP

#include <string>

#include "json.hpp"

#include "clusterflip/laurent.hpp"
#include "clusterflip/quiver.hpp"
#include "clusterflip/seed.hpp"

namespace cflip {

using json = nlohmann::ordered_json;

// {"terms":[{"c":"<decimal>","m":{"x[1]":-1,"y[1]":1}}, ...]}
// Terms are emitted leading-monomial first; within a term the variable keys
// are ordered alphabetically by their bracketed form.
inline json poly_to_json(const LaurentPoly& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) {
    json jm = json::object();
    std::map<std::string, std::int32_t> keys;
    for (const auto& [v, e] : m.entries()) keys[v.json_key()] = e;
    for (const auto& [k, e] : keys) jm[k] = e;
    terms.push_back({{"c", c.get_str()}, {"m", std::move(jm)}});
  }
  return json{{"terms", std::move(terms)}};
}

inline LaurentPoly poly_from_json(const json& j) {
  LaurentPoly p;
  for (const auto& t : j.at("terms")) {
    mpz_class c(t.at("c").get<std::string>());
    std::vector<Monomial::Entry> es;
    for (const auto& [k, e] : t.at("m").items())
      es.push_back({VarId::parse(k), e.get<std::int32_t>()});
    p = p + LaurentPoly(Monomial(std::move(es)), c);
  }
  return p;
}

// {"vertices":[{"id":"x1","frozen":false,"d6":6}, ...],
//  "arrows":[{"from":"x1","to":"y1","w6":6}, ...]}
// Vertices keep insertion order; arrows are emitted with positive weight
// (orientation follows the sign) in row-major order of the weight matrix.
inline json quiver_to_json(const Quiver& q) {
  json vs = json::array();
  for (const auto& v : q.vertices())
    vs.push_back({{"id", v.id}, {"frozen", v.frozen}, {"d6", v.d6}});
  json as = json::array();
  for (int i = 0; i < q.size(); ++i)
    for (int j = i + 1; j < q.size(); ++j) {
      std::int64_t w = q.w6(i, j);
      if (w > 0)
        as.push_back({{"from", q.vertex(i).id}, {"to", q.vertex(j).id}, {"w6", w}});
      else if (w < 0)
        as.push_back({{"from", q.vertex(j).id}, {"to", q.vertex(i).id}, {"w6", -w}});
    }
  return json{{"vertices", std::move(vs)}, {"arrows", std::move(as)}};
}

inline Quiver quiver_from_json(const json& j) {
  Quiver q;
  for (const auto& v : j.at("vertices"))
    q.add_vertex(v.at("id").get<std::string>(), v.at("frozen").get<bool>(),
                 v.value("d6", 6));
  for (const auto& a : j.at("arrows"))
    q.add_arrow(a.at("from").get<std::string>(), a.at("to").get<std::string>(),
                a.at("w6").get<std::int64_t>());
  return q;
}

// Quiver JSON plus {"vars":{"x1":<poly>, ...}}, keys in id order.
inline json seed_to_json(const Seed& s) {
  json j = quiver_to_json(s.quiver());
  json vars = json::object();
  for (const auto& [id, p] : s.vars()) vars[id] = poly_to_json(p);
  j["vars"] = std::move(vars);
  return j;
}

inline Seed seed_from_json(const json& j) {
  Quiver q = quiver_from_json(j);
  std::map<std::string, LaurentPoly> vars;
  for (const auto& [id, p] : j.at("vars").items()) vars[id] = poly_from_json(p);
  return Seed(std::move(q), std::move(vars));
}

}  // namespace cflip

#endif
