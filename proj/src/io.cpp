#include "polarix/io.hpp"

#include <fstream>
#include <sstream>

namespace polarix {

using nlohmann::json;

json to_json(const Multidegree& b) { return json(b.coords()); }

Multidegree multidegree_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("multidegree: expected array");
  return Multidegree(j.get<std::vector<int>>());
}

json to_json(const SimplexParams& p) { return json{{"m", p.m}, {"n", p.n}}; }

SimplexParams simplex_params_from_json(const json& j) {
  SimplexParams p;
  p.m = j.at("m").get<int>();
  p.n = j.at("n").get<int>();
  if (p.m < 1 || p.n < 1)
    throw std::invalid_argument("simplex params: need m >= 1 and n >= 1");
  return p;
}

json to_json(const IsotoneFamily& f) {
  json entries = json::array();
  for (int c = 0; c < f.m(); ++c)
    for (int p = 0; p < static_cast<int>(f.simplex().size()); ++p) {
      if (f.set(c, p) == index_set::kUnset) continue;
      json members = json::array();
      for (int idx : index_set::elements(f.set(c, p))) members.push_back(idx + 1);
      entries.push_back(json{{"color", c + 1},
                             {"point", to_json(f.simplex().point(p))},
                             {"set", members}});
    }
  return json{{"m", f.m()}, {"n", f.n()}, {"X", entries}};
}

IsotoneFamily family_from_json(const json& j) {
  const SimplexParams p = simplex_params_from_json(j);
  IsotoneFamily f(p.m, p.n);
  if (!j.contains("X") || !j.at("X").is_array())
    throw std::invalid_argument("family: missing assignment list \"X\"");
  for (const json& entry : j.at("X")) {
    const int color = entry.at("color").get<int>();
    if (color < 1 || color > p.m)
      throw std::invalid_argument("family: color out of range in entry " +
                                  entry.dump());
    const Multidegree point = multidegree_from_json(entry.at("point"));
    if (!f.simplex().contains(point))
      throw std::invalid_argument("family: point " + point.str() +
                                  " outside the simplex");
    std::vector<int> members;
    for (const json& v : entry.at("set")) {
      const int idx = v.get<int>();
      if (idx < 1 || idx > p.n)
        throw std::invalid_argument("family: index out of range in entry " +
                                    entry.dump());
      members.push_back(idx - 1);
    }
    f.assign(color - 1, point, index_set::from_elements(members));
  }
  return f;
}

json to_json(const QsPattern& q) {
  json points = json::array();
  for (const Multidegree& c : q.points) points.push_back(to_json(c));
  return points;
}

QsPattern qs_pattern_from_json(const json& j, int n) {
  QsPattern q;
  q.n = n;
  for (const json& point : j) q.points.push_back(multidegree_from_json(point));
  return q;
}

json to_json(const Ring& ring) {
  return json{{"sizes", ring.sizes()}, {"collapsed", ring.is_collapsed()}};
}

Ring ring_from_json(const json& j) {
  const auto sizes = j.at("sizes").get<std::vector<int>>();
  if (j.value("collapsed", false)) {
    for (int s : sizes)
      if (s != 1) throw std::invalid_argument("ring: collapsed classes have size 1");
    return Ring::collapsed(static_cast<int>(sizes.size()));
  }
  return Ring::with_sizes(sizes);
}

json monomial_to_json(const Monomial& mon, const Ring& ring) {
  json triples = json::array();
  for (int v = 0; v < mon.var_count(); ++v)
    if (mon.exp(v) > 0)
      triples.push_back(json::array(
          {ring.color_of(v) + 1, ring.index_of(v) + 1, mon.exp(v)}));
  return triples;
}

Monomial monomial_from_json(const json& j, const Ring& ring) {
  Monomial mon(ring.var_count());
  for (const json& triple : j) {
    const int color = triple.at(0).get<int>() - 1;
    const int index = triple.at(1).get<int>() - 1;
    const int exp = triple.at(2).get<int>();
    if (exp < 0) throw std::invalid_argument("monomial: negative exponent");
    mon.mul_var(ring.var(color, index), exp);
  }
  return mon;
}

json to_json(const MonomialIdeal& ideal) {
  json gens = json::array();
  for (const Monomial& g : ideal.generators())
    gens.push_back(monomial_to_json(g, ideal.ring()));
  return json{{"ring", to_json(ideal.ring())}, {"generators", gens}};
}

MonomialIdeal ideal_from_json(const json& j) {
  const Ring ring = ring_from_json(j.at("ring"));
  std::vector<Monomial> gens;
  for (const json& g : j.at("generators"))
    gens.push_back(monomial_from_json(g, ring));
  return MonomialIdeal(ring, std::move(gens));
}

std::string to_m2(const MonomialIdeal& ideal) {
  std::ostringstream out;
  for (const Monomial& g : ideal.generators()) out << g.str(ideal.ring()) << "\n";
  return out.str();
}

json to_json(const SimplicialComplex& complex) {
  json facets = json::array();
  for (std::uint64_t f : complex.facets()) {
    json facet = json::array();
    for (int v = 0; v < complex.vertex_count(); ++v)
      if ((f >> v) & 1ull) facet.push_back(v);
    facets.push_back(facet);
  }
  return json{{"vertices", complex.vertex_names()}, {"facets", facets}};
}

SimplicialComplex complex_from_json(const json& j) {
  const auto names = j.at("vertices").get<std::vector<std::string>>();
  std::vector<std::uint64_t> facets;
  for (const json& facet : j.at("facets")) {
    std::uint64_t mask = 0;
    for (const json& v : facet) {
      const int idx = v.get<int>();
      if (idx < 0 || idx >= static_cast<int>(names.size()))
        throw std::invalid_argument("complex: vertex index out of range");
      mask |= 1ull << idx;
    }
    facets.push_back(mask);
  }
  return SimplicialComplex(names, std::move(facets));
}

json to_json(const DirectedLabeledTree& t) {
  json edges = json::array();
  for (const TreeEdge& e : t.edges())
    edges.push_back(json::array({e.tail, e.head, e.label + 1}));
  return json{{"vertices", t.vertex_count()}, {"edges", edges}};
}

DirectedLabeledTree tree_from_json(const json& j) {
  const int k = j.at("vertices").get<int>();
  std::vector<TreeEdge> edges;
  for (const json& e : j.at("edges"))
    edges.push_back(TreeEdge{e.at(0).get<int>(), e.at(1).get<int>(),
                             e.at(2).get<int>() - 1});
  return DirectedLabeledTree(k, std::move(edges));
}

json to_json(const TopologyVerdict& verdict) {
  const char* kind = verdict.kind == BallSphere::ball
                         ? "ball"
                         : verdict.kind == BallSphere::sphere ? "sphere" : "unknown";
  return json{{"verdict", kind},
              {"pseudomanifold", verdict.pseudomanifold},
              {"closed", verdict.closed},
              {"homology", verdict.homology},
              {"shellable", verdict.shellable},
              {"detail", verdict.detail}};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << content;
}

}  // namespace polarix
