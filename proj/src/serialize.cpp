#include "qbruhat/serialize.hpp"

#include <sstream>
#include <stdexcept>

namespace qbruhat {

std::string format_qmonomial(const QDegree& d) {
  Monomial m;
  for (int i = 0; i < d.rank(); ++i) m.set_exponent(Var::q, i + 1, d[i]);
  return Poly::monomial(m).to_string();
}

std::string format_product(const QHElement& el) {
  if (el.is_zero()) return "0";
  std::string s;
  for (const auto& [key, c] : el.terms()) {
    if (!s.empty()) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    const std::int64_t mag = c < 0 ? -c : c;
    if (mag != 1) s += std::to_string(mag) + "·";
    if (!key.degree.is_zero()) s += format_qmonomial(key.degree) + "·";
    s += "σ_{" + key.basis.to_string() + "}";
  }
  return s;
}

namespace {

std::vector<int> block_values(const Monomial& m, Var block, int count) {
  std::vector<int> v;
  for (int i = 1; i <= count; ++i) v.push_back(m.exponent(block, i));
  return v;
}

QDegree degree_from_json(const Json& j) {
  return QDegree::from(j.get<std::vector<int>>());
}

}  // namespace

Json poly_to_json(const Poly& p, int n) {
  Json terms = Json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    for (int i = n; i <= kMaxN; ++i)
      if ((i > n && (m.exponent(Var::x, i) || m.exponent(Var::y, i))) || m.exponent(Var::q, i))
        throw std::invalid_argument("poly_to_json: variable outside the declared alphabet");
    Json exps;
    exps["x"] = block_values(m, Var::x, n);
    exps["y"] = block_values(m, Var::y, n);
    exps["q"] = block_values(m, Var::q, n - 1);
    terms.push_back(Json{{"exponents", exps}, {"coeff", c}});
  }
  return terms;
}

Poly poly_from_json(const Json& j) {
  Poly p;
  for (const auto& term : j) {
    Monomial m;
    for (auto [key, block] : {std::pair{"x", Var::x}, std::pair{"y", Var::y}, std::pair{"q", Var::q}}) {
      const auto values = term.at("exponents").at(key).get<std::vector<int>>();
      for (std::size_t i = 0; i < values.size(); ++i) m.set_exponent(block, static_cast<int>(i) + 1, values[i]);
    }
    p.add_term(m, term.at("coeff").get<std::int64_t>());
  }
  return p;
}

Json gw_table_to_json(const GWTable& table) {
  Json terms = Json::array();
  for (const auto& [key, c] : table.product().terms())
    terms.push_back(Json{{"w", key.basis.to_string()}, {"d", key.degree.values()}, {"coeff", c}});
  return Json{{"u", table.u().to_string()}, {"v", table.v().to_string()}, {"n", table.n()}, {"terms", terms}};
}

GWTable gw_table_from_json(const Json& j) {
  const auto u = Permutation::parse(j.at("u").get<std::string>());
  const auto v = Permutation::parse(j.at("v").get<std::string>());
  const int n = j.at("n").get<int>();
  if (u.size() != n || v.size() != n) throw std::invalid_argument("gw_table_from_json: size mismatch");
  QHElement product(n - 1);
  for (const auto& t : j.at("terms"))
    product.add(Permutation::parse(t.at("w").get<std::string>()), degree_from_json(t.at("d")),
                t.at("coeff").get<std::int64_t>());
  return GWTable(u, v, std::move(product));
}

Json graph_to_json(const QBGraph& g) {
  Json j;
  j["system"] = g.system();
  j["rank"] = g.rank();
  if (g.on_permutations()) j["n"] = g.n();
  Json vertices = Json::array(), lengths = Json::array();
  for (int v = 0; v < g.vertex_count(); ++v) {
    vertices.push_back(g.name(v));
    lengths.push_back(g.length(v));
  }
  j["vertices"] = vertices;
  j["lengths"] = lengths;
  Json edges = Json::array();
  for (const auto& e : g.edges()) {
    Json je{{"src", g.name(e.source)}, {"dst", g.name(e.target)}};
    if (e.label.is_transposition())
      je["label"] = std::vector<int>{e.label.i, e.label.j};
    else
      je["label"] = e.label.root;
    je["root"] = e.label.root;
    je["weight"] = e.weight.values();
    edges.push_back(je);
  }
  j["edges"] = edges;
  Json roots = Json::array();
  for (const auto& r : g.roots())
    roots.push_back(Json{{"root", r.root}, {"coroot", r.coroot.values()}, {"height", r.coroot.total()}});
  j["roots"] = roots;
  return j;
}

QBGraph graph_from_json(const Json& j) {
  const auto names = j.at("vertices").get<std::vector<std::string>>();
  const auto lengths = j.at("lengths").get<std::vector<int>>();
  std::map<std::string, int> index;
  for (std::size_t v = 0; v < names.size(); ++v) index.emplace(names[v], static_cast<int>(v));
  std::vector<QEdge> edges;
  for (const auto& je : j.at("edges")) {
    EdgeLabel label;
    label.root = je.at("root").get<int>();
    if (je.at("label").is_array()) {
      const auto ij = je.at("label").get<std::vector<int>>();
      if (ij.size() != 2) throw std::invalid_argument("graph_from_json: bad transposition label");
      label.i = ij[0];
      label.j = ij[1];
    }
    edges.push_back({index.at(je.at("src").get<std::string>()), index.at(je.at("dst").get<std::string>()), label,
                     degree_from_json(je.at("weight"))});
  }
  std::vector<RootRecord> roots;
  for (const auto& jr : j.at("roots")) roots.push_back({jr.at("root").get<RootVector>(), degree_from_json(jr.at("coroot"))});
  return QBGraph(j.at("system").get<std::string>(), j.at("rank").get<int>(), names, lengths, std::move(edges),
                 std::move(roots), j.value("n", 0));
}

std::string graph_to_dot(const QBGraph& g) {
  std::ostringstream out;
  out << "digraph \"" << g.system() << "\" {\n";
  for (int v = 0; v < g.vertex_count(); ++v) out << "  v" << v << " [label=\"" << g.name(v) << "\"];\n";
  for (const auto& e : g.edges()) {
    out << "  v" << e.source << " -> v" << e.target;
    if (e.quantum())
      out << " [style=dashed, label=\"" << format_qmonomial(e.weight) << "\"]";
    else
      out << " [style=solid]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace qbruhat
