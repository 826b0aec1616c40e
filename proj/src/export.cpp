#include "export.hpp"

#include <sstream>

#include "json.hpp"

namespace gbdq {

namespace {

using nlohmann::json;

json descents_json(const DescentSet& d) { return json(d.elements()); }

json chain_json(const Chain& c) {
  json ts = json::array();
  for (const Transposition& t : c.transpositions()) ts.push_back({t.a, t.b});
  return json{{"transpositions", ts},
              {"labels", c.labels()},
              {"descents", descents_json(c.descents())},
              {"endpoint_cycles", c.endpoint().cycle_string()}};
}

std::string vertex_label(const ColoredGraph& g, size_t v) {
  std::string name = g.names().empty() ? "v" + std::to_string(v) : g.names()[v];
  return name + "\\nDes " + g.descent_sets()[v].to_string();
}

std::string edge_tag(const ColoredEdge& e) {
  std::string label = std::to_string(int(e.color));
  if (e.rule != PhiRule::Untagged)
    label += std::string(" (") + phi_rule_name(e.rule) + ")";
  return label;
}

}  // namespace

std::string chains_to_text(const std::vector<Chain>& chains) {
  std::ostringstream out;
  for (const Chain& c : chains) out << c.text() << "\n";
  return out.str();
}

std::string chains_to_json(const std::vector<Chain>& chains) {
  json arr = json::array();
  for (const Chain& c : chains) arr.push_back(chain_json(c));
  return arr.dump(2) + "\n";
}

std::string graph_to_dot(const ColoredGraph& g, const std::string& name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  out << "  node [shape=box, fontname=\"monospace\"];\n";
  for (size_t v = 0; v < g.vertex_count(); ++v)
    out << "  v" << v << " [label=\"" << vertex_label(g, v) << "\"];\n";
  for (const ColoredEdge& e : g.edges()) {
    out << "  v" << e.u << " -- v" << e.v << " [label=\"" << edge_tag(e)
        << "\", color_i=" << int(e.color);
    if (e.rule != PhiRule::Untagged)
      out << ", rule=\"" << phi_rule_name(e.rule) << "\"";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string graph_to_json(const ColoredGraph& g) {
  json verts = json::array();
  for (size_t v = 0; v < g.vertex_count(); ++v) {
    json rec{{"id", v}, {"descents", descents_json(g.descent_sets()[v])}};
    if (!g.names().empty()) rec["name"] = g.names()[v];
    verts.push_back(rec);
  }
  json edges = json::array();
  for (const ColoredEdge& e : g.edges()) {
    json rec{{"u", e.u}, {"v", e.v}, {"color", int(e.color)}};
    if (e.rule != PhiRule::Untagged) rec["rule"] = phi_rule_name(e.rule);
    edges.push_back(rec);
  }
  json doc{{"degree", g.degree()}, {"vertices", verts}, {"edges", edges}};
  return doc.dump(2) + "\n";
}

std::string graph_to_text(const ColoredGraph& g) {
  std::ostringstream out;
  for (size_t v = 0; v < g.vertex_count(); ++v) {
    out << "v" << v;
    if (!g.names().empty()) out << " " << g.names()[v];
    out << " Des " << g.descent_sets()[v].to_string() << "\n";
  }
  for (const ColoredEdge& e : g.edges())
    out << "v" << e.u << " --" << edge_tag(e) << "-- v" << e.v << "\n";
  return out.str();
}

std::string report_to_json(const AxiomReport& rep) {
  json axioms = json::array();
  for (const auto& l : rep.lines)
    axioms.push_back({{"axiom", l.axiom},
                      {"checked", l.checked},
                      {"violations", l.violations}});
  json witnesses = json::array();
  for (const auto& w : rep.witnesses)
    witnesses.push_back({{"axiom", w.axiom}, {"detail", w.detail}});
  json doc{{"passed", rep.all_passed()},
           {"axioms", axioms},
           {"witnesses", witnesses}};
  return doc.dump(2) + "\n";
}

std::string census_to_json(const Census& c) {
  json rows = json::array();
  for (const CensusRow& r : c.by_size)
    rows.push_back({{"vertices", r.vertices},
                    {"graphs", r.graphs},
                    {"iso_classes", r.iso_classes},
                    {"orbits", r.orbits},
                    {"functions", r.functions}});
  json classes = json::array();
  for (const CensusClass& k : c.classes)
    classes.push_back({{"vertices", k.vertices},
                       {"graphs", k.graphs},
                       {"certificate", k.certificate},
                       {"orbit_key", k.orbit_key},
                       {"function", k.function}});
  json fns = json::object();
  for (const auto& [size, texts] : c.functions)
    fns[std::to_string(size)] = json(std::vector<std::string>(texts.begin(),
                                                              texts.end()));
  json doc{{"n", c.n},          {"chains", c.chains},
           {"graphs", c.graphs}, {"iso_classes", c.iso_classes},
           {"orbits", c.orbits}, {"by_size", rows},
           {"classes", classes}, {"functions", fns}};
  return doc.dump(2) + "\n";
}

std::string census_to_text(const Census& c) {
  std::ostringstream out;
  out << "n=" << c.n << ": chains " << c.chains << ", graphs " << c.graphs
      << ", iso classes " << c.iso_classes << ", orbits " << c.orbits << "\n";
  out << "vertices graphs classes orbits functions\n";
  for (const CensusRow& r : c.by_size)
    out << r.vertices << " " << r.graphs << " " << r.iso_classes << " "
        << r.orbits << " " << r.functions << "\n";
  return out.str();
}

std::string expansion_to_json(const QSymFunction& q, const SchurResult& s) {
  json qterms = json::array();
  for (const auto& [d, coeff] : q.coefficients())
    qterms.push_back({{"descents", descents_json(d)}, {"coeff", coeff}});
  json doc{{"degree", q.degree()}, {"q", qterms}, {"q_text", q.text()}};
  if (const auto* e = std::get_if<SchurExpansion>(&s)) {
    json sterms = json::array();
    for (const auto& [lam, coeff] : e->coefficients())
      sterms.push_back({{"shape", lam}, {"coeff", coeff}});
    doc["schur"] = sterms;
    doc["schur_text"] = e->text();
  } else {
    doc["not_symmetric"] = true;
    doc["residual"] = std::get<NotSymmetric>(s).residual.text();
  }
  return doc.dump(2) + "\n";
}

std::string oracle_to_json(const std::map<Permutation, int64_t>& coeffs) {
  json doc = json::object();
  for (const auto& [w, c] : coeffs) doc[w.one_line_string()] = c;
  return doc.dump(2) + "\n";
}

}  // namespace gbdq
