#include "xho/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace xho::io {

namespace {

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  std::string t;
  while (ss >> t) out.push_back(t);
  return out;
}

struct Interner {
  std::vector<std::string> names;
  std::map<std::string, int> ids;

  int intern(const std::string& name, int line) {
    auto it = ids.find(name);
    if (it != ids.end()) return it->second;
    int id = static_cast<int>(names.size());
    names.push_back(name);
    ids.emplace(name, id);
    (void)line;
    return id;
  }

  void declare(const std::string& name, int line) {
    if (ids.count(name)) throw ParseError("duplicate vertex id '" + name + "'", line);
    intern(name, line);
  }
};

// labels must serialize as single whitespace-free tokens
std::vector<std::string> printable_labels(const std::vector<std::string>& in) {
  std::vector<std::string> out;
  out.reserve(in.size());
  std::map<std::string, int> seen;
  for (auto name : in) {
    for (char& c : name)
      if (std::isspace(static_cast<unsigned char>(c))) c = '_';
    if (name.empty()) name = "_";
    while (seen.count(name)) name += "'";
    seen.emplace(name, 1);
    out.push_back(std::move(name));
  }
  return out;
}

}  // namespace

Complex parse_complex(std::istream& in) {
  Interner interner;
  std::vector<VSet> facets;
  std::string line;
  int lineno = 0;
  bool saw_vertices = false;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokens(strip_comment(line));
    if (toks.empty()) continue;
    if (toks[0] == "vertices:") {
      if (saw_vertices) throw ParseError("repeated vertices: line", lineno);
      if (!facets.empty()) throw ParseError("vertices: must precede facets", lineno);
      saw_vertices = true;
      for (std::size_t i = 1; i < toks.size(); ++i) interner.declare(toks[i], lineno);
      continue;
    }
    VSet f;
    for (const auto& t : toks) f.push_back(interner.intern(t, lineno));
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end())
      throw ParseError("facet repeats a vertex", lineno);
    facets.push_back(std::move(f));
  }
  return Complex::from_facets(static_cast<int>(interner.names.size()), facets,
                              interner.names);
}

Complex parse_complex_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  try {
    return parse_complex(in);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what(), e.line());
  }
}

void write_complex(std::ostream& out, const Complex& k) {
  auto labels = printable_labels(k.labels());
  out << "vertices:";
  for (const auto& name : labels) out << " " << name;
  out << "\n";
  auto facets = k.facets();
  std::sort(facets.begin(), facets.end());
  for (const auto& f : facets) {
    if (f.size() == 1) continue;  // singletons are implied by vertices:
    for (std::size_t i = 0; i < f.size(); ++i) out << (i ? " " : "") << labels[f[i]];
    out << "\n";
  }
}

std::string complex_to_string(const Complex& k) {
  std::ostringstream ss;
  write_complex(ss, k);
  return ss.str();
}

Graph parse_graph(std::istream& in) {
  Interner interner;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::pair<std::string, std::string>> edge_names;
  std::string line;
  int lineno = 0;
  std::optional<GraphMode> mode;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokens(strip_comment(line));
    if (toks.empty()) continue;
    if (toks[0] == "mode:") {
      if (mode) throw ParseError("repeated mode: line", lineno);
      if (toks.size() != 2) throw ParseError("mode: needs one value", lineno);
      if (toks[1] == "reflexive")
        mode = GraphMode::Reflexive;
      else if (toks[1] == "loop")
        mode = GraphMode::Loop;
      else
        throw ParseError("mode must be reflexive or loop", lineno);
      continue;
    }
    if (toks[0] == "vertices:") {
      for (std::size_t i = 1; i < toks.size(); ++i) interner.declare(toks[i], lineno);
      continue;
    }
    if (!mode) throw ParseError("mode: line must come first", lineno);
    if (toks.size() != 2) throw ParseError("edge line needs two vertices", lineno);
    int u = interner.intern(toks[0], lineno);
    int v = interner.intern(toks[1], lineno);
    if (u == v && *mode == GraphMode::Reflexive)
      throw ParseError("loops are implicit in reflexive mode", lineno);
    edges.emplace_back(u, v);
  }
  if (!mode) throw ParseError("missing mode: line", 1);
  int n = static_cast<int>(interner.names.size());
  return *mode == GraphMode::Reflexive ? Graph::reflexive(n, edges, interner.names)
                                       : Graph::loop(n, edges, interner.names);
}

Graph parse_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  try {
    return parse_graph(in);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what(), e.line());
  }
}

void write_graph(std::ostream& out, const Graph& g) {
  auto labels = printable_labels(g.labels());
  out << "mode: " << (g.mode() == GraphMode::Reflexive ? "reflexive" : "loop") << "\n";
  out << "vertices:";
  for (const auto& name : labels) out << " " << name;
  out << "\n";
  for (auto [u, v] : g.edges()) out << labels[u] << " " << labels[v] << "\n";
}

std::string graph_to_string(const Graph& g) {
  std::ostringstream ss;
  write_graph(ss, g);
  return ss.str();
}

VertexMap parse_vertex_map(std::istream& in, const Complex& src, const Complex& tgt) {
  std::vector<int> assign(src.vertex_count(), -1);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokens(strip_comment(line));
    if (toks.empty()) continue;
    if (toks.size() != 3 || toks[1] != "->")
      throw ParseError("map lines read 'x -> y'", lineno);
    auto from = src.vertex_by_label(toks[0]);
    if (!from) throw ParseError("unknown source vertex '" + toks[0] + "'", lineno);
    auto to = tgt.vertex_by_label(toks[2]);
    if (!to) throw ParseError("unknown target vertex '" + toks[2] + "'", lineno);
    if (assign[*from] >= 0) throw ParseError("vertex '" + toks[0] + "' mapped twice", lineno);
    assign[*from] = *to;
  }
  for (int v = 0; v < src.vertex_count(); ++v)
    if (assign[v] < 0)
      throw ParseError("vertex '" + src.label(v) + "' has no image", lineno);
  return VertexMap(src, tgt, std::move(assign));
}

VertexMap parse_vertex_map_file(const std::string& path, const Complex& src,
                                const Complex& tgt) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  try {
    return parse_vertex_map(in, src, tgt);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what(), e.line());
  }
}

void write_vertex_map(std::ostream& out, const VertexMap& f) {
  auto src = printable_labels(f.source().labels());
  auto tgt = printable_labels(f.target().labels());
  for (int v = 0; v < f.source().vertex_count(); ++v)
    out << src[v] << " -> " << tgt[f(v)] << "\n";
}

// ---- JSON -----------------------------------------------------------------

using nlohmann::json;

namespace {

json facet_list(const Complex& k) {
  auto labels = printable_labels(k.labels());
  json out = json::array();
  for (const auto& f : k.facets()) {
    json facet = json::array();
    for (int v : f) facet.push_back(labels[v]);
    out.push_back(std::move(facet));
  }
  return out;
}

}  // namespace

json complex_json(const Complex& k) {
  json j;
  j["schema"] = kSchemaVersion;
  j["vertices"] = printable_labels(k.labels());
  j["facets"] = facet_list(k);
  j["dimension"] = k.dim();
  return j;
}

json graph_json(const Graph& g) {
  json j;
  j["schema"] = kSchemaVersion;
  j["mode"] = g.mode() == GraphMode::Reflexive ? "reflexive" : "loop";
  j["vertices"] = printable_labels(g.labels());
  json edges = json::array();
  auto labels = printable_labels(g.labels());
  for (auto [u, v] : g.edges()) edges.push_back(json::array({labels[u], labels[v]}));
  j["edges"] = std::move(edges);
  return j;
}

json homology_json(const HomologyResult& h) {
  json j;
  j["schema"] = kSchemaVersion;
  j["betti"] = h.betti;
  j["torsion"] = h.torsion;
  return j;
}

json map_verdict_json(const HomIsoReport& r) {
  json j;
  j["schema"] = kSchemaVersion;
  j["homology_iso"] = r.iso;
  j["degrees_checked"] = r.degrees_checked;
  return j;
}

json chain_json(const ContiguityChain& c) {
  json j;
  j["schema"] = kSchemaVersion;
  auto src = printable_labels(c.source().labels());
  auto tgt = printable_labels(c.target().labels());
  json maps = json::array();
  for (const auto& m : c.maps()) {
    json entry = json::object();
    for (std::size_t v = 0; v < m.size(); ++v) entry[src[v]] = tgt[m[v]];
    maps.push_back(std::move(entry));
  }
  j["maps"] = std::move(maps);
  return j;
}

json retraction_json(const Retraction& r) {
  json j;
  j["schema"] = kSchemaVersion;
  auto src = printable_labels(r.retraction.source().labels());
  auto tgt = printable_labels(r.retraction.target().labels());
  json rmap = json::object();
  for (int v = 0; v < r.retraction.source().vertex_count(); ++v)
    rmap[src[v]] = tgt[r.retraction(v)];
  j["retraction"] = std::move(rmap);
  j["chain"] = chain_json(r.chain)["maps"];
  return j;
}

json collapse_json(const CollapseSequence& seq) {
  json steps = json::array();
  for (const auto& [del, dom] : seq.steps) steps.push_back(json::array({del, dom}));
  json j;
  j["schema"] = kSchemaVersion;
  j["steps"] = std::move(steps);
  return j;
}

json ndr_json(const NdrWitness& w) {
  json j;
  j["schema"] = kSchemaVersion;
  j["l_prime_facets"] = facet_list(w.l_prime);
  j["steps"] = collapse_json(w.collapse)["steps"];
  return j;
}

json cell_structure_json(const CellStructure& cs) {
  json j;
  j["schema"] = kSchemaVersion;
  j["base_facets"] = facet_list(cs.base);
  json atts = json::array();
  for (const auto& a : cs.attachments) {
    json e;
    switch (a.kind) {
      case GenKind::Boundary: e["gen"] = "boundary"; break;
      case GenKind::Horn: e["gen"] = "horn"; break;
      case GenKind::Edge: e["gen"] = "edge"; break;
    }
    e["n"] = a.n;
    if (a.kind == GenKind::Horn) e["k"] = a.k;
    e["attach"] = a.attach_labels;
    atts.push_back(std::move(e));
  }
  j["attachments"] = std::move(atts);
  return j;
}

}  // namespace xho::io
