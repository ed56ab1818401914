#ifndef XHO_IO_HPP
#define XHO_IO_HPP

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "xho/collapse.hpp"
#include "xho/complex.hpp"
#include "xho/graph.hpp"
#include "xho/homology.hpp"
#include "xho/homotopy.hpp"
#include "xho/model.hpp"

namespace xho::io {

inline constexpr int kSchemaVersion = 1;

// Complex text format: optional `vertices: v1 v2 ...` line; every other
// non-comment line is one facet as whitespace-separated vertex names;
// `#` starts a comment. Vertices referenced in facets are auto-declared.
Complex parse_complex(std::istream& in);
Complex parse_complex_file(const std::string& path);
void write_complex(std::ostream& out, const Complex& k);
std::string complex_to_string(const Complex& k);

// Graph text format: `mode: reflexive|loop` first, optional `vertices:`
// line, then edge lines `u v`; a loop is written `u u` (loop mode only).
Graph parse_graph(std::istream& in);
Graph parse_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);
std::string graph_to_string(const Graph& g);

// Map file format: lines `x -> y`, one per source vertex.
VertexMap parse_vertex_map(std::istream& in, const Complex& src, const Complex& tgt);
VertexMap parse_vertex_map_file(const std::string& path, const Complex& src,
                                const Complex& tgt);
void write_vertex_map(std::ostream& out, const VertexMap& f);

// ---- JSON emission ------------------------------------------------------

nlohmann::json complex_json(const Complex& k);
nlohmann::json graph_json(const Graph& g);
nlohmann::json homology_json(const HomologyResult& h);
nlohmann::json map_verdict_json(const HomIsoReport& r);
nlohmann::json chain_json(const ContiguityChain& c);
nlohmann::json retraction_json(const Retraction& r);
nlohmann::json collapse_json(const CollapseSequence& seq);
nlohmann::json ndr_json(const NdrWitness& w);
nlohmann::json cell_structure_json(const CellStructure& cs);

}  // namespace xho::io

#endif  // XHO_IO_HPP
