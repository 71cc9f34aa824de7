#include "covalg/io.hpp"

#include "covalg/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace covalg {

namespace {

using nlohmann::ordered_json;

nlohmann::json parse_document(std::string_view text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed graph document: ") + e.what());
  }
}

int read_index(const nlohmann::json& v, int n) {
  if (!v.is_number_integer()) throw ParseError("edge index is not an integer");
  auto k = v.get<long long>();
  if (k < 1 || k > n) {
    throw ParseError("edge index " + std::to_string(k) + " out of range 1.." + std::to_string(n));
  }
  return static_cast<int>(k);
}

ordered_json indices_json(Subset s) {
  ordered_json out = ordered_json::array();
  for (int i : mask_to_indices(s)) out.push_back(i);
  return out;
}

}  // namespace

BipartiteGraph parse_graph(std::string_view text) {
  nlohmann::json doc = parse_document(text);
  if (!doc.is_object()) throw ParseError("graph document must be a JSON object");
  if (auto it = doc.find("multigraph"); it != doc.end() && it->is_boolean() && it->get<bool>()) {
    throw ParseError("multigraphs are not supported");
  }
  auto n_it = doc.find("n");
  if (n_it == doc.end() || !n_it->is_number_integer()) {
    throw ParseError("graph document needs an integer \"n\"");
  }
  auto n = n_it->get<long long>();
  if (n < 1) throw ParseError("n must be at least 1");
  if (n > kMaxVertexPairs) {
    throw ParseError("n must be at most " + std::to_string(kMaxVertexPairs));
  }
  auto e_it = doc.find("edges");
  if (e_it == doc.end() || !e_it->is_array()) {
    throw ParseError("graph document needs an \"edges\" array");
  }
  std::vector<Edge> edges;
  for (const auto& e : *e_it) {
    if (!e.is_array() || e.size() != 2) throw ParseError("each edge must be a pair [i, j]");
    edges.emplace_back(read_index(e[0], static_cast<int>(n)), read_index(e[1], static_cast<int>(n)));
  }
  return BipartiteGraph(static_cast<int>(n), std::move(edges));
}

BipartiteGraph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

std::string graph_to_json(const BipartiteGraph& g) {
  ordered_json out;
  out["n"] = g.n();
  out["edges"] = ordered_json::array();
  for (auto [i, j] : g.edges()) out["edges"].push_back({i, j});
  return out.dump();
}

std::string lattice_to_json(const CoverLattice& lattice) {
  ordered_json out;
  out["n"] = lattice.n();
  out["elements"] = ordered_json::array();
  for (Subset s : lattice.elements()) out["elements"].push_back(indices_json(s));
  return out.dump();
}

std::string groebner_to_json(const ToricRing& ring, std::span<const Binomial> basis) {
  auto monomial = [&](const Monomial& m) {
    ordered_json out = ordered_json::object();
    for (std::size_t v = 0; v < m.num_vars(); ++v) {
      if (m[v] != 0) out[ring.var_name(v)] = m[v];
    }
    return out;
  };
  ordered_json out;
  out["n"] = ring.n();
  out["variables"] = ordered_json::array();
  for (std::size_t v = 0; v < ring.num_vars(); ++v) out["variables"].push_back(ring.var_name(v));
  // u-variables from smallest to largest; a linear extension of inclusion.
  out["u_order"] = ordered_json::array();
  for (Subset s : ring.lattice().elements()) out["u_order"].push_back(indices_json(s));
  out["binomials"] = ordered_json::array();
  for (const Binomial& b : basis) {
    out["binomials"].push_back({{"lead", monomial(b.lead)}, {"trail", monomial(b.trail)}});
  }
  return out.dump();
}

}  // namespace covalg
