#include "fingeo/hypergraph.hpp"

#include <algorithm>

#include "fingeo/errors.hpp"
#include "fingeo/projective_space.hpp"

namespace fingeo {

Hypergraph Hypergraph::relabeled(const std::vector<std::uint32_t>& perm) const {
  if (perm.size() != vertex_count) throw PreconditionError("relabeled: permutation size mismatch");
  Hypergraph out;
  out.vertex_count = vertex_count;
  for (const auto& e : edges) {
    std::vector<std::uint32_t> mapped;
    mapped.reserve(e.size());
    for (auto v : e) mapped.push_back(perm[v]);
    std::sort(mapped.begin(), mapped.end());
    out.edges.push_back(std::move(mapped));
  }
  return out;
}

nlohmann::json to_json(const Hypergraph& h) {
  nlohmann::json j;
  if (h.geometry) {
    j["n"] = h.geometry->n;
    j["k"] = h.geometry->k;
    j["q"] = h.geometry->q;
  } else {
    j["vertices"] = h.vertex_count;
  }
  j["edges"] = h.edges;
  return j;
}

Hypergraph hypergraph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("edges")) throw PreconditionError("hypergraph JSON: missing edges");
  Hypergraph h;
  if (j.contains("n") && j.contains("q")) {
    GeometryTag tag{j.at("n").get<int>(), j.value("k", 0), j.at("q").get<std::uint64_t>()};
    h.vertex_count = static_cast<std::uint32_t>(theta(tag.n, tag.q));
    h.geometry = tag;
  } else if (j.contains("vertices")) {
    h.vertex_count = j.at("vertices").get<std::uint32_t>();
  }
  std::uint32_t max_seen = 0;
  for (const auto& e : j.at("edges")) {
    auto edge = e.get<std::vector<std::uint32_t>>();
    std::sort(edge.begin(), edge.end());
    if (std::adjacent_find(edge.begin(), edge.end()) != edge.end())
      throw PreconditionError("hypergraph JSON: repeated vertex in an edge");
    if (!edge.empty()) max_seen = std::max(max_seen, edge.back() + 1);
    h.edges.push_back(std::move(edge));
  }
  if (!j.contains("vertices") && !h.geometry) h.vertex_count = max_seen;
  if (max_seen > h.vertex_count) throw PreconditionError("hypergraph JSON: vertex index out of range");
  return h;
}

}  // namespace fingeo
