#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace fingeo {

/// Parameters of H(n, k, q) when a hypergraph comes from a projective space.
struct GeometryTag {
  int n;
  int k;
  std::uint64_t q;
  friend bool operator==(const GeometryTag&, const GeometryTag&) = default;
};

/// Vertices 0 .. vertex_count-1; each edge is a sorted list of vertices.
struct Hypergraph {
  std::uint32_t vertex_count = 0;
  std::vector<std::vector<std::uint32_t>> edges;
  std::optional<GeometryTag> geometry;

  /// Relabels vertex v as perm[v]; drops the geometry tag.
  Hypergraph relabeled(const std::vector<std::uint32_t>& perm) const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;
};

/// {"n","k","q","edges"} for geometric hypergraphs,
/// {"vertices","edges"} otherwise.
nlohmann::json to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const nlohmann::json& j);

}  // namespace fingeo
