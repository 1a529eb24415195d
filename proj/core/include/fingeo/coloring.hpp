#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fingeo/hypergraph.hpp"
#include "fingeo/projective_space.hpp"

namespace fingeo {

/// A strict coloring: every vertex gets a color in 1..N and every color is used.
class Coloring {
 public:
  /// Validates strictness; N is the largest color.
  explicit Coloring(std::vector<std::uint32_t> assignment);

  /// Relabels arbitrary labels densely, classes ordered by their smallest vertex.
  static Coloring canonical(std::span<const std::uint32_t> labels);

  std::uint32_t num_colors() const noexcept { return num_colors_; }
  std::uint32_t vertex_count() const noexcept { return static_cast<std::uint32_t>(assignment_.size()); }
  std::uint32_t color(std::uint32_t v) const { return assignment_.at(v); }
  const std::vector<std::uint32_t>& assignment() const noexcept { return assignment_; }
  /// classes()[c - 1] holds the vertices of color c, ascending.
  std::vector<std::vector<std::uint32_t>> classes() const;

  Coloring canonicalized() const { return canonical(assignment_); }

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  std::vector<std::uint32_t> assignment_;
  std::uint32_t num_colors_ = 0;
};

/// No two vertices of the edge share a color.
bool is_rainbow(std::span<const std::uint32_t> edge, const Coloring& c);

struct ProperCheck {
  bool proper = true;
  std::optional<std::size_t> rainbow_edge;  // first rainbow edge index
  explicit operator bool() const noexcept { return proper; }
};

ProperCheck is_proper(const Coloring& c, const Hypergraph& h);

/// Index of the first edge meeting `points` in fewer than t vertices.
std::optional<std::size_t> transversal_violation(std::span<const std::uint32_t> points,
                                                 const Hypergraph& h, std::uint64_t t);
inline bool is_t_transversal(std::span<const std::uint32_t> points, const Hypergraph& h, std::uint64_t t) {
  return !transversal_violation(points, h, t);
}

/// Color 1 on T, then one singleton color per remaining vertex in ascending
/// order: N = |V| - |T| + 1. T must be a 2-transversal.
Coloring trivial_coloring(std::span<const std::uint32_t> transversal, const Hypergraph& h);

struct TrivialityWitness {
  std::uint32_t color;
  std::vector<std::uint32_t> transversal;
};

/// Lowest color whose class is a 2-transversal, if any.
std::optional<TrivialityWitness> is_trivial_coloring(const Coloring& c, const Hypergraph& h);

struct DisjointPair {
  std::uint32_t color;
  Subspace first;
  Subspace second;
};

/// A color class containing two disjoint k-spaces entirely. Scans colors
/// ascending, then pairs of k-spaces in canonical order.
std::optional<DisjointPair> monochromatic_disjoint_pair(const Coloring& c, const ProjectiveSpace& space, int k);

}  // namespace fingeo
