#include "fingeo/coloring.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "fingeo/errors.hpp"

namespace fingeo {

Coloring::Coloring(std::vector<std::uint32_t> assignment) : assignment_(std::move(assignment)) {
  if (assignment_.empty()) return;
  num_colors_ = *std::max_element(assignment_.begin(), assignment_.end());
  std::vector<bool> used(num_colors_ + 1, false);
  for (auto c : assignment_) {
    if (c == 0) throw PreconditionError("coloring: colors start at 1");
    used[c] = true;
  }
  for (std::uint32_t c = 1; c <= num_colors_; ++c)
    if (!used[c]) throw PreconditionError("coloring: color " + std::to_string(c) + " is unused (not strict)");
}

Coloring Coloring::canonical(std::span<const std::uint32_t> labels) {
  std::map<std::uint32_t, std::uint32_t> relabel;
  std::vector<std::uint32_t> out;
  out.reserve(labels.size());
  for (auto l : labels) {
    auto [it, inserted] = relabel.try_emplace(l, static_cast<std::uint32_t>(relabel.size() + 1));
    out.push_back(it->second);
  }
  return Coloring(std::move(out));
}

std::vector<std::vector<std::uint32_t>> Coloring::classes() const {
  std::vector<std::vector<std::uint32_t>> out(num_colors_);
  for (std::uint32_t v = 0; v < assignment_.size(); ++v) out[assignment_[v] - 1].push_back(v);
  return out;
}

bool is_rainbow(std::span<const std::uint32_t> edge, const Coloring& c) {
  std::vector<std::uint32_t> colors;
  colors.reserve(edge.size());
  for (auto v : edge) {
    if (v >= c.vertex_count()) throw PreconditionError("is_rainbow: vertex outside the coloring");
    colors.push_back(c.color(v));
  }
  std::sort(colors.begin(), colors.end());
  return std::adjacent_find(colors.begin(), colors.end()) == colors.end();
}

ProperCheck is_proper(const Coloring& c, const Hypergraph& h) {
  if (c.vertex_count() != h.vertex_count)
    throw PreconditionError("is_proper: coloring has " + std::to_string(c.vertex_count()) +
                            " vertices, hypergraph " + std::to_string(h.vertex_count));
  for (std::size_t i = 0; i < h.edges.size(); ++i)
    if (is_rainbow(h.edges[i], c)) return {false, i};
  return {};
}

std::optional<std::size_t> transversal_violation(std::span<const std::uint32_t> points, const Hypergraph& h,
                                                 std::uint64_t t) {
  std::vector<bool> in(h.vertex_count, false);
  for (auto v : points) {
    if (v >= h.vertex_count) throw PreconditionError("transversal: vertex out of range");
    in[v] = true;
  }
  for (std::size_t i = 0; i < h.edges.size(); ++i) {
    std::uint64_t hit = 0;
    for (auto v : h.edges[i]) hit += in[v];
    if (hit < t) return i;
  }
  return std::nullopt;
}

Coloring trivial_coloring(std::span<const std::uint32_t> transversal, const Hypergraph& h) {
  if (transversal.empty()) throw PreconditionError("trivial_coloring: empty transversal");
  if (!is_t_transversal(transversal, h, 2)) throw PreconditionError("trivial_coloring: T is not a 2-transversal");
  std::vector<std::uint32_t> assignment(h.vertex_count, 0);
  for (auto v : transversal) assignment[v] = 1;
  std::uint32_t next = 2;
  for (auto& a : assignment)
    if (a == 0) a = next++;
  return Coloring(std::move(assignment));
}

std::optional<TrivialityWitness> is_trivial_coloring(const Coloring& c, const Hypergraph& h) {
  if (c.vertex_count() != h.vertex_count) throw PreconditionError("is_trivial_coloring: size mismatch");
  // A 2-transversal has at least two points, and in H(n, k, q) at least
  // 2 theta_{n-k} of them.
  std::uint64_t cutoff = 2;
  if (h.geometry) cutoff = 2 * theta(h.geometry->n - h.geometry->k, h.geometry->q);
  auto classes = c.classes();
  for (std::uint32_t i = 0; i < classes.size(); ++i) {
    if (classes[i].size() < cutoff) continue;
    if (is_t_transversal(classes[i], h, 2)) return TrivialityWitness{i + 1, classes[i]};
  }
  return std::nullopt;
}

std::optional<DisjointPair> monochromatic_disjoint_pair(const Coloring& c, const ProjectiveSpace& space, int k) {
  if (c.vertex_count() != space.num_points()) throw PreconditionError("monochromatic_disjoint_pair: size mismatch");
  if (k < 0 || 2 * (k + 1) > space.n() + 1) return std::nullopt;
  const auto& subs = space.subspaces(k);
  std::vector<std::vector<std::uint32_t>> inside(c.num_colors());
  for (std::uint32_t i = 0; i < subs.size(); ++i) {
    const auto& pts = subs[i].points();
    const std::uint32_t col = c.color(pts.front());
    if (std::all_of(pts.begin(), pts.end(), [&](std::uint32_t v) { return c.color(v) == col; }))
      inside[col - 1].push_back(i);
  }
  for (std::uint32_t col = 0; col < inside.size(); ++col) {
    const auto& list = inside[col];
    for (std::size_t a = 0; a < list.size(); ++a)
      for (std::size_t b = a + 1; b < list.size(); ++b)
        if (!subs[list[a]].mask().intersects(subs[list[b]].mask()))
          return DisjointPair{col + 1, subs[list[a]], subs[list[b]]};
  }
  return std::nullopt;
}

}  // namespace fingeo
