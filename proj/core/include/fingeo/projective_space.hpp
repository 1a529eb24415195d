#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "fingeo/finite_field.hpp"
#include "fingeo/hypergraph.hpp"

namespace fingeo {

using Vec = std::vector<Elem>;
using PointMask = boost::dynamic_bitset<std::uint64_t>;

struct SpaceLimits {
  std::uint64_t max_points = 1'000'000;
  std::uint64_t max_subspaces = 5'000'000;
};

/// Number of points of a k-dimensional projective space of order q,
/// (q^{k+1} - 1) / (q - 1). theta(-1, q) = 0.
std::uint64_t theta(int k, std::uint64_t q);

/// Gaussian binomial [n+1 choose m+1]_q: the number of m-spaces of PG(n,q).
/// m = -1 counts the empty subspace (1).
std::uint64_t count_subspaces(int n, int m, std::uint64_t q);

struct Point {
  std::uint32_t index;
  Vec coords;
};

/// A projective subspace in canonical form. The basis is the reduced
/// row-echelon form of any spanning set; the empty subspace has dim -1.
class Subspace {
 public:
  int dim() const noexcept { return dim_; }
  bool empty() const noexcept { return dim_ < 0; }
  const std::vector<Vec>& basis() const noexcept { return basis_; }
  /// Sorted point indices.
  const std::vector<std::uint32_t>& points() const noexcept { return points_; }
  const PointMask& mask() const noexcept { return mask_; }
  bool contains(std::uint32_t point) const { return mask_.test(point); }
  bool contains(const Subspace& other) const { return other.mask_.is_subset_of(mask_); }

  int ambient_dim() const noexcept { return n_; }
  std::uint32_t order() const noexcept { return q_; }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.n_ == b.n_ && a.q_ == b.q_ && a.basis_ == b.basis_;
  }
  /// Canonical order: lexicographic on the sorted point lists.
  friend bool operator<(const Subspace& a, const Subspace& b) { return a.points_ < b.points_; }

 private:
  friend class ProjectiveSpace;
  int n_ = 0;
  std::uint32_t q_ = 0;
  int dim_ = -1;
  std::vector<Vec> basis_;
  std::vector<std::uint32_t> points_;
  PointMask mask_;
};

class WeightedPointSet;

/// PG(n, q). Points are normalized so that the first nonzero coordinate is 1
/// and indexed in lexicographic order of their coordinate tuples.
class ProjectiveSpace {
 public:
  ProjectiveSpace(int n, FieldPtr field, SpaceLimits limits = {});
  ProjectiveSpace(const ProjectiveSpace&) = delete;
  ProjectiveSpace& operator=(const ProjectiveSpace&) = delete;

  static std::shared_ptr<const ProjectiveSpace> make(int n, std::uint64_t q, SpaceLimits limits = {});

  int n() const noexcept { return n_; }
  const GaloisField& field() const noexcept { return *field_; }
  const FieldPtr& field_ptr() const noexcept { return field_; }
  std::uint32_t q() const noexcept { return field_->q(); }
  std::uint32_t num_points() const noexcept { return num_points_; }
  const SpaceLimits& limits() const noexcept { return limits_; }

  bool same_space(const ProjectiveSpace& other) const noexcept {
    return n_ == other.n_ && *field_ == *other.field_;
  }

  const Vec& coords(std::uint32_t index) const { return coords_.at(index); }
  /// Index of the projective point spanned by a nonzero vector.
  std::uint32_t index_of(std::span<const Elem> v) const;
  std::vector<Point> enumerate_points() const;

  /// All m-spaces in canonical order. Cached; safe to call concurrently.
  const std::vector<Subspace>& subspaces(int m) const;
  /// For each point, the indices (into subspaces(m)) of the m-spaces through it.
  const std::vector<std::vector<std::uint32_t>>& point_incidence(int m) const;

  /// Subspace spanned by arbitrary (possibly dependent) vectors.
  Subspace from_vectors(std::vector<Vec> rows) const;
  Subspace span(std::span<const std::uint32_t> points) const;
  Subspace join(const Subspace& u, const Subspace& v) const;
  Subspace meet(const Subspace& u, const Subspace& v) const;
  bool incident(std::uint32_t point, const Subspace& u) const;

  /// All m-spaces containing u, in canonical order.
  std::vector<Subspace> subspaces_through(const Subspace& u, int m) const;

  /// The subspace spanned by unit vectors e_first .. e_{first+dim}.
  Subspace coordinate_subspace(int first, int dim) const;

  /// t pairwise disjoint m-spaces on disjoint coordinate blocks.
  std::vector<Subspace> disjoint_subspaces(int m, int t) const;

  /// Maps each positively weighted point X != center to the point
  /// <center, X> ∩ hyperplane. With strict = true, positive weight on the
  /// center is an error; otherwise it is dropped.
  WeightedPointSet project_from_point(std::uint32_t center, const Subspace& hyperplane,
                                      const WeightedPointSet& set, bool strict = true) const;

  /// H(n, k, q): points as vertices, k-spaces as hyperedges.
  Hypergraph build_hypergraph(int k) const;

 private:
  Subspace finish(std::vector<Vec> rref_rows) const;
  void check(const Subspace& u) const;
  std::vector<Subspace> enumerate(int m) const;
  std::vector<Subspace> extend_once(const Subspace& u) const;

  int n_;
  FieldPtr field_;
  SpaceLimits limits_;
  std::uint32_t num_points_;
  std::vector<Vec> coords_;
  std::vector<std::uint64_t> offsets_;  // offsets_[i]: first index with leading coordinate i

  mutable std::mutex cache_mu_;
  mutable std::vector<std::unique_ptr<const std::vector<Subspace>>> subspace_cache_;
  mutable std::vector<std::unique_ptr<const std::vector<std::vector<std::uint32_t>>>> incidence_cache_;
};

using SpacePtr = std::shared_ptr<const ProjectiveSpace>;

/// Row-reduces in place and returns the nonzero rows in reduced row-echelon form.
std::vector<Vec> rref(const GaloisField& f, std::vector<Vec> rows);

/// Basis of the right null space {x : A x = 0} of the given rows (row length = ncols).
std::vector<Vec> null_space(const GaloisField& f, const std::vector<Vec>& rows, std::size_t ncols);

}  // namespace fingeo
