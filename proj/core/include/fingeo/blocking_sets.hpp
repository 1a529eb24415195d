#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "fingeo/projective_space.hpp"
#include "fingeo/rational.hpp"

namespace fingeo {

/// A multiset of points of PG(n, q). Zero-weight points are not in the set;
/// the size is the total weight.
class WeightedPointSet {
 public:
  explicit WeightedPointSet(SpacePtr space);
  WeightedPointSet(SpacePtr space, std::vector<std::uint32_t> weights);

  const ProjectiveSpace& space() const noexcept { return *space_; }
  const SpacePtr& space_ptr() const noexcept { return space_; }
  const std::vector<std::uint32_t>& weights() const noexcept { return weights_; }
  std::uint32_t weight(std::uint32_t point) const { return weights_.at(point); }
  void set_weight(std::uint32_t point, std::uint32_t w) { weights_.at(point) = w; }
  void add_weight(std::uint32_t point, std::uint64_t w);

  std::uint64_t size() const noexcept;
  /// Points of positive weight, ascending.
  std::vector<std::uint32_t> support() const;
  /// |U ∩ B| counted with weights.
  std::uint64_t weight_on(const Subspace& u) const;
  std::uint64_t weight_on(std::span<const std::uint32_t> points) const;

  friend bool operator==(const WeightedPointSet& a, const WeightedPointSet& b) {
    return a.space_->same_space(*b.space_) && a.weights_ == b.weights_;
  }

 private:
  SpacePtr space_;
  std::vector<std::uint32_t> weights_;
};

/// Result of a scan over k-spaces: ok, or the first violating k-space in
/// canonical order.
struct ScanResult {
  bool ok = true;
  std::optional<Subspace> witness;
  explicit operator bool() const noexcept { return ok; }
};

/// Every k-space meets B in at least t points (with weights).
ScanResult is_t_fold_blocking(const WeightedPointSet& b, std::uint64_t t, int k);

/// Positive-weight points on some k-space meeting B in exactly t points.
/// Requires B to be t-fold blocking.
std::vector<std::uint32_t> essential_points(const WeightedPointSet& b, std::uint64_t t, int k);
bool is_minimal(const WeightedPointSet& b, std::uint64_t t, int k);

/// Walks `order` once, decrementing each non-essential point until it is
/// essential or has weight zero. The result is minimal and pointwise <= B.
WeightedPointSet minimal_reduction(const WeightedPointSet& b, std::uint64_t t, int k,
                                   std::span<const std::uint32_t> order);

/// Size bound below which a weighted t-fold blocking set (blocking the
/// k-spaces) contains a unique minimal one: (t+1) q^{n-k} + theta_{n-k-1}.
std::uint64_t unique_minimal_bound(const ProjectiveSpace& space, std::uint64_t t, int k);

/// Every k-space meets B in t (mod p) points; p must be the characteristic.
ScanResult is_t_mod_p_set(const WeightedPointSet& b, std::uint64_t t, int k, std::uint32_t p);

struct ModExponentReport {
  /// Largest e with every k-space meeting B in t (mod p^e) points.
  unsigned e = 0;
  /// True when e stopped at the cap where p^e exceeds every intersection.
  bool capped = false;
  /// t q^{n-k} + q^{n-k} / (p^e + 1) - 1.
  Rational size_lower_bound;
};

/// Requires B to be a t (mod p) set.
ModExponentReport largest_mod_exponent(const WeightedPointSet& b, std::uint64_t t, int k);

enum class LineClass { t_secant, long_line, full };

struct SecantClassification {
  std::uint64_t t = 0;
  std::uint32_t p = 0;
  std::vector<LineClass> classes;  // indexed like space.subspaces(1)
  std::vector<std::uint64_t> line_weights;
  std::uint64_t t_secants = 0;
  std::uint64_t h1 = 0;  // full lines
  std::uint64_t h2 = 0;  // long lines
  bool mod_p = false;    // every line meets B in t (mod p)
  /// Minimal s with a long line of weight s p + t; only when mod_p holds
  /// and a long line exists.
  std::optional<std::int64_t> s_min;
  std::vector<std::uint32_t> outer_points;
};

SecantClassification classify_lines(const WeightedPointSet& b, std::uint64_t t);

/// |B| - t theta_{n-k} for a t-fold blocking set of the k-spaces with t <= q.
/// Throws PreconditionError when t > q or B is not t-fold blocking.
std::uint64_t folklore_margin(const WeightedPointSet& b, std::uint64_t t, int k);

/// Weight of each point = sum of multiplicities of the subspaces through it.
WeightedPointSet construct_union(const SpacePtr& space,
                                 std::span<const std::pair<Subspace, std::uint32_t>> parts);

/// Writes B as a weighted union of `count` m-spaces (repetition allowed),
/// returned in nondecreasing canonical order; nullopt when impossible.
std::optional<std::vector<Subspace>> union_decomposition(const WeightedPointSet& b, int m, std::uint64_t count);

/// An (n-k+1)-space with weight one: a (q+1)-fold blocking set of the
/// k-spaces of size theta_{n-k+1}.
WeightedPointSet construct_qplus1_fold(const SpacePtr& space, int k);

struct TModPQuery {
  int k = 1;
  std::uint64_t t = 1;
  std::uint64_t max_size = 0;
  std::uint32_t weight_cap = 0;
  /// Exhaustive walks are refused above this many kernel elements.
  std::uint64_t kernel_limit = 1'594'323;  // 3^13
  /// When set and the kernel is too large, draw this many uniform kernel
  /// elements instead of failing.
  std::optional<std::uint64_t> samples;
  std::uint64_t seed = 0;
};

struct TModPEnumeration {
  std::vector<WeightedPointSet> sets;  // sorted by weight vector
  bool exhaustive = true;
  bool consistent = true;  // the mod-p system has a solution at all
  std::size_t rank = 0;
  std::size_t kernel_dim = 0;
  std::uint64_t classes_walked = 0;
};

/// All weight functions 0 <= w <= weight_cap with sum <= max_size meeting
/// every k-space in t (mod p), via particular solution + GF(p) kernel of
/// the k-space/point incidence matrix. Requires a prime field and
/// weight_cap <= p - 1.
TModPEnumeration enumerate_t_mod_p_sets(const SpacePtr& space, const TModPQuery& query);

}  // namespace fingeo
