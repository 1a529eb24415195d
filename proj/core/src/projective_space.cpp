#include "fingeo/projective_space.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "fingeo/blocking_sets.hpp"
#include "fingeo/errors.hpp"

namespace fingeo {

__extension__ typedef unsigned __int128 Wide;

std::uint64_t theta(int k, std::uint64_t q) {
  if (k < 0) return 0;
  std::uint64_t sum = 0, power = 1;
  for (int i = 0; i <= k; ++i) {
    sum += power;
    power *= q;
  }
  return sum;
}

std::uint64_t count_subspaces(int n, int m, std::uint64_t q) {
  if (m > n) throw PreconditionError("count_subspaces: m > n");
  if (m < -1) throw PreconditionError("count_subspaces: m < -1");
  // Exact integer evaluation: multiply then divide keeps every partial
  // product a Gaussian binomial, so each division is exact.
  std::uint64_t result = 1;
  for (int i = 0; i <= m; ++i) {
    std::uint64_t num = 1, den = 1;
    for (int j = 0; j < n + 1 - i; ++j) num *= q;
    for (int j = 0; j < i + 1; ++j) den *= q;
    const Wide r = static_cast<Wide>(result) * (num - 1);
    result = static_cast<std::uint64_t>(r / (den - 1));
  }
  return result;
}

std::vector<Vec> rref(const GaloisField& f, std::vector<Vec> rows) {
  if (rows.empty()) return rows;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    const Elem inv = f.inv(rows[rank][c]);
    for (auto& x : rows[rank]) x = f.mul(x, inv);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const Elem factor = rows[r][c];
      for (std::size_t j = 0; j < cols; ++j)
        rows[r][j] = f.sub(rows[r][j], f.mul(factor, rows[rank][j]));
    }
    ++rank;
  }
  rows.resize(rank);
  return rows;
}

std::vector<Vec> null_space(const GaloisField& f, const std::vector<Vec>& rows, std::size_t ncols) {
  const std::vector<Vec> r = rref(f, rows);
  std::vector<std::size_t> pivots;
  std::vector<bool> is_pivot(ncols, false);
  for (const auto& row : r) {
    std::size_t c = 0;
    while (row[c] == 0) ++c;
    pivots.push_back(c);
    is_pivot[c] = true;
  }
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    Vec x(ncols, 0);
    x[free] = 1;
    for (std::size_t i = 0; i < r.size(); ++i) x[pivots[i]] = f.neg(r[i][free]);
    basis.push_back(std::move(x));
  }
  return basis;
}

ProjectiveSpace::ProjectiveSpace(int n, FieldPtr field, SpaceLimits limits)
    : n_(n), field_(std::move(field)), limits_(limits) {
  if (!field_) throw PreconditionError("projective space without a field");
  if (n_ < 2) throw PreconditionError("projective space: n must be >= 2");
  const std::uint64_t q = field_->q();
  const std::uint64_t total = theta(n_, q);
  if (total > limits_.max_points)
    throw LimitExceeded("projective space: " + std::to_string(total) + " points exceed limit " +
                        std::to_string(limits_.max_points));
  num_points_ = static_cast<std::uint32_t>(total);
  offsets_.resize(n_ + 1);
  for (int i = 0; i <= n_; ++i) offsets_[i] = theta(n_ - i - 1, q);

  coords_.reserve(num_points_);
  for (int lead = n_; lead >= 0; --lead) {
    const int free = n_ - lead;
    std::uint64_t count = 1;
    for (int j = 0; j < free; ++j) count *= q;
    for (std::uint64_t v = 0; v < count; ++v) {
      Vec x(n_ + 1, 0);
      x[lead] = 1;
      std::uint64_t rest = v;
      for (int j = n_; j > lead; --j) {
        x[j] = static_cast<Elem>(rest % q);
        rest /= q;
      }
      coords_.push_back(std::move(x));
    }
  }
  subspace_cache_.resize(n_ + 2);
  incidence_cache_.resize(n_ + 2);
}

std::shared_ptr<const ProjectiveSpace> ProjectiveSpace::make(int n, std::uint64_t q, SpaceLimits limits) {
  return std::make_shared<const ProjectiveSpace>(n, GaloisField::of_order(q), limits);
}

std::uint32_t ProjectiveSpace::index_of(std::span<const Elem> v) const {
  if (v.size() != static_cast<std::size_t>(n_ + 1)) throw PreconditionError("index_of: wrong vector length");
  std::size_t lead = 0;
  while (lead < v.size() && v[lead] == 0) ++lead;
  if (lead == v.size()) throw PreconditionError("index_of: zero vector");
  const GaloisField& f = *field_;
  const Elem scale = f.inv(v[lead]);
  const std::uint64_t q = f.q();
  std::uint64_t value = 0;
  for (std::size_t j = lead + 1; j < v.size(); ++j) value = value * q + f.mul(v[j], scale);
  return static_cast<std::uint32_t>(offsets_[lead] + value);
}

std::vector<Point> ProjectiveSpace::enumerate_points() const {
  std::vector<Point> out;
  out.reserve(num_points_);
  for (std::uint32_t i = 0; i < num_points_; ++i) out.push_back({i, coords_[i]});
  return out;
}

Subspace ProjectiveSpace::finish(std::vector<Vec> basis) const {
  const GaloisField& f = *field_;
  const std::uint64_t q = f.q();
  Subspace s;
  s.n_ = n_;
  s.q_ = f.q();
  s.dim_ = static_cast<int>(basis.size()) - 1;
  s.mask_.resize(num_points_);
  const int rows = static_cast<int>(basis.size());
  // Coefficient vectors whose first nonzero entry is 1 give every point
  // once, already normalized because the basis is in RREF.
  Vec coef(rows, 0);
  Vec x(n_ + 1);
  for (int lead = 0; lead < rows; ++lead) {
    const int free = rows - 1 - lead;
    std::uint64_t count = 1;
    for (int j = 0; j < free; ++j) count *= q;
    for (std::uint64_t v = 0; v < count; ++v) {
      std::uint64_t rest = v;
      for (int j = rows - 1; j > lead; --j) {
        coef[j] = static_cast<Elem>(rest % q);
        rest /= q;
      }
      x = basis[lead];
      for (int j = lead + 1; j < rows; ++j) {
        if (coef[j] == 0) continue;
        for (int c = 0; c <= n_; ++c) x[c] = f.add(x[c], f.mul(coef[j], basis[j][c]));
      }
      const std::uint32_t idx = index_of(x);
      s.points_.push_back(idx);
      s.mask_.set(idx);
    }
  }
  std::sort(s.points_.begin(), s.points_.end());
  s.basis_ = std::move(basis);
  return s;
}

void ProjectiveSpace::check(const Subspace& u) const {
  if (u.n_ != n_ || u.q_ != field_->q()) throw PreconditionError("subspace from a different space");
}

Subspace ProjectiveSpace::from_vectors(std::vector<Vec> rows) const {
  for (const auto& r : rows) {
    if (r.size() != static_cast<std::size_t>(n_ + 1)) throw PreconditionError("vector of wrong length");
    for (Elem e : r)
      if (!field_->contains(e)) throw PreconditionError("coordinate outside the field");
  }
  return finish(rref(*field_, std::move(rows)));
}

Subspace ProjectiveSpace::span(std::span<const std::uint32_t> points) const {
  if (points.empty()) throw PreconditionError("span: empty point set");
  std::vector<Vec> rows;
  rows.reserve(points.size());
  for (std::uint32_t p : points) {
    if (p >= num_points_) throw PreconditionError("span: point index out of range");
    rows.push_back(coords_[p]);
  }
  return from_vectors(std::move(rows));
}

Subspace ProjectiveSpace::join(const Subspace& u, const Subspace& v) const {
  check(u);
  check(v);
  std::vector<Vec> rows = u.basis_;
  rows.insert(rows.end(), v.basis_.begin(), v.basis_.end());
  return finish(rref(*field_, std::move(rows)));
}

Subspace ProjectiveSpace::meet(const Subspace& u, const Subspace& v) const {
  check(u);
  check(v);
  const std::size_t cols = n_ + 1;
  // U ∩ V is the common zero set of the annihilators of U and of V.
  std::vector<Vec> annihilators = null_space(*field_, u.basis_, cols);
  const std::vector<Vec> av = null_space(*field_, v.basis_, cols);
  annihilators.insert(annihilators.end(), av.begin(), av.end());
  return finish(rref(*field_, null_space(*field_, annihilators, cols)));
}

bool ProjectiveSpace::incident(std::uint32_t point, const Subspace& u) const {
  check(u);
  if (point >= num_points_) throw PreconditionError("incident: point index out of range");
  return u.mask_.test(point);
}

std::vector<Subspace> ProjectiveSpace::enumerate(int m) const {
  const std::uint64_t q = field_->q();
  const std::uint64_t total = count_subspaces(n_, m, q);
  if (total > limits_.max_subspaces)
    throw LimitExceeded("enumerate_subspaces: " + std::to_string(total) + " subspaces exceed limit " +
                        std::to_string(limits_.max_subspaces));
  std::vector<Subspace> out;
  out.reserve(total);
  if (m < 0) {
    out.push_back(finish({}));
    return out;
  }
  const int rows = m + 1;
  const int cols = n_ + 1;
  std::vector<int> pivots(rows);
  for (int i = 0; i < rows; ++i) pivots[i] = i;
  while (true) {
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::pair<int, int>> free_cells;
    for (int r = 0; r < rows; ++r)
      for (int c = pivots[r] + 1; c < cols; ++c)
        if (!is_pivot[c]) free_cells.emplace_back(r, c);
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < free_cells.size(); ++i) count *= q;
    for (std::uint64_t v = 0; v < count; ++v) {
      std::vector<Vec> basis(rows, Vec(cols, 0));
      for (int r = 0; r < rows; ++r) basis[r][pivots[r]] = 1;
      std::uint64_t rest = v;
      for (const auto& [r, c] : free_cells) {
        basis[r][c] = static_cast<Elem>(rest % q);
        rest /= q;
      }
      out.push_back(finish(std::move(basis)));
    }
    // Next combination of pivot columns.
    int i = rows - 1;
    while (i >= 0 && pivots[i] == cols - rows + i) --i;
    if (i < 0) break;
    ++pivots[i];
    for (int j = i + 1; j < rows; ++j) pivots[j] = pivots[j - 1] + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

const std::vector<Subspace>& ProjectiveSpace::subspaces(int m) const {
  if (m < -1 || m > n_) throw PreconditionError("subspaces: dimension out of range");
  {
    std::lock_guard lock(cache_mu_);
    if (subspace_cache_[m + 1]) return *subspace_cache_[m + 1];
  }
  auto built = std::make_unique<const std::vector<Subspace>>(enumerate(m));
  std::lock_guard lock(cache_mu_);
  if (!subspace_cache_[m + 1]) subspace_cache_[m + 1] = std::move(built);
  return *subspace_cache_[m + 1];
}

const std::vector<std::vector<std::uint32_t>>& ProjectiveSpace::point_incidence(int m) const {
  const auto& subs = subspaces(m);
  {
    std::lock_guard lock(cache_mu_);
    if (incidence_cache_[m + 1]) return *incidence_cache_[m + 1];
  }
  auto table = std::make_unique<std::vector<std::vector<std::uint32_t>>>(num_points_);
  for (std::uint32_t i = 0; i < subs.size(); ++i)
    for (std::uint32_t p : subs[i].points()) (*table)[p].push_back(i);
  std::lock_guard lock(cache_mu_);
  if (!incidence_cache_[m + 1]) incidence_cache_[m + 1] = std::move(table);
  return *incidence_cache_[m + 1];
}

std::vector<Subspace> ProjectiveSpace::extend_once(const Subspace& u) const {
  std::vector<Subspace> out;
  PointMask covered = u.mask_;
  for (std::uint32_t x = 0; x < num_points_; ++x) {
    if (covered.test(x)) continue;
    std::vector<Vec> rows = u.basis_;
    rows.push_back(coords_[x]);
    Subspace w = finish(rref(*field_, std::move(rows)));
    covered |= w.mask_;
    out.push_back(std::move(w));
  }
  return out;
}

std::vector<Subspace> ProjectiveSpace::subspaces_through(const Subspace& u, int m) const {
  check(u);
  if (m <= u.dim_ || m > n_) throw PreconditionError("subspaces_through: need dim U < m <= n");
  std::vector<Subspace> level{u};
  for (int d = u.dim_ + 1; d <= m; ++d) {
    std::set<Subspace> next;
    for (const auto& s : level)
      for (auto& w : extend_once(s)) next.insert(std::move(w));
    level.assign(std::make_move_iterator(next.begin()), std::make_move_iterator(next.end()));
  }
  return level;
}

Subspace ProjectiveSpace::coordinate_subspace(int first, int dim) const {
  if (first < 0 || dim < 0 || first + dim > n_) throw PreconditionError("coordinate_subspace: out of range");
  std::vector<Vec> rows;
  for (int i = first; i <= first + dim; ++i) {
    Vec e(n_ + 1, 0);
    e[i] = 1;
    rows.push_back(std::move(e));
  }
  return finish(std::move(rows));
}

std::vector<Subspace> ProjectiveSpace::disjoint_subspaces(int m, int t) const {
  if (m < 0 || t < 0) throw PreconditionError("disjoint_subspaces: negative parameter");
  if (static_cast<long>(t) * (m + 1) > n_ + 1)
    throw PreconditionError("disjoint_subspaces: infeasible, " + std::to_string(t) + " disjoint " +
                            std::to_string(m) + "-spaces need dimension " + std::to_string(t * (m + 1) - 1));
  std::vector<Subspace> out;
  for (int i = 0; i < t; ++i) out.push_back(coordinate_subspace(i * (m + 1), m));
  return out;
}

WeightedPointSet ProjectiveSpace::project_from_point(std::uint32_t center, const Subspace& hyperplane,
                                                     const WeightedPointSet& set, bool strict) const {
  check(hyperplane);
  if (!set.space().same_space(*this)) throw PreconditionError("project_from_point: set from a different space");
  if (hyperplane.dim_ != n_ - 1) throw PreconditionError("project_from_point: target is not a hyperplane");
  if (center >= num_points_) throw PreconditionError("project_from_point: point index out of range");
  if (hyperplane.contains(center)) throw PreconditionError("project_from_point: center lies in the hyperplane");

  const GaloisField& f = *field_;
  const Vec functional = null_space(f, hyperplane.basis_, n_ + 1).front();
  auto eval = [&](const Vec& x) {
    Elem acc = 0;
    for (int i = 0; i <= n_; ++i) acc = f.add(acc, f.mul(functional[i], x[i]));
    return acc;
  };
  const Vec& pc = coords_[center];
  const Elem at_center = eval(pc);

  WeightedPointSet image(set.space_ptr());
  Vec y(n_ + 1);
  for (std::uint32_t x = 0; x < num_points_; ++x) {
    const std::uint64_t w = set.weight(x);
    if (w == 0) continue;
    if (x == center) {
      if (strict) throw PreconditionError("project_from_point: center carries positive weight");
      continue;
    }
    const Vec& px = coords_[x];
    const Elem lambda = f.div(eval(px), at_center);
    for (int i = 0; i <= n_; ++i) y[i] = f.sub(px[i], f.mul(lambda, pc[i]));
    image.add_weight(index_of(y), w);
  }
  return image;
}

Hypergraph ProjectiveSpace::build_hypergraph(int k) const {
  if (k < 1 || k > n_ - 1) throw PreconditionError("build_hypergraph: need 1 <= k <= n-1");
  Hypergraph h;
  h.vertex_count = num_points_;
  h.geometry = GeometryTag{n_, k, field_->q()};
  for (const auto& s : subspaces(k)) h.edges.push_back(s.points());
  return h;
}

}  // namespace fingeo
