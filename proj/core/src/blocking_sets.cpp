#include "fingeo/blocking_sets.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <set>
#include <string>

#include "fingeo/errors.hpp"

namespace fingeo {
namespace {

void check_k(const ProjectiveSpace& s, int k, const char* what) {
  if (k < 1 || k > s.n() - 1)
    throw PreconditionError(std::string(what) + ": k must satisfy 1 <= k <= n-1");
}

std::vector<std::uint64_t> subspace_sums(const WeightedPointSet& b, int k) {
  const auto& subs = b.space().subspaces(k);
  std::vector<std::uint64_t> sums(subs.size());
  for (std::size_t i = 0; i < subs.size(); ++i) sums[i] = b.weight_on(subs[i]);
  return sums;
}

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

WeightedPointSet::WeightedPointSet(SpacePtr space) : space_(std::move(space)) {
  if (!space_) throw PreconditionError("weighted point set without a space");
  weights_.assign(space_->num_points(), 0);
}

WeightedPointSet::WeightedPointSet(SpacePtr space, std::vector<std::uint32_t> weights)
    : space_(std::move(space)), weights_(std::move(weights)) {
  if (!space_) throw PreconditionError("weighted point set without a space");
  if (weights_.size() != space_->num_points())
    throw PreconditionError("weighted point set: expected " + std::to_string(space_->num_points()) +
                            " weights, got " + std::to_string(weights_.size()));
}

void WeightedPointSet::add_weight(std::uint32_t point, std::uint64_t w) {
  const std::uint64_t next = static_cast<std::uint64_t>(weights_.at(point)) + w;
  if (next > std::numeric_limits<std::uint32_t>::max()) throw LimitExceeded("point weight overflow");
  weights_[point] = static_cast<std::uint32_t>(next);
}

std::uint64_t WeightedPointSet::size() const noexcept {
  return std::accumulate(weights_.begin(), weights_.end(), std::uint64_t{0});
}

std::vector<std::uint32_t> WeightedPointSet::support() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < weights_.size(); ++i)
    if (weights_[i] > 0) out.push_back(i);
  return out;
}

std::uint64_t WeightedPointSet::weight_on(std::span<const std::uint32_t> points) const {
  std::uint64_t s = 0;
  for (auto p : points) s += weights_[p];
  return s;
}

std::uint64_t WeightedPointSet::weight_on(const Subspace& u) const {
  if (u.ambient_dim() != space_->n() || u.order() != space_->q())
    throw PreconditionError("weight_on: subspace from a different space");
  return weight_on(u.points());
}

ScanResult is_t_fold_blocking(const WeightedPointSet& b, std::uint64_t t, int k) {
  check_k(b.space(), k, "is_t_fold_blocking");
  for (const auto& u : b.space().subspaces(k))
    if (b.weight_on(u) < t) return {false, u};
  return {};
}

std::vector<std::uint32_t> essential_points(const WeightedPointSet& b, std::uint64_t t, int k) {
  if (!is_t_fold_blocking(b, t, k)) throw PreconditionError("essential_points: set is not t-fold blocking");
  const auto sums = subspace_sums(b, k);
  const auto& through = b.space().point_incidence(k);
  std::vector<std::uint32_t> out;
  for (std::uint32_t p = 0; p < b.weights().size(); ++p) {
    if (b.weight(p) == 0) continue;
    for (auto s : through[p])
      if (sums[s] == t) {
        out.push_back(p);
        break;
      }
  }
  return out;
}

bool is_minimal(const WeightedPointSet& b, std::uint64_t t, int k) {
  return essential_points(b, t, k).size() == b.support().size();
}

WeightedPointSet minimal_reduction(const WeightedPointSet& b, std::uint64_t t, int k,
                                   std::span<const std::uint32_t> order) {
  if (!is_t_fold_blocking(b, t, k)) throw PreconditionError("minimal_reduction: set is not t-fold blocking");
  const std::uint32_t npts = b.space().num_points();
  std::vector<bool> seen(npts, false);
  std::vector<std::uint32_t> walk;
  walk.reserve(npts);
  for (auto p : order) {
    if (p >= npts || seen[p]) throw PreconditionError("minimal_reduction: order must list distinct points");
    seen[p] = true;
    walk.push_back(p);
  }
  for (std::uint32_t p = 0; p < npts; ++p)
    if (!seen[p]) walk.push_back(p);

  WeightedPointSet out = b;
  auto sums = subspace_sums(b, k);
  const auto& through = b.space().point_incidence(k);
  // A k-space with sum exactly t only contains essential points, so it is
  // never touched again: one pass suffices.
  for (auto p : walk) {
    while (out.weight(p) > 0) {
      const bool essential =
          std::any_of(through[p].begin(), through[p].end(), [&](std::uint32_t s) { return sums[s] == t; });
      if (essential) break;
      out.set_weight(p, out.weight(p) - 1);
      for (auto s : through[p]) --sums[s];
    }
  }
  return out;
}

std::uint64_t unique_minimal_bound(const ProjectiveSpace& space, std::uint64_t t, int k) {
  check_k(space, k, "unique_minimal_bound");
  const int blocking_dim = space.n() - k;
  return (t + 1) * ipow(space.q(), blocking_dim) + theta(blocking_dim - 1, space.q());
}

ScanResult is_t_mod_p_set(const WeightedPointSet& b, std::uint64_t t, int k, std::uint32_t p) {
  check_k(b.space(), k, "is_t_mod_p_set");
  if (p != b.space().field().p())
    throw PreconditionError("is_t_mod_p_set: p = " + std::to_string(p) + " is not the characteristic " +
                            std::to_string(b.space().field().p()));
  for (const auto& u : b.space().subspaces(k))
    if (b.weight_on(u) % p != t % p) return {false, u};
  return {};
}

ModExponentReport largest_mod_exponent(const WeightedPointSet& b, std::uint64_t t, int k) {
  const std::uint32_t p = b.space().field().p();
  if (!is_t_mod_p_set(b, t, k, p)) throw PreconditionError("largest_mod_exponent: not a t (mod p) set");
  const auto sums = subspace_sums(b, k);
  std::uint64_t g = 0, top = t;
  for (auto s : sums) {
    const std::uint64_t diff = s > t ? s - t : t - s;
    g = std::gcd(g, diff);
    top = std::max(top, s);
  }
  ModExponentReport r;
  if (g == 0) {
    r.capped = true;
    std::uint64_t pe = 1;
    while (pe <= top) {
      pe *= p;
      ++r.e;
    }
  } else {
    while (g % p == 0) {
      g /= p;
      ++r.e;
    }
  }
  const BigInt qpow = BigInt(ipow(b.space().q(), b.space().n() - k));
  BigInt pe = 1;
  for (unsigned i = 0; i < r.e; ++i) pe *= p;
  r.size_lower_bound = Rational(BigInt(t) * qpow) + Rational(qpow, pe + 1) - 1;
  return r;
}

SecantClassification classify_lines(const WeightedPointSet& b, std::uint64_t t) {
  SecantClassification c;
  c.t = t;
  c.p = b.space().field().p();
  const auto& lines = b.space().subspaces(1);
  c.classes.reserve(lines.size());
  c.mod_p = true;
  std::optional<std::int64_t> smin;
  for (const auto& line : lines) {
    const std::uint64_t w = b.weight_on(line);
    c.line_weights.push_back(w);
    if (w % c.p != t % c.p) c.mod_p = false;
    if (w == t) {
      c.classes.push_back(LineClass::t_secant);
      ++c.t_secants;
    } else if (std::all_of(line.points().begin(), line.points().end(),
                           [&](std::uint32_t x) { return b.weight(x) > 0; })) {
      c.classes.push_back(LineClass::full);
      ++c.h1;
    } else {
      c.classes.push_back(LineClass::long_line);
      ++c.h2;
    }
  }
  if (c.mod_p) {
    for (std::size_t i = 0; i < lines.size(); ++i) {
      if (c.classes[i] != LineClass::long_line) continue;
      const auto s = (static_cast<std::int64_t>(c.line_weights[i]) - static_cast<std::int64_t>(t)) /
                     static_cast<std::int64_t>(c.p);
      if (!smin || s < *smin) smin = s;
    }
  }
  c.s_min = smin;
  for (std::uint32_t x = 0; x < b.weights().size(); ++x)
    if (b.weight(x) == 0) c.outer_points.push_back(x);
  return c;
}

std::uint64_t folklore_margin(const WeightedPointSet& b, std::uint64_t t, int k) {
  check_k(b.space(), k, "folklore_margin");
  if (t > b.space().q())
    throw PreconditionError("folklore bound requires t <= q (t = " + std::to_string(t) +
                            ", q = " + std::to_string(b.space().q()) + ")");
  if (!is_t_fold_blocking(b, t, k)) throw PreconditionError("folklore bound: set is not t-fold blocking");
  const std::uint64_t bound = t * theta(b.space().n() - k, b.space().q());
  const std::uint64_t size = b.size();
  if (size < bound) throw std::logic_error("folklore bound violated: size " + std::to_string(size));
  return size - bound;
}

WeightedPointSet construct_union(const SpacePtr& space,
                                 std::span<const std::pair<Subspace, std::uint32_t>> parts) {
  WeightedPointSet out(space);
  for (const auto& [u, mult] : parts) {
    if (u.ambient_dim() != space->n() || u.order() != space->q())
      throw PreconditionError("construct_union: subspace from a different space");
    for (auto p : u.points()) out.add_weight(p, mult);
  }
  return out;
}

namespace {

bool peel(std::vector<std::uint32_t>& w, const std::vector<Subspace>& subs, std::size_t from, std::uint64_t left,
          std::vector<std::size_t>& picked) {
  if (left == 0) return std::all_of(w.begin(), w.end(), [](std::uint32_t x) { return x == 0; });
  for (std::size_t i = from; i < subs.size(); ++i) {
    const auto& pts = subs[i].points();
    if (!std::all_of(pts.begin(), pts.end(), [&](std::uint32_t v) { return w[v] > 0; })) continue;
    for (auto v : pts) --w[v];
    picked.push_back(i);
    if (peel(w, subs, i, left - 1, picked)) return true;
    picked.pop_back();
    for (auto v : pts) ++w[v];
  }
  return false;
}

}  // namespace

std::optional<std::vector<Subspace>> union_decomposition(const WeightedPointSet& b, int m, std::uint64_t count) {
  if (m < 0 || m > b.space().n()) throw PreconditionError("union_decomposition: bad dimension");
  const std::uint64_t per = theta(m, b.space().q());
  if (b.size() != count * per) return std::nullopt;
  const auto& subs = b.space().subspaces(m);
  std::vector<std::uint32_t> w = b.weights();
  std::vector<std::size_t> picked;
  if (!peel(w, subs, 0, count, picked)) return std::nullopt;
  std::vector<Subspace> out;
  for (auto i : picked) out.push_back(subs[i]);
  return out;
}

WeightedPointSet construct_qplus1_fold(const SpacePtr& space, int k) {
  check_k(*space, k, "construct_qplus1_fold");
  const std::pair<Subspace, std::uint32_t> part{space->coordinate_subspace(0, space->n() - k + 1), 1};
  return construct_union(space, std::span(&part, 1));
}

TModPEnumeration enumerate_t_mod_p_sets(const SpacePtr& space, const TModPQuery& query) {
  const GaloisField& f = space->field();
  if (f.h() != 1) throw PreconditionError("enumerate_t_mod_p_sets: requires a prime field");
  check_k(*space, query.k, "enumerate_t_mod_p_sets");
  const std::uint32_t p = f.p();
  if (query.weight_cap > p - 1)
    throw PreconditionError("enumerate_t_mod_p_sets: weight_cap must be <= p-1 (residue representatives)");

  const auto& subs = space->subspaces(query.k);
  const std::size_t npts = space->num_points();
  const Elem rhs = f.from_int(static_cast<std::int64_t>(query.t % p));
  std::vector<Vec> system;
  system.reserve(subs.size());
  for (const auto& u : subs) {
    Vec row(npts + 1, 0);
    for (auto x : u.points()) row[x] = 1;
    row[npts] = rhs;
    system.push_back(std::move(row));
  }
  const std::vector<Vec> reduced = rref(f, std::move(system));

  TModPEnumeration result;
  result.rank = reduced.size();
  std::vector<std::size_t> pivots;
  std::vector<bool> is_pivot(npts, false);
  for (const auto& row : reduced) {
    std::size_t c = 0;
    while (row[c] == 0) ++c;
    if (c == npts) {
      result.consistent = false;
      result.rank -= 1;
      return result;
    }
    pivots.push_back(c);
    is_pivot[c] = true;
  }

  Vec particular(npts, 0);
  for (std::size_t i = 0; i < reduced.size(); ++i) particular[pivots[i]] = reduced[i][npts];
  std::vector<Vec> kernel;
  for (std::size_t j = 0; j < npts; ++j) {
    if (is_pivot[j]) continue;
    Vec x(npts, 0);
    x[j] = 1;
    for (std::size_t i = 0; i < reduced.size(); ++i) x[pivots[i]] = f.neg(reduced[i][j]);
    kernel.push_back(std::move(x));
  }
  result.kernel_dim = kernel.size();

  bool too_large = false;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < kernel.size(); ++i) {
    if (total > query.kernel_limit / p + 1) {
      too_large = true;
      break;
    }
    total *= p;
  }
  too_large = too_large || total > query.kernel_limit;

  std::set<std::vector<std::uint32_t>> found;
  auto accept = [&](const Vec& w) {
    std::uint64_t size = 0;
    for (Elem x : w) {
      if (x > query.weight_cap) return;
      size += x;
    }
    if (size > query.max_size) return;
    found.emplace(w.begin(), w.end());
  };

  if (too_large) {
    if (!query.samples)
      throw KernelTooLarge("enumerate_t_mod_p_sets: kernel of dimension " + std::to_string(kernel.size()) +
                           " over GF(" + std::to_string(p) + ") exceeds the walk limit; use sampling mode");
    result.exhaustive = false;
    std::mt19937_64 rng(query.seed);
    std::uniform_int_distribution<std::uint32_t> digit(0, p - 1);
    for (std::uint64_t s = 0; s < *query.samples; ++s) {
      Vec w = particular;
      for (const auto& kv : kernel) {
        const Elem c = digit(rng);
        if (c == 0) continue;
        for (std::size_t x = 0; x < npts; ++x) w[x] = f.add(w[x], f.mul(c, kv[x]));
      }
      accept(w);
      ++result.classes_walked;
    }
  } else {
    // Mixed-radix counter over kernel coefficients. Incrementing digit i
    // and wrapping digits below it adds kernel[i] + sum_{j<i} kernel[j]
    // (a wrap from p-1 to 0 adds one more copy mod p).
    std::vector<std::uint32_t> digits(kernel.size(), 0);
    Vec w = particular;
    for (std::uint64_t step = 0; step < total; ++step) {
      accept(w);
      ++result.classes_walked;
      std::size_t i = 0;
      while (i < digits.size() && digits[i] == p - 1) {
        digits[i] = 0;
        for (std::size_t x = 0; x < npts; ++x) w[x] = f.add(w[x], kernel[i][x]);
        ++i;
      }
      if (i == digits.size()) break;
      ++digits[i];
      for (std::size_t x = 0; x < npts; ++x) w[x] = f.add(w[x], kernel[i][x]);
    }
  }
  for (const auto& w : found) result.sets.emplace_back(space, w);
  return result;
}

}  // namespace fingeo
