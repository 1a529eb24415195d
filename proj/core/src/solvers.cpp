#include "fingeo/solvers.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "fingeo/errors.hpp"

namespace fingeo {

std::string to_string(ProofStatus s) {
  switch (s) {
    case ProofStatus::optimal: return "optimal";
    case ProofStatus::bound_only: return "bound_only";
    case ProofStatus::timeout: return "timeout";
  }
  return "unknown";
}

namespace {

using Mask = std::uint64_t;
constexpr std::uint64_t kInfeasible = std::numeric_limits<std::uint64_t>::max();

struct NodeBudget {
  std::uint64_t nodes = 0;
  std::uint64_t limit = 0;
  bool aborted = false;
  bool tick() {
    if (++nodes > limit) aborted = true;
    return !aborted;
  }
};

Mask bit(std::uint32_t v) { return Mask{1} << v; }

std::vector<std::uint32_t> mask_to_list(Mask m) {
  std::vector<std::uint32_t> out;
  while (m) {
    out.push_back(static_cast<std::uint32_t>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

std::vector<Mask> edge_masks(const Hypergraph& h) {
  std::vector<Mask> out;
  out.reserve(h.edges.size());
  for (const auto& e : h.edges) {
    Mask m = 0;
    for (auto v : e) m |= bit(v);
    out.push_back(m);
  }
  return out;
}

// Geometric lower bound: a t-fold blocking set of the k-spaces of PG(n, q)
// with t <= q has at least t theta_{n-k} points.
std::uint64_t folklore_lower(const Hypergraph& h, std::uint64_t t) {
  if (!h.geometry || t > h.geometry->q) return 0;
  return t * theta(h.geometry->n - h.geometry->k, h.geometry->q);
}

// Union of t pairwise disjoint (n-k)-spaces, when they fit.
std::optional<std::vector<std::uint32_t>> geometric_construction(const Hypergraph& h, std::uint64_t t) {
  if (!h.geometry) return std::nullopt;
  const auto& g = *h.geometry;
  const int m = g.n - g.k;
  if (t * static_cast<std::uint64_t>(m + 1) > static_cast<std::uint64_t>(g.n + 1)) return std::nullopt;
  auto space = ProjectiveSpace::make(g.n, g.q);
  std::vector<std::uint32_t> pts;
  for (const auto& u : space->disjoint_subspaces(m, static_cast<int>(t)))
    pts.insert(pts.end(), u.points().begin(), u.points().end());
  std::sort(pts.begin(), pts.end());
  if (!is_t_transversal(pts, h, t)) return std::nullopt;
  return pts;
}

class TauSolver {
 public:
  TauSolver(const Hypergraph& h, std::uint64_t t, std::uint64_t node_limit)
      : nv_(h.vertex_count), t_(t), edges_(edge_masks(h)) {
    budget_.limit = node_limit;
    all_ = nv_ == 64 ? ~Mask{0} : bit(nv_) - 1;
    vertex_edges_.resize(nv_);
    for (std::size_t e = 0; e < h.edges.size(); ++e)
      for (auto v : h.edges[e]) vertex_edges_[v].push_back(static_cast<std::uint32_t>(e));
  }

  std::uint64_t deficit(std::size_t e, Mask s) const {
    const std::uint64_t hit = std::popcount(edges_[e] & s);
    return hit >= t_ ? 0 : t_ - hit;
  }

  // Lower bound on the number of further vertices needed, given chosen set
  // s and forbidden set f.
  std::uint64_t bound(Mask s, Mask f) const {
    const Mask avail = all_ & ~s & ~f;
    std::uint64_t maxd = 0, sum = 0, pack = 0;
    Mask used = 0;
    std::vector<std::uint32_t> deg(nv_, 0);
    bool any = false;
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      const std::uint64_t d = deficit(e, s);
      if (d == 0) continue;
      const Mask a = edges_[e] & avail;
      if (static_cast<std::uint64_t>(std::popcount(a)) < d) return kInfeasible;
      any = true;
      maxd = std::max(maxd, d);
      sum += d;
      if ((a & used) == 0) {
        pack += d;
        used |= a;
      }
      for (Mask m = a; m; m &= m - 1) ++deg[std::countr_zero(m)];
    }
    if (!any) return 0;
    const std::uint64_t maxdeg = *std::max_element(deg.begin(), deg.end());
    return std::max({maxd, pack, (sum + maxdeg - 1) / maxdeg});
  }

  // Greedy cover, then drop redundant vertices from the top.
  Mask greedy() const {
    Mask s = 0;
    for (;;) {
      std::vector<std::uint64_t> gain(nv_, 0);
      bool any = false;
      for (std::size_t e = 0; e < edges_.size(); ++e) {
        if (deficit(e, s) == 0) continue;
        any = true;
        for (Mask m = edges_[e] & ~s; m; m &= m - 1) ++gain[std::countr_zero(m)];
      }
      if (!any) break;
      const auto best = std::max_element(gain.begin(), gain.end()) - gain.begin();
      s |= bit(static_cast<std::uint32_t>(best));
    }
    for (int v = static_cast<int>(nv_) - 1; v >= 0; --v) {
      const Mask trial = s & ~bit(static_cast<std::uint32_t>(v));
      if (!(s & bit(static_cast<std::uint32_t>(v)))) continue;
      bool ok = true;
      for (auto e : vertex_edges_[v])
        if (deficit(e, trial) != 0) { ok = false; break; }
      if (ok) s = trial;
    }
    return s;
  }

  // Edge-branching branch and bound for the optimum value.
  void branch(Mask s, Mask f) {
    if (!budget_.tick()) return;
    const std::uint64_t lb = bound(s, f);
    if (lb == kInfeasible) return;
    const std::uint64_t size = std::popcount(s);
    if (size + lb >= best_) return;
    if (lb == 0) {
      best_ = size;
      best_mask_ = s;
      return;
    }
    const Mask avail = all_ & ~s & ~f;
    std::size_t pick = 0;
    std::int64_t slack = std::numeric_limits<std::int64_t>::max();
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      const std::uint64_t d = deficit(e, s);
      if (d == 0) continue;
      const std::int64_t sl = std::popcount(edges_[e] & avail) - static_cast<std::int64_t>(d);
      if (sl < slack) {
        slack = sl;
        pick = e;
      }
    }
    Mask tried = 0;
    for (Mask m = edges_[pick] & avail; m && !budget_.aborted; m &= m - 1) {
      const Mask v = m & (~m + 1);
      branch(s | v, f | tried);
      tried |= v;
    }
  }

  // Include-first scan over vertices in ascending order: the first set of
  // size <= budget found is the lexicographically least.
  bool lex_search(std::uint32_t budget, Mask& found) {
    hit_.assign(edges_.size(), 0);
    left_.assign(edges_.size(), 0);
    for (std::size_t e = 0; e < edges_.size(); ++e) left_[e] = std::popcount(edges_[e]);
    suffix_deg_.assign(nv_ + 1, 0);
    for (int v = static_cast<int>(nv_) - 1; v >= 0; --v)
      suffix_deg_[v] = std::max<std::uint64_t>(suffix_deg_[v + 1], vertex_edges_[v].size());
    return lex(0, 0, budget, found);
  }

  NodeBudget budget_;
  std::uint64_t best_ = kInfeasible;
  Mask best_mask_ = 0;
  Mask all_ = 0;

 private:
  bool lex(std::uint32_t i, Mask s, std::uint32_t rem, Mask& found) {
    if (!budget_.tick()) return false;
    std::uint64_t sum = 0;
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      const std::uint64_t d = hit_[e] >= t_ ? 0 : t_ - hit_[e];
      if (d > rem || d > left_[e]) return false;
      sum += d;
    }
    if (sum == 0) {
      found = s;
      return true;
    }
    if (i == nv_ || sum > rem * suffix_deg_[i]) return false;
    for (auto e : vertex_edges_[i]) --left_[e];
    bool ok = false;
    if (rem > 0) {
      for (auto e : vertex_edges_[i]) ++hit_[e];
      ok = lex(i + 1, s | bit(i), rem - 1, found);
      for (auto e : vertex_edges_[i]) --hit_[e];
    }
    if (!ok && !budget_.aborted) ok = lex(i + 1, s, rem, found);
    for (auto e : vertex_edges_[i]) ++left_[e];
    return ok;
  }

  std::uint32_t nv_;
  std::uint64_t t_;
  std::vector<Mask> edges_;
  std::vector<std::vector<std::uint32_t>> vertex_edges_;
  std::vector<std::uint64_t> hit_, left_, suffix_deg_;
};

void check_tau_input(const Hypergraph& h, std::uint64_t t) {
  if (t == 0) throw PreconditionError("exact_tau: t must be positive");
  for (std::size_t e = 0; e < h.edges.size(); ++e)
    if (h.edges[e].size() < t)
      throw PreconditionError("exact_tau: infeasible, edge " + std::to_string(e) + " has " +
                              std::to_string(h.edges[e].size()) + " < t vertices");
}

}  // namespace

SolveResult exact_tau(const Hypergraph& h, std::uint64_t t, const SolveLimits& limits) {
  check_tau_input(h, t);
  SolveResult r;
  const std::uint64_t folk = folklore_lower(h, t);
  const auto construction = geometric_construction(h, t);

  if (h.vertex_count > std::min<std::uint32_t>(limits.tau_vertices, 64)) {
    r.status = ProofStatus::bound_only;
    r.lower = std::max<std::uint64_t>(folk, h.edges.empty() ? 0 : t);
    if (construction) {
      r.transversal = *construction;
    } else {
      r.transversal.resize(h.edges.empty() ? 0 : h.vertex_count);
      for (std::uint32_t v = 0; v < r.transversal.size(); ++v) r.transversal[v] = v;
    }
    r.upper = r.objective = r.transversal.size();
    return r;
  }

  TauSolver solver(h, t, limits.node_limit);
  Mask incumbent = solver.greedy();
  if (construction && construction->size() < static_cast<std::size_t>(std::popcount(incumbent))) {
    incumbent = 0;
    for (auto v : *construction) incumbent |= bit(v);
  }
  solver.best_ = std::popcount(incumbent);
  solver.best_mask_ = incumbent;
  const std::uint64_t root = std::max(solver.bound(0, 0), folk);
  if (root < solver.best_) solver.branch(0, 0);

  if (solver.budget_.aborted) {
    r.status = ProofStatus::timeout;
    r.lower = root;
    r.upper = r.objective = solver.best_;
    r.transversal = mask_to_list(solver.best_mask_);
    r.nodes = solver.budget_.nodes;
    return r;
  }

  const auto opt = static_cast<std::uint32_t>(solver.best_);
  Mask least = solver.best_mask_;
  solver.lex_search(opt, least);
  r.nodes = solver.budget_.nodes;
  if (solver.budget_.aborted) {
    // Optimum proven but the least witness was not reached; keep the known one.
    least = solver.best_mask_;
  }
  r.lower = r.upper = r.objective = opt;
  r.transversal = mask_to_list(least);
  if (transversal_violation(r.transversal, h, t)) throw std::logic_error("exact_tau: witness failed verification");
  return r;
}

namespace {

using Labels = std::vector<std::uint8_t>;

class UcnSolver {
 public:
  UcnSolver(const Hypergraph& h, std::uint64_t node_limit) : h_(h) { budget_.limit = node_limit; }

  // Classes met by the first rainbow edge, or nullopt when proper.
  std::optional<Mask> first_rainbow(const Labels& lab) const {
    for (const auto& e : h_.edges) {
      Mask seen = 0;
      bool rainbow = true;
      for (auto v : e) {
        const Mask b = bit(lab[v]);
        if (seen & b) {
          rainbow = false;
          break;
        }
        seen |= b;
      }
      if (rainbow) return seen;
    }
    return std::nullopt;
  }

  // Rainbow edges with pairwise disjoint class sets need one merge each.
  std::uint64_t packing(const Labels& lab) const {
    Mask used = 0;
    std::uint64_t count = 0;
    for (const auto& e : h_.edges) {
      Mask seen = 0;
      bool rainbow = true;
      for (auto v : e) {
        const Mask b = bit(lab[v]);
        if (seen & b) {
          rainbow = false;
          break;
        }
        seen |= b;
      }
      if (rainbow && !(seen & used)) {
        used |= seen;
        ++count;
      }
    }
    return count;
  }

  // Collects every proper coloring reachable with at most `rem` merges and
  // keeps the lexicographically least.
  void search(const Labels& lab, std::uint32_t rem) {
    if (!budget_.tick()) return;
    const auto classes = first_rainbow(lab);
    if (!classes) {
      if (!best_ || lab < *best_) best_ = lab;
      return;
    }
    if (rem == 0 || packing(lab) > rem) return;
    const auto ids = mask_to_list(*classes);
    for (std::size_t i = 0; i < ids.size() && !budget_.aborted; ++i)
      for (std::size_t j = i + 1; j < ids.size() && !budget_.aborted; ++j) {
        Labels next = lab;
        const auto a = static_cast<std::uint8_t>(ids[i]);
        const auto b = static_cast<std::uint8_t>(ids[j]);
        for (auto& l : next) {
          if (l == b) l = a;
          else if (l > b) --l;
        }
        if (!seen_.insert(std::string(next.begin(), next.end())).second) continue;
        search(next, rem - 1);
      }
  }

  bool solve_depth(std::uint32_t depth, const Labels& start) {
    seen_.clear();
    best_.reset();
    search(start, depth);
    return best_.has_value();
  }

  NodeBudget budget_;
  std::optional<Labels> best_;

 private:
  const Hypergraph& h_;
  std::unordered_set<std::string> seen_;
};

Coloring from_labels(const Labels& lab) {
  std::vector<std::uint32_t> a(lab.begin(), lab.end());
  return Coloring::canonical(a);
}

std::uint64_t disjoint_edge_packing(const Hypergraph& h) {
  std::vector<bool> used(h.vertex_count, false);
  std::uint64_t count = 0;
  for (const auto& e : h.edges) {
    if (std::any_of(e.begin(), e.end(), [&](std::uint32_t v) { return used[v]; })) continue;
    for (auto v : e) used[v] = true;
    ++count;
  }
  return count;
}

}  // namespace

SolveResult exact_ucn(const Hypergraph& h, const SolveLimits& limits) {
  for (std::size_t e = 0; e < h.edges.size(); ++e)
    if (h.edges[e].size() < 2)
      throw PreconditionError("exact_ucn: edge " + std::to_string(e) + " has fewer than two vertices");
  const std::uint32_t nv = h.vertex_count;
  SolveResult r;
  if (nv == 0) return r;

  if (h.edges.empty()) {
    std::vector<std::uint32_t> a(nv);
    for (std::uint32_t v = 0; v < nv; ++v) a[v] = v + 1;
    r.objective = r.lower = r.upper = nv;
    r.coloring = Coloring(std::move(a));
    return r;
  }

  SolveLimits tau_limits = limits;
  tau_limits.tau_vertices = std::max(limits.tau_vertices, std::min<std::uint32_t>(limits.ucn_vertices, 64));
  const SolveResult tau = exact_tau(h, 2, tau_limits);
  r.nodes = tau.nodes;
  const Coloring trivial = trivial_coloring(tau.transversal, h).canonicalized();
  const std::uint64_t trivial_colors = nv - tau.upper + 1;
  const std::uint64_t packing_upper = nv - disjoint_edge_packing(h);

  if (nv > std::min<std::uint32_t>(limits.ucn_vertices, 64)) {
    r.status = ProofStatus::bound_only;
    r.lower = r.objective = trivial_colors;
    r.upper = packing_upper;
    r.coloring = trivial;
    return r;
  }

  UcnSolver solver(h, limits.node_limit);
  Labels start(nv);
  for (std::uint32_t v = 0; v < nv; ++v) start[v] = static_cast<std::uint8_t>(v);
  const std::uint32_t max_depth = static_cast<std::uint32_t>(nv - trivial_colors);
  std::uint32_t depth = static_cast<std::uint32_t>(solver.packing(start));
  for (; depth <= max_depth; ++depth) {
    if (solver.solve_depth(depth, start) || solver.budget_.aborted) break;
  }
  r.nodes += solver.budget_.nodes;
  if (solver.budget_.aborted || !solver.best_) {
    r.status = ProofStatus::timeout;
    r.lower = r.objective = trivial_colors;
    r.upper = nv - depth;
    r.coloring = trivial;
    return r;
  }
  r.objective = r.lower = r.upper = nv - depth;
  r.coloring = from_labels(*solver.best_);
  if (!is_proper(*r.coloring, h) || r.coloring->num_colors() != r.objective)
    throw std::logic_error("exact_ucn: witness failed verification");
  if (tau.status == ProofStatus::optimal && r.objective < trivial_colors)
    throw std::logic_error("exact_ucn: result below |V| - tau_2 + 1");
  return r;
}

std::uint64_t tmodp_default_max_size(std::uint32_t p, std::uint64_t t) { return (t + 1) * theta(1, p) + p - 2; }

namespace {

void multiset_unions(const SpacePtr& space, const std::vector<Subspace>& lines, std::uint64_t t, std::size_t from,
                     std::vector<std::size_t>& pick, const std::function<void(const WeightedPointSet&)>& emit) {
  if (pick.size() == t) {
    WeightedPointSet b(space);
    for (auto i : pick)
      for (auto v : lines[i].points()) b.add_weight(v, 1);
    emit(b);
    return;
  }
  for (std::size_t i = from; i < lines.size(); ++i) {
    pick.push_back(i);
    multiset_unions(space, lines, t, i, pick, emit);
    pick.pop_back();
  }
}

}  // namespace

std::optional<std::string> tmodp_violation(const WeightedPointSet& b, std::uint64_t t, std::uint32_t p) {
  const std::uint64_t target = t * theta(1, b.space().q());
  std::string where;
  for (auto v : b.support()) where += (where.empty() ? "" : ",") + std::to_string(v) + ":" + std::to_string(b.weight(v));
  if (!is_t_mod_p_set(b, t, 1, p)) return "not a t (mod p) set {" + where + "}";
  if (b.size() != target)
    return "size " + std::to_string(b.size()) + " != " + std::to_string(target) + " {" + where + "}";
  if (!union_decomposition(b, 1, t)) return "not a union of " + std::to_string(t) + " lines {" + where + "}";
  return std::nullopt;
}

std::vector<std::vector<std::uint32_t>> capped_line_unions(const SpacePtr& plane, std::uint64_t t, std::uint32_t cap,
                                                           std::uint64_t max_size) {
  std::set<std::vector<std::uint32_t>> out;
  if (t * theta(1, plane->q()) <= max_size) {
    std::vector<std::size_t> pick;
    multiset_unions(plane, plane->subspaces(1), t, 0, pick, [&](const WeightedPointSet& b) {
      const auto& w = b.weights();
      if (std::all_of(w.begin(), w.end(), [&](std::uint32_t x) { return x <= cap; })) out.insert(w);
    });
  }
  return {out.begin(), out.end()};
}

TModPReport verify_tmodp_theorem(std::uint32_t p, std::uint64_t t, std::optional<std::uint64_t> max_size,
                                 std::optional<std::uint64_t> samples, std::uint64_t seed,
                                 std::uint64_t kernel_limit) {
  if (!is_prime(p)) throw PreconditionError("verify_tmodp: p must be prime");
  if (t == 0) throw PreconditionError("verify_tmodp: t must be positive");
  if (8 * (t - 1) > 3 * static_cast<std::uint64_t>(p))
    throw PreconditionError("verify_tmodp: t = " + std::to_string(t) + " exceeds 3p/8 + 1");

  TModPReport rep;
  rep.p = p;
  rep.t = t;
  rep.max_size = max_size.value_or(tmodp_default_max_size(p, t));
  rep.weight_cap = p - 1;

  auto space = ProjectiveSpace::make(2, p);
  TModPQuery query;
  query.k = 1;
  query.t = t;
  query.max_size = rep.max_size;
  query.weight_cap = rep.weight_cap;
  query.samples = samples;
  query.seed = seed;
  query.kernel_limit = kernel_limit;
  auto en = enumerate_t_mod_p_sets(space, query);
  rep.exhaustive = en.exhaustive;
  rep.rank = en.rank;
  rep.kernel_dim = en.kernel_dim;
  rep.classes_walked = en.classes_walked;
  rep.sets = std::move(en.sets);

  std::set<std::vector<std::uint32_t>> found;
  for (const auto& b : rep.sets) {
    found.insert(b.weights());
    if (auto why = tmodp_violation(b, t, p)) rep.violations.push_back(*why);
  }
  const auto expected = capped_line_unions(space, t, rep.weight_cap, rep.max_size);
  rep.expected_unions = expected.size();
  if (rep.exhaustive)
    for (const auto& w : expected) rep.missing_unions += !found.count(w);
  if (t * theta(1, p) + p <= rep.max_size) rep.uncapped_observations = expected.size() * space->num_points();
  return rep;
}

namespace {

BigInt big_pow(std::uint64_t b, int e) {
  BigInt r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

BigInt big_theta(int m, std::uint64_t q) {
  if (m < 0) return 0;
  return (big_pow(q, m + 1) - 1) / (q - 1);
}

Interval affine(const Interval& x, const Rational& scale, const Rational& shift) {
  Rational a = x.lo * scale + shift, b = x.hi * scale + shift;
  if (a > b) std::swap(a, b);
  return {a, b};
}

}  // namespace

BoundsReport bounds_report(int n, int k, std::uint64_t q, std::uint64_t t) {
  BoundsReport r;
  if (!prime_power_decompose(q, r.p, r.h))
    throw PreconditionError("bounds: q = " + std::to_string(q) + " is not a prime power");
  if (n < 1 || k < 0 || k > n) throw PreconditionError("bounds: need n >= 1 and 0 <= k <= n");
  if (t == 0) throw PreconditionError("bounds: t must be positive");
  r.n = n;
  r.k = k;
  r.q = q;
  r.t = t;
  const std::uint32_t p = r.p, h = r.h;
  const BigInt qk = big_pow(q, k);
  const BigInt th_k1 = big_theta(k - 1, q);
  const bool small_k = 2 * k < n;
  const bool k_in_range = k >= 1 && k <= n - 1;

  r.trivial_lower = big_theta(n, q) - 2 * big_theta(k, q) + 1;
  if (small_k) r.tau2_known = 2 * big_theta(k, q);

  // delta' >= 0  <=>  sqrt2 q^k >= q^k + 3 theta_{k-1} + 8, decided by squaring.
  const BigInt rhs = qk + 3 * th_k1 + 8;
  r.delta_prime_nonnegative = 2 * qk * qk >= rhs * rhs;
  r.delta_prime = affine(sqrt_enclosure(2), Rational(qk, 2), Rational(-qk - 3 * th_k1 - 8, 2));
  if (k >= 1) r.delta_ext = Rational(big_pow(q, k - 1) - big_theta(k - 2, q) - 3, 2);
  r.delta_strong = Rational(qk, 200) - Rational(th_k1) - Rational(3, 2);
  r.blsetthm_threshold = (Rational(t) + Rational(1, 2)) * Rational(big_pow(p, k)) - Rational(1, 2);
  r.tmodp_max_size = (BigInt(t) + 1) * big_theta(k, q) + p - 2;
  r.dbhszvdv_size = Rational(2 * qk) + Rational(2 * (qk - 1), p - 1);
  r.bruen = affine(sqrt_enclosure(q), Rational(1), Rational(q + 1));
  r.blokhuis = Rational(3 * (BigInt(p) + 1), 2);
  r.harrach_bound = (BigInt(t) + 1) * qk + th_k1;

  r.ucnthm = n >= 3 && k >= 1 && small_k && ((k == 1 && q >= 17) || (k >= 2 && q >= 13));
  r.ucnstabp = n >= 2 && k_in_range &&
               ((h == 1 && r.delta_prime_nonnegative && q >= 11) || (h >= 2 && k >= 2 && q >= 25));
  r.ucnstabp_a = r.ucnstabp && small_k;
  r.ucnstabp_b = r.ucnstabp && !small_k;
  r.ucnstabq = n >= 2 && h >= 2 && k_in_range && p >= 11 && qk >= 239;
  const bool small_t = 8 * (t - 1) <= 3 * static_cast<std::uint64_t>(p);
  r.tmodpsetthm = h == 1 && k_in_range && small_t;
  r.blsetthm = h == 1 && k_in_range && small_t;
  const std::uint64_t root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(q)) + 0.5);
  const bool square = root * root == q;
  r.bhsz = n == 2 && k == 1 && ((q > 256 && square) || (p >= 29 && h >= 3 && h % 2 == 1));
  r.dbhszvdv = n == 2 * k && k >= 1 && p > 5 && h >= 2;
  r.blokhuis_applies = h == 1;
  return r;
}

}  // namespace fingeo
