#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fingeo/blocking_sets.hpp"
#include "fingeo/coloring.hpp"
#include "fingeo/hypergraph.hpp"
#include "fingeo/rational.hpp"

namespace fingeo {

enum class ProofStatus { optimal, bound_only, timeout };
std::string to_string(ProofStatus s);

struct SolveLimits {
  std::uint32_t tau_vertices = 40;
  std::uint32_t ucn_vertices = 20;
  /// Search nodes per solve before giving up with a timeout.
  std::uint64_t node_limit = 200'000'000;
};

struct SolveResult {
  /// The optimum when status is optimal; otherwise the best value known
  /// (the upper bound for tau, the lower bound for UCN).
  std::uint64_t objective = 0;
  std::uint64_t lower = 0;
  std::uint64_t upper = 0;
  std::vector<std::uint32_t> transversal;  // tau witness, ascending
  std::optional<Coloring> coloring;        // UCN witness, canonical
  std::uint64_t nodes = 0;
  ProofStatus status = ProofStatus::optimal;
};

/// Minimum t-transversal. The witness is the lexicographically least
/// optimal vertex set. Throws PreconditionError when t = 0 or some edge has
/// fewer than t vertices.
SolveResult exact_tau(const Hypergraph& h, std::uint64_t t, const SolveLimits& limits = {});

/// Upper chromatic number via merge search from the all-distinct coloring.
/// The witness is the lexicographically least canonical optimal coloring.
/// Throws PreconditionError when an edge has fewer than two vertices (such
/// an edge is rainbow under every coloring).
SolveResult exact_ucn(const Hypergraph& h, const SolveLimits& limits = {});

struct TModPReport {
  std::uint32_t p = 0;
  std::uint64_t t = 0;
  std::uint64_t max_size = 0;
  std::uint32_t weight_cap = 0;
  std::vector<WeightedPointSet> sets;  // enumeration output
  std::uint64_t expected_unions = 0;   // capped t-line unions within max_size
  std::vector<std::string> violations;
  std::uint64_t missing_unions = 0;
  bool exhaustive = true;
  std::size_t rank = 0;
  std::size_t kernel_dim = 0;
  std::uint64_t classes_walked = 0;
  /// Union plus p extra weight on one point, still within max_size: t (mod p)
  /// sets outside the residue-capped search that are not t-line unions.
  std::uint64_t uncapped_observations = 0;

  bool verified() const { return exhaustive && violations.empty() && missing_unions == 0; }
};

/// Default max_size: (t+1) theta_1 + p - 2.
std::uint64_t tmodp_default_max_size(std::uint32_t p, std::uint64_t t);

/// Why a set returned by the t (mod p) enumeration in PG(2, p) is not a
/// weighted union of t lines, or nullopt when it is one.
std::optional<std::string> tmodp_violation(const WeightedPointSet& b, std::uint64_t t, std::uint32_t p);

/// Weight vectors of all unions of t lines (repetition allowed) with every
/// weight <= cap, when t theta_1 <= max_size.
std::vector<std::vector<std::uint32_t>> capped_line_unions(const SpacePtr& plane, std::uint64_t t, std::uint32_t cap,
                                                           std::uint64_t max_size);

/// Checks the t (mod p) line-set classification in PG(2, p) against the
/// union construction. Requires p prime and 1 <= t <= 3p/8 + 1.
TModPReport verify_tmodp_theorem(std::uint32_t p, std::uint64_t t, std::optional<std::uint64_t> max_size = {},
                                 std::optional<std::uint64_t> samples = {}, std::uint64_t seed = 0,
                                 std::uint64_t kernel_limit = TModPQuery{}.kernel_limit);

/// Closed-form quantities for the hypergraph of (n-k)-spaces of PG(n, q).
/// Irrational values are interval enclosures; everything else is exact.
struct BoundsReport {
  int n = 0;
  int k = 0;
  std::uint64_t q = 0;
  std::uint32_t p = 0;
  std::uint32_t h = 0;
  std::uint64_t t = 0;

  BigInt trivial_lower;              // theta_n - 2 theta_k + 1
  std::optional<BigInt> tau2_known;  // 2 theta_k when k < n/2
  Interval delta_prime;              // ((sqrt2 - 1) q^k - 3 theta_{k-1} - 8) / 2
  bool delta_prime_nonnegative = false;
  std::optional<Rational> delta_ext;  // (q^{k-1} - theta_{k-2} - 3) / 2, k >= 1
  Rational delta_strong;              // q^k / 200 - theta_{k-1} - 3/2
  Rational blsetthm_threshold;        // (t + 1/2) p^k - 1/2
  BigInt tmodp_max_size;              // (t+1) theta_k + p - 2
  Rational dbhszvdv_size;             // 2 q^k + 2 (q^k - 1)/(p - 1)
  Interval bruen;                     // q + sqrt(q) + 1
  Rational blokhuis;                  // 3 (p + 1) / 2
  BigInt harrach_bound;               // (t+1) q^k + theta_{k-1}

  bool ucnthm = false;
  bool ucnstabp = false;
  bool ucnstabp_a = false;
  bool ucnstabp_b = false;
  bool ucnstabq = false;
  bool tmodpsetthm = false;
  bool blsetthm = false;
  bool bhsz = false;
  bool dbhszvdv = false;
  bool blokhuis_applies = false;
};

/// Requires q to be a prime power, n >= 1, 0 <= k <= n and t >= 1.
BoundsReport bounds_report(int n, int k, std::uint64_t q, std::uint64_t t);

}  // namespace fingeo
