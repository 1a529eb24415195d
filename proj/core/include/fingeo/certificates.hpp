#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fingeo/blocking_sets.hpp"
#include "fingeo/coloring.hpp"
#include "fingeo/solvers.hpp"

namespace fingeo {

inline constexpr int kCertificateSchema = 1;

/// kind is one of transversal, coloring, blocking_set, tmodp_report, bounds.
struct Certificate {
  std::string kind;
  nlohmann::json payload;
  nlohmann::json meta = nlohmann::json::object();
};

/// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view data);

/// Sorted keys, no whitespace. The checksum covers every other field.
std::string serialize(const Certificate& c);
/// Throws PreconditionError on malformed input; does not check the checksum.
Certificate parse_certificate(std::string_view text);

struct RecheckVerdict {
  bool well_formed = false;
  bool checksum_ok = false;
  bool claims_ok = false;
  std::string kind;
  std::vector<std::string> failures;
  bool ok() const { return well_formed && checksum_ok && claims_ok; }
};

/// Runs verifiers only, never a solver.
RecheckVerdict recheck(std::string_view text);

nlohmann::json to_json(const BoundsReport& b);
nlohmann::json to_json(const WeightedPointSet& b);
nlohmann::json to_json(const Coloring& c, const Hypergraph& h);

/// Claims are evaluated now and stored with "verified".
nlohmann::json claim_t_fold_blocking(const WeightedPointSet& b, std::uint64_t t, int k);
nlohmann::json claim_minimal(const WeightedPointSet& b, std::uint64_t t, int k);
nlohmann::json claim_t_mod_p(const WeightedPointSet& b, std::uint64_t t, int k);
nlohmann::json claim_union(const WeightedPointSet& b, int m, std::uint64_t count);

Certificate transversal_certificate(const Hypergraph& h, std::uint64_t t, const SolveResult& r);
Certificate coloring_certificate(const Hypergraph& h, const Coloring& c, const std::optional<SolveResult>& ucn = {});
Certificate blocking_set_certificate(const WeightedPointSet& b, std::vector<nlohmann::json> claims);
Certificate tmodp_certificate(const TModPReport& r);
Certificate bounds_certificate(const BoundsReport& b);

}  // namespace fingeo
