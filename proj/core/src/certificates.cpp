#include "fingeo/certificates.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

#include "fingeo/errors.hpp"

namespace fingeo {

using nlohmann::json;

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned i = 0; i < len; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 15]);
  }
  return out;
}

namespace {

json body(const Certificate& c) {
  return json{{"schema", kCertificateSchema}, {"kind", c.kind}, {"payload", c.payload}, {"meta", c.meta}};
}

json big(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

json interval(const Interval& iv) { return json{{"lo", to_string(iv.lo)}, {"hi", to_string(iv.hi)}}; }

std::string describe(const Subspace& u) {
  std::string s = "{";
  for (std::size_t i = 0; i < u.points().size(); ++i) s += (i ? "," : "") + std::to_string(u.points()[i]);
  return s + "}";
}

std::string describe(const std::vector<std::uint32_t>& e) {
  std::string s = "{";
  for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
  return s + "}";
}

std::optional<std::string> claim_failure(const WeightedPointSet& b, const json& claim) {
  const std::string type = claim.at("type").get<std::string>();
  const bool stated = claim.at("verified").get<bool>();
  auto mismatch = [&](bool actual, const std::string& detail) -> std::optional<std::string> {
    if (actual == stated) return std::nullopt;
    return type + " claimed " + (stated ? "true" : "false") + " but is " + (actual ? "true" : "false") +
           (detail.empty() ? "" : ": " + detail);
  };
  if (type == "t_fold_blocking") {
    const auto t = claim.at("t").get<std::uint64_t>();
    const int k = claim.at("k").get<int>();
    const auto r = is_t_fold_blocking(b, t, k);
    std::string detail;
    if (r.witness)
      detail = "k-space " + describe(*r.witness) + " meets B in " + std::to_string(b.weight_on(*r.witness)) + " < " +
               std::to_string(t);
    return mismatch(r.ok, detail);
  }
  if (type == "minimal") {
    const auto t = claim.at("t").get<std::uint64_t>();
    const int k = claim.at("k").get<int>();
    if (!is_t_fold_blocking(b, t, k)) return mismatch(false, "not t-fold blocking");
    return mismatch(is_minimal(b, t, k), "");
  }
  if (type == "t_mod_p") {
    const auto t = claim.at("t").get<std::uint64_t>();
    const int k = claim.at("k").get<int>();
    const auto r = is_t_mod_p_set(b, t, k, b.space().field().p());
    std::string detail;
    if (r.witness) detail = "k-space " + describe(*r.witness) + " meets B in " + std::to_string(b.weight_on(*r.witness));
    return mismatch(r.ok, detail);
  }
  if (type == "union") {
    const int m = claim.at("m").get<int>();
    const auto count = claim.at("count").get<std::uint64_t>();
    return mismatch(union_decomposition(b, m, count).has_value(), "");
  }
  return "unknown claim type '" + type + "'";
}

WeightedPointSet weighted_from_json(const json& p) {
  const auto& sp = p.at("space");
  auto space = ProjectiveSpace::make(sp.at("n").get<int>(), sp.at("q").get<std::uint64_t>());
  return WeightedPointSet(space, p.at("weights").get<std::vector<std::uint32_t>>());
}

// Geometric hypergraphs must match the rebuilt H(n, k, q) exactly.
Hypergraph checked_hypergraph(const json& j, std::vector<std::string>& failures) {
  Hypergraph h = hypergraph_from_json(j);
  if (h.geometry) {
    auto rebuilt = ProjectiveSpace::make(h.geometry->n, h.geometry->q)->build_hypergraph(h.geometry->k);
    if (rebuilt.edges != h.edges) failures.push_back("edges do not match the stated H(n,k,q)");
  }
  return h;
}

void recheck_transversal(const json& p, std::vector<std::string>& failures) {
  const Hypergraph h = checked_hypergraph(p.at("hypergraph"), failures);
  const auto t = p.at("t").get<std::uint64_t>();
  const auto points = p.at("points").get<std::vector<std::uint32_t>>();
  if (!std::is_sorted(points.begin(), points.end()) ||
      std::adjacent_find(points.begin(), points.end()) != points.end())
    failures.push_back("points are not strictly ascending");
  for (auto v : points)
    if (v >= h.vertex_count) {
      failures.push_back("point " + std::to_string(v) + " out of range");
      return;
    }
  if (auto e = transversal_violation(points, h, t)) {
    std::size_t hit = 0;
    for (auto v : h.edges[*e]) hit += std::binary_search(points.begin(), points.end(), v);
    failures.push_back("edge " + std::to_string(*e) + " " + describe(h.edges[*e]) + " meets the set in " +
                       std::to_string(hit) + " < " + std::to_string(t));
  }
  if (p.at("size").get<std::uint64_t>() != points.size()) failures.push_back("size does not match points");
  if (p.at("upper").get<std::uint64_t>() < points.size()) failures.push_back("upper bound below witness size");
  if (p.at("lower").get<std::uint64_t>() > p.at("upper").get<std::uint64_t>()) failures.push_back("lower > upper");
  if (p.at("status") == "optimal" && p.at("lower") != p.at("upper")) failures.push_back("optimal but lower != upper");
  if (p.contains("lower_bound_source") && p.at("lower_bound_source") == "folklore") {
    if (!h.geometry || t > h.geometry->q ||
        t * theta(h.geometry->n - h.geometry->k, h.geometry->q) != p.at("lower").get<std::uint64_t>())
      failures.push_back("folklore lower bound does not apply or does not match");
  }
}

void recheck_coloring(const json& p, std::vector<std::string>& failures) {
  const Hypergraph h = checked_hypergraph(p.at("hypergraph"), failures);
  const auto assignment = p.at("assignment").get<std::vector<std::uint32_t>>();
  if (assignment.size() != h.vertex_count) {
    failures.push_back("assignment length " + std::to_string(assignment.size()) + " != vertex count " +
                       std::to_string(h.vertex_count));
    return;
  }
  std::optional<Coloring> c;
  try {
    c.emplace(assignment);
  } catch (const PreconditionError& e) {
    failures.push_back(e.what());
    return;
  }
  if (p.at("N").get<std::uint32_t>() != c->num_colors()) failures.push_back("N does not match the assignment");
  const auto& claims = p.at("claims");
  const auto proper = is_proper(*c, h);
  if (claims.at("proper").get<bool>() != proper.proper) {
    std::string d = "proper claimed " + std::string(claims.at("proper").get<bool>() ? "true" : "false");
    if (proper.rainbow_edge)
      d += " but edge " + std::to_string(*proper.rainbow_edge) + " " + describe(h.edges[*proper.rainbow_edge]) +
           " is rainbow";
    failures.push_back(d);
  }
  const auto triv = is_trivial_coloring(*c, h);
  const auto& tc = claims.at("trivial");
  if (tc.at("verified").get<bool>() != triv.has_value())
    failures.push_back("trivial claim does not hold");
  else if (triv && tc.at("class").get<std::uint32_t>() != triv->color)
    failures.push_back("trivial class mismatch");
  if (claims.contains("ucn")) {
    const auto& u = claims.at("ucn");
    if (u.at("status") == "optimal" && u.at("value").get<std::uint64_t>() != c->num_colors())
      failures.push_back("ucn value differs from the witness color count");
    if (u.at("lower").get<std::uint64_t>() > c->num_colors() && proper.proper)
      failures.push_back("ucn lower bound exceeds the witness");
  }
}

void recheck_blocking(const json& p, std::vector<std::string>& failures) {
  const auto b = weighted_from_json(p);
  if (p.at("size").get<std::uint64_t>() != b.size()) failures.push_back("size does not match weights");
  for (const auto& claim : p.at("claims"))
    if (auto f = claim_failure(b, claim)) failures.push_back(*f);
}

void recheck_tmodp(const json& p, std::vector<std::string>& failures) {
  const auto prime = p.at("p").get<std::uint32_t>();
  const auto t = p.at("t").get<std::uint64_t>();
  const auto max_size = p.at("max_size").get<std::uint64_t>();
  const auto cap = p.at("weight_cap").get<std::uint32_t>();
  auto plane = ProjectiveSpace::make(2, prime);
  std::vector<std::string> violations;
  std::set<std::vector<std::uint32_t>> found;
  for (const auto& w : p.at("sets")) {
    WeightedPointSet b(plane, w.get<std::vector<std::uint32_t>>());
    if (b.size() > max_size) failures.push_back("set exceeds max_size");
    const auto& ws = b.weights();
    if (std::any_of(ws.begin(), ws.end(), [&](std::uint32_t x) { return x > cap; }))
      failures.push_back("set exceeds weight cap");
    if (!found.insert(ws).second) failures.push_back("duplicate set");
    if (auto why = tmodp_violation(b, t, prime)) violations.push_back(*why);
  }
  if (p.at("count").get<std::uint64_t>() != found.size()) failures.push_back("count does not match sets");
  if (p.at("violations").get<std::vector<std::string>>() != violations)
    failures.push_back("recorded violations differ from recomputed ones (" + std::to_string(violations.size()) + ")");
  const auto expected = capped_line_unions(plane, t, cap, max_size);
  if (p.at("expected_unions").get<std::uint64_t>() != expected.size()) failures.push_back("expected_unions mismatch");
  std::uint64_t missing = 0;
  for (const auto& w : expected) missing += !found.count(w);
  const bool exhaustive = p.at("exhaustive").get<bool>();
  if (exhaustive && p.at("missing_unions").get<std::uint64_t>() != missing) failures.push_back("missing_unions mismatch");
  const bool verified = exhaustive && violations.empty() && missing == 0;
  if (p.at("verified").get<bool>() != verified) failures.push_back("verified flag inconsistent");
}

}  // namespace

std::string serialize(const Certificate& c) {
  json j = body(c);
  j["checksum"] = sha256_hex(body(c).dump());
  return j.dump();
}

Certificate parse_certificate(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw PreconditionError(std::string("malformed certificate: ") + e.what());
  }
  if (!j.is_object() || !j.contains("kind") || !j.contains("payload") || !j.contains("schema"))
    throw PreconditionError("malformed certificate: missing kind, payload or schema");
  if (j.at("schema") != kCertificateSchema) throw PreconditionError("unsupported certificate schema");
  Certificate c;
  c.kind = j.at("kind").get<std::string>();
  c.payload = j.at("payload");
  c.meta = j.value("meta", json::object());
  return c;
}

RecheckVerdict recheck(std::string_view text) {
  RecheckVerdict v;
  Certificate c;
  json j;
  try {
    c = parse_certificate(text);
    j = json::parse(text);
  } catch (const std::exception& e) {
    v.failures.push_back(e.what());
    return v;
  }
  v.well_formed = true;
  v.kind = c.kind;
  v.checksum_ok = j.contains("checksum") && j.at("checksum").is_string() &&
                  j.at("checksum").get<std::string>() == sha256_hex(body(c).dump());
  if (!v.checksum_ok) v.failures.push_back("checksum mismatch");
  try {
    const auto& p = c.payload;
    if (c.kind == "transversal") recheck_transversal(p, v.failures);
    else if (c.kind == "coloring") recheck_coloring(p, v.failures);
    else if (c.kind == "blocking_set") recheck_blocking(p, v.failures);
    else if (c.kind == "tmodp_report") recheck_tmodp(p, v.failures);
    else if (c.kind == "bounds") {
      const auto b = bounds_report(p.at("n").get<int>(), p.at("k").get<int>(), p.at("q").get<std::uint64_t>(),
                                   p.at("t").get<std::uint64_t>());
      if (to_json(b) != p) v.failures.push_back("bounds differ from recomputed values");
    } else {
      v.failures.push_back("unknown kind '" + c.kind + "'");
    }
  } catch (const std::exception& e) {
    v.well_formed = false;
    v.failures.push_back(std::string("malformed payload: ") + e.what());
    return v;
  }
  v.claims_ok = v.failures.size() == (v.checksum_ok ? 0u : 1u);
  return v;
}

json to_json(const BoundsReport& b) {
  json j{{"n", b.n},
         {"k", b.k},
         {"q", b.q},
         {"p", b.p},
         {"h", b.h},
         {"t", b.t},
         {"trivial_lower", big(b.trivial_lower)},
         {"tau2_known", b.tau2_known ? big(*b.tau2_known) : json(nullptr)},
         {"delta_prime", interval(b.delta_prime)},
         {"delta_prime_nonnegative", b.delta_prime_nonnegative},
         {"delta_ext", b.delta_ext ? json(to_string(*b.delta_ext)) : json(nullptr)},
         {"delta_strong", to_string(b.delta_strong)},
         {"blsetthm_threshold", to_string(b.blsetthm_threshold)},
         {"tmodp_max_size", big(b.tmodp_max_size)},
         {"dbhszvdv_size", to_string(b.dbhszvdv_size)},
         {"bruen", interval(b.bruen)},
         {"blokhuis", to_string(b.blokhuis)},
         {"harrach_bound", big(b.harrach_bound)}};
  j["applicable"] = json{{"ucnthm", b.ucnthm},         {"ucnstabp", b.ucnstabp},       {"ucnstabp_a", b.ucnstabp_a},
                         {"ucnstabp_b", b.ucnstabp_b}, {"ucnstabq", b.ucnstabq},       {"tmodpsetthm", b.tmodpsetthm},
                         {"blsetthm", b.blsetthm},     {"bhsz", b.bhsz},               {"dbhszvdv", b.dbhszvdv},
                         {"blokhuis", b.blokhuis_applies}};
  return j;
}

json to_json(const WeightedPointSet& b) {
  return json{{"space", {{"n", b.space().n()}, {"q", b.space().q()}}},
              {"field", b.space().field().descriptor()},
              {"weights", b.weights()},
              {"size", b.size()}};
}

json to_json(const Coloring& c, const Hypergraph& h) {
  return json{{"hypergraph", to_json(h)}, {"assignment", c.assignment()}, {"N", c.num_colors()}};
}

json claim_t_fold_blocking(const WeightedPointSet& b, std::uint64_t t, int k) {
  return json{{"type", "t_fold_blocking"}, {"t", t}, {"k", k}, {"verified", is_t_fold_blocking(b, t, k).ok}};
}

json claim_minimal(const WeightedPointSet& b, std::uint64_t t, int k) {
  const bool ok = is_t_fold_blocking(b, t, k).ok && is_minimal(b, t, k);
  return json{{"type", "minimal"}, {"t", t}, {"k", k}, {"verified", ok}};
}

json claim_t_mod_p(const WeightedPointSet& b, std::uint64_t t, int k) {
  return json{{"type", "t_mod_p"},
              {"t", t},
              {"k", k},
              {"p", b.space().field().p()},
              {"verified", is_t_mod_p_set(b, t, k, b.space().field().p()).ok}};
}

json claim_union(const WeightedPointSet& b, int m, std::uint64_t count) {
  return json{{"type", "union"}, {"m", m}, {"count", count}, {"verified", union_decomposition(b, m, count).has_value()}};
}

Certificate transversal_certificate(const Hypergraph& h, std::uint64_t t, const SolveResult& r) {
  json p{{"hypergraph", to_json(h)}, {"t", t},         {"points", r.transversal}, {"size", r.transversal.size()},
         {"lower", r.lower},         {"upper", r.upper}, {"status", to_string(r.status)}};
  if (h.geometry && t <= h.geometry->q && t * theta(h.geometry->n - h.geometry->k, h.geometry->q) == r.lower)
    p["lower_bound_source"] = "folklore";
  return {"transversal", std::move(p), json{{"nodes", r.nodes}}};
}

Certificate coloring_certificate(const Hypergraph& h, const Coloring& c, const std::optional<SolveResult>& ucn) {
  json p = to_json(c, h);
  const auto triv = is_trivial_coloring(c, h);
  json claims{{"proper", is_proper(c, h).proper},
              {"trivial", triv ? json{{"verified", true}, {"class", triv->color}} : json{{"verified", false}}}};
  json meta = json::object();
  if (ucn) {
    claims["ucn"] = json{{"value", ucn->objective},
                         {"lower", ucn->lower},
                         {"upper", ucn->upper},
                         {"status", to_string(ucn->status)}};
    meta["nodes"] = ucn->nodes;
  }
  p["claims"] = std::move(claims);
  return {"coloring", std::move(p), std::move(meta)};
}

Certificate blocking_set_certificate(const WeightedPointSet& b, std::vector<json> claims) {
  json p = to_json(b);
  p["claims"] = std::move(claims);
  return {"blocking_set", std::move(p)};
}

Certificate tmodp_certificate(const TModPReport& r) {
  json sets = json::array();
  for (const auto& b : r.sets) sets.push_back(b.weights());
  json p{{"p", r.p},
         {"t", r.t},
         {"max_size", r.max_size},
         {"weight_cap", r.weight_cap},
         {"sets", std::move(sets)},
         {"count", r.sets.size()},
         {"expected_unions", r.expected_unions},
         {"missing_unions", r.missing_unions},
         {"violations", r.violations},
         {"exhaustive", r.exhaustive},
         {"verified", r.verified()},
         {"uncapped_observations", r.uncapped_observations}};
  json meta{{"rank", r.rank}, {"kernel_dim", r.kernel_dim}, {"classes_walked", r.classes_walked}};
  return {"tmodp_report", std::move(p), std::move(meta)};
}

Certificate bounds_certificate(const BoundsReport& b) { return {"bounds", to_json(b)}; }

}  // namespace fingeo
