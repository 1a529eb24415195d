#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "fingeo/certificates.hpp"
#include "fingeo/errors.hpp"
#include "tamper.hpp"

using namespace fingeo;
using nlohmann::json;

namespace {

// Re-signs a certificate after editing its payload.
std::string resign(const std::string& text, const std::function<void(json&)>& edit) {
  auto c = parse_certificate(text);
  edit(c.payload);
  return serialize(c);
}

Certificate fano_transversal() {
  const auto h = ProjectiveSpace::make(2, 2)->build_hypergraph(1);
  return transversal_certificate(h, 2, exact_tau(h, 2));
}

}  // namespace

TEST(Certificates, Sha256KnownVector) {
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(Certificates, SerializationIsCanonical) {
  const auto text = serialize(fano_transversal());
  EXPECT_EQ(text.find(' '), std::string::npos);
  EXPECT_EQ(text.find('\n'), std::string::npos);
  const auto again = serialize(parse_certificate(text));
  EXPECT_EQ(again, text);
  EXPECT_EQ(json::parse(text).dump(), text);  // keys already sorted
  EXPECT_TRUE(recheck(text).ok());
}

TEST(Certificates, MalformedInput) {
  EXPECT_FALSE(recheck("not json").well_formed);
  EXPECT_FALSE(recheck("{}").well_formed);
  EXPECT_THROW(parse_certificate("[1,2]"), PreconditionError);
  const auto bad_schema = json{{"schema", 99}, {"kind", "bounds"}, {"payload", json::object()}}.dump();
  EXPECT_THROW(parse_certificate(bad_schema), PreconditionError);
  auto c = fano_transversal();
  c.kind = "mystery";
  const auto v = recheck(serialize(c));
  EXPECT_FALSE(v.ok());
}

TEST(Certificates, EveryKindRechecks) {
  auto pg32 = ProjectiveSpace::make(3, 2);
  const auto h = pg32->build_hypergraph(2);
  const auto tau = exact_tau(h, 2);
  const auto ucn = exact_ucn(h);
  const auto d = pg32->disjoint_subspaces(1, 2);
  const std::pair<Subspace, std::uint32_t> parts[] = {{d[0], 1}, {d[1], 1}};
  const auto b = construct_union(pg32, parts);
  std::vector<Certificate> certs = {
      transversal_certificate(h, 2, tau),
      coloring_certificate(h, trivial_coloring(tau.transversal, h)),
      coloring_certificate(h, *ucn.coloring, ucn),
      blocking_set_certificate(b, {claim_t_fold_blocking(b, 2, 2), claim_minimal(b, 2, 2), claim_t_mod_p(b, 2, 2),
                                   claim_union(b, 1, 2)}),
      tmodp_certificate(verify_tmodp_theorem(2, 1, 6)),
      tmodp_certificate(verify_tmodp_theorem(3, 2, 13)),
      bounds_certificate(bounds_report(3, 1, 17, 2)),
      bounds_certificate(bounds_report(2, 1, 121, 3)),
  };
  for (const auto& c : certs) {
    const auto v = recheck(serialize(c));
    EXPECT_TRUE(v.ok()) << c.kind << ": " << (v.failures.empty() ? "" : v.failures[0]);
    EXPECT_EQ(v.kind, c.kind);
  }
  EXPECT_EQ(certs[0].payload.at("lower_bound_source"), "folklore");
}

TEST(Certificates, FalseClaimsCanBeCertifiedHonestly) {
  auto pg23 = ProjectiveSpace::make(2, 3);
  WeightedPointSet b(pg23);
  b.set_weight(0, 1);
  const auto c = blocking_set_certificate(b, {claim_t_fold_blocking(b, 1, 1)});
  EXPECT_FALSE(c.payload.at("claims")[0].at("verified").get<bool>());
  EXPECT_TRUE(recheck(serialize(c)).ok());
}

TEST(Certificates, ChecksumCatchesByteTampering) {
  const auto h = ProjectiveSpace::make(2, 2)->build_hypergraph(1);
  const auto ucn = exact_ucn(h);
  for (const auto& c : {fano_transversal(), coloring_certificate(h, *ucn.coloring, ucn)}) {
    const auto text = serialize(c);
    const auto offsets = tamper::digit_offsets(text, {"points", "assignment"});
    ASSERT_FALSE(offsets.empty());
    for (auto off : offsets) {
      const auto v = recheck(tamper::flip_digit(text, off));
      EXPECT_FALSE(v.ok());
    }
  }
}

TEST(Certificates, ResignedTamperingIsCaughtByVerifiers) {
  const auto text = serialize(fano_transversal());
  // drop one point from the witness and fix up the size
  const auto dropped = resign(text, [](json& p) {
    auto pts = p.at("points").get<std::vector<std::uint32_t>>();
    pts.pop_back();
    p["points"] = pts;
    p["size"] = pts.size();
  });
  auto v = recheck(dropped);
  EXPECT_TRUE(v.checksum_ok);
  EXPECT_FALSE(v.claims_ok);
  ASSERT_FALSE(v.failures.empty());
  EXPECT_NE(v.failures[0].find("edge"), std::string::npos) << v.failures[0];

  // inject a rainbow edge into a proper coloring
  const auto h = ProjectiveSpace::make(2, 2)->build_hypergraph(1);
  const auto tau = exact_tau(h, 2);
  const auto col = serialize(coloring_certificate(h, trivial_coloring(tau.transversal, h)));
  const auto rainbow = resign(col, [](json& p) {
    p["assignment"] = std::vector<std::uint32_t>{1, 2, 3, 1, 1, 1, 1};
    p["N"] = 3;
  });
  v = recheck(rainbow);
  EXPECT_TRUE(v.checksum_ok);
  EXPECT_FALSE(v.claims_ok);

  // tamper with a weight of a blocking set
  auto pg32 = ProjectiveSpace::make(3, 2);
  const auto d = pg32->disjoint_subspaces(1, 2);
  const std::pair<Subspace, std::uint32_t> parts[] = {{d[0], 1}, {d[1], 1}};
  const auto b = construct_union(pg32, parts);
  const auto bs = serialize(blocking_set_certificate(b, {claim_t_fold_blocking(b, 2, 2)}));
  const auto lighter = resign(bs, [&](json& p) {
    auto w = p.at("weights").get<std::vector<std::uint32_t>>();
    w[b.support()[0]] = 0;
    p["weights"] = w;
    p["size"] = 5;
  });
  v = recheck(lighter);
  EXPECT_FALSE(v.claims_ok);
  ASSERT_FALSE(v.failures.empty());
  EXPECT_NE(v.failures[0].find("k-space"), std::string::npos) << v.failures[0];

  // a geometric hypergraph whose edges were edited
  const auto edges = resign(text, [](json& p) { p["hypergraph"]["edges"][0] = std::vector<int>{0, 1, 3}; });
  EXPECT_FALSE(recheck(edges).claims_ok);

  // bounds that disagree with the closed forms
  const auto bounds = serialize(bounds_certificate(bounds_report(3, 1, 17, 2)));
  const auto off_by_one = resign(bounds, [](json& p) { p["trivial_lower"] = 5153; });
  EXPECT_FALSE(recheck(off_by_one).claims_ok);
}

TEST(Certificates, TmodpReportTampering) {
  const auto text = serialize(tmodp_certificate(verify_tmodp_theorem(2, 1, 6)));
  const auto fake = resign(text, [](json& p) {
    p["sets"].push_back(std::vector<std::uint32_t>{1, 1, 1, 1, 1, 1, 1});
    p["count"] = 8;
  });
  EXPECT_FALSE(recheck(fake).claims_ok);
  const auto hidden = resign(text, [](json& p) {
    p["sets"].erase(0);
    p["count"] = 6;
  });
  EXPECT_FALSE(recheck(hidden).claims_ok);
}
