// Command-line front end for the fingeo library.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "fingeo/blocking_sets.hpp"
#include "fingeo/certificates.hpp"
#include "fingeo/coloring.hpp"
#include "fingeo/errors.hpp"
#include "fingeo/experiments.hpp"
#include "fingeo/projective_space.hpp"
#include "fingeo/solvers.hpp"

using namespace fingeo;
using nlohmann::json;

namespace {

struct Globals {
  std::uint64_t seed = 0;
  unsigned threads = 1;
  std::string out;
  std::string limits;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PreconditionError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json read_json(const std::string& path) {
  try {
    return json::parse(slurp(path));
  } catch (const json::exception& e) {
    throw PreconditionError("'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_out(const Globals& g, const std::string& text) {
  if (g.out.empty() || g.out == "-") {
    std::cout << text << "\n";
    return;
  }
  std::ofstream(g.out, std::ios::binary) << text << "\n";
  std::cerr << "[out] " << g.out << "\n";
}

ExperimentLimits limits_of(const Globals& g) {
  ExperimentLimits l = limits_from_env();
  if (!g.limits.empty()) apply_limit_overrides(l, g.limits);
  return l;
}

json limits_json(const ExperimentLimits& l) {
  return json{{"tau_vertices", l.solve.tau_vertices}, {"ucn_vertices", l.solve.ucn_vertices},
              {"node_limit", l.solve.node_limit},     {"max_points", l.space.max_points},
              {"max_subspaces", l.space.max_subspaces}, {"kernel_limit", l.kernel_limit}};
}

// "n,k,q" builds H(n, k, q); otherwise a hypergraph JSON file.
Hypergraph load_hypergraph(const std::string& file, const std::vector<std::uint64_t>& geometry,
                           const ExperimentLimits& l) {
  if (!geometry.empty()) {
    if (geometry.size() != 3) throw PreconditionError("--geometry takes n,k,q");
    return ProjectiveSpace::make(static_cast<int>(geometry[0]), geometry[2], l.space)
        ->build_hypergraph(static_cast<int>(geometry[1]));
  }
  if (file.empty()) throw PreconditionError("give --hypergraph FILE or --geometry n,k,q");
  return hypergraph_from_json(read_json(file));
}

WeightedPointSet load_weighted(const std::string& file, const ExperimentLimits& l) {
  const json j = read_json(file);
  const json& body = j.contains("payload") ? j.at("payload") : j;
  auto space = ProjectiveSpace::make(body.at("space").at("n").get<int>(), body.at("space").at("q").get<std::uint64_t>(),
                                     l.space);
  return WeightedPointSet(space, body.at("weights").get<std::vector<std::uint32_t>>());
}

std::pair<Hypergraph, Coloring> load_coloring(const std::string& file) {
  const json j = read_json(file);
  const json& body = j.contains("payload") ? j.at("payload") : j;
  Hypergraph h = hypergraph_from_json(body.at("hypergraph"));
  Coloring c(body.at("assignment").get<std::vector<std::uint32_t>>());
  if (body.contains("N") && body.at("N").get<std::uint32_t>() != c.num_colors())
    throw PreconditionError("N does not match the assignment");
  return {std::move(h), std::move(c)};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite projective geometry: blocking sets, transversals and upper chromatic numbers"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "Seed for randomized choices")->capture_default_str();
  app.add_option("--threads", g.threads, "Worker threads for grid runs")->capture_default_str();
  app.add_option("--out", g.out, "Output file (or directory for run)");
  app.add_option("--limits", g.limits, std::string("Limit overrides key=value,...; also read from ") + kLimitsEnv);

  int exit_code = 0;

  // space
  auto* space_cmd = app.add_subcommand("space", "Count points and subspaces; export H(n,k,q)");
  int sp_n = 2, sp_k = -1;
  std::uint64_t sp_q = 2;
  space_cmd->add_option("--n", sp_n)->required();
  space_cmd->add_option("--q", sp_q)->required();
  space_cmd->add_option("--k", sp_k, "Export the hypergraph of k-spaces as JSON");
  space_cmd->callback([&] {
    auto s = ProjectiveSpace::make(sp_n, sp_q, limits_of(g).space);
    if (sp_k >= 0) {
      write_out(g, to_json(s->build_hypergraph(sp_k)).dump());
      return;
    }
    json j{{"n", sp_n}, {"q", sp_q}, {"field", s->field().descriptor()}, {"points", s->num_points()}};
    json counts = json::array();
    for (int m = 0; m <= sp_n; ++m) counts.push_back(count_subspaces(sp_n, m, sp_q));
    j["subspaces"] = counts;
    write_out(g, j.dump());
  });

  // blocking
  auto* blocking = app.add_subcommand("blocking", "Check or reduce weighted point sets");
  blocking->require_subcommand(1);
  std::string bl_set;
  std::uint64_t bl_t = 1;
  int bl_k = 1;
  auto* bl_check = blocking->add_subcommand("check", "Evaluate blocking, minimality and t (mod p) claims");
  auto* bl_reduce = blocking->add_subcommand("reduce", "Reduce to a minimal t-fold blocking set (random order)");
  for (auto* c : {bl_check, bl_reduce}) {
    c->add_option("--set", bl_set, "Weighted set JSON {\"space\":{n,q},\"weights\":[...]}")->required();
    c->add_option("--t", bl_t)->required();
    c->add_option("--k", bl_k, "Dimension of the blocked subspaces")->required();
  }
  bl_check->callback([&] {
    const auto b = load_weighted(bl_set, limits_of(g));
    std::vector<json> claims{claim_t_fold_blocking(b, bl_t, bl_k)};
    if (claims[0].at("verified").get<bool>()) claims.push_back(claim_minimal(b, bl_t, bl_k));
    claims.push_back(claim_t_mod_p(b, bl_t, bl_k));
    const auto cert = blocking_set_certificate(b, claims);
    for (const auto& c : claims) std::cerr << "[claim] " << c.dump() << "\n";
    write_out(g, serialize(cert));
    exit_code = claims[0].at("verified").get<bool>() ? 0 : 1;
  });
  bl_reduce->callback([&] {
    const auto b = load_weighted(bl_set, limits_of(g));
    std::vector<std::uint32_t> order(b.space().num_points());
    for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
    std::mt19937_64 rng(g.seed);
    std::shuffle(order.begin(), order.end(), rng);
    const auto r = minimal_reduction(b, bl_t, bl_k, order);
    write_out(g, serialize(blocking_set_certificate(r, {claim_t_fold_blocking(r, bl_t, bl_k), claim_minimal(r, bl_t, bl_k)})));
  });

  // color
  auto* color = app.add_subcommand("color", "Colorings of hypergraphs");
  color->require_subcommand(1);
  std::string co_file, co_hyper, co_points_file;
  std::vector<std::uint64_t> co_geometry;
  std::vector<std::uint32_t> co_points;
  int co_k = 1;
  auto* co_verify = color->add_subcommand("verify", "Check properness and triviality of a coloring");
  co_verify->add_option("--coloring", co_file, "{\"hypergraph\":...,\"assignment\":[...],\"N\":...}")->required();
  co_verify->callback([&] {
    auto [h, c] = load_coloring(co_file);
    const auto cert = coloring_certificate(h, c);
    const bool proper = cert.payload.at("claims").at("proper").get<bool>();
    std::cerr << "[color] proper=" << proper << " trivial=" << cert.payload.at("claims").at("trivial").at("verified")
              << " N=" << c.num_colors() << "\n";
    write_out(g, serialize(cert));
    exit_code = proper ? 0 : 1;
  });
  auto* co_triv = color->add_subcommand("trivialize", "Build the trivial coloring from a 2-transversal");
  co_triv->add_option("--hypergraph", co_hyper);
  co_triv->add_option("--geometry", co_geometry, "n,k,q")->delimiter(',');
  co_triv->add_option("--points", co_points, "Comma-separated vertices of T")->delimiter(',');
  co_triv->add_option("--transversal", co_points_file, "Transversal certificate to take T from");
  co_triv->callback([&] {
    const auto l = limits_of(g);
    Hypergraph h = load_hypergraph(co_hyper, co_geometry, l);
    std::vector<std::uint32_t> pts = co_points;
    if (!co_points_file.empty()) {
      const json j = read_json(co_points_file);
      const json& body = j.contains("payload") ? j.at("payload") : j;
      pts = body.at("points").get<std::vector<std::uint32_t>>();
    }
    const auto c = trivial_coloring(pts, h);
    write_out(g, serialize(coloring_certificate(h, c)));
  });
  auto* co_analyze = color->add_subcommand("analyze", "Search a coloring for a monochromatic pair of disjoint k-spaces");
  co_analyze->add_option("--coloring", co_file)->required();
  co_analyze->add_option("--k", co_k, "Dimension of the disjoint subspaces")->required();
  co_analyze->callback([&] {
    auto [h, c] = load_coloring(co_file);
    if (!h.geometry) throw PreconditionError("analyze needs a geometric hypergraph (n, k, q)");
    auto s = ProjectiveSpace::make(h.geometry->n, h.geometry->q, limits_of(g).space);
    json j{{"proper", is_proper(c, h).proper}};
    const auto triv = is_trivial_coloring(c, h);
    j["trivial"] = triv ? json{{"class", triv->color}, {"transversal", triv->transversal}} : json(nullptr);
    const auto pair = monochromatic_disjoint_pair(c, *s, co_k);
    j["disjoint_pair"] = pair ? json{{"color", pair->color}, {"first", pair->first.points()}, {"second", pair->second.points()}}
                              : json(nullptr);
    write_out(g, j.dump());
  });

  // solve
  auto* solve = app.add_subcommand("solve", "Exact tau_t and upper chromatic number");
  solve->require_subcommand(1);
  std::string so_hyper;
  std::vector<std::uint64_t> so_geometry;
  std::uint64_t so_t = 2;
  auto* so_tau = solve->add_subcommand("tau", "Minimum t-transversal");
  auto* so_ucn = solve->add_subcommand("ucn", "Upper chromatic number");
  for (auto* c : {so_tau, so_ucn}) {
    c->add_option("--hypergraph", so_hyper, "Hypergraph JSON");
    c->add_option("--geometry", so_geometry, "n,k,q instead of a file")->delimiter(',');
  }
  so_tau->add_option("--t", so_t)->required();
  so_tau->callback([&] {
    const auto l = limits_of(g);
    const Hypergraph h = load_hypergraph(so_hyper, so_geometry, l);
    const auto r = exact_tau(h, so_t, l.solve);
    auto cert = transversal_certificate(h, so_t, r);
    cert.meta["seed"] = g.seed;
    cert.meta["limits"] = limits_json(l);
    std::cerr << "[solve] tau_" << so_t << "=" << r.objective << " status=" << to_string(r.status) << " nodes=" << r.nodes
              << "\n";
    write_out(g, serialize(cert));
  });
  so_ucn->callback([&] {
    const auto l = limits_of(g);
    const Hypergraph h = load_hypergraph(so_hyper, so_geometry, l);
    const auto r = exact_ucn(h, l.solve);
    auto cert = coloring_certificate(h, *r.coloring, r);
    cert.meta["seed"] = g.seed;
    cert.meta["limits"] = limits_json(l);
    std::cerr << "[solve] ucn=" << r.objective << " status=" << to_string(r.status) << " nodes=" << r.nodes << "\n";
    write_out(g, serialize(cert));
  });

  // verify
  auto* verify = app.add_subcommand("verify", "Theorem verification drivers");
  verify->require_subcommand(1);
  std::uint32_t ve_p = 3;
  std::uint64_t ve_t = 2;
  std::optional<std::uint64_t> ve_max, ve_samples;
  auto* ve_tmodp = verify->add_subcommand("tmodp", "Classify t (mod p) sets of PG(2,p) against line unions");
  ve_tmodp->add_option("--p", ve_p)->required();
  ve_tmodp->add_option("--t", ve_t)->required();
  ve_tmodp->add_option("--max-size", ve_max, "Defaults to (t+1)(p+1)+p-2");
  ve_tmodp->add_option("--samples", ve_samples, "Sample this many kernel elements if the walk is too large");
  ve_tmodp->callback([&] {
    const auto l = limits_of(g);
    const auto r = verify_tmodp_theorem(ve_p, ve_t, ve_max, ve_samples, g.seed, l.kernel_limit);
    auto cert = tmodp_certificate(r);
    cert.meta["seed"] = g.seed;
    std::cerr << "[tmodp] sets=" << r.sets.size() << " unions=" << r.expected_unions
              << " violations=" << r.violations.size() << " exhaustive=" << r.exhaustive
              << " verified=" << r.verified() << "\n";
    write_out(g, serialize(cert));
    exit_code = r.verified() ? 0 : 1;
  });

  // bounds
  auto* bounds = app.add_subcommand("bounds", "Closed-form bounds and applicability flags for H(n,n-k,q)");
  int bo_n = 3, bo_k = 1;
  std::uint64_t bo_q = 2, bo_t = 2;
  bounds->add_option("--n", bo_n)->required();
  bounds->add_option("--k", bo_k)->required();
  bounds->add_option("--q", bo_q)->required();
  bounds->add_option("--t", bo_t)->capture_default_str();
  bounds->callback([&] { write_out(g, serialize(bounds_certificate(bounds_report(bo_n, bo_k, bo_q, bo_t)))); });

  // run
  auto* run = app.add_subcommand("run", "Run an experiment grid and write certificates plus a summary");
  std::string ru_config, ru_grid;
  run->add_option("--config", ru_config, "JSON {\"grid\":[[n,k,q,t],...],\"seed\":..,\"threads\":..,\"limits\":\"..\"}");
  run->add_option("--grid", ru_grid, "Instances n,k,q,t separated by ';' (empty string for none)");
  run->callback([&] {
    ExperimentConfig cfg;
    cfg.limits = limits_of(g);
    cfg.seed = g.seed;
    cfg.threads = g.threads;
    if (!g.out.empty()) cfg.out_dir = g.out;
    auto parse_grid = [](const json& arr) {
      std::vector<GridInstance> grid;
      for (const auto& e : arr)
        grid.push_back({e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<std::uint64_t>(), e.at(3).get<std::uint64_t>()});
      return grid;
    };
    if (!ru_config.empty()) {
      const json j = read_json(ru_config);
      if (j.contains("grid")) cfg.grid = parse_grid(j.at("grid"));
      cfg.seed = j.value("seed", cfg.seed);
      cfg.threads = j.value("threads", cfg.threads);
      if (j.contains("limits")) apply_limit_overrides(cfg.limits, j.at("limits").get<std::string>());
    }
    if (run->count("--grid")) {
      cfg.grid.clear();
      std::stringstream ss(ru_grid);
      std::string item;
      while (std::getline(ss, item, ';')) {
        if (item.empty()) continue;
        std::stringstream is(item);
        std::vector<std::uint64_t> v;
        std::string part;
        while (std::getline(is, part, ',')) v.push_back(std::stoull(part));
        if (v.size() != 4) throw PreconditionError("grid entries are n,k,q,t");
        cfg.grid.push_back({static_cast<int>(v[0]), static_cast<int>(v[1]), v[2], v[3]});
      }
    }
    const auto summary = run_experiments(cfg, &std::cerr);
    std::cout << summary_table(summary);
    exit_code = summary.ok() ? 0 : 1;
  });

  // recheck
  auto* rc = app.add_subcommand("recheck", "Re-verify certificates without re-solving");
  std::vector<std::string> rc_files;
  rc->add_option("files", rc_files)->required();
  rc->callback([&] {
    for (const auto& f : rc_files) {
      const auto v = recheck(slurp(f));
      std::cout << (v.ok() ? "[pass] " : "[fail] ") << f << " kind=" << v.kind << " checksum=" << (v.checksum_ok ? "ok" : "bad")
                << "\n";
      for (const auto& why : v.failures) std::cout << "  " << why << "\n";
      if (!v.ok()) exit_code = 1;
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const PreconditionError& e) {
    std::cerr << "[error] " << e.what() << "\n";
    return 2;
  } catch (const LimitExceeded& e) {
    std::cerr << "[error] limit: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "[error] " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
