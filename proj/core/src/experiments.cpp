#include "fingeo/experiments.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "fingeo/certificates.hpp"
#include "fingeo/errors.hpp"

namespace fingeo {

std::string GridInstance::label() const {
  return "n" + std::to_string(n) + "k" + std::to_string(k) + "q" + std::to_string(q) + "t" + std::to_string(t);
}

std::vector<GridInstance> ExperimentConfig::default_grid() {
  return {{2, 1, 2, 2}, {3, 2, 2, 2}, {2, 1, 3, 2}, {3, 2, 3, 2}, {2, 1, 2, 1}};
}

void apply_limit_overrides(ExperimentLimits& limits, const std::string& spec) {
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw PreconditionError("limits: expected key=value, got '" + item + "'");
    const std::string key = item.substr(0, eq);
    std::uint64_t v = 0;
    try {
      std::size_t used = 0;
      v = std::stoull(item.substr(eq + 1), &used);
      if (used != item.size() - eq - 1) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw PreconditionError("limits: bad number in '" + item + "'");
    }
    if (key == "tau_vertices") limits.solve.tau_vertices = static_cast<std::uint32_t>(v);
    else if (key == "ucn_vertices") limits.solve.ucn_vertices = static_cast<std::uint32_t>(v);
    else if (key == "node_limit") limits.solve.node_limit = v;
    else if (key == "max_points") limits.space.max_points = v;
    else if (key == "max_subspaces") limits.space.max_subspaces = v;
    else if (key == "kernel_limit") limits.kernel_limit = v;
    else if (key == "tmodp_samples") limits.tmodp_samples = v;
    else throw PreconditionError("limits: unknown key '" + key + "'");
  }
}

ExperimentLimits limits_from_env() {
  ExperimentLimits limits;
  if (const char* env = std::getenv(kLimitsEnv)) apply_limit_overrides(limits, env);
  return limits;
}

bool ExperimentSummary::ok() const {
  return std::none_of(rows.begin(), rows.end(), [](const SummaryRow& r) { return r.match == false; });
}

std::optional<std::string> validate(const GridInstance& g) {
  std::uint32_t p = 0, h = 0;
  if (!prime_power_decompose(g.q, p, h)) return "q = " + std::to_string(g.q) + " is not a prime power";
  if (g.n < 2) return "n must be at least 2";
  if (g.k < 1 || g.k > g.n - 1) return "k must satisfy 1 <= k <= n-1";
  if (g.t < 1) return "t must be positive";
  return std::nullopt;
}

namespace {

struct TaskOutput {
  std::vector<SummaryRow> rows;
  std::vector<std::pair<std::string, std::string>> files;  // name, contents
};

std::string yes(bool b) { return b ? "true" : "false"; }

TaskOutput run_instance(const GridInstance& g, const ExperimentConfig& cfg) {
  TaskOutput out;
  const std::string id = g.label();
  auto row = [&](std::string quantity, std::string value, std::string expected, std::optional<bool> match) {
    out.rows.push_back({id, std::move(quantity), std::move(value), std::move(expected), match});
  };
  auto emit = [&](const std::string& quantity, const Certificate& c) {
    out.files.emplace_back(id + "_" + quantity + ".json", serialize(c));
  };

  auto space = ProjectiveSpace::make(g.n, g.q, cfg.limits.space);
  const Hypergraph h = space->build_hypergraph(g.k);
  const int dual = g.n - g.k;
  const std::uint64_t nv = h.vertex_count;

  // tau_t, with the folklore value as reference when both sides apply.
  const SolveResult tau = exact_tau(h, g.t, cfg.limits.solve);
  std::string expected_tau;
  if (g.t <= g.q && g.t * static_cast<std::uint64_t>(dual + 1) <= static_cast<std::uint64_t>(g.n + 1))
    expected_tau = std::to_string(g.t * theta(dual, g.q));
  const std::string tau_value = tau.status == ProofStatus::optimal
                                    ? std::to_string(tau.objective)
                                    : "[" + std::to_string(tau.lower) + "," + std::to_string(tau.upper) + "]";
  row("tau_" + std::to_string(g.t), tau_value, expected_tau,
      expected_tau.empty() || tau.status != ProofStatus::optimal
          ? std::optional<bool>{}
          : std::optional<bool>{std::to_string(tau.objective) == expected_tau});
  row("tau_status", to_string(tau.status), "", std::nullopt);
  // Excess of tau_2 over two lines in a plane.
  if (g.n == 2 && g.k == 1 && g.t == 2 && tau.status == ProofStatus::optimal)
    row("tau2_plane_excess", std::to_string(static_cast<std::int64_t>(tau.objective) - 2 * (g.q + 1)), "",
        std::nullopt);
  Certificate tc = transversal_certificate(h, g.t, tau);
  tc.meta["seed"] = cfg.seed;
  emit("transversal", tc);

  std::vector<std::uint32_t> w(nv, 0);
  for (auto v : tau.transversal) w[v] = 1;
  WeightedPointSet b(space, w);
  emit("blocking_set", blocking_set_certificate(b, {claim_t_fold_blocking(b, g.t, g.k), claim_minimal(b, g.t, g.k)}));

  if (g.t == 2) {
    const Coloring triv = trivial_coloring(tau.transversal, h);
    const bool round_trip = is_proper(triv, h).proper && is_trivial_coloring(triv, h).has_value();
    std::string expected;
    if (2 * dual < g.n) expected = std::to_string(theta(g.n, g.q) - 2 * theta(dual, g.q) + 1);
    const std::string value = std::to_string(triv.num_colors());
    row("trivial_colors", value, expected,
        expected.empty() ? std::optional<bool>{round_trip} : std::optional<bool>{round_trip && value == expected});
    emit("trivial_coloring", coloring_certificate(h, triv));

    const SolveResult ucn = exact_ucn(h, cfg.limits.solve);
    const std::uint64_t trivial_bound = nv - tau.upper + 1;
    if (ucn.status == ProofStatus::optimal) {
      row("ucn", std::to_string(ucn.objective), ">=" + std::to_string(trivial_bound),
          tau.status == ProofStatus::optimal ? std::optional<bool>{ucn.objective >= trivial_bound} : std::nullopt);
      row("ucn_equals_trivial_bound", yes(ucn.objective == trivial_bound), "", std::nullopt);
    } else {
      row("ucn", "[" + std::to_string(ucn.lower) + "," + std::to_string(ucn.upper) + "]", "", std::nullopt);
    }
    row("ucn_status", to_string(ucn.status), "", std::nullopt);
    if (ucn.coloring) {
      Certificate cc = coloring_certificate(h, *ucn.coloring, ucn);
      cc.meta["seed"] = cfg.seed;
      emit("ucn_coloring", cc);
    }
  }

  const BoundsReport br = bounds_report(g.n, dual, g.q, g.t);
  row("trivial_lower", to_string(Rational(br.trivial_lower)), "", std::nullopt);
  emit("bounds", bounds_certificate(br));

  std::uint32_t p = 0, hh = 0;
  prime_power_decompose(g.q, p, hh);
  if (g.n == 2 && g.k == 1 && hh == 1 && 8 * (g.t - 1) <= 3 * g.q) {
    TModPReport rep;
    try {
      rep = verify_tmodp_theorem(p, g.t, std::nullopt, std::nullopt, cfg.seed, cfg.limits.kernel_limit);
    } catch (const KernelTooLarge&) {
      rep = verify_tmodp_theorem(p, g.t, std::nullopt, cfg.limits.tmodp_samples, cfg.seed, cfg.limits.kernel_limit);
    }
    row("tmodp_sets", std::to_string(rep.sets.size()), std::to_string(rep.expected_unions),
        rep.exhaustive ? std::optional<bool>{rep.sets.size() == rep.expected_unions} : std::nullopt);
    row("tmodp_violations", std::to_string(rep.violations.size()), "0",
        std::optional<bool>{rep.violations.empty()});
    row("tmodp_exhaustive", yes(rep.exhaustive), "", std::nullopt);
    row("tmodp_uncapped_observations", std::to_string(rep.uncapped_observations), "", std::nullopt);
    Certificate c = tmodp_certificate(rep);
    c.meta["seed"] = cfg.seed;
    emit("tmodp_report", c);
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string match_text(const std::optional<bool>& m) { return m ? (*m ? "yes" : "NO") : ""; }

}  // namespace

std::string summary_csv(const ExperimentSummary& s) {
  std::string out = "instance,quantity,value,expected,match\n";
  for (const auto& r : s.rows)
    out += csv_field(r.instance) + "," + csv_field(r.quantity) + "," + csv_field(r.value) + "," +
           csv_field(r.expected) + "," + match_text(r.match) + "\n";
  return out;
}

std::string summary_table(const ExperimentSummary& s) {
  std::vector<std::array<std::string, 5>> cells{{"instance", "quantity", "value", "expected", "match"}};
  for (const auto& r : s.rows) cells.push_back({r.instance, r.quantity, r.value, r.expected, match_text(r.match)});
  std::array<std::size_t, 5> width{};
  for (const auto& c : cells)
    for (std::size_t i = 0; i < 5; ++i) width[i] = std::max(width[i], c[i].size());
  std::string out;
  for (const auto& c : cells) {
    std::string line;
    for (std::size_t i = 0; i < 5; ++i) line += c[i] + std::string(width[i] - c[i].size() + 2, ' ');
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

ExperimentSummary run_experiments(const ExperimentConfig& cfg, std::ostream* log) {
  const std::size_t n = cfg.grid.size();
  std::vector<std::optional<std::string>> invalid(n);
  for (std::size_t i = 0; i < n; ++i) invalid[i] = validate(cfg.grid[i]);

  std::vector<TaskOutput> outputs(n);
  std::atomic<std::size_t> next{0};
  std::mutex log_mutex;
  auto worker = [&] {
    for (std::size_t i; (i = next++) < n;) {
      const auto& g = cfg.grid[i];
      if (invalid[i]) {
        outputs[i].rows.push_back({g.label(), "error", *invalid[i], "", std::nullopt});
        continue;
      }
      if (log) {
        std::lock_guard lock(log_mutex);
        *log << "[task] start " << g.label() << "\n";
      }
      try {
        outputs[i] = run_instance(g, cfg);
      } catch (const std::exception& e) {
        outputs[i] = {};
        outputs[i].rows.push_back({g.label(), "error", e.what(), "", std::nullopt});
      }
      if (log) {
        std::lock_guard lock(log_mutex);
        *log << "[task] done " << g.label() << "\n";
      }
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(cfg.threads, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  ExperimentSummary summary;
  const auto cert_dir = cfg.out_dir / "certificates";
  std::filesystem::create_directories(cert_dir);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t rechecked = 0, passed = 0;
    for (const auto& [name, text] : outputs[i].files) {
      const auto path = cert_dir / name;
      std::ofstream(path, std::ios::binary) << text;
      summary.certificates.push_back(path);
      ++rechecked;
      const auto verdict = recheck(text);
      passed += verdict.ok();
      if (log && !verdict.ok())
        for (const auto& f : verdict.failures) *log << "[recheck] " << name << " " << f << "\n";
    }
    for (auto& r : outputs[i].rows) summary.rows.push_back(std::move(r));
    if (rechecked)
      summary.rows.push_back({cfg.grid[i].label(), "certificates_rechecked",
                              std::to_string(passed) + "/" + std::to_string(rechecked), std::to_string(rechecked),
                              passed == rechecked});
  }
  std::ofstream(cfg.out_dir / "summary.csv", std::ios::binary) << summary_csv(summary);
  std::ofstream(cfg.out_dir / "summary.txt", std::ios::binary) << summary_table(summary);
  if (log)
    for (const auto& r : summary.rows)
      *log << "[row] instance=" << r.instance << " quantity=" << r.quantity << " value=" << r.value
           << " expected=" << r.expected << " match=" << match_text(r.match) << "\n";
  return summary;
}

}  // namespace fingeo
