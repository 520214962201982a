/**
 * @file run.hpp
 * @brief The chi-kit command line: subcommands, config, parallel execution and report output.
 */
#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "chikit/chikit.hpp"

namespace chikit::cli {

inline constexpr const char* kVersion = "1.0.0";

inline const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> names = {"shuffle",   "brion",          "ez-diagram", "co-leibniz", "coassoc",
                                                 "theta-pullback", "theta-ez", "e1",         "cone-claim", "leibniz",
                                                 "dsq",       "constants",      "all"};
  return names;
}

struct RunConfig {
  std::string suite;
  std::optional<int> m, n, r;
  int max_size = 6;
  int max_n = 12;
  int p_max = 20;
  std::string format = "json";
  std::string output;
  std::string csv;
  unsigned threads = 0;
  std::uint64_t seed = 1;
  unsigned samples = 200;
  unsigned models = 20;
  bool timing = false;
  bool inject_failure = false;

  /// Everything that determines the report contents; threads and paths are left out.
  Json echo() const {
    auto opt = [](const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); };
    return Json{{"suite", suite},     {"m", opt(m)},           {"n", opt(n)},
                {"r", opt(r)},         {"max_size", max_size},  {"max_n", max_n},
                {"p_max", p_max},      {"format", format},      {"seed", seed},
                {"samples", samples},  {"models", models},      {"inject_failure", inject_failure}};
  }
};

using Job = std::function<VerificationReport()>;

/// Runs jobs on up to `threads` workers; results keep the job order.
inline std::vector<VerificationReport> run_jobs(const std::vector<Job>& jobs, unsigned threads) {
  std::vector<VerificationReport> out(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      try {
        out[i] = jobs[i]();
      } catch (const std::exception& e) {
        out[i] = VerificationReport("error", Json::object());
        out[i].details = {{"exception", e.what()}};
      }
    }
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(jobs.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return out;
}

inline unsigned effective_threads(unsigned requested) {
  unsigned n = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("CHI_KIT_THREADS")) {
    char* end = nullptr;
    long cap = std::strtol(env, &end, 10);
    if (end != env && cap >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
  }
  return n;
}

/// Folds many instance reports into one, keeping the failing instances.
inline VerificationReport fold(const std::string& id, Json params, const std::vector<VerificationReport>& parts) {
  VerificationReport rep(id, std::move(params));
  rep.pass = !parts.empty();
  Json failing = Json::array();
  for (const auto& p : parts) {
    rep.elapsed_ms += p.elapsed_ms;
    if (!p.pass) {
      rep.pass = false;
      failing.push_back(p.params);
    }
  }
  rep.details = {{"instances", parts.size()}, {"failing", failing}};
  return rep;
}

/// (m, n) pairs with m + n <= max; both m and n from the flags when given.
inline std::vector<std::pair<unsigned, unsigned>> pairs(const RunConfig& c, int max, unsigned min_total = 0) {
  std::vector<std::pair<unsigned, unsigned>> out;
  if (c.m && c.n) {
    out.emplace_back(*c.m, *c.n);
    return out;
  }
  for (int m = 0; m <= max; ++m)
    for (int n = 0; m + n <= max; ++n) {
      if (c.m && m != *c.m) continue;
      if (c.n && n != *c.n) continue;
      if (static_cast<unsigned>(m + n) >= min_total) out.emplace_back(m, n);
    }
  return out;
}

inline void add_shuffle(std::vector<Job>& jobs, const RunConfig& c) {
  VerifyOptions opt{c.inject_failure};
  for (auto [m, n] : pairs(c, c.max_size)) jobs.push_back([=] { return verify_shuffle_relation(m, n, opt); });
  for (auto [m, n] : pairs(c, std::min(c.max_size, 5))) {
    if (m + n > 5) continue;
    jobs.push_back([=] {
      std::vector<VerificationReport> parts;
      for (const auto& s : Permutation::all(m))
        for (const auto& t : Permutation::all(n)) parts.push_back(verify_multiplicativity(s, t));
      return fold("hopf.multiplicativity", Json{{"m", m}, {"n", n}}, parts);
    });
  }
}

inline void add_brion(std::vector<Job>& jobs, const RunConfig& c) {
  for (auto [m, n] : pairs(c, c.max_size)) jobs.push_back([=] { return verify_brion(m, n); });
  for (int N = 1; N <= c.max_size; ++N) jobs.push_back([=] { return verify_bridge(N); });
  for (unsigned N = 1; N <= static_cast<unsigned>(std::min(c.max_size, 4)); ++N)
    for (long B = 0; B <= 5; ++B) jobs.push_back([=] { return verify_lattice(N, B); });
}

inline void add_ez(std::vector<Job>& jobs, const RunConfig& c, bool diagram) {
  for (auto [m, n] : pairs(c, c.max_size, diagram ? 0 : 1)) {
    if (diagram)
      jobs.push_back([=] { return verify_ez_diagram(m, n); });
    else
      jobs.push_back([=] { return verify_co_leibniz(m, n); });
  }
}

inline void add_coassoc(std::vector<Job>& jobs, const RunConfig& c) {
  for (int m = 0; m <= c.max_size; ++m)
    for (int n = 0; m + n <= c.max_size; ++n)
      for (int r = 0; m + n + r <= c.max_size; ++r) {
        if ((c.m && m != *c.m) || (c.n && n != *c.n) || (c.r && r != *c.r)) continue;
        jobs.push_back([=] { return verify_coassoc(m, n, r); });
      }
}

inline void add_theta_pullback(std::vector<Job>& jobs, const RunConfig& c) {
  for (int N = 1; N <= c.max_size; ++N) {
    if (c.n && N != *c.n) continue;
    jobs.push_back([=] { return verify_theta_pullback(N); });
  }
}

inline void add_theta_ez(std::vector<Job>& jobs, const RunConfig& c) {
  for (auto [m, n] : pairs(c, c.max_size)) jobs.push_back([=] { return verify_theta_ez(m, n); });
}

inline void add_cone_claim(std::vector<Job>& jobs, const RunConfig&) {
  for (int r = 0; r < 2; ++r)
    for (int s = 0; s < 2; ++s) {
      jobs.push_back([=] { return verify_cone_claim(r, s); });
      jobs.push_back([=] { return verify_hat_box_chain_map(r, s); });
      jobs.push_back([=] { return verify_homotopy_t(r, s); });
    }
  jobs.push_back([] { return verify_cone_claim_negative(); });
}

inline RandomSuiteOptions random_options(const RunConfig& c) {
  return {c.seed, c.models, c.samples, c.inject_failure};
}

inline void add_leibniz(std::vector<Job>& jobs, const RunConfig& c) {
  auto o = random_options(c);
  jobs.push_back([=] { return verify_product_random(o, false); });
  jobs.push_back([=] { return verify_product_random(o, true); });
}

inline void add_dsq(std::vector<Job>& jobs, const RunConfig& c) {
  auto o = random_options(c);
  jobs.push_back([=] { return verify_dsq_random(o); });
  jobs.push_back([=] { return verify_cone_dsq_random(o); });
}

inline void add_e1(std::vector<Job>& jobs, const RunConfig& c) {
  int p_max = c.p_max;
  jobs.push_back([=] { return e1_page(p_max); });
}

inline void add_constants(std::vector<Job>& jobs, const RunConfig& c) {
  int d = c.max_size, n = c.max_n;
  jobs.push_back([=] { return verify_constants(d, n); });
}

inline std::vector<Job> build_jobs(const RunConfig& c) {
  std::vector<Job> jobs;
  const std::string& s = c.suite;
  bool all = s == "all";
  if (all || s == "shuffle") add_shuffle(jobs, c);
  if (all || s == "brion") add_brion(jobs, c);
  if (all || s == "ez-diagram") add_ez(jobs, c, true);
  if (all || s == "co-leibniz") add_ez(jobs, c, false);
  if (all || s == "coassoc") add_coassoc(jobs, c);
  if (all || s == "theta-pullback") add_theta_pullback(jobs, c);
  if (all || s == "theta-ez") add_theta_ez(jobs, c);
  if (all || s == "e1") add_e1(jobs, c);
  if (all || s == "cone-claim") add_cone_claim(jobs, c);
  if (all || s == "leibniz") add_leibniz(jobs, c);
  if (all || s == "dsq") add_dsq(jobs, c);
  if (all || s == "constants") add_constants(jobs, c);
  return jobs;
}

inline std::string render(const RunConfig& c, const std::vector<VerificationReport>& reports, bool pass,
                          double wall_ms) {
  if (c.format == "text") {
    std::ostringstream os;
    std::size_t passed = 0;
    for (const auto& r : reports) {
      passed += r.pass;
      os << (r.pass ? "PASS " : "FAIL ") << r.statement << ' ' << r.params.dump();
      if (c.timing) os << ' ' << r.elapsed_ms << "ms";
      os << '\n';
    }
    os << (pass ? "PASS" : "FAIL") << ' ' << passed << '/' << reports.size() << '\n';
    return os.str();
  }
  Json map = Json::object();
  for (const auto& [id, text] : statement_catalog()) map[id] = text;
  Json list = Json::array();
  for (const auto& r : reports) list.push_back(r.to_json(c.timing));
  Json suite{{"tool", "chi-kit"},  {"version", kVersion}, {"config", c.echo()},
             {"statement_map", map}, {"reports", list},   {"pass", pass},
             {"wall_ms", c.timing ? wall_ms : 0.0}};
  return suite.dump(2) + "\n";
}

/// Parses argv into a config; throws CLI::ParseError on bad usage.
inline RunConfig parse(int argc, const char* const* argv, CLI::App& app) {
  RunConfig c;
  int m = -1, n = -1, r = -1;
  app.set_config("--config", "", "key=value file; flags on the command line take precedence");
  app.add_option("suite", c.suite, "Suite to run")->required()->check(CLI::IsMember(subcommands()));
  auto* om = app.add_option("--m", m, "First size")->check(CLI::NonNegativeNumber);
  auto* on = app.add_option("--n", n, "Second size")->check(CLI::NonNegativeNumber);
  auto* orr = app.add_option("--r", r, "Third size (coassoc)")->check(CLI::NonNegativeNumber);
  app.add_option("--max-size", c.max_size, "Bound on m+n (and N)")->check(CLI::Range(1, 12));
  app.add_option("--max-n", c.max_n, "Bound on N for the constants")->check(CLI::Range(1, 64));
  app.add_option("--p-max", c.p_max, "Largest E1 degree")->check(CLI::Range(1, 200));
  app.add_option("--format", c.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--output", c.output, "Write the report here instead of stdout");
  app.add_option("--csv", c.csv, "Write enumerated lattice points (brion, all)");
  app.add_option("--threads", c.threads, "Worker threads, 0 = hardware (capped by CHI_KIT_THREADS)");
  app.add_option("--seed", c.seed, "Seed for the random model suites");
  app.add_option("--samples", c.samples, "Random samples per suite")->check(CLI::PositiveNumber);
  app.add_option("--models", c.models, "Random models per suite")->check(CLI::PositiveNumber);
  app.add_flag("--timing", c.timing, "Include timings (reports are then no longer reproducible)");
  app.add_flag("--inject-failure", c.inject_failure, "Flip one sign in shuffle, leibniz and dsq");
  app.parse(argc, argv);
  if (*om) c.m = m;
  if (*on) c.n = n;
  if (*orr) c.r = r;
  if ((c.m && *c.m > c.max_size) || (c.n && *c.n > c.max_size) || (c.m && c.n && *c.m + *c.n > 12))
    throw CLI::ValidationError("--m/--n", "sizes exceed the configured bound");
  if (c.inject_failure && c.suite != "shuffle" && c.suite != "leibniz" && c.suite != "dsq" && c.suite != "all")
    throw CLI::ValidationError("--inject-failure", "supported for shuffle, leibniz, dsq and all");
  return c;
}

/// Exit code: 0 all pass, 1 some identity fails, 2 usage or I/O error.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"chi-kit: exact verification of shuffle, cone, form and total-complex identities", "chi-kit"};
  app.set_version_flag("--version", kVersion);
  RunConfig c;
  try {
    c = parse(argc, argv, app);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion& e) {
    out << kVersion << '\n';
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "chi-kit: " << e.what() << '\n';
    return 2;
  }

  auto start = std::chrono::steady_clock::now();
  auto reports = run_jobs(build_jobs(c), effective_threads(c.threads));
  std::stable_sort(reports.begin(), reports.end(),
                   [](const VerificationReport& a, const VerificationReport& b) { return a.statement < b.statement; });
  bool pass = !reports.empty() &&
              std::all_of(reports.begin(), reports.end(), [](const VerificationReport& r) { return r.pass; });

  if (!c.csv.empty() && (c.suite == "brion" || c.suite == "all")) {
    std::ofstream csv(c.csv);
    if (!csv) {
      err << "chi-kit: cannot write " << c.csv << '\n';
      return 2;
    }
    csv << "N,B,J,I\n";
    for (unsigned N = 1; N <= static_cast<unsigned>(std::min(c.max_size, 4)); ++N)
      write_lattice_csv(csv, enumerate_oracle(N, 5));
  }

  double wall = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  std::string text = render(c, reports, pass, wall);
  if (c.output.empty()) {
    out << text;
  } else {
    std::ofstream f(c.output, std::ios::binary);
    if (!(f << text)) {
      err << "chi-kit: cannot write " << c.output << '\n';
      return 2;
    }
  }
  std::size_t passed = std::count_if(reports.begin(), reports.end(), [](const auto& r) { return r.pass; });
  err << "chi-kit " << c.suite << ": " << passed << '/' << reports.size() << " passed"
      << (pass ? "" : ", FAILURES") << '\n';
  return pass ? 0 : 1;
}

}  // namespace chikit::cli
