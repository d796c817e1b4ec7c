// qmem: run a named experiment and write report.json or report.csv.
//
// Exit codes: 0 all rows satisfied, 1 some row unsatisfied, 2 usage or
// validation error, 3 enumeration cap exceeded, 4 numerical failure.

#include <algorithm>
#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qmem/qmem.hpp"

namespace {

enum Exit { kOk = 0, kUnsatisfied = 1, kUsage = 2, kCap = 3, kNumeric = 4 };

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

struct Output {
  std::string format = "json";
  std::string out = ".";
  bool timestamp = true;
};

void apply_config_file(const std::string& path, qmem::ExperimentConfig& cfg, Output& output) {
  std::ifstream in(path);
  if (!in) throw qmem::validation_error("cannot read config file '" + path + "'");
  qmem::json j;
  try {
    j = qmem::json::parse(in);
  } catch (const qmem::json::exception& e) {
    throw qmem::validation_error(std::string("config file is not valid JSON: ") + e.what());
  }
  qmem::detail::require(j.is_object(), "config file must hold a JSON object");
  try {
    if (j.contains("scenario")) cfg.scenario = j["scenario"].get<std::string>();
    if (j.contains("n")) cfg.n = j["n"].get<unsigned>();
    if (j.contains("s")) cfg.s = j["s"].get<unsigned>();
    if (j.contains("k")) cfg.k = j["k"].get<unsigned>();
    if (j.contains("dim")) cfg.dim = j["dim"].get<std::size_t>();
    if (j.contains("family")) cfg.family = j["family"].get<std::string>();
    if (j.contains("samples")) cfg.samples = j["samples"].get<std::size_t>();
    if (j.contains("mc_samples")) cfg.mc_samples = j["mc_samples"].get<std::size_t>();
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("exact")) cfg.exact = j["exact"].get<bool>();
    if (j.contains("format")) output.format = j["format"].get<std::string>();
    if (j.contains("out")) output.out = j["out"].get<std::string>();
    if (j.contains("timestamp")) output.timestamp = j["timestamp"].get<bool>();
  } catch (const qmem::json::exception& e) {
    throw qmem::validation_error(std::string("bad value in config file: ") + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distance-from-uniform experiments for bounded classical and quantum storage"};
  app.set_version_flag("--version", "qmem 1.0");

  std::string config_path, scenario, family, format, out;
  unsigned n = 0, s = 0, k = 0;
  std::size_t dim = 0, samples = 0, mc_samples = 0;
  std::uint64_t seed = 0;
  bool exact = true, no_timestamp = false;

  std::string scenario_help = "scenario to run:";
  for (const auto& name : qmem::scenario_names()) scenario_help += " " + name;
  auto* o_scenario = app.add_option("--scenario", scenario, scenario_help);
  auto* o_n = app.add_option("--n", n, "bit length of X (or alphabet size for hashing-lemma)");
  auto* o_s = app.add_option("--s", s, "storage size in bits or qubits");
  auto* o_k = app.add_option("--k", k, "output bits of the hash");
  auto* o_dim = app.add_option("--dim", dim, "Hilbert space dimension");
  auto* o_family = app.add_option("--family", family,
                                  "uniform-all | uniform-balanced | affine-gf2 | inner-product | composed");
  auto* o_samples = app.add_option("--samples", samples, "number of random instances");
  auto* o_mc = app.add_option("--mc-samples", mc_samples, "Monte Carlo draws per expectation when --no-exact");
  auto* o_seed = app.add_option("--seed", seed, "64-bit seed");
  auto* o_exact = app.add_flag("--exact,!--no-exact", exact, "exact enumeration (default) or Monte Carlo");
  auto* o_format = app.add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  auto* o_out = app.add_option("--out", out, "output directory");
  app.add_flag("--no-timestamp", no_timestamp, "omit the timestamp so reruns are byte-identical");
  app.add_option("--config", config_path, "JSON config file; flags take precedence")->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  qmem::ExperimentConfig cfg;
  Output output;
  try {
    if (!config_path.empty()) apply_config_file(config_path, cfg, output);
    if (o_scenario->count()) cfg.scenario = scenario;
    if (o_n->count()) cfg.n = n;
    if (o_s->count()) cfg.s = s;
    if (o_k->count()) cfg.k = k;
    if (o_dim->count()) cfg.dim = dim;
    if (o_family->count()) cfg.family = family;
    if (o_samples->count()) cfg.samples = samples;
    if (o_mc->count()) cfg.mc_samples = mc_samples;
    if (o_seed->count()) cfg.seed = seed;
    if (o_exact->count()) cfg.exact = exact;
    if (o_format->count()) output.format = format;
    if (o_out->count()) output.out = out;
    if (no_timestamp) output.timestamp = false;

    const auto& names = qmem::scenario_names();
    if (cfg.scenario.empty() || std::find(names.begin(), names.end(), cfg.scenario) == names.end()) {
      std::cerr << "error: unknown or missing scenario '" << cfg.scenario << "'\n" << app.help();
      return kUsage;
    }
    qmem::detail::require(output.format == "json" || output.format == "csv", "format must be json or csv");

    const qmem::ScenarioResult result = qmem::run_scenario(cfg);

    std::filesystem::create_directories(output.out);
    const std::filesystem::path path = std::filesystem::path(output.out) / ("report." + output.format);
    std::ofstream file(path, std::ios::binary);
    if (!file) throw qmem::validation_error("cannot write " + path.string());
    if (output.format == "json") {
      std::optional<std::string> stamp;
      if (output.timestamp) stamp = utc_timestamp();
      file << qmem::result_to_json(cfg, result, stamp).dump(2) << '\n';
    } else {
      file << qmem::reports_to_csv(result.rows);
    }

    std::size_t failed = 0;
    for (const auto& r : result.rows) {
      if (r.satisfied) continue;
      ++failed;
      std::cerr << "unsatisfied: " << r.label << " bound=" << r.bound_value;
      if (r.exact) std::cerr << " value=" << *r.exact;
      std::cerr << '\n';
    }
    std::cout << cfg.scenario << ": " << result.rows.size() << " rows, " << failed << " unsatisfied, wrote "
              << path.string() << '\n';
    return failed == 0 ? kOk : kUnsatisfied;
  } catch (const qmem::cap_exceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << '\n';
    return kCap;
  } catch (const qmem::validation_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const qmem::numeric_error& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kNumeric;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << '\n';
    return kNumeric;
  }
}
