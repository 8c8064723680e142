/*
 * Copyright 2026 the scsim authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Command-line front end: exact delays and converse bounds, symbolic and
// byte-level delivery simulation, profile sweeps, and the brute-force
// verification suites.
//
// Exit codes: 0 success, 2 input error, 3 decode failure, 4 delay mismatch,
// 5 oracle failure.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "scc/decode.hpp"
#include "scc/delivery.hpp"
#include "scc/json_io.hpp"
#include "scc/multirequest.hpp"
#include "scc/oracles.hpp"
#include "scc/placement.hpp"
#include "scc/reports.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitDecode = 3;
constexpr int kExitMismatch = 4;
constexpr int kExitOracle = 5;

using namespace scc;

std::vector<int> parse_int_list(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    const int value = std::stoi(item, &used);
    if (used != item.size()) throw std::invalid_argument("bad integer: " + item);
    out.push_back(value);
  }
  if (out.empty()) throw std::invalid_argument("empty list");
  return out;
}

std::string format_value(const Rational& v) {
  char decimal[64];
  std::snprintf(decimal, sizeof(decimal), "%.6f", v.to_double());
  return v.to_string() + " (" + decimal + ")";
}

Rational resolve_t(const std::string& t_flag, const std::string& gamma_flag,
                   int caches) {
  if (!t_flag.empty() && !gamma_flag.empty())
    throw std::invalid_argument("give either --t or --gamma, not both");
  if (!t_flag.empty()) return Rational::parse(t_flag);
  if (!gamma_flag.empty()) return Rational::parse(gamma_flag) * Rational(caches);
  throw std::invalid_argument("one of --t or --gamma is required");
}

int require_integer_t(const Rational& t) {
  if (!t.is_integer())
    throw std::invalid_argument("simulation needs an integer --t");
  return static_cast<int>(t.num().get_si());
}

/// Association with the profile's sizes, spread over caches and users by seed.
Association association_from_profile(const Profile& profile, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  std::vector<int> sizes(profile.counts());
  for (std::size_t i = sizes.size() - 1; i > 0; --i)
    std::swap(sizes[i], sizes[rng() % (i + 1)]);
  std::vector<int> ids(profile.total_users());
  std::iota(ids.begin(), ids.end(), 1);
  for (std::size_t i = ids.size() - 1; i > 0; --i)
    std::swap(ids[i], ids[rng() % (i + 1)]);
  Association assoc;
  assoc.per_cache.resize(sizes.size());
  std::size_t next = 0;
  for (std::size_t lam = 0; lam < sizes.size(); ++lam)
    for (int j = 0; j < sizes[lam]; ++j) assoc.per_cache[lam].push_back(ids[next++]);
  return assoc;
}

Profile profile_from_flag(const std::string& flag) {
  return Profile(parse_int_list(flag));
}

nlohmann::json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  nlohmann::json j;
  in >> j;
  return j;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << text;
}

// ---- subcommand bodies ----------------------------------------------------

struct SimulateArgs {
  std::string profile_flag;
  std::string assoc_path;
  std::string demand_path;
  std::string t_flag;
  int antennas = 1;
  int files = 0;  // 0: defaults to K
  std::uint64_t seed = 1;
  std::string out_path;
  std::string report_path;
  std::size_t block_bytes = 8;
  bool multi_request = false;
};

int run_simulation(const SimulateArgs& args) {
  Association assoc;
  if (!args.assoc_path.empty()) {
    assoc = association_from_json(load_json(args.assoc_path));
  } else if (!args.profile_flag.empty()) {
    assoc = association_from_profile(profile_from_flag(args.profile_flag), args.seed);
  } else {
    throw std::invalid_argument("need --assoc or --profile");
  }
  const Profile profile = profile_of(assoc);
  const int users = assoc.users();
  const int files = args.files > 0 ? args.files : users;
  const int t = require_integer_t(Rational::parse(args.t_flag));
  const SystemParams params(files, users, assoc.caches(), args.antennas, t);

  DemandVector demand;
  if (!args.demand_path.empty())
    demand = demand_from_json(load_json(args.demand_path));
  else
    demand = worst_case_demand(params, args.seed);
  demand.validate(params, /*require_distinct=*/false);

  if (args.block_bytes < 1) throw std::invalid_argument("--block-bytes must be >= 1");

  const Transcript transcript = args.multi_request
                                    ? mfr_deliver(assoc, demand, params)
                                    : deliver(assoc, demand, params);
  if (!args.out_path.empty())
    write_text(args.out_path, transcript_to_json(transcript).dump(2) + "\n");

  const Rational expected = args.multi_request
                                ? mfr_delay(profile, params, Rational(t))
                                : closed_form_delay(profile, params);
  const bool match = transcript.total_delay == expected;
  std::cout << "measured delay:    " << format_value(transcript.total_delay) << "\n";
  std::cout << "closed-form delay: " << format_value(expected) << "\n";
  std::cout << "delay check:       " << (match ? "MATCH" : "MISMATCH") << "\n";

  const auto caches = place(params);
  const DecodeReport symbolic =
      args.multi_request ? mfr_decode(transcript, caches, assoc, demand, params)
                         : decode_symbolic(transcript, caches, assoc, demand, params);
  int recovered = 0;
  for (const auto& [user, res] : symbolic.per_user) recovered += res.recovered;
  std::cout << "symbolic decode:   " << recovered << "/" << symbolic.per_user.size()
            << " recovered\n";

  bool bytes_ok = true;
  if (params.antennas == 1 && !args.multi_request) {
    const BigInt pieces = binomial(params.num_caches, t);
    const Library lib = Library::random(
        files, args.block_bytes * pieces.get_ui(), args.seed + 1);
    const auto byte_report =
        decode_xor(transcript, caches, lib, assoc, demand, params);
    bytes_ok = byte_report.all_recovered();
    int byte_recovered = 0;
    for (const auto& [user, res] : byte_report.per_user)
      byte_recovered += res.recovered;
    std::cout << "byte decode:       " << byte_recovered << "/"
              << byte_report.per_user.size() << " recovered\n";
  }

  if (!args.report_path.empty())
    write_text(args.report_path, decode_report_to_json(symbolic).dump(2) + "\n");

  if (!symbolic.all_recovered() || !bytes_ok) return kExitDecode;
  if (!match) return kExitMismatch;
  return kExitOk;
}

// ---- verification suites ----------------------------------------------------

struct SuiteResult {
  std::string name;
  bool pass = false;
  std::string note;
};

SuiteResult suite_qi(std::uint64_t max_enum) {
  SuiteResult result{"qi", true, ""};
  std::mt19937_64 rng(2026);
  long instances = 0;
  for (int users = 2; users <= 5; ++users) {
    for (int caches = 1; caches <= std::min(3, users); ++caches) {
      const int files = users;
      const SystemParams params(files, users, caches, 1, 0);
      std::vector<int> counts(caches, 0);
      std::function<bool(int, int, int)> sweep = [&](int pos, int left, int cap) {
        if (pos == caches) {
          if (left != 0) return true;
          const Profile profile(counts);
          if (demand_class_size(profile, params) >
              BigInt(static_cast<unsigned long>(max_enum)))
            return true;
          ++instances;
          for (int i = 0; i <= caches; ++i) {
            const BigInt closed = subfile_selection_count(i, profile, params);
            for (std::uint64_t set : subsets_of_size(caches, i)) {
              const int file = 1 + static_cast<int>(rng() % files);
              const auto counted = selection_count_by_enumeration(
                  profile, params, file, set, max_enum);
              if (BigInt(static_cast<unsigned long>(counted)) != closed) {
                result.pass = false;
                result.note = "count mismatch at K=" + std::to_string(users);
                return false;
              }
            }
          }
          return true;
        }
        for (int c = std::min(cap, left); c >= 0; --c) {
          counts[pos] = c;
          if (!sweep(pos + 1, left - c, c)) return false;
        }
        return true;
      };
      if (!sweep(0, users, users)) return result;
    }
  }
  if (result.pass) result.note = std::to_string(instances) + " instances";
  return result;
}

SuiteResult suite_transmission_identity(int samples) {
  SuiteResult result{"transmission-identity", true, ""};
  std::mt19937_64 rng(2027);
  for (int rep = 0; rep < samples; ++rep) {
    const int caches = 1 + static_cast<int>(rng() % 8);
    const int users = caches + static_cast<int>(rng() % 33);
    std::vector<int> counts(caches, 0);
    for (int u = 0; u < users; ++u) counts[rng() % caches] += 1;
    std::sort(counts.begin(), counts.end(), std::greater<int>());
    const Profile profile(counts);
    const int t = static_cast<int>(rng() % (caches + 1));
    const SystemParams params(users, users, caches, 1, t);
    if (!transmission_count_identity(profile, params)) {
      result.pass = false;
      result.note = "identity failed at sample " + std::to_string(rep);
      return result;
    }
  }
  result.note = std::to_string(samples) + " samples";
  return result;
}

SuiteResult suite_acyclic(int samples) {
  SuiteResult result{"acyclic", true, ""};
  std::mt19937_64 rng(2028);
  for (int rep = 0; rep < samples; ++rep) {
    const int caches = 2 + static_cast<int>(rng() % 4);  // up to 5
    const int users = caches + static_cast<int>(rng() % 6);
    std::vector<int> counts(caches, 1);
    for (int u = caches; u < users; ++u) counts[rng() % caches] += 1;
    std::sort(counts.begin(), counts.end(), std::greater<int>());
    Association assoc;
    assoc.per_cache.resize(caches);
    int next = 1;
    for (int lam = 0; lam < caches; ++lam)
      for (int j = 0; j < counts[lam]; ++j) assoc.per_cache[lam].push_back(next++);
    const SystemParams params(users, users, caches, 1, 0);
    const auto graph = build_side_info_graph(assoc, worst_case_demand(params, rng()));
    std::vector<int> sigma(caches);
    std::iota(sigma.begin(), sigma.end(), 1);
    std::size_t best = 0;
    do {
      const auto sel = acyclic_selection(graph, sigma);
      if (!induced_subgraph_is_acyclic(graph, sel.nodes)) {
        result.pass = false;
        result.note = "cyclic selection found";
        return result;
      }
      best = std::max(best, sel.nodes.size());
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    if (acyclic_selection(graph, sort_permutation(assoc)).nodes.size() != best) {
      result.pass = false;
      result.note = "sorted permutation is not maximal";
      return result;
    }
  }
  result.note = std::to_string(samples) + " instances, all permutations";
  return result;
}

SuiteResult suite_tightness(int samples) {
  SuiteResult result{"tightness", true, ""};
  std::mt19937_64 rng(2029);
  for (int rep = 0; rep < samples; ++rep) {
    const int caches = 1 + static_cast<int>(rng() % 8);
    const int users = caches + static_cast<int>(rng() % 33);
    const int streams = 1 + static_cast<int>(rng() % 3);
    std::vector<int> counts(caches, 0);
    for (int u = 0; u < users; ++u) counts[rng() % caches] += 1;
    std::sort(counts.begin(), counts.end(), std::greater<int>());
    const Profile profile(counts);
    const SystemParams params(users, users, caches, streams, 0);
    for (int t = 0; t <= caches; ++t) {
      if (converse_bound(profile, params, Rational(t)) !=
          optimal_delay(profile, params, Rational(t))) {
        result.pass = false;
        result.note = "bound gap at t=" + std::to_string(t);
        return result;
      }
    }
  }
  result.note = std::to_string(samples) + " profiles, all integer t";
  return result;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coded-caching shared-cache delay calculator, simulator and verifier"};
  app.require_subcommand(1);

  // delay
  auto* delay_cmd = app.add_subcommand("delay", "exact optimal delay for a profile");
  std::string delay_profile, delay_t, delay_gamma;
  int delay_antennas = 1;
  delay_cmd->add_option("--profile", delay_profile, "user counts, e.g. 8,5,2")
      ->required();
  delay_cmd->add_option("--antennas", delay_antennas, "transmit streams");
  delay_cmd->add_option("--t", delay_t, "integer or rational memory parameter");
  delay_cmd->add_option("--gamma", delay_gamma, "normalized cache size p/q");

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "CSV of delay over t for many profiles");
  std::string sweep_profiles_path;
  int sweep_users = 0, sweep_caches = 0, sweep_antennas = 1;
  sweep_cmd->add_option("--users", sweep_users, "number of users K")->required();
  sweep_cmd->add_option("--caches", sweep_caches, "number of caches")->required();
  sweep_cmd->add_option("--antennas", sweep_antennas, "transmit streams");
  sweep_cmd->add_option("--profiles", sweep_profiles_path, "file with one profile per line")
      ->required();

  // simulate
  auto* sim_cmd = app.add_subcommand("simulate", "run delivery, verify decode and delay");
  SimulateArgs sim;
  sim_cmd->add_option("--profile", sim.profile_flag, "profile; association drawn by seed");
  sim_cmd->add_option("--assoc", sim.assoc_path, "association JSON path");
  sim_cmd->add_option("--demand", sim.demand_path, "demand JSON path (default: worst-case by seed)");
  sim_cmd->add_option("--t", sim.t_flag, "integer memory parameter")->required();
  sim_cmd->add_option("--antennas", sim.antennas, "transmit streams");
  sim_cmd->add_option("--files", sim.files, "library size N (default K)");
  sim_cmd->add_option("--seed", sim.seed, "seed for association/demand/library");
  sim_cmd->add_option("--out", sim.out_path, "write transcript JSON here");
  sim_cmd->add_option("--report", sim.report_path, "write decode report JSON here");
  sim_cmd->add_option("--block-bytes", sim.block_bytes, "bytes per mini-file for byte decode");

  // converse
  auto* conv_cmd = app.add_subcommand("converse", "CSV of the converse bound over t");
  std::string conv_profile;
  int conv_antennas = 1, conv_files = 0, conv_den = 1;
  conv_cmd->add_option("--profile", conv_profile, "user counts, e.g. 4,3,2")->required();
  conv_cmd->add_option("--antennas", conv_antennas, "transmit streams");
  conv_cmd->add_option("--files", conv_files, "library size N (default K)");
  conv_cmd->add_option("--denominator", conv_den, "sample t at multiples of 1/denominator");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run brute-force oracle suites");
  std::string suite = "all";
  std::uint64_t max_enum = 100000;
  int samples = 0;
  verify_cmd->add_option("--suite", suite,
                         "qi | transmission-identity | acyclic | tightness | all");
  verify_cmd->add_option("--max-enum", max_enum, "demand-class enumeration cap");
  verify_cmd->add_option("--samples", samples, "random instances per suite");

  // mfr-delay
  auto* mfr_delay_cmd = app.add_subcommand("mfr-delay", "optimal multi-request delay");
  std::string mfr_requests, mfr_t, mfr_gamma;
  mfr_delay_cmd->add_option("--requests", mfr_requests, "requests per user, e.g. 4,3,2")
      ->required();
  mfr_delay_cmd->add_option("--t", mfr_t, "integer or rational memory parameter");
  mfr_delay_cmd->add_option("--gamma", mfr_gamma, "normalized cache size p/q");

  // mfr-simulate
  auto* mfr_sim_cmd = app.add_subcommand("mfr-simulate", "simulate the multi-request scheme");
  SimulateArgs mfr_sim;
  mfr_sim.multi_request = true;
  mfr_sim_cmd->add_option("--requests", mfr_sim.profile_flag, "requests per user")
      ->required();
  mfr_sim_cmd->add_option("--demand", mfr_sim.demand_path,
                          "demand JSON path (default: worst-case by seed)");
  mfr_sim_cmd->add_option("--t", mfr_sim.t_flag, "integer memory parameter")->required();
  mfr_sim_cmd->add_option("--files", mfr_sim.files, "library size N (default K)");
  mfr_sim_cmd->add_option("--seed", mfr_sim.seed, "seed for association/demand");
  mfr_sim_cmd->add_option("--out", mfr_sim.out_path, "write transcript JSON here");
  mfr_sim_cmd->add_option("--report", mfr_sim.report_path, "write decode report JSON here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitOk : kExitInput;
  }

  try {
    if (delay_cmd->parsed()) {
      const Profile profile = profile_from_flag(delay_profile);
      const SystemParams params(profile.total_users(), profile.total_users(),
                                profile.caches(), delay_antennas, 0);
      const Rational t = resolve_t(delay_t, delay_gamma, profile.caches());
      std::cout << format_value(optimal_delay(profile, params, t)) << "\n";
      return kExitOk;
    }

    if (sweep_cmd->parsed()) {
      std::ifstream in(sweep_profiles_path);
      if (!in) throw std::invalid_argument("cannot open " + sweep_profiles_path);
      std::vector<Profile> profiles;
      std::string line;
      int line_no = 0;
      while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        try {
          profiles.push_back(profile_from_flag(line));
        } catch (const std::exception& e) {
          throw std::invalid_argument("profiles line " + std::to_string(line_no) +
                                      ": " + e.what());
        }
      }
      std::cout << sweep_csv(sweep_users, sweep_caches, sweep_antennas, profiles);
      return kExitOk;
    }

    if (sim_cmd->parsed()) return run_simulation(sim);

    if (conv_cmd->parsed()) {
      const Profile profile = profile_from_flag(conv_profile);
      const int users = profile.total_users();
      const SystemParams params(conv_files > 0 ? conv_files : users, users,
                                profile.caches(), conv_antennas, 0);
      std::cout << converse_csv(profile, params, conv_den);
      return kExitOk;
    }

    if (verify_cmd->parsed()) {
      std::vector<SuiteResult> results;
      if (suite == "qi" || suite == "all")
        results.push_back(suite_qi(max_enum));
      if (suite == "transmission-identity" || suite == "all")
        results.push_back(suite_transmission_identity(samples > 0 ? samples : 1000));
      if (suite == "acyclic" || suite == "all")
        results.push_back(suite_acyclic(samples > 0 ? samples : 20));
      if (suite == "tightness" || suite == "all")
        results.push_back(suite_tightness(samples > 0 ? samples : 200));
      if (results.empty()) throw std::invalid_argument("unknown suite: " + suite);
      bool all_pass = true;
      for (const auto& r : results) {
        std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name;
        if (!r.note.empty()) std::cout << "  (" << r.note << ")";
        std::cout << "\n";
        all_pass = all_pass && r.pass;
      }
      return all_pass ? kExitOk : kExitOracle;
    }

    if (mfr_delay_cmd->parsed()) {
      const Profile profile = profile_from_flag(mfr_requests);
      const SystemParams params(profile.total_users(), profile.total_users(),
                                profile.caches(), 1, 0);
      const Rational t = resolve_t(mfr_t, mfr_gamma, profile.caches());
      std::cout << format_value(mfr_delay(profile, params, t)) << "\n";
      return kExitOk;
    }

    if (mfr_sim_cmd->parsed()) return run_simulation(mfr_sim);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
