// Copyright 2026 The crdcache Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "crd/cli.hpp"

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "crd/affine.hpp"
#include "crd/builtin.hpp"
#include "crd/delivery.hpp"
#include "crd/design_io.hpp"
#include "crd/metrics.hpp"
#include "crd/verifier.hpp"

namespace crd {

namespace {

constexpr const char* kOutputDirEnv = "CRDCACHE_OUTPUT_DIR";

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SourceOptions {
  std::string builtin_name;
  std::string design_path;
  std::vector<std::string> affine;
};

struct SchemeOptions {
  std::uint32_t z = 2;
  std::uint32_t t = 1;
  std::string demands = "distinct";
  std::optional<std::uint32_t> files;
  std::string demand_list;
  std::uint64_t seed = 0;
};

void add_source(CLI::App* cmd, SourceOptions& src, bool allow_file) {
  cmd->add_option("--builtin", src.builtin_name, "example1..example8");
  if (allow_file) {
    cmd->add_option("--design", src.design_path, "design file (JSON or plain)");
  }
  cmd->add_option("--affine", src.affine, "affine geometry design: q=<q> m=<m>")
      ->expected(2);
}

void add_scheme(CLI::App* cmd, SchemeOptions& opt) {
  cmd->add_option("--z", opt.z, "parallel classes per user")
      ->capture_default_str();
  cmd->add_option("--t", opt.t, "blocks per chosen class")
      ->capture_default_str();
  cmd->add_option("--demands", opt.demands, "distinct | random | list")
      ->check(CLI::IsMember({"distinct", "random", "list"}))
      ->capture_default_str();
  cmd->add_option("--files", opt.files, "file count N (default K)");
  cmd->add_option("--demand-list", opt.demand_list,
                  "comma-separated 1-based file ids, one per user");
  cmd->add_option("--seed", opt.seed, "seed for random demands and payloads")
      ->capture_default_str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_atomically(const std::filesystem::path& path,
                      const std::string& content) {
  auto tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << content;
    if (!out.flush()) throw std::runtime_error("cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

std::optional<std::filesystem::path> default_output(const std::string& name) {
  const char* dir = std::getenv(kOutputDirEnv);
  if (!dir || !*dir) return std::nullopt;
  return std::filesystem::path(dir) / name;
}

AffineParams parse_affine(const std::vector<std::string>& tokens) {
  AffineParams params;
  bool have_q = false;
  bool have_m = false;
  for (const auto& tok : tokens) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos) {
      throw UsageError("--affine expects q=<q> m=<m>, got '" + tok + "'");
    }
    const std::string key = tok.substr(0, eq);
    const std::string value = tok.substr(eq + 1);
    std::uint32_t number = 0;
    try {
      std::size_t used = 0;
      number = static_cast<std::uint32_t>(std::stoul(value, &used));
      if (used != value.size()) throw std::invalid_argument(value);
    } catch (const std::exception&) {
      throw UsageError("--affine: '" + value + "' is not a number");
    }
    if (key == "q") {
      params.q = number;
      have_q = true;
    } else if (key == "m") {
      params.m = number;
      have_m = true;
    } else {
      throw UsageError("--affine: unknown key '" + key + "'");
    }
  }
  if (!have_q || !have_m) throw UsageError("--affine needs both q= and m=");
  return params;
}

ResolvableDesign load_design(const SourceOptions& src) {
  const int sources = !src.builtin_name.empty() + !src.design_path.empty() +
                      !src.affine.empty();
  if (sources != 1) {
    throw UsageError(
        "give exactly one design source: --builtin, --design or --affine");
  }
  if (!src.builtin_name.empty()) return builtin(src.builtin_name);
  if (!src.design_path.empty()) return parse_design(read_file(src.design_path));
  return affine_resolvable(parse_affine(src.affine));
}

// "1..6", "2,3,5,7" or a mix such as "1..3,5".
std::vector<std::uint64_t> parse_number_list(const std::string& text,
                                             const std::string& flag) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  auto number = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      const auto value = std::stoull(s, &used);
      if (used != s.size() || s.empty()) throw std::invalid_argument(s);
      return static_cast<std::uint64_t>(value);
    } catch (const std::exception&) {
      throw UsageError(flag + ": '" + s + "' is not a number");
    }
  };
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(number(item));
      continue;
    }
    const auto lo = number(item.substr(0, dots));
    const auto hi = number(item.substr(dots + 2));
    if (lo > hi) throw UsageError(flag + ": empty range '" + item + "'");
    for (auto x = lo; x <= hi; ++x) out.push_back(x);
  }
  if (out.empty()) throw UsageError(flag + " needs at least one value");
  return out;
}

DemandVector build_demands(const SystemConfig& config,
                           const SchemeOptions& opt) {
  if (config.user_count() > kMaxEnumeratedUsers) {
    throw std::length_error("K=" + config.user_count().str() +
                            " users is too many to simulate");
  }
  const auto users = static_cast<std::size_t>(config.user_count());
  DemandVector demands;
  if (opt.demands == "distinct") {
    demands = sequential_demands(users);
    if (opt.files) {
      if (*opt.files < users) {
        throw UsageError("distinct demands need --files >= K = " +
                         std::to_string(users));
      }
      demands.file_count = *opt.files;
    }
  } else if (opt.demands == "random") {
    demands = random_demands(
        users, opt.files.value_or(static_cast<std::uint32_t>(users)),
        opt.seed);
  } else {
    if (opt.demand_list.empty()) {
      throw UsageError("--demands list needs --demand-list");
    }
    for (auto f : parse_number_list(opt.demand_list, "--demand-list")) {
      demands.files.push_back(static_cast<std::uint32_t>(f));
    }
    std::uint32_t max_file = 0;
    for (auto f : demands.files) max_file = std::max(max_file, f);
    demands.file_count = opt.files.value_or(max_file);
  }
  check_demands(config, demands);
  return demands;
}

std::string describe_design(const ResolvableDesign& design) {
  const ValidationReport report = validate(design);
  std::ostringstream os;
  os << "v=" << design.v << " b=" << design.b() << " r=" << design.r()
     << " k=" << design.k() << " b_r=" << design.blocks_per_class() << "\n";
  if (!report.ok()) {
    for (const auto& violation : report.violations) {
      os << "violation: " << violation << "\n";
    }
    return os.str();
  }
  const CrdProfile profile = crd_profile(design);
  bool first = true;
  for (const auto& [i, mu] : profile.mu) {
    os << (first ? "" : " ") << "mu" << i << "="
       << (mu ? std::to_string(*mu) : "absent");
    first = false;
  }
  if (!profile.mu.empty()) os << "\n";
  os << "crn=" << (profile.crn ? std::to_string(*profile.crn) : "none")
     << " crd=" << (profile.is_crd ? "yes" : "no")
     << " mcrd=" << (profile.is_mcrd ? "yes" : "no") << "\n";
  return os.str();
}

std::string metrics_text(const SystemConfig& config, std::size_t groups,
                         std::size_t transmissions, const char* prefix) {
  const SchemeMetrics s = scheme_metrics(config);
  std::ostringstream os;
  auto line = [&](const std::string& key, const std::string& value) {
    os << prefix << key << "=" << value << "\n";
  };
  line("v", std::to_string(config.v()));
  line("z", std::to_string(config.z()));
  line("t", std::to_string(config.t()));
  line("mu_z", std::to_string(config.mu_z()));
  line("K", s.users.str());
  line("F", s.subpacketization.str());
  line("caches", s.caches.str());
  line("caches_per_user", std::to_string(s.caches_per_user));
  line("M_over_N", to_string(s.cache_fraction));
  line("Mprime_over_N", to_string(s.access_fraction));
  line("R", to_string(s.rate));
  line("R_decimal", to_decimal(s.rate));
  line("R_per_K", to_string(s.rate_per_user));
  line("R_per_K_decimal", to_decimal(s.rate_per_user));
  line("g", s.gain.str());
  line("groups", std::to_string(groups));
  line("transmissions", std::to_string(transmissions));
  return os.str();
}

int cmd_construct(const SourceOptions& src, const std::string& out_path,
                  const std::string& format, std::ostream& out) {
  if (!src.design_path.empty()) {
    throw UsageError("construct takes --builtin or --affine");
  }
  const ResolvableDesign design = load_design(src);
  out << describe_design(design);
  if (!out_path.empty()) {
    write_atomically(out_path,
                     serialize_design(design, format == "plain"
                                                  ? DesignFormat::kPlain
                                                  : DesignFormat::kJson));
    out << "wrote " << out_path << "\n";
  }
  return 0;
}

int cmd_inspect(const std::string& path, std::ostream& out,
                std::ostream& err) {
  try {
    out << describe_design(parse_design(read_file(path)));
    out << "valid=yes\n";
    return 0;
  } catch (const DesignSemanticError& e) {
    out << "valid=no\n";
    for (const auto& violation : e.report().violations) {
      err << "violation: " << violation << "\n";
    }
    return 1;
  }
}

int cmd_simulate(const SourceOptions& src, const SchemeOptions& opt,
                 const std::string& format, const std::string& out_path,
                 std::ostream& out) {
  const SystemConfig config = configure(load_design(src), opt.z, opt.t);
  const DemandVector demands = build_demands(config, opt);
  const auto schedule = generate_transmissions(config, demands);
  const std::size_t groups = enumerate_groups(config).size();
  const std::string body =
      format == "jsonl" ? schedule_jsonl(schedule) : schedule_csv(schedule);

  std::optional<std::filesystem::path> target;
  if (!out_path.empty()) {
    target = out_path;
  } else {
    target = default_output("schedule." + format);
  }
  if (target) {
    write_atomically(*target, body);
    out << metrics_text(config, groups, schedule.size(), "");
    out << "schedule=" << target->string() << "\n";
  } else {
    out << metrics_text(config, groups, schedule.size(), "# ") << body;
  }
  return 0;
}

int cmd_verify(const SourceOptions& src, const SchemeOptions& opt,
               std::size_t subfile_len, const std::string& report_path,
               std::ostream& out) {
  const SystemConfig config = configure(load_design(src), opt.z, opt.t);
  const DemandVector demands = build_demands(config, opt);

  const DecodeReport symbolic = verify_scheme(
      config, demands, {DecodeMode::kSymbolic, opt.seed, subfile_len});
  const DecodeReport bytes = verify_scheme(
      config, demands, {DecodeMode::kBytes, opt.seed, subfile_len});

  bool agree = symbolic.pass == bytes.pass &&
               symbolic.users.size() == bytes.users.size();
  for (std::size_t m = 0; agree && m < symbolic.users.size(); ++m) {
    agree = symbolic.users[m].recovered == bytes.users[m].recovered;
  }
  const std::size_t users = symbolic.users.size();
  auto summary = [&](const DecodeReport& report) {
    out << to_string(report.mode) << ": " << (report.pass ? "pass" : "FAIL")
        << " (" << report.users_decoded << "/" << users
        << " users decoded, " << report.transmissions << " transmissions";
    if (report.mode == DecodeMode::kBytes) {
      out << ", seed=" << report.seed << ", subfile_len=" << report.subfile_len;
    }
    out << ")\n";
    for (const auto& violation : report.violations) {
      out << "  violation: " << violation << "\n";
    }
  };
  summary(symbolic);
  summary(bytes);
  out << "modes agree: " << (agree ? "yes" : "NO") << "\n";

  const OracleLimits limits;
  if (config.user_count() <= limits.max_users && config.v() <= limits.max_points) {
    const OracleResult oracle = brute_force_oracle(config, demands, limits);
    out << "oracle: "
        << (oracle.all_cover && oracle_agrees(oracle, symbolic) ? "agrees"
                                                                : "DISAGREES")
        << "\n";
  } else {
    out << "oracle: skipped (instance too large)\n";
  }

  const std::size_t decoded = std::min(symbolic.users_decoded, bytes.users_decoded);
  out << decoded << "/" << users << " users decoded\n";

  if (!report_path.empty()) {
    write_atomically(report_path, "{\"symbolic\": " + symbolic.to_json() +
                                      ", \"bytes\": " + bytes.to_json() + "}\n");
  }
  return symbolic.pass && bytes.pass && agree ? 0 : 1;
}

int cmd_sweep(const std::string& q_list, std::uint32_t m, std::uint32_t z,
              const std::string& t_list, const std::string& format, bool exact,
              const std::string& out_path, std::ostream& out) {
  SweepSpec spec;
  spec.q = parse_number_list(q_list, "--q");
  spec.m = m;
  spec.z = z;
  for (auto t : parse_number_list(t_list, "--t")) {
    spec.t.push_back(static_cast<std::uint32_t>(t));
  }
  const auto rows = sweep(spec);
  const std::string body = format == "kv" ? sweep_kv(rows) : sweep_csv(rows, exact);
  std::optional<std::filesystem::path> target;
  if (!out_path.empty()) {
    target = out_path;
  } else {
    target = default_output(format == "kv" ? "sweep.txt" : "sweep.csv");
  }
  if (target) {
    write_atomically(*target, body);
    out << "wrote " << rows.size() << " rows to " << target->string() << "\n";
  } else {
    out << body;
  }
  return 0;
}

int cmd_compare(std::uint64_t q, std::uint32_t m, const std::string& t_list,
                std::ostream& out) {
  std::vector<std::uint32_t> ts;
  for (auto t : parse_number_list(t_list, "--t")) {
    ts.push_back(static_cast<std::uint32_t>(t));
  }
  out << comparison_table(q, m, ts);
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{
      "Multi-access coded caching from cross resolvable designs: build "
      "designs, simulate and verify delivery, sweep closed-form metrics.",
      "crdcache"};
  app.require_subcommand(1);

  SourceOptions src;
  SchemeOptions scheme;
  std::string out_path;
  std::string format;
  std::string report_path;
  std::size_t subfile_len = 64;
  std::string q_list;
  std::string t_list;
  std::uint32_t m = 2;
  std::uint32_t z = 2;
  std::uint64_t q_single = 0;
  bool exact = false;

  auto* construct = app.add_subcommand("construct", "build a design and print its profile");
  add_source(construct, src, false);
  construct->add_option("--out", out_path, "write the design to this file");
  construct->add_option("--format", format, "json | plain")
      ->check(CLI::IsMember({"json", "plain"}))
      ->default_val("json");

  auto* inspect = app.add_subcommand("inspect", "load, validate and profile a design file");
  inspect->add_option("--design", src.design_path, "design file")->required();

  auto* simulate = app.add_subcommand("simulate", "emit the transmission schedule and metrics");
  add_source(simulate, src, true);
  add_scheme(simulate, scheme);
  simulate->add_option("--format", format, "csv | jsonl")
      ->check(CLI::IsMember({"csv", "jsonl"}))
      ->default_val("csv");
  simulate->add_option("--out", out_path, "schedule output file");

  auto* verify = app.add_subcommand("verify", "decode every user symbolically and at byte level");
  add_source(verify, src, true);
  add_scheme(verify, scheme);
  verify->add_option("--subfile-len", subfile_len, "bytes per subfile")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  verify->add_option("--report", report_path, "write the decode reports as JSON");

  auto* sweep_cmd = app.add_subcommand("sweep", "closed-form metrics over affine designs");
  sweep_cmd->add_option("--q", q_list, "field orders, e.g. 2,3,5,7")->required();
  sweep_cmd->add_option("--m", m, "dimension")->capture_default_str();
  sweep_cmd->add_option("--z", z, "classes per user")->capture_default_str();
  sweep_cmd->add_option("--t", t_list, "t values, e.g. 1..6")->required();
  sweep_cmd->add_option("--format", format, "csv | kv")
      ->check(CLI::IsMember({"csv", "kv"}))
      ->default_val("csv");
  sweep_cmd->add_flag("--exact", exact, "render rationals as a/b in CSV");
  sweep_cmd->add_option("--out", out_path, "output file");

  auto* compare = app.add_subcommand("compare", "MaN versus proposed scheme table");
  compare->add_option("--q", q_single, "field order")->required();
  compare->add_option("--m", m, "dimension")->capture_default_str();
  compare->add_option("--t", t_list, "t values, e.g. 1..3")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    if (*construct) return cmd_construct(src, out_path, format, out);
    if (*inspect) return cmd_inspect(src.design_path, out, err);
    if (*simulate) return cmd_simulate(src, scheme, format, out_path, out);
    if (*verify) return cmd_verify(src, scheme, subfile_len, report_path, out);
    if (*sweep_cmd) {
      return cmd_sweep(q_list, m, z, t_list, format, exact, out_path, out);
    }
    if (*compare) return cmd_compare(q_single, m, t_list, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace crd
