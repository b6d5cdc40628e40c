// Copyright 2026 The cqed-grover Authors
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

#include "cqed/cli.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <vector>

#include <CLI11.hpp>

#include "cqed/experiment.hpp"
#include "cqed/feasibility.hpp"
#include "cqed/sweep.hpp"

namespace cqed::cli {

namespace {

using Json = nlohmann::ordered_json;
using KeyValues = std::map<std::string, std::string>;

constexpr std::array<std::string_view, 14> kKnownKeys{
    "omega_over_2pi", "delta_over_omega", "target",  "epsilon",      "n_max",
    "collision_model", "error_model",     "fidelity", "output",      "format",
    "points",         "interaction_length", "photon_lifetime", "total_time"};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

double to_double(const KeyValues& kv, const std::string& key, double fallback) {
  const auto it = kv.find(key);
  if (it == kv.end()) return fallback;
  const std::string& s = it->second;
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ConfigError("invalid value for '" + key + "': '" + s + "'");
  }
  return v;
}

int to_int(const KeyValues& kv, const std::string& key, int fallback) {
  const auto it = kv.find(key);
  if (it == kv.end()) return fallback;
  const std::string& s = it->second;
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ConfigError("invalid value for '" + key + "': '" + s + "'");
  }
  return v;
}

std::string to_string_or(const KeyValues& kv, const std::string& key, std::string fallback) {
  const auto it = kv.find(key);
  return it == kv.end() ? fallback : it->second;
}

template <class F>
auto with_key(const std::string& key, F&& f) {
  try {
    return f();
  } catch (const ConfigError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ConfigError("invalid value for '" + key + "': " + e.what());
  }
}

ExperimentConfig experiment_config(const KeyValues& kv) {
  ExperimentConfig c;
  c.omega_over_2pi = to_double(kv, "omega_over_2pi", c.omega_over_2pi);
  c.delta_over_omega = to_double(kv, "delta_over_omega", c.delta_over_omega);
  c.target = with_key("target", [&] { return TargetItem(to_int(kv, "target", 3)); });
  c.epsilon = to_double(kv, "epsilon", c.epsilon);
  c.n_max = to_int(kv, "n_max", c.n_max);
  c.collision_model = with_key("collision_model", [&] {
    return parse_collision_model(to_string_or(kv, "collision_model", "exact"));
  });
  c.error_model = with_key("error_model", [&] {
    return parse_error_model(to_string_or(kv, "error_model", "rabi_only"));
  });
  c.fidelity_mode = with_key("fidelity", [&] {
    return parse_fidelity_mode(to_string_or(kv, "fidelity", "marginal"));
  });
  c.validate();
  return c;
}

std::vector<double> parse_points(const KeyValues& kv) {
  const std::string text = to_string_or(kv, "points", "");
  std::vector<double> points;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const std::string t = trim(item);
    if (t.empty()) continue;
    KeyValues one{{"points", t}};
    points.push_back(to_double(one, "points", 0.0));
  }
  if (points.empty()) throw ConfigError("no sweep points given (use --points a,b,c)");
  return points;
}

void dump_into(const Json& j, std::string& out) {
  switch (j.type()) {
    case Json::value_t::object: {
      out += '{';
      bool first = true;
      for (const auto& [k, v] : j.items()) {
        if (!first) out += ',';
        first = false;
        out += Json(k).dump();
        out += ':';
        dump_into(v, out);
      }
      out += '}';
      break;
    }
    case Json::value_t::array: {
      out += '[';
      for (std::size_t k = 0; k < j.size(); ++k) {
        if (k) out += ',';
        dump_into(j[k], out);
      }
      out += ']';
      break;
    }
    case Json::value_t::number_float:
      out += format_number(j.get<double>());
      break;
    default:
      out += j.dump();
  }
}

class Output {
 public:
  Output(const KeyValues& kv, std::ostream& out) : out_(out) {
    if (auto it = kv.find("output"); it != kv.end() && !it->second.empty()) {
      file_.open(it->second);
      if (!file_) throw ConfigError("cannot open output file '" + it->second + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : out_; }

 private:
  std::ostream& out_;
  std::ofstream file_;
};

std::string output_format(const KeyValues& kv, std::string_view fallback,
                          std::initializer_list<std::string_view> allowed) {
  const std::string f = to_string_or(kv, "format", std::string(fallback));
  if (std::find(allowed.begin(), allowed.end(), f) == allowed.end()) {
    throw ConfigError("unsupported value for 'format': '" + f + "'");
  }
  return f;
}

int cmd_grover_ideal(const KeyValues& kv, std::ostream& out) {
  output_format(kv, "json", {"json"});
  const TargetItem target = with_key("target", [&] { return TargetItem(to_int(kv, "target", 3)); });
  const auto probs = run_ideal(target).probabilities();
  Json j;
  j["target"] = target.value();
  j["probabilities"] = Json::array();
  for (double p : probs) j["probabilities"].push_back(p);
  Output o(kv, out);
  o.stream() << dump_json(j) << '\n';
  return kOk;
}

int cmd_simulate(const KeyValues& kv, std::ostream& out, std::ostream& err) {
  output_format(kv, "json", {"json"});
  const ExperimentConfig c = experiment_config(kv);
  if (!c.coupling().well_dispersive()) {
    err << "warning: delta_over_omega < 4, outside the well-dispersive regime\n";
  }
  const RunResult r = run_physical(c);
  Json j;
  j["target"] = c.target.value();
  j["fidelity"] = r.fidelity;
  Json pops = Json::object();
  for (int k = 0; k < 4; ++k) {
    const auto [a1, a2] = logical_levels(k);
    std::string label = std::string(a1 == Atom1Level::kG ? "g1" : "e1") +
                        (a2 == Atom2Level::kG ? "g2" : "i2");
    pops[label] = r.populations.logical(k);
  }
  j["populations"] = pops;
  j["leaked_photon_probability"] = r.leaked_photon_probability;
  j["gate_time_s"] = r.timing.gate_time;
  j["total_time_s"] = r.timing.total_time;
  Output o(kv, out);
  o.stream() << dump_json(j) << '\n';
  return kOk;
}

int cmd_sweep(const KeyValues& kv, std::ostream& out, bool detuning) {
  const std::string format = output_format(kv, "csv", {"csv", "json"});
  const ExperimentConfig c = experiment_config(kv);
  const auto points = parse_points(kv);
  const auto rows = detuning ? sweep_detuning(c, points) : sweep_error(c, points);
  Output o(kv, out);
  if (format == "csv") {
    o.stream() << "param,fidelity\n";
    for (const auto& r : rows) o.stream() << format_number(r.param) << ',' << format_number(r.fidelity) << '\n';
  } else {
    Json j = Json::array();
    for (const auto& r : rows) j.push_back(Json{{"param", r.param}, {"fidelity", r.fidelity}});
    o.stream() << dump_json(j) << '\n';
  }
  return kOk;
}

int cmd_feasibility(const KeyValues& kv, std::ostream& out) {
  output_format(kv, "json", {"json"});
  FeasibilityInputs in;
  in.omega_over_2pi = to_double(kv, "omega_over_2pi", in.omega_over_2pi);
  in.delta_over_omega = to_double(kv, "delta_over_omega", in.delta_over_omega);
  in.interaction_length = to_double(kv, "interaction_length", in.interaction_length);
  in.photon_lifetime = to_double(kv, "photon_lifetime", in.photon_lifetime);
  if (kv.contains("total_time")) in.total_time_override = to_double(kv, "total_time", 0.0);
  const FeasibilityReport r = feasibility_report(in);

  auto row = [&](std::string_view name, double v, std::string_view unit) {
    out << std::left << std::setw(28) << name << std::right << std::setw(20) << format_number(v)
        << ' ' << unit << '\n';
  };
  row("lambda/2pi", r.lambda_over_2pi, "Hz");
  row("gate time (pi/lambda)", r.gate_time, "s");
  row("two-gate time", r.two_gate_time, "s");
  row("total time used", r.total_time, "s");
  row("required velocity", r.velocity, "m/s");
  row("total time / lifetime", r.lifetime_ratio, "");
  out << std::left << std::setw(28) << "flag" << std::right << std::setw(20)
      << (r.pass ? "pass" : "warn") << '\n';
  for (const auto& n : r.notes) out << "note: " << n << '\n';

  Json j;
  j["lambda_rad_s"] = r.lambda;
  j["lambda_over_2pi_hz"] = r.lambda_over_2pi;
  j["gate_time_s"] = r.gate_time;
  j["two_gate_time_s"] = r.two_gate_time;
  j["total_time_s"] = r.total_time;
  j["velocity_m_s"] = r.velocity;
  j["lifetime_ratio"] = r.lifetime_ratio;
  j["flag"] = r.pass ? "pass" : "warn";
  j["nominal_two_gate_time_s"] = r.nominal_two_gate_time;
  j["nominal_total_interaction_s"] = r.nominal_total_interaction;
  j["notes"] = r.notes;
  Output o(kv, out);
  o.stream() << dump_json(j) << '\n';
  return kOk;
}

KeyValues read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_key_values(ss.str());
}

}  // namespace

bool is_known_key(std::string_view key) {
  return std::find(kKnownKeys.begin(), kKnownKeys.end(), key) != kKnownKeys.end();
}

KeyValues parse_key_values(std::string_view text) {
  KeyValues kv;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("config line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (!is_known_key(key)) throw ConfigError("unknown config key '" + key + "'");
    if (kv.contains(key)) throw ConfigError("duplicate config key '" + key + "'");
    kv.emplace(std::move(key), std::move(value));
  }
  return kv;
}

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.11e", x);
  return buf;
}

std::string dump_json(const nlohmann::ordered_json& j) {
  std::string out;
  dump_into(j, out);
  return out;
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-qubit Grover search with cavity-assisted atomic collisions"};
  app.require_subcommand(1);

  struct Sub {
    std::string name;
    std::string help;
    CLI::App* app = nullptr;
    std::string config_path;
    std::map<std::string, std::string> flags;
  };
  std::vector<Sub> subs{
      {"grover-ideal", "ideal logical Grover run", nullptr, {}, {}},
      {"simulate", "physical run under the cavity Hamiltonian", nullptr, {}, {}},
      {"sweep-error", "fidelity against pulse-duration error", nullptr, {}, {}},
      {"sweep-detuning", "fidelity against delta/Omega", nullptr, {}, {}},
      {"feasibility", "timing budget and velocity estimate", nullptr, {}, {}}};
  for (auto& s : subs) {
    s.app = app.add_subcommand(s.name, s.help);
    s.app->add_option("--config", s.config_path, "flat key = value config file");
    for (auto key : kKnownKeys) {
      s.app->add_option("--" + std::string(key), s.flags[std::string(key)]);
    }
  }

  std::vector<std::string> argv{"cqed_grover"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::vector<const char*> cargs;
  for (const auto& a : argv) cargs.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(cargs.size()), cargs.data());
  } catch (const CLI::CallForHelp&) {
    const auto chosen = app.get_subcommands();
    out << (chosen.empty() ? app.help() : chosen.front()->help());
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    for (auto& s : subs) {
      if (!s.app->parsed()) continue;
      KeyValues kv = s.config_path.empty() ? KeyValues{} : read_config_file(s.config_path);
      for (const auto& [key, value] : s.flags) {
        if (s.app->count("--" + key) > 0) kv[key] = value;
      }
      if (s.name == "grover-ideal") return cmd_grover_ideal(kv, out);
      if (s.name == "simulate") return cmd_simulate(kv, out, err);
      if (s.name == "sweep-error") return cmd_sweep(kv, out, false);
      if (s.name == "sweep-detuning") return cmd_sweep(kv, out, true);
      if (s.name == "feasibility") return cmd_feasibility(kv, out);
    }
  } catch (const NumericalError& e) {
    err << "numerical error: " << e.what() << '\n';
    return kNumericalError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace cqed::cli
