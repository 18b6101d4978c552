#include "chaoswpt/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>

namespace chaoswpt::cli {

namespace {

std::string trim(const std::string& s) {
  auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return {};
  auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

double parse_double(const std::string& key, const std::string& value) {
  const std::string v = lower(trim(value));
  if (v == "inf" || v == "infinity") return std::numeric_limits<double>::infinity();
  try {
    std::size_t pos = 0;
    double out = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return out;
  } catch (const std::exception&) {
    throw ConfigError(key + ": expected a number, got '" + value + "'");
  }
}

long long parse_int(const std::string& key, const std::string& value) {
  const std::string v = trim(value);
  try {
    std::size_t pos = 0;
    long long out = std::stoll(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return out;
  } catch (const std::exception&) {
    throw ConfigError(key + ": expected an integer, got '" + value + "'");
  }
}

std::uint64_t parse_uint(const std::string& key, const std::string& value) {
  const std::string v = trim(value);
  try {
    std::size_t pos = 0;
    unsigned long long out = std::stoull(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return out;
  } catch (const std::exception&) {
    throw ConfigError(key + ": expected an unsigned integer, got '" + value + "'");
  }
}

bool parse_bool(const std::string& key, const std::string& value) {
  const std::string v = lower(trim(value));
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw ConfigError(key + ": expected a boolean, got '" + value + "'");
}

}  // namespace

KeyValues parse_config(std::istream& in) {
  KeyValues out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(line_no) +
                        ": expected key=value, got '" + line + "'");
    }
    std::string key = lower(trim(line.substr(0, eq)));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty()) {
      throw ConfigError("line " + std::to_string(line_no) + ": empty key");
    }
    out.emplace_back(std::move(key), std::move(value));
  }
  return out;
}

KeyValues parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  return parse_config(in);
}

void apply_overrides(Options& options, const KeyValues& keys) {
  for (const auto& [key, value] : keys) {
    if (key == "scheme") {
      const auto scheme = waveform::scheme_from_string(lower(trim(value)));
      if (!scheme) {
        throw ConfigError("scheme: expected dcsk|unmodulated|srdcsk|optimal_sr, got '" +
                          value + "'");
      }
      options.sim.waveform.scheme = *scheme;
    } else if (key == "beta") {
      options.sim.waveform.beta = static_cast<int>(parse_int(key, value));
    } else if (key == "beta_r") {
      options.sim.waveform.beta_r = static_cast<int>(parse_int(key, value));
    } else if (key == "psi") {
      const std::string v = lower(trim(value));
      if (v == "frame" || v == "full") {
        options.sim.correlator = receiver::CorrelatorMode::FullSymbol;
      } else if (v == "none" || v == "1") {
        options.sim.correlator = receiver::CorrelatorMode::None;
      } else {
        throw ConfigError("psi: expected frame|none, got '" + value + "'");
      }
    } else if (key == "m") {
      options.sim.channel.m = parse_double(key, value);
    } else if (key == "pt_dbm") {
      options.sim.budget.p_t_watts = watts_from_dbm(parse_double(key, value));
    } else if (key == "distance_m") {
      options.sim.budget.distance_m = parse_double(key, value);
    } else if (key == "alpha") {
      options.sim.budget.path_loss_exponent = parse_double(key, value);
    } else if (key == "k2") {
      options.sim.budget.k2 = parse_double(key, value);
    } else if (key == "k4") {
      options.sim.budget.k4 = parse_double(key, value);
    } else if (key == "r_ant") {
      options.sim.budget.r_ant_ohms = parse_double(key, value);
    } else if (key == "degree") {
      options.sim.chaos.degree = static_cast<int>(parse_int(key, value));
    } else if (key == "trajectory") {
      const std::string v = lower(trim(value));
      if (v == "per_symbol") {
        options.sim.chaos.mode = chaos::TrajectoryMode::PerSymbolTrajectory;
      } else if (v == "iid") {
        options.sim.chaos.mode = chaos::TrajectoryMode::IidInvariant;
      } else {
        throw ConfigError("trajectory: expected per_symbol|iid, got '" + value + "'");
      }
    } else if (key == "hpa") {
      const std::string v = lower(trim(value));
      if (v == "ideal") {
        options.sim.hpa.kind = analysis::HpaKind::Ideal;
      } else if (v == "rapp") {
        options.sim.hpa.kind = analysis::HpaKind::Rapp;
      } else {
        throw ConfigError("hpa: expected ideal|rapp, got '" + value + "'");
      }
    } else if (key == "hpa_smoothness") {
      options.sim.hpa.smoothness = parse_double(key, value);
    } else if (key == "hpa_sat_dbm") {
      options.sim.hpa.saturation_amplitude =
          std::sqrt(watts_from_dbm(parse_double(key, value)));
    } else if (key == "n_symbols") {
      options.sim.n_symbols = parse_int(key, value);
    } else if (key == "seed") {
      options.sim.seed = parse_uint(key, value);
    } else if (key == "confidence") {
      options.sim.confidence = parse_double(key, value);
    } else if (key == "threads") {
      options.sim.threads = static_cast<int>(parse_int(key, value));
    } else if (key == "n_tones") {
      options.n_tones = static_cast<int>(parse_int(key, value));
    } else if (key == "strict") {
      options.strict = parse_bool(key, value);
    } else if (key == "out") {
      options.out_path = trim(value);
    } else {
      throw ConfigError("unknown key '" + key + "'");
    }
  }
}

}  // namespace chaoswpt::cli
