#include "fdcran/config.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fdcran {

namespace {

std::string trim(const std::string& s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

[[noreturn]] void bad(const std::string& key, const std::string& why) {
  throw std::invalid_argument("config: " + key + ": " + why);
}

// numeric value with an optional unit word after it ("0.2 W", "-104 dBm",
// "3 km", "40 nat"). Returns the number and the unit seen (lowercased,
// empty if none).
double number_with_unit(const std::string& key, const std::string& value,
                        std::string* unit) {
  const char* start = value.c_str();
  char* end = nullptr;
  double v = std::strtod(start, &end);
  if (end == start) bad(key, "expected a number, got '" + value + "'");
  std::string rest = trim(std::string(end));
  if (unit) *unit = lower(rest);
  return v;
}

double parse_power(const std::string& key, const std::string& value) {
  std::string unit;
  double v = number_with_unit(key, value, &unit);
  if (unit.empty() || unit == "w") {
    if (v < 0.0) bad(key, "power in watts cannot be negative");
    return v;
  }
  if (unit == "dbm") return std::pow(10.0, (v - 30.0) / 10.0);
  bad(key, "unknown power unit '" + unit + "' (use W or dBm)");
}

double parse_distance(const std::string& key, const std::string& value) {
  std::string unit;
  double v = number_with_unit(key, value, &unit);
  if (!unit.empty() && unit != "km")
    bad(key, "unknown distance unit '" + unit + "' (use km)");
  return v;
}

double parse_capacity(const std::string& key, const std::string& value) {
  std::string word = lower(trim(value));
  if (word == "infinite" || word == "inf" || word == "infinity")
    return std::numeric_limits<double>::infinity();
  std::string unit;
  double v = number_with_unit(key, value, &unit);
  if (!unit.empty() && unit != "nat" && unit != "nats" && unit != "nat/s/hz")
    bad(key, "unknown capacity unit '" + unit + "' (use nat, or 'infinite')");
  return v;
}

double parse_plain(const std::string& key, const std::string& value) {
  std::string unit;
  double v = number_with_unit(key, value, &unit);
  if (!unit.empty()) bad(key, "unexpected unit '" + unit + "'");
  return v;
}

int parse_int(const std::string& key, const std::string& value) {
  double v = parse_plain(key, value);
  double r = std::round(v);
  if (std::abs(v - r) > 1e-9 || std::abs(r) > 2e9)
    bad(key, "expected an integer, got '" + value + "'");
  return static_cast<int>(r);
}

std::uint64_t parse_seed(const std::string& key, const std::string& value) {
  std::string t = trim(value);
  try {
    size_t pos = 0;
    unsigned long long v = std::stoull(t, &pos, 0);
    if (pos != t.size()) bad(key, "trailing characters in '" + value + "'");
    return static_cast<std::uint64_t>(v);
  } catch (const std::invalid_argument&) {
    bad(key, "expected an unsigned integer, got '" + value + "'");
  } catch (const std::out_of_range&) {
    bad(key, "seed out of range: '" + value + "'");
  }
}

void apply(NetworkConfig& cfg, const std::string& raw_key, const std::string& value) {
  std::string key = lower(trim(raw_key));
  if (key == "lambda_d") {
    cfg.lambda_d = parse_plain(key, value);
  } else if (key == "lambda_u") {
    cfg.lambda_u = parse_plain(key, value);
  } else if (key == "n_d") {
    cfg.n_d = parse_int(key, value);
  } else if (key == "n_u") {
    cfg.n_u = parse_int(key, value);
  } else if (key == "k_d") {
    cfg.k_d = parse_int(key, value);
  } else if (key == "k_u") {
    cfg.k_u = parse_int(key, value);
  } else if (key == "p_d") {
    cfg.p_d = parse_power(key, value);
  } else if (key == "p_u") {
    cfg.p_u = parse_power(key, value);
  } else if (key == "noise") {
    cfg.noise_d = cfg.noise_u = parse_power(key, value);
  } else if (key == "noise_d") {
    cfg.noise_d = parse_power(key, value);
  } else if (key == "noise_u") {
    cfg.noise_u = parse_power(key, value);
  } else if (key == "alpha") {
    cfg.alpha = parse_plain(key, value);
  } else if (key == "l") {
    cfg.cluster_size = parse_plain(key, value);
    cfg.explicit_radius = 0.0;
  } else if (key == "r") {
    cfg.explicit_radius = parse_distance(key, value);
  } else if (key == "e") {
    std::string word = lower(trim(value));
    if (word == "zero" || word == "0") {
      cfg.e_mode = ExclusionMode::zero;
      cfg.e_km = 0.0;
    } else if (word == "r") {
      cfg.e_mode = ExclusionMode::equal_cluster_radius;
      cfg.e_km = 0.0;
    } else {
      cfg.e_mode = ExclusionMode::custom;
      cfg.e_km = parse_distance(key, value);
    }
  } else if (key == "c") {
    cfg.c_d = cfg.c_u = parse_capacity(key, value);
  } else if (key == "c_d") {
    cfg.c_d = parse_capacity(key, value);
  } else if (key == "c_u") {
    cfg.c_u = parse_capacity(key, value);
  } else if (key == "clustering") {
    std::string word = lower(trim(value));
    if (word == "disjoint") cfg.clustering = ClusterMode::disjoint;
    else if (word == "user_centric") cfg.clustering = ClusterMode::user_centric;
    else bad(key, "expected disjoint or user_centric, got '" + value + "'");
  } else if (key == "duplex") {
    std::string word = lower(trim(value));
    if (word == "fd") cfg.duplex = Duplex::fd;
    else if (word == "hd") cfg.duplex = Duplex::hd;
    else bad(key, "expected FD or HD, got '" + value + "'");
  } else if (key == "fd_split") {
    cfg.fd_split = parse_plain(key, value);
  } else if (key == "region_radius") {
    cfg.region_radius = parse_distance(key, value);
  } else if (key == "trials") {
    cfg.trials = parse_int(key, value);
  } else if (key == "seed") {
    cfg.seed = parse_seed(key, value);
  } else if (key == "self_interference") {
    cfg.self_interference = parse_power(key, value);
  } else if (key == "rel_tol") {
    cfg.rel_tol = parse_plain(key, value);
  } else if (key == "abs_tol") {
    cfg.abs_tol = parse_plain(key, value);
  } else {
    bad(key, "unknown key");
  }
}

void require(bool ok, const char* key, const char* why) {
  if (!ok) bad(key, why);
}

}  // namespace

double NetworkConfig::cluster_radius() const {
  if (explicit_radius > 0.0) return explicit_radius;
  return std::sqrt(cluster_size / (M_PI * lambda_d));
}

double NetworkConfig::exclusion_radius() const {
  switch (e_mode) {
    case ExclusionMode::zero: return 0.0;
    case ExclusionMode::equal_cluster_radius: return cluster_radius();
    case ExclusionMode::custom: return e_km;
  }
  return 0.0;
}

double NetworkConfig::mean_cluster_size() const {
  return M_PI * lambda_d * cluster_radius() * cluster_radius();
}

void NetworkConfig::validate() const {
  require(std::isfinite(lambda_d) && lambda_d > 0.0, "lambda_d", "must be > 0");
  require(lambda_u < 0.0 || std::isfinite(lambda_u), "lambda_u", "must be finite");
  require(n_d >= 1, "n_d", "must be >= 1");
  require(n_u >= 1, "n_u", "must be >= 1");
  require(k_d >= 1, "k_d", "must be >= 1");
  require(k_u >= 1, "k_u", "must be >= 1");
  require(k_d <= n_d, "k_d", "zero-forcing needs k_d <= n_d");
  require(k_u <= n_u, "k_u", "zero-forcing needs k_u <= n_u");
  require(std::isfinite(p_d) && p_d > 0.0, "p_d", "must be > 0 W");
  require(std::isfinite(p_u) && p_u > 0.0, "p_u", "must be > 0 W");
  require(std::isfinite(noise_d) && noise_d > 0.0, "noise_d", "must be > 0 W");
  require(std::isfinite(noise_u) && noise_u > 0.0, "noise_u", "must be > 0 W");
  require(std::isfinite(alpha) && alpha > 2.0, "alpha", "path-loss exponent must exceed 2");
  require(explicit_radius >= 0.0 && std::isfinite(explicit_radius), "r",
          "explicit radius must be finite and >= 0");
  if (explicit_radius == 0.0)
    require(std::isfinite(cluster_size) && cluster_size > 0.0, "l",
            "mean cluster size must be > 0");
  require(e_mode != ExclusionMode::custom || (std::isfinite(e_km) && e_km >= 0.0),
          "e", "custom exclusion radius must be finite and >= 0");
  require(c_d >= 0.0, "c_d", "capacity must be >= 0 (use 'infinite' for no limit)");
  require(c_u >= 0.0, "c_u", "capacity must be >= 0 (use 'infinite' for no limit)");
  require(fd_split > 0.0 && fd_split < 1.0, "fd_split", "must be in (0, 1)");
  require(std::isfinite(region_radius) && region_radius > 0.0, "region_radius",
          "must be > 0 km");
  require(trials >= 1, "trials", "must be >= 1");
  require(std::isfinite(self_interference) && self_interference >= 0.0,
          "self_interference", "must be >= 0 W");
  require(std::isfinite(rel_tol) && rel_tol > 0.0, "rel_tol", "must be > 0");
  require(std::isfinite(abs_tol) && abs_tol > 0.0, "abs_tol", "must be > 0");
}

NetworkConfig parse_config(const std::string& text) {
  NetworkConfig cfg;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config: line " + std::to_string(lineno) +
                                  ": expected 'key = value', got '" + line + "'");
    apply(cfg, line.substr(0, eq), trim(line.substr(eq + 1)));
  }
  cfg.validate();
  return cfg;
}

NetworkConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("config: cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string render_config(const NetworkConfig& cfg) {
  std::ostringstream out;
  out.precision(17);
  out << "lambda_d = " << cfg.lambda_d << "\n";
  if (cfg.lambda_u >= 0.0) out << "lambda_u = " << cfg.lambda_u << "\n";
  out << "n_d = " << cfg.n_d << "\n"
      << "n_u = " << cfg.n_u << "\n"
      << "k_d = " << cfg.k_d << "\n"
      << "k_u = " << cfg.k_u << "\n"
      << "p_d = " << cfg.p_d << " W\n"
      << "p_u = " << cfg.p_u << " W\n"
      << "noise_d = " << cfg.noise_d << " W\n"
      << "noise_u = " << cfg.noise_u << " W\n"
      << "alpha = " << cfg.alpha << "\n";
  if (cfg.explicit_radius > 0.0)
    out << "r = " << cfg.explicit_radius << " km\n";
  else
    out << "l = " << cfg.cluster_size << "\n";
  switch (cfg.e_mode) {
    case ExclusionMode::zero: out << "e = zero\n"; break;
    case ExclusionMode::equal_cluster_radius: out << "e = R\n"; break;
    case ExclusionMode::custom: out << "e = " << cfg.e_km << " km\n"; break;
  }
  auto cap = [&](const char* key, double v) {
    if (std::isinf(v)) out << key << " = infinite\n";
    else out << key << " = " << v << " nat\n";
  };
  cap("c_d", cfg.c_d);
  cap("c_u", cfg.c_u);
  out << "clustering = "
      << (cfg.clustering == ClusterMode::disjoint ? "disjoint" : "user_centric") << "\n"
      << "duplex = " << (cfg.duplex == Duplex::fd ? "FD" : "HD") << "\n"
      << "fd_split = " << cfg.fd_split << "\n"
      << "self_interference = " << cfg.self_interference << " W\n"
      << "region_radius = " << cfg.region_radius << " km\n"
      << "trials = " << cfg.trials << "\n"
      << "seed = " << cfg.seed << "\n"
      << "rel_tol = " << cfg.rel_tol << "\n"
      << "abs_tol = " << cfg.abs_tol << "\n";
  return out.str();
}

}  // namespace fdcran
