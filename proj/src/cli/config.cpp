#include <cctype>
#include <fstream>
#include <sstream>

#include "anharm/cli.hpp"

namespace anharm::cli {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(s);
  while (std::getline(is, item, sep)) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

double to_double(const std::string& key, const std::string& s) {
  try {
    std::size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("'" + key + "': not a number: " + s);
  }
}

int to_int(const std::string& key, const std::string& s) {
  try {
    std::size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("'" + key + "': not an integer: " + s);
  }
}

bool to_bool(const std::string& key, const std::string& s) {
  if (s == "1" || s == "true" || s == "yes" || s == "on") return true;
  if (s == "0" || s == "false" || s == "no" || s == "off") return false;
  throw ConfigError("'" + key + "': not a boolean: " + s);
}

}  // namespace

// Lists use ',' between numbers and ';' or whitespace between states.
void apply_setting(RunConfig& cfg, const std::string& key_in, const std::string& value_in) {
  std::string key = key_in;
  while (!key.empty() && key.front() == '-') key.erase(key.begin());
  const std::string v = trim(value_in);
  if (key == "command") {
    cfg.command = v;
  } else if (key == "D") {
    cfg.D.clear();
    for (auto& s : split(v, ',')) {
      int d = to_int(key, s);
      if (d < 1) throw ConfigError("D must be a positive integer");
      cfg.D.push_back(d);
    }
    if (cfg.D.empty()) throw ConfigError("empty D list");
  } else if (key == "g") {
    cfg.g.clear();
    for (auto& s : split(v, ',')) {
      double g = to_double(key, s);
      if (!(g >= 0.0)) throw ConfigError("g must be non-negative");
      cfg.g.push_back(g);
    }
    if (cfg.g.empty()) throw ConfigError("empty g list");
  } else if (key == "state") {
    cfg.states.clear();
    std::string norm = v;
    for (char& c : norm)
      if (c == ';' || std::isspace(static_cast<unsigned char>(c))) c = ' ';
    std::istringstream is(norm);
    std::string tok;
    while (is >> tok) {
      auto parts = split(tok, ',');
      if (parts.size() != 2) throw ConfigError("state must be n_r,ell: " + tok);
      StateLabel s{to_int(key, parts[0]), to_int(key, parts[1])};
      if (s.n_r < 0 || s.ell < 0) throw ConfigError("state labels must be non-negative");
      cfg.states.push_back(s);
    }
    if (cfg.states.empty()) throw ConfigError("empty state list");
  } else if (key == "orders") {
    cfg.orders = to_int(key, v);
    if (cfg.orders < 1 || cfg.orders > 3) throw ConfigError("orders must be 1, 2 or 3");
  } else if (key == "verify") {
    cfg.verify = v.empty() ? true : to_bool(key, v);
  } else if (key == "mesh-N") {
    cfg.mesh_N = to_int(key, v);
    if (cfg.mesh_N < 10 || cfg.mesh_N > 50) throw ConfigError("mesh-N must lie in [10, 50]");
  } else if (key == "tol") {
    cfg.size_tol = to_double(key, v);
    if (!(cfg.size_tol > 0.0)) throw ConfigError("tol must be positive");
  } else if (key == "format") {
    if (v == "json") cfg.format = Format::json;
    else if (v == "csv") cfg.format = Format::csv;
    else throw ConfigError("format must be json or csv");
  } else if (key == "out") {
    cfg.out = v;
  } else if (key == "timings") {
    cfg.timings = v;
  } else if (key == "jobs") {
    cfg.jobs = to_int(key, v);
    if (cfg.jobs < 1) throw ConfigError("jobs must be >= 1");
  } else if (key == "seed") {
    cfg.seed = static_cast<unsigned>(to_int(key, v));
  } else if (key == "table") {
    cfg.table = v;
  } else if (key == "Z") {
    cfg.z_order = to_int(key, v);
    if (cfg.z_order < 0) throw ConfigError("Z index must be >= 0");
  } else if (key == "c") {
    cfg.c_order = to_int(key, v);
    if (cfg.c_order < 0) throw ConfigError("c order must be >= 0");
  } else if (key == "order") {
    cfg.precision = to_int(key, v);
    if (cfg.precision < 1) throw ConfigError("order must be >= 1");
  } else if (key == "eps") {
    cfg.eps = split(v, ',');
  } else if (key == "points") {
    cfg.fit_points = to_int(key, v);
    if (cfg.fit_points < 25) throw ConfigError("fit needs at least 25 points");
  } else {
    throw ConfigError("unknown setting: " + key);
  }
}

RunConfig load_config(const std::string& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file: " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key = value");
    apply_setting(base, trim(line.substr(0, eq)), line.substr(eq + 1));
  }
  return base;
}

std::string dump_config(const RunConfig& c) {
  std::ostringstream os;
  os.precision(17);
  auto join = [&](const auto& v) {
    std::ostringstream s;
    s.precision(17);
    for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
    return s.str();
  };
  if (!c.command.empty()) os << "command = " << c.command << "\n";
  os << "D = " << join(c.D) << "\n";
  os << "g = " << join(c.g) << "\n";
  os << "state = ";
  for (std::size_t i = 0; i < c.states.size(); ++i) os << (i ? ";" : "") << c.states[i].n_r << "," << c.states[i].ell;
  os << "\n";
  os << "orders = " << c.orders << "\n";
  os << "verify = " << (c.verify ? "true" : "false") << "\n";
  os << "mesh-N = " << c.mesh_N << "\n";
  os << "tol = " << c.size_tol << "\n";
  os << "format = " << (c.format == Format::json ? "json" : "csv") << "\n";
  if (!c.out.empty()) os << "out = " << c.out << "\n";
  if (!c.timings.empty()) os << "timings = " << c.timings << "\n";
  os << "jobs = " << c.jobs << "\n";
  os << "seed = " << c.seed << "\n";
  if (!c.table.empty()) os << "table = " << c.table << "\n";
  if (c.z_order >= 0) os << "Z = " << c.z_order << "\n";
  if (c.c_order >= 0) os << "c = " << c.c_order << "\n";
  os << "order = " << c.precision << "\n";
  if (!c.eps.empty()) os << "eps = " << join(c.eps) << "\n";
  os << "points = " << c.fit_points << "\n";
  return os.str();
}

}  // namespace anharm::cli
