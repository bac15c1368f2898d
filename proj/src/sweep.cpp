// Copyright 2026 The optowork Authors
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

#include "optowork/sweep.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <chrono>
#include <cmath>
#include <ctime>
#include <exception>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "optowork/errors.hpp"
#include "optowork/gaussian.hpp"
#include "optowork/system1.hpp"
#include "optowork/system2.hpp"
#include "optowork/thermo.hpp"

#ifndef OPTOWORK_VERSION
#define OPTOWORK_VERSION "0.0.0"
#endif

namespace optowork::sweep {

namespace {

using thermo::MeasurementKind;

constexpr std::array<std::pair<Quantity, std::string_view>, 10> kQuantityNames{{
    {Quantity::kLnMirror, "L_N_mirror"},
    {Quantity::kLnOptic, "L_N_optic"},
    {Quantity::kW0, "W0"},
    {Quantity::kW1, "W1"},
    {Quantity::kW0Sep, "W0_sep"},
    {Quantity::kW1Sep, "W1_sep"},
    {Quantity::kW0Max, "W0_max"},
    {Quantity::kW1Max, "W1_max"},
    {Quantity::kW00, "W00"},
    {Quantity::kW11, "W11"},
}};

const std::set<std::string, std::less<>> kSystem1Names{"kappa", "gamma", "C", "G",
                                                       "r",     "n_th",  "theta", "phi"};
const std::set<std::string, std::less<>> kSystem2Names{"x", "phase", "theta", "phi"};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const auto next = s.find(sep, pos);
    out.push_back(trim(s.substr(pos, next == std::string_view::npos ? next : next - pos)));
    if (next == std::string_view::npos) {
      break;
    }
    pos = next + 1;
  }
  return out;
}

// Accepts plain decimals and multiples of pi ("pi", "4pi", "0.5*pi").
double parse_number(std::string_view text, std::string_view what) {
  std::string_view s = trim(text);
  double factor = 1.0;
  if (s.size() >= 2 && s.substr(s.size() - 2) == "pi") {
    factor = std::numbers::pi;
    s = trim(s.substr(0, s.size() - 2));
    if (!s.empty() && s.back() == '*') {
      s = trim(s.substr(0, s.size() - 1));
    }
    if (s.empty() || s == "+") {
      return factor;
    }
    if (s == "-") {
      return -factor;
    }
  }
  if (!s.empty() && s.front() == '+') {
    s.remove_prefix(1);
  }
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw ConfigError("cannot parse " + std::string(what) + " value '" + std::string(text) + "'");
  }
  if (!std::isfinite(value * factor)) {
    throw ConfigError(std::string(what) + " must be finite");
  }
  return value * factor;
}

// Shortest text that parses back to the same double.
std::string exact(double v) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

std::string seventeen(double v) {
  std::array<char, 64> buf{};
  const auto res =
      std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 17);
  return std::string(buf.data(), res.ptr);
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) {
    return std::string(s);
  }
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') {
      out += '"';
    }
    out += c;
  }
  out += '"';
  return out;
}

std::vector<std::string> parse_csv_line(std::string_view line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  fields.push_back(std::move(cur));
  return fields;
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::array<char, 32> buf{};
  std::strftime(buf.data(), buf.size(), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf.data();
}

double lookup(const std::map<std::string, double>& p, const std::string& key, double fallback) {
  const auto it = p.find(key);
  return it == p.end() ? fallback : it->second;
}

struct Blocks {
  std::optional<TwoModeStandardForm> mirror;
  TwoModeStandardForm optic;
};

Blocks evaluate_state(int system, const std::map<std::string, double>& p) {
  if (system == 1) {
    system1::Params s1;
    s1.kappa = lookup(p, "kappa", 1.0);
    s1.gamma = lookup(p, "gamma", 0.05);
    s1.r = lookup(p, "r", 0.0);
    s1.n_th = lookup(p, "n_th", 0.0);
    if (const auto g = p.find("G"); g != p.end()) {
      s1 = system1::Params::with_coupling(s1.kappa, s1.gamma, g->second, s1.r, s1.n_th);
    } else {
      s1.cooperativity = lookup(p, "C", 0.0);
    }
    const CovarianceMatrix v = system1::steady_state_cm(s1);
    constexpr std::array<int, 2> mirrors{system1::kMirror1, system1::kMirror2};
    constexpr std::array<int, 2> optics{system1::kOptic1, system1::kOptic2};
    return {standard_form(reduce(v, mirrors)), standard_form(reduce(v, optics))};
  }
  const system2::Params s2{lookup(p, "x", 0.0), lookup(p, "phase", 0.0)};
  return {std::nullopt, system2::optic_optic_cm(s2)};
}

std::vector<std::optional<double>> evaluate_point(const SweepConfig& c,
                                                  const std::map<std::string, double>& p) {
  const Blocks blocks = evaluate_state(c.system, p);
  const TwoModeStandardForm& f =
      c.effective_subsystem() == Subsystem::kMirror ? *blocks.mirror : blocks.optic;
  const thermo::DoubleMeasurementSpec defaults;
  const double theta = lookup(p, "theta", defaults.theta);
  const double phi = lookup(p, "phi", defaults.phi);

  auto maximum = [&f](MeasurementKind kind) -> std::optional<double> {
    try {
      return thermo::work_max(f.x, f.y, kind);
    } catch (const MaxWorkUndefined&) {
      return std::nullopt;
    }
  };

  std::vector<std::optional<double>> row;
  row.reserve(c.quantities.size());
  for (Quantity q : c.quantities) {
    std::optional<double> value;
    switch (q) {
      case Quantity::kLnMirror:
        value = logarithmic_negativity(*blocks.mirror);
        break;
      case Quantity::kLnOptic:
        value = logarithmic_negativity(blocks.optic);
        break;
      case Quantity::kW0:
        value = thermo::work_single(f, MeasurementKind::kHomodyne);
        break;
      case Quantity::kW1:
        value = thermo::work_single(f, MeasurementKind::kHeterodyne);
        break;
      case Quantity::kW0Sep:
        value = thermo::work_separable_bound(f.x, f.y, MeasurementKind::kHomodyne);
        break;
      case Quantity::kW1Sep:
        value = thermo::work_separable_bound(f.x, f.y, MeasurementKind::kHeterodyne);
        break;
      case Quantity::kW0Max:
        value = maximum(MeasurementKind::kHomodyne);
        break;
      case Quantity::kW1Max:
        value = maximum(MeasurementKind::kHeterodyne);
        break;
      case Quantity::kW00:
        value = thermo::work_double(f, {MeasurementKind::kHomodyne, theta, phi});
        break;
      case Quantity::kW11:
        value = thermo::work_double(f, {MeasurementKind::kHeterodyne, theta, phi});
        break;
    }
    if (value && is_work(q)) {
      *value *= c.kbt;
    }
    row.push_back(value);
  }
  return row;
}

}  // namespace

std::string_view to_string(Quantity q) {
  for (const auto& [quantity, name] : kQuantityNames) {
    if (quantity == q) {
      return name;
    }
  }
  return "?";
}

std::optional<Quantity> parse_quantity(std::string_view name) {
  for (const auto& [quantity, n] : kQuantityNames) {
    if (n == name) {
      return quantity;
    }
  }
  return std::nullopt;
}

bool is_work(Quantity q) { return q != Quantity::kLnMirror && q != Quantity::kLnOptic; }

std::string_view to_string(Subsystem s) { return s == Subsystem::kMirror ? "mirror" : "optic"; }

std::vector<double> Range::points() const {
  std::vector<double> pts(static_cast<std::size_t>(count));
  const double step = (stop - start) / static_cast<double>(count - 1);
  for (int i = 0; i < count; ++i) {
    pts[i] = start + step * static_cast<double>(i);
  }
  pts.back() = stop;
  std::sort(pts.begin(), pts.end());
  return pts;
}

Subsystem SweepConfig::effective_subsystem() const {
  if (work_subsystem) {
    return *work_subsystem;
  }
  return system == 1 ? Subsystem::kMirror : Subsystem::kOptic;
}

void SweepConfig::validate() const {
  if (system != 1 && system != 2) {
    throw ConfigError("system must be 1 or 2");
  }
  const auto& names = system == 1 ? kSystem1Names : kSystem2Names;
  auto known = [&names, this](const std::string& n) {
    if (!names.contains(n)) {
      throw ConfigError("unknown parameter '" + n + "' for system " + std::to_string(system));
    }
  };
  if (swept_parameter.empty()) {
    throw ConfigError("swept_parameter is required");
  }
  known(swept_parameter);
  if (!std::isfinite(range.start) || !std::isfinite(range.stop)) {
    throw ConfigError("range bounds must be finite");
  }
  if (range.count < 2) {
    throw ConfigError("range needs at least 2 points");
  }
  if (range.start == range.stop) {
    throw ConfigError("range start and stop must differ");
  }
  std::set<std::string> seen{swept_parameter};
  for (const auto& [name, value] : fixed_parameters) {
    known(name);
    if (!std::isfinite(value)) {
      throw ConfigError("fixed parameter '" + name + "' must be finite");
    }
    if (!seen.insert(name).second) {
      throw ConfigError("parameter '" + name + "' is both swept and fixed");
    }
  }
  if (family) {
    known(family->name);
    if (!seen.insert(family->name).second) {
      throw ConfigError("family parameter '" + family->name + "' is also swept or fixed");
    }
    if (family->values.empty()) {
      throw ConfigError("family needs at least one value");
    }
    for (double v : family->values) {
      if (!std::isfinite(v)) {
        throw ConfigError("family values must be finite");
      }
    }
  }
  if (quantities.empty()) {
    throw ConfigError("at least one quantity is required");
  }
  std::set<Quantity> unique(quantities.begin(), quantities.end());
  if (unique.size() != quantities.size()) {
    throw ConfigError("quantities listed twice");
  }
  if (system == 2) {
    if (unique.contains(Quantity::kLnMirror)) {
      throw ConfigError("L_N_mirror is only defined for system 1");
    }
    if (effective_subsystem() != Subsystem::kOptic) {
      throw ConfigError("system 2 work is only defined on the optic subsystem");
    }
    for (const char* required : {"x", "phase"}) {
      if (!seen.contains(required)) {
        throw ConfigError(std::string("system 2 needs parameter '") + required + "'");
      }
    }
  } else if (seen.contains("C") == seen.contains("G")) {
    throw ConfigError("system 1 needs exactly one of C or G");
  }
  if (!std::isfinite(kbt) || !(kbt > 0.0)) {
    throw ConfigError("kbt must be positive");
  }
}

SweepConfig parse_config(std::string_view text) {
  SweepConfig c;
  std::set<std::string> keys;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) {
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
    }
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key != "fixed_parameters" && !keys.insert(key).second) {
      throw ConfigError("line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
    }
    if (key == "system") {
      const double s = parse_number(value, "system");
      if (s != 1.0 && s != 2.0) {
        throw ConfigError("system must be 1 or 2");
      }
      c.system = static_cast<int>(s);
    } else if (key == "swept_parameter") {
      c.swept_parameter = std::string(value);
    } else if (key == "range") {
      const auto parts = split(value, ':');
      if (parts.size() != 3) {
        throw ConfigError("range must be start:stop:count");
      }
      c.range.start = parse_number(parts[0], "range start");
      c.range.stop = parse_number(parts[1], "range stop");
      const double count = parse_number(parts[2], "range count");
      if (count != std::floor(count) || count < 0 || count > 1e7) {
        throw ConfigError("range count must be a nonnegative integer");
      }
      c.range.count = static_cast<int>(count);
    } else if (key == "fixed_parameters") {
      if (value.empty()) {
        continue;
      }
      for (auto item : split(value, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string_view::npos) {
          throw ConfigError("fixed_parameters entries must be name:value");
        }
        const std::string name(trim(item.substr(0, colon)));
        if (c.fixed_parameters.contains(name)) {
          throw ConfigError("fixed parameter '" + name + "' given twice");
        }
        c.fixed_parameters[name] = parse_number(item.substr(colon + 1), name);
      }
    } else if (key == "quantities") {
      for (auto item : split(value, ',')) {
        const auto q = parse_quantity(item);
        if (!q) {
          throw ConfigError("unknown quantity '" + std::string(item) + "'");
        }
        c.quantities.push_back(*q);
      }
    } else if (key == "work_subsystem") {
      if (value == "mirror") {
        c.work_subsystem = Subsystem::kMirror;
      } else if (value == "optic") {
        c.work_subsystem = Subsystem::kOptic;
      } else {
        throw ConfigError("work_subsystem must be mirror or optic");
      }
    } else if (key == "family") {
      const auto colon = value.find(':');
      if (colon == std::string_view::npos) {
        throw ConfigError("family must be name:v1,v2,...");
      }
      Family f{std::string(trim(value.substr(0, colon))), {}};
      for (auto item : split(value.substr(colon + 1), ',')) {
        f.values.push_back(parse_number(item, "family"));
      }
      c.family = std::move(f);
    } else if (key == "kbt") {
      c.kbt = parse_number(value, "kbt");
    } else if (key == "output_path") {
      c.output_path = std::string(value);
    } else {
      throw ConfigError("line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
  }
  c.validate();
  return c;
}

SweepConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot read config file " + path.string());
  }
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

std::string serialize_config(const SweepConfig& c) {
  std::ostringstream out;
  out << "system = " << c.system << "\n";
  out << "swept_parameter = " << c.swept_parameter << "\n";
  out << "range = " << exact(c.range.start) << ":" << exact(c.range.stop) << ":" << c.range.count
      << "\n";
  out << "fixed_parameters = ";
  bool first = true;
  for (const auto& [name, value] : c.fixed_parameters) {
    out << (first ? "" : ", ") << name << ":" << exact(value);
    first = false;
  }
  out << "\n";
  out << "quantities = ";
  for (std::size_t i = 0; i < c.quantities.size(); ++i) {
    out << (i ? ", " : "") << to_string(c.quantities[i]);
  }
  out << "\n";
  if (c.work_subsystem) {
    out << "work_subsystem = " << to_string(*c.work_subsystem) << "\n";
  }
  if (c.family) {
    out << "family = " << c.family->name << ":";
    for (std::size_t i = 0; i < c.family->values.size(); ++i) {
      out << (i ? "," : "") << exact(c.family->values[i]);
    }
    out << "\n";
  }
  out << "kbt = " << exact(c.kbt) << "\n";
  if (!c.output_path.empty()) {
    out << "output_path = " << c.output_path << "\n";
  }
  return out.str();
}

std::string_view code_version() { return OPTOWORK_VERSION; }

Dataset sweep(const SweepConfig& config, int threads) {
  config.validate();
  const std::vector<double> grid = config.range.points();
  const std::vector<double> family_values =
      config.family ? config.family->values : std::vector<double>{0.0};

  Dataset d;
  if (config.family) {
    d.columns.push_back(config.family->name);
  }
  d.columns.push_back(config.swept_parameter);
  for (Quantity q : config.quantities) {
    d.columns.emplace_back(to_string(q));
  }

  struct Point {
    double family;
    double swept;
  };
  std::vector<Point> points;
  for (double fv : family_values) {
    for (double sv : grid) {
      points.push_back({fv, sv});
    }
  }

  std::vector<std::vector<std::optional<double>>> values(points.size());
  std::vector<std::exception_ptr> failures(points.size());
  auto work = [&](std::size_t begin, std::size_t stride) {
    for (std::size_t i = begin; i < points.size(); i += stride) {
      try {
        auto params = config.fixed_parameters;
        if (config.family) {
          params[config.family->name] = points[i].family;
        }
        params[config.swept_parameter] = points[i].swept;
        values[i] = evaluate_point(config, params);
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };
  const auto workers = static_cast<std::size_t>(std::max(1, threads));
  if (workers == 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back(work, w, workers);
    }
  }

  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!failures[i]) {
      continue;
    }
    std::string where = "row " + std::to_string(i) + " (" + config.swept_parameter + "=" +
                        exact(points[i].swept);
    if (config.family) {
      where += ", " + config.family->name + "=" + exact(points[i].family);
    }
    where += "): ";
    try {
      std::rethrow_exception(failures[i]);
    } catch (const DomainError& e) {
      throw DomainError(where + e.what());
    } catch (const ConfigError& e) {
      throw ConfigError(where + e.what());
    }
  }

  d.rows.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::vector<std::optional<double>> row;
    if (config.family) {
      row.emplace_back(points[i].family);
    }
    row.emplace_back(points[i].swept);
    row.insert(row.end(), values[i].begin(), values[i].end());
    d.rows.push_back(std::move(row));
  }

  d.provenance.config_text = serialize_config(config);
  d.provenance.code_version = std::string(code_version());
  d.provenance.timestamp = utc_timestamp();
  d.provenance.notes.push_back("grid: " + config.swept_parameter + " linear inclusive " +
                               exact(config.range.start) + ":" + exact(config.range.stop) + ":" +
                               std::to_string(config.range.count));
  d.provenance.notes.push_back("work columns in units of k_B*T scaled by kbt=" + exact(config.kbt));
  return d;
}

std::string to_csv(const Dataset& d) {
  std::string out;
  for (std::size_t i = 0; i < d.columns.size(); ++i) {
    out += (i ? "," : "") + csv_field(d.columns[i]);
  }
  out += "\n";
  for (const auto& row : d.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) {
        out += ',';
      }
      if (row[i]) {
        out += seventeen(*row[i]);
      }
    }
    out += "\n";
  }
  return out;
}

Dataset parse_csv(std::string_view text) {
  Dataset d;
  std::istringstream in{std::string(text)};
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (header) {
      d.columns = parse_csv_line(line);
      header = false;
      continue;
    }
    if (line.empty()) {
      continue;
    }
    std::vector<std::optional<double>> row;
    for (const auto& field : parse_csv_line(line)) {
      if (field.empty()) {
        row.emplace_back(std::nullopt);
        continue;
      }
      double v = 0.0;
      const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
      if (ec != std::errc() || ptr != field.data() + field.size()) {
        throw ConfigError("bad CSV number '" + field + "'");
      }
      row.emplace_back(v);
    }
    if (row.size() != d.columns.size()) {
      throw ConfigError("ragged CSV row");
    }
    d.rows.push_back(std::move(row));
  }
  return d;
}

std::string metadata_json(const Dataset& d) {
  nlohmann::ordered_json meta;
  meta["code_version"] = d.provenance.code_version;
  meta["timestamp"] = d.provenance.timestamp;
  meta["columns"] = d.columns;
  meta["row_count"] = d.rows.size();
  meta["config"] = d.provenance.config_text;
  meta["notes"] = d.provenance.notes;
  return meta.dump(2) + "\n";
}

void emit_csv(const Dataset& d, const std::filesystem::path& path) {
  for (const auto& row : d.rows) {
    if (row.size() != d.columns.size()) {
      throw DomainError("dataset is not rectangular");
    }
  }
  {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw IoError("cannot open " + path.string() + " for writing");
    }
    out << to_csv(d);
    if (!out) {
      throw IoError("write to " + path.string() + " failed");
    }
  }
  std::filesystem::path meta = path;
  meta.replace_extension(".meta.json");
  std::ofstream out(meta, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot open " + meta.string() + " for writing");
  }
  out << metadata_json(d);
  if (!out) {
    throw IoError("write to " + meta.string() + " failed");
  }
}

}  // namespace optowork::sweep
