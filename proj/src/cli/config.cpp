// Copyright 2026 The ferrosim Authors. All Rights Reserved.
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

#include "ferro/cli/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <sstream>
#include <utility>

#include "ferro/cli/units.hpp"
#include "ferro/error.hpp"

namespace ferro::cli {

namespace {

enum class ValueType { kQuantity, kInteger, kWord, kBool, kQuantityList, kSegment };

struct KeyDef {
  std::string_view name;
  ValueType type;
  Dimension dim = Dimension::kNone;
};

struct SectionDef {
  std::string_view name;
  std::vector<KeyDef> keys;
  // Numbered keys "<prefix>.<N>", N >= 1.
  std::string_view numbered_prefix;
  ValueType numbered_type = ValueType::kSegment;
};

const std::vector<SectionDef>& schema() {
  using D = Dimension;
  using T = ValueType;
  static const std::vector<SectionDef> sections{
      {"", {{"kind", T::kWord}, {"seed", T::kInteger}}, {}, {}},
      {"material",
       {{"alpha", T::kQuantity, D::kAlpha},
        {"beta", T::kQuantity, D::kBeta},
        {"gamma", T::kQuantity, D::kGamma},
        {"k_dw", T::kQuantity, D::kWallStiffness},
        {"eps_f", T::kQuantity},
        {"rho_kin", T::kQuantity, D::kResistivity},
        {"wall_gradient", T::kWord},
        {"wall_scale", T::kQuantity}},
       {}, {}},
      {"geometry",
       {{"t_f", T::kQuantity, D::kLength},
        {"t_d", T::kQuantity, D::kLength},
        {"eps_d", T::kQuantity},
        {"n_x", T::kInteger},
        {"n_y", T::kInteger},
        {"d", T::kQuantity, D::kLength},
        {"w", T::kQuantity, D::kLength},
        {"electrostatics", T::kWord}},
       {}, {}},
      {"init",
       {{"mode", T::kWord},
        {"p0", T::kQuantity, D::kPolarization},
        {"noise", T::kQuantity, D::kPolarization},
        {"alpha_spread", T::kQuantity}},
       {}, {}},
      {"sweep",
       {{"amplitude", T::kQuantity, D::kVoltage},
        {"ramp_rate", T::kQuantity, D::kRampRate},
        {"samples_per_segment", T::kInteger},
        {"dt", T::kQuantity, D::kTime}},
       "segment", T::kSegment},
      {"barrier",
       {{"phi_md", T::kQuantity, D::kEnergy},
        {"phi_mf", T::kQuantity, D::kEnergy},
        {"chi_f", T::kQuantity, D::kEnergy},
        {"chi_d", T::kQuantity, D::kEnergy},
        {"m_eff", T::kQuantity},
        {"temperature", T::kQuantity, D::kTemperature}},
       {}, {}},
      {"read",
       {{"v_start", T::kQuantity, D::kVoltage},
        {"v_end", T::kQuantity, D::kVoltage},
        {"points", T::kInteger},
        {"relax_time", T::kQuantity, D::kTime},
        {"relax_tol", T::kQuantity, D::kField},
        {"device_area", T::kQuantity, D::kArea}},
       {}, {}},
      {"program",
       {{"amplitudes", T::kQuantityList, D::kVoltage},
        {"reset_amplitude", T::kQuantity, D::kVoltage},
        {"reset_duration", T::kQuantity, D::kTime},
        {"write_duration", T::kQuantity, D::kTime},
        {"rest_duration", T::kQuantity, D::kTime},
        {"read_voltage", T::kQuantity, D::kVoltage},
        {"read_duration", T::kQuantity, D::kTime},
        {"read_relax_time", T::kQuantity, D::kTime},
        {"read_tol", T::kQuantity, D::kField},
        {"device_area", T::kQuantity, D::kArea}},
       {}, {}},
      {"quadrature",
       {{"rel_tol", T::kQuantity}, {"accept_tol", T::kQuantity}, {"max_depth", T::kInteger}},
       {}, {}},
      {"semiconductor",
       {{"n_d", T::kQuantity, D::kDensity},
        {"n_i", T::kQuantity, D::kDensity},
        {"eps_s", T::kQuantity},
        {"t_c", T::kQuantity, D::kLength},
        {"l_c", T::kQuantity, D::kLength},
        {"width", T::kQuantity, D::kLength},
        {"mu", T::kQuantity, D::kMobility},
        {"v_ds", T::kQuantity, D::kVoltage},
        {"v_fb", T::kQuantity, D::kVoltage},
        {"temperature", T::kQuantity, D::kTemperature}},
       {}, {}},
      {"idvg",
       {{"v_min", T::kQuantity, D::kVoltage},
        {"v_max", T::kQuantity, D::kVoltage},
        {"samples_per_branch", T::kInteger},
        {"v_read", T::kQuantity, D::kVoltage},
        {"relax", T::kBool},
        {"relax_tol", T::kQuantity, D::kField},
        {"relax_time", T::kQuantity, D::kTime}},
       {}, {}},
      {"output", {{"snapshots", T::kBool}, {"validate_quasi_static", T::kBool}}, {}, {}},
  };
  return sections;
}

struct KindBlocks {
  std::vector<std::string_view> required;
  std::vector<std::string_view> optional;
};

KindBlocks blocks_of(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::kNcSweep:
      return {{"material", "geometry", "sweep"}, {"init", "output"}};
    case ExperimentKind::kStabilityCheck:
      return {{"material", "geometry"}, {"output"}};
    case ExperimentKind::kFtjRead:
      return {{"material", "geometry", "barrier", "read"}, {"quadrature", "output"}};
    case ExperimentKind::kFtjProgram:
      return {{"material", "geometry", "barrier", "program"}, {"init", "quadrature", "output"}};
    case ExperimentKind::kFefetIdvg:
      return {{"material", "geometry", "semiconductor", "idvg"}, {"init", "output"}};
  }
  return {};
}

bool uses_block(ExperimentKind kind, std::string_view block) {
  const auto b = blocks_of(kind);
  return std::find(b.required.begin(), b.required.end(), block) != b.required.end() ||
         std::find(b.optional.begin(), b.optional.end(), block) != b.optional.end();
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_commas(std::string_view s) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(',', start);
    parts.push_back(trim(s.substr(start, pos == std::string_view::npos ? s.size() - start : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::string where(std::size_t line, std::string_view section, std::string_view key) {
  std::ostringstream os;
  os << "line " << line << ": key '" << key << "'";
  if (!section.empty()) os << " in [" << section << "]";
  return os.str();
}

std::uint64_t parse_integer(std::string_view text, std::string_view key, std::size_t line) {
  text = trim(text);
  std::uint64_t v = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || end == text.data()) {
    throw ConfigError("E_PARSE", where(line, {}, key) + ": expected a non-negative integer, got '" +
                                     std::string(text) + "'", line);
  }
  if (end != text.data() + text.size()) {
    throw ConfigError("E_UNIT", where(line, {}, key) + ": integer value carries trailing text '" +
                                    std::string(trim(std::string_view(end, text.data() + text.size() - end))) +
                                    "'", line);
  }
  return v;
}

bool parse_bool(std::string_view text, std::string_view key, std::size_t line) {
  text = trim(text);
  if (text == "true") return true;
  if (text == "false") return false;
  throw ConfigError("E_PARSE", where(line, {}, key) + ": expected true or false, got '" +
                                   std::string(text) + "'", line);
}

struct Value {
  std::size_t line = 0;
  double number = 0.0;
  std::uint64_t integer = 0;
  bool flag = false;
  std::string word;
  std::vector<double> list;
  lgd::SweepSegment segment{};
};

struct Document {
  // section -> key -> value
  std::map<std::string, std::map<std::string, Value>> values;
  std::map<std::string, std::size_t> section_lines;
  // section -> N -> value for numbered keys
  std::map<std::string, std::map<std::uint64_t, Value>> numbered;
};

Value convert(std::string_view raw, ValueType type, Dimension dim, std::string_view key,
              std::size_t line) {
  Value v;
  v.line = line;
  switch (type) {
    case ValueType::kQuantity:
      v.number = parse_quantity(raw, dim, key, line);
      break;
    case ValueType::kInteger:
      v.integer = parse_integer(raw, key, line);
      break;
    case ValueType::kWord:
      v.word = std::string(trim(raw));
      if (v.word.empty() || v.word.find_first_of(" \t,") != std::string::npos) {
        throw ConfigError("E_PARSE", where(line, {}, key) + ": expected a single word", line);
      }
      break;
    case ValueType::kBool:
      v.flag = parse_bool(raw, key, line);
      break;
    case ValueType::kQuantityList:
      for (auto part : split_commas(raw)) v.list.push_back(parse_quantity(part, dim, key, line));
      break;
    case ValueType::kSegment: {
      const auto parts = split_commas(raw);
      if (parts.size() != 4) {
        throw ConfigError("E_PARSE", where(line, {}, key) +
                                         ": segment needs 'v_start, v_end, ramp_rate, samples'", line);
      }
      v.segment.v_start = parse_quantity(parts[0], Dimension::kVoltage, key, line);
      v.segment.v_end = parse_quantity(parts[1], Dimension::kVoltage, key, line);
      v.segment.ramp_rate = parse_quantity(parts[2], Dimension::kRampRate, key, line);
      v.segment.sample_count = parse_integer(parts[3], key, line);
      break;
    }
  }
  return v;
}

Document parse_document(std::string_view text) {
  Document doc;
  const SectionDef* section = &schema().front();
  std::string section_name;
  std::map<std::string, std::map<std::string, std::size_t>> seen;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const std::string_view body = trim(line);
    if (body.empty()) continue;
    if (body.front() == '[') {
      if (body.back() != ']') {
        std::ostringstream os;
        os << "line " << line_no << ", column " << (line.find('[') + 1) << ": unterminated section header";
        throw ConfigError("E_PARSE", os.str(), line_no);
      }
      const std::string name(trim(body.substr(1, body.size() - 2)));
      const auto it = std::find_if(schema().begin(), schema().end(),
                                   [&](const SectionDef& s) { return s.name == name && !name.empty(); });
      if (it == schema().end()) {
        throw ConfigError("E_UNKNOWN_KEY", "line " + std::to_string(line_no) + ": unknown section [" +
                                               name + "]", line_no);
      }
      if (const auto prev = doc.section_lines.find(name); prev != doc.section_lines.end()) {
        throw ConfigError("E_DUPLICATE", "section [" + name + "] defined at line " +
                                             std::to_string(prev->second) + " and line " +
                                             std::to_string(line_no), line_no);
      }
      doc.section_lines[name] = line_no;
      section = &*it;
      section_name = name;
      continue;
    }
    const auto eq = body.find('=');
    if (eq == std::string_view::npos) {
      std::ostringstream os;
      os << "line " << line_no << ", column " << (line.find(body.front()) + 1)
         << ": expected 'key = value' or '[section]'";
      throw ConfigError("E_PARSE", os.str(), line_no);
    }
    const std::string key(trim(body.substr(0, eq)));
    const std::string_view raw = trim(body.substr(eq + 1));
    if (key.empty() || raw.empty()) {
      std::ostringstream os;
      os << "line " << line_no << ", column " << (line.find('=') + 1)
         << ": key and value must both be non-empty";
      throw ConfigError("E_PARSE", os.str(), line_no);
    }
    if (const auto prev = seen[section_name].find(key); prev != seen[section_name].end()) {
      throw ConfigError("E_DUPLICATE", "key '" + key + "'" +
                                           (section_name.empty() ? "" : " in [" + section_name + "]") +
                                           " defined at line " + std::to_string(prev->second) +
                                           " and line " + std::to_string(line_no), line_no);
    }
    seen[section_name][key] = line_no;

    const auto def = std::find_if(section->keys.begin(), section->keys.end(),
                                  [&](const KeyDef& k) { return k.name == key; });
    if (def != section->keys.end()) {
      doc.values[section_name][key] = convert(raw, def->type, def->dim, key, line_no);
      continue;
    }
    const std::string prefix = std::string(section->numbered_prefix) + ".";
    if (!section->numbered_prefix.empty() && key.rfind(prefix, 0) == 0 && key.size() > prefix.size()) {
      const std::string_view digits = std::string_view(key).substr(prefix.size());
      std::uint64_t n = 0;
      const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
      if (ec == std::errc() && end == digits.data() + digits.size() && n >= 1 && digits.front() != '0') {
        doc.numbered[section_name][n] = convert(raw, section->numbered_type, Dimension::kNone, key, line_no);
        continue;
      }
    }
    throw ConfigError("E_UNKNOWN_KEY", "line " + std::to_string(line_no) + ", column " +
                                           std::to_string(line.find(key.front()) + 1) +
                                           ": unknown key '" + key + "'" +
                                           (section_name.empty() ? "" : " in [" + section_name + "]"),
                      line_no);
  }
  return doc;
}

template <class Enum>
Enum parse_word(const Value& v, std::string_view key,
                std::initializer_list<std::pair<std::string_view, Enum>> options) {
  std::string names;
  for (const auto& [name, value] : options) {
    if (v.word == name) return value;
    if (!names.empty()) names += ", ";
    names += name;
  }
  throw ConfigError("E_PARAM", where(v.line, {}, key) + ": '" + v.word + "' is not one of " + names,
                    v.line);
}

const char* wall_name(lgd::WallGradient g) {
  return g == lgd::WallGradient::kAcrossWall ? "across-wall" : "across-domain";
}
const char* electrostatics_name(lgd::Electrostatics e) {
  return e == lgd::Electrostatics::kLayered ? "layered" : "columnwise";
}
const char* init_name(lgd::InitMode m) {
  switch (m) {
    case lgd::InitMode::kUniform: return "uniform";
    case lgd::InitMode::kRandomPerturbed: return "random";
    case lgd::InitMode::kTwoPhase: return "two-phase";
  }
  return "uniform";
}

void apply(const Document& doc, ExperimentSpec& spec) {
  auto find = [&](const char* sec, const char* key) -> const Value* {
    const auto s = doc.values.find(sec);
    if (s == doc.values.end()) return nullptr;
    const auto k = s->second.find(key);
    return k == s->second.end() ? nullptr : &k->second;
  };
  auto num = [&](const char* sec, const char* key, double& target) {
    if (const Value* v = find(sec, key)) target = v->number;
  };
  auto count = [&](const char* sec, const char* key, std::size_t& target) {
    if (const Value* v = find(sec, key)) target = static_cast<std::size_t>(v->integer);
  };
  auto flag = [&](const char* sec, const char* key, bool& target) {
    if (const Value* v = find(sec, key)) target = v->flag;
  };

  if (const Value* v = find("", "seed")) spec.seed = v->integer;

  auto& m = spec.material;
  num("material", "alpha", m.alpha);
  num("material", "beta", m.beta);
  num("material", "gamma", m.gamma);
  num("material", "k_dw", m.k_dw);
  num("material", "eps_f", m.eps_f);
  num("material", "rho_kin", m.rho_kin);
  num("material", "wall_scale", m.wall_scale);
  if (const Value* v = find("material", "wall_gradient")) {
    m.wall_gradient = parse_word<lgd::WallGradient>(
        *v, "wall_gradient",
        {{"across-wall", lgd::WallGradient::kAcrossWall}, {"across-domain", lgd::WallGradient::kAcrossDomain}});
  }

  auto& g = spec.geometry;
  num("geometry", "t_f", g.t_f);
  num("geometry", "t_d", g.t_d);
  num("geometry", "eps_d", g.eps_d);
  count("geometry", "n_x", g.n_x);
  count("geometry", "n_y", g.n_y);
  num("geometry", "d", g.d);
  num("geometry", "w", g.w);
  if (const Value* v = find("geometry", "electrostatics")) {
    g.electrostatics = parse_word<lgd::Electrostatics>(
        *v, "electrostatics",
        {{"layered", lgd::Electrostatics::kLayered}, {"columnwise", lgd::Electrostatics::kColumnwise}});
  }

  if (const Value* v = find("init", "mode")) {
    spec.init.mode = parse_word<lgd::InitMode>(*v, "mode",
                                               {{"uniform", lgd::InitMode::kUniform},
                                                {"random", lgd::InitMode::kRandomPerturbed},
                                                {"two-phase", lgd::InitMode::kTwoPhase}});
  }
  num("init", "p0", spec.init.p0);
  num("init", "noise", spec.init.noise);
  num("init", "alpha_spread", spec.init.alpha_spread);

  const auto segs = doc.numbered.find("sweep");
  const bool has_segments = segs != doc.numbered.end() && !segs->second.empty();
  const Value* amp = find("sweep", "amplitude");
  const Value* rate = find("sweep", "ramp_rate");
  const Value* samples = find("sweep", "samples_per_segment");
  if (has_segments) {
    if (amp != nullptr || rate != nullptr || samples != nullptr) {
      const Value* first = amp != nullptr ? amp : (rate != nullptr ? rate : samples);
      throw ConfigError("E_PARAM", "line " + std::to_string(first->line) +
                                       ": [sweep] mixes segment.N keys with triangular shorthand keys",
                        first->line);
    }
    spec.sweep.segments.clear();
    std::uint64_t expect = 1;
    for (const auto& [n, v] : segs->second) {
      if (n != expect) {
        throw ConfigError("E_MISSING", "[sweep] segment." + std::to_string(expect) +
                                           " missing before segment." + std::to_string(n), v.line);
      }
      spec.sweep.segments.push_back(v.segment);
      ++expect;
    }
  } else if (amp != nullptr || rate != nullptr || samples != nullptr) {
    double a = 6.0, r = 1e5;
    std::size_t n = 241;
    if (!spec.sweep.segments.empty()) {
      a = spec.sweep.segments.front().v_end;
      r = spec.sweep.segments.front().ramp_rate;
      n = spec.sweep.segments.back().sample_count;
    }
    if (amp != nullptr) a = amp->number;
    if (rate != nullptr) r = rate->number;
    if (samples != nullptr) n = static_cast<std::size_t>(samples->integer);
    if (n < 3) {
      throw ConfigError("E_PARAM", "[sweep] samples_per_segment must be >= 3",
                        samples != nullptr ? samples->line : 0);
    }
    spec.sweep = lgd::SweepProtocol::triangular(a, r, n);
  }
  num("sweep", "dt", spec.sweep_dt);

  auto& b = spec.barrier;
  num("barrier", "phi_md", b.phi_md);
  num("barrier", "phi_mf", b.phi_mf);
  num("barrier", "chi_f", b.chi_f);
  num("barrier", "chi_d", b.chi_d);
  num("barrier", "m_eff", b.m_eff);
  num("barrier", "temperature", b.temperature);

  num("read", "v_start", spec.read.v_start);
  num("read", "v_end", spec.read.v_end);
  count("read", "points", spec.read.points);
  num("read", "relax_time", spec.read.relax_time);
  num("read", "relax_tol", spec.read.relax_tol);
  num("read", "device_area", spec.read.device_area);

  if (const Value* v = find("program", "amplitudes")) spec.amplitudes = v->list;
  auto& p = spec.program;
  num("program", "reset_amplitude", p.reset_amplitude);
  num("program", "reset_duration", p.reset_duration);
  num("program", "write_duration", p.write_duration);
  num("program", "rest_duration", p.rest_duration);
  num("program", "read_voltage", p.read_voltage);
  num("program", "read_duration", p.read_duration);
  num("program", "read_relax_time", spec.waveform.read_relax_time);
  num("program", "read_tol", spec.waveform.read_tol);
  num("program", "device_area", spec.waveform.device_area);

  num("quadrature", "rel_tol", spec.waveform.quadrature.rel_tol);
  num("quadrature", "accept_tol", spec.waveform.quadrature.accept_tol);
  if (const Value* v = find("quadrature", "max_depth")) {
    spec.waveform.quadrature.max_depth = static_cast<unsigned>(v->integer);
  }

  auto& s = spec.semiconductor;
  num("semiconductor", "n_d", s.n_d);
  num("semiconductor", "n_i", s.n_i);
  num("semiconductor", "eps_s", s.eps_s);
  num("semiconductor", "t_c", s.t_c);
  num("semiconductor", "l_c", s.l_c);
  num("semiconductor", "width", s.width);
  num("semiconductor", "mu", s.mu);
  num("semiconductor", "v_ds", s.v_ds);
  num("semiconductor", "v_fb", s.v_fb);
  num("semiconductor", "temperature", s.temperature);

  auto& iv = spec.idvg;
  num("idvg", "v_min", iv.v_min);
  num("idvg", "v_max", iv.v_max);
  count("idvg", "samples_per_branch", iv.samples_per_branch);
  num("idvg", "v_read", iv.v_read);
  flag("idvg", "relax", iv.relax);
  num("idvg", "relax_tol", iv.relax_tol);
  num("idvg", "relax_time", iv.relax_time);

  flag("output", "snapshots", spec.snapshots);
  flag("output", "validate_quasi_static", spec.validate_quasi_static);
}

void require(bool ok, const std::string& what) {
  if (!ok) throw ConfigError("E_PARAM", what);
}

}  // namespace

const char* to_string(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::kNcSweep: return "nc-sweep";
    case ExperimentKind::kStabilityCheck: return "stability-check";
    case ExperimentKind::kFtjRead: return "ftj-read";
    case ExperimentKind::kFtjProgram: return "ftj-program";
    case ExperimentKind::kFefetIdvg: return "fefet-idvg";
  }
  return "";
}

ExperimentKind parse_kind(std::string_view name) {
  for (auto k : {ExperimentKind::kNcSweep, ExperimentKind::kStabilityCheck, ExperimentKind::kFtjRead,
                 ExperimentKind::kFtjProgram, ExperimentKind::kFefetIdvg}) {
    if (name == to_string(k)) return k;
  }
  throw ConfigError("E_PARAM", "unknown experiment kind '" + std::string(name) + "'");
}

ExperimentSpec default_spec(ExperimentKind kind) {
  ExperimentSpec spec;
  spec.kind = kind;
  spec.init.mode = lgd::InitMode::kRandomPerturbed;
  switch (kind) {
    case ExperimentKind::kNcSweep:
    case ExperimentKind::kStabilityCheck:
      spec.material = lgd::nc_capacitor_material();
      spec.geometry = lgd::nc_capacitor_stack();
      spec.init.noise = 1e-3 * spec.material.spontaneous_polarization();
      spec.sweep = lgd::SweepProtocol::triangular(6.0, 1e5, 241);
      break;
    case ExperimentKind::kFtjRead:
    case ExperimentKind::kFtjProgram:
      spec.material = lgd::ftj_material();
      spec.geometry = lgd::ftj_stack();
      spec.seed = 3;
      spec.init = ftj::ftj_initial_state(spec.seed);
      spec.amplitudes = ftj::four_level_amplitudes();
      break;
    case ExperimentKind::kFefetIdvg: {
      const auto dev = fefet::fefet_device(5e24);
      spec.material = dev.mat;
      spec.geometry = dev.geom;
      spec.semiconductor = dev.semi;
      spec.init.p0 = -spec.material.spontaneous_polarization();
      spec.init.noise = 1e-3;
      break;
    }
  }
  spec.init.seed = spec.seed;
  return spec;
}

void validate(const ExperimentSpec& spec) {
  lgd::validate(spec.material);
  lgd::validate(spec.geometry);
  require(spec.init.noise >= 0.0, "init.noise must be >= 0");
  require(spec.init.alpha_spread >= 0.0 && spec.init.alpha_spread < 1.0,
          "init.alpha_spread must lie in [0, 1)");
  require(std::isfinite(spec.init.p0), "init.p0 must be finite");
  switch (spec.kind) {
    case ExperimentKind::kStabilityCheck:
      break;
    case ExperimentKind::kNcSweep:
      lgd::validate(spec.sweep);
      require(spec.sweep_dt >= 0.0, "sweep.dt must be >= 0");
      break;
    case ExperimentKind::kFtjRead:
      ftj::validate(spec.barrier);
      require(spec.read.points >= 1, "read.points must be >= 1");
      require(std::isfinite(spec.read.v_start) && std::isfinite(spec.read.v_end),
              "read.v_start and v_end must be finite");
      require(spec.read.relax_time > 0.0, "read.relax_time must be > 0");
      require(spec.read.relax_tol > 0.0, "read.relax_tol must be > 0");
      require(spec.read.device_area > 0.0, "read.device_area must be > 0");
      break;
    case ExperimentKind::kFtjProgram:
      ftj::validate(spec.barrier);
      require(!spec.amplitudes.empty(), "program.amplitudes must list at least one amplitude");
      require(std::is_sorted(spec.amplitudes.begin(), spec.amplitudes.end()),
              "program.amplitudes must be sorted ascending");
      ftj::validate(ftj::program_waveform(spec.program, spec.amplitudes.front()));
      require(spec.waveform.read_relax_time > 0.0, "program.read_relax_time must be > 0");
      require(spec.waveform.read_tol > 0.0, "program.read_tol must be > 0");
      require(spec.waveform.device_area > 0.0, "program.device_area must be > 0");
      break;
    case ExperimentKind::kFefetIdvg:
      fefet::validate(spec.semiconductor);
      fefet::validate(spec.idvg);
      break;
  }
  if (spec.kind == ExperimentKind::kFtjRead || spec.kind == ExperimentKind::kFtjProgram) {
    const auto& q = spec.waveform.quadrature;
    require(q.rel_tol > 0.0 && q.rel_tol < 1.0, "quadrature.rel_tol must lie in (0, 1)");
    require(q.accept_tol >= q.rel_tol, "quadrature.accept_tol must be >= rel_tol");
    require(q.max_depth >= 1, "quadrature.max_depth must be >= 1");
  }
}

ExperimentSpec parse_experiment_config(std::string_view text,
                                       std::optional<ExperimentKind> fallback_kind) {
  const Document doc = parse_document(text);
  ExperimentKind kind;
  const auto top = doc.values.find("");
  const Value* kind_value = nullptr;
  if (top != doc.values.end()) {
    if (const auto k = top->second.find("kind"); k != top->second.end()) kind_value = &k->second;
  }
  if (kind_value != nullptr) {
    try {
      kind = parse_kind(kind_value->word);
    } catch (const ConfigError& e) {
      throw ConfigError("E_PARAM", "line " + std::to_string(kind_value->line) + ": " + e.what(),
                        kind_value->line);
    }
  } else if (fallback_kind) {
    kind = *fallback_kind;
  } else {
    throw ConfigError("E_MISSING", "missing top-level key 'kind'");
  }

  const KindBlocks blocks = blocks_of(kind);
  for (auto name : blocks.required) {
    if (doc.section_lines.find(std::string(name)) == doc.section_lines.end()) {
      throw ConfigError("E_MISSING", std::string("kind ") + to_string(kind) + " requires section [" +
                                         std::string(name) + "]");
    }
  }
  for (const auto& [name, line] : doc.section_lines) {
    if (!uses_block(kind, name)) {
      throw ConfigError("E_UNKNOWN_KEY", "line " + std::to_string(line) + ": section [" + name +
                                             "] is not used by kind " + to_string(kind), line);
    }
  }

  ExperimentSpec spec = default_spec(kind);
  apply(doc, spec);
  spec.init.seed = spec.seed;
  validate(spec);
  return spec;
}

std::string write_manifest(const ExperimentSpec& spec) {
  std::ostringstream os;
  auto q = [&](const char* key, double v, Dimension dim) {
    os << key << " = " << format_quantity(v, dim) << '\n';
  };
  auto n = [&](const char* key, std::uint64_t v) { os << key << " = " << v << '\n'; };
  auto w = [&](const char* key, const char* v) { os << key << " = " << v << '\n'; };
  auto b = [&](const char* key, bool v) { os << key << " = " << (v ? "true" : "false") << '\n'; };
  using D = Dimension;

  os << "# Fully resolved experiment; rerun with: ferrosim " << to_string(spec.kind)
     << " --config <this file> --out <dir>\n";
  w("kind", to_string(spec.kind));
  n("seed", spec.seed);

  const auto& m = spec.material;
  os << "\n[material]\n";
  q("alpha", m.alpha, D::kAlpha);
  q("beta", m.beta, D::kBeta);
  q("gamma", m.gamma, D::kGamma);
  q("k_dw", m.k_dw, D::kWallStiffness);
  q("eps_f", m.eps_f, D::kNone);
  q("rho_kin", m.rho_kin, D::kResistivity);
  w("wall_gradient", wall_name(m.wall_gradient));
  q("wall_scale", m.wall_scale, D::kNone);

  const auto& g = spec.geometry;
  os << "\n[geometry]\n";
  q("t_f", g.t_f, D::kLength);
  q("t_d", g.t_d, D::kLength);
  q("eps_d", g.eps_d, D::kNone);
  n("n_x", g.n_x);
  n("n_y", g.n_y);
  q("d", g.d, D::kLength);
  q("w", g.w, D::kLength);
  w("electrostatics", electrostatics_name(g.electrostatics));

  if (uses_block(spec.kind, "init")) {
    os << "\n[init]\n";
    w("mode", init_name(spec.init.mode));
    q("p0", spec.init.p0, D::kPolarization);
    q("noise", spec.init.noise, D::kPolarization);
    q("alpha_spread", spec.init.alpha_spread, D::kNone);
  }
  if (uses_block(spec.kind, "sweep")) {
    os << "\n[sweep]\n";
    for (std::size_t i = 0; i < spec.sweep.segments.size(); ++i) {
      const auto& s = spec.sweep.segments[i];
      os << "segment." << (i + 1) << " = " << format_quantity(s.v_start, D::kVoltage) << ", "
         << format_quantity(s.v_end, D::kVoltage) << ", " << format_quantity(s.ramp_rate, D::kRampRate)
         << ", " << s.sample_count << '\n';
    }
    q("dt", spec.sweep_dt, D::kTime);
  }
  if (uses_block(spec.kind, "barrier")) {
    const auto& br = spec.barrier;
    os << "\n[barrier]\n";
    q("phi_md", br.phi_md, D::kEnergy);
    q("phi_mf", br.phi_mf, D::kEnergy);
    q("chi_f", br.chi_f, D::kEnergy);
    q("chi_d", br.chi_d, D::kEnergy);
    q("m_eff", br.m_eff, D::kNone);
    q("temperature", br.temperature, D::kTemperature);
  }
  if (uses_block(spec.kind, "read")) {
    const auto& r = spec.read;
    os << "\n[read]\n";
    q("v_start", r.v_start, D::kVoltage);
    q("v_end", r.v_end, D::kVoltage);
    n("points", r.points);
    q("relax_time", r.relax_time, D::kTime);
    q("relax_tol", r.relax_tol, D::kField);
    q("device_area", r.device_area, D::kArea);
  }
  if (uses_block(spec.kind, "program")) {
    const auto& p = spec.program;
    os << "\n[program]\n";
    os << "amplitudes = ";
    for (std::size_t i = 0; i < spec.amplitudes.size(); ++i) {
      os << (i ? ", " : "") << format_quantity(spec.amplitudes[i], D::kVoltage);
    }
    os << '\n';
    q("reset_amplitude", p.reset_amplitude, D::kVoltage);
    q("reset_duration", p.reset_duration, D::kTime);
    q("write_duration", p.write_duration, D::kTime);
    q("rest_duration", p.rest_duration, D::kTime);
    q("read_voltage", p.read_voltage, D::kVoltage);
    q("read_duration", p.read_duration, D::kTime);
    q("read_relax_time", spec.waveform.read_relax_time, D::kTime);
    q("read_tol", spec.waveform.read_tol, D::kField);
    q("device_area", spec.waveform.device_area, D::kArea);
  }
  if (uses_block(spec.kind, "quadrature")) {
    const auto& qd = spec.waveform.quadrature;
    os << "\n[quadrature]\n";
    q("rel_tol", qd.rel_tol, D::kNone);
    q("accept_tol", qd.accept_tol, D::kNone);
    n("max_depth", qd.max_depth);
  }
  if (uses_block(spec.kind, "semiconductor")) {
    const auto& s = spec.semiconductor;
    os << "\n[semiconductor]\n";
    q("n_d", s.n_d, D::kDensity);
    q("n_i", s.n_i, D::kDensity);
    q("eps_s", s.eps_s, D::kNone);
    q("t_c", s.t_c, D::kLength);
    q("l_c", s.l_c, D::kLength);
    q("width", s.width, D::kLength);
    q("mu", s.mu, D::kMobility);
    q("v_ds", s.v_ds, D::kVoltage);
    q("v_fb", s.v_fb, D::kVoltage);
    q("temperature", s.temperature, D::kTemperature);
  }
  if (uses_block(spec.kind, "idvg")) {
    const auto& iv = spec.idvg;
    os << "\n[idvg]\n";
    q("v_min", iv.v_min, D::kVoltage);
    q("v_max", iv.v_max, D::kVoltage);
    n("samples_per_branch", iv.samples_per_branch);
    q("v_read", iv.v_read, D::kVoltage);
    b("relax", iv.relax);
    q("relax_tol", iv.relax_tol, D::kField);
    q("relax_time", iv.relax_time, D::kTime);
  }
  os << "\n[output]\n";
  b("snapshots", spec.snapshots);
  b("validate_quasi_static", spec.validate_quasi_static);
  return os.str();
}

}  // namespace ferro::cli
