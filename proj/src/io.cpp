#include "fewbody/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>

namespace fewbody {

namespace fs = std::filesystem;
using nlohmann::json;

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_document(const std::vector<std::string>& header,
                         const std::vector<std::vector<std::string>>& rows) {
  std::string out;
  auto append_row = [&out](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += csv_escape(row[i]);
    }
    out += "\r\n";
  };
  append_row(header);
  for (const auto& row : rows) append_row(row);
  return out;
}

void atomic_write(const fs::path& path, const std::string& content) {
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot open " + tmp.string());
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!f) throw IoError("short write to " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) throw IoError("rename failed: " + ec.message());
}

std::uint64_t fnv1a64(const std::string& data) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string hash_hex(std::uint64_t h) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[i] = digits[h & 0xF];
    h >>= 4;
  }
  return s;
}

json trap_to_json(const TrapSpec& trap) {
  json j;
  j["kind"] = to_string(trap.kind);
  j["offset"] = trap.offset;
  switch (trap.kind) {
    case TrapKind::power_law: j["z"] = trap.exponent; break;
    case TrapKind::polynomial: j["coefficients"] = trap.coefficients; break;
    case TrapKind::infinite_well: j["width"] = trap.width; break;
    case TrapKind::double_well:
      j["a"] = trap.quartic;
      j["b"] = trap.quadratic;
      break;
    case TrapKind::custom_sampled:
      j["q"] = trap.sample_q;
      j["v"] = trap.sample_v;
      break;
    default: break;
  }
  return j;
}

namespace {

void reject_unknown(const json& j, const std::vector<std::string>& known,
                    const std::string& where) {
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (std::find(known.begin(), known.end(), key) == known.end())
      throw ConfigInvalid("unknown field '" + key + "' in " + where);
  }
}

}  // namespace

TrapSpec trap_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind"))
    throw ConfigInvalid("trap must be an object with a 'kind'");
  const TrapKind kind = trap_kind_from_string(j.at("kind").get<std::string>());
  const double offset = j.value("offset", 0.0);
  switch (kind) {
    case TrapKind::harmonic:
      reject_unknown(j, {"kind", "offset"}, "trap");
      return TrapSpec::Harmonic(offset);
    case TrapKind::power_law:
      reject_unknown(j, {"kind", "offset", "z"}, "trap");
      if (!j.contains("z")) throw ConfigInvalid("power_law trap needs 'z'");
      return TrapSpec::PowerLaw(j.at("z").get<double>(), offset);
    case TrapKind::polynomial:
      reject_unknown(j, {"kind", "offset", "coefficients"}, "trap");
      if (!j.contains("coefficients")) throw ConfigInvalid("polynomial trap needs 'coefficients'");
      return TrapSpec::Polynomial(j.at("coefficients").get<std::vector<double>>(), offset);
    case TrapKind::infinite_well:
      reject_unknown(j, {"kind", "offset", "width"}, "trap");
      if (!j.contains("width")) throw ConfigInvalid("infinite_well trap needs 'width'");
      return TrapSpec::InfiniteWell(j.at("width").get<double>(), offset);
    case TrapKind::double_well:
      reject_unknown(j, {"kind", "offset", "a", "b"}, "trap");
      return TrapSpec::DoubleWell(j.value("a", 1.0), j.value("b", 2.0), offset);
    case TrapKind::custom_sampled:
      reject_unknown(j, {"kind", "offset", "q", "v"}, "trap");
      if (!j.contains("q") || !j.contains("v"))
        throw ConfigInvalid("custom_sampled trap needs 'q' and 'v'");
      return TrapSpec::CustomSampled(j.at("q").get<std::vector<double>>(),
                                     j.at("v").get<std::vector<double>>());
  }
  throw ConfigInvalid("unknown trap kind");
}

json grid_to_json(const Grid& grid) {
  return json{{"q_min", grid.q_min}, {"q_max", grid.q_max}, {"n_points", grid.n_points}};
}

Grid grid_from_json(const json& j) {
  reject_unknown(j, {"q_min", "q_max", "n_points"}, "grid");
  Grid g;
  g.q_min = j.value("q_min", g.q_min);
  g.q_max = j.value("q_max", g.q_max);
  g.n_points = j.value("n_points", g.n_points);
  g.validate();
  return g;
}

json interaction_to_json(const InteractionSpec& spec) {
  json j;
  j["kind"] = to_string(spec.kind);
  switch (spec.kind) {
    case InteractionKind::contact: j["g"] = spec.g; break;
    case InteractionKind::gaussian:
      j["strength"] = spec.strength;
      j["range"] = spec.range;
      break;
    case InteractionKind::sampled_kernel:
      j["separation"] = spec.kernel_sep;
      j["value"] = spec.kernel_val;
      break;
  }
  return j;
}

InteractionSpec interaction_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind"))
    throw ConfigInvalid("interaction must be an object with a 'kind'");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "contact") {
    reject_unknown(j, {"kind", "g"}, "interaction");
    if (!j.contains("g")) throw ConfigInvalid("contact interaction needs 'g'");
    return InteractionSpec::Contact(j.at("g").get<double>());
  }
  if (kind == "gaussian") {
    reject_unknown(j, {"kind", "strength", "range"}, "interaction");
    if (!j.contains("strength") || !j.contains("range"))
      throw ConfigInvalid("gaussian interaction needs 'strength' and 'range'");
    return InteractionSpec::Gaussian(j.at("strength").get<double>(),
                                     j.at("range").get<double>());
  }
  if (kind == "sampled_kernel") {
    reject_unknown(j, {"kind", "separation", "value"}, "interaction");
    if (!j.contains("separation") || !j.contains("value"))
      throw ConfigInvalid("sampled_kernel interaction needs 'separation' and 'value'");
    return InteractionSpec::SampledKernel(j.at("separation").get<std::vector<double>>(),
                                          j.at("value").get<std::vector<double>>());
  }
  throw ConfigInvalid("unknown interaction kind: " + kind);
}

std::string solution_key(const TrapSpec& trap, const Grid& grid, int n_states) {
  json j{{"trap", trap_to_json(trap)}, {"grid", grid_to_json(grid)}, {"n_states", n_states}};
  return hash_hex(fnv1a64(j.dump()));
}

namespace {

json matrix_to_json(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m(i, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

Eigen::MatrixXd matrix_from_json(const json& j) {
  const int rows = static_cast<int>(j.size());
  const int cols = rows ? static_cast<int>(j.at(0).size()) : 0;
  Eigen::MatrixXd m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int c = 0; c < cols; ++c) m(i, c) = j.at(i).at(c).get<double>();
  return m;
}

}  // namespace

json solution_to_json(const OneBodySolution& sol) {
  json j;
  j["trap"] = trap_to_json(sol.trap());
  j["grid"] = grid_to_json(sol.grid());
  j["energies"] = std::vector<double>(sol.energies().data(),
                                      sol.energies().data() + sol.energies().size());
  j["wavefunctions"] = matrix_to_json(sol.wavefunctions());
  j["derivatives"] = matrix_to_json(sol.derivatives());
  j["parities"] = sol.parities();
  return j;
}

OneBodySolution solution_from_json(const json& j) {
  const auto energies = j.at("energies").get<std::vector<double>>();
  Eigen::VectorXd e = Eigen::Map<const Eigen::VectorXd>(energies.data(),
                                                        static_cast<int>(energies.size()));
  return OneBodySolution(trap_from_json(j.at("trap")), grid_from_json(j.at("grid")), e,
                         matrix_from_json(j.at("wavefunctions")),
                         matrix_from_json(j.at("derivatives")),
                         j.at("parities").get<std::vector<int>>());
}

json table_to_json(const TwoBodyTable& table) {
  json j;
  j["kind"] = table.kind() == TableKind::contact ? "contact" : "general";
  j["states"] = std::vector<int>(table.states().begin(), table.states().end());
  json entries = json::array();
  for (const auto& [key, value] : table.storage()) {
    const int a = static_cast<int>((key >> 48) & 0xFFFF);
    const int b = static_cast<int>((key >> 32) & 0xFFFF);
    const int c = static_cast<int>((key >> 16) & 0xFFFF);
    const int d = static_cast<int>(key & 0xFFFF);
    entries.push_back(json::array({a, b, c, d, value}));
  }
  j["entries"] = std::move(entries);
  return j;
}

TwoBodyTable table_from_json(const json& j) {
  const TableKind kind =
      j.at("kind").get<std::string>() == "contact" ? TableKind::contact : TableKind::general;
  const auto states_vec = j.at("states").get<std::vector<int>>();
  TwoBodyTable table(kind, std::set<int>(states_vec.begin(), states_vec.end()));
  for (const auto& entry : j.at("entries")) {
    const int a = entry.at(0).get<int>();
    const int b = entry.at(1).get<int>();
    const int c = entry.at(2).get<int>();
    const int d = entry.at(3).get<int>();
    const double v = entry.at(4).get<double>();
    if (kind == TableKind::contact)
      table.set(a, b, c, d, v);  // sorted multiset key, any pairing works
    else
      table.set(a, c, b, d, v);  // canonical pairs {a,b} and {c,d}
  }
  return table;
}

Cache::Cache(fs::path dir, bool enabled) : dir_(std::move(dir)), enabled_(enabled) {
  if (enabled_) {
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec) throw IoError("cannot create cache directory " + dir_.string());
  }
}

std::optional<OneBodySolution> Cache::load_solution(const std::string& key) const {
  if (!enabled_) return std::nullopt;
  const fs::path path = dir_ / ("solution_" + key + ".json");
  std::ifstream f(path);
  if (!f) return std::nullopt;
  json j;
  f >> j;
  return solution_from_json(j);
}

void Cache::store_solution(const std::string& key, const OneBodySolution& sol) const {
  if (!enabled_) return;
  atomic_write(dir_ / ("solution_" + key + ".json"), solution_to_json(sol).dump());
}

std::optional<TwoBodyTable> Cache::load_table(const std::string& key) const {
  if (!enabled_) return std::nullopt;
  const fs::path path = dir_ / ("table_" + key + ".json");
  std::ifstream f(path);
  if (!f) return std::nullopt;
  json j;
  f >> j;
  return table_from_json(j);
}

void Cache::store_table(const std::string& key, const TwoBodyTable& table) const {
  if (!enabled_) return;
  atomic_write(dir_ / ("table_" + key + ".json"), table_to_json(table).dump());
}

}  // namespace fewbody
