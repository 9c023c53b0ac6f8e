#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fewbody/onebody.hpp"
#include "fewbody/twobody.hpp"

namespace fewbody {

// Shortest round-trip decimal form; '.' separator, bit-faithful on reload.
std::string format_double(double v);

std::string csv_escape(const std::string& field);

// RFC-4180: CRLF line endings, UTF-8, quoted fields only where needed.
std::string csv_document(const std::vector<std::string>& header,
                         const std::vector<std::vector<std::string>>& rows);

// write-temp-then-rename
void atomic_write(const std::filesystem::path& path, const std::string& content);

std::uint64_t fnv1a64(const std::string& data);
std::string hash_hex(std::uint64_t h);

nlohmann::json trap_to_json(const TrapSpec& trap);
TrapSpec trap_from_json(const nlohmann::json& j);

nlohmann::json grid_to_json(const Grid& grid);
Grid grid_from_json(const nlohmann::json& j);

nlohmann::json interaction_to_json(const InteractionSpec& spec);
InteractionSpec interaction_from_json(const nlohmann::json& j);

// content hash of (trap, grid, n_states); the cache key for solutions
std::string solution_key(const TrapSpec& trap, const Grid& grid, int n_states);

nlohmann::json solution_to_json(const OneBodySolution& sol);
OneBodySolution solution_from_json(const nlohmann::json& j);

nlohmann::json table_to_json(const TwoBodyTable& table);
TwoBodyTable table_from_json(const nlohmann::json& j);

// Content-addressed store under a directory; invalidation by hash only.
class Cache {
 public:
  Cache(std::filesystem::path dir, bool enabled);

  std::optional<OneBodySolution> load_solution(const std::string& key) const;
  void store_solution(const std::string& key, const OneBodySolution& sol) const;

  std::optional<TwoBodyTable> load_table(const std::string& key) const;
  void store_table(const std::string& key, const TwoBodyTable& table) const;

  bool enabled() const { return enabled_; }

 private:
  std::filesystem::path dir_;
  bool enabled_;
};

}  // namespace fewbody
