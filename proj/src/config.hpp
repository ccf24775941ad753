#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ringlab {

/// Flat key-value store parsed from "[section]" / "key = value" text. Keys
/// are stored as "section.key"; serialization is sorted and hence canonical,
/// which makes the config hash stable across reorderings of the same file.
class Config {
 public:
  static Config load(const std::filesystem::path& path);
  static Config parse(std::string_view text, std::string_view origin = "<string>");

  bool contains(const std::string& key) const { return values_.contains(key); }
  std::optional<std::string> get(const std::string& key) const;
  void set(const std::string& key, std::string value);

  std::string require_string(const std::string& key) const;
  std::string get_string(const std::string& key, std::string fallback) const;
  double require_double(const std::string& key) const;
  double get_double(const std::string& key, double fallback) const;
  std::uint64_t get_u64(const std::string& key, std::uint64_t fallback) const;
  bool get_bool(const std::string& key, bool fallback) const;

  /// "lo:hi,lo:hi" pair lists (spectral mask bands, time mask windows).
  std::vector<std::pair<double, double>> get_pairs(const std::string& key) const;

  /// Distinct section names directly under `prefix`, e.g. prefix "noise"
  /// finds "noise.1", "noise.2" from keys "noise.1.kind" etc.
  std::vector<std::string> subsections(const std::string& prefix) const;

  std::string serialize() const;
  std::uint64_t hash() const;  // FNV-1a 64 of the canonical serialization

 private:
  std::map<std::string, std::string> values_;
};

}  // namespace ringlab
