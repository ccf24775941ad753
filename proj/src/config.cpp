#include "config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "errors.hpp"

namespace ringlab {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

double parse_double_or_throw(const std::string& key, const std::string& text) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  const auto res = std::from_chars(first, last, value);
  if (res.ec != std::errc{} || res.ptr != last || !std::isfinite(value))
    throw ConfigError("config key '" + key + "': not a number: '" + text + "'");
  return value;
}

}  // namespace

Config Config::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse(text.str(), path.string());
}

Config Config::parse(std::string_view text, std::string_view origin) {
  Config cfg;
  std::string section;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    const std::string_view raw =
        text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
    ++line_no;

    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#' || line.front() == ';') continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw ConfigError("malformed section at line " + std::to_string(line_no) + " of " +
                          std::string(origin));
      section = std::string(trim(line.substr(1, line.size() - 2)));
      continue;
    }
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError("expected key=value at line " + std::to_string(line_no) + " of " +
                        std::string(origin));
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    if (key.empty())
      throw ConfigError("empty key at line " + std::to_string(line_no) + " of " +
                        std::string(origin));
    cfg.values_[section.empty() ? key : section + "." + key] = value;
  }
  return cfg;
}

std::optional<std::string> Config::get(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

void Config::set(const std::string& key, std::string value) { values_[key] = std::move(value); }

std::string Config::require_string(const std::string& key) const {
  const auto v = get(key);
  if (!v) throw ConfigError("missing config key: " + key);
  return *v;
}

std::string Config::get_string(const std::string& key, std::string fallback) const {
  const auto v = get(key);
  return v ? *v : std::move(fallback);
}

double Config::require_double(const std::string& key) const {
  return parse_double_or_throw(key, require_string(key));
}

double Config::get_double(const std::string& key, double fallback) const {
  const auto v = get(key);
  return v ? parse_double_or_throw(key, *v) : fallback;
}

std::uint64_t Config::get_u64(const std::string& key, std::uint64_t fallback) const {
  const auto v = get(key);
  if (!v) return fallback;
  std::uint64_t value = 0;
  const char* first = v->data();
  const char* last = v->data() + v->size();
  const auto res = std::from_chars(first, last, value);
  if (res.ec != std::errc{} || res.ptr != last)
    throw ConfigError("config key '" + key + "': not an unsigned integer: '" + *v + "'");
  return value;
}

bool Config::get_bool(const std::string& key, bool fallback) const {
  const auto v = get(key);
  if (!v) return fallback;
  if (*v == "true" || *v == "yes" || *v == "1") return true;
  if (*v == "false" || *v == "no" || *v == "0") return false;
  throw ConfigError("config key '" + key + "': not a boolean: '" + *v + "'");
}

std::vector<std::pair<double, double>> Config::get_pairs(const std::string& key) const {
  std::vector<std::pair<double, double>> out;
  const auto v = get(key);
  if (!v || v->empty() || *v == "none") return out;
  std::istringstream items(*v);
  std::string item;
  while (std::getline(items, item, ',')) {
    const std::size_t colon = item.find(':');
    if (colon == std::string::npos)
      throw ConfigError("config key '" + key + "': expected lo:hi pairs, got '" + item + "'");
    out.emplace_back(parse_double_or_throw(key, std::string(trim(item.substr(0, colon)))),
                     parse_double_or_throw(key, std::string(trim(item.substr(colon + 1)))));
  }
  return out;
}

std::vector<std::string> Config::subsections(const std::string& prefix) const {
  std::set<std::string> names;
  const std::string want = prefix + ".";
  for (const auto& [key, value] : values_) {
    if (key.rfind(want, 0) != 0) continue;
    const std::size_t next_dot = key.find('.', want.size());
    if (next_dot == std::string::npos) continue;
    names.insert(key.substr(0, next_dot));
  }
  return {names.begin(), names.end()};
}

std::string Config::serialize() const {
  std::ostringstream out;
  for (const auto& [key, value] : values_) out << key << "=" << value << "\n";
  return out.str();
}

std::uint64_t Config::hash() const {
  const std::string text = serialize();
  std::uint64_t h = 1469598103934665603ull;  // FNV offset basis
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;  // FNV prime
  }
  return h;
}

}  // namespace ringlab
