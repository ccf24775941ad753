#include "series_io.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include "errors.hpp"

namespace ringlab {

std::string_view format_name(SeriesFormat f) {
  return f == SeriesFormat::Csv ? "csv" : "f64le";
}

SeriesFormat format_from_name(std::string_view name) {
  if (name == "csv") return SeriesFormat::Csv;
  if (name == "f64le") return SeriesFormat::F64le;
  throw ConfigError("unknown series format: " + std::string(name));
}

std::string_view format_extension(SeriesFormat f) { return format_name(f); }

namespace {

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

double parse_double_token(std::string_view token, const std::string& context) {
  double value = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  const auto res = std::from_chars(first, last, value);
  if (res.ec != std::errc{} || res.ptr != last)
    throw DataError("parse error " + context + ": '" + std::string(token) + "'");
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

/// Parse "#key=value [key=value ...]" header lines into a map.
void parse_header_tokens(std::string_view line, std::map<std::string, std::string>& out) {
  line.remove_prefix(1);  // '#'
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t' && line[end] != '\r') ++end;
    const std::string_view token = line.substr(pos, end - pos);
    const std::size_t eq = token.find('=');
    if (eq != std::string_view::npos && eq > 0)
      out[std::string(token.substr(0, eq))] = std::string(token.substr(eq + 1));
    pos = end;
  }
}

TimeSeries load_series_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open file: " + path.string());

  std::map<std::string, std::string> header;
  std::vector<double> samples;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view view = trim(line);
    if (view.empty()) continue;
    if (view.front() == '#') {
      parse_header_tokens(view, header);
      continue;
    }
    const double v = parse_double_token(view, "at line " + std::to_string(line_no) + " of " +
                                                  path.filename().string());
    if (!std::isfinite(v))
      throw DataError("non-finite sample at line " + std::to_string(line_no) + " of " +
                      path.filename().string());
    samples.push_back(v);
  }
  if (!header.contains("sample_rate_hz") || !header.contains("unit"))
    throw DataError("missing metadata (sample_rate_hz, unit) in " + path.string());
  const double fs = parse_double_token(header["sample_rate_hz"], "in header of " + path.string());
  const Unit unit = unit_from_name(header["unit"]);
  double t0 = 0.0;
  if (header.contains("start_time_s"))
    t0 = parse_double_token(header["start_time_s"], "in header of " + path.string());
  if (samples.empty()) throw DataError("no samples in " + path.string());
  try {
    return TimeSeries(std::move(samples), fs, unit, t0);
  } catch (const std::invalid_argument& e) {
    throw DataError(std::string(e.what()) + " in " + path.string());
  }
}

void save_series_csv(const TimeSeries& s, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write file: " + path.string());
  out << "#sample_rate_hz=" << format_double(s.sample_rate()) << "\n";
  out << "#unit=" << unit_name(s.unit()) << "\n";
  out << "#start_time_s=" << format_double(s.start_time()) << "\n";
  for (double v : s.samples()) out << format_double(v) << "\n";
  if (!out) throw DataError("write failed: " + path.string());
}

std::map<std::string, std::string> load_meta_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("missing metadata file: " + path.string());
  std::map<std::string, std::string> meta;
  std::string line;
  while (std::getline(in, line)) {
    const std::string_view view = trim(line);
    if (view.empty() || view.front() == '#') continue;
    const std::size_t eq = view.find('=');
    if (eq == std::string_view::npos)
      throw DataError("malformed metadata line in " + path.string());
    meta[std::string(trim(view.substr(0, eq)))] = std::string(trim(view.substr(eq + 1)));
  }
  return meta;
}

TimeSeries load_series_f64le(const std::filesystem::path& path) {
  auto meta = load_meta_file(path.string() + ".meta");
  for (const char* key : {"sample_rate_hz", "unit", "length"})
    if (!meta.contains(key))
      throw DataError(std::string("metadata key missing: ") + key + " for " + path.string());

  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open file: " + path.string());
  in.seekg(0, std::ios::end);
  const std::streamoff bytes = in.tellg();
  in.seekg(0, std::ios::beg);
  if (bytes < 0 || bytes % 8 != 0)
    throw DataError("truncated f64le payload: " + path.string());
  const auto n = static_cast<std::size_t>(bytes / 8);
  const auto declared = static_cast<std::size_t>(
      parse_double_token(meta["length"], "in metadata of " + path.string()));
  if (declared != n)
    throw DataError("metadata length mismatch for " + path.string());

  std::vector<unsigned char> raw(static_cast<std::size_t>(bytes));
  in.read(reinterpret_cast<char*>(raw.data()), bytes);
  if (!in) throw DataError("read failed: " + path.string());

  std::vector<double> samples(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::uint64_t u = 0;
    for (int b = 7; b >= 0; --b) u = (u << 8) | raw[k * 8 + static_cast<std::size_t>(b)];
    samples[k] = std::bit_cast<double>(u);
    if (!std::isfinite(samples[k]))
      throw DataError("non-finite sample at index " + std::to_string(k) + " in " + path.string());
  }

  const double fs = parse_double_token(meta["sample_rate_hz"], "in metadata of " + path.string());
  const Unit unit = unit_from_name(meta["unit"]);
  double t0 = 0.0;
  if (meta.contains("start_time_s"))
    t0 = parse_double_token(meta["start_time_s"], "in metadata of " + path.string());
  try {
    return TimeSeries(std::move(samples), fs, unit, t0);
  } catch (const std::invalid_argument& e) {
    throw DataError(std::string(e.what()) + " in " + path.string());
  }
}

void save_series_f64le(const TimeSeries& s, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write file: " + path.string());
  std::vector<unsigned char> raw(s.size() * 8);
  for (std::size_t k = 0; k < s.size(); ++k) {
    const auto u = std::bit_cast<std::uint64_t>(s[k]);
    for (int b = 0; b < 8; ++b)
      raw[k * 8 + static_cast<std::size_t>(b)] = static_cast<unsigned char>((u >> (8 * b)) & 0xff);
  }
  out.write(reinterpret_cast<const char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
  if (!out) throw DataError("write failed: " + path.string());

  std::ofstream meta(path.string() + ".meta");
  if (!meta) throw DataError("cannot write metadata: " + path.string() + ".meta");
  meta << "sample_rate_hz=" << format_double(s.sample_rate()) << "\n";
  meta << "unit=" << unit_name(s.unit()) << "\n";
  meta << "start_time_s=" << format_double(s.start_time()) << "\n";
  meta << "length=" << s.size() << "\n";
}

}  // namespace

TimeSeries load_series(const std::filesystem::path& path, SeriesFormat format) {
  return format == SeriesFormat::Csv ? load_series_csv(path) : load_series_f64le(path);
}

void save_series(const TimeSeries& s, const std::filesystem::path& path, SeriesFormat format) {
  if (format == SeriesFormat::Csv)
    save_series_csv(s, path);
  else
    save_series_f64le(s, path);
}

TimeMask::TimeMask(std::vector<std::pair<double, double>> windows)
    : windows_(std::move(windows)) {
  for (const auto& [lo, hi] : windows_) {
    if (!(lo < hi)) throw std::invalid_argument("TimeMask: window must satisfy t_start < t_end");
  }
  std::sort(windows_.begin(), windows_.end());
  std::vector<std::pair<double, double>> merged;
  for (const auto& w : windows_) {
    if (!merged.empty() && w.first <= merged.back().second)
      merged.back().second = std::max(merged.back().second, w.second);
    else
      merged.push_back(w);
  }
  windows_ = std::move(merged);
}

std::vector<TimeSeries> apply_time_mask(const TimeSeries& s, const TimeMask& mask) {
  std::vector<TimeSeries> out;
  std::vector<double> run;
  double run_start = s.start_time();
  std::size_t window_idx = 0;
  const auto& windows = mask.windows();

  auto flush = [&]() {
    if (!run.empty()) {
      out.emplace_back(std::move(run), s.sample_rate(), s.unit(), run_start);
      run = {};
    }
  };

  for (std::size_t k = 0; k < s.size(); ++k) {
    const double t = s.time_at(k);
    while (window_idx < windows.size() && t >= windows[window_idx].second) ++window_idx;
    const bool masked =
        window_idx < windows.size() && t >= windows[window_idx].first && t < windows[window_idx].second;
    if (masked) {
      flush();
    } else {
      if (run.empty()) run_start = t;
      run.push_back(s[k]);
    }
  }
  flush();
  return out;
}

void save_spectrum(const Spectrum& spec, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write file: " + path.string());
  out << "#unit=" << unit_name(spec.unit) << "\n";
  out << "#asd_unit=" << asd_unit_label(spec.unit) << "\n";
  out << "#segment_count=" << spec.segment_count << "\n";
  out << "#resolution_hz=" << format_double(spec.resolution) << "\n";
  out << "#window=" << window_name(spec.window) << "\n";
  out << "#mask=";
  if (spec.mask_bands.empty()) {
    out << "none";
  } else {
    for (std::size_t i = 0; i < spec.mask_bands.size(); ++i) {
      if (i > 0) out << ",";
      out << format_double(spec.mask_bands[i].first) << ":"
          << format_double(spec.mask_bands[i].second);
    }
  }
  out << "\n";
  if (spec.warning_empty) out << "#warning=empty_after_mask\n";
  out << "#columns=frequency_hz asd_value\n";
  for (std::size_t k = 0; k < spec.frequencies.size(); ++k)
    out << format_double(spec.frequencies[k]) << " " << format_double(spec.asd[k]) << "\n";
  if (!out) throw DataError("write failed: " + path.string());
}

Spectrum load_spectrum(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open file: " + path.string());
  Spectrum spec;
  std::map<std::string, std::string> header;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view view = trim(line);
    if (view.empty()) continue;
    if (view.front() == '#') {
      parse_header_tokens(view, header);
      continue;
    }
    std::istringstream row{std::string(view)};
    std::string ftok, atok;
    if (!(row >> ftok >> atok))
      throw DataError("parse error at line " + std::to_string(line_no) + " of " + path.string());
    const std::string ctx = "at line " + std::to_string(line_no) + " of " + path.string();
    spec.frequencies.push_back(parse_double_token(ftok, ctx));
    spec.asd.push_back(parse_double_token(atok, ctx));
  }
  if (header.contains("unit")) spec.unit = unit_from_name(header["unit"]);
  if (header.contains("window")) spec.window = window_from_name(header["window"]);
  if (header.contains("segment_count"))
    spec.segment_count = static_cast<std::size_t>(
        parse_double_token(header["segment_count"], "in header of " + path.string()));
  if (header.contains("resolution_hz"))
    spec.resolution = parse_double_token(header["resolution_hz"], "in header of " + path.string());
  if (header.contains("mask") && header["mask"] != "none") {
    std::istringstream bands(header["mask"]);
    std::string item;
    while (std::getline(bands, item, ',')) {
      const std::size_t colon = item.find(':');
      if (colon == std::string::npos)
        throw DataError("malformed mask header in " + path.string());
      spec.mask_bands.emplace_back(
          parse_double_token(item.substr(0, colon), "in mask header of " + path.string()),
          parse_double_token(item.substr(colon + 1), "in mask header of " + path.string()));
    }
  }
  spec.warning_empty = spec.frequencies.empty();
  return spec;
}

void save_stability(const StabilityCurve& curve, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write file: " + path.string());
  out << "#variant=" << deviation_name(curve.variant) << "\n";
  out << "#tau0_s=" << format_double(curve.tau0) << "\n";
  out << "#unit=" << unit_name(curve.unit) << "\n";
  out << "#columns=tau_s deviation count\n";
  for (std::size_t k = 0; k < curve.taus.size(); ++k)
    out << format_double(curve.taus[k]) << " " << format_double(curve.deviations[k]) << " "
        << curve.sample_counts[k] << "\n";
  if (!out) throw DataError("write failed: " + path.string());
}

}  // namespace ringlab
