#include "campaign.hpp"

#include <algorithm>
#include <cmath>
#include <ctime>
#include <fstream>
#include <numbers>
#include <sstream>

#include "errors.hpp"
#include "numeric.hpp"

namespace ringlab {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::uint64_t derived_seed(std::uint64_t master, std::uint64_t slot) {
  return splitmix64(master + 0x9e3779b97f4a7c15ull * (slot + 1));
}

std::string utc_now_iso() {
  const std::time_t t = std::time(nullptr);
  char buf[32];
  std::tm tm_utc{};
  gmtime_r(&t, &tm_utc);
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buf;
}

std::string hex64(std::uint64_t v) {
  char buf[19];
  std::snprintf(buf, sizeof(buf), "0x%016llx", static_cast<unsigned long long>(v));
  return buf;
}

NoiseSpec resolve_noise_block(const Config& cfg, const std::string& block, double sample_rate,
                              double scale_factor, std::uint64_t master_seed,
                              std::uint64_t ordinal) {
  NoiseSpec spec;
  spec.kind = noise_kind_from_name(cfg.require_string(block + ".kind"));
  spec.seed = cfg.get_u64(block + ".seed", derived_seed(master_seed, ordinal));

  const bool has_level = cfg.contains(block + ".level");
  const bool has_asd = cfg.contains(block + ".asd_level");
  const bool has_rot = cfg.contains(block + ".rotation_asd_level");
  if (static_cast<int>(has_level) + static_cast<int>(has_asd) + static_cast<int>(has_rot) != 1)
    throw ConfigError(block + ": exactly one of level, asd_level, rotation_asd_level required");

  if (has_level) {
    spec.level = cfg.require_double(block + ".level");
  } else {
    double asd = has_asd ? cfg.require_double(block + ".asd_level")
                         : scale_factor * cfg.require_double(block + ".rotation_asd_level");
    if (has_rot && spec.kind == NoiseKind::WhiteAdditive)
      throw ConfigError(block + ": rotation_asd_level does not apply to white_additive");
    switch (spec.kind) {
      case NoiseKind::WhiteFrequency:
      case NoiseKind::WhiteAdditive:
        spec.level = asd_level_to_sigma(asd, sample_rate);
        break;
      case NoiseKind::WhitePhase: {
        // phi = omega * tbar: a frequency-noise-equivalent phase level.
        const double tbar = cfg.get_double(block + ".tbar_s", 0.02);
        spec.level = asd_level_to_sigma(asd, sample_rate) * tbar;
        break;
      }
      case NoiseKind::WienerPhase:
        // Step sigma whose integrated process is equivalent to white
        // frequency noise of the given ASD: sigma_step = asd / sqrt(2 fs).
        spec.level = asd / std::sqrt(2.0 * sample_rate);
        break;
    }
  }
  if (!(spec.level >= 0.0)) throw ConfigError(block + ": level must be >= 0");

  const std::string target = cfg.get_string(block + ".target", "");
  const bool is_additive = spec.kind == NoiseKind::WhiteAdditive;
  if (!target.empty()) {
    if (target != "in_cavity" && target != "per_port")
      throw ConfigError(block + ": target must be in_cavity or per_port");
    if ((target == "per_port") != is_additive)
      throw ConfigError(block + ": white_additive is per-port, other kinds are in-cavity");
  }
  return spec;
}

}  // namespace

CampaignConfig CampaignConfig::resolve(const Config& cfg) {
  CampaignConfig rc;
  try {
    rc.duration = cfg.get_double("campaign.duration_s", 0.0);
    rc.sample_rate = cfg.get_double("campaign.sample_rate_hz", 5000.0);
    if (!(rc.sample_rate > 0.0)) throw ConfigError("campaign.sample_rate_hz must be positive");
    rc.start_time = cfg.get_double("campaign.start_time_s", 0.0);
    rc.seed = cfg.get_u64("campaign.seed", 0);
    rc.max_samples = static_cast<std::size_t>(cfg.get_double("campaign.max_samples", 1e9));

    if (cfg.contains("carrier.omega_s_rad_s"))
      rc.carrier.omega_s = cfg.require_double("carrier.omega_s_rad_s");
    else if (cfg.contains("carrier.frequency_hz"))
      rc.carrier.omega_s = 2.0 * std::numbers::pi * cfg.require_double("carrier.frequency_hz");
    rc.carrier.gain = cfg.get_double("carrier.gain", 1.0);
    rc.carrier.initial_phase = cfg.get_double("carrier.initial_phase_rad", 0.0);

    rc.geometry = GyroGeometry(cfg.get_double("geometry.area_m2", 2.56),
                               cfg.get_double("geometry.perimeter_m", 6.4),
                               cfg.get_double("geometry.wavelength_m", 632.8e-9),
                               cfg.get_double("geometry.theta_rad", 0.0));
    rc.reference = ReferenceRate(
        cfg.get_double("reference.omega_ref_rad_s", ReferenceRate::kEarthSidereal));

    const double k = sagnac_scale_factor(rc.geometry);
    bool have_per_port = false;
    std::uint64_t ordinal = 0;
    for (const std::string& block : cfg.subsections("noise")) {
      const NoiseSpec spec =
          resolve_noise_block(cfg, block, rc.sample_rate, k, rc.seed, ordinal++);
      if (spec.kind == NoiseKind::WhiteAdditive) {
        if (have_per_port) throw ConfigError("multiple white_additive noise blocks");
        rc.per_port = spec;
        have_per_port = true;
      } else {
        rc.in_cavity.push_back(spec);
      }
    }
    if (!have_per_port) rc.per_port = NoiseSpec{NoiseKind::WhiteAdditive, 0.0, rc.seed};

    rc.demod.integration_time = cfg.get_double("demod.integration_time_s", 0.02);
    rc.demod.detrend = cfg.get_bool("demod.detrend", true);
    const std::string mode = cfg.get_string("demod.mode", "contiguous");
    if (mode == "contiguous") {
      rc.demod.output_rate = 0.0;
    } else if (mode == "sliding") {
      rc.demod.output_rate = cfg.get_double("demod.output_rate_hz", rc.sample_rate);
    } else {
      throw ConfigError("demod.mode must be contiguous or sliding");
    }
    rc.demod.edge_guard = cfg.get_double("demod.edge_guard_s", -1.0);

    rc.segment_length =
        static_cast<std::size_t>(cfg.get_double("spectral.segment_length", 65536.0));
    rc.overlap = cfg.get_double("spectral.overlap", 0.5);
    rc.window = window_from_name(cfg.get_string("spectral.window", "hann"));
    rc.spectral_mask = SpectralMask(cfg.get_pairs("spectral.mask_bands"));
    rc.rebin_ppd = static_cast<int>(cfg.get_double("spectral.rebin_ppd", 40.0));

    rc.points_per_decade = static_cast<int>(cfg.get_double("stability.points_per_decade", 4.0));
    if (cfg.contains("stability.variants")) {
      rc.variants.clear();
      std::istringstream items(cfg.require_string("stability.variants"));
      std::string item;
      while (std::getline(items, item, ','))
        rc.variants.push_back(deviation_from_name(item));
      if (rc.variants.empty()) throw ConfigError("stability.variants is empty");
    }

    rc.time_mask = TimeMask(cfg.get_pairs("mask.time_windows"));
    rc.format = format_from_name(cfg.get_string("io.format", "f64le"));

    rc.shot_noise_asd = cfg.get_double("report.shot_noise_asd", 18e-12);
    rc.fig3_rotation_asd = cfg.get_double("report.fig3_rotation_asd", 20e-12);
    rc.fig3_tbar = cfg.get_double("report.fig3_tbar_s", 0.02);

    const auto band = [&](const std::string& key, std::pair<double, double> fallback) {
      const auto pairs = cfg.get_pairs(key);
      if (pairs.empty()) return fallback;
      if (pairs.size() != 1) throw ConfigError(key + ": expected a single lo:hi band");
      return pairs.front();
    };
    rc.classify.low = band("classify.low_band", rc.classify.low);
    rc.classify.high = band("classify.high_band", rc.classify.high);
    rc.classify.knee_search = band("classify.knee_band", rc.classify.knee_search);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("invalid configuration: ") + e.what());
  }
  return rc;
}

std::size_t CampaignConfig::sample_count() const {
  if (!(duration > 0.0)) throw ConfigError("campaign.duration_s must be positive");
  const double n = std::llround(duration * sample_rate);
  if (n < 1.0) throw ConfigError("campaign duration shorter than one sample");
  if (n > static_cast<double>(max_samples))
    throw ConfigError("campaign exceeds campaign.max_samples");
  return static_cast<std::size_t>(n);
}

InterferogramPair CampaignConfig::synthesize() const {
  return synthesize_pair(carrier, in_cavity, per_port, sample_count(), sample_rate, start_time);
}

namespace {

void ensure_outdir(const std::filesystem::path& outdir) {
  std::error_code ec;
  std::filesystem::create_directories(outdir, ec);
  if (ec) throw DataError("cannot create output directory: " + outdir.string());
}

void write_manifest(const Config& cfg, const CampaignConfig& rc, const std::string& command,
                    const std::filesystem::path& outdir,
                    const std::vector<std::string>& outputs) {
  std::ofstream out(outdir / "manifest.txt");
  if (!out) throw DataError("cannot write manifest in " + outdir.string());
  out << "#ringlab_manifest_v1\n";
  out << "command=" << command << "\n";
  out << "tool_version=" << kToolVersion << "\n";
  out << "config_hash=" << hex64(cfg.hash()) << "\n";
  out << "created_utc=" << utc_now_iso() << "\n";
  out << "seed=" << rc.seed << "\n";
  for (const NoiseSpec& spec : rc.in_cavity)
    out << "noise_seed=" << noise_kind_name(spec.kind) << ":" << spec.seed << "\n";
  out << "noise_seed=" << noise_kind_name(rc.per_port.kind) << ":" << rc.per_port.seed << "\n";
  for (const std::string& name : outputs) out << "output=" << name << "\n";
  out << "config_begin\n" << cfg.serialize() << "config_end\n";
}

std::string series_filename(const std::string& stem, SeriesFormat format) {
  return stem + "." + std::string(format_extension(format));
}

TimeSeries load_input_series(const Config& cfg, const CampaignConfig& rc,
                             const std::string& key) {
  const std::string path = cfg.require_string(key);
  return load_series(path, rc.format);
}

std::pair<TimeSeries, TimeSeries> load_pair_inputs(const Config& cfg, const CampaignConfig& rc) {
  if (cfg.contains("io.input") && cfg.contains("io.input2"))
    return {load_input_series(cfg, rc, "io.input"), load_input_series(cfg, rc, "io.input2")};
  const std::filesystem::path dir = cfg.require_string("io.pair_dir");
  return {load_series(dir / series_filename("s1", rc.format), rc.format),
          load_series(dir / series_filename("s2", rc.format), rc.format)};
}

Spectrum masked_asd(const TimeSeries& s, const CampaignConfig& rc) {
  Spectrum spec = asd(s, rc.segment_length, rc.overlap, rc.window);
  if (!rc.spectral_mask.empty()) spec = apply_mask(spec, rc.spectral_mask);
  return spec;
}

std::vector<std::size_t> grid_for_variant(DeviationKind variant, std::size_t n, int ppd) {
  std::vector<std::size_t> grid = tau_grid(n, ppd);
  const auto keep = [&](std::size_t m) {
    switch (variant) {
      case DeviationKind::Oadev: return n >= 2 * m + 1;
      case DeviationKind::Mdev: return n >= 3 * m;
      case DeviationKind::Adev: return n / m >= 2;
    }
    return false;
  };
  std::erase_if(grid, [&](std::size_t m) { return !keep(m); });
  return grid;
}

StabilityCurve run_variant(DeviationKind variant, const TimeSeries& y,
                           std::span<const std::size_t> grid) {
  switch (variant) {
    case DeviationKind::Oadev: return oadev(y, grid);
    case DeviationKind::Mdev: return mdev(y, grid);
    case DeviationKind::Adev: return adev(y, grid);
  }
  throw std::invalid_argument("unknown stability variant");
}

}  // namespace

void cmd_synth(const Config& cfg, const std::filesystem::path& outdir) {
  const CampaignConfig rc = CampaignConfig::resolve(cfg);
  ensure_outdir(outdir);
  const InterferogramPair pair = rc.synthesize();
  std::vector<std::string> outputs;
  const auto save = [&](const TimeSeries& s, const std::string& stem) {
    const std::string name = series_filename(stem, rc.format);
    save_series(s, outdir / name, rc.format);
    outputs.push_back(name);
  };
  save(pair.s1, "s1");
  save(pair.s2, "s2");
  save(pair.truth.omega_n, "truth_omega_n");
  save(pair.truth.phi_n, "truth_phi_n");
  write_manifest(cfg, rc, "synth", outdir, outputs);
}

void cmd_demod(const Config& cfg, const std::filesystem::path& outdir) {
  const CampaignConfig rc = CampaignConfig::resolve(cfg);
  ensure_outdir(outdir);
  const auto [s1, s2] = load_pair_inputs(cfg, rc);
  const TimeSeries omega1 = reconstruct_frequency(s1, rc.demod);
  const TimeSeries omega2 = reconstruct_frequency(s2, rc.demod);
  std::vector<std::string> outputs;
  const auto save = [&](const TimeSeries& s, const std::string& stem) {
    const std::string name = series_filename(stem, rc.format);
    save_series(s, outdir / name, rc.format);
    outputs.push_back(name);
  };
  save(omega1, "omega1");
  save(omega2, "omega2");
  write_manifest(cfg, rc, "demod", outdir, outputs);
}

void cmd_spectrum(const Config& cfg, const std::filesystem::path& outdir) {
  const CampaignConfig rc = CampaignConfig::resolve(cfg);
  ensure_outdir(outdir);
  const TimeSeries input = load_input_series(cfg, rc, "io.input");
  const Spectrum spec = masked_asd(input, rc);
  save_spectrum(spec, outdir / "spectrum.txt");
  std::vector<std::string> outputs{"spectrum.txt"};
  if (rc.rebin_ppd > 0) {
    save_spectrum(log_rebin(spec, rc.rebin_ppd), outdir / "spectrum_logbin.txt");
    outputs.push_back("spectrum_logbin.txt");
  }
  write_manifest(cfg, rc, "spectrum", outdir, outputs);
}

void cmd_stability(const Config& cfg, const std::filesystem::path& outdir) {
  const CampaignConfig rc = CampaignConfig::resolve(cfg);
  ensure_outdir(outdir);
  const TimeSeries input = load_input_series(cfg, rc, "io.input");
  const std::vector<TimeSeries> segments = apply_time_mask(input, rc.time_mask);
  if (segments.empty()) throw DataError("time mask removed every sample");
  std::vector<std::string> outputs;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    for (const DeviationKind variant : rc.variants) {
      const std::vector<std::size_t> grid =
          grid_for_variant(variant, segments[i].size(), rc.points_per_decade);
      if (grid.empty()) continue;
      const StabilityCurve curve = run_variant(variant, segments[i], grid);
      const std::string name = "stability_" + std::string(deviation_name(variant)) + "_seg" +
                               std::to_string(i) + ".txt";
      save_stability(curve, outdir / name);
      outputs.push_back(name);
    }
  }
  if (outputs.empty()) throw DataError("no segment long enough for stability analysis");
  write_manifest(cfg, rc, "stability", outdir, outputs);
}

void cmd_diff(const Config& cfg, const std::filesystem::path& outdir) {
  const CampaignConfig rc = CampaignConfig::resolve(cfg);
  ensure_outdir(outdir);
  const auto [s1, s2] = load_pair_inputs(cfg, rc);
  const DifferentialResult result =
      run_differential(s1, s2, rc.demod, rc.geometry, rc.seed);
  std::vector<std::string> outputs;
  const auto save = [&](const TimeSeries& s, const std::string& stem) {
    const std::string name = series_filename(stem, rc.format);
    save_series(s, outdir / name, rc.format);
    outputs.push_back(name);
  };
  save(result.omega_d, "omega_d");
  save(result.omega_half_diff, "omega_n12_half");
  save(result.rotation_d, "rotation_d");
  save(result.rotation_half_diff, "rotation_n12_half");
  write_manifest(cfg, rc, "diff", outdir, outputs);
}

std::string cmd_classify(const Config& cfg, const std::filesystem::path& outdir) {
  const CampaignConfig rc = CampaignConfig::resolve(cfg);
  ensure_outdir(outdir);
  Spectrum spec = load_spectrum(cfg.require_string("io.input"));
  if (rc.rebin_ppd > 0) spec = log_rebin(spec, rc.rebin_ppd);
  const NoiseClass label = classify_noise(spec, rc.classify);
  const SlopeFit low = loglog_slope(spec, rc.classify.low.first, rc.classify.low.second);
  const SlopeFit high = loglog_slope(spec, rc.classify.high.first, rc.classify.high.second);

  std::ofstream out(outdir / "classification.txt");
  if (!out) throw DataError("cannot write classification in " + outdir.string());
  out << "label=" << noise_class_name(label) << "\n";
  out << "low_band_slope=" << low.slope << "\n";
  out << "high_band_slope=" << high.slope << "\n";
  out.close();
  write_manifest(cfg, rc, "classify", outdir, {"classification.txt"});
  return std::string(noise_class_name(label));
}

namespace {

struct Fig3Outcome {
  std::string name;
  double level_factor = 0.0;  // band-median reconstructed / injected equivalent
  double high_slope = 0.0;
  double disc_ratio = 0.0;
};

void write_overlay(const std::filesystem::path& path, const Spectrum& recon,
                   const Spectrum& injected) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write overlay: " + path.string());
  out << "#columns=frequency_hz asd_reconstructed asd_injected\n";
  const std::size_t n = std::min(recon.frequencies.size(), injected.frequencies.size());
  for (std::size_t k = 0; k < n; ++k) {
    char buf[128];
    std::snprintf(buf, sizeof(buf), "%.12g %.12g %.12g", recon.frequencies[k], recon.asd[k],
                  injected.asd[k]);
    out << buf << "\n";
  }
}

Spectrum constant_level_spectrum(const Spectrum& grid, double level) {
  Spectrum out = grid;
  std::fill(out.asd.begin(), out.asd.end(), level);
  return out;
}

}  // namespace

void cmd_report(const Config& cfg, const std::filesystem::path& outdir) {
  const CampaignConfig rc = CampaignConfig::resolve(cfg);
  ensure_outdir(outdir);
  std::vector<std::string> outputs;
  const double k_scale = sagnac_scale_factor(rc.geometry);

  // Differential pipeline on the configured campaign (Figs. 1/2 analog).
  const InterferogramPair pair = rc.synthesize();
  const DifferentialResult diff = run_differential(pair, rc.demod, rc.geometry);
  const Spectrum asd_rot_d = masked_asd(diff.rotation_d, rc);
  const Spectrum asd_rot_half = masked_asd(diff.rotation_half_diff, rc);
  save_spectrum(asd_rot_d, outdir / "asd_rotation_d.txt");
  save_spectrum(asd_rot_half, outdir / "asd_rotation_n12_half.txt");
  outputs.push_back("asd_rotation_d.txt");
  outputs.push_back("asd_rotation_n12_half.txt");
  if (rc.rebin_ppd > 0) {
    save_spectrum(log_rebin(asd_rot_d, rc.rebin_ppd), outdir / "asd_rotation_d_logbin.txt");
    save_spectrum(log_rebin(asd_rot_half, rc.rebin_ppd),
                  outdir / "asd_rotation_n12_half_logbin.txt");
    outputs.push_back("asd_rotation_d_logbin.txt");
    outputs.push_back("asd_rotation_n12_half_logbin.txt");
  }

  // Reconstructed-noise overlays for the three canonical injections
  // (Fig. 3 analog), all expressed as rotation-rate ASDs.
  const double beat_asd = k_scale * rc.fig3_rotation_asd;
  const double sigma_wf = asd_level_to_sigma(beat_asd, rc.sample_rate);
  const std::vector<std::pair<std::string, NoiseSpec>> injections{
      {"white_frequency",
       NoiseSpec{NoiseKind::WhiteFrequency, sigma_wf, derived_seed(rc.seed, 101)}},
      {"white_phase",
       NoiseSpec{NoiseKind::WhitePhase, sigma_wf * rc.fig3_tbar, derived_seed(rc.seed, 102)}},
      {"wiener_phase",
       NoiseSpec{NoiseKind::WienerPhase, beat_asd / std::sqrt(2.0 * rc.sample_rate),
                 derived_seed(rc.seed, 103)}}};

  std::vector<Fig3Outcome> summaries;
  const double fc = rc.carrier.omega_s / (2.0 * std::numbers::pi);
  for (const auto& [name, spec] : injections) {
    const std::vector<NoiseSpec> cavity{spec};
    const NoiseSpec quiet{NoiseKind::WhiteAdditive, 0.0, derived_seed(rc.seed, 104)};
    const InterferogramPair p =
        synthesize_pair(rc.carrier, cavity, quiet, rc.sample_count(), rc.sample_rate,
                        rc.start_time);
    const TimeSeries recon = reconstruct_frequency(p.s1, rc.demod);
    Spectrum rec_spec = masked_asd(scaled(recon, 1.0 / k_scale), rc);
    Spectrum inj_spec =
        (spec.kind == NoiseKind::WhiteFrequency)
            ? masked_asd(scaled(p.truth.omega_n, 1.0 / k_scale), rc)
            : constant_level_spectrum(rec_spec, rc.fig3_rotation_asd);
    if (rc.rebin_ppd > 0) {
      rec_spec = log_rebin(rec_spec, rc.rebin_ppd);
      inj_spec = log_rebin(inj_spec, rc.rebin_ppd);
    }
    const std::string table = "fig3_" + name + ".txt";
    write_overlay(outdir / table, rec_spec, inj_spec);
    outputs.push_back(table);

    Fig3Outcome outcome;
    outcome.name = name;
    const double f_lo = std::max(3.0 * rec_spec.resolution, 0.02);
    const double f_hi = std::max(0.8, 4.0 * f_lo);
    outcome.level_factor =
        band_median_asd(rec_spec, f_lo, f_hi) / rc.fig3_rotation_asd;
    outcome.high_slope = (name == "white_phase")
                             ? loglog_slope(rec_spec, 0.1, 500.0).slope
                             : loglog_slope(rec_spec, 25.0, 250.0).slope;
    outcome.disc_ratio = band_median_asd(rec_spec, 0.70 * fc, 0.96 * fc) /
                         band_median_asd(rec_spec, 1.04 * fc, 1.30 * fc);
    summaries.push_back(outcome);
  }

  // Allan analysis of the noise channel (Fig. 5 analog) with the shot-noise
  // reference line sigma(tau) = asd / sqrt(2 tau).
  const std::vector<TimeSeries> segments = apply_time_mask(diff.rotation_half_diff, rc.time_mask);
  if (segments.empty()) throw DataError("time mask removed every sample");
  const TimeSeries& longest =
      *std::max_element(segments.begin(), segments.end(),
                        [](const TimeSeries& a, const TimeSeries& b) { return a.size() < b.size(); });
  const std::vector<std::size_t> grid =
      grid_for_variant(DeviationKind::Mdev, longest.size(), rc.points_per_decade);
  if (grid.empty()) throw DataError("noise channel too short for stability analysis");
  const StabilityCurve curve_o = oadev(longest, grid);
  const StabilityCurve curve_m = mdev(longest, grid);
  {
    std::ofstream out(outdir / "allan_n12_half.txt");
    if (!out) throw DataError("cannot write allan table");
    out << "#columns=tau_s oadev oadev_ci mdev mdev_ci shot_noise_ref\n";
    for (std::size_t i = 0; i < grid.size(); ++i) {
      char buf[192];
      std::snprintf(buf, sizeof(buf), "%.12g %.12g %.12g %.12g %.12g %.12g", curve_o.taus[i],
                    curve_o.deviations[i], curve_o.ci[i], curve_m.deviations[i], curve_m.ci[i],
                    rc.shot_noise_asd / std::sqrt(2.0 * curve_o.taus[i]));
      out << buf << "\n";
    }
    outputs.push_back("allan_n12_half.txt");
  }

  // Headline numbers; the reference rate used is always printed next to
  // any ratio.
  {
    std::ofstream out(outdir / "summary.txt");
    if (!out) throw DataError("cannot write summary");
    out << "config_hash=" << hex64(cfg.hash()) << "\n";
    out << "scale_factor=" << k_scale << "\n";
    out << "reference_rate_rad_s=" << rc.reference.omega_ref() << "\n";
    const double mean_rot = mean(diff.rotation_d.samples());
    out << "mean_rotation_d_rad_s=" << mean_rot << "\n";
    out << "mean_rotation_d_over_reference=" << ratio_to_reference(mean_rot, rc.reference)
        << "\n";
    out << "shot_noise_asd=" << rc.shot_noise_asd << "\n";
    out << "fig3_injected_rotation_asd=" << rc.fig3_rotation_asd << "\n";
    for (const Fig3Outcome& s : summaries) {
      out << "fig3." << s.name << ".level_factor=" << s.level_factor << "\n";
      out << "fig3." << s.name << ".high_slope=" << s.high_slope << "\n";
      out << "fig3." << s.name << ".discontinuity_ratio=" << s.disc_ratio << "\n";
    }
    const auto min_at = [](const StabilityCurve& c) {
      const auto it = std::min_element(c.deviations.begin(), c.deviations.end());
      return std::pair<double, double>(c.taus[std::distance(c.deviations.begin(), it)], *it);
    };
    const auto [tau_o, min_o] = min_at(curve_o);
    const auto [tau_m, min_m] = min_at(curve_m);
    out << "allan.min_oadev=" << min_o << "\n";
    out << "allan.min_oadev_tau_s=" << tau_o << "\n";
    out << "allan.min_mdev=" << min_m << "\n";
    out << "allan.min_mdev_tau_s=" << tau_m << "\n";
    outputs.push_back("summary.txt");
  }

  write_manifest(cfg, rc, "report", outdir, outputs);
}

}  // namespace ringlab
