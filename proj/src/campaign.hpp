#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "config.hpp"
#include "demod.hpp"
#include "diffmeas.hpp"
#include "geometry.hpp"
#include "interferogram.hpp"
#include "series_io.hpp"
#include "spectral.hpp"
#include "stability.hpp"

namespace ringlab {

inline constexpr const char* kToolVersion = "0.1.0";

/// Fully validated campaign settings resolved from a Config. Noise blocks
/// without an explicit seed get one derived deterministically from the
/// campaign seed, so a --seed override reshuffles every stream reproducibly.
struct CampaignConfig {
  double duration = 0.0;       // seconds
  double sample_rate = 5000.0;  // Hz
  double start_time = 0.0;
  std::uint64_t seed = 0;
  std::size_t max_samples = 1000000000;

  CarrierSpec carrier{2.0 * 3.14159265358979323846 * 280.0, 1.0, 0.0};
  GyroGeometry geometry{2.56, 6.4, 632.8e-9, 0.0};
  ReferenceRate reference{};

  std::vector<NoiseSpec> in_cavity;
  NoiseSpec per_port{NoiseKind::WhiteAdditive, 0.0, 0};

  DemodConfig demod;

  std::size_t segment_length = 65536;
  double overlap = 0.5;
  WindowKind window = WindowKind::Hann;
  SpectralMask spectral_mask;
  int rebin_ppd = 40;

  int points_per_decade = 4;
  std::vector<DeviationKind> variants{DeviationKind::Oadev, DeviationKind::Mdev};

  TimeMask time_mask;
  SeriesFormat format = SeriesFormat::F64le;

  double shot_noise_asd = 18e-12;     // rad/s * Hz^-1/2, report reference line
  double fig3_rotation_asd = 20e-12;  // rad/s * Hz^-1/2, report injection level
  double fig3_tbar = 0.02;            // seconds, phase-noise scaling phi = omega*tbar

  ClassifyBands classify;

  static CampaignConfig resolve(const Config& cfg);

  std::size_t sample_count() const;
  InterferogramPair synthesize() const;
};

void cmd_synth(const Config& cfg, const std::filesystem::path& outdir);
void cmd_demod(const Config& cfg, const std::filesystem::path& outdir);
void cmd_spectrum(const Config& cfg, const std::filesystem::path& outdir);
void cmd_stability(const Config& cfg, const std::filesystem::path& outdir);
void cmd_diff(const Config& cfg, const std::filesystem::path& outdir);
std::string cmd_classify(const Config& cfg, const std::filesystem::path& outdir);
void cmd_report(const Config& cfg, const std::filesystem::path& outdir);

}  // namespace ringlab
