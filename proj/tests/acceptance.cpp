// Campaign-level acceptance suite. Each criterion runs end-to-end on the
// library, prints one [PASS]/[FAIL] line with the measured values against
// the required window, and the binary exits with the number of failures.
//
//   ringlab_acceptance            run every criterion
//   ringlab_acceptance 3 5       run criteria 3 and 5
//   ringlab_acceptance 9 <dir>   criterion 9 reads <dir>/fig3_campaign.cfg

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "campaign.hpp"
#include "config.hpp"
#include "demod.hpp"
#include "diffmeas.hpp"
#include "geometry.hpp"
#include "interferogram.hpp"
#include "noise.hpp"
#include "numeric.hpp"
#include "series_io.hpp"
#include "spectral.hpp"
#include "stability.hpp"

using namespace ringlab;
namespace fs = std::filesystem;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kFs = 5000.0;
constexpr double kCarrierHz = 280.0;

const GyroGeometry kGeometry{2.56, 6.4, 632.8e-9, 0.0};

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) pass = false;
    detail += (detail.empty() ? "" : "; ") + what + (ok ? " [ok]" : " [VIOLATED]");
  }
  void note(const std::string& what) { detail += (detail.empty() ? "" : "; ") + what; }
};

std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.4g", v);
  return buf;
}

/// Dense sample-scale phase-slope demodulation used for spectral shape work.
DemodConfig dense_demod(double guard_s) {
  DemodConfig cfg;
  cfg.integration_time = 2.0 / kFs;
  cfg.output_rate = kFs;
  cfg.edge_guard = guard_s;
  return cfg;
}

struct InjectionRun {
  Spectrum reconstructed;      // raw Welch grid, beat units
  Spectrum reconstructed_log;  // log-rebinned
  double injected_level;       // beat-units equivalent ASD
};

InjectionRun run_injection(NoiseKind kind, double rotation_asd, double duration_s,
                           std::size_t nperseg, std::uint64_t seed) {
  const double beat_asd = sagnac_scale_factor(kGeometry) * rotation_asd;
  NoiseSpec spec;
  spec.kind = kind;
  spec.seed = seed;
  switch (kind) {
    case NoiseKind::WhiteFrequency:
      spec.level = asd_level_to_sigma(beat_asd, kFs);
      break;
    case NoiseKind::WhitePhase:
      spec.level = asd_level_to_sigma(beat_asd, kFs) * 0.02;  // phi = omega * tbar
      break;
    case NoiseKind::WienerPhase:
      spec.level = beat_asd / std::sqrt(2.0 * kFs);
      break;
    case NoiseKind::WhiteAdditive:
      spec.level = beat_asd;
      break;
  }
  const CarrierSpec carrier{2.0 * kPi * kCarrierHz, 1.0, 0.0};
  const auto n = static_cast<std::size_t>(duration_s * kFs);
  const std::vector<NoiseSpec> cavity{spec};
  const InterferogramPair pair =
      synthesize_pair(carrier, cavity, {NoiseKind::WhiteAdditive, 0.0, seed ^ 0xabcd}, n, kFs);
  const TimeSeries rec = reconstruct_frequency(pair.s1, dense_demod(2.0));
  InjectionRun out{asd(rec, nperseg, 0.5, WindowKind::Hann), Spectrum{}, beat_asd};
  out.reconstructed_log = log_rebin(out.reconstructed, 40);
  return out;
}

// ---------------------------------------------------------------------------

Outcome criterion_1() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const InjectionRun run =
      run_injection(NoiseKind::WhiteFrequency, 20e-12, 2000.0, 1 << 19, 1001);
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  const double floor_factor =
      band_median_asd(run.reconstructed, 0.03, 0.8) / run.injected_level;
  const double flatness = loglog_slope(run.reconstructed_log, 0.03, 0.8).slope;
  const double high_slope = loglog_slope(run.reconstructed_log, 25.0, 250.0).slope;

  o.note("flat shape below 1 Hz: slope=" + fmt(flatness));
  o.require(floor_factor >= 20.0 * 0.67 && floor_factor <= 20.0 * 1.5,
            "low-band level factor=" + fmt(floor_factor) + " required [13.4,30]");
  o.require(std::abs(high_slope - 1.0) <= 0.15,
            "slope above 20 Hz=" + fmt(high_slope) + " required 1+-0.15");
  o.require(elapsed < 120.0, "runtime " + fmt(elapsed) + " s < 120 s");
  return o;
}

Outcome criterion_2() {
  Outcome o;
  const InjectionRun run =
      run_injection(NoiseKind::WhitePhase, 20e-12, 800.0, 1 << 18, 1002);
  const double slope = loglog_slope(run.reconstructed_log, 0.1, 500.0).slope;
  o.require(std::abs(slope - 1.0) <= 0.05,
            "slope over [0.1,500] Hz=" + fmt(slope) + " required 1+-0.05");
  return o;
}

Outcome criterion_3() {
  Outcome o;
  const InjectionRun run =
      run_injection(NoiseKind::WienerPhase, 20e-12, 800.0, 1 << 18, 1003);
  const double slope = loglog_slope(run.reconstructed_log, 0.1, 100.0).slope;
  const double level_factor =
      band_median_asd(run.reconstructed, 0.05, 0.8) / run.injected_level;
  o.require(std::abs(slope) <= 0.1, "slope=" + fmt(slope) + " required 0+-0.1");
  o.require(level_factor >= 2.0 * 0.67 && level_factor <= 2.0 * 1.5,
            "level factor=" + fmt(level_factor) + " required [1.34,3.0]");

  // Cross-check of the quoted 12.2 mrad per-step value under the sigma<->ASD
  // convention at 5 kHz; a mismatch is logged, not failed.
  const double asd_of_12mrad = 12.2e-3 * std::sqrt(2.0 * kFs);
  const double configured = run.injected_level;
  if (std::abs(asd_of_12mrad - configured) / configured > 0.05)
    o.note("logged: 12.2 mrad/step maps to " + fmt(asd_of_12mrad) +
           " rad/s*Hz^-1/2, configured equivalent is " + fmt(configured));
  return o;
}

Outcome criterion_4() {
  Outcome o;
  const double fc = kCarrierHz;
  double wf_ratio = 0.0;
  for (const NoiseKind kind :
       {NoiseKind::WhiteFrequency, NoiseKind::WhitePhase, NoiseKind::WienerPhase}) {
    const InjectionRun run = run_injection(kind, 20e-12, 400.0, 1 << 17, 1004);
    const double ratio = band_median_asd(run.reconstructed, 0.70 * fc, 0.96 * fc) /
                         band_median_asd(run.reconstructed, 1.04 * fc, 1.30 * fc);
    o.note(std::string(noise_kind_name(kind)) + " ratio=" + fmt(ratio));
    if (kind == NoiseKind::WhiteFrequency) wf_ratio = ratio;
  }
  o.require(wf_ratio >= 1.5, "white-frequency band-median ratio across carrier >= 1.5");
  return o;
}

Outcome criterion_5() {
  Outcome o;
  const double duration = 800.0;
  const auto n = static_cast<std::size_t>(duration * kFs);
  const CarrierSpec carrier{2.0 * kPi * kCarrierHz, 1.0, 0.0};

  // Common 0.05 Hz rotation line plus independent per-port white noise.
  const double f_line = 0.05;
  const double beat_amp = 0.03;  // rad/s
  std::vector<double> line(n);
  for (std::size_t k = 0; k < n; ++k)
    line[k] = beat_amp * std::sin(2.0 * kPi * f_line * static_cast<double>(k) / kFs);
  const TimeSeries omega_line(std::move(line), kFs, Unit::RadianPerSecond);
  const TimeSeries phi = zero_series(n, kFs, Unit::Radian);
  const TimeSeries v1 = gen_white(n, 1e-3, 7331, kFs, Unit::Volt);
  const TimeSeries v2 = gen_white(n, 1e-3, 7331 ^ 1, kFs, Unit::Volt);
  const TimeSeries s1 = synthesize_port(carrier, omega_line, phi, v1, 1);
  const TimeSeries s2 = synthesize_port(carrier, omega_line, phi, v2, 2);

  const DemodConfig cfg = dense_demod(2.0);
  const TimeSeries w1 = reconstruct_frequency(s1, cfg);
  const TimeSeries w2 = reconstruct_frequency(s2, cfg);
  const TimeSeries half = noise_channel(w1, w2);
  const TimeSeries wd = difference_channel(s1, s2, cfg);

  const std::size_t nperseg = 1 << 19;
  const Spectrum spec1 = asd(w1, nperseg, 0.5, WindowKind::Hann);
  const Spectrum spech = asd(half, nperseg, 0.5, WindowKind::Hann);
  const Spectrum specd = asd(wd, nperseg, 0.5, WindowKind::Hann);

  const double rejection = rejection_ratio(spec1, spech, f_line, 0.05);
  o.require(rejection >= 60.0, "common-line rejection=" + fmt(rejection) + " dB >= 60 dB");

  const double snr_gain =
      band_median_asd(spec1, 100.0, 500.0) / band_median_asd(specd, 100.0, 500.0);
  o.require(std::abs(snr_gain - std::sqrt(2.0)) <= 0.1 * std::sqrt(2.0),
            "omega_d SNR gain=" + fmt(snr_gain) + " required sqrt(2)+-10%");
  return o;
}

// Loop-literal definitional implementations, independent of the library path.
double oadev_literal(const std::vector<double>& y, std::size_t m) {
  const std::size_t n = y.size();
  double sum = 0.0;
  for (std::size_t i = 0; i + 2 * m <= n; ++i) {
    double a = 0.0, b = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      a += y[i + j];
      b += y[i + m + j];
    }
    const double d = (b - a) / static_cast<double>(m);
    sum += d * d;
  }
  return std::sqrt(sum / (2.0 * static_cast<double>(n - 2 * m + 1)));
}

double mdev_literal(const std::vector<double>& y, double tau0, std::size_t m) {
  const std::size_t n = y.size();
  std::vector<double> x(n + 1, 0.0);
  for (std::size_t k = 0; k < n; ++k) x[k + 1] = x[k] + y[k] * tau0;
  const double tau = static_cast<double>(m) * tau0;
  double sum = 0.0;
  std::size_t terms = 0;
  for (std::size_t j = 0; j + 3 * m <= n + 1; ++j) {
    double inner = 0.0;
    for (std::size_t i = j; i < j + m; ++i) inner += x[i + 2 * m] - 2.0 * x[i + m] + x[i];
    sum += inner * inner;
    ++terms;
  }
  const double md = static_cast<double>(m);
  return std::sqrt(sum / (2.0 * md * md * tau * tau * static_cast<double>(terms)));
}

Outcome criterion_6() {
  Outcome o;
  const TimeSeries hand({1.0, 2.0, 3.0, 4.0}, 1.0, Unit::RadianPerSecond);
  const double hand_dev = oadev(hand, std::vector<std::size_t>{1}).deviations[0];
  o.require(std::abs(hand_dev - std::sqrt(0.5)) < 1e-14,
            "[1,2,3,4] oadev=" + fmt(hand_dev) + " = sqrt(0.5) to 1e-14");

  const std::vector<std::size_t> grid{1, 3, 10, 32, 100, 316, 1000};
  std::mt19937_64 rng(606);
  std::normal_distribution<double> dist(0.0, 1.0);
  double worst = 0.0;
  for (int series_idx = 0; series_idx < 100; ++series_idx) {
    std::vector<double> y(10000);
    for (double& v : y) v = dist(rng);
    const TimeSeries rate(y, 10.0, Unit::RadianPerSecond);
    const StabilityCurve lib_o = oadev(rate, grid);
    const StabilityCurve lib_m = mdev(rate, grid);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double ref_o = oadev_literal(y, grid[i]);
      const double ref_m = mdev_literal(y, 0.1, grid[i]);
      worst = std::max(worst, std::abs(lib_o.deviations[i] - ref_o) / ref_o);
      worst = std::max(worst, std::abs(lib_m.deviations[i] - ref_m) / ref_m);
    }
  }
  o.require(worst < 1e-12,
            "max relative deviation from loop-literal oracles=" + fmt(worst) + " < 1e-12");
  return o;
}

Outcome criterion_7() {
  Outcome o;
  const double fs = 100.0;
  const std::size_t n = 1000000;

  // White frequency noise: level and slope of OADEV.
  const double sigma = 0.5;
  const TimeSeries wfm = gen_white(n, sigma, 701, fs, Unit::RadianPerSecond);
  const double h = sigma_to_asd_level(sigma, fs);
  const std::vector<std::size_t> grid{1, 4, 16, 64, 256};
  const StabilityCurve c = oadev(wfm, grid);
  double worst = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double expected = h / std::sqrt(2.0 * c.taus[i]);
    worst = std::max(worst, std::abs(c.deviations[i] / expected - 1.0));
  }
  o.require(worst <= 0.05, "OADEV level vs h/sqrt(2 tau): worst=" + fmt(worst) + " <= 5%");

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double x = std::log10(c.taus[i]);
    const double v = std::log10(c.deviations[i]);
    sx += x;
    sy += v;
    sxx += x * x;
    sxy += x * v;
  }
  const double np = static_cast<double>(grid.size());
  const double slope = (np * sxy - sx * sy) / (np * sxx - sx * sx);
  o.require(std::abs(slope + 0.5) <= 0.05, "OADEV slope=" + fmt(slope) + " required -0.5+-0.05");

  // White phase noise dominated rate series: MDEV slope -1.5.
  const TimeSeries phase = gen_white(n + 1, 1e-3, 702, fs, Unit::Radian);
  std::vector<double> diff(n);
  for (std::size_t k = 0; k < n; ++k) diff[k] = (phase[k + 1] - phase[k]) * fs;
  const StabilityCurve md = mdev(TimeSeries(std::move(diff), fs, Unit::RadianPerSecond), grid);
  sx = sy = sxx = sxy = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double x = std::log10(md.taus[i]);
    const double v = std::log10(md.deviations[i]);
    sx += x;
    sy += v;
    sxx += x * x;
    sxy += x * v;
  }
  const double mslope = (np * sxy - sx * sy) / (np * sxx - sx * sx);
  o.require(std::abs(mslope + 1.5) <= 0.1, "MDEV slope=" + fmt(mslope) + " required -1.5+-0.1");

  // frad/s-regime numeric integrity.
  std::mt19937_64 rng(703);
  std::normal_distribution<double> dist(0.0, 1.0);
  std::vector<double> y(10000);
  for (double& v : y) v = dist(rng);
  std::vector<double> tiny = y;
  for (double& v : tiny) v *= 1e-12;
  const std::vector<std::size_t> pgrid{1, 10, 100, 1000};
  const StabilityCurve big = oadev(TimeSeries(y, 1.0, Unit::RadianPerSecond), pgrid);
  const StabilityCurve small = oadev(TimeSeries(tiny, 1.0, Unit::RadianPerSecond), pgrid);
  double pworst = 0.0;
  for (std::size_t i = 0; i < pgrid.size(); ++i)
    pworst = std::max(pworst,
                      std::abs(small.deviations[i] * 1e12 - big.deviations[i]) /
                          big.deviations[i]);
  o.require(pworst < 1e-10,
            "1e-12-scaled vs unity-scaled agreement=" + fmt(pworst) + " < 1e-10");
  return o;
}

Outcome criterion_8() {
  Outcome o;
  const double fs = 1000.0;
  const TimeSeries s = gen_white(1 << 20, 1.0, 801, fs);
  const Spectrum spec = asd(s, 8192, 0.5, WindowKind::Hann);
  o.note("segments=" + std::to_string(spec.segment_count));
  o.require(spec.segment_count >= 100, "at least 100 segments");

  const double expected = std::sqrt(2.0 / fs);
  const double med = band_median_asd(spec, spec.frequencies.front(), fs / 2.0);
  o.require(std::abs(med / expected - 1.0) <= 0.03,
            "median ASD=" + fmt(med) + " vs sqrt(2/fs)=" + fmt(expected) + " within 3%");

  KahanSum integral;
  for (double a : spec.asd) integral.add(a * a * spec.resolution);
  const double ratio = integral.value() / variance(s.samples());
  o.require(std::abs(ratio - 1.0) <= 0.01,
            "Parseval integral/variance=" + fmt(ratio) + " within 1%");
  return o;
}

Outcome criterion_9(const fs::path& configs_dir) {
  Outcome o;
  Config cfg;
  const fs::path shipped = configs_dir / "fig3_campaign.cfg";
  if (fs::exists(shipped)) {
    cfg = Config::load(shipped);
    o.note("config=" + shipped.string());
  } else {
    o.note("shipped config not found, using built-in equivalent");
    cfg = Config::parse(
        "[campaign]\nduration_s = 240\nsample_rate_hz = 5000\nseed = 20260810\n"
        "[carrier]\nfrequency_hz = 280\n"
        "[noise.1]\nkind = white_frequency\nrotation_asd_level = 20e-12\n"
        "[noise.2]\nkind = white_additive\nlevel = 1e-4\n"
        "[demod]\nintegration_time_s = 0.0004\nmode = sliding\nedge_guard_s = 1\n"
        "[spectral]\nsegment_length = 131072\n");
  }

  const fs::path base = fs::temp_directory_path() / "ringlab_acceptance9";
  fs::remove_all(base);
  const fs::path out1 = base / "run1";
  const fs::path out2 = base / "run2";
  cmd_report(cfg, out1);
  cmd_report(cfg, out2);

  const auto read_bytes = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string((std::istreambuf_iterator<char>(in)),
                       std::istreambuf_iterator<char>());
  };
  std::size_t compared = 0;
  bool all_equal = true;
  for (const auto& entry : fs::directory_iterator(out1)) {
    const std::string name = entry.path().filename().string();
    if (name == "manifest.txt") continue;
    ++compared;
    if (read_bytes(entry.path()) != read_bytes(out2 / name)) {
      all_equal = false;
      o.note("differs: " + name);
    }
  }
  o.require(compared >= 7 && all_equal,
            "byte-identical data outputs across reruns (" + std::to_string(compared) +
                " files)");

  // Manifests may differ in the timestamp line only.
  const auto strip_timestamp = [](const std::string& text) {
    std::istringstream in(text);
    std::string line, out;
    while (std::getline(in, line))
      if (line.rfind("created_utc=", 0) != 0) out += line + "\n";
    return out;
  };
  o.require(strip_timestamp(read_bytes(out1 / "manifest.txt")) ==
                strip_timestamp(read_bytes(out2 / "manifest.txt")),
            "manifests identical apart from the timestamp");
  fs::remove_all(base);
  return o;
}

struct Entry {
  int id;
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  fs::path configs_dir = "configs";
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (!arg.empty() && arg.find_first_not_of("0123456789") == std::string::npos)
      selected.insert(std::stoi(arg));
    else
      configs_dir = arg;
  }

  const std::vector<Entry> entries{
      {1, "white-frequency reconstruction signature", criterion_1},
      {2, "white-phase reconstruction slope", criterion_2},
      {3, "wiener reconstruction signature", criterion_3},
      {4, "discontinuity at the carrier frequency", criterion_4},
      {5, "differential common-mode rejection and sqrt(2) gain", criterion_5},
      {6, "allan oracle equivalence", criterion_6},
      {7, "allan scaling laws and frad/s precision", criterion_7},
      {8, "spectral estimator calibration", criterion_8},
      {9, "end-to-end campaign determinism", [&] { return criterion_9(configs_dir); }},
  };

  int failures = 0;
  for (const Entry& entry : entries) {
    if (!selected.empty() && !selected.contains(entry.id)) continue;
    Outcome outcome;
    try {
      outcome = entry.run();
    } catch (const std::exception& e) {
      outcome.pass = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    std::printf("[%s] criterion %d: %s (%s)\n", outcome.pass ? "PASS" : "FAIL", entry.id,
                entry.name, outcome.detail.c_str());
    std::fflush(stdout);
    if (!outcome.pass) ++failures;
  }
  return failures;
}
