#include "ringlab.h"

#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <vector>

#include "campaign.hpp"
#include "config.hpp"
#include "demod.hpp"
#include "diffmeas.hpp"
#include "errors.hpp"
#include "geometry.hpp"
#include "interferogram.hpp"
#include "noise.hpp"
#include "series_io.hpp"
#include "spectral.hpp"
#include "stability.hpp"
#include "time_series.hpp"

struct rl_series {
  ringlab::TimeSeries value;
};
struct rl_pair {
  ringlab::InterferogramPair value;
};
struct rl_spectrum {
  ringlab::Spectrum value;
};
struct rl_stability {
  ringlab::StabilityCurve value;
};
struct rl_diffresult {
  ringlab::DifferentialResult value;
};
struct rl_config {
  ringlab::Config value;
};

namespace {

thread_local std::string g_last_error;

void set_error(const char* message) { g_last_error = message ? message : ""; }

template <typename Fn>
rl_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return RL_OK;
  } catch (const ringlab::ConfigError& e) {
    set_error(e.what());
    return RL_ERROR_CONFIG;
  } catch (const ringlab::DataError& e) {
    set_error(e.what());
    return RL_ERROR_DATA;
  } catch (const ringlab::NumericError& e) {
    set_error(e.what());
    return RL_ERROR_NUMERIC;
  } catch (const std::invalid_argument& e) {
    set_error(e.what());
    return RL_ERROR_INVALID;
  } catch (const std::bad_alloc&) {
    set_error("out of memory");
    return RL_ERROR_INTERNAL;
  } catch (const std::exception& e) {
    set_error(e.what());
    return RL_ERROR_INTERNAL;
  }
}

rl_status require(bool condition, const char* message) {
  if (condition) return RL_OK;
  set_error(message);
  return RL_ERROR_INVALID;
}

ringlab::Unit to_unit(rl_unit u) {
  switch (u) {
    case RL_UNIT_VOLT: return ringlab::Unit::Volt;
    case RL_UNIT_RADIAN: return ringlab::Unit::Radian;
    case RL_UNIT_RADIAN_PER_SECOND: return ringlab::Unit::RadianPerSecond;
    case RL_UNIT_HERTZ: return ringlab::Unit::Hertz;
    case RL_UNIT_DIMENSIONLESS: return ringlab::Unit::Dimensionless;
  }
  throw std::invalid_argument("unknown unit");
}

rl_unit from_unit(ringlab::Unit u) {
  switch (u) {
    case ringlab::Unit::Volt: return RL_UNIT_VOLT;
    case ringlab::Unit::Radian: return RL_UNIT_RADIAN;
    case ringlab::Unit::RadianPerSecond: return RL_UNIT_RADIAN_PER_SECOND;
    case ringlab::Unit::Hertz: return RL_UNIT_HERTZ;
    case ringlab::Unit::Dimensionless: return RL_UNIT_DIMENSIONLESS;
  }
  return RL_UNIT_DIMENSIONLESS;
}

ringlab::SeriesFormat to_format(rl_format f) {
  return f == RL_FORMAT_CSV ? ringlab::SeriesFormat::Csv : ringlab::SeriesFormat::F64le;
}

ringlab::WindowKind to_window(rl_window w) {
  switch (w) {
    case RL_WINDOW_HANN: return ringlab::WindowKind::Hann;
    case RL_WINDOW_RECTANGULAR: return ringlab::WindowKind::Rectangular;
    case RL_WINDOW_HAMMING: return ringlab::WindowKind::Hamming;
  }
  throw std::invalid_argument("unknown window");
}

ringlab::NoiseKind to_noise_kind(rl_noise_kind k) {
  switch (k) {
    case RL_NOISE_WHITE_FREQUENCY: return ringlab::NoiseKind::WhiteFrequency;
    case RL_NOISE_WHITE_PHASE: return ringlab::NoiseKind::WhitePhase;
    case RL_NOISE_WIENER_PHASE: return ringlab::NoiseKind::WienerPhase;
    case RL_NOISE_WHITE_ADDITIVE: return ringlab::NoiseKind::WhiteAdditive;
  }
  throw std::invalid_argument("unknown noise kind");
}

ringlab::GyroGeometry to_geometry(const rl_geometry* g) {
  return ringlab::GyroGeometry(g->area_m2, g->perimeter_m, g->wavelength_m, g->theta_rad);
}

ringlab::DemodConfig to_demod(const rl_demod_config* cfg) {
  ringlab::DemodConfig out;
  out.integration_time = cfg->integration_time_s;
  out.detrend = cfg->detrend != 0;
  out.output_rate = cfg->output_rate_hz;
  out.edge_guard = cfg->edge_guard_s;
  return out;
}

rl_status copy_string(const std::string& text, char* buffer, size_t size) {
  if (buffer == nullptr || size == 0) {
    set_error("output buffer is null or empty");
    return RL_ERROR_INVALID;
  }
  if (text.size() + 1 > size) {
    set_error("output buffer too small");
    return RL_ERROR_INVALID;
  }
  std::memcpy(buffer, text.c_str(), text.size() + 1);
  return RL_OK;
}

template <typename Fn>
rl_status stability_call(const rl_series* y, const size_t* m_list, size_t n_m,
                         rl_stability** out, Fn&& fn) {
  if (rl_status st =
          require(y != nullptr && m_list != nullptr && n_m > 0 && out != nullptr, "null argument");
      st != RL_OK)
    return st;
  return guarded([&] {
    std::span<const size_t> ms(m_list, n_m);
    *out = new rl_stability{fn(y->value, ms)};
  });
}

}  // namespace

extern "C" {

const char* rl_version(void) { return ringlab::kToolVersion; }

const char* rl_last_error_message(void) { return g_last_error.c_str(); }

/* ---- series ---- */

rl_status rl_series_create(const double* data, size_t n, double sample_rate_hz, rl_unit unit,
                           double start_time_s, rl_series** out) {
  if (rl_status s = require(data != nullptr && out != nullptr, "null argument"); s != RL_OK)
    return s;
  return guarded([&] {
    std::vector<double> samples(data, data + n);
    *out = new rl_series{
        ringlab::TimeSeries(std::move(samples), sample_rate_hz, to_unit(unit), start_time_s)};
  });
}

void rl_series_free(rl_series* s) { delete s; }

size_t rl_series_length(const rl_series* s) { return s ? s->value.size() : 0; }

double rl_series_sample_rate(const rl_series* s) { return s ? s->value.sample_rate() : 0.0; }

double rl_series_start_time(const rl_series* s) { return s ? s->value.start_time() : 0.0; }

rl_unit rl_series_unit(const rl_series* s) {
  return s ? from_unit(s->value.unit()) : RL_UNIT_DIMENSIONLESS;
}

const double* rl_series_data(const rl_series* s) {
  return s ? s->value.samples().data() : nullptr;
}

rl_status rl_series_load(const char* path, rl_format format, rl_series** out) {
  if (rl_status s = require(path != nullptr && out != nullptr, "null argument"); s != RL_OK)
    return s;
  return guarded([&] { *out = new rl_series{ringlab::load_series(path, to_format(format))}; });
}

rl_status rl_series_save(const rl_series* s, const char* path, rl_format format) {
  if (rl_status st = require(s != nullptr && path != nullptr, "null argument"); st != RL_OK)
    return st;
  return guarded([&] { ringlab::save_series(s->value, path, to_format(format)); });
}

/* ---- Sagnac conversions ---- */

rl_status rl_sagnac_scale_factor(const rl_geometry* g, double* out) {
  if (rl_status s = require(g != nullptr && out != nullptr, "null argument"); s != RL_OK)
    return s;
  return guarded([&] { *out = ringlab::sagnac_scale_factor(to_geometry(g)); });
}

rl_status rl_rotation_to_beat(double omega_rot, const rl_geometry* g, double* out) {
  if (rl_status s = require(g != nullptr && out != nullptr, "null argument"); s != RL_OK)
    return s;
  return guarded([&] { *out = ringlab::rotation_to_beat(omega_rot, to_geometry(g)); });
}

rl_status rl_beat_to_rotation(double omega_beat, const rl_geometry* g, double* out) {
  if (rl_status s = require(g != nullptr && out != nullptr, "null argument"); s != RL_OK)
    return s;
  return guarded([&] { *out = ringlab::beat_to_rotation(omega_beat, to_geometry(g)); });
}

rl_status rl_ratio_to_reference(double omega_rot, double omega_ref, double* out) {
  if (rl_status s = require(out != nullptr, "null argument"); s != RL_OK) return s;
  return guarded(
      [&] { *out = ringlab::ratio_to_reference(omega_rot, ringlab::ReferenceRate(omega_ref)); });
}

/* ---- synthesis ---- */

rl_status rl_gen_white(size_t n, double level, uint64_t seed, double sample_rate_hz,
                       rl_unit unit, rl_series** out) {
  if (rl_status s = require(out != nullptr, "null argument"); s != RL_OK) return s;
  return guarded([&] {
    *out = new rl_series{ringlab::gen_white(n, level, seed, sample_rate_hz, to_unit(unit))};
  });
}

rl_status rl_gen_wiener(size_t n, double step_sigma, uint64_t seed, double sample_rate_hz,
                        rl_series** out) {
  if (rl_status s = require(out != nullptr, "null argument"); s != RL_OK) return s;
  return guarded(
      [&] { *out = new rl_series{ringlab::gen_wiener(n, step_sigma, seed, sample_rate_hz)}; });
}

rl_status rl_asd_level_to_sigma(double asd_level, double sample_rate_hz, double* out) {
  if (rl_status s = require(out != nullptr, "null argument"); s != RL_OK) return s;
  return guarded([&] { *out = ringlab::asd_level_to_sigma(asd_level, sample_rate_hz); });
}

rl_status rl_synthesize_pair(const rl_carrier* carrier, const rl_noise_spec* in_cavity,
                             size_t n_in_cavity, const rl_noise_spec* per_port,
                             size_t n_samples, double sample_rate_hz, rl_pair** out) {
  if (rl_status s = require(carrier != nullptr && per_port != nullptr && out != nullptr &&
                                (in_cavity != nullptr || n_in_cavity == 0),
                            "null argument");
      s != RL_OK)
    return s;
  return guarded([&] {
    ringlab::CarrierSpec spec{carrier->omega_s_rad_s, carrier->gain,
                              carrier->initial_phase_rad};
    std::vector<ringlab::NoiseSpec> cavity;
    cavity.reserve(n_in_cavity);
    for (size_t i = 0; i < n_in_cavity; ++i)
      cavity.push_back(
          {to_noise_kind(in_cavity[i].kind), in_cavity[i].level, in_cavity[i].seed});
    ringlab::NoiseSpec port{to_noise_kind(per_port->kind), per_port->level, per_port->seed};
    *out = new rl_pair{
        ringlab::synthesize_pair(spec, cavity, port, n_samples, sample_rate_hz)};
  });
}

void rl_pair_free(rl_pair* p) { delete p; }

const rl_series* rl_pair_s1(const rl_pair* p) {
  return p ? reinterpret_cast<const rl_series*>(&p->value.s1) : nullptr;
}

const rl_series* rl_pair_s2(const rl_pair* p) {
  return p ? reinterpret_cast<const rl_series*>(&p->value.s2) : nullptr;
}

const rl_series* rl_pair_truth_omega_n(const rl_pair* p) {
  return p ? reinterpret_cast<const rl_series*>(&p->value.truth.omega_n) : nullptr;
}

const rl_series* rl_pair_truth_phi_n(const rl_pair* p) {
  return p ? reinterpret_cast<const rl_series*>(&p->value.truth.phi_n) : nullptr;
}

/* ---- demodulation ---- */

rl_status rl_analytic_phase(const rl_series* s, int detrend, rl_series** out) {
  if (rl_status st = require(s != nullptr && out != nullptr, "null argument"); st != RL_OK)
    return st;
  return guarded(
      [&] { *out = new rl_series{ringlab::analytic_phase(s->value, detrend != 0)}; });
}

rl_status rl_reconstruct_frequency(const rl_series* s, const rl_demod_config* cfg,
                                   rl_series** out) {
  if (rl_status st = require(s != nullptr && cfg != nullptr && out != nullptr, "null argument");
      st != RL_OK)
    return st;
  return guarded(
      [&] { *out = new rl_series{ringlab::reconstruct_frequency(s->value, to_demod(cfg))}; });
}

/* ---- spectral analysis ---- */

rl_status rl_asd(const rl_series* s, size_t segment_length, double overlap_fraction,
                 rl_window window, rl_spectrum** out) {
  if (rl_status st = require(s != nullptr && out != nullptr, "null argument"); st != RL_OK)
    return st;
  return guarded([&] {
    *out = new rl_spectrum{
        ringlab::asd(s->value, segment_length, overlap_fraction, to_window(window))};
  });
}

void rl_spectrum_free(rl_spectrum* s) { delete s; }

size_t rl_spectrum_length(const rl_spectrum* s) { return s ? s->value.frequencies.size() : 0; }

const double* rl_spectrum_frequencies(const rl_spectrum* s) {
  return s ? s->value.frequencies.data() : nullptr;
}

const double* rl_spectrum_asd(const rl_spectrum* s) { return s ? s->value.asd.data() : nullptr; }

rl_status rl_spectrum_save(const rl_spectrum* s, const char* path) {
  if (rl_status st = require(s != nullptr && path != nullptr, "null argument"); st != RL_OK)
    return st;
  return guarded([&] { ringlab::save_spectrum(s->value, path); });
}

rl_status rl_spectrum_load(const char* path, rl_spectrum** out) {
  if (rl_status st = require(path != nullptr && out != nullptr, "null argument"); st != RL_OK)
    return st;
  return guarded([&] { *out = new rl_spectrum{ringlab::load_spectrum(path)}; });
}

rl_status rl_spectrum_mask(const rl_spectrum* s, const double* band_lo, const double* band_hi,
                           size_t n_bands, rl_spectrum** out) {
  if (rl_status st = require(s != nullptr && out != nullptr &&
                                 ((band_lo != nullptr && band_hi != nullptr) || n_bands == 0),
                             "null argument");
      st != RL_OK)
    return st;
  return guarded([&] {
    std::vector<std::pair<double, double>> bands;
    bands.reserve(n_bands);
    for (size_t i = 0; i < n_bands; ++i) bands.emplace_back(band_lo[i], band_hi[i]);
    *out = new rl_spectrum{ringlab::apply_mask(s->value, ringlab::SpectralMask(bands))};
  });
}

rl_status rl_log_rebin(const rl_spectrum* s, int points_per_decade, rl_spectrum** out) {
  if (rl_status st = require(s != nullptr && out != nullptr, "null argument"); st != RL_OK)
    return st;
  return guarded(
      [&] { *out = new rl_spectrum{ringlab::log_rebin(s->value, points_per_decade)}; });
}

rl_status rl_loglog_slope(const rl_spectrum* s, double f_lo, double f_hi, double* slope,
                          double* intercept, double* stderr_slope) {
  if (rl_status st = require(s != nullptr && slope != nullptr, "null argument"); st != RL_OK)
    return st;
  return guarded([&] {
    const ringlab::SlopeFit fit = ringlab::loglog_slope(s->value, f_lo, f_hi);
    *slope = fit.slope;
    if (intercept != nullptr) *intercept = fit.intercept;
    if (stderr_slope != nullptr) *stderr_slope = fit.stderr_slope;
  });
}

rl_status rl_band_median_asd(const rl_spectrum* s, double f_lo, double f_hi, double* out) {
  if (rl_status st = require(s != nullptr && out != nullptr, "null argument"); st != RL_OK)
    return st;
  return guarded([&] { *out = ringlab::band_median_asd(s->value, f_lo, f_hi); });
}

rl_status rl_classify_noise(const rl_spectrum* s, double knee_lo, double knee_hi, double low_lo,
                            double low_hi, double high_lo, double high_hi,
                            rl_noise_class* out) {
  if (rl_status st = require(s != nullptr && out != nullptr, "null argument"); st != RL_OK)
    return st;
  return guarded([&] {
    ringlab::ClassifyBands bands;
    bands.knee_search = {knee_lo, knee_hi};
    bands.low = {low_lo, low_hi};
    bands.high = {high_lo, high_hi};
    switch (ringlab::classify_noise(s->value, bands)) {
      case ringlab::NoiseClass::WhiteFrequency: *out = RL_CLASS_WHITE_FREQUENCY; break;
      case ringlab::NoiseClass::WhitePhase: *out = RL_CLASS_WHITE_PHASE; break;
      case ringlab::NoiseClass::PhaseDiffusion: *out = RL_CLASS_PHASE_DIFFUSION; break;
      case ringlab::NoiseClass::Unknown: *out = RL_CLASS_UNKNOWN; break;
    }
  });
}

/* ---- stability ---- */

rl_status rl_tau_grid(size_t n_samples, int points_per_decade, size_t* m_out, size_t capacity,
                      size_t* count) {
  if (rl_status st = require(count != nullptr, "null argument"); st != RL_OK) return st;
  return guarded([&] {
    const std::vector<size_t> grid = ringlab::tau_grid(n_samples, points_per_decade);
    *count = grid.size();
    if (m_out != nullptr) {
      if (capacity < grid.size()) throw std::invalid_argument("tau_grid: capacity too small");
      std::memcpy(m_out, grid.data(), grid.size() * sizeof(size_t));
    }
  });
}

rl_status rl_oadev(const rl_series* y, const size_t* m_list, size_t n_m, rl_stability** out) {
  return stability_call(y, m_list, n_m, out,
                        [](const auto& s, auto ms) { return ringlab::oadev(s, ms); });
}

rl_status rl_mdev(const rl_series* y, const size_t* m_list, size_t n_m, rl_stability** out) {
  return stability_call(y, m_list, n_m, out,
                        [](const auto& s, auto ms) { return ringlab::mdev(s, ms); });
}

rl_status rl_adev(const rl_series* y, const size_t* m_list, size_t n_m, rl_stability** out) {
  return stability_call(y, m_list, n_m, out,
                        [](const auto& s, auto ms) { return ringlab::adev(s, ms); });
}

void rl_stability_free(rl_stability* s) { delete s; }

size_t rl_stability_length(const rl_stability* s) { return s ? s->value.taus.size() : 0; }

const double* rl_stability_taus(const rl_stability* s) {
  return s ? s->value.taus.data() : nullptr;
}

const double* rl_stability_deviations(const rl_stability* s) {
  return s ? s->value.deviations.data() : nullptr;
}

const size_t* rl_stability_counts(const rl_stability* s) {
  return s ? s->value.sample_counts.data() : nullptr;
}

rl_status rl_stability_save(const rl_stability* s, const char* path) {
  if (rl_status st = require(s != nullptr && path != nullptr, "null argument"); st != RL_OK)
    return st;
  return guarded([&] { ringlab::save_stability(s->value, path); });
}

/* ---- differential measurement ---- */

rl_status rl_noise_channel(const rl_series* omega1, const rl_series* omega2, rl_series** out) {
  if (rl_status st =
          require(omega1 != nullptr && omega2 != nullptr && out != nullptr, "null argument");
      st != RL_OK)
    return st;
  return guarded(
      [&] { *out = new rl_series{ringlab::noise_channel(omega1->value, omega2->value)}; });
}

rl_status rl_difference_channel(const rl_pair* pair, const rl_demod_config* cfg,
                                rl_series** out) {
  if (rl_status st =
          require(pair != nullptr && cfg != nullptr && out != nullptr, "null argument");
      st != RL_OK)
    return st;
  return guarded(
      [&] { *out = new rl_series{ringlab::difference_channel(pair->value, to_demod(cfg))}; });
}

rl_status rl_run_differential(const rl_pair* pair, const rl_demod_config* cfg,
                              const rl_geometry* geometry, rl_diffresult** out) {
  if (rl_status st = require(pair != nullptr && cfg != nullptr && geometry != nullptr &&
                                 out != nullptr,
                             "null argument");
      st != RL_OK)
    return st;
  return guarded([&] {
    *out = new rl_diffresult{
        ringlab::run_differential(pair->value, to_demod(cfg), to_geometry(geometry))};
  });
}

void rl_diffresult_free(rl_diffresult* r) { delete r; }

const rl_series* rl_diffresult_omega_d(const rl_diffresult* r) {
  return r ? reinterpret_cast<const rl_series*>(&r->value.omega_d) : nullptr;
}

const rl_series* rl_diffresult_omega_half_diff(const rl_diffresult* r) {
  return r ? reinterpret_cast<const rl_series*>(&r->value.omega_half_diff) : nullptr;
}

const rl_series* rl_diffresult_rotation_d(const rl_diffresult* r) {
  return r ? reinterpret_cast<const rl_series*>(&r->value.rotation_d) : nullptr;
}

const rl_series* rl_diffresult_rotation_half_diff(const rl_diffresult* r) {
  return r ? reinterpret_cast<const rl_series*>(&r->value.rotation_half_diff) : nullptr;
}

rl_status rl_rejection_ratio(const rl_spectrum* single_channel, const rl_spectrum* differenced,
                             double f_signal_hz, double bandwidth_hz, double* db) {
  if (rl_status st = require(single_channel != nullptr && differenced != nullptr && db != nullptr,
                             "null argument");
      st != RL_OK)
    return st;
  return guarded([&] {
    *db = ringlab::rejection_ratio(single_channel->value, differenced->value, f_signal_hz,
                                   bandwidth_hz);
  });
}

/* ---- configuration and pipeline commands ---- */

rl_status rl_config_load(const char* path, rl_config** out) {
  if (rl_status st = require(path != nullptr && out != nullptr, "null argument"); st != RL_OK)
    return st;
  return guarded([&] { *out = new rl_config{ringlab::Config::load(path)}; });
}

rl_status rl_config_parse(const char* text, rl_config** out) {
  if (rl_status st = require(text != nullptr && out != nullptr, "null argument"); st != RL_OK)
    return st;
  return guarded([&] { *out = new rl_config{ringlab::Config::parse(text)}; });
}

void rl_config_free(rl_config* c) { delete c; }

rl_status rl_config_set(rl_config* c, const char* key, const char* value) {
  if (rl_status st = require(c != nullptr && key != nullptr && value != nullptr, "null argument");
      st != RL_OK)
    return st;
  return guarded([&] { c->value.set(key, value); });
}

rl_status rl_config_get(const rl_config* c, const char* key, char* buffer, size_t size) {
  if (rl_status st = require(c != nullptr && key != nullptr, "null argument"); st != RL_OK)
    return st;
  const auto value = c->value.get(key);
  if (!value) {
    set_error((std::string("missing config key: ") + key).c_str());
    return RL_ERROR_CONFIG;
  }
  return copy_string(*value, buffer, size);
}

uint64_t rl_config_hash(const rl_config* c) { return c ? c->value.hash() : 0; }

rl_status rl_cmd_synth(const rl_config* c, const char* outdir) {
  if (rl_status st = require(c != nullptr && outdir != nullptr, "null argument"); st != RL_OK)
    return st;
  return guarded([&] { ringlab::cmd_synth(c->value, outdir); });
}

rl_status rl_cmd_demod(const rl_config* c, const char* outdir) {
  if (rl_status st = require(c != nullptr && outdir != nullptr, "null argument"); st != RL_OK)
    return st;
  return guarded([&] { ringlab::cmd_demod(c->value, outdir); });
}

rl_status rl_cmd_spectrum(const rl_config* c, const char* outdir) {
  if (rl_status st = require(c != nullptr && outdir != nullptr, "null argument"); st != RL_OK)
    return st;
  return guarded([&] { ringlab::cmd_spectrum(c->value, outdir); });
}

rl_status rl_cmd_stability(const rl_config* c, const char* outdir) {
  if (rl_status st = require(c != nullptr && outdir != nullptr, "null argument"); st != RL_OK)
    return st;
  return guarded([&] { ringlab::cmd_stability(c->value, outdir); });
}

rl_status rl_cmd_diff(const rl_config* c, const char* outdir) {
  if (rl_status st = require(c != nullptr && outdir != nullptr, "null argument"); st != RL_OK)
    return st;
  return guarded([&] { ringlab::cmd_diff(c->value, outdir); });
}

rl_status rl_cmd_classify(const rl_config* c, const char* outdir, char* label_buffer,
                          size_t size) {
  if (rl_status st = require(c != nullptr && outdir != nullptr, "null argument"); st != RL_OK)
    return st;
  std::string label;
  const rl_status st = guarded([&] { label = ringlab::cmd_classify(c->value, outdir); });
  if (st != RL_OK) return st;
  if (label_buffer != nullptr) return copy_string(label, label_buffer, size);
  return RL_OK;
}

rl_status rl_cmd_report(const rl_config* c, const char* outdir) {
  if (rl_status st = require(c != nullptr && outdir != nullptr, "null argument"); st != RL_OK)
    return st;
  return guarded([&] { ringlab::cmd_report(c->value, outdir); });
}

}  // extern "C"
