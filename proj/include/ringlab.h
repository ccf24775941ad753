/* ringlab — ring-laser interferogram synthesis and noise analysis.
 *
 * C API over the C++ core. All functions return rl_status; every non-OK
 * status leaves a human-readable message in rl_last_error_message()
 * (thread-local). Handles are opaque; *_free releases them, accessors
 * returning pointers borrow from the owning handle and stay valid until it
 * is freed.
 */

#ifndef RINGLAB_H
#define RINGLAB_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define RL_API __declspec(dllexport)
#else
#define RL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rl_status {
  RL_OK = 0,
  RL_ERROR_INTERNAL = 1,
  RL_ERROR_CONFIG = 2,  /* bad configuration (CLI exit code 2) */
  RL_ERROR_DATA = 3,    /* unreadable or invalid data (CLI exit code 3) */
  RL_ERROR_NUMERIC = 4, /* numerical failure (CLI exit code 4) */
  RL_ERROR_INVALID = 5  /* API misuse: null handles, out-of-contract args */
} rl_status;

typedef enum rl_unit {
  RL_UNIT_VOLT = 0,
  RL_UNIT_RADIAN = 1,
  RL_UNIT_RADIAN_PER_SECOND = 2,
  RL_UNIT_HERTZ = 3,
  RL_UNIT_DIMENSIONLESS = 4
} rl_unit;

typedef enum rl_format { RL_FORMAT_CSV = 0, RL_FORMAT_F64LE = 1 } rl_format;

typedef enum rl_window {
  RL_WINDOW_HANN = 0,
  RL_WINDOW_RECTANGULAR = 1,
  RL_WINDOW_HAMMING = 2
} rl_window;

typedef enum rl_noise_kind {
  RL_NOISE_WHITE_FREQUENCY = 0,
  RL_NOISE_WHITE_PHASE = 1,
  RL_NOISE_WIENER_PHASE = 2,
  RL_NOISE_WHITE_ADDITIVE = 3
} rl_noise_kind;

typedef enum rl_noise_class {
  RL_CLASS_WHITE_FREQUENCY = 0,
  RL_CLASS_WHITE_PHASE = 1,
  RL_CLASS_PHASE_DIFFUSION = 2,
  RL_CLASS_UNKNOWN = 3
} rl_noise_class;

typedef enum rl_deviation {
  RL_DEVIATION_ADEV = 0,
  RL_DEVIATION_OADEV = 1,
  RL_DEVIATION_MDEV = 2
} rl_deviation;

typedef struct rl_series rl_series;
typedef struct rl_pair rl_pair;
typedef struct rl_spectrum rl_spectrum;
typedef struct rl_stability rl_stability;
typedef struct rl_diffresult rl_diffresult;
typedef struct rl_config rl_config;

typedef struct rl_geometry {
  double area_m2;
  double perimeter_m;
  double wavelength_m;
  double theta_rad;
} rl_geometry;

typedef struct rl_carrier {
  double omega_s_rad_s;
  double gain;
  double initial_phase_rad;
} rl_carrier;

typedef struct rl_noise_spec {
  rl_noise_kind kind;
  double level; /* per-sample sigma; unit follows the kind */
  uint64_t seed;
} rl_noise_spec;

typedef struct rl_demod_config {
  double integration_time_s; /* phase-slope window */
  int detrend;               /* nonzero: remove mean before analytic signal */
  double output_rate_hz;     /* <= 0: contiguous windows at 1/integration_time */
  double edge_guard_s;       /* < 0: one window */
} rl_demod_config;

RL_API const char* rl_version(void);
RL_API const char* rl_last_error_message(void);

/* ---- series ---- */
RL_API rl_status rl_series_create(const double* data, size_t n, double sample_rate_hz,
                                  rl_unit unit, double start_time_s, rl_series** out);
RL_API void rl_series_free(rl_series* s);
RL_API size_t rl_series_length(const rl_series* s);
RL_API double rl_series_sample_rate(const rl_series* s);
RL_API double rl_series_start_time(const rl_series* s);
RL_API rl_unit rl_series_unit(const rl_series* s);
RL_API const double* rl_series_data(const rl_series* s);
RL_API rl_status rl_series_load(const char* path, rl_format format, rl_series** out);
RL_API rl_status rl_series_save(const rl_series* s, const char* path, rl_format format);

/* ---- Sagnac conversions ---- */
RL_API rl_status rl_sagnac_scale_factor(const rl_geometry* g, double* out);
RL_API rl_status rl_rotation_to_beat(double omega_rot, const rl_geometry* g, double* out);
RL_API rl_status rl_beat_to_rotation(double omega_beat, const rl_geometry* g, double* out);
RL_API rl_status rl_ratio_to_reference(double omega_rot, double omega_ref, double* out);

/* ---- synthesis ---- */
RL_API rl_status rl_gen_white(size_t n, double level, uint64_t seed, double sample_rate_hz,
                              rl_unit unit, rl_series** out);
RL_API rl_status rl_gen_wiener(size_t n, double step_sigma, uint64_t seed,
                               double sample_rate_hz, rl_series** out);
RL_API rl_status rl_asd_level_to_sigma(double asd_level, double sample_rate_hz, double* out);
RL_API rl_status rl_synthesize_pair(const rl_carrier* carrier, const rl_noise_spec* in_cavity,
                                    size_t n_in_cavity, const rl_noise_spec* per_port,
                                    size_t n_samples, double sample_rate_hz, rl_pair** out);
RL_API void rl_pair_free(rl_pair* p);
RL_API const rl_series* rl_pair_s1(const rl_pair* p);
RL_API const rl_series* rl_pair_s2(const rl_pair* p);
RL_API const rl_series* rl_pair_truth_omega_n(const rl_pair* p);
RL_API const rl_series* rl_pair_truth_phi_n(const rl_pair* p);

/* ---- demodulation ---- */
RL_API rl_status rl_analytic_phase(const rl_series* s, int detrend, rl_series** out);
RL_API rl_status rl_reconstruct_frequency(const rl_series* s, const rl_demod_config* cfg,
                                          rl_series** out);

/* ---- spectral analysis ---- */
RL_API rl_status rl_asd(const rl_series* s, size_t segment_length, double overlap_fraction,
                        rl_window window, rl_spectrum** out);
RL_API void rl_spectrum_free(rl_spectrum* s);
RL_API size_t rl_spectrum_length(const rl_spectrum* s);
RL_API const double* rl_spectrum_frequencies(const rl_spectrum* s);
RL_API const double* rl_spectrum_asd(const rl_spectrum* s);
RL_API rl_status rl_spectrum_save(const rl_spectrum* s, const char* path);
RL_API rl_status rl_spectrum_load(const char* path, rl_spectrum** out);
RL_API rl_status rl_spectrum_mask(const rl_spectrum* s, const double* band_lo,
                                  const double* band_hi, size_t n_bands, rl_spectrum** out);
RL_API rl_status rl_log_rebin(const rl_spectrum* s, int points_per_decade, rl_spectrum** out);
RL_API rl_status rl_loglog_slope(const rl_spectrum* s, double f_lo, double f_hi, double* slope,
                                 double* intercept, double* stderr_slope);
RL_API rl_status rl_band_median_asd(const rl_spectrum* s, double f_lo, double f_hi, double* out);
RL_API rl_status rl_classify_noise(const rl_spectrum* s, double knee_lo, double knee_hi,
                                   double low_lo, double low_hi, double high_lo, double high_hi,
                                   rl_noise_class* out);

/* ---- stability ---- */
RL_API rl_status rl_tau_grid(size_t n_samples, int points_per_decade, size_t* m_out,
                             size_t capacity, size_t* count);
RL_API rl_status rl_oadev(const rl_series* y, const size_t* m_list, size_t n_m,
                          rl_stability** out);
RL_API rl_status rl_mdev(const rl_series* y, const size_t* m_list, size_t n_m,
                         rl_stability** out);
RL_API rl_status rl_adev(const rl_series* y, const size_t* m_list, size_t n_m,
                         rl_stability** out);
RL_API void rl_stability_free(rl_stability* s);
RL_API size_t rl_stability_length(const rl_stability* s);
RL_API const double* rl_stability_taus(const rl_stability* s);
RL_API const double* rl_stability_deviations(const rl_stability* s);
RL_API const size_t* rl_stability_counts(const rl_stability* s);
RL_API rl_status rl_stability_save(const rl_stability* s, const char* path);

/* ---- differential measurement ---- */
RL_API rl_status rl_noise_channel(const rl_series* omega1, const rl_series* omega2,
                                  rl_series** out);
RL_API rl_status rl_difference_channel(const rl_pair* pair, const rl_demod_config* cfg,
                                       rl_series** out);
RL_API rl_status rl_run_differential(const rl_pair* pair, const rl_demod_config* cfg,
                                     const rl_geometry* geometry, rl_diffresult** out);
RL_API void rl_diffresult_free(rl_diffresult* r);
RL_API const rl_series* rl_diffresult_omega_d(const rl_diffresult* r);
RL_API const rl_series* rl_diffresult_omega_half_diff(const rl_diffresult* r);
RL_API const rl_series* rl_diffresult_rotation_d(const rl_diffresult* r);
RL_API const rl_series* rl_diffresult_rotation_half_diff(const rl_diffresult* r);
RL_API rl_status rl_rejection_ratio(const rl_spectrum* single_channel,
                                    const rl_spectrum* differenced, double f_signal_hz,
                                    double bandwidth_hz, double* db);

/* ---- configuration and pipeline commands ---- */
RL_API rl_status rl_config_load(const char* path, rl_config** out);
RL_API rl_status rl_config_parse(const char* text, rl_config** out);
RL_API void rl_config_free(rl_config* c);
RL_API rl_status rl_config_set(rl_config* c, const char* key, const char* value);
RL_API rl_status rl_config_get(const rl_config* c, const char* key, char* buffer, size_t size);
RL_API uint64_t rl_config_hash(const rl_config* c);

RL_API rl_status rl_cmd_synth(const rl_config* c, const char* outdir);
RL_API rl_status rl_cmd_demod(const rl_config* c, const char* outdir);
RL_API rl_status rl_cmd_spectrum(const rl_config* c, const char* outdir);
RL_API rl_status rl_cmd_stability(const rl_config* c, const char* outdir);
RL_API rl_status rl_cmd_diff(const rl_config* c, const char* outdir);
RL_API rl_status rl_cmd_classify(const rl_config* c, const char* outdir, char* label_buffer,
                                 size_t size);
RL_API rl_status rl_cmd_report(const rl_config* c, const char* outdir);

#ifdef __cplusplus
}
#endif

#endif /* RINGLAB_H */
