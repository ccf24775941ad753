// ringlab command-line front end. Talks to the core exclusively through the
// C API in ringlab.h; exit codes: 0 ok, 2 config error, 3 data error,
// 4 numerical failure.

#include <cstdio>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "ringlab.h"

namespace {

struct ConfigDeleter {
  void operator()(rl_config* c) const { rl_config_free(c); }
};
using ConfigHandle = std::unique_ptr<rl_config, ConfigDeleter>;

struct CommonOptions {
  std::string config_path;
  std::string outdir;
  std::string format;
  std::string seed;
  int threads = 0;
  bool has_seed = false;
};

int exit_code_for(rl_status status) {
  switch (status) {
    case RL_OK: return 0;
    case RL_ERROR_CONFIG: return 2;
    case RL_ERROR_DATA: return 3;
    case RL_ERROR_NUMERIC: return 4;
    case RL_ERROR_INVALID: return 2;
    case RL_ERROR_INTERNAL: return 4;
  }
  return 4;
}

int fail(rl_status status) {
  std::fprintf(stderr, "ringlab: %s\n", rl_last_error_message());
  return exit_code_for(status);
}

ConfigHandle load_config(const CommonOptions& opts, rl_status& status) {
  rl_config* raw = nullptr;
  status = rl_config_load(opts.config_path.c_str(), &raw);
  ConfigHandle cfg(raw);
  if (status != RL_OK) return cfg;
  if (opts.has_seed) {
    status = rl_config_set(cfg.get(), "campaign.seed", opts.seed.c_str());
    if (status != RL_OK) return cfg;
  }
  if (!opts.format.empty()) {
    status = rl_config_set(cfg.get(), "io.format", opts.format.c_str());
    if (status != RL_OK) return cfg;
  }
  if (opts.threads > 0) {
    status = rl_config_set(cfg.get(), "campaign.threads",
                           std::to_string(opts.threads).c_str());
  }
  return cfg;
}

void add_common(CLI::App* cmd, CommonOptions& opts, bool needs_out = true) {
  cmd->add_option("--config", opts.config_path, "campaign configuration file")->required();
  auto* out = cmd->add_option("--out", opts.outdir, "output directory");
  if (needs_out) out->required();
  cmd->add_option("--seed", opts.seed, "override campaign.seed")
      ->each([&opts](const std::string&) { opts.has_seed = true; });
  cmd->add_option("--threads", opts.threads, "worker thread hint");
  cmd->add_option("--format", opts.format, "series format: csv or f64le")
      ->check(CLI::IsMember({"csv", "f64le"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ring-laser interferogram synthesis and noise analysis"};
  app.require_subcommand(1);
  app.set_version_flag("--version", rl_version());

  CommonOptions opts;
  using Runner = rl_status (*)(const rl_config*, const char*);
  struct Sub {
    const char* name;
    const char* help;
    Runner run;
  };
  const Sub subs[] = {
      {"synth", "synthesize a two-port interferogram pair", rl_cmd_synth},
      {"demod", "reconstruct beat frequency from a pair", rl_cmd_demod},
      {"spectrum", "amplitude spectral density of a series", rl_cmd_spectrum},
      {"stability", "Allan deviation family of a rate series", rl_cmd_stability},
      {"diff", "differential channels omega_d and omega_n12/2", rl_cmd_diff},
      {"report", "full campaign: synthesize, demodulate, analyze", rl_cmd_report},
  };
  for (const Sub& sub : subs) {
    CLI::App* cmd = app.add_subcommand(sub.name, sub.help);
    add_common(cmd, opts);
    cmd->callback([&opts, &sub]() {
      rl_status status = RL_OK;
      const ConfigHandle cfg = load_config(opts, status);
      if (status != RL_OK) std::exit(fail(status));
      status = sub.run(cfg.get(), opts.outdir.c_str());
      if (status != RL_OK) std::exit(fail(status));
    });
  }

  CLI::App* classify = app.add_subcommand("classify", "identify the dominant noise type");
  add_common(classify, opts);
  classify->callback([&opts]() {
    rl_status status = RL_OK;
    const ConfigHandle cfg = load_config(opts, status);
    if (status != RL_OK) std::exit(fail(status));
    char label[64] = {0};
    status = rl_cmd_classify(cfg.get(), opts.outdir.c_str(), label, sizeof(label));
    if (status != RL_OK) std::exit(fail(status));
    std::printf("%s\n", label);
  });

  CLI11_PARSE(app, argc, argv);
  return 0;
}
