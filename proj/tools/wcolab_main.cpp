// wcolab: orbits, norm sequences and chaos certificates for weighted
// composition operators on spaces of analytic functions on the disk.

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "wcolab/chaos.hpp"
#include "wcolab/experiment.hpp"

namespace fs = std::filesystem;
using namespace wcolab;

namespace {

/// Raw flag values; only the flags the user actually passed override the config.
struct Flags {
  std::string config;
  std::string dump_config;
  std::string weight;
  double phi_affine = 0.5;
  std::string phi_poly;
  std::string space = "h2";
  double p = 2.0;
  double beta = 0.0;
  std::size_t grid = 0;
  std::size_t radial = 128;
  std::size_t degree = 1024;
  std::size_t horizon = 500;
  std::size_t cap = 0;
  double epsilon = 1e-10;
  double growth = 1e3;
  std::string candidates;
  std::string out;
  std::string format = "csv";
  std::string lambda_grid, a_grid, p_grid, beta_grid;
  std::size_t threads = 0;
  std::string eigen_s = "1";
  std::string preset;
  std::string out_dir;
  double preset_a = 0.0;
  std::size_t decay_degree = 1024;
  std::size_t growth_degree = 2048;
};

struct Options {
  CLI::Option* weight = nullptr;
  CLI::Option* phi_affine = nullptr;
  CLI::Option* phi_poly = nullptr;
  CLI::Option* space = nullptr;
  CLI::Option* p = nullptr;
  CLI::Option* beta = nullptr;
  CLI::Option* grid = nullptr;
  CLI::Option* radial = nullptr;
  CLI::Option* degree = nullptr;
  CLI::Option* horizon = nullptr;
  CLI::Option* cap = nullptr;
  CLI::Option* epsilon = nullptr;
  CLI::Option* growth = nullptr;
  CLI::Option* candidates = nullptr;
  CLI::Option* out = nullptr;
  CLI::Option* format = nullptr;
  CLI::Option* lambda_grid = nullptr;
  CLI::Option* a_grid = nullptr;
  CLI::Option* p_grid = nullptr;
  CLI::Option* beta_grid = nullptr;
  CLI::Option* threads = nullptr;
  CLI::Option* eigen_s = nullptr;
};

bool given(const CLI::Option* o) { return o != nullptr && o->count() > 0; }

void add_common(CLI::App* cmd, Flags& f, Options& o) {
  cmd->add_option("--config", f.config, "JSON experiment config (flags override it)");
  cmd->add_option("--dump-config", f.dump_config, "Write the effective config as JSON");
  o.weight = cmd->add_option("--w", f.weight, "Weight: 'lambda*z' or coefficient list c0,c1,...");
  o.phi_affine = cmd->add_option("--phi-affine", f.phi_affine, "Symbol a z + 1 - a");
  o.phi_poly = cmd->add_option("--phi-poly", f.phi_poly, "Polynomial symbol c0,c1,... (grid-validated)");
  o.space = cmd->add_option("--space", f.space, "h2 | h1 | hp | bergman | a2 | hinf");
  o.p = cmd->add_option("--p", f.p, "Exponent for hp / bergman");
  o.beta = cmd->add_option("--beta", f.beta, "Bergman weight exponent (> -1)");
  o.grid = cmd->add_option("--grid", f.grid, "Angular grid size (0 = automatic)");
  o.radial = cmd->add_option("--radial-order", f.radial, "Gauss-Jacobi order for Bergman quadrature");
  o.degree = cmd->add_option("--degree", f.degree, "Truncation degree of eigenfunction candidates");
  o.horizon = cmd->add_option("--horizon", f.horizon, "Number of iterates");
  o.cap = cmd->add_option("--cap", f.cap, "Degree cap for weight iterates (needed for non-affine symbols)");
  o.epsilon = cmd->add_option("--epsilon", f.epsilon, "Decay threshold");
  o.growth = cmd->add_option("--G", f.growth, "Growth threshold");
  o.candidates = cmd->add_option("--candidates", f.candidates, "Orbit vectors: s=-0.4,s=0.25:k=2,k=3,poly=1|0|-1");
  o.out = cmd->add_option("--out", f.out, "Output file (stdout if omitted)");
  o.format = cmd->add_option("--format", f.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
}

ExperimentConfig effective_config(const Flags& f, const Options& o, const std::string& command) {
  ExperimentConfig cfg;
  if (!f.config.empty()) {
    std::ifstream in(f.config);
    if (!in) throw std::invalid_argument("cannot open config file '" + f.config + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    cfg = config_from_json(buf.str());
  }
  cfg.command = command;
  if (given(o.weight)) cfg.weight = parse_weight(f.weight);
  if (given(o.phi_affine) && given(o.phi_poly))
    throw std::invalid_argument("--phi-affine and --phi-poly are mutually exclusive");
  if (given(o.phi_affine)) {
    cfg.phi_a = f.phi_affine;
    cfg.phi_poly.clear();
  }
  if (given(o.phi_poly)) {
    cfg.phi_a.reset();
    cfg.phi_poly = parse_coefficients(f.phi_poly);
  }
  if (given(o.space) || given(o.p) || given(o.beta)) {
    const std::size_t grid = cfg.space.angular_grid, radial = cfg.space.radial_order;
    cfg.space = parse_space(f.space, f.p, f.beta);
    cfg.space.angular_grid = grid;
    cfg.space.radial_order = radial;
  }
  if (given(o.grid)) cfg.space.angular_grid = f.grid;
  if (given(o.radial)) cfg.space.radial_order = f.radial;
  if (given(o.degree)) cfg.degree = f.degree;
  if (given(o.horizon)) cfg.horizon = f.horizon;
  if (given(o.cap)) cfg.cap = f.cap;
  if (given(o.epsilon)) cfg.epsilon = f.epsilon;
  if (given(o.growth)) cfg.growth = f.growth;
  if (given(o.candidates)) cfg.candidates = parse_candidates(f.candidates);
  if (given(o.out)) cfg.out = f.out;
  if (given(o.format)) cfg.format = f.format;
  if (given(o.lambda_grid)) cfg.lambda_grid = parse_complex_grid(f.lambda_grid);
  if (given(o.a_grid)) cfg.a_grid = parse_grid(f.a_grid);
  if (given(o.p_grid)) cfg.p_grid = parse_grid(f.p_grid);
  if (given(o.beta_grid)) cfg.beta_grid = parse_grid(f.beta_grid);
  if (given(o.threads)) cfg.threads = f.threads;
  if (given(o.eigen_s)) cfg.eigen_s = parse_complex(f.eigen_s);
  if (!f.dump_config.empty()) {
    std::ofstream dump(f.dump_config);
    dump << config_to_json(cfg) << '\n';
  }
  return cfg;
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

std::string sequence_text(const NormSequence& seq, const std::string& format) {
  std::ostringstream out;
  if (format == "json") {
    out << "{\n  \"schema_version\": " << kSchemaVersion << ",\n  \"label\": \"" << seq.label
        << "\",\n  \"space\": \"" << seq.space.name() << "\",\n  \"provenance\": \"" << to_string(seq.provenance)
        << "\",\n  \"converged\": " << (seq.converged ? "true" : "false") << ",\n  \"values\": [";
    for (std::size_t i = 0; i < seq.size(); ++i) out << (i ? ", " : "") << format_double(seq.values[i]);
    out << "]\n}\n";
  } else {
    write_sequence_csv(out, seq);
  }
  return out.str();
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << text;
}

int run_preset(const Flags& f, const Options& o, CLI::Option* a_opt, const ExperimentConfig& base) {
  const std::string name = f.preset;
  const bool a_given = given(o.phi_affine) || given(a_opt);
  const double a_value = given(a_opt) ? f.preset_a : f.phi_affine;
  if (name == "weighted-chaotic") {
    ExperimentConfig cfg = weighted_chaotic_config();
    if (given(o.space) || given(o.p) || given(o.beta)) cfg.space = base.space;
    if (a_given) cfg.phi_a = a_value;
    if (given(o.weight)) cfg.weight = base.weight;
    if (given(o.degree)) cfg.degree = base.degree;
    if (given(o.horizon)) cfg.horizon = base.horizon;
    if (given(o.candidates)) cfg.candidates = base.candidates;
    const ClassifyResult r = run_classify(cfg);
    const std::string verdict = classify_to_json(r, cfg) + "\n";
    if (!f.out_dir.empty()) {
      fs::create_directories(f.out_dir);
      write_file(fs::path(f.out_dir) / "verdict.json", verdict);
      write_file(fs::path(f.out_dir) / "weights.csv", sequence_text(r.weight_seq, "csv"));
      for (std::size_t i = 0; i < r.orbit_seqs.size(); ++i)
        write_file(fs::path(f.out_dir) / ("orbit_" + std::to_string(i) + ".csv"),
                   sequence_text(r.orbit_seqs[i], "csv"));
    } else {
      emit(base.out, verdict);
    }
    return 0;
  }
  if (name == "unweighted") {
    const double a = a_given ? a_value : 0.5;
    const std::size_t horizon = given(o.horizon) ? f.horizon : 200;
    const UnweightedPreset p = run_unweighted_preset(a, base.space, horizon, f.decay_degree, f.growth_degree);
    const std::string summary = unweighted_to_json(p) + "\n";
    if (!f.out_dir.empty()) {
      fs::create_directories(f.out_dir);
      write_file(fs::path(f.out_dir) / "summary.json", summary);
      std::ostringstream decay;
      write_unweighted_decay_csv(decay, p);
      write_file(fs::path(f.out_dir) / "decay.csv", decay.str());
      write_file(fs::path(f.out_dir) / "growth.csv", sequence_text(p.growth, "csv"));
      write_file(fs::path(f.out_dir) / "weights.csv", sequence_text(p.weight_seq, "csv"));
    } else {
      emit(base.out, summary);
    }
    return 0;
  }
  throw std::invalid_argument("unknown preset '" + name + "' (expected weighted-chaotic or unweighted)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orbits and Li-Yorke chaos certificates for weighted composition operators"};
  app.require_subcommand(1);

  Flags f;
  Options o;
  // Each subcommand gets its own option objects; only the parsed one is read.
  std::map<std::string, Options> per_command;

  auto* weights = app.add_subcommand("weights", "Norm sequence ||w^(n)||_X");
  auto* orbit = app.add_subcommand("orbit", "Orbit norm sequence ||T^n x||_X for one candidate");
  auto* classify = app.add_subcommand("classify", "Li-Yorke and mean Li-Yorke certificates");
  auto* sweep = app.add_subcommand("sweep", "Certificates over a (lambda, a) or (p, beta) grid");
  auto* eigen = app.add_subcommand("eigen", "Residual of the eigen-relation C_{phi_a} g_s = a^s g_s");
  auto* preset = app.add_subcommand("preset", "Built-in example experiments");

  for (auto* cmd : {weights, orbit, classify, sweep, eigen, preset}) add_common(cmd, f, per_command[cmd->get_name()]);

  auto& so = per_command["sweep"];
  so.lambda_grid = sweep->add_option("--lambda-grid", f.lambda_grid, "lo:hi:count or list (may be empty)");
  so.a_grid = sweep->add_option("--a-grid", f.a_grid, "lo:hi:count or list (may be empty)");
  so.p_grid = sweep->add_option("--p-grid", f.p_grid, "lo:hi:count or list");
  so.beta_grid = sweep->add_option("--beta-grid", f.beta_grid, "lo:hi:count or list");
  so.threads = sweep->add_option("--threads", f.threads, "Worker threads (0 = hardware)");

  per_command["eigen"].eigen_s = eigen->add_option("--s", f.eigen_s, "Exponent s of (1-z)^s");
  per_command["eigen"].phi_affine->description("Parameter a of a z + 1 - a");

  preset->add_option("name", f.preset, "weighted-chaotic | unweighted")->required();
  auto* preset_a = preset->add_option("--a", f.preset_a, "Parameter a of a z + 1 - a (same as --phi-affine)");
  preset->add_option("--out-dir", f.out_dir, "Directory for tables and summary");
  preset->add_option("--decay-degree", f.decay_degree, "Truncation degree of (1-z)^{1/4} (unweighted)");
  preset->add_option("--growth-degree", f.growth_degree, "Truncation degree of (1-z)^{-1/12} (unweighted)");

  CLI11_PARSE(app, argc, argv);

  try {
    for (auto* cmd : app.get_subcommands()) o = per_command[cmd->get_name()];
    const std::string command = app.get_subcommands().front()->get_name();
    const ExperimentConfig cfg = effective_config(f, o, command);

    if (command == "weights") {
      emit(cfg.out, sequence_text(run_weights(cfg), cfg.format));
    } else if (command == "orbit") {
      emit(cfg.out, sequence_text(run_orbit(cfg), cfg.format));
    } else if (command == "classify") {
      emit(cfg.out, classify_to_json(run_classify(cfg), cfg) + "\n");
    } else if (command == "sweep") {
      std::ostringstream table;
      write_sweep_csv(table, run_sweep(cfg));
      emit(cfg.out, table.str());
    } else if (command == "eigen") {
      const double a = cfg.phi_a.value_or(0.5);
      const double r = eigen_residual(a, cfg.eigen_s, cfg.space, cfg.degree);
      std::ostringstream out;
      out << "{\n  \"a\": " << format_double(a) << ",\n  \"s\": [" << format_double(cfg.eigen_s.real()) << ", "
          << format_double(cfg.eigen_s.imag()) << "],\n  \"space\": \"" << cfg.space.name()
          << "\",\n  \"degree\": " << cfg.degree << ",\n  \"residual\": " << format_double(r) << "\n}\n";
      emit(cfg.out, out.str());
    } else if (command == "preset") {
      return run_preset(f, o, preset_a, cfg);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
