// Command-line front end: spectra, inertia reports, perturbations,
// verification campaigns, and region datasets for tridiagonal stochastic
// matrices. Exit codes: 0 success, 1 property violation, 2 input error.
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "tristoch/eigen.hpp"
#include "tristoch/io.hpp"

namespace ts = tristoch;

namespace {

struct ParamsOptions {
  std::string inline_params;
  std::string input_file;
};

void add_params_options(CLI::App* cmd, ParamsOptions& opt) {
  auto* a = cmd->add_option("--params,-p", opt.inline_params,
                            "inline tuple alpha,beta,gamma,delta,phi,kappa (decimal or p/q)");
  auto* b = cmd->add_option("--input,-i", opt.input_file,
                            "parameter file (.json object or CSV rows)");
  a->excludes(b);
}

std::vector<ts::ParsedParams> load_params(const ParamsOptions& opt) {
  if (!opt.inline_params.empty()) return {ts::parse_params_list(opt.inline_params)};
  if (!opt.input_file.empty()) return ts::parse_params_file(opt.input_file);
  throw std::invalid_argument("provide parameters via --params or --input");
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::invalid_argument("cannot open output file: " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

void emit_json(std::ostream& os, const ts::Json& j) { os << j.dump(2) << '\n'; }

int cmd_eig(const ParamsOptions& popt, double tol, const std::string& format,
            const std::string& out_path) {
  Output out(out_path);
  ts::Json results = ts::Json::array();
  for (const auto& parsed : load_params(popt)) {
    const auto spec = ts::eigenvalues(ts::symmetrize(ts::from_params(parsed.value)), tol);
    if (format == "json") {
      results.push_back(ts::to_json(spec));
    } else {
      std::string line;
      for (std::size_t k = 0; k < spec.eigenvalues.size(); ++k) {
        if (k) line += ' ';
        line += ts::format_g17(spec.eigenvalues[k]);
      }
      out.stream() << line << '\n'
                   << "lambda2 = " << ts::format_g17(spec.eigenvalues[1]) << '\n'
                   << "spectral_gap = " << ts::format_g17(1.0 - spec.eigenvalues[1]) << '\n';
    }
  }
  if (format == "json") emit_json(out.stream(), results.size() == 1 ? results[0] : results);
  return 0;
}

int cmd_inertia(const ParamsOptions& popt, const std::string& shift_text,
                const std::string& format, const std::string& out_path) {
  Output out(out_path);
  ts::Json results = ts::Json::array();
  const ts::Rational shift = ts::parse_rational(shift_text);
  const bool shift_exact = shift_text.find('/') != std::string::npos;
  for (const auto& parsed : load_params(popt)) {
    const bool exact = parsed.exact || shift_exact;
    ts::Json j;
    if (exact) {
      const auto m = ts::from_params(parsed.value);
      j = ts::to_json(ts::inertia_report(m, shift), ts::count_below(m, shift));
    } else {
      const auto m = ts::from_params(ts::to_double(parsed.value));
      const double x = ts::to_double(shift);
      j = ts::to_json(ts::inertia_report(m, x), ts::count_below(m, x));
    }
    if (format == "json") {
      results.push_back(j);
      continue;
    }
    std::string minors;
    for (const auto& v : j["minors"]) {
      if (!minors.empty()) minors += ' ';
      minors += v.is_string() ? v.get<std::string>() : ts::format_g17(v.get<double>());
    }
    out.stream() << "minors: " << minors << '\n';
    out.stream() << "sign_changes: "
                 << (j["sign_changes"].is_string() ? j["sign_changes"].get<std::string>()
                                                   : std::to_string(j["sign_changes"].get<int>()))
                 << '\n';
    out.stream() << "count_below(" << shift_text << "): " << j["count_below_shift"].get<int>()
                 << '\n';
  }
  if (format == "json") emit_json(out.stream(), results.size() == 1 ? results[0] : results);
  return 0;
}

int cmd_perturb(const ParamsOptions& popt, const std::string& scheme,
                const std::string& epsilon_text, unsigned n, const std::string& out_path) {
  Output out(out_path);
  ts::Json results = ts::Json::array();
  for (const auto& parsed : load_params(popt)) {
    if (scheme == "mix") {
      if (epsilon_text.empty()) throw std::invalid_argument("mix requires --epsilon");
      const bool exact = parsed.exact || epsilon_text.find('/') != std::string::npos;
      if (exact) {
        results.push_back(ts::to_json(ts::mix(parsed.value, ts::parse_rational(epsilon_text))));
      } else {
        results.push_back(ts::to_json(ts::mix(ts::to_double(parsed.value),
                                              ts::to_double(ts::parse_rational(epsilon_text)))));
      }
    } else if (scheme == "genericize") {
      if (n == 0) throw std::invalid_argument("genericize requires --n >= 1");
      results.push_back(ts::to_json(ts::genericize(parsed.value, n)));
    } else {
      throw std::invalid_argument("unknown scheme: " + scheme + " (use mix or genericize)");
    }
  }
  emit_json(out.stream(), results.size() == 1 ? results[0] : results);
  return 0;
}

struct CampaignOptions {
  std::size_t n = 4;
  std::size_t samples = 1000;
  std::uint64_t seed = 0;
  std::string sampler = "uniform";
  std::string mode = "float";
  double tol = 1e-9;
  unsigned resolution = 0;
  unsigned threads = 0;
  std::string csv_path;
  bool timing = false;
  std::string out_path;
};

void add_campaign_options(CLI::App* cmd, CampaignOptions& opt) {
  cmd->add_option("--n", opt.n, "chain dimension");
  cmd->add_option("--samples", opt.samples, "number of samples");
  cmd->add_option("--seed", opt.seed, "sampler seed");
  cmd->add_option("--sampler", opt.sampler, "uniform | boundary | grid");
  cmd->add_option("--mode", opt.mode, "float | rational | both");
  cmd->add_option("--tol", opt.tol, "violation tolerance on lambda2");
  cmd->add_option("--resolution", opt.resolution, "grid resolution (grid sampler)");
  cmd->add_option("--threads", opt.threads, "worker threads (default: TRISTOCH_THREADS or 1)");
  cmd->add_option("--csv", opt.csv_path, "stream per-sample records to CSV");
  cmd->add_flag("--timing", opt.timing, "include timing in the report");
  cmd->add_option("--out,-o", opt.out_path, "write the report to a file");
}

ts::CampaignConfig to_config(const CampaignOptions& opt) {
  ts::CampaignConfig cfg;
  cfg.n = opt.n;
  cfg.samples = opt.samples;
  cfg.seed = opt.seed;
  cfg.sampler = ts::sampler_from_string(opt.sampler);
  cfg.mode = ts::mode_from_string(opt.mode);
  cfg.tol = opt.tol;
  cfg.grid_resolution = opt.resolution;
  cfg.threads = opt.threads;
  return cfg;
}

int run_campaign_command(const CampaignOptions& opt, bool explore) {
  const auto cfg = to_config(opt);
  std::ofstream csv;
  if (!opt.csv_path.empty()) {
    csv.open(opt.csv_path);
    if (!csv) throw std::invalid_argument("cannot open CSV file: " + opt.csv_path);
  }
  const auto rep = explore ? ts::explore_higher(cfg, csv.is_open() ? &csv : nullptr)
                           : ts::run_campaign(cfg, csv.is_open() ? &csv : nullptr);
  Output out(opt.out_path);
  emit_json(out.stream(), ts::to_json(rep, opt.timing));
  std::cerr << "campaign: " << rep.samples_run << " samples in " << rep.timing_ms << " ms\n";

  if (!explore && cfg.n == 4 && !rep.violations.empty()) {
    std::cerr << "VIOLATION of the lambda2 >= 0 contract at n=4; reproducers follow\n";
    for (const auto& v : rep.violations) {
      std::cerr << "  seed=" << cfg.seed << " index=" << v.index << " lambda2=" << v.lambda2
                << " params=";
      for (std::size_t i = 0; i < v.params.size(); ++i)
        std::cerr << (i ? "," : "") << ts::format_rational(v.params[i]);
      std::cerr << '\n';
    }
    return 1;
  }
  return 0;
}

int cmd_region(unsigned resolution, double tol, const std::string& out_path) {
  if (resolution == 0) throw std::invalid_argument("region requires --resolution >= 1");
  Output out(out_path);
  out.stream() << "alpha,beta,gamma,delta,phi,kappa,lambda1,lambda2,lambda3,lambda4\n";
  const std::size_t total = ts::grid_point_count(4, resolution);
  for (std::size_t i = 0; i < total; ++i) {
    const auto rp = ts::sample_row_params(4, ts::SamplerKind::grid, 0, i, resolution);
    std::vector<double> p;
    for (const auto& v : rp) p.push_back(ts::to_double(v));
    const auto m = ts::from_row_params(4, p);
    const auto spec = ts::eigenvalues(ts::symmetrize(m), tol);
    std::string line;
    for (double v : p) line += ts::format_g17(v) + ",";
    for (std::size_t k = 0; k < 4; ++k)
      line += ts::format_g17(spec.eigenvalues[k]) + (k + 1 < 4 ? "," : "");
    out.stream() << line << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral analysis of tridiagonal stochastic matrices (birth-death chains)"};
  app.require_subcommand(1);

  ParamsOptions eig_params;
  double eig_tol = 1e-12;
  std::string eig_format = "text";
  std::string eig_out;
  auto* eig = app.add_subcommand("eig", "eigenvalues, lambda2, and spectral gap");
  add_params_options(eig, eig_params);
  eig->add_option("--tol", eig_tol, "bisection tolerance");
  eig->add_option("--format", eig_format, "text | json");
  eig->add_option("--out,-o", eig_out, "write to a file");

  ParamsOptions in_params;
  std::string shift = "0";
  std::string in_format = "text";
  std::string in_out;
  auto* inertia = app.add_subcommand("inertia", "minor sequence, sign changes, count below");
  add_params_options(inertia, in_params);
  inertia->add_option("--shift", shift, "evaluation shift (decimal or p/q)");
  inertia->add_option("--format", in_format, "text | json");
  inertia->add_option("--out,-o", in_out, "write to a file");

  ParamsOptions pe_params;
  std::string scheme = "mix";
  std::string epsilon;
  unsigned gen_n = 0;
  std::string pe_out;
  auto* perturb = app.add_subcommand("perturb", "mix toward irreducibility or genericize minors");
  add_params_options(perturb, pe_params);
  perturb->add_option("--scheme", scheme, "mix | genericize");
  perturb->add_option("--epsilon", epsilon, "mix amount in (0,1), decimal or p/q");
  perturb->add_option("--n", gen_n, "genericize index (eps_n = 1/(n+1))");
  perturb->add_option("--out,-o", pe_out, "write to a file");

  CampaignOptions verify_opt;
  auto* verify = app.add_subcommand("verify", "lambda2 >= 0 property campaign");
  add_campaign_options(verify, verify_opt);

  CampaignOptions explore_opt;
  explore_opt.n = 5;
  auto* explore = app.add_subcommand("explore", "higher-dimension exploration (n >= 5)");
  add_campaign_options(explore, explore_opt);

  unsigned region_res = 0;
  double region_tol = 1e-12;
  std::string region_out;
  auto* region = app.add_subcommand("region", "grid dataset of spectra over the 4x4 family");
  region->add_option("--resolution", region_res, "lattice resolution per parameter")->required();
  region->add_option("--tol", region_tol, "bisection tolerance");
  region->add_option("--out,-o", region_out, "write CSV to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (eig->parsed()) return cmd_eig(eig_params, eig_tol, eig_format, eig_out);
    if (inertia->parsed()) return cmd_inertia(in_params, shift, in_format, in_out);
    if (perturb->parsed()) return cmd_perturb(pe_params, scheme, epsilon, gen_n, pe_out);
    if (verify->parsed()) return run_campaign_command(verify_opt, false);
    if (explore->parsed()) return run_campaign_command(explore_opt, true);
    if (region->parsed()) return cmd_region(region_res, region_tol, region_out);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
