#include "tristoch/campaign.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "tristoch/eigen.hpp"
#include "tristoch/inertia.hpp"

namespace tristoch {

namespace {

struct SampleResult {
  double lambda2 = 0.0;
  int neg_count = 0;
  bool irreducible = false;
  std::vector<double> eigenvalues;  // kept only when streaming CSV
};

unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("TRISTOCH_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return 1;
}

std::string format_g17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

CampaignReport run_pipeline(const CampaignConfig& cfg, std::ostream* csv) {
  if (cfg.samples < 1) throw std::invalid_argument("sample_count must be at least 1");
  if (cfg.n < 2) throw std::invalid_argument("chain dimension must be at least 2");
  if (cfg.sampler == SamplerKind::grid && cfg.grid_resolution == 0)
    throw std::invalid_argument("grid sampler requires a resolution");

  const auto t0 = std::chrono::steady_clock::now();

  std::size_t samples = cfg.samples;
  if (cfg.sampler == SamplerKind::grid)
    samples = std::min(samples, grid_point_count(cfg.n, cfg.grid_resolution));

  // the verification tolerance drives the solver tolerance, with headroom
  const double solver_tol = std::max(kMinEigenTol, cfg.tol / 16.0);
  const bool exact_counts = cfg.mode != NumericMode::float_only;
  const bool keep_eigs = csv != nullptr;

  std::vector<SampleResult> results(samples);
  auto worker = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      const auto rp = sample_row_params(cfg.n, cfg.sampler, cfg.seed, i, cfg.grid_resolution);
      const auto exact = from_row_params(cfg.n, rp);
      const auto m = to_double(exact);
      const auto spec = eigenvalues(symmetrize(m), solver_tol);
      SampleResult& r = results[i];
      r.lambda2 = spec.eigenvalues[1];
      r.irreducible = is_irreducible(exact);
      r.neg_count = exact_counts ? count_below(exact, Rational(0)) : count_below(m, 0.0);
      if (keep_eigs) r.eigenvalues = spec.eigenvalues;
    }
  };

  const unsigned threads = std::min<unsigned>(resolve_threads(cfg.threads),
                                              static_cast<unsigned>(samples));
  if (threads <= 1) {
    worker(0, samples);
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (samples + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::size_t lo = t * chunk;
      if (lo >= samples) break;
      pool.emplace_back(worker, lo, std::min(samples, lo + chunk));
    }
    for (auto& th : pool) th.join();
  }

  // merge by index
  CampaignReport rep;
  rep.config = cfg;
  rep.samples_run = samples;
  rep.min_lambda2 = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < samples; ++i) {
    const SampleResult& r = results[i];
    if (r.lambda2 < rep.min_lambda2) {
      rep.min_lambda2 = r.lambda2;
      rep.min_lambda2_index = i;
    }
    ++rep.negative_count_histogram[r.neg_count];
    if (r.lambda2 < -cfg.tol)
      rep.violations.push_back(
          {i, sample_row_params(cfg.n, cfg.sampler, cfg.seed, i, cfg.grid_resolution),
           r.lambda2});
  }
  rep.min_lambda2_params =
      sample_row_params(cfg.n, cfg.sampler, cfg.seed, rep.min_lambda2_index, cfg.grid_resolution);

  if (csv) {
    *csv << "index";
    for (std::size_t j = 0; j < 2 * cfg.n - 2; ++j) *csv << ",p" << j;
    for (std::size_t j = 1; j <= cfg.n; ++j) *csv << ",lambda" << j;
    *csv << ",neg_count,irreducible\n";
    for (std::size_t i = 0; i < samples; ++i) {
      const auto rp = sample_row_params(cfg.n, cfg.sampler, cfg.seed, i, cfg.grid_resolution);
      *csv << i;
      for (const auto& v : rp) *csv << ',' << format_g17(to_double(v));
      for (double ev : results[i].eigenvalues) *csv << ',' << format_g17(ev);
      *csv << ',' << results[i].neg_count << ',' << (results[i].irreducible ? 1 : 0) << '\n';
    }
  }

  rep.timing_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace

CampaignReport run_campaign(const CampaignConfig& cfg, std::ostream* csv) {
  return run_pipeline(cfg, csv);
}

CampaignReport explore_higher(const CampaignConfig& cfg, std::ostream* csv) {
  if (cfg.n < 5) throw std::invalid_argument("explore_higher requires dimension n >= 5");
  return run_pipeline(cfg, csv);
}

CrossCheckRecord cross_check(const Params<Rational>& p) {
  CrossCheckRecord rec;
  rec.params = p;
  const auto exact = from_params(p);

  rec.float_count = count_below(symmetrize(exact), 0.0);
  rec.exact_count_below = count_below(exact, Rational(0));

  // route (b): sign changes need a fully nonvanishing minor sequence
  Params<Rational> q = p;
  auto seq = minor_sequence(from_params(q), Rational(0));
  if (!seq.generic) {
    const unsigned kIndex = (1u << 20) - 1;  // eps = 2^-20, exactly dyadic
    if (!is_irreducible(exact)) {
      q = mix(q, Rational(1, 1u << 20)).perturbed;
      rec.mixed = true;
      seq = minor_sequence(from_params(q), Rational(0));
    }
    if (!seq.generic) {
      q = genericize(q, kIndex).perturbed;
      rec.genericized = true;
      seq = minor_sequence(from_params(q), Rational(0));
    }
  }
  rec.exact_sign_changes = sign_changes(seq);

  rec.agree = rec.float_count == rec.exact_sign_changes &&
              rec.exact_sign_changes == rec.exact_count_below;
  return rec;
}

}  // namespace tristoch
