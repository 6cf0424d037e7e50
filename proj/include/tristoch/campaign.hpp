#ifndef TRISTOCH_CAMPAIGN_HPP
#define TRISTOCH_CAMPAIGN_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <vector>

#include "tristoch/perturb.hpp"
#include "tristoch/sampling.hpp"

namespace tristoch {

enum class NumericMode { float_only, rational, both };

struct CampaignConfig {
  std::size_t n = 4;
  std::size_t samples = 1000;
  SamplerKind sampler = SamplerKind::uniform;
  std::uint64_t seed = 0;
  double tol = 1e-9;
  NumericMode mode = NumericMode::float_only;
  unsigned grid_resolution = 0;  // grid sampler only
  unsigned threads = 0;          // 0: TRISTOCH_THREADS env var, else 1
};

struct SampleFinding {
  std::size_t index = 0;
  std::vector<Rational> params;
  double lambda2 = 0.0;
};

struct CampaignReport {
  CampaignConfig config;
  std::size_t samples_run = 0;
  double min_lambda2 = 0.0;
  std::size_t min_lambda2_index = 0;
  std::vector<Rational> min_lambda2_params;
  std::vector<SampleFinding> violations;  // lambda2 < -tol
  std::map<int, std::size_t> negative_count_histogram;
  double timing_ms = 0.0;  // excluded from serialized reports by default
};

// Evaluates every sample (matrix build, symmetrize, float spectrum; exact
// negative counts when the mode includes rational) and aggregates
// order-independently. Optional CSV stream receives one row per sample:
// index, params..., lambda1..lambdaN, neg_count, irreducible.
CampaignReport run_campaign(const CampaignConfig& cfg, std::ostream* csv = nullptr);

// Same pipeline at n >= 5; findings (most negative lambda2, count histogram)
// are research output, not failures.
CampaignReport explore_higher(const CampaignConfig& cfg, std::ostream* csv = nullptr);

// Negative-eigenvalue count of the symmetrized chain at 0, three ways.
struct CrossCheckRecord {
  Params<Rational> params;
  int float_count = 0;          // LDL pivot count on the float symmetrization
  int exact_sign_changes = 0;   // minor sign changes, post-genericize if needed
  int exact_count_below = 0;    // exact minor route with the zero-minor convention
  bool agree = false;
  bool genericized = false;     // route (b) needed a genericize step
  bool mixed = false;           // reducible input: mix applied before genericize
};

CrossCheckRecord cross_check(const Params<Rational>& p);

}  // namespace tristoch

#endif
