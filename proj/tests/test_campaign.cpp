#include "doctest.h"

#include <sstream>

#include "oracle.hpp"
#include "tristoch/campaign.hpp"
#include "tristoch/io.hpp"

using namespace tristoch;

TEST_SUITE("campaign") {

TEST_CASE("identical configs give byte-identical reports") {
  CampaignConfig cfg;
  cfg.samples = 300;
  cfg.seed = 71;
  const auto a = to_json(run_campaign(cfg)).dump(2);
  const auto b = to_json(run_campaign(cfg)).dump(2);
  CHECK(a == b);
}

TEST_CASE("n=4 uniform campaign has no violations") {
  CampaignConfig cfg;
  cfg.samples = 1000;
  cfg.seed = 72;
  const auto rep = run_campaign(cfg);
  CHECK(rep.samples_run == 1000);
  CHECK(rep.violations.empty());
  CHECK(rep.min_lambda2 >= -1e-9);
  CHECK(rep.min_lambda2_params.size() == 6);
}

TEST_CASE("exact mode histogram only contains counts 0..2") {
  CampaignConfig cfg;
  cfg.samples = 100;
  cfg.seed = 73;
  cfg.mode = NumericMode::rational;
  const auto rep = run_campaign(cfg);
  std::size_t total = 0;
  for (const auto& [count, freq] : rep.negative_count_histogram) {
    CHECK(count >= 0);
    CHECK(count <= 2);
    total += freq;
  }
  CHECK(total == 100);
}

TEST_CASE("boundary-biased campaigns cover reducible chains without violations") {
  CampaignConfig cfg;
  cfg.samples = 500;
  cfg.seed = 74;
  cfg.sampler = SamplerKind::boundary_biased;
  const auto rep = run_campaign(cfg);
  CHECK(rep.violations.empty());
  int reducible = 0;
  for (std::uint64_t i = 0; i < cfg.samples; ++i)
    if (!is_irreducible(from_params(sample_params(cfg.sampler, cfg.seed, i)))) ++reducible;
  CHECK(reducible > 0);
}

TEST_CASE("multithreaded run merges to the same report") {
  CampaignConfig cfg;
  cfg.samples = 400;
  cfg.seed = 75;
  const auto serial = to_json(run_campaign(cfg)).dump();
  cfg.threads = 4;
  const auto parallel = to_json(run_campaign(cfg)).dump();
  CHECK(serial == parallel);
}

TEST_CASE("explore_higher requires n >= 5 and reports findings") {
  CampaignConfig cfg;
  cfg.n = 4;
  CHECK_THROWS_AS(explore_higher(cfg), std::invalid_argument);

  cfg.n = 5;
  cfg.samples = 500;
  cfg.seed = 76;
  const auto rep = explore_higher(cfg);
  CHECK(rep.samples_run == 500);
  CHECK(rep.min_lambda2_params.size() == 8);
  std::size_t total = 0;
  for (const auto& [count, freq] : rep.negative_count_histogram) total += freq;
  CHECK(total == 500);
  CHECK(rep.min_lambda2 <= 1.0);
}

TEST_CASE("grid campaign caps samples at the lattice size") {
  CampaignConfig cfg;
  cfg.sampler = SamplerKind::grid;
  cfg.grid_resolution = 2;
  cfg.samples = 100000;
  const auto rep = run_campaign(cfg);
  CHECK(rep.samples_run == grid_point_count(4, 2));
  CHECK(rep.violations.empty());
}

TEST_CASE("csv streaming emits one row per sample") {
  CampaignConfig cfg;
  cfg.samples = 25;
  cfg.seed = 77;
  std::ostringstream csv;
  run_campaign(cfg, &csv);
  const std::string text = csv.str();
  std::size_t lines = 0;
  for (char c : text) lines += c == '\n';
  CHECK(lines == 26);  // header + rows
  CHECK(text.rfind("index,p0,p1,p2,p3,p4,p5,lambda1,lambda2,lambda3,lambda4,neg_count,irreducible",
                   0) == 0);
}

TEST_CASE("cross_check on the identity") {
  const auto rec = cross_check(Params<Rational>{1, 0, 1, 0, 1, 1});
  CHECK(rec.float_count == 0);
  CHECK(rec.exact_sign_changes == 0);
  CHECK(rec.exact_count_below == 0);
  CHECK(rec.agree);
  CHECK_FALSE(rec.genericized);
}

TEST_CASE("cross_check against the root-counting oracle on logged tuples") {
  for (std::uint64_t i = 0; i < 10; ++i) {
    const auto p = sample_params(SamplerKind::uniform, 78, i);
    const auto rec = cross_check(p);
    CHECK(rec.agree);
    CHECK(rec.exact_count_below == oracle::negative_eigenvalue_count(from_params(p)));
  }
}

TEST_CASE("cross_check routes vanishing-minor tuples through genericize") {
  const Params<Rational> star{Rational(1, 2), Rational(1, 4), Rational(1, 4),
                              Rational(1, 4), Rational(1, 4), Rational(1, 2)};
  const auto rec = cross_check(star);
  CHECK(rec.genericized);
  CHECK(rec.agree);
  CHECK(rec.exact_count_below == 1);
}

TEST_CASE("invalid configs are rejected") {
  CampaignConfig cfg;
  cfg.samples = 0;
  CHECK_THROWS_AS(run_campaign(cfg), std::invalid_argument);
  cfg.samples = 10;
  cfg.sampler = SamplerKind::grid;
  cfg.grid_resolution = 0;
  CHECK_THROWS_AS(run_campaign(cfg), std::invalid_argument);
}

}  // TEST_SUITE
