#ifndef TRISTOCH_IO_HPP
#define TRISTOCH_IO_HPP

#include <string>
#include <vector>

#include "json.hpp"

#include "tristoch/campaign.hpp"
#include "tristoch/eigen.hpp"
#include "tristoch/inertia.hpp"
#include "tristoch/perturb.hpp"

namespace tristoch {

using Json = nlohmann::ordered_json;

// %.17g -- round-trip faithful and byte-stable
std::string format_g17(double x);

// Parameter tuple parsed to exact rationals; `exact` records whether any
// token used p/q syntax (switches an invocation to exact mode).
struct ParsedParams {
  Params<Rational> value;
  bool exact = false;
};

// "a,b,c,d,e,f" with decimal or p/q entries
ParsedParams parse_params_list(const std::string& text);

// JSON object {"alpha": .., ...} (numbers or "p/q" strings), or CSV rows
// alpha,beta,gamma,delta,phi,kappa (optional header). JSON yields one tuple,
// CSV one per row.
std::vector<ParsedParams> parse_params_file(const std::string& path);

std::string to_string(Scheme s);
std::string to_string(SamplerKind k);
std::string to_string(NumericMode m);
SamplerKind sampler_from_string(const std::string& s);
NumericMode mode_from_string(const std::string& s);

Json to_json(const Spectrum& s);
Json to_json(const InertiaReport<double>& rep, int count_below_shift);
Json to_json(const InertiaReport<Rational>& rep, int count_below_shift);
Json to_json(const PerturbationTrace<double>& t);
Json to_json(const PerturbationTrace<Rational>& t);
Json to_json(const CampaignReport& rep, bool include_timing = false);
Json to_json(const CrossCheckRecord& rec);

}  // namespace tristoch

#endif
