#include "tristoch/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace tristoch {

std::string format_g17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string trim(std::string s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  return s;
}

ParsedParams params_from_tokens(const std::vector<std::string>& tokens) {
  if (tokens.size() != 6)
    throw std::invalid_argument("expected 6 parameters (alpha,beta,gamma,delta,phi,kappa), got " +
                                std::to_string(tokens.size()));
  ParsedParams out;
  std::vector<Rational> vals;
  for (const auto& t : tokens) {
    const std::string s = trim(t);
    if (s.find('/') != std::string::npos) out.exact = true;
    vals.push_back(parse_rational(s));
  }
  out.value = params_from_row(vals);
  return out;
}

Rational json_scalar(const Json& v, bool& exact) {
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (s.find('/') != std::string::npos) exact = true;
    return parse_rational(s);
  }
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_number()) return rational_from_double(v.get<double>());
  throw std::invalid_argument("parameter values must be numbers or \"p/q\" strings");
}

Json params_json(const Params<Rational>& p, bool exact) {
  static const char* names[] = {"alpha", "beta", "gamma", "delta", "phi", "kappa"};
  const auto row = to_row_params(p);
  Json j = Json::object();
  for (std::size_t i = 0; i < 6; ++i)
    j[names[i]] = exact ? Json(format_rational(row[i])) : Json(to_double(row[i]));
  return j;
}

Json rationals_json(const std::vector<Rational>& vals) {
  Json arr = Json::array();
  for (const auto& v : vals) arr.push_back(format_rational(v));
  return arr;
}

}  // namespace

ParsedParams parse_params_list(const std::string& text) {
  return params_from_tokens(split(text, ','));
}

std::vector<ParsedParams> parse_params_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open parameter file: " + path);

  const bool json_file = path.size() >= 5 && path.substr(path.size() - 5) == ".json";
  if (json_file) {
    Json j = Json::parse(in);
    if (!j.is_object()) throw std::invalid_argument("parameter JSON must be an object");
    ParsedParams out;
    std::vector<Rational> vals;
    for (const char* name : {"alpha", "beta", "gamma", "delta", "phi", "kappa"}) {
      if (!j.contains(name))
        throw std::invalid_argument(std::string("parameter JSON missing \"") + name + "\"");
      vals.push_back(json_scalar(j.at(name), out.exact));
    }
    out.value = params_from_row(vals);
    return {out};
  }

  std::vector<ParsedParams> out;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    if (first && line.find("alpha") != std::string::npos) {
      first = false;
      continue;  // header row
    }
    first = false;
    out.push_back(params_from_tokens(split(line, ',')));
  }
  if (out.empty()) throw std::invalid_argument("no parameter rows in " + path);
  return out;
}

std::string to_string(Scheme s) { return s == Scheme::mix ? "mix" : "genericize"; }

std::string to_string(SamplerKind k) {
  switch (k) {
    case SamplerKind::uniform: return "uniform";
    case SamplerKind::boundary_biased: return "boundary-biased";
    case SamplerKind::grid: return "grid";
  }
  return "uniform";
}

std::string to_string(NumericMode m) {
  switch (m) {
    case NumericMode::float_only: return "float";
    case NumericMode::rational: return "rational";
    case NumericMode::both: return "both";
  }
  return "float";
}

SamplerKind sampler_from_string(const std::string& s) {
  if (s == "uniform") return SamplerKind::uniform;
  if (s == "boundary" || s == "boundary-biased") return SamplerKind::boundary_biased;
  if (s == "grid") return SamplerKind::grid;
  throw std::invalid_argument("unknown sampler: " + s);
}

NumericMode mode_from_string(const std::string& s) {
  if (s == "float") return NumericMode::float_only;
  if (s == "rational") return NumericMode::rational;
  if (s == "both") return NumericMode::both;
  throw std::invalid_argument("unknown numeric mode: " + s);
}

Json to_json(const Spectrum& s) {
  Json j = Json::object();
  Json evs = Json::array();
  for (double ev : s.eigenvalues) evs.push_back(ev);
  j["eigenvalues"] = evs;
  j["lambda2"] = s.eigenvalues.size() > 1 ? Json(s.eigenvalues[1]) : Json();
  j["spectral_gap"] = s.eigenvalues.size() > 1 ? Json(1.0 - s.eigenvalues[1]) : Json();
  j["abs_tolerance"] = s.abs_tolerance;
  Json blocks = Json::array();
  for (const auto& b : s.blocks) blocks.push_back(Json::array({b.begin, b.end}));
  j["blocks"] = blocks;
  return j;
}

namespace {

template <typename T>
Json inertia_json(const InertiaReport<T>& rep, int count_below_shift) {
  Json j = Json::object();
  Json minors = Json::array();
  for (const auto& v : rep.minors.values) {
    if constexpr (std::is_same_v<T, double>)
      minors.push_back(v);
    else
      minors.push_back(format_rational(v));
  }
  j["minors"] = minors;
  if constexpr (std::is_same_v<T, double>)
    j["shift"] = rep.minors.shift;
  else
    j["shift"] = format_rational(rep.minors.shift);
  j["generic"] = rep.minors.generic;
  j["sign_changes"] = rep.sign_change_count ? Json(*rep.sign_change_count) : Json("non-generic");
  j["negative_count"] =
      rep.negative_count ? Json(*rep.negative_count) : Json("indeterminate");
  j["count_below_shift"] = count_below_shift;
  return j;
}

template <typename T>
Json trace_json(const PerturbationTrace<T>& t) {
  Json j = Json::object();
  j["scheme"] = to_string(t.scheme);
  if constexpr (std::is_same_v<T, double>) {
    j["epsilon"] = t.epsilon;
    j["original"] = params_json(
        Params<Rational>{rational_from_double(t.original.alpha), rational_from_double(t.original.beta),
                         rational_from_double(t.original.gamma), rational_from_double(t.original.delta),
                         rational_from_double(t.original.phi), rational_from_double(t.original.kappa)},
        false);
    j["perturbed"] = params_json(
        Params<Rational>{rational_from_double(t.perturbed.alpha), rational_from_double(t.perturbed.beta),
                         rational_from_double(t.perturbed.gamma), rational_from_double(t.perturbed.delta),
                         rational_from_double(t.perturbed.phi), rational_from_double(t.perturbed.kappa)},
        false);
  } else {
    j["epsilon"] = format_rational(t.epsilon);
    j["original"] = params_json(t.original, true);
    j["perturbed"] = params_json(t.perturbed, true);
  }
  j["certificates"] = rationals_json(t.certificates);
  return j;
}

}  // namespace

Json to_json(const InertiaReport<double>& rep, int count_below_shift) {
  return inertia_json(rep, count_below_shift);
}
Json to_json(const InertiaReport<Rational>& rep, int count_below_shift) {
  return inertia_json(rep, count_below_shift);
}
Json to_json(const PerturbationTrace<double>& t) { return trace_json(t); }
Json to_json(const PerturbationTrace<Rational>& t) { return trace_json(t); }

Json to_json(const CampaignReport& rep, bool include_timing) {
  Json j = Json::object();
  Json cfg = Json::object();
  cfg["n"] = rep.config.n;
  cfg["samples"] = rep.config.samples;
  cfg["sampler"] = to_string(rep.config.sampler);
  cfg["seed"] = rep.config.seed;
  cfg["tol"] = rep.config.tol;
  cfg["mode"] = to_string(rep.config.mode);
  if (rep.config.sampler == SamplerKind::grid) cfg["grid_resolution"] = rep.config.grid_resolution;
  j["config"] = cfg;
  j["samples_run"] = rep.samples_run;
  j["min_lambda2"] = rep.min_lambda2;
  j["min_lambda2_index"] = rep.min_lambda2_index;
  j["min_lambda2_params"] = rationals_json(rep.min_lambda2_params);
  Json viols = Json::array();
  for (const auto& v : rep.violations) {
    Json jv = Json::object();
    jv["index"] = v.index;
    jv["params"] = rationals_json(v.params);
    jv["lambda2"] = v.lambda2;
    viols.push_back(jv);
  }
  j["violations"] = viols;
  Json hist = Json::object();
  for (const auto& [count, freq] : rep.negative_count_histogram)
    hist[std::to_string(count)] = freq;
  j["negative_count_histogram"] = hist;
  if (include_timing) j["timing_ms"] = rep.timing_ms;
  return j;
}

Json to_json(const CrossCheckRecord& rec) {
  Json j = Json::object();
  j["params"] = rationals_json(to_row_params(rec.params));
  j["float_count"] = rec.float_count;
  j["exact_sign_changes"] = rec.exact_sign_changes;
  j["exact_count_below"] = rec.exact_count_below;
  j["agree"] = rec.agree;
  j["genericized"] = rec.genericized;
  j["mixed"] = rec.mixed;
  return j;
}

}  // namespace tristoch
