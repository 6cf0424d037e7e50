// Python bindings for the main operations: construction/validation,
// symmetrization, minor sequences and counts, the bisection eigensolver,
// both perturbation schemes, and the campaign runners. Exact rationals cross
// the boundary as "p/q" strings.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tristoch/campaign.hpp"
#include "tristoch/eigen.hpp"
#include "tristoch/io.hpp"
#include "tristoch/perturb.hpp"

namespace py = pybind11;
using namespace tristoch;

namespace {

Rational to_rational(py::handle h) {
  if (py::isinstance<py::str>(h)) return parse_rational(h.cast<std::string>());
  if (py::isinstance<py::bool_>(h)) throw std::invalid_argument("expected a scalar, got bool");
  if (py::isinstance<py::int_>(h)) return Rational(h.cast<long long>());
  if (py::isinstance<py::float_>(h)) return rational_from_double(h.cast<double>());
  throw std::invalid_argument("expected float, int, or 'p/q' string");
}

Params<Rational> exact_params(py::sequence seq) {
  if (py::len(seq) != 6)
    throw std::invalid_argument("expected 6 parameters (alpha,beta,gamma,delta,phi,kappa)");
  std::vector<Rational> vals;
  for (auto item : seq) vals.push_back(to_rational(item));
  return params_from_row(vals);
}

Params<double> float_params(py::sequence seq) { return to_double(exact_params(seq)); }

py::object json_to_py(const Json& j) {
  switch (j.type()) {
    case Json::value_t::object: {
      py::dict d;
      for (const auto& [key, value] : j.items()) d[py::str(key)] = json_to_py(value);
      return d;
    }
    case Json::value_t::array: {
      py::list l;
      for (const auto& item : j) l.append(json_to_py(item));
      return l;
    }
    case Json::value_t::string: return py::str(j.get<std::string>());
    case Json::value_t::boolean: return py::bool_(j.get<bool>());
    case Json::value_t::number_integer: return py::int_(j.get<long long>());
    case Json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
    case Json::value_t::number_float: return py::float_(j.get<double>());
    default: return py::none();
  }
}

std::vector<std::string> rationals_as_strings(const std::vector<Rational>& vals) {
  std::vector<std::string> out;
  out.reserve(vals.size());
  for (const auto& v : vals) out.push_back(format_rational(v));
  return out;
}

CampaignConfig make_config(std::size_t n, std::size_t samples, std::uint64_t seed,
                           const std::string& sampler, double tol, const std::string& mode,
                           unsigned resolution, unsigned threads) {
  CampaignConfig cfg;
  cfg.n = n;
  cfg.samples = samples;
  cfg.seed = seed;
  cfg.sampler = sampler_from_string(sampler);
  cfg.tol = tol;
  cfg.mode = mode_from_string(mode);
  cfg.grid_resolution = resolution;
  cfg.threads = threads;
  return cfg;
}

}  // namespace

PYBIND11_MODULE(tristoch, m) {
  m.doc() = "Spectral analysis of tridiagonal stochastic matrices: symmetrization, "
            "minor-based inertia counts, a Sturm-bisection eigensolver with an exact "
            "rational oracle, perturbation schemes, and property-verification campaigns.";

  py::register_exception<std::invalid_argument>(m, "InvalidInput", PyExc_ValueError);

  m.def(
      "matrix",
      [](py::sequence params) {
        const auto t = from_params(float_params(params));
        py::dict d;
        d["n"] = t.n;
        d["diag"] = t.diag;
        d["super"] = t.super;
        d["sub"] = t.sub;
        return d;
      },
      py::arg("params"), "Bands of the 4x4 chain for (alpha,beta,gamma,delta,phi,kappa).");

  m.def(
      "validate_params",
      [](py::sequence params) { return param_violations(exact_params(params)); },
      py::arg("params"), "Violated parameter inequalities by name; empty means admissible.");

  m.def(
      "is_irreducible",
      [](py::sequence params) { return is_irreducible(from_params(exact_params(params))); },
      py::arg("params"));

  m.def(
      "irreducible_blocks",
      [](py::sequence params) {
        std::vector<std::pair<std::size_t, std::size_t>> out;
        for (const auto& b : irreducible_blocks(from_params(exact_params(params))))
          out.emplace_back(b.begin, b.end);
        return out;
      },
      py::arg("params"), "Half-open unreduced index blocks.");

  m.def(
      "symmetrize",
      [](py::sequence params) {
        const auto s = symmetrize(from_params(float_params(params)));
        return py::make_tuple(s.diag, s.off);
      },
      py::arg("params"), "(diag, off) of the spectrum-equal symmetric chain.");

  m.def(
      "off_squared",
      [](py::sequence params) {
        return rationals_as_strings(off_squared(from_params(exact_params(params))));
      },
      py::arg("params"), "Exact coupling products super[i]*sub[i] as p/q strings.");

  m.def(
      "eigenvalues",
      [](py::sequence params, double tol) {
        return eigenvalues(symmetrize(from_params(float_params(params))), tol).eigenvalues;
      },
      py::arg("params"), py::arg("tol") = 1e-12,
      "All eigenvalues, descending, isolated to the given tolerance.");

  m.def(
      "eigenvalues_tridiag",
      [](std::vector<double> diag, std::vector<double> super, std::vector<double> sub,
         double tol) {
        Tridiag<double> t{diag.size(), std::move(diag), std::move(super), std::move(sub)};
        const auto report = validate(t);
        if (!report.empty())
          throw std::invalid_argument(report[0].message + " at " + report[0].location);
        return eigenvalues(symmetrize(t), tol).eigenvalues;
      },
      py::arg("diag"), py::arg("super"), py::arg("sub"), py::arg("tol") = 1e-12,
      "Spectrum of a general n x n tridiagonal stochastic chain given as bands.");

  m.def(
      "lambda2",
      [](py::sequence params, double tol) { return lambda2(float_params(params), tol); },
      py::arg("params"), py::arg("tol") = 1e-12);

  m.def(
      "spectral_gap",
      [](py::sequence params, double tol) { return spectral_gap(float_params(params), tol); },
      py::arg("params"), py::arg("tol") = 1e-12);

  m.def(
      "minor_sequence",
      [](py::sequence params, py::handle shift) {
        const auto seq =
            minor_sequence(from_params(exact_params(params)), to_rational(shift));
        return rationals_as_strings(seq.values);
      },
      py::arg("params"), py::arg("shift") = py::int_(0),
      "Exact leading principal minors D0..D4 of the shifted symmetrization.");

  m.def(
      "inertia",
      [](py::sequence params, py::handle shift) {
        const auto m4 = from_params(exact_params(params));
        const auto x = to_rational(shift);
        return json_to_py(to_json(inertia_report(m4, x), count_below(m4, x)));
      },
      py::arg("params"), py::arg("shift") = py::int_(0),
      "Minor sequence, sign changes (or 'non-generic'), and the exact count below the shift.");

  m.def(
      "count_below",
      [](py::sequence params, py::handle x) {
        return count_below(from_params(exact_params(params)), to_rational(x));
      },
      py::arg("params"), py::arg("x"),
      "Exact number of eigenvalues strictly below x (bias-up at exact eigenvalues).");

  m.def(
      "count_below_float",
      [](py::sequence params, double x) {
        return count_below(from_params(float_params(params)), x);
      },
      py::arg("params"), py::arg("x"), "LDL pivot count on the float symmetrization.");

  m.def(
      "verify_sign_lemma",
      [](py::sequence params) { return verify_sign_lemma(exact_params(params)); },
      py::arg("params"),
      "Exact check of the minor sign implications (D2<=0 => D3<=0; D3<=0 & D2>=0 => D4<=0).");

  m.def(
      "at_most_two_negative",
      [](py::sequence params) { return at_most_two_negative(exact_params(params)); },
      py::arg("params"));

  m.def(
      "mix",
      [](py::sequence params, py::handle epsilon) {
        return json_to_py(to_json(mix(exact_params(params), to_rational(epsilon))));
      },
      py::arg("params"), py::arg("epsilon"),
      "Exact mixing trace toward an irreducible chain; entries move at most epsilon.");

  m.def(
      "genericize",
      [](py::sequence params, unsigned n) {
        return json_to_py(to_json(genericize(exact_params(params), n)));
      },
      py::arg("params"), py::arg("n"),
      "Perturb within 1/(n+1) so all four minors are nonzero, certified exactly.");

  m.def(
      "cross_check",
      [](py::sequence params) { return json_to_py(to_json(cross_check(exact_params(params)))); },
      py::arg("params"), "Negative-count agreement record across the three routes.");

  m.def(
      "run_campaign",
      [](std::size_t n, std::size_t samples, std::uint64_t seed, const std::string& sampler,
         double tol, const std::string& mode, unsigned resolution, unsigned threads,
         bool timing) {
        const auto rep =
            run_campaign(make_config(n, samples, seed, sampler, tol, mode, resolution, threads));
        return json_to_py(to_json(rep, timing));
      },
      py::arg("n") = 4, py::arg("samples") = 1000, py::arg("seed") = 0,
      py::arg("sampler") = "uniform", py::arg("tol") = 1e-9, py::arg("mode") = "float",
      py::arg("resolution") = 0, py::arg("threads") = 0, py::arg("timing") = false,
      "Property campaign report; violations list samples with lambda2 < -tol.");

  m.def(
      "explore",
      [](std::size_t n, std::size_t samples, std::uint64_t seed, const std::string& sampler,
         double tol, const std::string& mode, unsigned resolution, unsigned threads,
         bool timing) {
        const auto rep =
            explore_higher(make_config(n, samples, seed, sampler, tol, mode, resolution, threads));
        return json_to_py(to_json(rep, timing));
      },
      py::arg("n") = 5, py::arg("samples") = 1000, py::arg("seed") = 0,
      py::arg("sampler") = "uniform", py::arg("tol") = 1e-9, py::arg("mode") = "float",
      py::arg("resolution") = 0, py::arg("threads") = 0, py::arg("timing") = false,
      "Findings report for n >= 5 (no sign contract).");

  m.def(
      "sample_row_params",
      [](std::size_t n, const std::string& sampler, std::uint64_t seed, std::uint64_t index,
         unsigned resolution) {
        return rationals_as_strings(
            sample_row_params(n, sampler_from_string(sampler), seed, index, resolution));
      },
      py::arg("n") = 4, py::arg("sampler") = "uniform", py::arg("seed") = 0, py::arg("index") = 0,
      py::arg("resolution") = 0, "Exact chain parameters of a campaign sample, for reproducers.");

  m.def("grid_point_count",
        [](std::size_t n, unsigned resolution) { return grid_point_count(n, resolution); },
        py::arg("n"), py::arg("resolution"));

#ifdef TRISTOCH_VERSION
  m.attr("__version__") = TRISTOCH_VERSION;
#else
  m.attr("__version__") = "dev";
#endif
}
