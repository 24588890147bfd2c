#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "trient/errors.hpp"
#include "trient/gaussian.hpp"
#include "trient/harness.hpp"
#include "trient/hybrid.hpp"
#include "trient/locc.hpp"
#include "trient/random.hpp"
#include "trient/triangle.hpp"

namespace py = pybind11;
using namespace trient;

namespace {

PureState make_state(const CVector& amplitudes, std::vector<int> dims) {
  if (dims.empty()) {
    const auto n = amplitudes.size();
    int q = 0;
    while ((Eigen::Index{1} << q) < n) ++q;
    if ((Eigen::Index{1} << q) != n) throw ArgumentError("amplitude length is not a power of two; pass dims");
    dims.assign(static_cast<std::size_t>(q), 2);
  }
  return PureState(std::move(dims), amplitudes);
}

py::dict triangle_dict(const TriangleReport& t) {
  py::dict d;
  d["sides"] = t.sides;
  d["area"] = t.area;
  d["normalized_area"] = t.normalized_area;
  d["value"] = t.value();
  d["classification"] = std::string(to_string(t.classification));
  d["valid"] = t.valid();
  d["slack"] = t.check.slack;
  d["cosines"] = t.cosines;
  d["lower_bound"] = t.lower_bound;
  d["upper_bound"] = t.upper_bound;
  return d;
}

harness::RunConfig run_config(std::uint64_t seed, std::optional<std::size_t> samples, std::optional<double> alpha,
                              std::optional<std::string> measure, double q, std::optional<double> tolerance,
                              unsigned threads) {
  harness::RunConfig cfg;
  cfg.seed = seed;
  cfg.samples = samples;
  cfg.alpha = alpha;
  if (measure) cfg.measure = parse_measure_kind(*measure);
  cfg.q = q;
  cfg.tolerance = tolerance;
  cfg.threads = threads;
  return cfg;
}

std::string render_json(const harness::Report& r, const harness::RunConfig& cfg) {
  return harness::render(r, cfg, harness::OutputFormat::Json);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Triangle relations and area measures of tripartite entanglement";

  static py::exception<Error> base(m, "TrientError", PyExc_RuntimeError);
  py::register_exception<ArgumentError>(m, "ArgumentError", base.ptr());
  py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
  py::register_exception<UnsupportedError>(m, "UnsupportedError", base.ptr());
  py::register_exception<SingularError>(m, "SingularError", base.ptr());
  py::register_exception<SearchFailed>(m, "SearchFailed", base.ptr());

  py::enum_<MeasureKind>(m, "MeasureKind")
      .value("SchmidtWeight", MeasureKind::SchmidtWeight)
      .value("ConcurrenceSquared", MeasureKind::ConcurrenceSquared)
      .value("NegativitySquared", MeasureKind::NegativitySquared)
      .value("VonNeumann", MeasureKind::VonNeumann)
      .value("Tsallis", MeasureKind::Tsallis)
      .value("Renyi2", MeasureKind::Renyi2)
      .value("Impurity", MeasureKind::Impurity);

  py::class_<MeasureSpec>(m, "MeasureSpec")
      .def(py::init([](MeasureKind kind, double alpha, double q) {
             MeasureSpec s{kind, alpha, q};
             s.validate();
             return s;
           }),
           py::arg("kind"), py::arg("alpha") = 1.0, py::arg("q") = 2.0)
      .def_readonly("kind", &MeasureSpec::kind)
      .def_readonly("alpha", &MeasureSpec::alpha)
      .def_readonly("q", &MeasureSpec::q)
      .def("__repr__", [](const MeasureSpec& s) { return "MeasureSpec(" + describe(s) + ")"; });

  m.def("parse_measure", &parse_measure_kind, py::arg("name"));
  m.def("qubit_measure_set", &qubit_measure_set, py::arg("alpha"), py::arg("q") = 2.0);
  m.def("measure_of_lambda", &measure_of_lambda, py::arg("spec"), py::arg("lam"));

  m.def(
      "local_lambdas",
      [](const CVector& amps, std::vector<int> dims) { return local_lambdas(make_state(amps, std::move(dims))); },
      py::arg("amplitudes"), py::arg("dims") = std::vector<int>{});
  m.def(
      "bipartition_vector",
      [](const CVector& amps, const MeasureSpec& spec, std::vector<int> dims) {
        return bipartition_vector(make_state(amps, std::move(dims)), spec).values;
      },
      py::arg("amplitudes"), py::arg("spec"), py::arg("dims") = std::vector<int>{});
  m.def(
      "triangle_area",
      [](const CVector& amps, const MeasureSpec& spec, bool normalized, std::vector<int> dims) {
        return triangle_dict(triangle_area(make_state(amps, std::move(dims)), spec, normalized));
      },
      py::arg("amplitudes"), py::arg("spec"), py::arg("normalized") = true, py::arg("dims") = std::vector<int>{});
  m.def(
      "triangle_area_sides",
      [](const std::array<double, 3>& sides, bool normalized) { return triangle_dict(triangle_area_sides(sides, normalized)); },
      py::arg("sides"), py::arg("normalized") = false);
  m.def(
      "gmc", [](const CVector& amps) { return gmc(make_state(amps, {})); }, py::arg("amplitudes"));
  m.def(
      "haar_state",
      [](std::vector<int> dims, std::uint64_t seed) {
        Rng rng(seed);
        return CVector(haar_state(dims, rng).amplitudes());
      },
      py::arg("dims"), py::arg("seed"));
  m.def(
      "monotonicity_gap",
      [](const CVector& amps, int party, std::vector<CMatrix> kraus, const MeasureSpec& spec, bool normalized) {
        const MonotonicityGap g = monotonicity_gap(make_state(amps, {}), LocalMeasurement(party, std::move(kraus)), spec, normalized);
        return g.gap;
      },
      py::arg("amplitudes"), py::arg("party"), py::arg("kraus"), py::arg("spec"), py::arg("normalized") = false);

  m.def(
      "random_pure_cm",
      [](std::uint64_t seed) { return random_pure_tripartite_cm({1, 1, 1}, seed).sigma(); }, py::arg("seed"));
  m.def(
      "gaussian_impurity",
      [](const Eigen::MatrixXd& sigma, std::vector<int> parties) {
        return gaussian_impurity(GaussianCovariance({1, 1, 1}, sigma), std::span<const int>(parties));
      },
      py::arg("sigma"), py::arg("parties"));
  m.def(
      "hybrid_impurities",
      [](double alpha1, double alpha2, Complex c0, Complex c1) {
        return hybrid_impurities(HybridState{c0, c1, alpha1, alpha2}).impurity;
      },
      py::arg("alpha1"), py::arg("alpha2"), py::arg("c0") = Complex(1.0 / std::sqrt(2.0)),
      py::arg("c1") = Complex(1.0 / std::sqrt(2.0)));

  // Harness entry points return the same JSON text as the CLI.
  m.def("suite_names", &harness::suite_names);
  m.def(
      "run_suite_json",
      [](const std::string& name, std::uint64_t seed, std::optional<std::size_t> samples, std::optional<double> alpha,
         std::optional<std::string> measure, double q, std::optional<double> tolerance, unsigned threads) {
        const auto cfg = run_config(seed, samples, alpha, measure, q, tolerance, threads);
        py::gil_scoped_release release;
        return render_json(harness::run_suite(name, cfg), cfg);
      },
      py::arg("name"), py::arg("seed") = 1, py::arg("samples") = py::none(), py::arg("alpha") = py::none(),
      py::arg("measure") = py::none(), py::arg("q") = 2.0, py::arg("tolerance") = py::none(), py::arg("threads") = 0);
  m.def("table1_json", [] { return render_json(harness::table1_report(), harness::RunConfig{}); });
  m.def(
      "violations_json",
      [](const std::string& mode, std::optional<double> alpha, std::optional<std::string> measure, double q) {
        const auto cfg = run_config(1, std::nullopt, alpha, measure, q, std::nullopt, 0);
        if (mode == "case1") return render_json(harness::case1_report(cfg), cfg);
        if (mode == "case2") return render_json(harness::case2_report(cfg), cfg);
        if (mode == "case3") return render_json(harness::case3_report(cfg), cfg);
        if (mode == "lemmaS2") return render_json(harness::lemma_s2_report(cfg), cfg);
        throw ArgumentError("unknown mode '" + mode + "'");
      },
      py::arg("mode"), py::arg("alpha") = py::none(), py::arg("measure") = py::none(), py::arg("q") = 2.0);
}
