#include "trient/measures.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <sstream>

#include "trient/errors.hpp"

namespace trient {

namespace {

constexpr double kLambdaSlack = 1e-12;

double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

double check_lambda(double lambda) {
  if (!(lambda >= -kLambdaSlack && lambda <= 0.5 + kLambdaSlack)) {
    throw ArgumentError("lambda must lie in [0, 1/2], got " + std::to_string(lambda));
  }
  return std::clamp(lambda, 0.0, 0.5);
}

double check_interior_lambda(double lambda) {
  if (!(lambda > 0.0 && lambda <= 0.5 + kLambdaSlack)) {
    throw ArgumentError("derivatives need lambda in (0, 1/2], got " + std::to_string(lambda));
  }
  return std::min(lambda, 0.5);
}

}  // namespace

void MeasureSpec::validate() const {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw ArgumentError("alpha must be positive, got " + std::to_string(alpha));
  }
  if (kind == MeasureKind::Tsallis && !(q >= 1.0)) {
    throw ArgumentError("Tsallis index q must be >= 1, got " + std::to_string(q));
  }
}

MeasureKind MeasureSpec::effective_kind() const {
  if (kind == MeasureKind::Tsallis && std::abs(q - 1.0) < kTsallisVonNeumannWindow) {
    return MeasureKind::VonNeumann;
  }
  return kind;
}

std::string_view to_string(MeasureKind kind) {
  switch (kind) {
    case MeasureKind::SchmidtWeight: return "schmidt-weight";
    case MeasureKind::ConcurrenceSquared: return "concurrence-squared";
    case MeasureKind::NegativitySquared: return "negativity-squared";
    case MeasureKind::VonNeumann: return "von-neumann";
    case MeasureKind::Tsallis: return "tsallis";
    case MeasureKind::Renyi2: return "renyi2";
    case MeasureKind::Impurity: return "impurity";
  }
  return "unknown";
}

MeasureKind parse_measure_kind(std::string_view name) {
  std::string key;
  for (char c : name) key.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  std::replace(key.begin(), key.end(), '_', '-');
  if (key == "schmidt-weight" || key == "w" || key == "schmidt") return MeasureKind::SchmidtWeight;
  if (key == "concurrence-squared" || key == "c2") return MeasureKind::ConcurrenceSquared;
  if (key == "negativity-squared" || key == "n2") return MeasureKind::NegativitySquared;
  if (key == "von-neumann" || key == "s" || key == "vn" || key == "entropy") return MeasureKind::VonNeumann;
  if (key == "tsallis" || key == "t") return MeasureKind::Tsallis;
  if (key == "renyi2" || key == "renyi-2" || key == "r") return MeasureKind::Renyi2;
  if (key == "impurity" || key == "i" || key == "linear-entropy") return MeasureKind::Impurity;
  throw ArgumentError("unknown measure '" + std::string(name) + "'");
}

std::string describe(const MeasureSpec& spec) {
  std::ostringstream os;
  os << to_string(spec.kind);
  if (spec.kind == MeasureKind::Tsallis) os << "(q=" << spec.q << ")";
  os << "^" << spec.alpha;
  return os.str();
}

std::vector<MeasureSpec> qubit_measure_set(double alpha, double tsallis_q) {
  return {
      {MeasureKind::SchmidtWeight, alpha},     {MeasureKind::ConcurrenceSquared, alpha},
      {MeasureKind::NegativitySquared, alpha}, {MeasureKind::VonNeumann, alpha},
      {MeasureKind::Tsallis, alpha, tsallis_q}, {MeasureKind::Renyi2, alpha},
  };
}

double measure_of_lambda(const MeasureSpec& spec, double lambda) {
  spec.validate();
  const double l = check_lambda(lambda);
  const double m = 1.0 - l;
  switch (spec.effective_kind()) {
    case MeasureKind::SchmidtWeight: return 2.0 * l;
    case MeasureKind::ConcurrenceSquared:
    case MeasureKind::NegativitySquared: return 4.0 * l * m;
    case MeasureKind::Impurity: return 2.0 * l * m;
    case MeasureKind::VonNeumann: return -xlog2x(l) - xlog2x(m);
    case MeasureKind::Tsallis: return (1.0 - std::pow(l, spec.q) - std::pow(m, spec.q)) / (spec.q - 1.0);
    case MeasureKind::Renyi2: return -std::log2(l * l + m * m);
  }
  return 0.0;
}

double measure_derivative(const MeasureSpec& spec, double lambda) {
  spec.validate();
  const double l = check_interior_lambda(lambda);
  const double m = 1.0 - l;
  switch (spec.effective_kind()) {
    case MeasureKind::SchmidtWeight: return 2.0;
    case MeasureKind::ConcurrenceSquared:
    case MeasureKind::NegativitySquared: return 4.0 - 8.0 * l;
    case MeasureKind::Impurity: return 2.0 - 4.0 * l;
    case MeasureKind::VonNeumann: return std::log2(m / l);
    case MeasureKind::Tsallis:
      return spec.q * (std::pow(m, spec.q - 1.0) - std::pow(l, spec.q - 1.0)) / (spec.q - 1.0);
    case MeasureKind::Renyi2: {
      const double p = l * l + m * m;
      return 2.0 * (1.0 - 2.0 * l) / (p * std::numbers::ln2);
    }
  }
  return 0.0;
}

double measure_second_derivative(const MeasureSpec& spec, double lambda) {
  spec.validate();
  const double l = check_interior_lambda(lambda);
  const double m = 1.0 - l;
  switch (spec.effective_kind()) {
    case MeasureKind::SchmidtWeight: return 0.0;
    case MeasureKind::ConcurrenceSquared:
    case MeasureKind::NegativitySquared: return -8.0;
    case MeasureKind::Impurity: return -4.0;
    case MeasureKind::VonNeumann: return -1.0 / (std::numbers::ln2 * l * m);
    case MeasureKind::Tsallis: return -spec.q * (std::pow(l, spec.q - 2.0) + std::pow(m, spec.q - 2.0));
    case MeasureKind::Renyi2: {
      const double p = l * l + m * m;
      return -8.0 * l * m / (p * p * std::numbers::ln2);
    }
  }
  return 0.0;
}

double measure_of_spectrum(const MeasureSpec& spec, const std::vector<double>& spectrum) {
  spec.validate();
  if (spectrum.empty()) throw ArgumentError("empty spectrum");
  double sum_sq = 0.0, entropy = 0.0, sum_sqrt = 0.0, sum_q = 0.0;
  for (double v : spectrum) {
    const double x = std::clamp(v, 0.0, 1.0);
    sum_sq += x * x;
    entropy -= xlog2x(x);
    sum_sqrt += std::sqrt(x);
    if (spec.kind == MeasureKind::Tsallis) sum_q += std::pow(x, spec.q);
  }
  switch (spec.effective_kind()) {
    case MeasureKind::SchmidtWeight:
      if (spectrum.size() != 2) {
        throw UnsupportedError("Schmidt weight is defined for two Schmidt coefficients only");
      }
      return 2.0 * std::min({spectrum[0], spectrum[1], 0.5});
    case MeasureKind::ConcurrenceSquared: return std::max(0.0, 2.0 * (1.0 - sum_sq));
    case MeasureKind::NegativitySquared: {
      // Pure-state negativity ||rho^T_B||_1 - 1 = (sum sqrt(lambda))^2 - 1.
      const double n = std::max(0.0, sum_sqrt * sum_sqrt - 1.0);
      return n * n;
    }
    case MeasureKind::Impurity: return std::max(0.0, 1.0 - sum_sq);
    case MeasureKind::VonNeumann: return std::max(0.0, entropy);
    case MeasureKind::Tsallis: return std::max(0.0, (1.0 - sum_q) / (spec.q - 1.0));
    case MeasureKind::Renyi2: return std::max(0.0, -std::log2(sum_sq));
  }
  return 0.0;
}

double measure_of_state(const MeasureSpec& spec, const DensityOperator& rho) {
  return measure_of_spectrum(spec, eigen_spectrum(rho).spectrum);
}

std::array<double, 3> BipartitionVector::powered(double alpha) const {
  return {std::pow(values[0], alpha), std::pow(values[1], alpha), std::pow(values[2], alpha)};
}

BipartitionVector bipartition_vector(const PureState& state, const MeasureSpec& spec) {
  if (state.num_parties() != 3) {
    throw ArgumentError("bipartition_vector needs exactly three parties, got " +
                        std::to_string(state.num_parties()));
  }
  BipartitionVector v;
  for (int p = 0; p < 3; ++p) {
    // E_{p|rest} is fixed by the single-party marginal of a pure state.
    v.values[static_cast<std::size_t>(p)] = measure_of_state(spec, partial_trace(state, {p}));
  }
  return v;
}

BipartitionVector concurrence_vector(const PureState& state) {
  BipartitionVector v = bipartition_vector(state, {MeasureKind::ConcurrenceSquared, 1.0});
  for (double& x : v.values) x = std::sqrt(x);
  return v;
}

}  // namespace trient
