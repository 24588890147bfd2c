#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "trient/states.hpp"

namespace trient {

enum class MeasureKind {
  SchmidtWeight,
  ConcurrenceSquared,
  NegativitySquared,
  VonNeumann,
  Tsallis,
  Renyi2,
  Impurity,
};

/// Bipartite measure plus the exponent applied when forming triangle sides.
/// Logarithms are base 2 throughout.
struct MeasureSpec {
  MeasureKind kind = MeasureKind::VonNeumann;
  double alpha = 1.0;
  /// Tsallis index, only read when kind == Tsallis.
  double q = 2.0;

  /// Throws ArgumentError if alpha <= 0 or (Tsallis) q < 1.
  void validate() const;
  /// Tsallis with |q - 1| < 1e-6 behaves as von Neumann.
  MeasureKind effective_kind() const;
  MeasureSpec with_alpha(double a) const {
    MeasureSpec s = *this;
    s.alpha = a;
    return s;
  }
};

inline constexpr double kTsallisVonNeumannWindow = 1e-6;

std::string_view to_string(MeasureKind kind);
/// Accepts the canonical names plus short aliases (W, C2, N2, S, T, R, I).
MeasureKind parse_measure_kind(std::string_view name);
std::string describe(const MeasureSpec& spec);

/// The six qubit measures W, C^2, N^2, S, T_q, R at exponent `alpha`.
std::vector<MeasureSpec> qubit_measure_set(double alpha, double tsallis_q = 2.0);

/// Measure of a pure two-qubit state as a function of the smallest reduced
/// eigenvalue. Throws ArgumentError for lambda outside [0, 1/2] (1e-12 slack).
double measure_of_lambda(const MeasureSpec& spec, double lambda);
/// dE/dlambda on (0, 1/2].
double measure_derivative(const MeasureSpec& spec, double lambda);
/// d^2E/dlambda^2 on (0, 1/2].
double measure_second_derivative(const MeasureSpec& spec, double lambda);

/// General-dimension evaluation from the spectrum of a reduced operator.
/// SchmidtWeight on a reduced operator of dimension > 2 throws
/// UnsupportedError.
double measure_of_state(const MeasureSpec& spec, const DensityOperator& rho);
double measure_of_spectrum(const MeasureSpec& spec, const std::vector<double>& spectrum);

/// (E_{A|BC}, E_{B|AC}, E_{C|AB}) before raising to alpha.
struct BipartitionVector {
  std::array<double, 3> values{};
  std::array<char, 3> labels{'A', 'B', 'C'};

  double operator[](std::size_t i) const { return values[i]; }
  /// Entries raised to `alpha` (the triangle sides).
  std::array<double, 3> powered(double alpha) const;
};

/// Throws ArgumentError unless the state has exactly three parties.
BipartitionVector bipartition_vector(const PureState& state, const MeasureSpec& spec);

/// Concurrence (not squared) of each bipartition, sqrt(2 (1 - Tr rho_i^2)).
BipartitionVector concurrence_vector(const PureState& state);

}  // namespace trient
