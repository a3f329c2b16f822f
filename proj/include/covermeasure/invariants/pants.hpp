#pragma once

#include <array>

namespace covermeasure {

/// Boundary lengths of a hyperbolic pair of pants. Boundary 3 carries the
/// separating orthogeodesic.
struct PantsBoundary {
  double l1 = 0, l2 = 0, l3 = 0;

  PantsBoundary() = default;
  PantsBoundary(double a, double b, double c);
};

/// Idealized boundary of a thickened dumbbell with loops x, y and bar z:
/// (x, y, x + y + 2z).
PantsBoundary pants_boundary_from_dumbbell(double x, double y, double z);

/// Length of the simple orthogeodesic from boundary 3 to itself separating
/// boundaries 1 and 2, from the right-angled hexagon decomposition.
double separating_orthogeodesic_length(const PantsBoundary& b);

/// 2 arcosh(|tr|/2) for a hyperbolic element of SL(2,R).
double translation_length(const std::array<std::array<double, 2>, 2>& m);

/// Same quantity as separating_orthogeodesic_length, computed from an
/// explicit pants group <A, B> in SL(2,R): the distance between the axes
/// of AB and BA. Throws Error(InfeasibleGeometry) if the trace conditions
/// cannot be realized numerically.
double matrix_pants_oracle(const PantsBoundary& b);

}  // namespace covermeasure
