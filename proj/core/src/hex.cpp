#include "dtdd/hex.hpp"

#include <cmath>

namespace dtdd {

namespace {
const double kSqrt3 = std::sqrt(3.0);
}

Point hex_center(HexCoord c, double rho) {
  return {rho * (2.0 * c.q + c.r), kSqrt3 * rho * c.r};
}

HexCoord hex_index(Point p, double rho) {
  // Fractional lattice coordinates; the nearest center is a corner of the
  // enclosing lattice parallelogram because its triangles are equilateral.
  const double rf = p.y / (kSqrt3 * rho);
  const double qf = (p.x - rho * rf) / (2.0 * rho);
  const int q0 = static_cast<int>(std::floor(qf));
  const int r0 = static_cast<int>(std::floor(rf));

  HexCoord best{q0, r0};
  double best_d2 = INFINITY;
  for (int dq = 0; dq <= 1; ++dq) {
    for (int dr = 0; dr <= 1; ++dr) {
      const HexCoord c{q0 + dq, r0 + dr};
      const Point ctr = hex_center(c, rho);
      const double d2 = (p.x - ctr.x) * (p.x - ctr.x) + (p.y - ctr.y) * (p.y - ctr.y);
      if (d2 < best_d2 || (d2 == best_d2 && c < best)) {
        best = c;
        best_d2 = d2;
      }
    }
  }
  return best;
}

}  // namespace dtdd
