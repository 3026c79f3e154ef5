#pragma once

#include <compare>

namespace dtdd {

/// Axial coordinates of a hexagonal cluster cell.
struct HexCoord {
  int q = 0;
  int r = 0;
  auto operator<=>(const HexCoord&) const = default;
};

struct Point {
  double x = 0.0;
  double y = 0.0;
};

/// Cell containing p in the tiling by hexagons of apothem rho. Cell (0,0)
/// is centered at the origin and cell (1,0) at (2 rho, 0); cell (0,1) sits
/// at (rho, sqrt(3) rho). Points equidistant from two centers go to the
/// lexicographically smaller coordinate.
HexCoord hex_index(Point p, double rho);

Point hex_center(HexCoord c, double rho);

}  // namespace dtdd
