#pragma once

#include <array>
#include <compare>
#include <utility>

namespace afpoly {

// Axial coordinates on the hexagon-center lattice. Direction d steps to the
// d-th neighbour cell; d and d+3 point at opposite neighbours.
struct Axial {
  int q = 0;
  int r = 0;
  friend auto operator<=>(const Axial&, const Axial&) = default;
};

inline constexpr std::array<Axial, 6> kDirStep = {{
    {1, 0}, {1, -1}, {0, -1}, {-1, 0}, {-1, 1}, {0, 1},
}};

constexpr int opposite(int dir) { return (dir + 3) % 6; }

constexpr Axial step(Axial a, int dir) {
  return {a.q + kDirStep[dir].q, a.r + kDirStep[dir].r};
}

// Two fusion directions on the same hexagon may not sit on adjacent sides,
// otherwise three hexagons would share a vertex.
constexpr bool dirs_adjacent(int a, int b) {
  int d = ((a - b) % 6 + 6) % 6;
  return d == 1 || d == 5;
}

// The twelve point symmetries of the center lattice (six rotations, six
// rotoreflections), acting through cube coordinates (x, y, z) = (q, -q-r, r).
inline Axial apply_symmetry(Axial a, int sym) {
  long x = a.q;
  long z = a.r;
  long y = -x - z;
  if (sym >= 6) {
    std::swap(y, z);
    sym -= 6;
  }
  for (int i = 0; i < sym; ++i) {
    long nx = -y, ny = -z, nz = -x;
    x = nx;
    y = ny;
    z = nz;
  }
  return {static_cast<int>(x), static_cast<int>(z)};
}

// Exact integer plane coordinates for hexagon corners: a cell (q, r) has its
// center at (2q + r, 3r) in half-unit steps, and corners at the six offsets
// below, so corners shared between adjacent cells coincide exactly.
struct Vec2 {
  int x = 0;
  int y = 0;
  friend auto operator<=>(const Vec2&, const Vec2&) = default;
};

inline constexpr std::array<Vec2, 6> kCornerOffset = {{
    {0, 2}, {1, 1}, {1, -1}, {0, -2}, {-1, -1}, {-1, 1},
}};

inline Vec2 cell_center(Axial a) { return {2 * a.q + a.r, 3 * a.r}; }

inline Vec2 cell_corner(Axial a, int k) {
  Vec2 c = cell_center(a);
  return {c.x + kCornerOffset[k].x, c.y + kCornerOffset[k].y};
}

}  // namespace afpoly
