#pragma once

#include "gdq/presentation.hpp"
#include "gdq/surface.hpp"

namespace gdq {
namespace builtins {

/// One triangle whose three edges all lie on the boundary: three f-fixed
/// loops around an f-3-cycle.
SurfaceTriangulation single_triangle_surface();
TriangulationQuiver single_triangle_quiver();
Presentation make_single_triangle(int m, Scalar b1 = {0, 1}, Scalar b2 = {0, 1},
                                  Scalar b3 = {0, 1}, Field field = Field());

/// Sphere made of two triangles with equal cyclic orientation; its quiver is
/// the Markov quiver (doubled arrows on a 3-cycle, one g-orbit of length 6).
SurfaceTriangulation markov_surface();
TriangulationQuiver markov_quiver();
Presentation make_markov(int m, Field field = Field());

/// Connected sum of a torus and a disk: 8 edges, 5 triangles, border {8}.
/// Carries two 2-triangle disks; g-orbit lengths 9, 3, 2, 2.
SurfaceTriangulation torus_with_disk_surface();
TriangulationQuiver torus_with_disk_quiver();
Presentation make_torus_with_disk(int m, int n, int p, int q, Scalar b8 = {0, 1},
                                  Field field = Field());

/// n-gonal bipyramid triangulation of the sphere (n >= 2): 3n edges, 2n
/// coherently oriented triangles forming n 2-triangle disks in the quiver.
SurfaceTriangulation bipyramid_surface(int n);
TriangulationQuiver bipyramid_quiver(int n);
/// p and q are the weights of the two equatorial g-orbits; the n disk
/// internal orbits all get weight 1.
Presentation make_bipyramid(int n, int p, int q, Field field = Field());

/// The two-vertex template: loop alpha + 2-cycle beta/gamma + border loop
/// eta, f = (alpha beta gamma)(eta).
TriangulationQuiver lambda_quiver();
Presentation make_lambda(int r, int s, Scalar b = {0, 1}, Field field = Field());

/// The three-vertex chain template: loops alpha, xi at the ends, 2-cycles
/// through the middle, f = (alpha beta gamma)(xi eta delta), empty border.
TriangulationQuiver gamma_quiver();
Presentation make_gamma(int r, int s, int t, Field field = Field());

/// The three-vertex template with single arrows both ways around a
/// triangle, f = (alpha1 alpha2 alpha3)(beta1 beta3 beta2).
TriangulationQuiver omega_quiver();
Presentation make_omega(int m1, int m2, int m3, Field field = Field());

}  // namespace builtins
}  // namespace gdq
