#include "gdq/builtins.hpp"

namespace gdq {
namespace builtins {

namespace {

TriangulationQuiver from_parts(std::vector<std::string> vertices,
                               std::vector<std::array<std::string, 3>> arrows,
                               const std::vector<std::vector<std::string>>& fcycles) {
  Quiver q = Quiver::make(std::move(vertices), std::move(arrows));
  std::vector<int> f(q.arrow_count(), -1);
  for (const auto& cyc : fcycles)
    for (size_t i = 0; i < cyc.size(); ++i)
      f[*q.arrow_index(cyc[i])] = *q.arrow_index(cyc[(i + 1) % cyc.size()]);
  return TriangulationQuiver::create(std::move(q), std::move(f));
}

}  // namespace

SurfaceTriangulation single_triangle_surface() {
  return SurfaceTriangulation::make({"1", "2", "3"}, {{"1", "2", "3"}});
}

TriangulationQuiver single_triangle_quiver() {
  return from_parts({"1", "2", "3"},
                    {{"alpha", "1", "2"},
                     {"beta", "2", "3"},
                     {"gamma", "3", "1"},
                     {"eps", "1", "1"},
                     {"eta", "2", "2"},
                     {"mu", "3", "3"}},
                    {{"alpha", "beta", "gamma"}, {"eps"}, {"eta"}, {"mu"}});
}

Presentation make_single_triangle(int m, Scalar b1, Scalar b2, Scalar b3, Field field) {
  return build_presentation(single_triangle_quiver(), {{"alpha", m}},
                            {{"1", b1}, {"2", b2}, {"3", b3}}, field);
}

SurfaceTriangulation markov_surface() {
  // both triangles carry the same cyclic orientation; opposite orientations
  // would give the single-arrows-both-ways sphere quiver instead
  return SurfaceTriangulation::make({"1", "2", "3"}, {{"1", "2", "3"}, {"1", "2", "3"}});
}

TriangulationQuiver markov_quiver() {
  return from_parts({"1", "2", "3"},
                    {{"alpha1", "1", "2"},
                     {"alpha2", "2", "3"},
                     {"alpha3", "3", "1"},
                     {"beta1", "1", "2"},
                     {"beta2", "2", "3"},
                     {"beta3", "3", "1"}},
                    {{"alpha1", "alpha2", "alpha3"}, {"beta1", "beta2", "beta3"}});
}

Presentation make_markov(int m, Field field) {
  return build_presentation(markov_quiver(), {{"alpha1", m}}, {}, field);
}

SurfaceTriangulation torus_with_disk_surface() {
  return SurfaceTriangulation::make(
      {"1", "2", "3", "4", "5", "6", "7", "8"},
      {{"1", "2", "3"}, {"1", "3", "4"}, {"2", "4", "5"}, {"5", "6", "7"}, {"8", "7", "6"}});
}

TriangulationQuiver torus_with_disk_quiver() {
  return quiver_from_surface(torus_with_disk_surface());
}

Presentation make_torus_with_disk(int m, int n, int p, int q, Scalar b8, Field field) {
  // g-orbits: (bd:8 ...) of length 9, (t3:2>4 ...) of length 3,
  // (t1:3>1 t2:1>3) and (t5:7>6 t4:6>7)
  return build_presentation(
      torus_with_disk_quiver(),
      {{"bd:8", m}, {"t3:2>4", n}, {"t1:3>1", p}, {"t5:7>6", q}},
      {{"8", b8}}, field);
}

SurfaceTriangulation bipyramid_surface(int n) {
  if (n < 2) throw std::invalid_argument("bipyramid needs n >= 2");
  auto name = [](const char* prefix, int i) {
    return std::string(prefix) + std::to_string(i);
  };
  std::vector<std::string> edges;
  std::vector<std::array<std::string, 3>> tris;
  for (int i = 1; i <= n; ++i) {
    edges.push_back(name("a", i));
    edges.push_back(name("c", i));
    edges.push_back(name("d", i));
  }
  for (int i = 1; i <= n; ++i) {
    int j = i % n + 1;
    tris.push_back({name("a", i), name("c", i), name("d", i)});
    tris.push_back({name("d", i), name("c", i), name("a", j)});
  }
  return SurfaceTriangulation::make(std::move(edges), std::move(tris));
}

TriangulationQuiver bipyramid_quiver(int n) {
  return quiver_from_surface(bipyramid_surface(n));
}

Presentation make_bipyramid(int n, int p, int q, Field field) {
  TriangulationQuiver tq = bipyramid_quiver(n);
  std::map<std::string, int> weights;
  weights["t1:a1>c1"] = p;                              // (gamma_i sigma_i ...) orbit
  weights["t" + std::to_string(2 * n) + ":a1>d" + std::to_string(n)] = q;  // (rho delta) orbit
  for (int i = 1; i <= n; ++i)
    weights["t" + std::to_string(2 * i - 1) + ":c" + std::to_string(i) + ">d" +
            std::to_string(i)] = 1;                     // disk internal (xi eta) orbits
  return build_presentation(tq, weights, {}, field);
}

TriangulationQuiver lambda_quiver() {
  return from_parts({"1", "2"},
                    {{"alpha", "1", "1"}, {"beta", "1", "2"}, {"gamma", "2", "1"},
                     {"eta", "2", "2"}},
                    {{"alpha", "beta", "gamma"}, {"eta"}});
}

Presentation make_lambda(int r, int s, Scalar b, Field field) {
  return build_presentation(lambda_quiver(), {{"alpha", r}, {"beta", s}}, {{"2", b}},
                            field);
}

TriangulationQuiver gamma_quiver() {
  return from_parts({"1", "2", "3"},
                    {{"alpha", "1", "1"}, {"beta", "1", "2"}, {"gamma", "2", "1"},
                     {"delta", "2", "3"}, {"eta", "3", "2"}, {"xi", "3", "3"}},
                    {{"alpha", "beta", "gamma"}, {"xi", "eta", "delta"}});
}

Presentation make_gamma(int r, int s, int t, Field field) {
  return build_presentation(gamma_quiver(), {{"alpha", r}, {"beta", s}, {"xi", t}}, {},
                            field);
}

TriangulationQuiver omega_quiver() {
  return from_parts({"1", "2", "3"},
                    {{"alpha1", "1", "2"}, {"alpha2", "2", "3"}, {"alpha3", "3", "1"},
                     {"beta1", "2", "1"}, {"beta2", "3", "2"}, {"beta3", "1", "3"}},
                    {{"alpha1", "alpha2", "alpha3"}, {"beta1", "beta3", "beta2"}});
}

Presentation make_omega(int m1, int m2, int m3, Field field) {
  return build_presentation(omega_quiver(),
                            {{"alpha1", m1}, {"alpha2", m2}, {"alpha3", m3}}, {}, field);
}

}  // namespace builtins
}  // namespace gdq
