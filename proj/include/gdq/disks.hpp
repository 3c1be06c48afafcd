#pragma once

#include "gdq/presentation.hpp"

#include <map>
#include <string>
#include <vector>

namespace gdq {

/// Two f-3-cycles glued along a 2-cycle c <-> d, with rim vertices a, b:
///   (theta eps mu): a -> c -> d -> a      (sigma rho xi): c -> b -> d -> c
/// a, b, c, d are four distinct vertices; the disk need not be a full
/// subquiver.  Canonical orientation: eps has the smaller id of {eps, xi}.
struct TwoTriangleDisk {
  int a, b, c, d;
  int theta, eps, mu;
  int sigma, rho, xi;

  std::vector<int> arrows() const { return {theta, eps, mu, sigma, rho, xi}; }
  bool operator==(const TwoTriangleDisk&) const = default;
};

/// All 2-triangle disks, sorted by the id of their eps arrow.
std::vector<TwoTriangleDisk> find_disks(const Presentation& p);
std::vector<TwoTriangleDisk> find_disks(const TriangulationQuiver& tq);

/// Pairwise disjoint on 2-cycle vertices; rim sharing is allowed.
struct DiskFamily {
  std::vector<TwoTriangleDisk> disks;

  static DiskFamily make(std::vector<TwoTriangleDisk> disks, const Presentation& p);
  /// Vertices kept by the idempotent e_Sigma.
  std::vector<int> surviving_vertices(const Quiver& q) const;
};

/// The idempotent algebra e_Sigma B e_Sigma: drops the 2-cycle vertices of
/// every disk and replaces each disk by the composite 2-cycle
///   "via(c,d):a>b" = theta sigma,   "via(d,c):b>a" = rho mu
/// with an f'-2-cycle (so both composites square to zero).  Surviving
/// g'-orbits keep the weight of the orbit they came from; the disk-internal
/// (eps xi) orbits disappear.  Requires p without f'-2-cycles and every disk
/// present and c,d-disjoint.
Presentation contract(const Presentation& p, const DiskFamily& sigma);

struct ExpansionResult {
  TriangulationQuiver quiver;
  DiskFamily disks;                        // the created 2-triangle disks
  std::map<std::string, int> weights;      // per g-orbit leader arrow id
  std::map<std::string, Scalar> border;    // per border vertex id
  Presentation presentation;               // the same data as a presentation
};

/// Recovers a triangulation quiver from a generalized presentation: each
/// 1-vertex gains a loop closing its f'-cycle, each f'-2-cycle becomes a
/// fresh 2-triangle disk.  New loops and disk-internal orbits get weight 1,
/// surviving orbits keep their weight, border scalars carry over.  Asserts
/// |O(g~)| = |O(g)| + |I0| + |Delta|.
ExpansionResult expand(const Presentation& p);

}  // namespace gdq
