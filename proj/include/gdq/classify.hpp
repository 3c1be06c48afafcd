#pragma once

#include "gdq/cartan.hpp"
#include "gdq/homology.hpp"
#include "gdq/presentation.hpp"
#include "gdq/quiver.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace gdq {

/// A theorem-level consistency check failed; the implementation (not the
/// input) is wrong.  The CLI maps this to exit code 2.
class internal_inconsistency : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class FamilyKind { kNone, kLambda, kGamma, kOmega };

/// Matched family with parameters.  Gamma is normalized to r <= t and Omega
/// to m1 <= m2 <= m3 (quiver automorphisms permute the parameters).
struct Family {
  FamilyKind kind = FamilyKind::kNone;
  int p1 = 0, p2 = 0, p3 = 0;  // Lambda: r,s  Gamma: r,s,t  Omega: m1,m2,m3
  Scalar b{0, 1};              // Lambda only

  bool matched() const { return kind != FamilyKind::kNone; }
  std::string to_string() const;
};

/// Matches the presentation against the three strict-dihedral template
/// quivers, up to quiver-with-f isomorphism.  Presentations with 1-vertices
/// are matched through their expansion (same algebra, same Cartan matrix).
Family match_family(const Presentation& p);

struct ClassificationReport {
  bool generalized_dihedral = true;  // by construction of the class
  std::string citation;
  CartanMatrix cartan;
  bool strict_dihedral = false;
  Family family;
  Growth growth = Growth::kNonPolynomial;
  bool biserial = true;

  /// Machine-readable one-liner:
  /// "family=Lambda r=2 s=3 b=0 det=24 strict=true growth=nonpolynomial"
  std::string record() const;
};

/// Full report; raises internal_inconsistency if Cartan non-singularity and
/// family matching ever disagree.
ClassificationReport classify(const Presentation& p);

struct SweepInstance {
  int quiver_class;  // index into SweepReport::quivers
  std::vector<int> weights;
  std::vector<Scalar> border_values;
  std::string det;
  bool strict;
  Family family;
  Growth growth;
  bool all_simples_nonperiodic;
  bool gabriel_two_regular;
};

struct SweepReport {
  std::vector<TriangulationQuiver> quivers;
  std::vector<SweepInstance> instances;
  int violations_main2 = 0;   // det != 0 xor family matched
  int violations_main4 = 0;   // >= 4 vertices but det != 0
  int violations_main5 = 0;   // simples/Gabriel equivalence broken
  int violations_growth = 0;  // polynomial growth off the four-member list

  bool ok() const {
    return violations_main2 + violations_main4 + violations_main5 + violations_growth == 0;
  }
};

/// Exhaustive check over every triangulation quiver with at most
/// max_vertices vertices and all weight/border assignments from the given
/// ranges (defaults: weights {1,2}, border scalars {0,1}).
SweepReport theorem2_sweep(int max_vertices, std::vector<int> weight_choices = {1, 2},
                           std::vector<Scalar> border_choices = {{0, 1}, {1, 1}});

}  // namespace gdq
