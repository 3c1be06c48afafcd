#include "gdq/classify.hpp"

#include "gdq/builtins.hpp"
#include "gdq/disks.hpp"
#include "gdq/iso.hpp"

#include <algorithm>
#include <sstream>

namespace gdq {

std::string Family::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case FamilyKind::kNone:
      return "none";
    case FamilyKind::kLambda:
      os << "Lambda r=" << p1 << " s=" << p2 << " b=" << scalar_to_string(b);
      break;
    case FamilyKind::kGamma:
      os << "Gamma r=" << p1 << " s=" << p2 << " t=" << p3;
      break;
    case FamilyKind::kOmega:
      os << "Omega m1=" << p1 << " m2=" << p2 << " m3=" << p3;
      break;
  }
  return os.str();
}

namespace {

// weight of the expanded-presentation orbit whose image under iso contains
// the template arrow
int transported_weight(const Presentation& p, const QuiverIsomorphism& iso,
                       const std::string& template_arrow) {
  for (const auto& [from, to] : iso.arrow_map)
    if (to == template_arrow) return p.weight(*p.quiver().arrow_index(from));
  throw std::runtime_error("internal: isomorphism misses template arrow " + template_arrow);
}

Scalar transported_border(const Presentation& p, const QuiverIsomorphism& iso,
                          const std::string& template_vertex) {
  for (const auto& [from, to] : iso.vertex_map)
    if (to == template_vertex) return p.border_value(*p.quiver().vertex_index(from));
  throw std::runtime_error("internal: isomorphism misses template vertex");
}

}  // namespace

Family match_family(const Presentation& p) {
  // normalize through expansion: 1-vertex presentations of the same algebra
  // gain their radical-square loops back, contractions gain disks (and then
  // exceed the template sizes, as they must: their Cartan matrix is singular)
  ExpansionResult er = expand(p);
  const Presentation& ep = er.presentation;
  const TriangulationQuiver& tq = er.quiver;

  Family fam;
  if (auto iso = quiver_isomorphic(tq, builtins::lambda_quiver())) {
    fam.kind = FamilyKind::kLambda;
    fam.p1 = transported_weight(ep, *iso, "alpha");
    fam.p2 = transported_weight(ep, *iso, "beta");
    fam.b = transported_border(ep, *iso, "2");
    return fam;
  }
  if (auto iso = quiver_isomorphic(tq, builtins::gamma_quiver())) {
    fam.kind = FamilyKind::kGamma;
    fam.p1 = transported_weight(ep, *iso, "alpha");
    fam.p2 = transported_weight(ep, *iso, "beta");
    fam.p3 = transported_weight(ep, *iso, "xi");
    if (fam.p1 > fam.p3) std::swap(fam.p1, fam.p3);
    return fam;
  }
  if (auto iso = quiver_isomorphic(tq, builtins::omega_quiver())) {
    fam.kind = FamilyKind::kOmega;
    fam.p1 = transported_weight(ep, *iso, "alpha1");
    fam.p2 = transported_weight(ep, *iso, "alpha2");
    fam.p3 = transported_weight(ep, *iso, "alpha3");
    int v[3] = {fam.p1, fam.p2, fam.p3};
    std::sort(v, v + 3);
    fam.p1 = v[0];
    fam.p2 = v[1];
    fam.p3 = v[2];
    return fam;
  }
  return fam;
}

Growth growth_class(const Presentation& p) {
  Family fam = match_family(p);
  switch (fam.kind) {
    case FamilyKind::kLambda:
      return fam.p1 == 1 && fam.p2 == 1 ? Growth::kPolynomial : Growth::kNonPolynomial;
    case FamilyKind::kGamma:
    case FamilyKind::kOmega:
      return fam.p1 == 1 && fam.p2 == 1 && fam.p3 == 1 ? Growth::kPolynomial
                                                       : Growth::kNonPolynomial;
    case FamilyKind::kNone:
      return Growth::kNonPolynomial;
  }
  return Growth::kNonPolynomial;
}

std::string ClassificationReport::record() const {
  std::ostringstream os;
  os << "family=" << family.to_string() << " det=" << cartan.det_string()
     << " strict=" << (strict_dihedral ? "true" : "false") << " growth="
     << (growth == Growth::kPolynomial ? "polynomial" : "nonpolynomial");
  return os.str();
}

ClassificationReport classify(const Presentation& p) {
  ClassificationReport rep;
  rep.citation =
      "generalized dihedral by construction of the presentation class; "
      "strict type decided via Cartan non-singularity, stable AR components "
      "not recomputed";
  PathBasis basis(p);
  rep.cartan = cartan_matrix(basis);
  rep.family = match_family(p);
  rep.strict_dihedral = !rep.cartan.singular();
  if (rep.strict_dihedral != rep.family.matched())
    throw internal_inconsistency(
        "Cartan non-singularity and family matching disagree: det=" +
        rep.cartan.det_string() + ", family=" + rep.family.to_string());
  rep.growth = growth_class(p);
  return rep;
}

SweepReport theorem2_sweep(int max_vertices, std::vector<int> weight_choices,
                           std::vector<Scalar> border_choices) {
  SweepReport rep;
  rep.quivers = enumerate_triangulation_quivers(max_vertices);
  if (weight_choices.empty() || border_choices.empty())
    throw std::invalid_argument("sweep needs nonempty weight and border ranges");

  for (size_t qi = 0; qi < rep.quivers.size(); ++qi) {
    const TriangulationQuiver& tq = rep.quivers[qi];
    OrbitData od = compute_orbit_data(tq);
    std::vector<int> borders = tq.border_vertices();
    size_t k = od.orbits.size(), nb = borders.size();

    std::vector<size_t> widx(k, 0), bidx(nb, 0);
    while (true) {
      std::vector<int> weights(k);
      for (size_t i = 0; i < k; ++i) weights[i] = weight_choices[widx[i]];
      std::map<int, Scalar> border;
      std::vector<Scalar> border_values(nb);
      for (size_t i = 0; i < nb; ++i) {
        border_values[i] = border_choices[bidx[i]];
        border[borders[i]] = border_values[i];
      }

      Presentation p = build_presentation(tq, weights, border);
      PathBasis basis(p);
      CartanMatrix cm = cartan_matrix(basis);
      Family fam = match_family(p);
      Growth gr = growth_class(p);
      SimplesReport simples = simple_periodicity(p);

      SweepInstance inst;
      inst.quiver_class = static_cast<int>(qi);
      inst.weights = weights;
      inst.border_values = border_values;
      inst.det = cm.det_string();
      inst.strict = !cm.singular();
      inst.family = fam;
      inst.growth = gr;
      inst.all_simples_nonperiodic = simples.all_non_periodic;
      inst.gabriel_two_regular = simples.gabriel_two_regular;

      if (inst.strict != fam.matched()) ++rep.violations_main2;
      if (tq.quiver().vertex_count() >= 4 && inst.strict) ++rep.violations_main4;
      if (simples.all_non_periodic != simples.gabriel_two_regular) ++rep.violations_main5;
      bool in_poly_list =
          (fam.kind == FamilyKind::kLambda && fam.p1 == 1 && fam.p2 == 1) ||
          (fam.kind != FamilyKind::kNone && fam.kind != FamilyKind::kLambda &&
           fam.p1 == 1 && fam.p2 == 1 && fam.p3 == 1);
      if ((gr == Growth::kPolynomial) != in_poly_list) ++rep.violations_growth;
      rep.instances.push_back(std::move(inst));

      // odometer over weight and border choices
      size_t pos = 0;
      for (; pos < k; ++pos) {
        if (++widx[pos] < weight_choices.size()) break;
        widx[pos] = 0;
      }
      if (pos < k) continue;
      for (pos = 0; pos < nb; ++pos) {
        if (++bidx[pos] < border_choices.size()) break;
        bidx[pos] = 0;
      }
      if (pos == nb) break;
    }
  }
  return rep;
}

}  // namespace gdq
