#include "rell/serre.hpp"

#include <algorithm>
#include <string>

namespace rell {

std::string_view verdict_name(Verdict v) noexcept {
  return v == Verdict::Holds ? "holds" : "fails";
}

std::string_view fail_reason_name(FailReason r) noexcept {
  switch (r) {
    case FailReason::FacetCount: return "facet_count";
    case FailReason::GroupEquality: return "group_equality";
    case FailReason::NoWitness: return "no_witness";
  }
  return "unknown";
}

std::optional<std::vector<IntVec>> find_gammas(
    const AffineSemigroup& s, const std::vector<PrimitiveForm>& forms, long bound) {
  if (bound < 1) throw Error(ErrorCode::BadRange, "witness bound must be >= 1");
  const IntMat& gens = s.generators();

  Integer max_theta = 0;
  for (const auto& g : gens) max_theta = std::max(max_theta, Integer(dot(s.theta(), g)));
  const Integer cap = max_theta * bound;

  std::vector<IntVec> gammas;
  for (std::size_t j = 0; j < forms.size(); ++j) {
    const IntVec* best = nullptr;
    for (const auto& g : gens) {
      if (dot(s.theta(), g) > cap) continue;
      bool ok = true;
      for (std::size_t i = 0; i < forms.size() && ok; ++i)
        ok = forms[i](g) == (i == j ? 1 : 0);
      if (ok && (best == nullptr || g < *best)) best = &g;
    }
    if (best == nullptr) return std::nullopt;
    gammas.push_back(*best);
  }

  for (std::size_t j = 0; j < gammas.size(); ++j) {
    RELL_ASSERT(contains(s, gammas[j]), "reported witness not in semigroup");
    for (std::size_t i = 0; i < forms.size(); ++i)
      RELL_ASSERT(forms[i](gammas[j]) == (i == j ? 1 : 0),
                  "reported witness violates sigma_i(gamma_j) = delta_ij");
  }
  return gammas;
}

FaceVerdict check_face(const AffineSemigroup& s, const Face& f, long bound) {
  s.require_pointed();
  if (f.codim == 0) throw Error(ErrorCode::BadRange, "check_face needs codim >= 1");

  FaceVerdict v;
  v.face = f;
  v.k = f.codim;

  v.facet_count_ok = f.facet_set.size() == v.k;
  if (!v.facet_count_ok) {
    v.reason = FailReason::FacetCount;
    return v;
  }

  v.face_group = face_group(s, f);
  v.hyperplane_group = face_hyperplane_lattice(s, f);
  v.group_ok = lattice_equal(*v.face_group, *v.hyperplane_group);
  if (!v.group_ok) {
    v.reason = FailReason::GroupEquality;
    return v;
  }

  std::vector<PrimitiveForm> forms;
  for (std::size_t facet : f.facet_set) forms.push_back(s.cone().facets()[facet]);
  v.gamma_witnesses = find_gammas(s, forms, bound);
  if (!v.gamma_witnesses) {
    v.reason = FailReason::NoWitness;
    return v;
  }
  v.status = Verdict::Holds;
  return v;
}

SerreReport check_R(const AffineSemigroup& s, std::size_t l, long bound) {
  s.require_pointed();
  if (l < 1 || l > s.ambient_dim())
    throw Error(ErrorCode::BadRange, "l must lie in [1, " +
                                         std::to_string(s.ambient_dim()) + "]");
  if (bound < 1) throw Error(ErrorCode::BadRange, "witness bound must be >= 1");

  SerreReport report;
  report.l = l;
  report.bound = bound;
  for (const Face& f : faces_up_to_codim(s.cone(), l)) {
    if (f.codim == 0) continue;
    report.verdicts.push_back(check_face(s, f, bound));
    if (report.verdicts.back().status == Verdict::Fails)
      report.overall = Verdict::Fails;
  }
  return report;
}

}  // namespace rell
