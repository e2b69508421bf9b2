#pragma once

// Decides Serre's condition R_l for K[S] face by face. A face F of
// codimension k passes iff it lies on exactly k facets, grp(S ∩ F) equals
// the lattice grp(S) ∩ H_1 ∩ ... ∩ H_k, and there are gamma_1..gamma_k in S
// with sigma_i(gamma_j) = delta_ij for the facet forms sigma_i of F.
//
// The witness search is complete: sigma_i >= 0 on every generator, so any
// witness gamma_j, written as a sum of generators, contains a single
// generator g with sigma_i(g) = delta_ij, and g is itself a witness. A face
// whose generators admit no such g therefore fails definitively.

#include <optional>
#include <string_view>
#include <vector>

#include "rell/semigroup.hpp"

namespace rell {

enum class Verdict { Holds, Fails };
enum class FailReason { FacetCount, GroupEquality, NoWitness };

std::string_view verdict_name(Verdict v) noexcept;
std::string_view fail_reason_name(FailReason r) noexcept;

inline constexpr long kDefaultWitnessBound = 20;

struct FaceVerdict {
  Face face;
  std::size_t k = 0;  ///< codim(F) = height of the monomial prime P_F
  bool facet_count_ok = false;
  bool group_ok = false;
  std::optional<LatticeBasis> face_group;        ///< grp(S ∩ F)
  std::optional<LatticeBasis> hyperplane_group;  ///< grp(S) ∩ H_1 ∩ ... ∩ H_k
  std::optional<std::vector<IntVec>> gamma_witnesses;
  Verdict status = Verdict::Fails;
  std::optional<FailReason> reason;
};

struct SerreReport {
  std::size_t l = 0;
  long bound = kDefaultWitnessBound;
  std::vector<FaceVerdict> verdicts;  ///< every face with 1 <= codim <= l
  Verdict overall = Verdict::Holds;
};

/// gamma_j for each form (in the given order), or nullopt if some form has
/// no witness. Candidates are generators with theta(g) <= bound * max theta;
/// for bound >= 1 that is every generator. Among valid candidates the
/// lexicographically smallest is reported. Throws BadRange if bound < 1.
std::optional<std::vector<IntVec>> find_gammas(
    const AffineSemigroup& s, const std::vector<PrimitiveForm>& forms, long bound);

FaceVerdict check_face(const AffineSemigroup& s, const Face& f, long bound);

/// Throws PointedRequired, BadRange (l outside [1, n]).
SerreReport check_R(const AffineSemigroup& s, std::size_t l,
                    long bound = kDefaultWitnessBound);

}  // namespace rell
