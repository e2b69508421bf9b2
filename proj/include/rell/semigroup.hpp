#pragma once

#include <optional>
#include <vector>

#include "rell/cone.hpp"
#include "rell/exactlin.hpp"

namespace rell {

/// A finitely generated S in Z^n with grp(S) = Z^n, together with its cone
/// and a coefficient-bounding functional theta (the sum of all facet forms).
class AffineSemigroup {
 public:
  std::size_t ambient_dim() const noexcept { return cone_.ambient_dim(); }
  const IntMat& generators() const noexcept { return cone_.generators(); }
  const Cone& cone() const noexcept { return cone_; }
  const IntVec& theta() const noexcept { return theta_; }
  bool pointed() const noexcept { return pointed_; }

  /// Throws PointedRequired unless the cone contains no line.
  void require_pointed() const;

 private:
  friend AffineSemigroup new_semigroup(const IntMat& gens);
  explicit AffineSemigroup(Cone cone) : cone_(std::move(cone)) {}

  Cone cone_;
  IntVec theta_;
  bool pointed_ = false;
};

/// Throws ZeroGenerator, GroupNotFull, FullDimRequired.
AffineSemigroup new_semigroup(const IntMat& gens);

/// Nonnegative integer coefficients c with sum c_i g_i = alpha, if any.
/// Exhaustive search over residuals alpha - (partial sums) that stay inside
/// the cone; each residual is visited at most once.
std::optional<std::vector<Integer>> decompose(const AffineSemigroup& s,
                                              const IntVec& alpha);
bool contains(const AffineSemigroup& s, const IntVec& alpha);

IntMat generators_on_face(const AffineSemigroup& s, const Face& f);
/// grp(S ∩ F).
LatticeBasis face_group(const AffineSemigroup& s, const Face& f);
/// grp(S) ∩ H_1 ∩ ... ∩ H_k over the facets of f.
LatticeBasis face_hyperplane_lattice(const AffineSemigroup& s, const Face& f);

}  // namespace rell
