#pragma once

// Rational polyhedral cones given by generators. The facet description is
// computed exactly with an incremental double-description pass; faces are
// identified by the full set of facets that contain them.

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <vector>

#include "rell/exactlin.hpp"

namespace rell {

using IndexSet = std::vector<std::size_t>;  // sorted, no duplicates

class Cone {
 public:
  std::size_t ambient_dim() const noexcept { return generators_.cols(); }
  const IntMat& generators() const noexcept { return generators_; }
  const std::vector<PrimitiveForm>& facets() const noexcept { return facets_; }
  /// Generator indices on which facet i vanishes.
  const IndexSet& incidence(std::size_t facet) const { return incidence_[facet]; }
  const boost::dynamic_bitset<>& incidence_bits(std::size_t facet) const {
    return incidence_bits_[facet];
  }

  /// True iff every facet form is nonnegative on x.
  bool contains(const IntVec& x) const;

 private:
  friend Cone cone_from_generators(const IntMat& gens);

  IntMat generators_;
  std::vector<PrimitiveForm> facets_;
  std::vector<IndexSet> incidence_;
  std::vector<boost::dynamic_bitset<>> incidence_bits_;
};

/// Irredundant inward primitive facet forms of pos(gens). Facets are ordered
/// by support size, then lexicographically descending, so coordinate forms
/// come first in coordinate order.
/// Throws ZeroGenerator, FullDimRequired.
Cone cone_from_generators(const IntMat& gens);

struct Face {
  IndexSet facet_set;      ///< every facet containing the face
  IndexSet generator_set;  ///< generators lying on the face
  std::size_t dim = 0;
  std::size_t codim = 0;

  friend bool operator==(const Face& a, const Face& b) {
    return a.facet_set == b.facet_set;
  }
};

/// The face cut out by the listed facets, closed to its full facet set.
Face face_intersection_of(const Cone& c, const IndexSet& facet_indices);

/// All faces of codimension <= max_codim, including the cone itself. Sorted
/// by codimension, then by facet set.
std::vector<Face> faces_up_to_codim(const Cone& c, std::size_t max_codim);

}  // namespace rell
