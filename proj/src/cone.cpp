#include "rell/cone.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

namespace rell {

namespace {

using Bits = boost::dynamic_bitset<>;

struct WorkFacet {
  IntVec form;
  Bits tight;  // processed generators on which the form vanishes
};

std::size_t rank_of(const IntMat& gens, const Bits& which) {
  LatticeBasis b(gens.cols());
  for (auto i = which.find_first(); i != Bits::npos; i = which.find_next(i)) {
    b.insert(gens[i]);
    if (b.rank() == gens.cols()) break;
  }
  return b.rank();
}

IntVec normalized(IntVec v) { return primitive(v).coeffs(); }

std::size_t support_size(const IntVec& v) {
  return static_cast<std::size_t>(
      std::count_if(v.begin(), v.end(), [](const Integer& x) { return x != 0; }));
}

bool facet_order(const IntVec& a, const IntVec& b) {
  const auto sa = support_size(a), sb = support_size(b);
  if (sa != sb) return sa < sb;
  return b < a;
}

Bits generators_on(const Cone& c, const IndexSet& facet_indices) {
  Bits on(c.generators().size());
  on.set();
  for (std::size_t f : facet_indices) on &= c.incidence_bits(f);
  return on;
}

IndexSet to_index_set(const Bits& bits) {
  IndexSet out;
  for (auto i = bits.find_first(); i != Bits::npos; i = bits.find_next(i))
    out.push_back(i);
  return out;
}

Face close_face(const Cone& c, const Bits& on) {
  Face face;
  for (std::size_t f = 0; f < c.facets().size(); ++f)
    if (on.is_subset_of(c.incidence_bits(f))) face.facet_set.push_back(f);
  face.generator_set = to_index_set(on);
  face.dim = rank_of(c.generators(), on);
  face.codim = c.ambient_dim() - face.dim;
  return face;
}

}  // namespace

bool Cone::contains(const IntVec& x) const {
  for (const auto& f : facets_)
    if (f(x) < 0) return false;
  return true;
}

Cone cone_from_generators(const IntMat& gens) {
  const std::size_t n = gens.cols();
  const std::size_t m = gens.size();
  for (std::size_t i = 0; i < m; ++i)
    if (is_zero(gens[i]))
      throw Error(ErrorCode::ZeroGenerator,
                  "generator " + std::to_string(i) + " is zero");

  // Greedy initial simplex among the leading generators.
  std::vector<std::size_t> basis;
  {
    LatticeBasis span(n);
    for (std::size_t i = 0; i < m && basis.size() < n; ++i) {
      const auto before = span.rank();
      span.insert(gens[i]);
      if (span.rank() > before) basis.push_back(i);
    }
  }
  if (n == 0 || basis.size() < n)
    throw Error(ErrorCode::FullDimRequired,
                "generators span a subspace of dimension " +
                    std::to_string(basis.size()) + " < " + std::to_string(n));

  Bits processed(m);
  std::vector<WorkFacet> work;
  for (std::size_t i : basis) processed.set(i);
  for (std::size_t i : basis) {
    IntMat others(n);
    for (std::size_t j : basis)
      if (j != i) others.add_row(gens[j]);
    LatticeBasis normal = kernel_basis(others);
    RELL_ASSERT(normal.rank() == 1, "simplex facet normal is not unique");
    IntVec form = normal.rows()[0];
    if (dot(form, gens[i]) < 0)
      for (auto& x : form) x = -x;
    Bits tight(m);
    for (std::size_t j : basis)
      if (j != i) tight.set(j);
    work.push_back({normalized(std::move(form)), std::move(tight)});
  }

  std::vector<Integer> values;
  for (std::size_t g = 0; g < m; ++g) {
    if (processed.test(g)) continue;
    values.resize(work.size());
    bool any_negative = false;
    for (std::size_t f = 0; f < work.size(); ++f) {
      values[f] = dot(work[f].form, gens[g]);
      any_negative = any_negative || values[f] < 0;
    }
    processed.set(g);
    if (!any_negative) {
      for (std::size_t f = 0; f < work.size(); ++f)
        if (values[f] == 0) work[f].tight.set(g);
      continue;
    }

    std::vector<WorkFacet> next;
    for (std::size_t p = 0; p < work.size(); ++p) {
      if (values[p] < 0) continue;
      WorkFacet kept = work[p];
      if (values[p] == 0) kept.tight.set(g);
      next.push_back(std::move(kept));
    }
    for (std::size_t p = 0; p < work.size(); ++p) {
      if (values[p] <= 0) continue;
      for (std::size_t q = 0; q < work.size(); ++q) {
        if (values[q] >= 0) continue;
        Bits ridge = work[p].tight & work[q].tight;
        if (n >= 2 && ridge.count() < n - 2) continue;
        if (rank_of(gens, ridge) + 2 != n) continue;
        IntVec form(n);
        for (std::size_t k = 0; k < n; ++k)
          form[k] = values[p] * work[q].form[k] - values[q] * work[p].form[k];
        ridge.set(g);
        next.push_back({normalized(std::move(form)), std::move(ridge)});
      }
    }
    work = std::move(next);
  }

  std::vector<IntVec> forms;
  for (auto& w : work) forms.push_back(std::move(w.form));
  std::sort(forms.begin(), forms.end(), facet_order);
  forms.erase(std::unique(forms.begin(), forms.end()), forms.end());

  Cone cone;
  cone.generators_ = gens;
  for (auto& f : forms) {
    PrimitiveForm pf = primitive(f);
    IndexSet inc;
    Bits bits(m);
    for (std::size_t g = 0; g < m; ++g) {
      Integer v = pf(gens[g]);
      RELL_ASSERT(v >= 0, "facet form negative on a generator");
      if (v == 0) {
        inc.push_back(g);
        bits.set(g);
      }
    }
    cone.facets_.push_back(std::move(pf));
    cone.incidence_.push_back(std::move(inc));
    cone.incidence_bits_.push_back(std::move(bits));
  }
  return cone;
}

Face face_intersection_of(const Cone& c, const IndexSet& facet_indices) {
  for (std::size_t f : facet_indices)
    if (f >= c.facets().size())
      throw Error(ErrorCode::BadRange, "facet index " + std::to_string(f) +
                                           " out of range");
  return close_face(c, generators_on(c, facet_indices));
}

std::vector<Face> faces_up_to_codim(const Cone& c, std::size_t max_codim) {
  if (max_codim > c.ambient_dim())
    throw Error(ErrorCode::BadRange, "codimension bound exceeds ambient dimension");
  std::map<IndexSet, Face> found;
  std::vector<Face> frontier{face_intersection_of(c, {})};
  found.emplace(frontier.front().facet_set, frontier.front());
  while (!frontier.empty()) {
    std::vector<Face> next;
    for (const Face& face : frontier) {
      if (face.codim >= max_codim) continue;
      Bits on(c.generators().size());
      for (std::size_t g : face.generator_set) on.set(g);
      for (std::size_t f = 0; f < c.facets().size(); ++f) {
        if (std::binary_search(face.facet_set.begin(), face.facet_set.end(), f))
          continue;
        Face sub = close_face(c, on & c.incidence_bits(f));
        if (sub.codim > max_codim || found.count(sub.facet_set)) continue;
        found.emplace(sub.facet_set, sub);
        next.push_back(std::move(sub));
      }
    }
    frontier = std::move(next);
  }
  std::vector<Face> out;
  for (auto& [key, face] : found) out.push_back(std::move(face));
  std::stable_sort(out.begin(), out.end(), [](const Face& a, const Face& b) {
    return a.codim < b.codim;
  });
  return out;
}

}  // namespace rell
