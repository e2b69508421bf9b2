#include "rell/semigroup.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace rell {

void AffineSemigroup::require_pointed() const {
  if (!pointed_)
    throw Error(ErrorCode::PointedRequired,
                "operation requires a pointed semigroup (cone contains a line)");
}

AffineSemigroup new_semigroup(const IntMat& gens) {
  if (gens.empty())
    throw Error(ErrorCode::FullDimRequired, "no generators given");
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (is_zero(gens[i]))
      throw Error(ErrorCode::ZeroGenerator,
                  "generator " + std::to_string(i) + " is zero");
  LatticeBasis group = hnf(gens);
  if (!group.is_full())
    throw Error(ErrorCode::GroupNotFull,
                "generators do not generate Z^" + std::to_string(gens.cols()) +
                    " as a group (" +
                    (group.rank() == gens.cols()
                         ? std::string("proper sublattice of full rank")
                         : "rank " + std::to_string(group.rank())) +
                    ")");

  AffineSemigroup s(cone_from_generators(gens));
  s.theta_.assign(gens.cols(), Integer(0));
  for (const auto& f : s.cone_.facets())
    for (std::size_t i = 0; i < gens.cols(); ++i) s.theta_[i] += f.coeffs()[i];
  s.pointed_ = !s.cone_.facets().empty() &&
               std::all_of(gens.begin(), gens.end(), [&](const IntVec& g) {
                 return dot(s.theta_, g) > 0;
               });
  return s;
}

std::optional<std::vector<Integer>> decompose(const AffineSemigroup& s,
                                              const IntVec& alpha) {
  s.require_pointed();
  if (alpha.size() != s.ambient_dim())
    throw Error(ErrorCode::DimensionMismatch, "membership query has wrong length");

  const Cone& cone = s.cone();
  const IntMat& gens = s.generators();
  const std::size_t nf = cone.facets().size();
  const std::size_t ng = gens.size();

  // A pointed full-dimensional cone's facet forms determine a point, so
  // residuals are keyed by their facet values.
  auto facet_values = [&](const IntVec& x) {
    IntVec v(nf);
    for (std::size_t f = 0; f < nf; ++f) v[f] = cone.facets()[f](x);
    return v;
  };
  std::vector<IntVec> gen_values(ng);
  for (std::size_t g = 0; g < ng; ++g) gen_values[g] = facet_values(gens[g]);

  // Largest theta steps first.
  std::vector<std::size_t> order(ng);
  std::iota(order.begin(), order.end(), 0);
  std::vector<Integer> theta_g(ng);
  for (std::size_t g = 0; g < ng; ++g) theta_g[g] = dot(s.theta(), gens[g]);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return theta_g[a] > theta_g[b];
  });

  IntVec start = facet_values(alpha);
  for (const auto& v : start)
    if (v < 0) return std::nullopt;

  struct Visit {
    const IntVec* parent;
    std::size_t via;
  };
  std::map<IntVec, Visit> seen;
  std::vector<const IntVec*> stack;
  auto [it, inserted] = seen.emplace(std::move(start), Visit{nullptr, 0});
  stack.push_back(&it->first);

  IntVec next(nf);
  while (!stack.empty()) {
    const IntVec* cur = stack.back();
    stack.pop_back();
    if (is_zero(*cur)) {
      std::vector<Integer> coeffs(ng, Integer(0));
      for (const IntVec* p = cur; seen.at(*p).parent != nullptr;
           p = seen.at(*p).parent)
        coeffs[seen.at(*p).via] += 1;
      return coeffs;
    }
    // Push in reverse so the largest step is explored first.
    for (auto oi = order.rbegin(); oi != order.rend(); ++oi) {
      const IntVec& gv = gen_values[*oi];
      bool inside = true;
      for (std::size_t f = 0; f < nf && inside; ++f) {
        next[f] = (*cur)[f] - gv[f];
        inside = next[f] >= 0;
      }
      if (!inside) continue;
      auto [nit, fresh] = seen.emplace(next, Visit{cur, *oi});
      if (fresh) stack.push_back(&nit->first);
    }
  }
  return std::nullopt;
}

bool contains(const AffineSemigroup& s, const IntVec& alpha) {
  return decompose(s, alpha).has_value();
}

IntMat generators_on_face(const AffineSemigroup& s, const Face& f) {
  IntMat out(s.ambient_dim());
  for (std::size_t g = 0; g < s.generators().size(); ++g) {
    bool on = true;
    for (std::size_t facet : f.facet_set)
      if (s.cone().facets()[facet](s.generators()[g]) != 0) {
        on = false;
        break;
      }
    if (on) out.add_row(s.generators()[g]);
  }
  return out;
}

LatticeBasis face_group(const AffineSemigroup& s, const Face& f) {
  return hnf(generators_on_face(s, f));
}

LatticeBasis face_hyperplane_lattice(const AffineSemigroup& s, const Face& f) {
  std::vector<PrimitiveForm> forms;
  for (std::size_t facet : f.facet_set) forms.push_back(s.cone().facets()[facet]);
  return kernel_basis(forms, s.ambient_dim());
}

}  // namespace rell
