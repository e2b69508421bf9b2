#include "rell/rees.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace rell {

namespace {

Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer ceil_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

unsigned long to_ulong(const Integer& x, const char* what) {
  if (x < 0 || !x.fits_ulong_p())
    throw Error(ErrorCode::BadRange, std::string(what) + " is out of range");
  return x.get_ui();
}

// Calls visit(v) for every v in the box prod [lo_i, hi_i], lexicographically.
template <class Visit>
void for_each_in_box(const IntVec& lo, const IntVec& hi, Visit&& visit) {
  const std::size_t n = lo.size();
  for (std::size_t i = 0; i < n; ++i)
    if (lo[i] > hi[i]) return;
  IntVec cur = lo;
  while (true) {
    visit(cur);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (cur[i] < hi[i]) {
        ++cur[i];
        break;
      }
      cur[i] = lo[i];
      if (i == 0) return;
    }
    if (n == 0) return;
  }
}

Integer box_volume(const IntVec& lo, const IntVec& hi) {
  Integer v = 1;
  for (std::size_t i = 0; i < lo.size(); ++i) v *= hi[i] - lo[i] + 1;
  return v;
}

constexpr unsigned long kMaxBox = 50'000'000UL;

}  // namespace

// ------------------------------------------------------------ LambdaSpec

LambdaSpec::LambdaSpec(std::vector<Integer> lambda) : lambda_(std::move(lambda)) {
  if (lambda_.size() < 2)
    throw Error(ErrorCode::BadLambda, "lambda needs at least two entries");
  for (const auto& x : lambda_)
    if (x <= 0) throw Error(ErrorCode::BadLambda, "lambda entries must be positive");
  lcm_ = 1;
  gcd_ = 0;
  for (const auto& x : lambda_) {
    lcm_ = lcm(lcm_, x);
    gcd_ = gcd(gcd_, x);
  }
  for (const auto& x : lambda_) omega_.push_back(lcm_ / x);
}

LambdaSpec lambda_spec(std::vector<Integer> lambda) {
  return LambdaSpec(std::move(lambda));
}

// ------------------------------------------------------ ideal generators

IntMat ideal_min_gens(const LambdaSpec& spec) {
  const std::size_t n = spec.n();
  const auto& w = spec.omega();
  const Integer& L = spec.L();

  // Minimal elements lie in the box prod [0, lambda_i]. Enumerate every
  // coordinate but the widest one and solve for the least value there.
  const std::size_t wide = static_cast<std::size_t>(
      std::max_element(spec.lambda().begin(), spec.lambda().end()) -
      spec.lambda().begin());
  IntVec lo(n, Integer(0)), hi = spec.lambda();
  hi[wide] = 0;
  if (box_volume(lo, hi) > kMaxBox)
    throw Error(ErrorCode::BadRange, "lambda too large to enumerate I(lambda)");

  std::vector<IntVec> found;
  for_each_in_box(lo, hi, [&](const IntVec& partial) {
    IntVec a = partial;
    Integer weight = dot(w, a);
    if (weight < L) {
      a[wide] = ceil_div(L - weight, w[wide]);
      weight += a[wide] * w[wide];
    }
    for (std::size_t i = 0; i < n; ++i)
      if (a[i] > 0 && weight - w[i] >= L) return;
    found.push_back(std::move(a));
  });
  std::sort(found.begin(), found.end());
  return IntMat(n, std::move(found));
}

IntMat rees_generators(const LambdaSpec& spec) {
  const std::size_t n = spec.n();
  IntMat out(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    IntVec e(n + 1, Integer(0));
    e[i] = 1;
    out.add_row(std::move(e));
  }
  std::vector<IntVec> pure;
  for (std::size_t i = 0; i < n; ++i) {
    IntVec p(n, Integer(0));
    p[i] = spec.lambda()[i];
    pure.push_back(p);
    p.push_back(1);
    out.add_row(std::move(p));
  }
  for (const auto& beta : ideal_min_gens(spec)) {
    if (std::find(pure.begin(), pure.end(), beta) != pure.end()) continue;
    IntVec g = beta;
    g.push_back(1);
    out.add_row(std::move(g));
  }
  return out;
}

AffineSemigroup rees_semigroup(const LambdaSpec& spec) {
  return new_semigroup(rees_generators(spec));
}

PrimitiveForm rees_sigma(const LambdaSpec& spec) {
  IntVec s = spec.omega();
  s.push_back(-spec.L());
  return primitive(s);
}

// --------------------------------------------------- numerical semigroup

NumericalSgp::NumericalSgp(std::vector<Integer> gens) : gens_(std::move(gens)) {
  if (gens_.empty())
    throw Error(ErrorCode::BadRange, "numerical semigroup needs a generator");
  for (const auto& g : gens_) {
    if (g <= 0)
      throw Error(ErrorCode::BadRange, "numerical semigroup generators must be positive");
    small_.push_back(g.fits_ulong_p() ? g.get_ui() : kMaxTable + 1);
  }
  last_.push_back(-2);
}

void NumericalSgp::extend(unsigned long limit) {
  if (limit > kMaxTable)
    throw Error(ErrorCode::BadRange, "numerical semigroup query exceeds table limit");
  for (unsigned long t = last_.size(); t <= limit; ++t) {
    int via = -1;
    for (std::size_t i = 0; i < small_.size(); ++i)
      if (small_[i] <= t && last_[t - small_[i]] != -1) {
        via = static_cast<int>(i);
        break;
      }
    last_.push_back(via);
  }
}

bool NumericalSgp::contains(const Integer& t) {
  if (t < 0) throw Error(ErrorCode::BadRange, "negative numerical semigroup query");
  const unsigned long u = to_ulong(t, "numerical semigroup query");
  extend(u);
  return last_[u] != -1;
}

std::optional<std::vector<Integer>> NumericalSgp::representation(const Integer& t) {
  if (!contains(t)) return std::nullopt;
  std::vector<Integer> mult(gens_.size(), Integer(0));
  for (unsigned long u = t.get_ui(); u > 0;) {
    const auto i = static_cast<std::size_t>(last_[u]);
    mult[i] += 1;
    u -= small_[i];
  }
  return mult;
}

bool numsgp_contains(const Integer& t, const std::vector<Integer>& gens) {
  return NumericalSgp(gens).contains(t);
}

// ------------------------------------------------------------ corollaries

CorollaryReport corollary_check_R(const LambdaSpec& spec, std::size_t r) {
  const std::size_t n = spec.n();
  if (r < 2 || r > n)
    throw Error(ErrorCode::BadRange,
                "r must lie in [2, " + std::to_string(n) + "]");
  const std::size_t l = r - 1;
  const auto& w = spec.omega();
  const Integer& L = spec.L();
  const PrimitiveForm sigma = rees_sigma(spec);

  CorollaryReport report;
  report.r = r;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(l), true);
  do {
    SubsetCheck sub;
    for (std::size_t i = 0; i < n; ++i)
      (pick[i] ? sub.removed : sub.complement).push_back(i);
    std::vector<Integer> cw;
    for (std::size_t j : sub.complement) cw.push_back(w[j]);
    NumericalSgp sgp(cw);

    for (std::size_t i : sub.removed) sub.targets.push_back({L - w[i], false, std::nullopt});
    sub.targets.push_back({L + 1, false, std::nullopt});
    sub.holds = true;
    for (auto& t : sub.targets) {
      t.representation = sgp.representation(t.value);
      t.member = t.representation.has_value();
      sub.holds = sub.holds && t.member;
    }

    if (sub.holds) {
      std::vector<IntVec> gammas;
      for (std::size_t s = 0; s < sub.targets.size(); ++s) {
        IntVec g(n + 1, Integer(0));
        if (s < sub.removed.size()) g[sub.removed[s]] = 1;
        for (std::size_t c = 0; c < sub.complement.size(); ++c)
          g[sub.complement[c]] = (*sub.targets[s].representation)[c];
        g[n] = 1;
        gammas.push_back(std::move(g));
      }
      for (std::size_t j = 0; j < gammas.size(); ++j) {
        for (std::size_t i = 0; i < sub.removed.size(); ++i)
          RELL_ASSERT(gammas[j][sub.removed[i]] == (i == j ? 1 : 0),
                      "Rees witness fails a coordinate form");
        RELL_ASSERT(sigma(gammas[j]) == (j + 1 == gammas.size() ? 1 : 0),
                    "Rees witness fails sigma");
      }
      sub.witnesses = std::move(gammas);
    } else {
      report.verdict = Verdict::Fails;
    }
    report.subsets.push_back(std::move(sub));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return report;
}

bool check_Rn(const LambdaSpec& spec) {
  const auto& lam = spec.lambda();
  return std::all_of(lam.begin(), lam.end(),
                     [&](const Integer& x) { return x == lam.front(); });
}

bool check_Rn_minus_1(const LambdaSpec& spec) {
  if (spec.n() < 3) throw Error(ErrorCode::BadRange, "R_{n-1} criterion needs n >= 3");
  const auto& w = spec.omega();
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (gcd(w[i], w[j]) != 1) return false;
  return true;
}

// ------------------------------------------------- degree-2 decomposition

namespace {

// Nonnegative (x, y) with x a + y b = target, choosing the solution with
// x a and y b closest together. Requires gcd(a, b) = 1.
std::optional<std::pair<Integer, Integer>> two_coin(const Integer& target,
                                                    const Integer& a,
                                                    const Integer& b) {
  if (target < 0) return std::nullopt;
  Integer inv;
  if (b == 1) {
    inv = 0;
  } else if (mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t()) == 0) {
    return std::nullopt;
  }
  Integer x = (target * inv) % b;  // least x >= 0 with x a = target (mod b)
  if (x * a > target) return std::nullopt;
  std::optional<std::pair<Integer, Integer>> best;
  Integer best_gap;
  for (; x * a <= target; x += b) {
    Integer y = (target - x * a) / b;
    Integer gap = abs(Integer(x * a - y * b));
    if (!best || gap < best_gap) {
      best = std::make_pair(x, y);
      best_gap = gap;
    }
  }
  return best;
}

Integer weight(const Triple& x, const Triple& w) {
  return x[0] * w[0] + x[1] * w[1] + x[2] * w[2];
}

}  // namespace

std::pair<Triple, Triple> degree2_decompose(const Triple& uvw, const Triple& abc) {
  auto fail = [](const std::string& why) {
    return Error(ErrorCode::PreconditionViolated, "degree2_decompose: " + why);
  };
  for (const auto& x : abc)
    if (x <= 0) throw fail("weights must be positive");
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (gcd(abc[i], abc[j]) != 1) throw fail("weights must be pairwise coprime");
  for (const auto& x : uvw)
    if (x < 0) throw fail("exponents must be nonnegative");
  const Integer L = abc[0] * abc[1] * abc[2];
  if (weight(uvw, abc) < 2 * L) throw fail("weight below 2L");

  Triple first{0, 0, 0};
  auto split = [&]() {
    Triple second;
    for (int i = 0; i < 3; ++i) second[i] = uvw[i] - first[i];
    RELL_ASSERT(weight(first, abc) >= L && weight(second, abc) >= L,
                "degree-2 split has a light part");
    for (int i = 0; i < 3; ++i)
      RELL_ASSERT(first[i] >= 0 && second[i] >= 0, "degree-2 split is negative");
    return std::make_pair(first, second);
  };

  // Some coordinate alone reaches L: peel off that pure power.
  for (int i = 0; i < 3; ++i)
    if (uvw[i] * abc[i] >= L) {
      first[i] = L / abc[i];
      return split();
    }

  // From here each weighted coordinate is < L, so any two sum to > L.
  // A weight equal to 1: fill up to exactly L with that coordinate.
  for (int i = 0; i < 3; ++i) {
    if (abc[i] != 1) continue;
    const int j = (i + 1) % 3;
    const Integer excess = uvw[i] + uvw[j] * abc[j] - L;
    first[i] = uvw[i] - excess;
    first[j] = uvw[j];
    return split();
  }

  // A coordinate below half of L: keep it whole, make up the rest from the
  // other two. Otherwise use ceil(L / 2c) copies of the last one.
  int small = -1;
  for (int i = 0; i < 3; ++i)
    if (2 * uvw[i] * abc[i] < L) {
      small = i;
      break;
    }
  const int k = small >= 0 ? small : 2;
  const int i = (k + 1) % 3, j = (k + 2) % 3;
  first[k] = small >= 0 ? uvw[k] : ceil_div(L, 2 * abc[k]);
  auto xy = two_coin(L - first[k] * abc[k], abc[i], abc[j]);
  RELL_ASSERT(xy.has_value(), "degree-2 split: two-coin equation unsolvable");
  first[i] = xy->first;
  first[j] = xy->second;
  return split();
}

// ---------------------------------------------------------------- normality

std::vector<IntVec> bounded_normality_scan(const AffineSemigroup& s,
                                           const Integer& budget) {
  s.require_pointed();
  const std::size_t n = s.ambient_dim();
  IntVec lo(n, Integer(0)), hi(n, Integer(0));
  if (budget >= 0) {
    // pos(S) ∩ {theta <= budget} is the hull of 0 and budget * g / theta(g).
    for (const auto& g : s.generators()) {
      const Integer t = dot(s.theta(), g);
      for (std::size_t i = 0; i < n; ++i) {
        lo[i] = std::min(lo[i], floor_div(budget * g[i], t));
        hi[i] = std::max(hi[i], ceil_div(budget * g[i], t));
      }
    }
  }
  if (box_volume(lo, hi) > kMaxBox)
    throw Error(ErrorCode::BadRange, "normality scan budget too large");

  std::vector<IntVec> gaps;
  if (budget < 0) return gaps;
  for_each_in_box(lo, hi, [&](const IntVec& z) {
    if (dot(s.theta(), z) > budget || !s.cone().contains(z)) return;
    if (!contains(s, z)) gaps.push_back(z);
  });
  return gaps;
}

ProbeResult probe_point(const AffineSemigroup& s, const IntVec& point) {
  s.require_pointed();
  if (point.size() != s.ambient_dim())
    throw Error(ErrorCode::DimensionMismatch, "probe point has wrong length");
  ProbeResult r;
  r.in_cone = s.cone().contains(point);
  if (r.in_cone) {
    r.decomposition = decompose(s, point);
    r.in_semigroup = r.decomposition.has_value();
  }
  return r;
}

}  // namespace rell
