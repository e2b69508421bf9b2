#pragma once

// Rees algebras of the monomial ideals I(lambda), the integral closure of
// (x_1^lambda_1, ..., x_n^lambda_n). With L = lcm(lambda) and
// omega_i = L / lambda_i, I(lambda) consists of the monomials x^a with
// omega . a >= L, and R[It] is the semigroup ring of
//   S(I) = < (e_i, 0), (beta, 1) : x^beta a minimal generator of I >.

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "rell/semigroup.hpp"
#include "rell/serre.hpp"

namespace rell {

class LambdaSpec {
 public:
  /// Throws BadLambda unless n >= 2 and every entry is positive.
  explicit LambdaSpec(std::vector<Integer> lambda);

  std::size_t n() const noexcept { return lambda_.size(); }
  const std::vector<Integer>& lambda() const noexcept { return lambda_; }
  const Integer& L() const noexcept { return lcm_; }
  const std::vector<Integer>& omega() const noexcept { return omega_; }
  const Integer& d() const noexcept { return gcd_; }

 private:
  std::vector<Integer> lambda_;
  std::vector<Integer> omega_;
  Integer lcm_;
  Integer gcd_;
};

LambdaSpec lambda_spec(std::vector<Integer> lambda);

/// Minimal exponents (componentwise order) of {a in N^n : omega . a >= L},
/// in lexicographic order.
IntMat ideal_min_gens(const LambdaSpec& spec);

/// Generators of S(I) in Z^{n+1}, ordered (e_i,0), then (lambda_i e_i, 1),
/// then the remaining (beta, 1) lexicographically. The first 2n rows span
/// the whole cone.
IntMat rees_generators(const LambdaSpec& spec);
AffineSemigroup rees_semigroup(const LambdaSpec& spec);
/// sigma(a, t) = omega . a - L t, already primitive.
PrimitiveForm rees_sigma(const LambdaSpec& spec);

/// Numerical semigroup <g_1, ..., g_m>; membership by a dynamic-programming
/// table that grows on demand.
class NumericalSgp {
 public:
  /// Throws BadRange if gens is empty or has a nonpositive entry.
  explicit NumericalSgp(std::vector<Integer> gens);

  const std::vector<Integer>& gens() const noexcept { return gens_; }
  /// Throws BadRange for t < 0 or t beyond kMaxTable.
  bool contains(const Integer& t);
  /// Multiplicities c with sum c_i g_i = t, if t is a member.
  std::optional<std::vector<Integer>> representation(const Integer& t);

  static constexpr unsigned long kMaxTable = 200'000'000UL;

 private:
  void extend(unsigned long limit);
  std::vector<Integer> gens_;
  std::vector<unsigned long> small_;  // gens_ as machine words
  std::vector<int> last_;             // generator index used to reach t, -1 = none
};

bool numsgp_contains(const Integer& t, const std::vector<Integer>& gens);

struct MembershipTarget {
  Integer value;
  bool member = false;
  std::optional<std::vector<Integer>> representation;  // over the complement
};

struct SubsetCheck {
  std::vector<std::size_t> removed;     ///< i_1 < ... < i_l (0-based)
  std::vector<std::size_t> complement;  ///< j_1 < ... < j_{n-l}
  /// L - omega_i for each removed i, then L + 1.
  std::vector<MembershipTarget> targets;
  bool holds = false;
  /// gamma_i = (beta_i, 1) for each removed i, then gamma_sigma.
  std::optional<std::vector<IntVec>> witnesses;
};

struct CorollaryReport {
  std::size_t r = 0;
  std::vector<SubsetCheck> subsets;
  Verdict verdict = Verdict::Holds;
};

/// R_r for the Rees algebra via numerical-semigroup membership over every
/// (r-1)-subset of {1..n}. Throws BadRange unless 2 <= r <= n.
CorollaryReport corollary_check_R(const LambdaSpec& spec, std::size_t r);

/// R_n holds iff all lambda_i are equal.
bool check_Rn(const LambdaSpec& spec);
/// R_{n-1} holds iff the omega_i are pairwise coprime. Throws BadRange if n < 3.
bool check_Rn_minus_1(const LambdaSpec& spec);

using Triple = std::array<Integer, 3>;

/// Splits (u,v,w) with ua + vb + wc >= 2abc into two parts of weight >= abc,
/// for pairwise coprime positive a, b, c. Throws PreconditionViolated.
std::pair<Triple, Triple> degree2_decompose(const Triple& uvw, const Triple& abc);

/// Lattice points z with theta(z) <= budget that lie in pos(S) but not in S.
std::vector<IntVec> bounded_normality_scan(const AffineSemigroup& s,
                                           const Integer& budget);

struct ProbeResult {
  bool in_cone = false;
  bool in_semigroup = false;
  std::optional<std::vector<Integer>> decomposition;
};
ProbeResult probe_point(const AffineSemigroup& s, const IntVec& point);

}  // namespace rell
