#pragma once

// Input parsing and canonical JSON reports. Object keys are sorted, faces
// and facets appear in library order, and every number is an integer:
// values that do not fit in 64 bits are written as decimal strings.

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "rell/rees.hpp"
#include "rell/semigroup.hpp"
#include "rell/serre.hpp"

namespace rell::report {

inline constexpr int kReportVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

struct SemigroupInput {
  std::size_t ambient_dim = 0;
  IntMat generators;
  friend bool operator==(const SemigroupInput&, const SemigroupInput&) = default;
};

struct LambdaInput {
  std::vector<Integer> lambda;
  friend bool operator==(const LambdaInput&, const LambdaInput&) = default;
};

using Input = std::variant<SemigroupInput, LambdaInput>;

/// Accepts {"ambient_dim": n, "generators": [[...], ...]} or
/// {"lambda": [...]}. Integers may be JSON numbers of any size or decimal
/// strings. Throws Error(ParseError) on malformed input.
Input parse_input(std::string_view json_text);
/// "3,-1,-1" -> {3, -1, -1}. Throws Error(ParseError).
std::vector<Integer> parse_integer_list(std::string_view csv);

nlohmann::json to_json(const Integer& x);
nlohmann::json to_json(const IntVec& v);
nlohmann::json to_json(const IntMat& m);
nlohmann::json echo(const Input& input);

nlohmann::json facets_report(const AffineSemigroup& s, const nlohmann::json& input);
nlohmann::json serre_report(const AffineSemigroup& s, const SerreReport& r,
                            const nlohmann::json& input);
/// general is the full checker run on S(I) at level r, when requested.
nlohmann::json rees_report(const LambdaSpec& spec, const CorollaryReport& fast,
                           const SerreReport* general, long bound);
nlohmann::json normality_report(const std::vector<IntVec>& gaps,
                                const Integer& budget, const nlohmann::json& input);
nlohmann::json probe_report(const AffineSemigroup& s, const IntVec& point,
                            const ProbeResult& result, const nlohmann::json& input);

/// Two-space indented text with a trailing newline; arrays of scalars stay
/// on one line.
std::string to_text(const nlohmann::json& j);

}  // namespace rell::report
