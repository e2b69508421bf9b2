#include "rell/rell.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <optional>
#include <string>

#include "rell/report.hpp"

using namespace rell;

struct rell_semigroup {
  AffineSemigroup semigroup;
  nlohmann::json input;
};

struct rell_lambda {
  LambdaSpec spec;
};

namespace {

thread_local std::string last_error;

rell_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroVector: return RELL_ERR_ZERO_VECTOR;
    case ErrorCode::DimensionMismatch: return RELL_ERR_DIMENSION_MISMATCH;
    case ErrorCode::FullDimRequired: return RELL_ERR_FULL_DIM_REQUIRED;
    case ErrorCode::ZeroGenerator: return RELL_ERR_ZERO_GENERATOR;
    case ErrorCode::GroupNotFull: return RELL_ERR_GROUP_NOT_FULL;
    case ErrorCode::PointedRequired: return RELL_ERR_POINTED_REQUIRED;
    case ErrorCode::BadLambda: return RELL_ERR_BAD_LAMBDA;
    case ErrorCode::BadRange: return RELL_ERR_BAD_RANGE;
    case ErrorCode::PreconditionViolated: return RELL_ERR_PRECONDITION;
    case ErrorCode::ParseError: return RELL_ERR_PARSE;
    case ErrorCode::Internal: return RELL_ERR_INTERNAL;
  }
  return RELL_ERR_INTERNAL;
}

template <class Fn>
rell_status guarded(Fn&& fn) {
  last_error.clear();
  try {
    fn();
    return RELL_OK;
  } catch (const Error& e) {
    last_error = std::string(error_code_name(e.code())) + ": " + e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return RELL_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = std::string("Internal: ") + e.what();
    return RELL_ERR_INTERNAL;
  }
}

rell_status null_argument(const char* what) {
  last_error = std::string("null argument: ") + what;
  return RELL_ERR_INVALID_ARGUMENT;
}

char* copy_out(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

IntVec parse_point(const char* csv) { return report::parse_integer_list(csv); }

}  // namespace

extern "C" {

const char* rell_version(void) { return report::kToolVersion; }

const char* rell_status_name(rell_status status) {
  switch (status) {
    case RELL_OK: return "OK";
    case RELL_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case RELL_ERR_PARSE: return "ParseError";
    case RELL_ERR_ZERO_VECTOR: return "ZeroVector";
    case RELL_ERR_DIMENSION_MISMATCH: return "DimensionMismatch";
    case RELL_ERR_FULL_DIM_REQUIRED: return "FullDimRequired";
    case RELL_ERR_ZERO_GENERATOR: return "ZeroGenerator";
    case RELL_ERR_GROUP_NOT_FULL: return "GroupNotFull";
    case RELL_ERR_POINTED_REQUIRED: return "PointedRequired";
    case RELL_ERR_BAD_LAMBDA: return "BadLambda";
    case RELL_ERR_BAD_RANGE: return "BadRange";
    case RELL_ERR_PRECONDITION: return "PreconditionViolated";
    case RELL_ERR_INTERNAL: return "Internal";
  }
  return "Unknown";
}

const char* rell_last_error(void) { return last_error.c_str(); }

void rell_string_free(char* s) { std::free(s); }

rell_status rell_semigroup_from_json(const char* json_text, rell_semigroup** out) {
  if (!json_text) return null_argument("json_text");
  if (!out) return null_argument("out");
  return guarded([&] {
    report::Input input = report::parse_input(json_text);
    nlohmann::json echo = report::echo(input);
    if (auto* s = std::get_if<report::SemigroupInput>(&input)) {
      *out = new rell_semigroup{new_semigroup(s->generators), std::move(echo)};
    } else {
      LambdaSpec spec(std::get<report::LambdaInput>(input).lambda);
      *out = new rell_semigroup{rees_semigroup(spec), std::move(echo)};
    }
  });
}

rell_status rell_semigroup_from_rows(size_t ambient_dim, size_t count,
                                     const int64_t* entries, rell_semigroup** out) {
  if (!out) return null_argument("out");
  if (count > 0 && !entries) return null_argument("entries");
  return guarded([&] {
    report::SemigroupInput in{ambient_dim, IntMat(ambient_dim)};
    for (size_t r = 0; r < count; ++r) {
      IntVec row;
      for (size_t c = 0; c < ambient_dim; ++c)
        row.emplace_back(std::to_string(entries[r * ambient_dim + c]), 10);
      in.generators.add_row(std::move(row));
    }
    AffineSemigroup s = new_semigroup(in.generators);
    *out = new rell_semigroup{std::move(s), report::echo(in)};
  });
}

rell_status rell_semigroup_from_lambda(const rell_lambda* lambda, rell_semigroup** out) {
  if (!lambda) return null_argument("lambda");
  if (!out) return null_argument("out");
  return guarded([&] {
    nlohmann::json echo =
        report::echo(report::LambdaInput{lambda->spec.lambda()});
    *out = new rell_semigroup{rees_semigroup(lambda->spec), std::move(echo)};
  });
}

void rell_semigroup_free(rell_semigroup* s) { delete s; }

size_t rell_semigroup_ambient_dim(const rell_semigroup* s) {
  return s ? s->semigroup.ambient_dim() : 0;
}

size_t rell_semigroup_generator_count(const rell_semigroup* s) {
  return s ? s->semigroup.generators().size() : 0;
}

size_t rell_semigroup_facet_count(const rell_semigroup* s) {
  return s ? s->semigroup.cone().facets().size() : 0;
}

int rell_semigroup_is_pointed(const rell_semigroup* s) {
  return s && s->semigroup.pointed() ? 1 : 0;
}

rell_status rell_semigroup_contains(const rell_semigroup* s, const char* point_csv,
                                    int* out) {
  if (!s) return null_argument("s");
  if (!point_csv) return null_argument("point_csv");
  if (!out) return null_argument("out");
  return guarded([&] { *out = contains(s->semigroup, parse_point(point_csv)) ? 1 : 0; });
}

rell_status rell_lambda_parse(const char* csv, rell_lambda** out) {
  if (!csv) return null_argument("csv");
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = new rell_lambda{LambdaSpec(report::parse_integer_list(csv))};
  });
}

void rell_lambda_free(rell_lambda* lambda) { delete lambda; }

size_t rell_lambda_length(const rell_lambda* lambda) {
  return lambda ? lambda->spec.n() : 0;
}

rell_status rell_report_facets(const rell_semigroup* s, char** json_out) {
  if (!s) return null_argument("s");
  if (!json_out) return null_argument("json_out");
  return guarded([&] {
    *json_out = copy_out(report::to_text(report::facets_report(s->semigroup, s->input)));
  });
}

rell_status rell_report_serre(const rell_semigroup* s, int l, int64_t bound,
                              char** json_out) {
  if (!s) return null_argument("s");
  if (!json_out) return null_argument("json_out");
  return guarded([&] {
    if (l < 1) throw Error(ErrorCode::BadRange, "l must be >= 1");
    SerreReport rep = check_R(s->semigroup, static_cast<std::size_t>(l),
                              static_cast<long>(bound));
    *json_out = copy_out(report::to_text(report::serre_report(s->semigroup, rep, s->input)));
  });
}

rell_status rell_report_rees(const rell_lambda* lambda, int r, int general,
                             int64_t bound, char** json_out) {
  if (!lambda) return null_argument("lambda");
  if (!json_out) return null_argument("json_out");
  return guarded([&] {
    if (r < 2) throw Error(ErrorCode::BadRange, "r must be >= 2");
    if (bound < 1) throw Error(ErrorCode::BadRange, "witness bound must be >= 1");
    const auto rr = static_cast<std::size_t>(r);
    CorollaryReport fast = corollary_check_R(lambda->spec, rr);
    std::optional<SerreReport> full;
    if (general)
      full = check_R(rees_semigroup(lambda->spec), rr, static_cast<long>(bound));
    *json_out = copy_out(report::to_text(report::rees_report(
        lambda->spec, fast, full ? &*full : nullptr, static_cast<long>(bound))));
  });
}

rell_status rell_report_normality(const rell_semigroup* s, int64_t budget,
                                  char** json_out) {
  if (!s) return null_argument("s");
  if (!json_out) return null_argument("json_out");
  return guarded([&] {
    Integer b(std::to_string(budget), 10);
    auto gaps = bounded_normality_scan(s->semigroup, b);
    *json_out = copy_out(report::to_text(report::normality_report(gaps, b, s->input)));
  });
}

rell_status rell_report_probe(const rell_semigroup* s, const char* point_csv,
                              char** json_out) {
  if (!s) return null_argument("s");
  if (!point_csv) return null_argument("point_csv");
  if (!json_out) return null_argument("json_out");
  return guarded([&] {
    IntVec point = parse_point(point_csv);
    ProbeResult result = probe_point(s->semigroup, point);
    *json_out = copy_out(
        report::to_text(report::probe_report(s->semigroup, point, result, s->input)));
  });
}

}  // extern "C"
