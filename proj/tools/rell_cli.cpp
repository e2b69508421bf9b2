// rell: command-line front end over the rell C API.
//
//   rell facets    --input FILE
//   rell serre     --input FILE --l L [--bound B]
//   rell rees      --lambda 1443,37,21,91 --r R [--general] [--bound B]
//   rell normality (--input FILE | --lambda ...) (--budget N | --probe V)
//
// Reports are JSON on stdout (or --output FILE). Exit status: 0 when a
// report was produced (whatever the verdict), 2 for invalid input, 3 for an
// internal failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "rell/rell.h"

namespace {

constexpr int kExitInvalid = 2;
constexpr int kExitInternal = 3;

struct InputError {
  std::string message;
};

struct SemigroupDeleter {
  void operator()(rell_semigroup* s) const { rell_semigroup_free(s); }
};
struct LambdaDeleter {
  void operator()(rell_lambda* l) const { rell_lambda_free(l); }
};
struct StringDeleter {
  void operator()(char* s) const { rell_string_free(s); }
};
using SemigroupPtr = std::unique_ptr<rell_semigroup, SemigroupDeleter>;
using LambdaPtr = std::unique_ptr<rell_lambda, LambdaDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

// Thrown when a C API call fails; carries the status for the exit code.
struct ApiFailure {
  rell_status status;
  std::string message;
};

void check(rell_status status) {
  if (status != RELL_OK) throw ApiFailure{status, rell_last_error()};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError{"cannot open input file '" + path + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SemigroupPtr load_semigroup(const std::string& input_path, const std::string& lambda) {
  rell_semigroup* raw = nullptr;
  if (!input_path.empty()) {
    check(rell_semigroup_from_json(read_file(input_path).c_str(), &raw));
  } else if (!lambda.empty()) {
    rell_lambda* lam = nullptr;
    check(rell_lambda_parse(lambda.c_str(), &lam));
    LambdaPtr owned(lam);
    check(rell_semigroup_from_lambda(owned.get(), &raw));
  } else {
    throw InputError{"one of --input or --lambda is required"};
  }
  return SemigroupPtr(raw);
}

void emit(const StringPtr& text, const std::string& output_path) {
  if (output_path.empty() || output_path == "-") {
    std::fputs(text.get(), stdout);
    return;
  }
  std::ofstream out(output_path, std::ios::binary);
  if (!out) throw InputError{"cannot write output file '" + output_path + "'"};
  out << text.get();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Serre's condition R_l for affine semigroup rings"};
  app.set_version_flag("--version", std::string(rell_version()));
  app.require_subcommand(1);

  std::string input_path, output_path, lambda, probe;
  int l = 0, r = 0;
  std::int64_t bound = 20, budget = 0;
  bool general = false;

  auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("--output,-o", output_path, "Write the report here (default stdout)");
  };

  CLI::App* facets = app.add_subcommand("facets", "Facet forms and incidence of pos(S)");
  facets->add_option("--input,-i", input_path, "Semigroup JSON file")->required();
  add_output(facets);

  CLI::App* serre = app.add_subcommand("serre", "Decide R_l face by face");
  serre->add_option("--input,-i", input_path, "Semigroup JSON file")->required();
  serre->add_option("--l", l, "Level l of R_l")->required();
  serre->add_option("--bound", bound, "Witness search multiplier")->capture_default_str();
  add_output(serre);

  CLI::App* rees = app.add_subcommand("rees", "R_r for the Rees algebra of I(lambda)");
  rees->add_option("--lambda", lambda, "Comma-separated lambda, e.g. 1443,37,21,91")
      ->required();
  rees->add_option("--r", r, "Level r of R_r (2 <= r <= n)")->required();
  rees->add_flag("--general", general, "Also run the face-by-face checker on S(I)");
  rees->add_option("--bound", bound, "Witness search multiplier")->capture_default_str();
  add_output(rees);

  CLI::App* normality =
      app.add_subcommand("normality", "Search for lattice points of pos(S) missing from S");
  auto* norm_input = normality->add_option("--input,-i", input_path, "Semigroup JSON file");
  normality->add_option("--lambda", lambda, "Use S(I(lambda))")->excludes(norm_input);
  auto* budget_opt =
      normality->add_option("--budget", budget, "Scan all points with theta <= budget");
  normality->add_option("--probe", probe, "Test a single point, e.g. 2,36,1,89,2")
      ->excludes(budget_opt);
  add_output(normality);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalid;
  }

  try {
    char* raw = nullptr;
    if (facets->parsed()) {
      SemigroupPtr s = load_semigroup(input_path, "");
      check(rell_report_facets(s.get(), &raw));
    } else if (serre->parsed()) {
      SemigroupPtr s = load_semigroup(input_path, "");
      check(rell_report_serre(s.get(), l, bound, &raw));
    } else if (rees->parsed()) {
      rell_lambda* lam = nullptr;
      check(rell_lambda_parse(lambda.c_str(), &lam));
      LambdaPtr owned(lam);
      check(rell_report_rees(owned.get(), r, general ? 1 : 0, bound, &raw));
    } else if (normality->parsed()) {
      if (probe.empty() && budget_opt->count() == 0)
        throw InputError{"normality needs --budget or --probe"};
      SemigroupPtr s = load_semigroup(input_path, lambda);
      if (!probe.empty())
        check(rell_report_probe(s.get(), probe.c_str(), &raw));
      else
        check(rell_report_normality(s.get(), budget, &raw));
    }
    emit(StringPtr(raw), output_path);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.message << "\n";
    return kExitInvalid;
  } catch (const ApiFailure& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.status == RELL_ERR_INTERNAL ? kExitInternal : kExitInvalid;
  }
  return 0;
}
