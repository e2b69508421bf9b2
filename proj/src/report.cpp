#include "rell/report.hpp"

#include <cctype>
#include <regex>

namespace rell::report {

using nlohmann::json;

namespace {

bool looks_integral(std::string_view s) {
  static const std::regex pattern("[+-]?[0-9]+");
  return std::regex_match(s.begin(), s.end(), pattern);
}

Integer parse_integer(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t start = 0;
  while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
  s = s.substr(start);
  if (!looks_integral(s))
    throw Error(ErrorCode::ParseError, "not an integer: '" + s + "'");
  if (s.front() == '+') s.erase(0, 1);
  return Integer(s, 10);
}

// DOM builder that keeps integers too large for 64 bits as their decimal
// text instead of rounding them to double.
class ExactIntegerParser : public nlohmann::detail::json_sax_dom_parser<json> {
 public:
  using nlohmann::detail::json_sax_dom_parser<json>::json_sax_dom_parser;

  bool number_float(double, const std::string& raw) {
    if (!looks_integral(raw))
      throw Error(ErrorCode::ParseError, "non-integer number in input: " + raw);
    std::string copy = raw;
    return string(copy);
  }
};

json parse_json(std::string_view text) {
  json root;
  ExactIntegerParser sax(root, true);
  try {
    json::sax_parse(text.begin(), text.end(), &sax);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed JSON: ") + e.what());
  }
  return root;
}

Integer integer_from(const json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()), 10);
    return Integer(std::to_string(j.get<std::int64_t>()), 10);
  }
  if (j.is_string()) return parse_integer(j.get<std::string>());
  throw Error(ErrorCode::ParseError, "expected an integer, got " + j.dump());
}

IntVec vector_from(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "expected an array of integers");
  IntVec v;
  for (const auto& x : j) v.push_back(integer_from(x));
  return v;
}

json indices(const IndexSet& s) { return json(s); }

json facet_list(const Cone& c) {
  json out = json::array();
  for (std::size_t f = 0; f < c.facets().size(); ++f)
    out.push_back({{"index", f},
                   {"form", to_json(c.facets()[f].coeffs())},
                   {"incident_generators", indices(c.incidence(f))}});
  return out;
}

json header(const char* command, const json& input) {
  return {{"report_version", kReportVersion},
          {"tool_version", kToolVersion},
          {"command", command},
          {"input", input}};
}

json face_verdicts(const SerreReport& r) {
  json faces = json::array();
  for (const auto& v : r.verdicts) {
    json f = {{"facets", indices(v.face.facet_set)},
              {"generators", indices(v.face.generator_set)},
              {"codim", v.face.codim},
              {"dim", v.face.dim},
              {"facet_count_ok", v.facet_count_ok},
              {"group_ok", v.group_ok},
              {"status", std::string(verdict_name(v.status))}};
    if (v.reason) f["reason"] = std::string(fail_reason_name(*v.reason));
    if (v.face_group) f["face_group"] = to_json(v.face_group->rows());
    if (v.hyperplane_group) f["hyperplane_group"] = to_json(v.hyperplane_group->rows());
    if (v.gamma_witnesses) {
      json w = json::array();
      for (const auto& g : *v.gamma_witnesses) w.push_back(to_json(g));
      f["witnesses"] = w;
    }
    faces.push_back(std::move(f));
  }
  return faces;
}

}  // namespace

Input parse_input(std::string_view json_text) {
  json j = parse_json(json_text);
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "input must be a JSON object");
  if (j.contains("lambda")) {
    if (j.contains("generators"))
      throw Error(ErrorCode::ParseError, "input has both 'lambda' and 'generators'");
    return LambdaInput{vector_from(j.at("lambda"))};
  }
  if (!j.contains("generators") || !j.contains("ambient_dim"))
    throw Error(ErrorCode::ParseError,
                "input needs 'ambient_dim' and 'generators', or 'lambda'");
  const Integer dim = integer_from(j.at("ambient_dim"));
  if (dim < 1 || !dim.fits_ulong_p())
    throw Error(ErrorCode::ParseError, "ambient_dim must be a positive integer");
  SemigroupInput in{dim.get_ui(), IntMat(dim.get_ui())};
  const json& gens = j.at("generators");
  if (!gens.is_array()) throw Error(ErrorCode::ParseError, "'generators' must be an array");
  for (const auto& row : gens) {
    IntVec v = vector_from(row);
    if (v.size() != in.ambient_dim)
      throw Error(ErrorCode::ParseError, "generator " + row.dump() + " does not have length " +
                                             std::to_string(in.ambient_dim));
    in.generators.add_row(std::move(v));
  }
  return in;
}

std::vector<Integer> parse_integer_list(std::string_view csv) {
  std::vector<Integer> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = csv.find(',', start);
    out.push_back(parse_integer(csv.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

json to_json(const Integer& x) {
  if (mpz_fits_slong_p(x.get_mpz_t())) return json(static_cast<std::int64_t>(x.get_si()));
  return json(x.get_str());
}

json to_json(const IntVec& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

json to_json(const IntMat& m) {
  json out = json::array();
  for (const auto& row : m) out.push_back(to_json(row));
  return out;
}

json echo(const Input& input) {
  if (const auto* s = std::get_if<SemigroupInput>(&input))
    return {{"ambient_dim", s->ambient_dim}, {"generators", to_json(s->generators)}};
  return {{"lambda", to_json(std::get<LambdaInput>(input).lambda)}};
}

json facets_report(const AffineSemigroup& s, const json& input) {
  json r = header("facets", input);
  r["ambient_dim"] = s.ambient_dim();
  r["generator_count"] = s.generators().size();
  r["facets"] = facet_list(s.cone());
  r["pointed"] = s.pointed();
  r["theta"] = to_json(s.theta());
  return r;
}

json serre_report(const AffineSemigroup& s, const SerreReport& rep, const json& input) {
  json r = header("serre", input);
  r["parameters"] = {{"l", rep.l}, {"bound", rep.bound}};
  r["facets"] = facet_list(s.cone());
  r["faces"] = face_verdicts(rep);
  r["overall"] = std::string(verdict_name(rep.overall));
  return r;
}

json rees_report(const LambdaSpec& spec, const CorollaryReport& fast,
                 const SerreReport* general, long bound) {
  json r = header("rees", {{"lambda", to_json(IntVec(spec.lambda()))}});
  r["parameters"] = {{"r", fast.r}, {"general", general != nullptr}, {"bound", bound}};
  r["L"] = to_json(spec.L());
  r["omega"] = to_json(IntVec(spec.omega()));
  r["d"] = to_json(spec.d());
  json subsets = json::array();
  for (const auto& sub : fast.subsets) {
    json targets = json::array();
    for (const auto& t : sub.targets) {
      json tj = {{"value", to_json(t.value)}, {"member", t.member}};
      if (t.representation) tj["representation"] = to_json(IntVec(*t.representation));
      targets.push_back(std::move(tj));
    }
    json sj = {{"removed", json(sub.removed)},
               {"complement", json(sub.complement)},
               {"targets", targets},
               {"holds", sub.holds}};
    if (sub.witnesses) {
      json w = json::array();
      for (const auto& g : *sub.witnesses) w.push_back(to_json(g));
      sj["witnesses"] = w;
    }
    subsets.push_back(std::move(sj));
  }
  r["subsets"] = subsets;
  r["verdict"] = std::string(verdict_name(fast.verdict));
  json criteria = {{"R_n", check_Rn(spec)}};
  if (spec.n() >= 3) criteria["R_n_minus_1"] = check_Rn_minus_1(spec);
  r["criteria"] = criteria;
  if (general) {
    r["general"] = {{"overall", std::string(verdict_name(general->overall))},
                    {"faces", face_verdicts(*general)}};
    r["agree"] = general->overall == fast.verdict;
  }
  return r;
}

json normality_report(const std::vector<IntVec>& gaps, const Integer& budget,
                      const json& input) {
  json r = header("normality", input);
  r["parameters"] = {{"budget", to_json(budget)}};
  json g = json::array();
  for (const auto& z : gaps) g.push_back(to_json(z));
  r["gaps"] = g;
  r["gap_count"] = gaps.size();
  return r;
}

json probe_report(const AffineSemigroup& s, const IntVec& point,
                  const ProbeResult& result, const json& input) {
  json r = header("normality", input);
  r["parameters"] = {{"probe", to_json(point)}};
  json p = {{"point", to_json(point)},
            {"in_cone", result.in_cone},
            {"in_semigroup", result.in_semigroup}};
  p["status"] = !result.in_cone       ? "not in cone"
                : result.in_semigroup ? "in semigroup"
                                      : "in cone, not in semigroup";
  if (result.decomposition) {
    json terms = json::array();
    for (std::size_t g = 0; g < result.decomposition->size(); ++g) {
      const Integer& c = (*result.decomposition)[g];
      if (c != 0)
        terms.push_back({{"generator", to_json(s.generators()[g])}, {"count", to_json(c)}});
    }
    p["decomposition"] = terms;
  }
  r["probe"] = p;
  return r;
}

namespace {

bool is_scalar_array(const json& j) {
  for (const auto& x : j)
    if (x.is_structured()) return false;
  return true;
}

void write(const json& j, int depth, std::string& out) {
  const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
  const std::string close(static_cast<std::size_t>(2 * depth), ' ');
  if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!first) out += ",\n";
      first = false;
      out += pad + json(it.key()).dump() + ": ";
      write(it.value(), depth + 1, out);
    }
    out += "\n" + close + "}";
  } else if (j.is_array() && !j.empty() && !is_scalar_array(j)) {
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) out += ",\n";
      out += pad;
      write(j[i], depth + 1, out);
    }
    out += "\n" + close + "]";
  } else if (j.is_array()) {
    out += "[";
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) out += ", ";
      out += j[i].dump();
    }
    out += "]";
  } else {
    out += j.dump();
  }
}

}  // namespace

std::string to_text(const json& j) {
  std::string out;
  write(j, 0, out);
  out += "\n";
  return out;
}

}  // namespace rell::report
