#include "cubiccert/serialize.hpp"

#include "cubiccert/errors.hpp"

namespace cubiccert {

namespace {

const char* kind_name(StatementKind k) {
  switch (k) {
    case StatementKind::Unirational: return "Unirational";
    case StatementKind::UCT: return "UCT";
    case StatementKind::A0Trivial: return "A0Trivial";
  }
  return "?";
}

[[noreturn]] void malformed(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::MalformedCertificate, path + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) malformed(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) malformed(path, std::string("missing \"") + key + "\"");
  return *it;
}

}  // namespace

Json to_json(const TypeSignature& t) { return Json(t.sizes()); }

Json to_json(const Statement& s) {
  Json j;
  j["kind"] = kind_name(s.kind);
  if (s.kind == StatementKind::Unirational) j["degree"] = s.degree;
  j["type"] = to_json(s.subject);
  return j;
}

Json to_json(const Certificate& c) {
  Json j;
  j["conclusion"] = to_json(c.conclusion);
  j["rule"] = std::string(rule_tag(c.rule));
  j["citation"] = c.citation;
  j["premises"] = Json::array();
  for (const auto& p : c.premises) j["premises"].push_back(to_json(p));
  return j;
}

Statement statement_from_json(const Json& j, const std::string& path) {
  const Json& kind = field(j, "kind", path);
  const Json& type = field(j, "type", path);
  if (!kind.is_string()) malformed(path + ".kind", "expected a string");
  if (!type.is_array() || type.empty()) malformed(path + ".type", "expected a non-empty array");
  std::vector<int> sizes;
  for (const auto& e : type) {
    if (!e.is_number_integer() || e.get<long long>() < 1 || e.get<long long>() > 1000) {
      malformed(path + ".type", "block sizes must be positive integers");
    }
    sizes.push_back(e.get<int>());
  }
  TypeSignature t(std::move(sizes));
  const std::string k = kind.get<std::string>();
  if (k == "Rational") return Statement::rational(t);
  if (k == "Unirational") {
    const Json& d = field(j, "degree", path);
    if (!d.is_number_unsigned() || d.get<std::uint64_t>() < 1) malformed(path + ".degree", "expected a positive integer");
    return Statement::unirational(t, d.get<std::uint64_t>());
  }
  if (j.contains("degree")) malformed(path + ".degree", "only Unirational carries a degree");
  if (k == "UCT") return Statement::uct(t);
  if (k == "A0Trivial") return Statement::a0_trivial(t);
  malformed(path + ".kind", "unknown kind \"" + k + "\"");
}

namespace {

Certificate certificate_at(const Json& j, const std::string& path) {
  Certificate c;
  c.conclusion = statement_from_json(field(j, "conclusion", path), path + ".conclusion");
  const Json& rule = field(j, "rule", path);
  if (!rule.is_string()) malformed(path + ".rule", "expected a string");
  auto r = rule_from_tag(rule.get<std::string>());
  if (!r) malformed(path + ".rule", "unknown rule \"" + rule.get<std::string>() + "\"");
  c.rule = *r;
  const Json& citation = field(j, "citation", path);
  if (!citation.is_string()) malformed(path + ".citation", "expected a string");
  c.citation = citation.get<std::string>();
  const Json& premises = field(j, "premises", path);
  if (!premises.is_array()) malformed(path + ".premises", "expected an array");
  for (std::size_t i = 0; i < premises.size(); ++i) {
    c.premises.push_back(certificate_at(premises[i], path + ".premises[" + std::to_string(i) + "]"));
  }
  return c;
}

}  // namespace

Certificate certificate_from_json(const Json& j) { return certificate_at(j, "$"); }

Json to_json(const SmoothnessVerdict& v) {
  Json j;
  j["verdict"] = v.is_smooth() ? "Smooth" : "Singular";
  j["exact"] = v.exact;
  Json w;
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, GoodReductionPrime>) {
          w["kind"] = "GoodReductionPrime";
          w["p"] = x.p;
        } else if constexpr (std::is_same_v<T, SingularPoint>) {
          w["kind"] = "SingularPoint";
          w["field"] = x.field.to_string();
          w["coords"] = Json::array();
          for (const auto& c : x.coords) w["coords"].push_back(c.get_str());
        } else {
          w["kind"] = "ResultantZero";
          w["provenance"] = x.provenance;
        }
      },
      v.witness);
  j["witness"] = w;
  if (v.block) j["block"] = *v.block;
  if (v.whole_form_screen) {
    const auto& s = *v.whole_form_screen;
    j["whole_form_screen"] = {{"prime", s.prime}, {"ran", s.ran}, {"found_zero", s.found_zero}, {"points_checked", s.points_checked}};
  }
  return j;
}

Json to_json(const BlockDecomposition& d) {
  Json j = Json::array();
  for (const auto& b : d.blocks) j.push_back({{"variables", b.variables}, {"form", b.form.to_string()}});
  return j;
}

Json to_json(const FormCertification& c) {
  Json j;
  j["blocks"] = to_json(c.blocks);
  j["type"] = to_json(c.type);
  j["smoothness"] = to_json(c.smoothness);
  j["route"] = c.route == Route::UniversalTriviality ? "hauptsatz2" : "haupsatz1";
  if (c.route == Route::CoprimeDegrees) {
    Json degrees = Json::array();
    for (const auto& p : c.a0_certificate.premises) degrees.push_back(p.conclusion.degree);
    j["unirational_degrees"] = degrees;
  }
  j["certificate"] = to_json(c.a0_certificate);
  j["uct_certificate"] = to_json(c.uct_certificate);
  return j;
}

Json to_json(const SKIdentityReport& r) {
  return {{"holds", r.holds}, {"lhs", r.lhs.to_string()}, {"via_sources", r.via_sources.to_string()},
          {"via_pullback", r.via_pullback.to_string()}};
}

Json to_json(const FiberReport& r) {
  Json hist = Json::object();
  for (const auto& [size, count] : r.histogram) hist[std::to_string(size)] = count;
  return {{"prime", r.prime}, {"samples", r.samples}, {"histogram", hist}, {"mean", r.mean.get_str()}};
}

Json to_json(const LineOnSurface& l) { return {{"direction", l.direction}, {"offset", l.offset}}; }

Json to_json(const std::vector<LineOnSurface>& lines) {
  Json j = Json::array();
  for (const auto& l : lines) j.push_back(to_json(l));
  return j;
}

Json to_json(const EckardtGroup& g) {
  Json lines = Json::array();
  for (const auto& l : g.lines) lines.push_back(to_json(l));
  return {{"base_point", g.base_point}, {"rank", g.rank}, {"lines", lines}};
}

Json to_json(const std::vector<EckardtGroup>& groups) {
  Json j = Json::array();
  for (const auto& g : groups) j.push_back(to_json(g));
  return j;
}

Json to_json(const LineMeeting& m) {
  Json j;
  j["disjoint"] = m.disjoint;
  j["det"] = m.det;
  if (m.point) j["point"] = *m.point;
  if (m.same_line) j["same_line"] = true;
  return j;
}

Json to_json(const PlaneInP5& plane) { return Json(plane.matrix); }

Json to_json(const DisjointWitness& w) {
  Json j;
  j["prime"] = w.p;
  j["l"] = to_json(w.l);
  j["m"] = to_json(w.m);
  j["l1"] = to_json(w.l1);
  j["m1"] = to_json(w.m1);
  j["plane1"] = to_json(w.plane1);
  j["plane2"] = to_json(w.plane2);
  j["det6"] = w.det6;
  j["conditions"] = {{"l1_vs_l", to_json(w.l1_vs_l)}, {"m1_vs_m", to_json(w.m1_vs_m)}};
  return j;
}

Json to_json(const WitnessScan& s) {
  Json ce = Json::array();
  for (const auto& c : s.counterexamples) ce.push_back(c);
  return {{"prime", s.p},
          {"base_pairs", s.base_pairs},
          {"hypothesis_pairs", s.hypothesis_pairs},
          {"disjoint_pairs", s.disjoint_pairs},
          {"counterexamples", ce},
          {"shared_line_pairs", s.shared_line_pairs},
          {"shared_line_disjoint", s.shared_line_disjoint},
          {"planes_built", s.planes_built}};
}

Json to_json(const LinearSpacesReport& r) {
  Json factors = Json::array();
  for (const auto& f : r.factors) factors.push_back(f);
  Json choice = Json::array();
  for (const auto& [a, b] : r.choice) choice.push_back({a, b});
  return {{"prime", r.p},
          {"factors", factors},
          {"choice", choice},
          {"first", r.first},
          {"second", r.second},
          {"first_contained", r.first_contained},
          {"second_contained", r.second_contained},
          {"rank", r.rank},
          {"disjoint", r.disjoint}};
}

}  // namespace cubiccert
