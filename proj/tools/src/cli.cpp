#include "cubiccert/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "cubiccert/cubic_surface.hpp"
#include "cubiccert/errors.hpp"
#include "cubiccert/fourfold.hpp"
#include "cubiccert/serialize.hpp"
#include "cubiccert/skmap.hpp"
#include "cubiccert/typecalc.hpp"

namespace cubiccert {

namespace {

struct Config {
  std::string input;
  std::string file;
  std::string f;
  std::string g;
  std::optional<std::uint64_t> prime;
  std::uint64_t samples = 300;
  std::uint64_t seed = 0;
  std::string route = "hauptsatz2";
  std::string format = "json";
  bool exhaustive = false;
  std::vector<std::string> choice;
};

struct Outcome {
  Json json;
  std::string text;
  int code = kExitOk;
};

int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::SyntaxError:
    case ErrorCode::NotHomogeneousDegree3:
    case ErrorCode::UnusedVariableSlot:
    case ErrorCode::MalformedCertificate:
    case ErrorCode::InvalidArgument:
      return kExitParse;
    case ErrorCode::BlockTooLarge:
    case ErrorCode::TooFewVariables:
    case ErrorCode::OutsideTheorem:
    case ErrorCode::TooManyVariables:
    case ErrorCode::NotTernary:
    case ErrorCode::Undecided:
      return kExitOutOfScope;
    case ErrorCode::NoDerivation:
    case ErrorCode::UnexpectedGrouping:
    case ErrorCode::NoWitnessFound:
    case ErrorCode::RankDeficient:
    case ErrorCode::DivisionDegenerate:
      return kExitRedAlert;
    default:
      return kExitHypothesis;
  }
}

std::string trim(std::string s) {
  const auto ws = " \t\r\n";
  s.erase(0, s.find_first_not_of(ws));
  s.erase(s.find_last_not_of(ws) + 1);
  return s;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string main_input(const Config& cfg, const char* what) {
  if (!cfg.file.empty() && !cfg.input.empty()) throw Error(ErrorCode::InvalidArgument, "give either an inline value or --file");
  if (!cfg.file.empty()) return trim(read_file(cfg.file));
  if (cfg.input.empty()) throw Error(ErrorCode::InvalidArgument, std::string("missing ") + what);
  return cfg.input;
}

CubicForm required_form(const std::string& text, const char* flag) {
  if (text.empty()) throw Error(ErrorCode::InvalidArgument, std::string("missing ") + flag);
  return parse_form(text);
}

Route route_of(const Config& cfg) {
  if (cfg.route == "hauptsatz2") return Route::UniversalTriviality;
  if (cfg.route == "haupsatz1") return Route::CoprimeDegrees;
  throw Error(ErrorCode::InvalidArgument, "unknown route " + cfg.route);
}

void print_tree(const Certificate& c, std::ostream& os, int depth) {
  os << std::string(2 * depth, ' ') << c.conclusion.to_string() << "  [" << rule_tag(c.rule) << "]\n";
  for (const auto& p : c.premises) print_tree(p, os, depth + 1);
}

std::string tree_text(const Certificate& c) {
  std::ostringstream os;
  print_tree(c, os, 1);
  return os.str();
}

Outcome cmd_certify(const Config& cfg) {
  const CubicForm f = parse_form(main_input(cfg, "form"));
  const FormCertification fc = certify_form(f, route_of(cfg));
  Outcome o;
  o.json["form"] = f.to_string();
  o.json.update(to_json(fc));
  std::ostringstream os;
  os << "form: " << f.to_string() << "\ntype: " << fc.type.to_string() << "\nsmoothness: " << describe(fc.smoothness)
     << "\nroute: " << cfg.route << "\n";
  if (fc.route == Route::CoprimeDegrees) {
    os << "unirational degrees: " << fc.a0_certificate.premises[0].conclusion.degree << ", "
       << fc.a0_certificate.premises[1].conclusion.degree << "\n";
  }
  os << "certificate:\n" << tree_text(fc.a0_certificate) << "universal CH0-triviality:\n" << tree_text(fc.uct_certificate);
  o.text = os.str();
  return o;
}

Outcome cmd_derive(const Config& cfg) {
  std::vector<int> sizes;
  std::string text = main_input(cfg, "type");
  std::replace(text.begin(), text.end(), ',', ' ');
  std::erase_if(text, [](char ch) { return ch == '(' || ch == ')'; });
  std::istringstream is(text);
  int v = 0;
  while (is >> v) sizes.push_back(v);
  if (!is.eof() || sizes.empty()) throw Error(ErrorCode::InvalidArgument, "type must look like 3,3,1");
  const TypeSignature t(sizes);
  const Route route = route_of(cfg);
  const Certificate c = conclude_a0_trivial(t, route);
  Outcome o;
  o.json["type"] = to_json(t);
  o.json["route"] = cfg.route;
  o.json["certificate"] = to_json(c);
  o.text = "type: " + t.to_string() + "\nroute: " + cfg.route + "\ncertificate:\n" + tree_text(c);
  return o;
}

Outcome cmd_validate(const Config& cfg) {
  Json j;
  try {
    j = Json::parse(main_input(cfg, "certificate JSON"));
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::MalformedCertificate, e.what());
  }
  if (j.is_object() && j.contains("certificate")) j = j["certificate"];
  const Certificate c = certificate_from_json(j);
  const Validation v = validate_certificate(c);
  Outcome o;
  o.json["valid"] = v.valid;
  if (!v.valid) {
    o.json["reason"] = v.reason;
    o.json["path"] = v.path;
    o.code = kExitHypothesis;
  }
  o.json["conclusion"] = c.conclusion.to_string();
  o.json["nodes"] = c.node_count();
  o.text = v.valid ? "valid: " + c.conclusion.to_string() + " (" + std::to_string(c.node_count()) + " nodes)\n"
                   : "invalid at " + v.path + ": " + v.reason + "\n";
  return o;
}

Outcome cmd_sk_verify(const Config& cfg) {
  const SKMapSpec s = build_sk_map(required_form(cfg.f, "--f"), required_form(cfg.g, "--g"));
  const SKIdentityReport r = verify_sk_identity(s);
  Outcome o;
  o.json["source_f"] = s.source_f.to_string();
  o.json["source_g"] = s.source_g.to_string();
  o.json["target"] = s.target.to_string();
  o.json.update(to_json(r));
  o.text = std::string("identity ") + (r.holds ? "holds" : "FAILS") + "\ntarget: " + s.target.to_string() +
           "\nlhs: " + r.lhs.to_string() + "\n";
  if (!r.holds) o.code = kExitRedAlert;
  return o;
}

Outcome cmd_sk_fibers(const Config& cfg) {
  const SKMapSpec s = build_sk_map(required_form(cfg.f, "--f"), required_form(cfg.g, "--g"));
  const std::uint64_t p = cfg.prime.value_or(7);
  const FiberReport r = fiber_statistics(s, p, cfg.samples, cfg.seed);
  Outcome o;
  o.json = to_json(r);
  std::ostringstream os;
  os << "GF(" << p << "), " << r.samples << " samples, mean " << r.mean.get_str() << "\n";
  bool expected = true;
  for (const auto& [size, count] : r.histogram) {
    os << "  fiber size " << size << ": " << count << "\n";
    expected = expected && (p % 3 == 1 ? (size == 0 || size == 3) : size == 1);
  }
  o.text = os.str();
  if (!expected) o.code = kExitRedAlert;
  return o;
}

Outcome cmd_lines(const Config& cfg) {
  const CubicForm f = required_form(cfg.f, "--f");
  const std::uint64_t p = cfg.prime.value_or(13);
  const auto lines = find_lines(f, p);
  const auto groups = group_by_eckardt(lines, f);
  Outcome o;
  o.json["prime"] = p;
  o.json["count"] = lines.size();
  o.json["lines"] = to_json(lines);
  o.json["groups"] = to_json(groups);
  std::ostringstream os;
  os << lines.size() << " lines on " << f.to_string() << " - t^3 over GF(" << p << "), " << groups.size()
     << " Eckardt groups\n";
  for (const auto& g : groups) {
    os << "  base (" << g.base_point[0] << ":" << g.base_point[1] << ":" << g.base_point[2] << ":0), rank " << g.rank
       << "\n";
  }
  o.text = os.str();
  return o;
}

Outcome cmd_planes(const Config& cfg) {
  const CubicForm f = required_form(cfg.f, "--f");
  const CubicForm g = required_form(cfg.g, "--g");
  const std::uint64_t p = cfg.prime.value_or(13);
  const auto ls = find_lines(f, p);
  const auto lt = find_lines(g, p);
  const DisjointWitness w = find_disjoint_witness(ls, f, lt, g);
  Outcome o;
  o.json["witness"] = to_json(w);
  o.json["certificate"] = to_json(rationality_witness_certificate(TypeSignature({3, 3})));
  std::ostringstream os;
  os << "disjoint planes over GF(" << p << "), det6 = " << w.det6 << "\n";
  if (cfg.exhaustive) {
    const WitnessScan scan = scan_disjoint_witnesses(ls, f, lt, g, true);
    o.json["scan"] = to_json(scan);
    os << "scan: " << scan.disjoint_pairs << " of " << scan.hypothesis_pairs << " hypothesis pairs disjoint, "
       << scan.counterexamples.size() << " counterexamples\n";
    if (!scan.counterexamples.empty() || scan.shared_line_disjoint != 0) o.code = kExitRedAlert;
  }
  o.text = os.str();
  return o;
}

Outcome cmd_spaces(const Config& cfg) {
  const CubicForm f = parse_form(main_input(cfg, "form"));
  const std::vector<CubicForm> blocks = slot_pair_blocks(f);
  const std::uint64_t p = cfg.prime ? *cfg.prime : find_splitting_prime(blocks);
  std::vector<std::pair<std::size_t, std::size_t>> choice;
  for (const auto& c : cfg.choice) {
    if (c.size() != 2 || c[0] < '0' || c[0] > '2' || c[1] < '0' || c[1] > '2') {
      throw Error(ErrorCode::InvalidArgument, "factor choice must be two digits in 0..2, e.g. 01");
    }
    choice.emplace_back(c[0] - '0', c[1] - '0');
  }
  const LinearSpacesReport r = disjoint_linear_spaces_2type(blocks, p, choice);
  Outcome o;
  o.json = to_json(r);
  if (r.disjoint && r.first_contained && r.second_contained) {
    o.json["certificate"] = to_json(rationality_witness_certificate(TypeSignature(std::vector<int>(blocks.size(), 2))));
  } else if (cfg.choice.empty()) {
    o.code = kExitRedAlert;
  } else {
    o.code = kExitHypothesis;
  }
  o.text = "GF(" + std::to_string(p) + "): rank " + std::to_string(r.rank) + " of " + std::to_string(2 * blocks.size()) +
           (r.disjoint ? ", disjoint" : ", spaces meet") +
           (r.first_contained && r.second_contained ? ", both contained\n" : ", containment FAILS\n");
  return o;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certificates and finite-field checks for cubic forms in separated variables", "cubiccert"};
  app.require_subcommand(1);
  Config cfg;

  auto format_opt = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  };
  auto prime_opt = [&](CLI::App* sub) { sub->add_option("--prime", cfg.prime, "prime field characteristic"); };
  auto fg_opts = [&](CLI::App* sub) {
    sub->add_option("--f", cfg.f, "first form")->required();
    sub->add_option("--g", cfg.g, "second form")->required();
  };

  std::vector<std::pair<CLI::App*, std::function<Outcome(const Config&)>>> commands;

  auto* certify = app.add_subcommand("certify", "decompose, check smoothness and certify a form");
  certify->add_option("form", cfg.input, "cubic form, e.g. x0^3+x1^3+x2^3+x3^3");
  certify->add_option("--file", cfg.file, "read the form from a file");
  certify->add_option("--route", cfg.route, "hauptsatz2 or haupsatz1")->check(CLI::IsMember({"hauptsatz2", "haupsatz1"}));
  format_opt(certify);
  commands.emplace_back(certify, cmd_certify);

  auto* derive = app.add_subcommand("derive", "certify a type signature such as 3,3,1");
  derive->add_option("type", cfg.input, "block sizes");
  derive->add_option("--route", cfg.route, "hauptsatz2 or haupsatz1")->check(CLI::IsMember({"hauptsatz2", "haupsatz1"}));
  format_opt(derive);
  commands.emplace_back(derive, cmd_derive);

  auto* validate = app.add_subcommand("validate", "re-check a certificate JSON document");
  validate->add_option("json", cfg.input, "certificate JSON");
  validate->add_option("--file", cfg.file, "read the certificate from a file");
  format_opt(validate);
  commands.emplace_back(validate, cmd_validate);

  auto* sk_verify = app.add_subcommand("sk-verify", "check the map identity for f and g");
  fg_opts(sk_verify);
  format_opt(sk_verify);
  commands.emplace_back(sk_verify, cmd_sk_verify);

  auto* sk_fibers = app.add_subcommand("sk-fibers", "fiber-size histogram over GF(p)");
  fg_opts(sk_fibers);
  prime_opt(sk_fibers);
  sk_fibers->add_option("--samples", cfg.samples, "number of sampled points")->capture_default_str();
  sk_fibers->add_option("--seed", cfg.seed, "sampling seed")->capture_default_str();
  format_opt(sk_fibers);
  commands.emplace_back(sk_fibers, cmd_sk_fibers);

  auto* lines = app.add_subcommand("lines", "27 lines of f - t^3 = 0 over GF(p)");
  lines->add_option("--f", cfg.f, "ternary form")->required();
  prime_opt(lines);
  format_opt(lines);
  commands.emplace_back(lines, cmd_lines);

  auto* planes = app.add_subcommand("planes", "disjoint planes in f(z0,z1,z2) - g(z3,z4,z5) = 0");
  fg_opts(planes);
  prime_opt(planes);
  planes->add_flag("--exhaustive", cfg.exhaustive, "scan every line quadruple");
  format_opt(planes);
  commands.emplace_back(planes, cmd_planes);

  auto* spaces = app.add_subcommand("spaces", "disjoint linear spaces for a sum of binary forms in (x0,x1), (x2,x3), ...");
  spaces->add_option("form", cfg.input, "form with binary blocks");
  spaces->add_option("--file", cfg.file, "read the form from a file");
  prime_opt(spaces);
  spaces->add_option("--choice", cfg.choice, "factor pair per block, e.g. 01 02");
  format_opt(spaces);
  commands.emplace_back(spaces, cmd_spaces);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }

  for (const auto& [sub, run] : commands) {
    if (!sub->parsed()) continue;
    try {
      const Outcome o = run(cfg);
      if (cfg.format == "json") {
        out << o.json.dump(2) << "\n";
      } else {
        out << o.text;
      }
      if (o.code != kExitOk) err << "error: checks failed (exit " << o.code << ")\n";
      return o.code;
    } catch (const Error& e) {
      err << "error: " << e.what() << "\n";
      return exit_code_for(e.code());
    } catch (const std::exception& e) {
      err << "internal error: " << e.what() << "\n";
      return kExitRedAlert;
    }
  }
  return kExitParse;
}

}  // namespace cubiccert
