#include "cubiccert/typecalc.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <set>

namespace cubiccert {

namespace {

struct RuleInfo {
  Rule rule;
  std::string_view tag;
  std::size_t premises;
  std::string_view citation;
};

constexpr std::array<RuleInfo, 10> kRules{{
    {Rule::Base4, "BASE4", 0, "every smooth complex cubic surface is rational"},
    {Rule::TripleBlockUnirational, "R-SATZ1", 1,
     "if f + x^3 = 0 is unirational of degree d then f - h(u,v,w) = 0 is unirational of degree 3d: "
     "the degree-3 Shioda-Katsura map from (f + x^3 = 0) x (h + y^3 = 0) onto f - h = 0, "
     "the second factor being a rational cubic surface"},
    {Rule::PairBlockUct, "R-SATZ2I", 1,
     "if f + x^3 = 0 is universally CH0-trivial then so is f - g(u,v) = 0: degree-3 Shioda-Katsura map "
     "from Y x (g + w^3 = 0), 2 A0 = 0 for smooth cubics, and surjectivity of CH0 from a curve"},
    {Rule::TripleBlockUct, "R-SATZ2II", 1,
     "if f + x^3 = 0 is universally CH0-trivial then so is f - h(u,v,t) = 0: degree-3 Shioda-Katsura map "
     "from Y x S with S = (h + w^3 = 0) a rational cubic surface"},
    {Rule::Refine, "R-REFINE", 1,
     "a smooth form of a finer type is a smooth form of the coarser type obtained by grouping blocks"},
    {Rule::Merge, "R-MERGE", 1,
     "a smooth binary cubic is linearly equivalent to u^3 + v^3, so a 2-block may be split into two 1-blocks"},
    {Rule::Degree2Axiom, "AX-DEG2", 0, "every smooth cubic hypersurface of dimension at least 2 is unirational of degree 2"},
    {Rule::CoprimeDegrees, "R-GCD", 2,
     "unirational parametrizations of coprime degrees force A0(X_F) = 0 for every field F"},
    {Rule::UctToA0, "UCT-TO-A0", 1, "universal CH0-triviality means A0(X_F) = 0 for every field F"},
    {Rule::RationalityWitness, "RATIONALITY-WITNESS", 0,
     "a cubic of even dimension 2k containing two disjoint k-planes is rational (projection from the pair)"},
}};

const RuleInfo& info(Rule r) {
  for (const auto& i : kRules) {
    if (i.rule == r) return i;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown rule");
}

// ---------------------------------------------------------------------------
// Validator. Works on plain std::multiset so it shares no code with the search.

using Bag = std::multiset<int>;

Bag bag_of(const TypeSignature& t) { return Bag(t.sizes().begin(), t.sizes().end()); }

int bag_total(const Bag& b) { return std::accumulate(b.begin(), b.end(), 0); }

bool remove_one(Bag& b, int v) {
  auto it = b.find(v);
  if (it == b.end()) return false;
  b.erase(it);
  return true;
}

// Can the parts be grouped so that the group sums are exactly `wholes`?
bool groups_into(std::vector<int> parts, std::vector<int> wholes) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  std::vector<int> room(wholes);
  std::function<bool(std::size_t)> place = [&](std::size_t i) -> bool {
    if (i == parts.size()) {
      return std::all_of(room.begin(), room.end(), [](int r) { return r == 0; });
    }
    for (std::size_t j = 0; j < room.size(); ++j) {
      if (room[j] < parts[i]) continue;
      // Skip bins with identical remaining room already tried for this part.
      bool seen = false;
      for (std::size_t k = 0; k < j; ++k) seen = seen || room[k] == room[j];
      if (seen) continue;
      room[j] -= parts[i];
      if (place(i + 1)) return true;
      room[j] += parts[i];
    }
    return false;
  };
  return place(0);
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

Validation fail(const std::string& path, const std::string& reason) { return Validation{false, reason, path}; }

Validation check_node(const Certificate& c, const std::string& path) {
  const auto& concl = c.conclusion;
  const Bag subject = bag_of(concl.subject);
  if (subject.empty()) return fail(path, "empty subject");
  if (c.citation.empty()) return fail(path, "missing citation");
  if (concl.kind == StatementKind::Unirational && concl.degree < 1) return fail(path, "unirational degree must be >= 1");
  if (c.premises.size() != info(c.rule).premises) {
    return fail(path, std::string(rule_tag(c.rule)) + " expects " + std::to_string(info(c.rule).premises) +
                          " premise(s), got " + std::to_string(c.premises.size()));
  }

  auto premise = [&](std::size_t i) -> const Statement& { return c.premises[i].conclusion; };

  switch (c.rule) {
    case Rule::Base4:
      if (bag_total(subject) != 4) return fail(path, "BASE4 needs exactly 4 variables");
      if (!(concl.kind == StatementKind::UCT || (concl.kind == StatementKind::Unirational && concl.degree == 1))) {
        return fail(path, "BASE4 concludes rationality or UCT only");
      }
      break;

    case Rule::TripleBlockUnirational: {
      const auto& prem = premise(0);
      if (prem.kind != StatementKind::Unirational || concl.kind != StatementKind::Unirational) {
        return fail(path, "R-SATZ1 maps Unirational to Unirational");
      }
      Bag expected = bag_of(prem.subject);
      if (bag_total(expected) < 4) return fail(path, "R-SATZ1 premise needs at least 4 variables");
      if (!remove_one(expected, 1)) return fail(path, "R-SATZ1 premise has no 1-block");
      expected.insert(3);
      if (expected != subject) return fail(path, "R-SATZ1 conclusion must replace a 1-block by a 3-block");
      if (prem.degree > std::numeric_limits<std::uint64_t>::max() / 3 || concl.degree != 3 * prem.degree) {
        return fail(path, "R-SATZ1 must multiply the degree by 3");
      }
      break;
    }

    case Rule::PairBlockUct:
    case Rule::TripleBlockUct: {
      const int grown = c.rule == Rule::PairBlockUct ? 2 : 3;
      const auto& prem = premise(0);
      if (prem.kind != StatementKind::UCT || concl.kind != StatementKind::UCT) {
        return fail(path, std::string(rule_tag(c.rule)) + " maps UCT to UCT");
      }
      Bag expected = bag_of(prem.subject);
      if (bag_total(expected) < 4) return fail(path, std::string(rule_tag(c.rule)) + " premise needs at least 4 variables");
      if (!remove_one(expected, 1)) return fail(path, std::string(rule_tag(c.rule)) + " premise has no 1-block");
      expected.insert(grown);
      if (expected != subject) {
        return fail(path, std::string(rule_tag(c.rule)) + " conclusion must replace a 1-block by a " +
                              std::to_string(grown) + "-block");
      }
      break;
    }

    case Rule::Refine: {
      const auto& prem = premise(0);
      if (prem.kind != concl.kind || prem.degree != concl.degree) return fail(path, "R-REFINE must keep the statement");
      const Bag coarse = bag_of(prem.subject);
      if (subject.size() <= coarse.size()) return fail(path, "R-REFINE conclusion must have more blocks");
      if (!groups_into(std::vector<int>(subject.begin(), subject.end()), std::vector<int>(coarse.begin(), coarse.end()))) {
        return fail(path, "R-REFINE conclusion does not refine the premise type");
      }
      break;
    }

    case Rule::Merge: {
      const auto& prem = premise(0);
      if (prem.kind != concl.kind || prem.degree != concl.degree) return fail(path, "R-MERGE must keep the statement");
      Bag expected = bag_of(prem.subject);
      if (!remove_one(expected, 1) || !remove_one(expected, 1)) return fail(path, "R-MERGE needs two 1-blocks");
      expected.insert(2);
      if (expected != subject) return fail(path, "R-MERGE conclusion must fuse two 1-blocks into one 2-block");
      break;
    }

    case Rule::Degree2Axiom:
      if (bag_total(subject) < 4) return fail(path, "AX-DEG2 needs at least 4 variables");
      if (concl.kind != StatementKind::Unirational || concl.degree != 2) return fail(path, "AX-DEG2 concludes Unirational(2)");
      break;

    case Rule::CoprimeDegrees: {
      const auto& a = premise(0);
      const auto& b = premise(1);
      if (a.kind != StatementKind::Unirational || b.kind != StatementKind::Unirational) {
        return fail(path, "R-GCD premises must be Unirational");
      }
      if (a.subject != concl.subject || b.subject != concl.subject) return fail(path, "R-GCD premises must share the subject");
      if (gcd_u64(a.degree, b.degree) != 1) {
        return fail(path, "R-GCD degrees " + std::to_string(a.degree) + " and " + std::to_string(b.degree) +
                              " are not coprime");
      }
      if (concl.kind != StatementKind::A0Trivial) return fail(path, "R-GCD concludes A0Trivial");
      break;
    }

    case Rule::UctToA0:
      if (premise(0).kind != StatementKind::UCT) return fail(path, "UCT-TO-A0 premise must be UCT");
      if (premise(0).subject != concl.subject) return fail(path, "UCT-TO-A0 must keep the subject");
      if (concl.kind != StatementKind::A0Trivial) return fail(path, "UCT-TO-A0 concludes A0Trivial");
      break;

    case Rule::RationalityWitness: {
      if (concl.kind != StatementKind::Unirational || concl.degree != 1) {
        return fail(path, "RATIONALITY-WITNESS concludes rationality");
      }
      const bool pair_of_threes = subject == Bag{3, 3};
      const bool all_twos = subject.size() >= 2 && std::all_of(subject.begin(), subject.end(), [](int s) { return s == 2; });
      if (!pair_of_threes && !all_twos) return fail(path, "RATIONALITY-WITNESS applies to types (3,3) and (2,...,2)");
      break;
    }
  }

  for (std::size_t i = 0; i < c.premises.size(); ++i) {
    if (auto v = check_node(c.premises[i], path + ".premises[" + std::to_string(i) + "]"); !v) return v;
  }
  return {};
}

// ---------------------------------------------------------------------------
// Backward search.

std::vector<int> replace(std::vector<int> sizes, std::initializer_list<int> removed, std::initializer_list<int> added) {
  for (int r : removed) {
    auto it = std::find(sizes.begin(), sizes.end(), r);
    if (it == sizes.end()) throw Error(ErrorCode::NoDerivation, "internal: missing block of size " + std::to_string(r));
    sizes.erase(it);
  }
  sizes.insert(sizes.end(), added.begin(), added.end());
  return sizes;
}

Certificate node(Statement s, Rule r, std::vector<Certificate> premises = {}) {
  return Certificate{std::move(s), r, std::move(premises), std::string(rule_citation(r))};
}

void require_scope(const TypeSignature& t) {
  if (t.max_block() > 3) {
    throw Error(ErrorCode::BlockTooLarge, "type " + t.to_string() + " has a block of " + std::to_string(t.max_block()) +
                                              " variables; the certificates need blocks of at most 3");
  }
  if (t.total() < 4) {
    throw Error(ErrorCode::TooFewVariables,
                "type " + t.to_string() + " has " + std::to_string(t.total()) + " variables; at least 4 are needed");
  }
}

// Metric (total, -#3-blocks, #2-blocks) drops lexicographically at every step.
Certificate unirational_chain(const TypeSignature& t) {
  const auto& s = t.sizes();
  if (t.total() == 4) return node(Statement::rational(t), Rule::Base4);

  if (t.count(3) > 0) {
    Certificate prem = unirational_chain(TypeSignature(replace(s, {3}, {1})));
    const std::uint64_t d = prem.conclusion.degree;
    if (d > std::numeric_limits<std::uint64_t>::max() / 3) {
      throw Error(ErrorCode::NoDerivation, "degree overflow for " + t.to_string());
    }
    return node(Statement::unirational(t, 3 * d), Rule::TripleBlockUnirational, {std::move(prem)});
  }

  const std::size_t twos = t.count(2);
  const std::size_t ones = t.count(1);
  std::optional<TypeSignature> coarser;
  if (twos >= 1 && ones >= 1) {
    coarser = TypeSignature(replace(s, {2, 1}, {3}));
  } else if (ones >= 3) {
    coarser = TypeSignature(replace(s, {1, 1, 1}, {3}));
  }
  if (coarser) {
    Certificate prem = unirational_chain(*coarser);
    return node(Statement::unirational(t, prem.conclusion.degree), Rule::Refine, {std::move(prem)});
  }
  if (ones == 0 && twos >= 3) {
    Certificate prem = unirational_chain(TypeSignature(replace(s, {2}, {1, 1})));
    return node(Statement::unirational(t, prem.conclusion.degree), Rule::Merge, {std::move(prem)});
  }
  throw Error(ErrorCode::NoDerivation, "no unirationality derivation for " + t.to_string());
}

// Metric (total, block count) drops lexicographically at every step.
Certificate uct_chain(const TypeSignature& t) {
  const auto& s = t.sizes();
  if (t.total() == 4) return node(Statement::uct(t), Rule::Base4);
  if (t.count(2) > 0) {
    return node(Statement::uct(t), Rule::PairBlockUct, {uct_chain(TypeSignature(replace(s, {2}, {1})))});
  }
  if (t.count(3) > 0 && t.total() - 2 >= 4) {
    return node(Statement::uct(t), Rule::TripleBlockUct, {uct_chain(TypeSignature(replace(s, {3}, {1})))});
  }
  if (t.count(1) >= 2) {
    return node(Statement::uct(t), Rule::Refine, {uct_chain(TypeSignature(replace(s, {1, 1}, {2})))});
  }
  throw Error(ErrorCode::NoDerivation, "no UCT derivation for " + t.to_string());
}

Certificate checked(Certificate c) {
  if (auto v = validate_certificate(c); !v) {
    throw Error(ErrorCode::NoDerivation, "engine produced an invalid certificate at " + v.path + ": " + v.reason);
  }
  return c;
}

}  // namespace

std::string Statement::to_string() const {
  switch (kind) {
    case StatementKind::Unirational:
      return (degree == 1 ? std::string("Rational") : "Unirational(" + std::to_string(degree) + ")") + " " +
             subject.to_string();
    case StatementKind::UCT: return "UCT " + subject.to_string();
    case StatementKind::A0Trivial: return "A0Trivial " + subject.to_string();
  }
  return "?";
}

std::string_view rule_tag(Rule r) { return info(r).tag; }

std::optional<Rule> rule_from_tag(std::string_view tag) {
  for (const auto& i : kRules) {
    if (i.tag == tag) return i.rule;
  }
  return std::nullopt;
}

std::size_t rule_premise_count(Rule r) { return info(r).premises; }

std::string_view rule_citation(Rule r) { return info(r).citation; }

std::size_t Certificate::node_count() const {
  std::size_t n = 1;
  for (const auto& p : premises) n += p.node_count();
  return n;
}

Validation validate_certificate(const Certificate& c) { return check_node(c, "$"); }

Certificate derive_unirationality(const TypeSignature& t) {
  require_scope(t);
  if (t.total() % 2 != 0) {
    throw Error(ErrorCode::OutsideTheorem,
                "type " + t.to_string() + " has an odd number of variables; the derivation calculus only reaches "
                "even variable counts, and odd-degree unirationality is not known there");
  }
  return checked(unirational_chain(t));
}

Certificate certify_uct(const TypeSignature& t) {
  require_scope(t);
  return checked(uct_chain(t));
}

Certificate conclude_a0_trivial(const TypeSignature& t, Route route) {
  require_scope(t);
  if (route == Route::UniversalTriviality) {
    return checked(node(Statement::a0_trivial(t), Rule::UctToA0, {certify_uct(t)}));
  }
  Certificate two = node(Statement::unirational(t, 2), Rule::Degree2Axiom);
  Certificate odd = derive_unirationality(t);
  return checked(node(Statement::a0_trivial(t), Rule::CoprimeDegrees, {std::move(two), std::move(odd)}));
}

FormCertification certify_form(const CubicForm& f, Route route) {
  FormCertification out;
  out.blocks = decompose_blocks(f);
  out.type = type_signature(out.blocks);
  out.route = route;
  require_scope(out.type);
  out.smoothness = form_smoothness(f, out.blocks);
  if (!out.smoothness.is_smooth()) throw FormSingularError(out.smoothness);
  out.a0_certificate = conclude_a0_trivial(out.type, route);
  out.uct_certificate = certify_uct(out.type);
  return out;
}

}  // namespace cubiccert
