#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cubiccert/cubic_form.hpp"
#include "cubiccert/errors.hpp"
#include "cubiccert/smoothness.hpp"

namespace cubiccert {

enum class StatementKind {
  /// Unirational of a given degree; degree 1 means rational.
  Unirational,
  /// Universally CH0-trivial.
  UCT,
  /// A0(X_F) = 0 for every field F.
  A0Trivial,
};

/// A claim about every smooth complex cubic form of the subject's exact type.
struct Statement {
  StatementKind kind = StatementKind::Unirational;
  std::uint64_t degree = 1;
  TypeSignature subject;

  static Statement unirational(TypeSignature t, std::uint64_t degree) {
    return {StatementKind::Unirational, degree, std::move(t)};
  }
  static Statement rational(TypeSignature t) { return unirational(std::move(t), 1); }
  static Statement uct(TypeSignature t) { return {StatementKind::UCT, 1, std::move(t)}; }
  static Statement a0_trivial(TypeSignature t) { return {StatementKind::A0Trivial, 1, std::move(t)}; }

  std::string to_string() const;
  friend bool operator==(const Statement&, const Statement&) = default;
};

enum class Rule {
  Base4,                 // BASE4
  TripleBlockUnirational, // R-SATZ1
  PairBlockUct,          // R-SATZ2I
  TripleBlockUct,        // R-SATZ2II
  Refine,                // R-REFINE
  Merge,                 // R-MERGE
  Degree2Axiom,          // AX-DEG2
  CoprimeDegrees,        // R-GCD
  UctToA0,               // UCT-TO-A0
  RationalityWitness,    // RATIONALITY-WITNESS
};

std::string_view rule_tag(Rule r);
std::optional<Rule> rule_from_tag(std::string_view tag);
std::size_t rule_premise_count(Rule r);
/// The mathematical fact a rule node stands for.
std::string_view rule_citation(Rule r);

struct Certificate {
  Statement conclusion;
  Rule rule = Rule::Base4;
  std::vector<Certificate> premises;
  std::string citation;

  std::size_t node_count() const;
  friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct Validation {
  bool valid = true;
  std::string reason;
  /// JSON-path style location of the first failing node, e.g. "$.premises[0]".
  std::string path;

  explicit operator bool() const { return valid; }
};

/// Re-checks every node against its rule's side conditions.
Validation validate_certificate(const Certificate& c);

/// Certificate of unirationality of degree 3^k. Throws BlockTooLarge,
/// TooFewVariables, or OutsideTheorem (odd variable count).
Certificate derive_unirationality(const TypeSignature& t);

/// Certificate of universal CH0-triviality for any type with blocks of at most 3 variables.
Certificate certify_uct(const TypeSignature& t);

enum class Route {
  /// Through universal CH0-triviality.
  UniversalTriviality,
  /// Through coprime unirationality degrees 2 and 3^k.
  CoprimeDegrees,
};

Certificate conclude_a0_trivial(const TypeSignature& t, Route route = Route::UniversalTriviality);

class FormSingularError : public Error {
 public:
  explicit FormSingularError(SmoothnessVerdict verdict)
      : Error(ErrorCode::FormSingular, describe(verdict)), verdict_(std::move(verdict)) {}
  const SmoothnessVerdict& verdict() const { return verdict_; }

 private:
  SmoothnessVerdict verdict_;
};

struct FormCertification {
  BlockDecomposition blocks;
  SmoothnessVerdict smoothness;
  TypeSignature type;
  Route route = Route::UniversalTriviality;
  /// Concludes A0Trivial along `route`.
  Certificate a0_certificate;
  Certificate uct_certificate;
};

/// Decompose, check scope, decide smoothness, and certify. Throws BlockTooLarge,
/// TooFewVariables, FormSingularError, or OutsideTheorem.
FormCertification certify_form(const CubicForm& f, Route route = Route::UniversalTriviality);

}  // namespace cubiccert
