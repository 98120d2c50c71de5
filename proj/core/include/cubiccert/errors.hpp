#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cubiccert {

enum class ErrorCode {
  // exactpoly
  DomainMismatch,
  ArityMismatch,
  IndexOutOfRange,
  ZeroInput,
  NotQuadric,
  NotTernary,
  DivisionDegenerate,
  NotUnivariate,
  InvalidPrime,
  BadPrime,
  // cubicform
  SyntaxError,
  NotHomogeneousDegree3,
  UnusedVariableSlot,
  TooManyVariables,
  Undecided,
  // typecalc
  BlockTooLarge,
  TooFewVariables,
  OutsideTheorem,
  NoDerivation,
  FormSingular,
  MalformedCertificate,
  // skmap
  SingularInput,
  ExhaustedSearch,
  PreconditionViolated,
  // cubicsurface
  NotAllLinesRational,
  UnexpectedGrouping,
  PrimeMismatch,
  // fourfold
  RankDeficient,
  NoWitnessFound,
  BlockNotSplit,
  RepeatedFactor,
  InvalidArgument,
};

std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised by find_lines when the surface does not split completely at the prime.
class NotAllLinesRationalError : public Error {
 public:
  NotAllLinesRationalError(std::size_t found, std::uint64_t prime, std::uint64_t next_prime)
      : Error(ErrorCode::NotAllLinesRational,
              "found " + std::to_string(found) + " of 27 lines over GF(" + std::to_string(prime) +
                  "); try p = " + std::to_string(next_prime)),
        found_(found),
        next_prime_(next_prime) {}

  std::size_t found() const noexcept { return found_; }
  std::uint64_t next_prime() const noexcept { return next_prime_; }

 private:
  std::size_t found_;
  std::uint64_t next_prime_;
};

}  // namespace cubiccert
