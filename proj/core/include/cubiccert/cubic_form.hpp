#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "cubiccert/polynomial.hpp"

namespace cubiccert {

/// A homogeneous cubic over QQ in which every variable slot occurs.
class CubicForm {
 public:
  /// Throws NotHomogeneousDegree3 or UnusedVariableSlot.
  explicit CubicForm(Polynomial poly);

  const Polynomial& poly() const { return poly_; }
  std::size_t nvars() const { return poly_.arity(); }
  std::string to_string() const { return poly_.to_string(); }

  friend bool operator==(const CubicForm&, const CubicForm&) = default;

 private:
  Polynomial poly_;
};

/// Parses the text grammar: variables x0, x1, ...; integer or p/q coefficients;
/// + - * ^ and parentheses. Throws SyntaxError with the byte offset.
CubicForm parse_form(std::string_view text);

/// Parses into a bare polynomial without the cubic-form checks.
Polynomial parse_polynomial(std::string_view text);

struct Block {
  /// Ascending global variable slots; local variable i is variables[i].
  std::vector<std::size_t> variables;
  CubicForm form;
};

struct BlockDecomposition {
  std::size_t nvars = 0;
  std::vector<Block> blocks;

  /// Sum of the blocks mapped back to their global slots.
  Polynomial reembed() const;
};

/// Connected components of the variable co-occurrence graph, ordered by smallest slot.
BlockDecomposition decompose_blocks(const CubicForm& f);

/// Multiset of block sizes, sorted descending.
class TypeSignature {
 public:
  TypeSignature() = default;
  /// Throws InvalidArgument for non-positive entries.
  explicit TypeSignature(std::vector<int> sizes);

  const std::vector<int>& sizes() const { return sizes_; }
  int total() const;
  std::size_t block_count() const { return sizes_.size(); }
  int max_block() const { return sizes_.empty() ? 0 : sizes_.front(); }
  std::size_t count(int size) const;

  /// "(3,2,1)"
  std::string to_string() const;

  friend auto operator<=>(const TypeSignature&, const TypeSignature&) = default;
  friend bool operator==(const TypeSignature&, const TypeSignature&) = default;

 private:
  std::vector<int> sizes_;
};

TypeSignature type_signature(const BlockDecomposition& d);

/// All signatures with entries in [1, max_entry] summing to `total`, in descending lex order.
std::vector<TypeSignature> enumerate_signatures(int total, int max_entry);

}  // namespace cubiccert
