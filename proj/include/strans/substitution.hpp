#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "strans/alphabet.hpp"

namespace strans {

/// One position of a string over variables ∪ output symbols.
struct Item {
  bool is_var = false;
  std::uint32_t id = 0;

  static Item var(VarId x) { return {true, x}; }
  static Item sym(Symbol s) { return {false, s}; }

  auto operator<=>(const Item&) const = default;
};

using ItemString = std::vector<Item>;

/// A total map from variables to strings over variables and output symbols.
struct Substitution {
  std::vector<ItemString> images;

  static Substitution identity(std::size_t variables);
  /// σ_ε: every variable reset to the empty word.
  static Substitution reset(std::size_t variables);

  std::size_t num_variables() const { return images.size(); }
  const ItemString& operator()(VarId x) const { return images[x]; }

  auto operator<=>(const Substitution&) const = default;
};

/// Extension of σ to strings: replaces every variable occurrence by its image.
ItemString apply(const Substitution& sigma, const ItemString& text);

/// Composition σ1σ2 with (σ1σ2)(X) = σ̂1(σ2(X)).
Substitution compose(const Substitution& first, const Substitution& second);

/// Evaluates a string under a valuation of the variables.
Word evaluate(const std::vector<Word>& valuation, const ItemString& text);

std::size_t count_var(const ItemString& text, VarId x);

/// Each variable occurs at most k times in every image.
bool is_k_linear(const Substitution& sigma, std::size_t k);

/// Each variable occurs at most once across all images.
bool is_copyless(const Substitution& sigma);

/// Projects out output symbols, keeping the ordered variable occurrences.
std::vector<VarId> erase_symbols(const ItemString& text);

}  // namespace strans
