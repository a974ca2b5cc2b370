#include "strans/substitution.hpp"

namespace strans {

Substitution Substitution::identity(std::size_t variables) {
  Substitution s;
  s.images.resize(variables);
  for (VarId x = 0; x < variables; ++x) s.images[x] = {Item::var(x)};
  return s;
}

Substitution Substitution::reset(std::size_t variables) {
  Substitution s;
  s.images.resize(variables);
  return s;
}

ItemString apply(const Substitution& sigma, const ItemString& text) {
  ItemString out;
  for (const Item& it : text) {
    if (it.is_var) {
      const auto& img = sigma.images.at(it.id);
      out.insert(out.end(), img.begin(), img.end());
    } else {
      out.push_back(it);
    }
  }
  return out;
}

Substitution compose(const Substitution& first, const Substitution& second) {
  Substitution out;
  out.images.reserve(second.images.size());
  for (const auto& img : second.images) out.images.push_back(apply(first, img));
  return out;
}

Word evaluate(const std::vector<Word>& valuation, const ItemString& text) {
  Word out;
  for (const Item& it : text) {
    if (it.is_var) {
      const Word& v = valuation.at(it.id);
      out.insert(out.end(), v.begin(), v.end());
    } else {
      out.push_back(it.id);
    }
  }
  return out;
}

std::size_t count_var(const ItemString& text, VarId x) {
  std::size_t n = 0;
  for (const Item& it : text)
    if (it.is_var && it.id == x) ++n;
  return n;
}

bool is_k_linear(const Substitution& sigma, std::size_t k) {
  for (const auto& img : sigma.images) {
    std::vector<std::size_t> counts(sigma.images.size());
    for (const Item& it : img)
      if (it.is_var && ++counts.at(it.id) > k) return false;
  }
  return true;
}

bool is_copyless(const Substitution& sigma) {
  std::vector<std::size_t> counts(sigma.images.size());
  for (const auto& img : sigma.images)
    for (const Item& it : img)
      if (it.is_var && ++counts.at(it.id) > 1) return false;
  return true;
}

std::vector<VarId> erase_symbols(const ItemString& text) {
  std::vector<VarId> out;
  for (const Item& it : text)
    if (it.is_var) out.push_back(it.id);
  return out;
}

}  // namespace strans
