#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "strans/alphabet.hpp"
#include "strans/errors.hpp"

namespace strans {

inline constexpr std::size_t kDefaultElementCap = 1'000'000;

/// Finite monoid generated by one element per input symbol. Elements are
/// numbered in discovery order; element 0 is the identity.
template <class E>
class MonoidClosure {
 public:
  using Product = std::function<E(const E&, const E&)>;

  std::size_t size() const { return elements_.size(); }
  const std::vector<E>& elements() const { return elements_; }
  const E& element(std::size_t i) const { return elements_[i]; }
  std::size_t identity() const { return 0; }
  std::size_t generator(Symbol a) const { return generators_[a]; }
  const std::vector<std::size_t>& generators() const { return generators_; }

  std::optional<std::size_t> find(const E& e) const {
    auto it = index_.find(e);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  /// i·g for generator a, precomputed during saturation.
  std::size_t right(std::size_t i, Symbol a) const { return right_[i][a]; }

  std::size_t multiply(std::size_t i, std::size_t j) const {
    auto r = find(product_(elements_[i], elements_[j]));
    if (!r) throw InvariantViolation("monoid product left the closure");
    return *r;
  }

  std::size_t eval(const Word& w) const {
    std::size_t i = identity();
    for (Symbol a : w) i = right(i, a);
    return i;
  }

  /// Full multiplication table; |M|² products, intended for small monoids.
  std::vector<std::vector<std::size_t>> cayley() const {
    std::vector<std::vector<std::size_t>> table(size(), std::vector<std::size_t>(size()));
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = 0; j < size(); ++j) table[i][j] = multiply(i, j);
    return table;
  }

  const Product& product() const { return product_; }

  /// Breadth-first saturation from the identity under right multiplication
  /// by the generators. Throws CapExceeded once more than element_cap
  /// elements have been found.
  static MonoidClosure saturate(const std::vector<E>& generators, Product product,
                                const E& identity, std::size_t element_cap) {
    MonoidClosure m;
    m.product_ = std::move(product);
    m.intern(identity, element_cap);
    for (const E& g : generators) m.generators_.push_back(m.intern(g, element_cap));
    for (std::size_t i = 0; i < m.elements_.size(); ++i) {
      std::vector<std::size_t> row;
      row.reserve(generators.size());
      for (const E& g : generators) {
        E next = m.product_(m.elements_[i], g);
        row.push_back(m.intern(std::move(next), element_cap));
      }
      m.right_.push_back(std::move(row));
    }
    return m;
  }

 private:
  std::size_t intern(E e, std::size_t cap) {
    auto [it, fresh] = index_.emplace(std::move(e), elements_.size());
    if (fresh) {
      if (elements_.size() >= cap)
        throw CapExceeded("monoid closure exceeded " + std::to_string(cap) + " elements");
      elements_.push_back(it->first);
    }
    return it->second;
  }

  std::vector<E> elements_;
  std::map<E, std::size_t> index_;
  std::vector<std::size_t> generators_;
  std::vector<std::vector<std::size_t>> right_;
  Product product_;
};

template <class E>
MonoidClosure<E> generate_closure(const std::vector<E>& generators,
                                  typename MonoidClosure<E>::Product product, const E& identity,
                                  std::size_t element_cap = kDefaultElementCap) {
  return MonoidClosure<E>::saturate(generators, std::move(product), identity, element_cap);
}

/// Least n ≥ 1 with x^n = x^{n+1} for every element x, or nullopt when some
/// element generates a non-trivial cycle.
template <class E>
std::optional<std::size_t> aperiodicity_index(const MonoidClosure<E>& m) {
  std::size_t index = 1;
  for (std::size_t x = 0; x < m.size(); ++x) {
    std::map<std::size_t, std::size_t> seen;  // element -> exponent
    std::size_t power = x;
    for (std::size_t n = 1;; ++n) {
      auto [it, fresh] = seen.emplace(power, n);
      if (!fresh) {
        if (n - it->second != 1) return std::nullopt;
        index = std::max(index, it->second);
        break;
      }
      power = m.multiply(power, x);
    }
  }
  return index;
}

}  // namespace strans
