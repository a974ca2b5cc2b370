#include <doctest.h>

#include <random>

#include "strans/corpus.hpp"
#include "strans/monoid.hpp"
#include "strans/sst_analysis.hpp"

using namespace strans;

namespace {

// Integers mod n under multiplication by a fixed generator value.
MonoidClosure<int> cyclic(int generator, int modulus) {
  return generate_closure<int>({generator}, [modulus](int x, int y) { return x * y % modulus; },
                               1);
}

template <class E>
std::size_t power(const MonoidClosure<E>& m, std::size_t x, std::size_t k) {
  std::size_t p = m.identity();
  for (std::size_t i = 0; i < k; ++i) p = m.multiply(p, x);
  return p;
}

}  // namespace

TEST_CASE("idempotent generator gives a two-element closure") {
  auto m = generate_closure<int>({0}, [](int x, int y) { return x * y; }, 1);
  CHECK(m.size() == 2);
  CHECK(aperiodicity_index(m) == 1u);
}

TEST_CASE("trivial monoid has index 1") {
  auto m = generate_closure<int>({1}, [](int x, int y) { return x * y; }, 1);
  CHECK(m.size() == 1);
  CHECK(aperiodicity_index(m) == 1u);
}

TEST_CASE("a two-element group is not aperiodic") {
  auto m = cyclic(-1, 1000);  // {1, -1}
  CHECK(m.size() == 2);
  CHECK_FALSE(aperiodicity_index(m));
}

TEST_CASE("nilpotent chains have growing index") {
  // Addition saturating at 3.
  auto m = generate_closure<int>({1}, [](int x, int y) { return std::min(3, x + y); }, 0);
  CHECK(m.size() == 4);
  CHECK(aperiodicity_index(m) == 3u);
}

TEST_CASE("index is least: x^n = x^{n+1} everywhere, and not one step earlier") {
  auto m = generate_closure<int>({1}, [](int x, int y) { return std::min(3, x + y); }, 0);
  const std::size_t n = *aperiodicity_index(m);
  bool earlier_differs = false;
  for (std::size_t x = 0; x < m.size(); ++x) {
    CHECK(power(m, x, n) == power(m, x, n + 1));
    if (power(m, x, n - 1) != power(m, x, n)) earlier_differs = true;
  }
  CHECK(earlier_differs);
}

TEST_CASE("cap is enforced") {
  CHECK_THROWS_AS(generate_closure<int>({1}, [](int x, int y) { return x + y; }, 0, 50),
                  CapExceeded);
  CHECK_THROWS_AS(ftm_closure(corpus::doubling_sst(), std::nullopt, 50), CapExceeded);
}

TEST_CASE("fig2 FTM closure is {identity, m_b}") {
  auto m = ftm_closure(corpus::fig2_sst(), 100);
  CHECK(m.size() == 2);
  const std::size_t b = m.generator(1);
  CHECK(m.generator(0) == m.identity());
  CHECK(m.multiply(b, b) == b);
  CHECK(aperiodicity_index(m) == 1u);
}

TEST_CASE("eval is a morphism and the cayley table is consistent") {
  auto m = ftm_closure(corpus::copy_discard_sst(), 2);
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    Word u, v;
    for (std::size_t n = rng() % 9; n > 0; --n) u.push_back(static_cast<Symbol>(rng() % 2));
    for (std::size_t n = rng() % 9; n > 0; --n) v.push_back(static_cast<Symbol>(rng() % 2));
    Word uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    CHECK(m.eval(uv) == m.multiply(m.eval(u), m.eval(v)));
  }
  const auto table = m.cayley();
  for (std::size_t i = 0; i < m.size(); ++i) {
    CHECK(table[i][m.identity()] == i);
    CHECK(table[m.identity()][i] == i);
  }
}
