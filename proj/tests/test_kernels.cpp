#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "powerspace/errors.hpp"
#include "powerspace/kernels.hpp"
#include "powerspace/powerspaces.hpp"

using namespace powerspace;

TEST_CASE("serial and parallel upper-set kernels agree on every space up to 5 points") {
  for (const auto& X : enumerate_spaces(5, true, true)) {
    auto serial = upper_sets_serial(X, std::size_t{1} << 20);
    CHECK(serial == upper_sets_parallel(X, std::size_t{1} << 20, 4));
    CHECK(serial.size() == oracle::upper_sets(oracle::order_of(X)).size());
  }
}

TEST_CASE("kernels agree on constructed spaces") {
  auto X = make_ref(discrete(3));
  auto KA = upper_powerspace(lower_powerspace(X));  // 20 points
  auto AK = lower_powerspace(upper_powerspace(X));
  for (const auto& C : {KA, AK}) {
    auto serial = upper_sets_serial(*C->space, std::size_t{1} << 20);
    CHECK(serial == upper_sets_parallel(*C->space, std::size_t{1} << 20, 3));
    CHECK(serial.size() == oracle::upper_sets(oracle::order_of(*C->space)).size());
  }
}

TEST_CASE("upper-set kernels respect the cap") {
  FiniteSpace X = discrete(5);
  CHECK_THROWS_AS(upper_sets_serial(X, 31), Error);
  CHECK_THROWS_AS(upper_sets_parallel(X, 31, 2), Error);
  CHECK(upper_sets_serial(X, 32).size() == 32);
  CHECK(upper_sets_parallel(X, 32, 2).size() == 32);
}

TEST_CASE("generated topology kernels agree with each other and with the definition") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 70;
    std::vector<PtSet> sub;
    for (std::size_t k = rng() % 8; k > 0; --k) {
      PtSet s(n);
      for (std::size_t i = 0; i < n; ++i)
        if (rng() % 3 == 0) s.set(i);
      sub.push_back(s);
    }
    auto serial = generated_up_sets_serial(n, sub);
    CHECK(serial == generated_up_sets_parallel(n, sub, 4));
    // up[p] is the intersection of the subbasic sets that contain p.
    for (std::size_t p = 0; p < n; ++p) {
      PtSet expect = PtSet::full(n);
      for (const auto& s : sub)
        if (s.test(p)) expect &= s;
      CHECK(serial[p] == expect);
    }
  }
}
