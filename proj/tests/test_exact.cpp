#include "ppart/exact.hpp"

#include <doctest.h>

#include <chrono>

using namespace ppart;

TEST_CASE("small table") {
  auto t = p2_exact_table(10);
  std::vector<mpz_class> want{1, 1, 3, 6, 13, 24, 48, 86, 160, 282, 500};
  CHECK(t.values == want);
  CHECK(p2_exact_table(0).values == std::vector<mpz_class>{1});
}

TEST_CASE("enumeration agrees with the recurrence") {
  auto t = p2_exact_table(8);
  for (int n = 0; n <= 8; ++n) CHECK(p2_enumerate(n) == t.values[n]);
  CHECK(p2_enumerate(2) == 3);
  CHECK(p2_enumerate(3) == 6);
  CHECK_THROWS(p2_enumerate(9));
  CHECK_THROWS(p2_enumerate(-1));
}

TEST_CASE("product series agrees with the recurrence") {
  auto t = p2_exact_table(200);
  auto s = p2_product_series(200);
  REQUIRE(s.size() == 201);
  for (size_t n = 0; n <= 200; ++n) CHECK(s[n] == t.values[n]);
  CHECK(t.values[200] == mpz_class("4066263490068623016919082185"));
}

TEST_CASE("published values") {
  auto t0 = std::chrono::steady_clock::now();
  auto t = p2_exact_table(1000);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  CHECK(secs < 5.0);
  CHECK(t.values[750].get_str() == "2545743024358645039521920749024859572959010596512371034678586927966061");
  for (size_t n = 2; n < t.values.size(); ++n) CHECK(t.values[n] > t.values[n - 1]);
}

TEST_CASE("p2(6999) digit count") {
  auto t = p2_exact_table(6999);
  CHECK(t.values[6999].get_str().size() == 317);
  CHECK(p2_exact_table(6491).values[6491].get_str().size() == 301);
}
