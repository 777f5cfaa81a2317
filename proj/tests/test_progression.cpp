#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "gnomon/factorization.hpp"
#include "gnomon/progression.hpp"

using namespace gnomon;

TEST_CASE("descriptors_from_params on known triples") {
  ConnectedGnomons c1 = descriptors_from_params({2, 1, 1});
  REQUIRE(c1.g_y == GnomonDescriptor{7, 2, 2});
  REQUIRE(c1.g_x == GnomonDescriptor{9, 2, 1});

  ConnectedGnomons c2 = descriptors_from_params({30, 3, 5});
  REQUIRE(c2.g_y == GnomonDescriptor{111, 2, 18});
  REQUIRE(c2.g_x == GnomonDescriptor{97, 2, 25});

  ConnectedGnomons c3 = descriptors_from_params({6, 1, 3});
  REQUIRE(c3.g_y == GnomonDescriptor{31, 2, 2});
  REQUIRE(c3.g_x == GnomonDescriptor{17, 2, 9});
}

TEST_CASE("ap_sum, middle_term and last_term on known descriptors") {
  REQUIRE(ap_sum({7, 2, 2}) == 16);
  REQUIRE(ap_sum({9, 2, 1}) == 9);
  REQUIRE(ap_sum({111, 2, 18}) == 2304);
  REQUIRE(ap_sum({97, 2, 25}) == 3025);

  REQUIRE(middle_term({7, 2, 2}) == 8);
  REQUIRE(middle_term({97, 2, 25}) == 121);
  REQUIRE(middle_term({9, 2, 1}) == 9);

  REQUIRE(last_term({7, 2, 2}) == 9);
  REQUIRE(last_term({9, 2, 1}) == 9);
  REQUIRE(last_term({111, 2, 18}) == 145);
}

TEST_CASE("descriptor validation rejects malformed input") {
  REQUIRE_THROWS_AS(ap_sum({7, 3, 2}), std::domain_error);   // wrong step
  REQUIRE_THROWS_AS(ap_sum({7, 2, 0}), std::domain_error);   // no terms
  REQUIRE_THROWS_AS(ap_sum({8, 2, 2}), std::domain_error);   // even first term
  REQUIRE_THROWS_AS(ap_sum({-7, 2, 2}), std::domain_error);
  REQUIRE_THROWS_AS(middle_term({0, 2, 1}), std::domain_error);
  REQUIRE_THROWS_AS(last_term({7, 2, -1}), std::domain_error);
}

TEST_CASE("terms materializes the progression") {
  REQUIRE(terms({7, 2, 2}) == std::vector<i64>{7, 9});
  REQUIRE(terms({9, 2, 1}) == std::vector<i64>{9});
  REQUIRE(terms({13, 2, 4}) == std::vector<i64>{13, 15, 17, 19});
}

TEST_CASE("triple_from_descriptors reconstructs known triples") {
  REQUIRE(triple_from_descriptors({{9, 2, 1}, {7, 2, 2}}) ==
          PrimitiveTriple{3, 4, 5});
  REQUIRE(triple_from_descriptors({{97, 2, 25}, {111, 2, 18}}) ==
          PrimitiveTriple{55, 48, 73});
  REQUIRE(triple_from_descriptors({{17, 2, 9}, {31, 2, 2}}) ==
          PrimitiveTriple{15, 8, 17});
}

TEST_CASE("triple_from_descriptors rejects inconsistent descriptors") {
  // last terms differ
  REQUIRE_THROWS_AS(triple_from_descriptors({{9, 2, 1}, {7, 2, 3}}),
                    std::domain_error);
  // last terms agree but the sums are not the squares of the recovered legs
  REQUIRE_THROWS_AS(triple_from_descriptors({{7, 2, 2}, {9, 2, 1}}),
                    std::domain_error);
  REQUIRE_THROWS_AS(triple_from_descriptors({{17, 2, 9}, {33, 2, 1}}),
                    std::domain_error);
}

TEST_CASE("progression identities hold for every triple up to S = 2000") {
  for (i64 S = 2; S <= 2000; S += 2) {
    for (auto [t, l] : coprime_partitions(S)) {
      TripleParams p{S, t, l};
      PrimitiveTriple tr = triple_from_params(p);
      ConnectedGnomons c = descriptors_from_params(p);

      REQUIRE(c.g_y.s1 == 2 * tr.x + 1);
      REQUIRE(c.g_x.s1 == 2 * tr.y + 1);
      REQUIRE(c.g_y.T == 2 * t * t);
      REQUIRE(c.g_x.T == l * l);

      REQUIRE(ap_sum(c.g_x) == tr.x * tr.x);
      REQUIRE(ap_sum(c.g_y) == tr.y * tr.y);
      REQUIRE(ap_sum(c.g_x) + ap_sum(c.g_y) == tr.a * tr.a);

      REQUIRE(middle_term(c.g_x) == (l + 2 * t) * (l + 2 * t));
      REQUIRE(middle_term(c.g_y) == 2 * (l + t) * (l + t));
      REQUIRE(middle_term(c.g_x) * c.g_x.T == ap_sum(c.g_x));
      REQUIRE(middle_term(c.g_y) * c.g_y.T == ap_sum(c.g_y));

      REQUIRE(last_term(c.g_x) == 2 * tr.a - 1);
      REQUIRE(last_term(c.g_y) == 2 * tr.a - 1);

      REQUIRE(tr.x + c.g_y.T == tr.a);
      REQUIRE(tr.y + c.g_x.T == tr.a);

      REQUIRE(triple_from_descriptors(c) == tr);
    }
  }
}

TEST_CASE("the shorter progression is the tail of the longer one") {
  for (i64 S = 2; S <= 200; S += 2) {
    for (auto [t, l] : coprime_partitions(S)) {
      ConnectedGnomons c = descriptors_from_params({S, t, l});
      std::vector<i64> tx = terms(c.g_x);
      std::vector<i64> ty = terms(c.g_y);
      const std::vector<i64>& shorter = tx.size() <= ty.size() ? tx : ty;
      const std::vector<i64>& longer = tx.size() <= ty.size() ? ty : tx;
      REQUIRE(std::equal(shorter.begin(), shorter.end(),
                         longer.end() - static_cast<std::ptrdiff_t>(shorter.size())));

      // Direct summation agrees with the closed form.
      REQUIRE(std::accumulate(tx.begin(), tx.end(), i64{0}) == ap_sum(c.g_x));
      REQUIRE(std::accumulate(ty.begin(), ty.end(), i64{0}) == ap_sum(c.g_y));
    }
  }
}
