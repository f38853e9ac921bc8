#include <doctest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "skeinpos/sequences.hpp"

using skeinpos::LaurentPoly;
using skeinpos::SequenceSpec;
using skeinpos::UniPoly;

namespace {

UniPoly from_ints(const std::vector<long long>& c) {
  std::vector<LaurentPoly> v;
  for (long long x : c) v.emplace_back(x);
  return UniPoly(v);
}

std::vector<LaurentPoly> lp(const std::vector<long long>& c) {
  std::vector<LaurentPoly> v;
  for (long long x : c) v.emplace_back(x);
  return v;
}

}  // namespace

TEST_CASE("chebyshev examples") {
  CHECK(skeinpos::chebyshev(0) == from_ints({1}));
  CHECK(skeinpos::chebyshev(1) == from_ints({0, 1}));
  CHECK(skeinpos::chebyshev(2) == from_ints({-2, 0, 1}));
  CHECK(skeinpos::chebyshev(3) == from_ints({0, -3, 0, 1}));
  CHECK(skeinpos::chebyshev(2).to_string() == "t^2 - 2");
}

TEST_CASE("chebyshev agrees with the closed form") {
  for (int n = 0; n <= 40; ++n) CHECK(skeinpos::chebyshev(n) == from_ints(oracle::chebyshev_closed_form(n)));
}

TEST_CASE("power examples") {
  CHECK(skeinpos::power(0) == from_ints({1}));
  CHECK(skeinpos::power(1) == UniPoly::t());
  CHECK(skeinpos::power(4) == from_ints({0, 0, 0, 0, 1}));
}

TEST_CASE("to_basis examples") {
  CHECK(skeinpos::to_basis(skeinpos::power(2), SequenceSpec::chebyshev()) == lp({2, 0, 1}));
  CHECK(skeinpos::to_basis(UniPoly::t(), SequenceSpec::chebyshev()) == lp({0, 1}));
  CHECK(skeinpos::to_basis(skeinpos::chebyshev(3), SequenceSpec::power()) == lp({0, -3, 0, 1}));
}

TEST_CASE("to_basis and from_basis are inverse") {
  std::mt19937_64 rng(21);
  for (const auto& seq : {SequenceSpec::chebyshev(), SequenceSpec::power()}) {
    for (int trial = 0; trial < 60; ++trial) {
      std::uniform_int_distribution<int> deg(0, 12);
      std::vector<LaurentPoly> c;
      const int d = deg(rng);
      for (int i = 0; i <= d; ++i) c.push_back(oracle::to_laurent(oracle::random_dense(rng, 3, 4)));
      const UniPoly p(c);
      CHECK(skeinpos::from_basis(skeinpos::to_basis(p, seq), seq) == p);
    }
  }
}

TEST_CASE("every sequence entry is monic of its index") {
  for (int n = 0; n <= 50; ++n) {
    CHECK(skeinpos::chebyshev(n).degree() == n);
    CHECK(skeinpos::chebyshev(n).is_monic());
    CHECK(skeinpos::power(n).is_monic());
  }
}

TEST_CASE("product_in_basis examples") {
  const auto c21 = skeinpos::product_in_basis(SequenceSpec::chebyshev(), 2, 1);
  CHECK(c21 == lp({0, 1, 0, 1}));
  const auto c11 = skeinpos::product_in_basis(SequenceSpec::chebyshev(), 1, 1);
  CHECK(c11 == lp({2, 0, 1}));
  const auto p23 = skeinpos::product_in_basis(SequenceSpec::power(), 2, 3);
  CHECK(p23 == lp({0, 0, 0, 0, 0, 1}));
}

TEST_CASE("chebyshev product law against brute-force multiplication") {
  std::vector<oracle::IntPoly> basis;
  for (int n = 0; n <= 40; ++n) basis.push_back(oracle::chebyshev_closed_form(n));
  for (int m = 0; m <= 20; ++m) {
    for (int n = 0; n <= 20; ++n) {
      const auto got = skeinpos::product_in_basis(SequenceSpec::chebyshev(), m, n);
      const auto want = oracle::int_to_basis(oracle::int_mul(basis[m], basis[n]), basis);
      REQUIRE(got.size() == want.size());
      for (std::size_t k = 0; k < got.size(); ++k) CHECK(got[k] == LaurentPoly(want[k]));
    }
  }
}

TEST_CASE("custom sequences") {
  const UniPoly p1 = from_ints({1, 1});
  const auto seq = SequenceSpec::custom({std::nullopt, p1}, SequenceSpec::Kind::Chebyshev);
  CHECK(seq.at(0) == from_ints({1}));
  CHECK(seq.at(1) == p1);
  CHECK(seq.at(2) == skeinpos::chebyshev(2));

  const auto bounded = SequenceSpec::custom({from_ints({1}), p1});
  CHECK(bounded.max_index() == 1);
  CHECK_THROWS_AS(bounded.at(2), std::out_of_range);

  CHECK_THROWS_AS(SequenceSpec::custom({from_ints({1}), from_ints({0, 2})}), std::invalid_argument);
  CHECK_THROWS_AS(SequenceSpec::custom({from_ints({1}), from_ints({0, 0, 1})}), std::invalid_argument);
  CHECK_THROWS_AS(SequenceSpec::custom({from_ints({2})}), std::invalid_argument);
}

TEST_CASE("sequence JSON") {
  const auto seq = skeinpos::sequence_from_json(nlohmann::json::parse(R"({"polynomials": [null, [1, 1]], "base": "chebyshev"})"));
  CHECK(seq.at(1) == from_ints({1, 1}));
  CHECK(seq.at(3) == skeinpos::chebyshev(3));
  const auto arr = skeinpos::sequence_from_json(nlohmann::json::parse(R"([[1], [0, 1], [{"0": -1}, 0, 1]])"));
  CHECK(arr.at(2) == from_ints({-1, 0, 1}));
  const auto again = skeinpos::sequence_from_json(nlohmann::json::parse(skeinpos::to_json(seq).dump()));
  for (int n = 0; n <= 4; ++n) CHECK(again.at(n) == seq.at(n));
  CHECK_THROWS(skeinpos::sequence_from_json(nlohmann::json::parse(R"([[1], [0, 3]])")));
  CHECK(skeinpos::parse_sequence("power").at(3) == skeinpos::power(3));
}
