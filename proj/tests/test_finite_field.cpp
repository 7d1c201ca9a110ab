#include "cyclomat/finite_field.hpp"

#include <doctest.h>

#include <set>

using namespace cyclomat;

TEST_CASE("number theory helpers") {
  CHECK(is_prime(2));
  CHECK(is_prime(2147483647));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  int p = 0, n = 0;
  CHECK(prime_power(49, p, n));
  CHECK(p == 7);
  CHECK(n == 2);
  CHECK(prime_power(2, p, n));
  CHECK(p == 2);
  CHECK(n == 1);
  CHECK_FALSE(prime_power(1, p, n));
  CHECK_FALSE(prime_power(12, p, n));
  CHECK(prime_factors(360) == std::vector<std::uint64_t>{2, 3, 5});
  CHECK(order_mod(3, 8) == 2);
  CHECK(order_mod(2, 7) == 3);
  CHECK(order_mod(5, 1) == 1);
  CHECK(order_mod(3, 2) == 1);
  CHECK_THROWS_AS(order_mod(3, 6), std::invalid_argument);
}

TEST_CASE("irreducibility") {
  CHECK(is_irreducible({1, 0, 1}, 3));       // x^2 + 1
  CHECK_FALSE(is_irreducible({1, 0, 1}, 5));  // (x - 2)(x + 2)
  CHECK(is_irreducible({1, 1, 1}, 2));
  CHECK_FALSE(is_irreducible({0, 0, 1}, 2));
  CHECK(is_irreducible({1, 1, 0, 1}, 2));  // x^3 + x + 1
}

TEST_CASE("small fields") {
  const auto f2 = build_field(2, 1);
  CHECK(f2->q() == 2);
  CHECK(f2->generator_index() == 1);

  const auto f5 = build_field(5, 1);
  CHECK(f5->generator_index() == 2);
  CHECK(f5->dlog(4) == 2);

  // x^2 + 1 over F_3 is lex-least; g = 1 + x.
  const auto f9 = build_field(3, 2);
  CHECK(f9->modulus() == std::vector<int>{1, 0, 1});
  CHECK(f9->generator() == FqElem{{1, 1}});
  CHECK(f9->mul(f9->index_of(FqElem{{0, 1}}), f9->index_of(FqElem{{0, 1}})) == f9->prime_index(-1));
}

TEST_CASE("every field up to 729 is consistent") {
  for (int q = 2; q <= 729; ++q) {
    int p = 0, n = 0;
    if (!prime_power(q, p, n)) continue;
    CAPTURE(q);
    const auto f = build_field(p, n);
    REQUIRE(is_irreducible(f->modulus(), p));
    // dlog/exp is a bijection on F_q^x
    std::set<int> seen;
    for (int e = 0; e < q - 1; ++e) seen.insert(f->exp(e));
    CHECK(static_cast<int>(seen.size()) == q - 1);
    CHECK(seen.count(0) == 0);
    for (int x = 1; x < q; x += std::max(1, q / 37)) {
      CHECK(f->exp(f->dlog(x)) == x);
      CHECK(f->mul(x, f->inv(x)) == 1);
    }
    // trace: linear, surjective, kernel of size q / p; agrees with Frobenius
    std::vector<int> fibre(p, 0);
    for (int x = 0; x < q; ++x) {
      ++fibre[f->trace(x)];
      if (x % 7 == 0) CHECK(f->trace(x) == f->trace_by_frobenius(x));
    }
    for (int c = 0; c < p; ++c) CHECK(fibre[c] == q / p);
    for (int x = 0; x < q; x += std::max(1, q / 13)) {
      for (int y = 0; y < q; y += std::max(1, q / 11)) {
        CHECK(f->trace(f->add(x, y)) == (f->trace(x) + f->trace(y)) % p);
        if (x && y) CHECK(f->norm(f->mul(x, y)) == f->prime_index(static_cast<std::int64_t>(f->norm(x)) * f->norm(y)));
      }
    }
  }
}

TEST_CASE("element conversions and errors") {
  const auto f = build_field(5, 2);
  const FqElem x{{3, 4}};
  CHECK(f->element(f->index_of(x)) == x);
  CHECK(trace(*f, x) == f->trace(f->index_of(x)));
  CHECK(norm(*f, x) == f->norm(f->index_of(x)));
  CHECK(discrete_log(*f, f->generator()) == 1);
  CHECK_THROWS_AS(f->dlog(0), std::domain_error);
  CHECK_THROWS_AS(f->inv(0), std::domain_error);
  CHECK_THROWS_AS(f->index_of(FqElem{{5, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(build_field(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(build_field(3, 8, 2401), std::invalid_argument);
  CHECK(f->prime_index(-1) == 4);
}

TEST_CASE("from_parts validates") {
  const auto f = build_field(3, 2);
  CHECK(FqCtx::from_parts(3, 2, f->modulus(), f->generator_index())->generator_index() == f->generator_index());
  CHECK_THROWS_AS(FqCtx::from_parts(3, 2, {2, 0, 1}, 4), std::invalid_argument);  // x^2 - 1
  CHECK_THROWS_AS(FqCtx::from_parts(3, 2, {1, 0, 1}, 3), std::invalid_argument);  // x has order 4
  CHECK_THROWS_AS(FqCtx::from_parts(3, 2, {1, 0, 1}, 9), std::invalid_argument);
}
