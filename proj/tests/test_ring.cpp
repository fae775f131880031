#include <gtest/gtest.h>

#include "oracles.hpp"
#include "sublat/arith.hpp"
#include "sublat/errors.hpp"
#include "sublat/ring.hpp"

using namespace sublat;

namespace {

Ideal z(std::int64_t g) { return Ideal(Ring::integers(), {g}); }
Ideal zn(std::int64_t n, std::int64_t g) { return Ideal(Ring::residue(n), {g}); }

}  // namespace

TEST(Arith, Factorize) {
  EXPECT_TRUE(factorize(1).empty());
  EXPECT_EQ(factorize(120), (std::vector<std::int64_t>{2, 2, 2, 3, 5}));
  EXPECT_EQ(factorize(9797), (std::vector<std::int64_t>{97, 101}));
  EXPECT_THROW(factorize(0), DomainError);
  EXPECT_THROW(factorize(1000, 999), ResourceError);
}

TEST(Arith, HelpersAgreeWithNaive) {
  for (std::int64_t n = 1; n <= 400; ++n) {
    EXPECT_EQ(divisors(n), oracle::divisors_of(n)) << n;
    EXPECT_EQ(distinct_primes(n), oracle::primes_of(n)) << n;
    std::int64_t rad = 1;
    for (auto p : oracle::primes_of(n)) rad *= p;
    EXPECT_EQ(radical_of(n), rad) << n;
    EXPECT_EQ(is_prime(n), oracle::primes_of(n) == std::vector<std::int64_t>{n}) << n;
  }
}

TEST(Ring, ParseAndDescribe) {
  EXPECT_EQ(parse_ring("Z").kind(), Ring::Kind::Integer);
  EXPECT_EQ(parse_ring(" Z12 ").descriptor(), "Z12");
  const Ring p = parse_ring("Z4 * Z9");
  EXPECT_EQ(p.kind(), Ring::Kind::Product);
  EXPECT_EQ(p.descriptor(), "Z4*Z9");
  EXPECT_THROW(parse_ring("Q"), UsageError);
  EXPECT_THROW(parse_ring("Z0"), DomainError);
  EXPECT_THROW(parse_ring(""), UsageError);
}

TEST(Ideal, Canonicalization) {
  EXPECT_EQ(z(-12), z(12));
  EXPECT_EQ(zn(12, 8), zn(12, 4));
  EXPECT_EQ(zn(12, 0), Ideal::zero(Ring::residue(12)));
  EXPECT_TRUE(zn(12, 5).is_unit());
  EXPECT_EQ(z(12).to_string(), "12Z");
  EXPECT_EQ(zn(12, 2).to_string(), "2Z/12Z");
  EXPECT_THROW(Ideal(Ring::product({4, 9}), {2}), DomainError);
}

TEST(Ideal, Arithmetic) {
  EXPECT_EQ(ideal_combine(z(4), z(6), IdealOp::Intersect), z(12));
  EXPECT_EQ(ideal_combine(zn(12, 2), zn(12, 3), IdealOp::Sum), zn(12, 1));
  EXPECT_EQ(ideal_combine(z(6), z(4), IdealOp::Colon), z(3));
  EXPECT_EQ(ideal_radical(z(12)), z(6));
  EXPECT_EQ(ideal_radical(z(0)), z(0));
  EXPECT_EQ(ideal_radical(zn(24, 8)), zn(24, 2));
}

TEST(Ideal, ColonMatchesScan) {
  for (std::int64_t a = 1; a <= 30; ++a)
    for (std::int64_t b = 1; b <= 30; ++b) {
      std::int64_t least = 0;
      for (std::int64_t r = 1; r <= a * b && least == 0; ++r)
        if ((r * b) % a == 0) least = r;
      EXPECT_EQ(ideal_combine(z(a), z(b), IdealOp::Colon), z(least)) << a << " " << b;
    }
}

TEST(Ideal, IntegerExamples) {
  EXPECT_TRUE(classify_ideal(z(12), IdealPredicate::StronglyTwoIrreducible));
  EXPECT_FALSE(classify_ideal(z(30), IdealPredicate::StronglyTwoIrreducible));
  EXPECT_TRUE(classify_ideal(z(7), IdealPredicate::Prime));
  EXPECT_TRUE(classify_ideal(z(0), IdealPredicate::StronglyTwoIrreducible));
  EXPECT_THROW(classify_ideal(z(1), IdealPredicate::Prime), DomainError);
  EXPECT_THROW(classify_ideal(z(2'000'000'000'000), IdealPredicate::Prime), ResourceError);
  EXPECT_THROW(classify_ideal(z(1000), IdealPredicate::Prime, 999), ResourceError);
}

TEST(Ideal, IntegerStronglyTwoIrreducibleMatchesDivisorTriples) {
  for (std::int64_t n = 2; n <= 300; ++n) {
    const bool oracle = oracle::z_strongly_two_irreducible(n);
    EXPECT_EQ(classify_ideal(z(n), IdealPredicate::StronglyTwoIrreducible), oracle) << n;
    EXPECT_EQ(oracle, oracle::primes_of(n).size() <= 2) << n;
  }
}

TEST(Ideal, IntegerTwoAbsorbingMatchesResidueScan) {
  for (std::int64_t g = 2; g <= 150; ++g)
    EXPECT_EQ(classify_ideal(z(g), IdealPredicate::TwoAbsorbing), oracle::z_two_absorbing(g)) << g;
}

TEST(Ideal, IntegerClosedForms) {
  for (std::int64_t g = 2; g <= 300; ++g) {
    const auto primes = oracle::primes_of(g);
    EXPECT_EQ(classify_ideal(z(g), IdealPredicate::Prime), primes == std::vector<std::int64_t>{g}) << g;
    EXPECT_EQ(classify_ideal(z(g), IdealPredicate::StronglyIrreducible), primes.size() == 1) << g;
    // Every ideal of Z is irreducible iff it is a prime power (or 0).
    EXPECT_EQ(classify_ideal(z(g), IdealPredicate::Irreducible), primes.size() == 1) << g;
    EXPECT_EQ(classify_ideal(z(g), IdealPredicate::TwoIrreducible), primes.size() <= 2) << g;
  }
}

TEST(Ideal, ResidueRingMatchesIntegerLift) {
  // Ideals of Z/n containing nZ/nZ correspond to divisors d of n; the lattice
  // {dZ/nZ} is the divisor lattice of n, so lattice predicates agree with Z
  // restricted to divisors. Prime and 2-absorbing are checked by elements.
  for (std::int64_t n = 2; n <= 60; ++n)
    for (auto d : oracle::divisors_of(n)) {
      if (d == 1) continue;
      const auto I = zn(n, d);
      bool prime = true, absorbing = true;
      for (std::int64_t a = 0; a < n; ++a)
        for (std::int64_t b = 0; b < n; ++b) {
          if ((a * b) % d == 0 && a % d != 0 && b % d != 0) prime = false;
          for (std::int64_t c = 0; c < n && absorbing; ++c)
            if ((a * b % n) * c % d == 0 && (a * b) % d != 0 && (a * c) % d != 0 && (b * c) % d != 0)
              absorbing = false;
        }
      EXPECT_EQ(classify_ideal(I, IdealPredicate::Prime), prime) << d << "Z/" << n;
      EXPECT_EQ(classify_ideal(I, IdealPredicate::TwoAbsorbing), absorbing) << d << "Z/" << n;
    }
}

TEST(Ideal, AllIdealsOfProductRing) {
  const auto ideals = all_ideals(Ring::product({4, 9}));
  EXPECT_EQ(ideals.size(), 9u);
  EXPECT_THROW(all_ideals(Ring::integers()), DomainError);
}
