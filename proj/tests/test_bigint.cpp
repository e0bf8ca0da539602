#include <doctest.h>

#include <random>

#include "quiverh1/bigint.hpp"
#include "quiverh1/field.hpp"

using qh1::BigInt;
using qh1::Rat;

TEST_CASE("bigint arithmetic agrees with native on random small operands") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 2000; ++t) {
        long long a = static_cast<long long>(rng() % 2000001) - 1000000;
        long long b = static_cast<long long>(rng() % 2000001) - 1000000;
        CHECK((BigInt(a) + BigInt(b)).to_string() == std::to_string(a + b));
        CHECK((BigInt(a) - BigInt(b)).to_string() == std::to_string(a - b));
        CHECK((BigInt(a) * BigInt(b)).to_string() == std::to_string(a * b));
        if (b != 0) {
            BigInt q, r;
            BigInt::divmod(BigInt(a), BigInt(b), q, r);
            CHECK(q.to_string() == std::to_string(a / b));
            CHECK(r.to_string() == std::to_string(a % b));
        }
    }
}

TEST_CASE("bigint large multiplication and division") {
    BigInt a = BigInt::from_string("123456789012345678901234567890");
    BigInt b = BigInt::from_string("987654321098765432109876543210");
    BigInt p = a * b;
    CHECK(p.to_string() == "121932631137021795226185032733622923332237463801111263526900");
    BigInt q, r;
    BigInt::divmod(p, a, q, r);
    CHECK(q.to_string() == b.to_string());
    CHECK(r.is_zero());
    CHECK(BigInt::gcd(a * b, b) == (b < BigInt(0) ? -b : b));
}

TEST_CASE("rational normalization and arithmetic") {
    Rat half(BigInt(1), BigInt(2));
    Rat third(BigInt(1), BigInt(3));
    CHECK((half + third).to_string() == "5/6");
    CHECK((half - half).to_string() == "0");
    CHECK((half * third).to_string() == "1/6");
    CHECK((half / third).to_string() == "3/2");
    CHECK(Rat(BigInt(-4), BigInt(-6)).to_string() == "2/3");
    CHECK(Rat(BigInt(4), BigInt(-6)).to_string() == "-2/3");
    CHECK(Rat::from_string("-10/4").to_string() == "-5/2");
}

TEST_CASE("prime field arithmetic") {
    qh1::PrimeField f3(3);
    CHECK(f3.add(2, 2) == 1);
    CHECK(f3.neg(1) == 2);
    CHECK(f3.inv(2) == 2);
    CHECK(f3.from_int(-7) == 2);
    qh1::PrimeField f7(7);
    for (uint32_t x = 1; x < 7; ++x) CHECK(f7.mul(x, f7.inv(x)) == 1);
    CHECK_THROWS_AS(qh1::FieldSpec::prime(4), qh1::Error);
    CHECK_THROWS_AS(qh1::FieldSpec::prime(1), qh1::Error);
}
