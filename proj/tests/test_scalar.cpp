#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "scalar.hpp"

using namespace homjj;

namespace {
const FieldTag Q = FieldTag::rationals();
const FieldTag F5 = FieldTag::prime_field(5);
}  // namespace

TEST_CASE("rational parsing reduces to canonical form") {
    CHECK(Scalar::parse("2/4", Q).str() == "1/2");
    CHECK(Scalar::parse("-6/4", Q).str() == "-3/2");
    CHECK(Scalar::parse("0/7", Q).str() == "0");
    CHECK(Scalar::parse("12", Q).str() == "12");
    CHECK(Scalar::parse("-0", Q).str() == "0");
}

TEST_CASE("rational parsing rejects bad grammar") {
    CHECK_THROWS_AS(Scalar::parse("-3/-6", Q), Error);  // denominator must be unsigned
    CHECK_THROWS_AS(Scalar::parse("1/0", Q), Error);
    CHECK_THROWS_AS(Scalar::parse("abc", Q), Error);
    CHECK_THROWS_AS(Scalar::parse("", Q), Error);
    CHECK_THROWS_AS(Scalar::parse("1.5", Q), Error);
    CHECK_THROWS_AS(Scalar::parse("1/2/3", Q), Error);
}

TEST_CASE("prime field parsing reduces mod p") {
    CHECK(Scalar::parse("7", F5).str() == "2");
    CHECK(Scalar::parse("0", F5).str() == "0");
    CHECK(Scalar::parse("123456789012345678901234567890", F5).str() == "0");
    CHECK_THROWS_AS(Scalar::parse("-1", F5), Error);
    CHECK_THROWS_AS(Scalar::parse("1/2", F5), Error);
}

TEST_CASE("unsupported primes rejected") {
    CHECK_THROWS_AS(FieldTag::prime_field(4), Error);
    CHECK_THROWS_AS(FieldTag::prime_field(11), Error);
    CHECK(FieldTag::prime_field(7).name() == "F7");
    CHECK(FieldTag::from_name("F3") == FieldTag::prime_field(3));
    CHECK(FieldTag::from_name("Q") == Q);
    CHECK_THROWS_AS(FieldTag::from_name("R"), Error);
}

TEST_CASE("domains never mix") {
    Scalar a = Scalar::of_int(1, Q);
    Scalar b = Scalar::of_int(1, F5);
    CHECK_THROWS_AS(a + b, Error);
    CHECK_THROWS_AS(a * b, Error);
    Scalar c = Scalar::of_int(1, FieldTag::prime_field(3));
    CHECK_THROWS_AS(b + c, Error);
}

TEST_CASE("field axioms on random triples, exact") {
    std::mt19937_64 rng(7);
    auto random_scalar = [&](FieldTag tag) {
        long num = static_cast<long>(rng() % 21) - 10;
        long den = static_cast<long>(rng() % 9) + 1;
        if (tag.kind == FieldKind::Q) {
            return Scalar::rational(mpq_class(num, den));
        }
        return Scalar::of_int(num, tag);
    };
    for (FieldTag tag : {Q, F5, FieldTag::prime_field(2), FieldTag::prime_field(7)}) {
        for (int trial = 0; trial < 200; ++trial) {
            Scalar a = random_scalar(tag);
            Scalar b = random_scalar(tag);
            Scalar c = random_scalar(tag);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a - a == Scalar::zero(tag));
            if (!a.is_zero()) {
                CHECK(a * a.inverse() == Scalar::one(tag));
            }
        }
    }
}

TEST_CASE("parse then serialize is the identity on canonical text") {
    for (const char* text : {"0", "1", "-1", "3/7", "-22/5", "100"}) {
        CHECK(Scalar::parse(text, Q).str() == text);
    }
    for (const char* text : {"0", "1", "4"}) {
        CHECK(Scalar::parse(text, F5).str() == text);
    }
}

TEST_CASE("division by zero is an error") {
    CHECK_THROWS_AS(Scalar::zero(Q).inverse(), Error);
    CHECK_THROWS_AS(Scalar::one(F5) / Scalar::zero(F5), Error);
}
