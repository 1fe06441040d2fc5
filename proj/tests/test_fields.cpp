#include <catch2/catch_amalgamated.hpp>

#include <qsl2/cyclotomic.hpp>
#include <qsl2/prime_field.hpp>
#include <qsl2/rational.hpp>
#include <qsl2/rational_function.hpp>

#include <atomic>
#include <thread>

#include "generators.hpp"

using namespace qsl2;

namespace {

template <class K, class Gen>
void check_field_axioms(gen::Rng& rng, Gen draw, int trials) {
    for (int t = 0; t < trials; ++t) {
        const K a = draw(rng), b = draw(rng), c = draw(rng);
        REQUIRE((a + b) + c == a + (b + c));
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE(a + b == b + a);
        REQUIRE(a * b == b * a);
        REQUIRE(a + K{} == a);
        if (!a.is_zero()) {
            REQUIRE(a * a.inverse() == a.one());
            REQUIRE(a.inverse().inverse() == a);
        }
        REQUIRE(a + (-a) == K{});
    }
}

}  // namespace

TEST_CASE("rational arithmetic basics") {
    REQUIRE(Rational(1, 3) + Rational(2, 5) == Rational(11, 15));
    REQUIRE(Rational(1, 2) * Rational(2, 1) == Rational(1));
    REQUIRE(Rational(-4, 8).str() == "-1/2");
    REQUIRE(Rational(7).str() == "7");
    REQUIRE_THROWS_AS(Rational(1).operator/(Rational(0)), DivisionByZero);
    Rational root;
    REQUIRE(Rational(9, 4).square_root(root));
    REQUIRE(root == Rational(3, 2));
    REQUIRE_FALSE(Rational(2).square_root(root));
}

TEST_CASE("prime field arithmetic and tags") {
    const PrimeField a(3, 5), b(4, 5);
    REQUIRE(a + b == PrimeField(2, 5));
    REQUIRE(a * b == PrimeField(2, 5));
    REQUIRE(a.inverse() == PrimeField(2, 5));  // 3*2 = 6 = 1 mod 5
    REQUIRE((a / b).str() == "2 mod 5");       // 3 * 4^{-1} = 3*4 = 12 = 2
    REQUIRE_THROWS_AS(PrimeField(1, 5) + PrimeField(1, 7), FieldMismatch);
    // untagged constants adopt the modulus on contact
    REQUIRE(PrimeField(7) + PrimeField(0, 5) == PrimeField(2, 5));
    REQUIRE_THROWS_AS(PrimeField(0, 5).inverse(), DivisionByZero);
}

TEST_CASE("cyclotomic arithmetic") {
    // zeta_4 = i: i^2 = -1
    const Cyclotomic i = Cyclotomic::zeta(4);
    REQUIRE(i * i == Cyclotomic(4, RatPoly::constant(Rational(-1))));
    REQUIRE(i.inverse() == -i);
    // zeta_3 satisfies z^2 + z + 1 = 0
    const Cyclotomic w = Cyclotomic::zeta(3);
    REQUIRE(w * w + w + w.one() == w.zero());
    // zeta_6 + zeta_6^{-1} = 1
    const Cyclotomic z6 = Cyclotomic::zeta(6);
    REQUIRE(z6 + z6.inverse() == z6.one());
    REQUIRE_THROWS_AS(Cyclotomic::zeta(3) + Cyclotomic::zeta(4), FieldMismatch);
}

TEST_CASE("cyclotomic polynomials") {
    REQUIRE(cyclotomic_polynomial(1) == RatPoly{Rational(-1), Rational(1)});
    REQUIRE(cyclotomic_polynomial(2) == RatPoly{Rational(1), Rational(1)});
    REQUIRE(cyclotomic_polynomial(4) == RatPoly{Rational(1), Rational(0), Rational(1)});
    REQUIRE(cyclotomic_polynomial(6) == RatPoly{Rational(1), Rational(-1), Rational(1)});
    REQUIRE(cyclotomic_polynomial(12) ==
            RatPoly{Rational(1), Rational(0), Rational(-1), Rational(0), Rational(1)});
    REQUIRE(cyclotomic_polynomial(5).degree() == 4);
    REQUIRE(cyclotomic_polynomial(8).degree() == 4);
}

TEST_CASE("rational function arithmetic") {
    const RationalFunction q = RationalFunction::variable();
    const RationalFunction x = q + q.inverse();
    REQUIRE(x * q == q * q + q.one());
    REQUIRE(q.inverse().str() == "(1)/(q)");
    REQUIRE((q * q - q.one()).str() == "q^2 - 1");
    // reduction: (q^2-1)/(q-1) = q+1
    const RationalFunction r(RatPoly{Rational(-1), Rational(0), Rational(1)},
                             RatPoly{Rational(-1), Rational(1)});
    REQUIRE(r == q + q.one());
    RationalFunction root;
    REQUIRE((q * q).square_root(root));
    REQUIRE(root == q);
    const RationalFunction disc = x * x - RationalFunction(4);  // (q-1/q)^2
    REQUIRE(disc.square_root(root));
    REQUIRE(root * root == disc);
}

TEST_CASE("field axioms on random triples") {
    gen::Rng rng(20240817);
    check_field_axioms<Rational>(rng, gen::rational, 50);
    for (long p : {2L, 3L, 5L, 7L})
        check_field_axioms<PrimeField>(rng, [p](gen::Rng& r) { return gen::prime_field(r, p); }, 50);
    for (unsigned long n : {3ul, 4ul, 5ul, 8ul, 12ul})
        check_field_axioms<Cyclotomic>(rng, [n](gen::Rng& r) { return gen::cyclotomic(r, n); }, 20);
    check_field_axioms<RationalFunction>(rng, gen::rational_function, 20);
}

TEST_CASE("degenerate conductors") {
    // Q(zeta_1) = Q with z = 1, Q(zeta_2) = Q with z = -1
    REQUIRE(Cyclotomic::zeta(1) == Cyclotomic(1, RatPoly::constant(Rational(1))));
    REQUIRE(Cyclotomic::zeta(2) == Cyclotomic(2, RatPoly::constant(Rational(-1))));
    REQUIRE(Cyclotomic::zeta(2) * Cyclotomic::zeta(2) == Cyclotomic::zeta(2).one());
}

TEST_CASE("concurrent access to the cached tables") {
    std::vector<std::thread> threads;
    std::atomic<bool> ok{true};
    for (int t = 0; t < 8; ++t)
        threads.emplace_back([&ok, t] {
            try {
                for (unsigned n = 1; n <= 24; ++n) {
                    const auto& phi = cyclotomic_polynomial(n);
                    if (static_cast<unsigned long>(phi.degree()) != euler_phi(n)) ok = false;
                }
                const Cyclotomic z = Cyclotomic::zeta(static_cast<unsigned long>(5 + t % 3));
                if ((z * z.inverse()) != z.one()) ok = false;
            } catch (...) {
                ok = false;
            }
        });
    for (auto& th : threads) th.join();
    REQUIRE(ok);
}

TEST_CASE("scalar serialization shapes") {
    REQUIRE(PrimeField(3, 5).str() == "3 mod 5");
    REQUIRE(Cyclotomic::zeta(8).str() == "zeta 8: z");
    const Cyclotomic c = Cyclotomic::zeta(8) * Cyclotomic(2) - Cyclotomic(1);
    REQUIRE(c.str() == "zeta 8: 2z - 1");
    const RationalFunction q = RationalFunction::variable();
    REQUIRE((-q - q.inverse()).str() == "(-q^2 - 1)/(q)");
}
