#include <doctest.h>

#include <random>

#include "icegt/exactalg.hpp"
#include "oracles.hpp"

using namespace icegt;

TEST_CASE("vertex weights as monomials") {
    CHECK(vertex_weight(Family::HV, Letter::b) == WeightMonomial(1, 0));
    CHECK(vertex_weight(Family::HD, Letter::a) == WeightMonomial(1, 3));
    CHECK(vertex_weight(Family::VD, Letter::c) == WeightMonomial(-2, 13));
    CHECK(vertex_weight(Family::HV, Letter::a) == WeightMonomial(-2, 0));
}

TEST_CASE("prefactor") {
    CHECK(prefactor(BoundarySpec({1, 2, 3, 4})) == WeightMonomial(38, 4));
    CHECK(prefactor(BoundarySpec({1})) == WeightMonomial(2, 0));
    // b1^6 a2^30 a3^10
    WeightMonomial expect = WeightMonomial(1, 0).pow(6) * WeightMonomial(1, 3).pow(30) * WeightMonomial(1, -3).pow(10);
    CHECK(prefactor(BoundarySpec({2, 3, 4, 6})) == expect);
    CHECK(expect == WeightMonomial(46, 12));
}

TEST_CASE("q has period 16") {
    CHECK(WeightMonomial(0, 16) == WeightMonomial(0, 0));
    CHECK(WeightMonomial(3, -36) == WeightMonomial(3, 12));
    CHECK(WeightMonomial(0, 1).pow(16) == WeightMonomial());
    CHECK(RingElem::x_pow(8) == RingElem(BigRat(-1)));
    CHECK(RingElem::y_pow(3) * RingElem::y_pow(3) == RingElem(BigRat(2)));
}

TEST_CASE("monomial power of two test") {
    CHECK(WeightMonomial(12, 0).is_power_of_two());
    CHECK_FALSE(WeightMonomial(12, 8).is_power_of_two());
    CHECK_FALSE(WeightMonomial(5, 0).is_power_of_two());
}

namespace {

RingElem random_elem(std::mt19937& rng) {
    std::uniform_int_distribution<int> d(-5, 5), den(1, 4), coin(0, 3);
    RingElem r;
    for (int i = 0; i < RingElem::kX; ++i)
        for (int j = 0; j < RingElem::kY; ++j)
            if (coin(rng) == 0) r.set_coeff(i, j, BigRat(d(rng), den(rng)) );
    return r;
}

}  // namespace

TEST_CASE("ring axioms on random triples") {
    std::mt19937 rng(7);
    for (int t = 0; t < 40; ++t) {
        RingElem a = random_elem(rng), b = random_elem(rng), c = random_elem(rng);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) - b == a);
        CHECK(ring_add(a, b) == a + b);
        CHECK(ring_mul(a, b) == a * b);
    }
}

TEST_CASE("monomial injection is multiplicative") {
    for (int s1 = -7; s1 <= 7; s1 += 2)
        for (int q1 = 0; q1 < 16; q1 += 3)
            for (int s2 = -4; s2 <= 9; s2 += 3)
                for (int q2 = 0; q2 < 16; q2 += 5) {
                    WeightMonomial a(s1, q1), b(s2, q2);
                    CHECK(RingElem::from_monomial(a * b) == RingElem::from_monomial(a) * RingElem::from_monomial(b));
                }
    CHECK(RingElem::from_monomial(WeightMonomial(12, 0)).is_rational());
    CHECK(RingElem::from_monomial(WeightMonomial(12, 0)).rational_value() == 4);
    CHECK(RingElem::from_monomial(WeightMonomial(-6, 8)).rational_value() == BigRat(-1, 2));
}

TEST_CASE("factorials and pochhammer") {
    CHECK(factorials()(0) == 1);
    CHECK(factorials()(10) == 3628800);
    CHECK(factorials()(201) == factorials()(200) * 201);
    CHECK(pochhammer(BigRat(1, 2), 3) == BigRat(15, 8));
    CHECK(pochhammer(BigRat(3), 0) == 1);
    CHECK(pochhammer(BigRat(1), 5) == 120);
}

TEST_CASE("domain-wall product formula") {
    const char* values[] = {"1", "4", "60", "3328", "678912"};
    for (int n = 1; n <= 5; ++n) CHECK(eval_df_formula(n) == BigInt(values[n - 1]));
    CHECK_THROWS_AS(eval_df_formula(0), std::invalid_argument);
}

TEST_CASE("free boundary formula") {
    CHECK(eval_free_boundary_formula(5, 4) == 678912);
    CHECK(eval_free_boundary_formula(1, 0) == 1);
    BigInt brute = oracle::count_20v({1, 2}) + oracle::count_20v({1, 3}) + oracle::count_20v({2, 3});
    CHECK(brute == 14);
    CHECK(eval_free_boundary_formula(2, 2) == brute);
    for (int n = 1; n <= 6; ++n) {
        CHECK(eval_free_boundary_formula(n, n - 1) == eval_df_formula(n));
        for (int m = n - 1; m <= n + 4; ++m) CHECK_NOTHROW(eval_free_boundary_formula(n, m));
    }
}
