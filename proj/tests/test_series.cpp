/// @file test_series.cpp
/// @brief Unit tests for lattice-indexed term families: binding, coefficient
///        extraction, comparison, and truncated products.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qreduce/series.hpp"

using namespace qreduce;

namespace {

Rat R(long n, long d) { return Rat(n) / d; }

/// sum_n (a; q)_n x^n / (q; q)_n, the q-binomial theorem series.
TermFamily q_binomial_family() {
    TermFamily fam;
    fam.arity = 1;
    fam.numerator.push_back({ParamExpr::sym("a"), 1, {PInt(1), PInt(0), PInt(0)}});
    fam.denominator.push_back(
        {ParamExpr::constant(Rat(1)).qfactor(1), 1, {PInt(1), PInt(0), PInt(0)}});
    fam.x_exponent = {PInt(1), PInt(0), PInt(0)};
    return fam;
}

}  // namespace

TEST_CASE("q-binomial theorem as a term family") {
    const QBase base(R(1, 2));
    const Assignment a{{"a", R(1, 3)}};
    const auto bf = qreduce::bind(q_binomial_family(), a, 0, base, 8);
    const auto oracle = q_binomial_series(R(1, 3), base.q, 8);
    for (long m = 0; m <= 8; ++m) REQUIRE(bf.coefficient_of(m) == oracle[static_cast<size_t>(m)]);
}

TEST_CASE("two-index family collects the full anti-diagonal") {
    // sum_{n,r} x^{n+r}: coefficient of x^m counts the m+1 lattice points
    TermFamily fam;
    fam.arity = 2;
    fam.x_exponent = {PInt(1), PInt(1), PInt(0)};
    const QBase base(R(1, 2));
    const auto bf = qreduce::bind(fam, {}, 0, base, 6);
    for (long m = 0; m <= 6; ++m) REQUIRE(bf.coefficient_of(m) == m + 1);
}

TEST_CASE("p substitution in index forms") {
    // (a; q)_{pn} with p = 2 equals (a; q)_{2n}
    TermFamily fam;
    fam.arity = 1;
    fam.numerator.push_back({ParamExpr::sym("a"), 1, {PInt(0, 1), PInt(0), PInt(0)}});
    fam.x_exponent = {PInt(1), PInt(0), PInt(0)};
    const QBase base(R(1, 3));
    const Assignment a{{"a", R(2, 5)}};
    const auto bf = qreduce::bind(fam, a, 2, base, 5);
    for (long n = 0; n <= 5; ++n)
        REQUIRE(bf.term(n, 0) == q_pochhammer(R(2, 5), base.q, 2 * n));
}

TEST_CASE("bind rejects bad shapes") {
    const QBase base(R(1, 2));
    TermFamily fam;
    fam.arity = 1;
    fam.x_exponent = {PInt(0), PInt(0), PInt(0)};
    REQUIRE_THROWS_WITH(qreduce::bind(fam, {}, 0, base, 4), "x_exponent must grow with n");

    TermFamily neg;
    neg.arity = 1;
    neg.x_exponent = {PInt(1), PInt(0), PInt(0)};
    neg.numerator.push_back({ParamExpr::sym("a"), 1, {PInt(-1), PInt(0), PInt(0)}});
    REQUIRE_THROWS_WITH(qreduce::bind(neg, {{"a", R(1, 3)}}, 0, base, 4),
                        "negative Pochhammer index");

    TermFamily pole;
    pole.arity = 1;
    pole.x_exponent = {PInt(1), PInt(0), PInt(0)};
    pole.denominator.push_back({ParamExpr::sym("a"), 1, {PInt(1), PInt(0), PInt(0)}});
    REQUIRE_THROWS_WITH(qreduce::bind(pole, {{"a", Rat(1)}}, 0, base, 4), "parameter pole");

    REQUIRE_THROWS_WITH(qreduce::bind(q_binomial_family(), {}, 0, base, 4), "unbound symbol: a");
}

TEST_CASE("compare reports the first mismatching degree") {
    TruncatedSeries l{{Rat(1), Rat(2), Rat(3)}};
    TruncatedSeries r{{Rat(1), Rat(2), Rat(4)}};
    const auto same = compare(l, l);
    REQUIRE(same.status == CompareStatus::PASS);
    const auto diff = compare(l, r);
    REQUIRE(diff.status == CompareStatus::MISMATCH);
    REQUIRE(diff.degree == 2);
    REQUIRE(diff.lhs == 3);
    REQUIRE(diff.rhs == 4);
    TruncatedSeries shorter{{Rat(1)}};
    REQUIRE_THROWS(compare(l, shorter));
}

TEST_CASE("truncate_product convolves families and explicit factors") {
    const QBase base(R(1, 2));
    const Assignment a{{"a", R(1, 3)}};
    // (az; q)_inf / (z; q)_inf times (z; q)_inf should equal (az; q)_inf
    SeriesProduct prod;
    prod.families.push_back(q_binomial_family());
    prod.explicits.push_back(
        {"euler", [](const Assignment&, long, const QBase& b, long N) {
             return euler_product_series(b.q, N);
         },
         nullptr});
    const auto got = truncate_product(prod, a, 0, base, 6);
    std::vector<Rat> want(7, 0);
    {
        const auto e = euler_product_series(base.q, 6);
        for (size_t m = 0; m < want.size(); ++m)
            want[m] = e[m] * rpow(R(1, 3), static_cast<long>(m));
    }
    for (size_t m = 0; m < want.size(); ++m) REQUIRE(got.coeffs[m] == want[m]);
}

TEST_CASE("ParamExpr builders") {
    const QBase base(R(1, 2));
    const Assignment a{{"z", R(1, 3)}, {"k", R(1, 5)}};
    const Rat v = ParamExpr::sym("z").times("k", -1).qfactor(2).scale(Rat(-3)).eval(a, base);
    // -3 * z / k * q^2 with q = 1/4
    REQUIRE(v == Rat(-3) * R(1, 3) / R(1, 5) * R(1, 16));
    REQUIRE(ParamExpr::constant(R(2, 7)).bfactor(-1).eval(a, base) == R(4, 7));
}
