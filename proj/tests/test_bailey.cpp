/// @file test_bailey.cpp
/// @brief Unit tests for the extended transform: beta/gamma construction,
///        the double-sum interchange, and the fourteen derivation recipes.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qreduce/bailey.hpp"
#include "qreduce/identities.hpp"

using namespace qreduce;

namespace {

Rat R(long n, long d) { return Rat(n) / d; }

BaileyConfig all_ones(long R_, long p, long pp) {
    BaileyConfig c;
    c.p = p;
    c.p_prime = pp;
    c.delta_support = R_;
    c.alpha = SequenceSpec::constant(Rat(1));
    c.delta = SequenceSpec::constant(Rat(1));
    c.u = SequenceSpec::constant(Rat(1));
    c.v = SequenceSpec::constant(Rat(1));
    c.t = SequenceSpec::constant(Rat(1));
    c.w = SequenceSpec::constant(Rat(1));
    c.z = SequenceSpec::constant(Rat(1));
    return c;
}

}  // namespace

TEST_CASE("all-ones transform: beta, gamma, and both sides") {
    const auto c = all_ones(4, 0, 0);
    for (long n = 0; n <= 4; ++n) {
        REQUIRE(beta_seq(c, n) == n + 1);
        REQUIRE(gamma_seq(c, n) == 4 - n + 1);
    }
    REQUIRE(gamma_seq(c, 5) == 0);
    const auto out = transform_check(c);
    REQUIRE(out.status == CompareStatus::PASS);
    REQUIRE(out.lhs == 15);
    REQUIRE(out.rhs == 15);
}

TEST_CASE("delta supported only at zero") {
    auto c = all_ones(0, 1, 1);
    REQUIRE(gamma_seq(c, 0) == 1);
    REQUIRE(gamma_seq(c, 3) == 0);
    const auto out = transform_check(c);
    REQUIRE(out.status == CompareStatus::PASS);
    REQUIRE(out.lhs == out.rhs);
}

TEST_CASE("random tables pass for every (p, p') in a window") {
    std::mt19937_64 gen(12345);
    auto rnd = [&] { return R(1 + static_cast<long>(gen() % 7), 8); };
    for (long p = -2; p <= 3; ++p)
        for (long pp = -2; pp <= 3; ++pp) {
            const long Rsup = 5;
            auto table = [&](long len) {
                std::vector<Rat> t;
                for (long i = 0; i < len; ++i) t.push_back(rnd());
                return SequenceSpec::from_table(t);
            };
            BaileyConfig c;
            c.p = p;
            c.p_prime = pp;
            c.delta_support = Rsup;
            // index reach: |p| and |p'| up to 3, indices up to ~4R
            const long reach = 8 * Rsup + 8;
            c.alpha = table(Rsup + 1);
            c.delta = table(Rsup + 1);
            c.u = table(reach);
            c.v = table(reach);
            c.t = table(reach);
            // w and z see negative indices when p or p' is negative;
            // constants keep them total
            c.w = SequenceSpec::constant(rnd());
            c.z = SequenceSpec::constant(rnd());
            const auto out = transform_check(c);
            REQUIRE(out.status == CompareStatus::PASS);
        }
}

TEST_CASE("closed sequences reject negative indices") {
    auto c = all_ones(2, 0, 0);
    c.u = SequenceSpec::closed([](long i) { return Rat(i); });
    REQUIRE_THROWS_WITH(c.u.at(-1), "negative sequence index");
}

TEST_CASE("recipe ids round-trip") {
    const auto& ids = recipe_ids();
    REQUIRE(static_cast<int>(ids.size()) == kRecipeCount);
    for (int i = 1; i <= kRecipeCount; ++i)
        REQUIRE(recipe_index(ids[static_cast<size_t>(i - 1)]) == i);
    REQUIRE(recipe_index("xv") == 0);
    REQUIRE_THROWS_WITH(
        recipe("xv", {}, 1, QBase(R(1, 2)), 4, {}, {}), "unknown recipe id: xv");
}

TEST_CASE("every recipe instantiation satisfies the transform") {
    const QBase base(R(1, 2));
    for (int idx = 1; idx <= kRecipeCount; ++idx) {
        // reuse the linked identity's documented sample parameters
        std::string linked;
        for (const auto& id : identity_ids())
            if (id[0] == '2' && identity_info(id).recipe == idx) {
                linked = id;
                break;
            }
        REQUIRE_FALSE(linked.empty());
        const auto sample = sample_assignment(linked);
        for (long p : validity_window(linked)) {
            const RecipeInstance inst =
                make_recipe(idx, sample.values, p, base, 5, {}, {});
            const auto out = transform_check(inst.config);
            REQUIRE(out.status == CompareStatus::PASS);
            REQUIRE_FALSE(inst.closure.empty());
        }
    }
}

TEST_CASE("recipe p' offsets") {
    const QBase base(R(1, 2));
    auto pp = [&](int idx, const std::string& linked, long p) {
        return make_recipe(idx, sample_assignment(linked).values, p, base, 3, {}, {})
            .p_prime;
    };
    REQUIRE(pp(1, "2.1", 1) == 1);
    REQUIRE(pp(5, "2.5", 1) == 2);
    REQUIRE(pp(6, "2.6", 1) == 3);
    REQUIRE(pp(8, "2.8", 1) == 4);
    REQUIRE(pp(10, "2.10", 1) == 0);
    REQUIRE(pp(13, "2.13", 2) == 0);
    REQUIRE(pp(14, "2.14", 0) == 0);
}
