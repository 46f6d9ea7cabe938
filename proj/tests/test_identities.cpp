/// @file test_identities.cpp
/// @brief Unit tests for the identity registry, the verification driver, the
///        discrepancy ledger variants, and the sweep machinery.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qreduce/identities.hpp"

using namespace qreduce;

TEST_CASE("registry enumerates all ids") {
    const auto& ids = identity_ids();
    REQUIRE(ids.size() == 17);
    REQUIRE(ids.front() == "2.1");
    REQUIRE(ids.back() == "4.3");
    REQUIRE_THROWS_WITH(identity_info("9.9"), "unknown identity id: 9.9");
}

TEST_CASE("validity windows") {
    REQUIRE(validity_window("2.1") == std::vector<long>{0, 1, 2});
    REQUIRE(validity_window("2.2") == std::vector<long>{1, 2});
    REQUIRE(validity_window("2.11") == std::vector<long>{2});
    REQUIRE(validity_window("2.13") == std::vector<long>{2});
    REQUIRE(validity_window("2.14") == std::vector<long>{0});
    REQUIRE(validity_window("4.1") == std::vector<long>{0});
    REQUIRE(validity_window("4.3") == std::vector<long>{1});
    REQUIRE_THROWS_WITH(build("2.11", 0, 0, 0), "p out of range for identity");
}

TEST_CASE("default variants follow the ledger") {
    for (const auto& id : {"2.2", "2.6", "2.7", "2.10", "2.14"}) {
        REQUIRE(default_variant(id) == Variant::Corrected);
        REQUIRE_FALSE(identity_info(id).note.empty());
    }
    for (const auto& id : {"2.1", "2.3", "2.12", "4.1", "4.2"}) {
        REQUIRE(default_variant(id) == Variant::Verbatim);
        REQUIRE(identity_info(id).note.empty());
    }
}

TEST_CASE("order zero always passes") {
    for (const auto& id : identity_ids()) {
        const auto rep = verify(id, sample_assignment(id), 0, default_variant(id));
        REQUIRE(rep.status == "PASS");
    }
}

TEST_CASE("sample assignments verify at order 8") {
    for (const auto& id : identity_ids()) {
        const auto rep = verify(id, sample_assignment(id), 8, default_variant(id));
        CAPTURE(id);
        REQUIRE(rep.status == "PASS");
    }
}

TEST_CASE("verbatim variants of ledgered identities mismatch") {
    for (const auto& id : {"2.2", "2.6", "2.7", "2.10", "2.14"}) {
        auto a = sample_assignment(id);
        // the verbatim text of 2.6 and 2.7 mentions an extra symbol v
        a.values["v"] = Rat(2) / 7;
        const auto rep = verify(id, a, 8, Variant::Verbatim);
        CAPTURE(id);
        REQUIRE(rep.status == "MISMATCH");
        REQUIRE(rep.has_coeffs);
        REQUIRE(rep.mismatch_degree >= 1);
        REQUIRE(rep.lhs_coeff != rep.rhs_coeff);
    }
}

TEST_CASE("pole assignments come back INVALID with a reason") {
    auto a = sample_assignment("2.1");
    a.values["k"] = Rat(1);  // (k; q)_n denominator pole
    const auto rep = verify("2.1", a, 6, Variant::Verbatim);
    REQUIRE(rep.status == "INVALID");
    REQUIRE_FALSE(rep.reason.empty());
}

TEST_CASE("4.2 rejects an inconsistent derived parameter") {
    auto a = sample_assignment("4.2");
    a.values["sqrt_v"] = Rat(1) / 3;  // (1/3)^2 != v
    const auto rep = verify("4.2", a, 6, Variant::Verbatim);
    REQUIRE(rep.status == "INVALID");
    REQUIRE(rep.reason.find("sqrt_v") != std::string::npos);
}

TEST_CASE("d and g parameter blocks") {
    auto a = sample_assignment("2.3");
    a.d = {Rat(1) / 7};
    a.g = {Rat(1) / 9};
    const auto rep = verify("2.3", a, 8, Variant::Verbatim);
    REQUIRE(rep.status == "PASS");
    REQUIRE(rep.D == 1);
    REQUIRE(rep.G == 1);
}

TEST_CASE("sweep is deterministic and covers the window") {
    const auto r1 = sweep("2.12", 8, 2, 42);
    const auto r2 = sweep("2.12", 8, 2, 42);
    REQUIRE(r1.size() == r2.size());
    REQUIRE(r1.size() == 2 * validity_window("2.12").size());
    for (size_t i = 0; i < r1.size(); ++i) {
        REQUIRE(r1[i].status == r2[i].status);
        REQUIRE(r1[i].params == r2[i].params);
        REQUIRE(r1[i].b == r2[i].b);
        REQUIRE(r1[i].status == "PASS");
    }
    const auto r3 = sweep("2.12", 8, 2, 43);
    bool differs = false;
    for (size_t i = 0; i < r3.size(); ++i)
        if (r3[i].params != r1[i].params || r3[i].b != r1[i].b) differs = true;
    REQUIRE(differs);
}

TEST_CASE("cross check against the derivation recipes") {
    for (const auto& id : identity_ids()) {
        if (identity_info(id).recipe == 0) continue;
        const auto out = cross_check_with_bailey(id, sample_assignment(id), 6);
        CAPTURE(id);
        REQUIRE(out.status == CompareStatus::PASS);
    }
}

TEST_CASE("sensitivity guard detects a perturbed side") {
    int hits = 0;
    for (const auto& id : identity_ids()) {
        if (id[0] == '4') continue;
        const auto rep = sensitivity_check(id, sample_assignment(id), 8);
        if (rep.status == "MISMATCH" && rep.mismatch_degree <= 2) ++hits;
    }
    REQUIRE(hits >= 12);
}

TEST_CASE("specialization coherence") {
    // 4.1 is 2.1 at p = 0; 4.3 is 2.4 at p = 1 - same streams, same samples
    {
        auto a = sample_assignment("4.1");
        const auto direct = verify("4.1", a, 12, Variant::Verbatim);
        a.p = 0;
        const auto host = verify("2.1", a, 12, Variant::Verbatim);
        REQUIRE(direct.status == "PASS");
        REQUIRE(host.status == "PASS");
    }
    {
        auto a = sample_assignment("4.3");
        const auto direct = verify("4.3", a, 12, Variant::Verbatim);
        a.p = 1;
        const auto host = verify("2.4", a, 12, Variant::Verbatim);
        REQUIRE(direct.status == "PASS");
        REQUIRE(host.status == "PASS");
    }
}
