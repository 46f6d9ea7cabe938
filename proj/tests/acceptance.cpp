/// @file acceptance.cpp
/// @brief Acceptance gate: one pass/fail line per criterion, exact tolerances.
///        Exit status is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <iostream>
#include <random>

#include "qreduce/numeric.hpp"

using namespace qreduce;

namespace {

int failures = 0;

void report(int idx, const std::string& what, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << idx << ": " << what;
    if (!ok && !detail.empty()) std::cout << " [" << detail << "]";
    std::cout << "\n";
    if (!ok) ++failures;
}

Rat R(long n, long d) { return Rat(n) / d; }

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(unsigned long long seed) : gen(seed) {}
    long pick(long lo, long hi) {
        return lo + static_cast<long>(gen() % static_cast<unsigned long long>(hi - lo + 1));
    }
    Rat small() {
        const long num = pick(1, 8);
        return R(num, pick(num + 1, 9));
    }
};

// 1. Pochhammer addition and splitting laws, 50 random rational pairs.
void criterion1() {
    Rng rng(101);
    bool ok = true;
    std::string detail;
    for (int trial = 0; trial < 50 && ok; ++trial) {
        const Rat a = rng.small(), q = rng.small();
        const long m = rng.pick(0, 5), n = rng.pick(0, 5);
        if (q_pochhammer(a, q, m + n) !=
            q_pochhammer(a, q, m) * q_pochhammer(a * rpow(q, m), q, n)) {
            ok = false;
            detail = "addition law";
        }
        for (long k = 2; k <= 3 && ok; ++k) {
            const long nn = rng.pick(0, 3);
            Rat prod = 1;
            for (long j = 0; j < k; ++j)
                prod *= q_pochhammer(a * rpow(q, j), rpow(q, k), nn);
            if (q_pochhammer(a, q, k * nn) != prod) {
                ok = false;
                detail = "splitting law k=" + std::to_string(k);
            }
        }
    }
    report(1, "Pochhammer addition and splitting laws, 50 random pairs", ok, detail);
}

// 2. q-Pfaff-Saalschutz: brute force equals closed form, 20 pole-free triples.
void criterion2() {
    Rng rng(202);
    bool ok = pfaff_saalschutz_lhs(R(1, 2), R(1, 3), R(1, 4), R(1, 2), 1) == R(-1, 3) &&
              pfaff_saalschutz_rhs(R(1, 2), R(1, 3), R(1, 4), R(1, 2), 1) == R(-1, 3);
    std::string detail = ok ? "" : "fixed case (1/2,1/3,1/4,n=1)";
    int done = 0;
    while (done < 20 && ok) {
        const Rat a = rng.small(), b = rng.small(), c = rng.small(), q = rng.small();
        const long n = rng.pick(0, 10);
        const Rat d = a * b * rpow(q, 1 - n) / c;
        if (!pole_check(c, q, 1, n + 1) || !pole_check(d, q, 1, n + 1) ||
            !pole_check(c / (a * b), q, 1, n + 1))
            continue;
        ++done;
        Rat lhs, rhs;
        try {
            lhs = pfaff_saalschutz_lhs(a, b, c, q, n);
            rhs = pfaff_saalschutz_rhs(a, b, c, q, n);
        } catch (const std::exception&) {
            continue;  // residual pole inside the running product; resample
        }
        if (lhs != rhs) {
            ok = false;
            detail = "random triple " + std::to_string(done);
        }
    }
    report(2, "q-Pfaff-Saalschutz sum equals closed form, 20 pole-free triples", ok,
           detail);
}

// 3. Extended Bailey transform: 20 random configs over (p, p') in {-2..3}^2
//    and every recipe instantiation.
void criterion3() {
    Rng rng(303);
    bool ok = true;
    std::string detail;
    for (int trial = 0; trial < 20 && ok; ++trial) {
        const long p = rng.pick(-2, 3), pp = rng.pick(-2, 3);
        const long Rsup = rng.pick(2, 5);
        auto table = [&](long len) {
            std::vector<Rat> t;
            for (long i = 0; i < len; ++i) t.push_back(rng.small());
            return SequenceSpec::from_table(t);
        };
        BaileyConfig c;
        c.p = p;
        c.p_prime = pp;
        c.delta_support = Rsup;
        c.alpha = table(Rsup + 1);
        c.delta = table(Rsup + 1);
        c.u = table(4 * Rsup + 1);
        c.v = table(4 * Rsup + 1);
        c.t = table(4 * Rsup + 1);
        c.w = SequenceSpec::constant(rng.small());
        c.z = SequenceSpec::constant(rng.small());
        if (transform_check(c).status != CompareStatus::PASS) {
            ok = false;
            detail = "random config " + std::to_string(trial);
        }
    }
    const QBase base(R(1, 2));
    for (int idx = 1; idx <= kRecipeCount && ok; ++idx) {
        std::string linked;
        for (const auto& id : identity_ids())
            if (id[0] == '2' && identity_info(id).recipe == idx) {
                linked = id;
                break;
            }
        for (long p : validity_window(linked)) {
            const auto inst = make_recipe(idx, sample_assignment(linked).values, p, base,
                                          5, {}, {});
            if (transform_check(inst.config).status != CompareStatus::PASS) {
                ok = false;
                detail = "recipe " + recipe_ids()[static_cast<size_t>(idx - 1)];
            }
        }
    }
    report(3, "extended Bailey transform: 20 random configs + all 14 recipes", ok,
           detail);
}

// 4. Identity suite: every identity, corrected where ledgered, N = 12,
//    3 seeded assignments, every p in the validity window.
void criterion4() {
    bool ok = true;
    std::string detail;
    for (const auto& id : identity_ids()) {
        const auto reports = sweep(id, 12, 3, 2026);
        for (const auto& rep : reports)
            if (rep.status != "PASS") {
                ok = false;
                detail = id + " p=" + std::to_string(rep.p) + " " + rep.status;
            }
    }
    report(4, "identity suite: all ids, N=12, 3 seeded assignments, full windows", ok,
           detail);
}

// 5. Specialization coherence: identical coefficient streams to N = 12.
//    4.1 against 2.1 at p=0 and 4.3 against 2.4 at p=1 literally; 4.2 against
//    the recipe-ii machinery at p=0 (the q-binomial prefactor reconciliation),
//    since the p=0 column of 2.2 only exists through that rearrangement.
void criterion5() {
    bool ok = true;
    std::string detail;
    auto streams_equal = [&](const std::string& special, const std::string& host,
                             long host_p) {
        const auto a = sample_assignment(special);
        const QBase base(a.b);
        const auto sp = build(special, a.p, 0, 0, Variant::Verbatim);
        const auto ho = build(host, host_p, 0, 0, Variant::Verbatim);
        const auto sl = truncate_product(sp.lhs, a.values, a.p, base, 12);
        const auto hl = truncate_product(ho.lhs, a.values, host_p, base, 12);
        const auto sr = truncate_product(sp.rhs, a.values, a.p, base, 12);
        const auto hr = truncate_product(ho.rhs, a.values, host_p, base, 12);
        return compare(sl, hl).status == CompareStatus::PASS &&
               compare(sr, hr).status == CompareStatus::PASS;
    };
    if (!streams_equal("4.1", "2.1", 0)) {
        ok = false;
        detail = "4.1 vs 2.1 at p=0";
    }
    if (!streams_equal("4.3", "2.4", 1)) {
        ok = false;
        detail = "4.3 vs 2.4 at p=1";
    }
    if (cross_check_with_bailey("4.2", sample_assignment("4.2"), 12).status !=
        CompareStatus::PASS) {
        ok = false;
        detail = "4.2 prefactor reconciliation";
    }
    report(5, "specialization coherence: identical streams to N=12", ok, detail);
}

// 6. Oracle concordance: recipe cross-checks, plus verbatim MISMATCH and
//    corrected PASS for every ledgered identity, each note naming its recipe.
void criterion6() {
    bool ok = true;
    std::string detail;
    for (const auto& id : identity_ids()) {
        if (identity_info(id).recipe == 0) continue;
        if (cross_check_with_bailey(id, sample_assignment(id), 8).status !=
            CompareStatus::PASS) {
            ok = false;
            detail = "cross check " + id;
        }
    }
    for (const auto& id : {"2.2", "2.6", "2.7", "2.10", "2.14"}) {
        const IdentityInfo& info = identity_info(id);
        auto a = sample_assignment(id);
        a.values["v"] = R(2, 7);  // extra symbol some verbatim texts mention
        const auto bad = verify(id, a, 8, Variant::Verbatim);
        const auto good = verify(id, a, 8, Variant::Corrected);
        const std::string recipe_name =
            "recipe " + recipe_ids()[static_cast<size_t>(info.recipe - 1)];
        if (bad.status != "MISMATCH" || !bad.has_coeffs || good.status != "PASS" ||
            info.note.find(recipe_name) == std::string::npos) {
            ok = false;
            detail = std::string("ledger entry ") + id;
        }
    }
    report(6, "oracle concordance: recipes agree; ledger adjudicated", ok, detail);
}

// 7. Sensitivity: a one-sided k -> kq perturbation must be caught early.
void criterion7() {
    int hits = 0;
    for (const auto& id : identity_ids()) {
        if (id[0] == '4') continue;
        const auto rep = sensitivity_check(id, sample_assignment(id), 8);
        if (rep.status == "MISMATCH" && rep.mismatch_degree <= 2) ++hits;
    }
    report(7,
           "sensitivity: perturbed side caught at degree <= 2 for >= 12 of 14 "
           "(got " +
               std::to_string(hits) + ")",
           hits >= 12);
}

// 8. Numeric concordance: float evaluation within tail_bound + 1e-10 of the
//    exactified value, 5 random assignments per identity side.
void criterion8() {
    Rng rng(808);
    bool ok = true;
    std::string detail;
    const std::vector<Rat> bases = {R(1, 2), R(1, 3), R(2, 5)};
    for (const auto& id : identity_ids()) {
        const IdentityInfo& info = identity_info(id);
        int done = 0, attempts = 0;
        while (done < 5 && ok && attempts < 200) {
            ++attempts;
            ParamAssignment a = sample_assignment(id);
            a.b = bases[static_cast<size_t>(rng.pick(0, 2))];
            for (const auto& sym : info.symbols)
                if (sym != "sqrt_v") a.values[sym] = rng.small();
            if (a.values.count("sqrt_v")) {
                const Rat s = rng.small();
                a.values["sqrt_v"] = s;
                a.values["v"] = s * s;
            }
            if (verify(id, a, 12, default_variant(id)).status == "INVALID") continue;
            const auto built = build(id, a.p, 0, 0, default_variant(id));
            const QBase base(a.b);
            FloatAssignment fa;
            fa.b = to_double(a.b);
            fa.p = a.p;
            fa.N = 12;
            for (const auto& [k, v] : a.values) fa.values[k] = to_double(v);
            for (const SeriesProduct* side : {&built.lhs, &built.rhs}) {
                const auto exact = truncate_product(*side, a.values, a.p, base, 12);
                const double x = suggest_x(numeric_coefficients(*side, fa));
                double want = 0.0, xp = 1.0;
                for (size_t m = 0; m <= 12; ++m) {
                    want += to_double(exact.coeffs[m]) * xp;
                    xp *= x;
                }
                const auto got = numeric_eval(*side, fa, x);
                if (std::fabs(got.value - want) > got.tail_bound + 1e-10) {
                    ok = false;
                    detail = id + " assignment " + std::to_string(done + 1);
                }
            }
            ++done;
        }
        if (done < 5 && ok) {
            ok = false;
            detail = id + ": could not draw 5 pole-free assignments";
        }
    }
    report(8, "numeric concordance: 5 random assignments per identity side", ok, detail);
}

}  // namespace

int main() {
    const auto t0 = std::chrono::steady_clock::now();
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    const auto t1 = std::chrono::steady_clock::now();
    std::cout << (failures == 0 ? "ALL CRITERIA PASS" : "CRITERIA FAILED") << " ("
              << std::chrono::duration<double>(t1 - t0).count() << " s)\n";
    return failures;
}
