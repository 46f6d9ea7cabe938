#pragma once
/// @file bailey.hpp
/// @brief Extended Bailey transform engine and the fourteen sequence recipes
///        that derive the reduction identities; doubles as an independent
///        derivation oracle for the identity registry.
///
/// Transform relations (p, p' arbitrary integers, delta finitely supported):
///   beta_n  = sum_{r=0}^n       alpha_r u_{n-r} v_{n+r} t_{n+2r} w_{pn-r} z_{p'n+r}
///   gamma_n = sum_{r=n}^R       delta_r u_{r-n} v_{r+n} t_{2n+r} w_{pr-n} z_{p'r+n}
///   sum_n alpha_n gamma_n = sum_n beta_n delta_n   (finite rearrangement)

#include <array>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "qreduce/series.hpp"

namespace qreduce {

/// One transform sequence. Three kinds:
///  - constant: defined for every integer index (used where negative shifts occur),
///  - table: zero above its support, error below index 0,
///  - closed: arbitrary function of a nonnegative index.
struct SequenceSpec {
    enum class Kind { Constant, Table, Closed };
    Kind kind = Kind::Constant;
    Rat cval{1};
    std::vector<Rat> table;
    std::function<Rat(long)> fn;

    static SequenceSpec constant(const Rat& v) {
        SequenceSpec s;
        s.kind = Kind::Constant;
        s.cval = v;
        return s;
    }
    static SequenceSpec from_table(std::vector<Rat> vals) {
        SequenceSpec s;
        s.kind = Kind::Table;
        s.table = std::move(vals);
        return s;
    }
    static SequenceSpec closed(std::function<Rat(long)> f) {
        SequenceSpec s;
        s.kind = Kind::Closed;
        s.fn = std::move(f);
        return s;
    }

    Rat at(long i) const {
        switch (kind) {
            case Kind::Constant:
                return cval;
            case Kind::Table:
                if (i < 0) throw std::domain_error("negative sequence index");
                if (i >= static_cast<long>(table.size())) return Rat(0);
                return table[static_cast<size_t>(i)];
            case Kind::Closed:
                if (i < 0) throw std::domain_error("negative sequence index");
                return fn(i);
        }
        throw std::logic_error("unreachable");
    }
};

/// The seven sequences plus meta integers of the extended transform.
struct BaileyConfig {
    SequenceSpec alpha, delta, u, v, t, w, z;
    long p = 0;
    long p_prime = 0;
    long delta_support = 0;  // delta_r treated as 0 for r > delta_support

    Rat delta_at(long r) const { return r > delta_support ? Rat(0) : delta.at(r); }
};

/// beta_n = sum_{r=0}^n alpha_r u_{n-r} v_{n+r} t_{n+2r} w_{pn-r} z_{p'n+r}.
inline Rat beta_seq(const BaileyConfig& c, long n) {
    if (n < 0) throw std::domain_error("beta_seq: negative n");
    Rat sum(0);
    for (long r = 0; r <= n; ++r)
        sum += c.alpha.at(r) * c.u.at(n - r) * c.v.at(n + r) * c.t.at(n + 2 * r) *
               c.w.at(c.p * n - r) * c.z.at(c.p_prime * n + r);
    return sum;
}

/// gamma_n = sum_{r=n}^{R} delta_r u_{r-n} v_{r+n} t_{2n+r} w_{pr-n} z_{p'r+n}.
inline Rat gamma_seq(const BaileyConfig& c, long n) {
    if (n < 0) throw std::domain_error("gamma_seq: negative n");
    Rat sum(0);
    for (long r = n; r <= c.delta_support; ++r)
        sum += c.delta_at(r) * c.u.at(r - n) * c.v.at(r + n) * c.t.at(2 * n + r) *
               c.w.at(c.p * r - n) * c.z.at(c.p_prime * r + n);
    return sum;
}

/// Checks sum alpha_n gamma_n = sum beta_n delta_n exactly (both finite given
/// the delta support). Equality is a theorem; failure flags an engine bug.
inline ComparisonOutcome transform_check(const BaileyConfig& c) {
    Rat left(0), right(0);
    for (long n = 0; n <= c.delta_support; ++n) {
        left += c.alpha.at(n) * gamma_seq(c, n);
        right += beta_seq(c, n) * c.delta_at(n);
    }
    if (left == right) return {CompareStatus::PASS, -1, left, right};
    return {CompareStatus::MISMATCH, 0, left, right};
}

namespace detail {

/// Shared evaluation state for one recipe instantiation.
struct RecipeCtx {
    QBase base;
    long p;
    Assignment params;
    std::vector<Rat> dvec, gvec;
    PochCache cache;

    RecipeCtx(const QBase& b, long p_, const Assignment& a, std::vector<Rat> d,
              std::vector<Rat> g)
        : base(b), p(p_), params(a), dvec(std::move(d)), gvec(std::move(g)), cache(b.q) {}

    Rat P(const std::string& s) const {
        auto it = params.find(s);
        if (it == params.end()) throw std::runtime_error("unbound symbol: " + s);
        return it->second;
    }
    Rat po(const Rat& a, long n, int step = 1) { return cache.get(a, step, n); }
    Rat q() const { return base.q; }
    Rat dg(long m) {
        Rat out(1);
        for (const auto& x : dvec) out *= po(x, m);
        for (const auto& x : gvec) out /= po(x, m);
        return out;
    }
};

/// Raw recipe data before the exponent completion: skeleton sequences, signs,
/// scalar bases, the printed-side b-exponent, p', and the closure note.
struct RecipeParts {
    std::function<Rat(long)> sk_alpha, sk_u;  // include the factorial factors
    std::function<Rat(long)> v, t, w, z;      // nullptr-like: empty = 1
    long p_prime = 0;
    int sign_n = 1, sign_r = 1;
    Rat Ca{1}, Cu{1};
    // b-exponent of the double-sum side: nn n^2 + nr nr + rr r^2 + ln n + lr r
    long nn = 0, nr = 0, rr = 0, ln = 0, lr = 0;
    std::string closure;  // which balanced 3phi2 closes the inner sum
};

RecipeParts recipe_parts(int idx, std::shared_ptr<RecipeCtx> c);

}  // namespace detail

/// Number of recipes (matching the number of two-to-one reduction identities).
constexpr int kRecipeCount = 14;

/// Roman-numeral recipe ids "i".."xiv" in order.
inline const std::array<std::string, kRecipeCount>& recipe_ids() {
    static const std::array<std::string, kRecipeCount> ids = {
        "i", "ii", "iii", "iv", "v", "vi", "vii", "viii", "ix", "x", "xi", "xii",
        "xiii", "xiv"};
    return ids;
}

/// 1-based recipe index for a roman id, or 0 when unknown.
inline int recipe_index(const std::string& id) {
    const auto& ids = recipe_ids();
    for (int i = 0; i < kRecipeCount; ++i)
        if (ids[static_cast<size_t>(i)] == id) return i + 1;
    return 0;
}

/// Fully assembled sequences of one recipe instantiation, after the exponent
/// completion that distributes the printed quadratic b-power over
/// alpha (n-part), u (r-part) and delta (cross-term part).
struct RecipeInstance {
    BaileyConfig config;
    std::function<Rat(long)> alpha, u, delta;  // completed closed forms
    std::function<Rat(long)> v, t, w, z;
    long p_prime = 0;
    std::string closure;
};

RecipeInstance make_recipe(int idx, const Assignment& params, long p, const QBase& base,
                           long support, const std::vector<Rat>& dvec,
                           const std::vector<Rat>& gvec);

/// BaileyConfig for recipe id ("i".."xiv") with the given parameters.
inline BaileyConfig recipe(const std::string& id, const Assignment& params, long p,
                           const QBase& base, long support,
                           const std::vector<Rat>& dvec = {},
                           const std::vector<Rat>& gvec = {}) {
    const int idx = recipe_index(id);
    if (idx == 0) throw std::invalid_argument("unknown recipe id: " + id);
    return make_recipe(idx, params, p, base, support, dvec, gvec).config;
}

}  // namespace qreduce
