#pragma once
/// @file qcore.hpp
/// @brief Exact q-shifted factorials, infinite-product expansions, and the
///        q-Pfaff-Saalschutz summation. Base handling: q = b^2 so that every
///        half-integer q-exponent is an integer power of b.

#include <map>
#include <utility>
#include <vector>

#include "qreduce/rational.hpp"

namespace qreduce {

/// Series base. Stores b and q = b^2 exactly.
struct QBase {
    Rat b;
    Rat q;

    explicit QBase(const Rat& base) : b(base), q(base * base) {
        if (b == 0) throw std::domain_error("QBase: b must be nonzero");
        if (q == 1) throw std::domain_error("QBase: q must not equal 1");
        // A rational q can only be a root of unity if q = +-1.
        if (q == -1) throw std::domain_error("QBase: q must not be a root of unity");
    }

    /// b^e, e of either sign.
    Rat bpow(long e) const { return rpow(b, e); }
    /// q^e, e of either sign.
    Rat qpow(long e) const { return rpow(q, e); }
};

/// (a; q)_n = (1-a)(1-aq)...(1-aq^{n-1}); empty product for n = 0.
/// Negative n is rejected: it signals an encoding bug upstream.
inline Rat q_pochhammer(const Rat& a, const Rat& q, long n) {
    if (n < 0) throw std::domain_error("q_pochhammer: negative index");
    Rat acc(1);
    Rat t = a;
    for (long i = 0; i < n; ++i) {
        acc *= (Rat(1) - t);
        t *= q;
    }
    return acc;
}

/// (a; q^s)_n for step s >= 1.
inline Rat q_pochhammer_stepped(const Rat& a, const Rat& q, long s, long n) {
    if (s < 1) throw std::domain_error("q_pochhammer_stepped: step must be positive");
    return q_pochhammer(a, rpow(q, s), n);
}

/// true iff (a; q^s)_m is nonzero for all 0 <= m <= n_max,
/// i.e. a != q^{-s*j} for 0 <= j < n_max.
inline bool pole_check(const Rat& a, const Rat& q, long s, long n_max) {
    Rat t = a;
    const Rat qs = rpow(q, s);
    for (long j = 0; j < n_max; ++j) {
        if (t == 1) return false;
        t *= qs;
    }
    return true;
}

/// Coefficients c_0..c_N of (x; q)_inf via Euler's expansion
/// c_n = (-1)^n q^{n(n-1)/2} / (q; q)_n.
inline std::vector<Rat> euler_product_series(const Rat& q, long N) {
    if (q == 1) throw std::domain_error("euler_product_series: q = 1");
    std::vector<Rat> c(static_cast<size_t>(N) + 1);
    c[0] = 1;
    Rat qq_n(1);   // (q; q)_n
    Rat qpow(1);   // q^{n-1} walking factor
    Rat num(1);    // (-1)^n q^{n(n-1)/2}
    for (long n = 1; n <= N; ++n) {
        qpow = rpow(q, n);
        qq_n *= (Rat(1) - qpow);
        if (qq_n == 0) throw std::domain_error("euler_product_series: (q;q)_n vanished");
        num *= -rpow(q, n - 1);
        c[static_cast<size_t>(n)] = num / qq_n;
    }
    return c;
}

/// Coefficients of (a z; q)_inf / (z; q)_inf in z: c_n = (a; q)_n / (q; q)_n.
inline std::vector<Rat> q_binomial_series(const Rat& a, const Rat& q, long N) {
    if (q == 1) throw std::domain_error("q_binomial_series: q = 1");
    std::vector<Rat> c(static_cast<size_t>(N) + 1);
    c[0] = 1;
    Rat top(1), bot(1);
    for (long n = 1; n <= N; ++n) {
        top *= (Rat(1) - a * rpow(q, n - 1));
        bot *= (Rat(1) - rpow(q, n));
        if (bot == 0) throw std::domain_error("q_binomial_series: (q;q)_n vanished");
        c[static_cast<size_t>(n)] = top / bot;
    }
    return c;
}

/// Brute-force sum of the terminating balanced series
/// 3phi2[a, b, q^{-n}; c, a b q^{1-n}/c; q, q] - exactly n+1 terms.
inline Rat pfaff_saalschutz_lhs(const Rat& a, const Rat& b, const Rat& c,
                                const Rat& q, long n) {
    if (n < 0) throw std::domain_error("pfaff_saalschutz_lhs: negative n");
    const Rat qmn = rpow(q, -n);           // q^{-n}
    const Rat d = a * b * rpow(q, 1 - n) / c;
    Rat sum(0);
    for (long k = 0; k <= n; ++k) {
        const Rat den = q_pochhammer(q, q, k) * q_pochhammer(c, q, k) *
                        q_pochhammer(d, q, k);
        if (den == 0) throw std::domain_error("pfaff_saalschutz_lhs: parameter pole");
        sum += q_pochhammer(a, q, k) * q_pochhammer(b, q, k) *
               q_pochhammer(qmn, q, k) * rpow(q, k) / den;
    }
    return sum;
}

/// Closed form (c/a; q)_n (c/b; q)_n / ((c; q)_n (c/(ab); q)_n.
inline Rat pfaff_saalschutz_rhs(const Rat& a, const Rat& b, const Rat& c,
                                const Rat& q, long n) {
    if (n < 0) throw std::domain_error("pfaff_saalschutz_rhs: negative n");
    const Rat den = q_pochhammer(c, q, n) * q_pochhammer(c / (a * b), q, n);
    if (den == 0) throw std::domain_error("pfaff_saalschutz_rhs: parameter pole");
    return q_pochhammer(c / a, q, n) * q_pochhammer(c / b, q, n) / den;
}

/// Memoizing Pochhammer evaluator: prefix products per (a, step) extended
/// incrementally. Not shared across threads; each evaluation context owns one.
class PochCache {
public:
    explicit PochCache(const Rat& q) : q_(q) {}

    /// (a; q^s)_n with memoized prefixes.
    Rat get(const Rat& a, long s, long n) {
        if (n < 0) throw std::domain_error("PochCache: negative Pochhammer index");
        auto& entry = table_[{a, s}];
        if (entry.prefix.empty()) {
            entry.prefix.push_back(Rat(1));
            entry.walker = a;
            entry.qs = rpow(q_, s);
        }
        while (static_cast<long>(entry.prefix.size()) <= n) {
            entry.prefix.push_back(entry.prefix.back() * (Rat(1) - entry.walker));
            entry.walker *= entry.qs;
        }
        return entry.prefix[static_cast<size_t>(n)];
    }

private:
    struct Entry {
        std::vector<Rat> prefix;
        Rat walker;
        Rat qs;
    };
    Rat q_;
    std::map<std::pair<Rat, long>, Entry> table_;
};

}  // namespace qreduce
