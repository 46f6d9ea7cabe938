#pragma once
/// @file numeric.hpp
/// @brief Floating-point cross-checks: approximate evaluation of identity
///        sides for |q| < 1 with geometric tail estimates, and q -> 1
///        probing toward the named classical limits. Exploratory only; the
///        exact engine is the arbiter.

#include <cmath>
#include <string>
#include <vector>

#include "qreduce/identities.hpp"

namespace qreduce {

/// Double-precision evaluation point. q = b * b, so b may be irrational
/// (for example b = sqrt(1 - 2^{-j}) in the limit probe).
struct FloatAssignment {
    double b = 0.5;
    std::map<std::string, double> values;
    long p = 0;
    long N = 12;       // truncation order
    double tau = 0.0;  // caller-side tail tolerance, informational
};

struct NumericResult {
    double value = 0.0;
    double tail_bound = 0.0;
};

inline double to_double(const Rat& v) { return v.convert_to<double>(); }

namespace detail {

inline double dpow(double base, long e) {
    if (e == 0) return 1.0;
    double acc = 1.0, cur = base;
    unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    while (k) {
        if (k & 1) acc *= cur;
        cur *= cur;
        k >>= 1;
    }
    return e < 0 ? 1.0 / acc : acc;
}

inline double param_value(const ParamExpr& pe, const std::map<std::string, double>& vals,
                          double b) {
    double out = to_double(pe.coeff) * dpow(b, pe.b_exp);
    for (const auto& [name, e] : pe.pows) {
        auto it = vals.find(name);
        if (it == vals.end()) throw std::runtime_error("unbound symbol: " + name);
        out *= dpow(it->second, e);
    }
    return out;
}

inline double poch(double a, double qq, long n) {
    if (n < 0) throw std::domain_error("negative Pochhammer index");
    double out = 1.0, t = a;
    for (long i = 0; i < n; ++i) {
        out *= (1.0 - t);
        t *= qq;
    }
    return out;
}

inline double family_term(const TermFamily& fam, const std::map<std::string, double>& vals,
                          long p, double b, long n, long r) {
    const double q = b * b;
    double out = (fam.sign_exponent.eval(p, n, r) % 2 == 0) ? 1.0 : -1.0;
    out *= dpow(b, fam.b_exponent.eval(p, n, r));
    for (const auto& [pe, lf] : fam.monomials)
        out *= dpow(param_value(pe, vals, b), lf.eval(p, n, r));
    for (const auto& f : fam.numerator)
        out *= poch(param_value(f.param, vals, b), dpow(q, f.step), f.index.eval(p, n, r));
    for (const auto& f : fam.denominator) {
        const double d =
            poch(param_value(f.param, vals, b), dpow(q, f.step), f.index.eval(p, n, r));
        if (d == 0.0) throw std::runtime_error("parameter pole");
        out /= d;
    }
    return out;
}

inline double family_coefficient(const TermFamily& fam,
                                 const std::map<std::string, double>& vals, long p,
                                 double b, long m) {
    const long cn = fam.x_exponent.cn.at(p);
    if (fam.arity == 1) return (m % cn == 0) ? family_term(fam, vals, p, b, m / cn, 0) : 0.0;
    const long cr = fam.x_exponent.cr.at(p);
    double sum = 0.0;
    for (long n = 0; cn * n <= m; ++n) {
        const long rem = m - cn * n;
        if (rem % cr == 0) sum += family_term(fam, vals, p, b, n, rem / cr);
    }
    return sum;
}

}  // namespace detail

/// Double-precision coefficients c_0..c_N of one series product.
inline std::vector<double> numeric_coefficients(const SeriesProduct& side,
                                                const FloatAssignment& fa) {
    const long N = fa.N;
    std::vector<double> acc(static_cast<size_t>(N) + 1, 0.0);
    acc[0] = 1.0;
    auto convolve = [&](const std::vector<double>& f) {
        std::vector<double> out(static_cast<size_t>(N) + 1, 0.0);
        for (long i = 0; i <= N; ++i) {
            if (acc[static_cast<size_t>(i)] == 0.0) continue;
            for (long j = 0; i + j <= N; ++j)
                out[static_cast<size_t>(i + j)] +=
                    acc[static_cast<size_t>(i)] * f[static_cast<size_t>(j)];
        }
        acc = std::move(out);
    };
    for (const auto& fam : side.families) {
        std::vector<double> c(static_cast<size_t>(N) + 1);
        for (long m = 0; m <= N; ++m)
            c[static_cast<size_t>(m)] = detail::family_coefficient(fam, fa.values, fa.p, fa.b, m);
        convolve(c);
    }
    for (const auto& ef : side.explicits) {
        if (!ef.coefficients_f)
            throw std::runtime_error("no float path for explicit factor " + ef.name);
        convolve(ef.coefficients_f(fa.values, fa.p, fa.b, N));
    }
    return acc;
}

/// Partial sum to degree N at the point x, plus a geometric tail estimate
/// from the trailing term ratios. Throws "no contraction" when the last
/// retained term ratios do not contract.
inline NumericResult numeric_eval(const SeriesProduct& side, const FloatAssignment& fa,
                                  double x) {
    const std::vector<double> c = numeric_coefficients(side, fa);
    const long N = fa.N;
    NumericResult res;
    double xp = 1.0;
    std::vector<double> terms(static_cast<size_t>(N) + 1);
    for (long m = 0; m <= N; ++m) {
        terms[static_cast<size_t>(m)] = c[static_cast<size_t>(m)] * xp;
        res.value += terms[static_cast<size_t>(m)];
        xp *= x;
    }
    // Ratio test on the last three nonzero retained terms. Zero entries are
    // skipped (step-2 supports produce legitimate zero coefficients); spacing
    // is compensated with per-degree geometric ratios.
    std::vector<long> nz;
    for (long m = 1; m <= N; ++m)
        if (terms[static_cast<size_t>(m)] != 0.0) nz.push_back(m);
    if (nz.size() > 3) nz.erase(nz.begin(), nz.end() - 3);
    if (nz.size() < 2) {
        res.tail_bound = 0.0;
        return res;
    }
    double rho = 0.0;
    for (size_t i = 1; i < nz.size(); ++i) {
        const double a = std::fabs(terms[static_cast<size_t>(nz[i - 1])]);
        const double c = std::fabs(terms[static_cast<size_t>(nz[i])]);
        rho = std::max(rho, std::pow(c / a, 1.0 / static_cast<double>(nz[i] - nz[i - 1])));
    }
    if (rho >= 1.0) throw std::runtime_error("no contraction");
    res.tail_bound = std::fabs(terms[static_cast<size_t>(nz.back())]) * rho / (1.0 - rho);
    return res;
}

/// A contraction-safe evaluation point for the given coefficients: x small
/// enough that every term is at most 2^{-m} and every adjacent nonzero term
/// ratio is at most 1/2. Handles zero-radius formal series (coefficients
/// growing like q^{-m^2}), for which only the truncated sum is meaningful.
inline double suggest_x(const std::vector<double>& coeffs) {
    double growth = 1.0;
    long prev = -1;
    for (size_t m = 1; m < coeffs.size(); ++m) {
        const double c = std::fabs(coeffs[m]);
        if (c == 0.0) continue;
        growth = std::max(growth, std::pow(c, 1.0 / static_cast<double>(m)));
        if (prev > 0) {
            const double step = std::fabs(coeffs[static_cast<size_t>(prev)]);
            growth = std::max(growth,
                              std::pow(c / step, 1.0 / static_cast<double>(m - prev)));
        }
        prev = static_cast<long>(m);
    }
    return 0.5 / growth;
}

/// One row of the q -> 1 trend table.
struct ProbeRow {
    double q = 0.0;
    double x = 0.0;  // evaluation point actually used
    double lhs = 0.0, rhs = 0.0;
    double lhs_tail = 0.0, rhs_tail = 0.0;
    bool ok = false;           // both sides evaluated
    std::string error;         // per-row contraction failure, not fatal
};

/// Evaluates both sides at q = 1 - 2^{-j}, j = 1..steps, at a fixed small x.
/// Purely exploratory: no pass/fail gate. Throws "no classical tag" when the
/// identity has no named classical limit.
inline std::vector<ProbeRow> q_limit_probe(const std::string& id, long steps, long N = 12,
                                           double x = 0.05) {
    const IdentityInfo& info = identity_info(id);
    if (info.classical_tag.empty()) throw std::invalid_argument("no classical tag");
    ParamAssignment sample = sample_assignment(id);
    BuiltIdentity built = build(id, sample.p, 0, 0, default_variant(id));
    std::vector<ProbeRow> rows;
    for (long j = 1; j <= steps; ++j) {
        ProbeRow row;
        row.q = 1.0 - std::ldexp(1.0, static_cast<int>(-j));
        FloatAssignment fa;
        fa.b = std::sqrt(row.q);
        fa.p = built.p;
        fa.N = N;
        for (const auto& [k, v] : sample.values) fa.values[k] = to_double(v);
        try {
            // cap x so both sides contract at this q (radius shrinks as q -> 1)
            const double safe = std::min(suggest_x(numeric_coefficients(built.lhs, fa)),
                                         suggest_x(numeric_coefficients(built.rhs, fa)));
            row.x = std::min(x, safe);
            const NumericResult l = numeric_eval(built.lhs, fa, row.x);
            const NumericResult r = numeric_eval(built.rhs, fa, row.x);
            row.lhs = l.value;
            row.rhs = r.value;
            row.lhs_tail = l.tail_bound;
            row.rhs_tail = r.tail_bound;
            row.ok = true;
        } catch (const std::exception& e) {
            row.error = e.what();
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace qreduce
