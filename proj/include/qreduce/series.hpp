#pragma once
/// @file series.hpp
/// @brief Lattice-indexed term families: the universal encoding of every
///        series side handled by the engine, with exact coefficient
///        extraction and truncated-series products.
///
/// A term family describes a one- or two-index sum whose summand is
///   (-1)^{sign} * b^{quadratic} * prod(monomials) * prod(num poch) / prod(den poch)
/// attached to x^{x_exponent}. Index expressions are affine in the meta
/// integer p, which is substituted at bind time.

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "qreduce/qcore.hpp"

namespace qreduce {

using Assignment = std::map<std::string, Rat>;

/// Integer affine in the meta parameter p: value(p) = c + cp * p.
struct PInt {
    long c = 0;
    long cp = 0;
    constexpr PInt() = default;
    constexpr PInt(long c_) : c(c_) {}
    constexpr PInt(long c_, long cp_) : c(c_), cp(cp_) {}
    long at(long p) const { return c + cp * p; }
};

/// Linear index form coeff_n * n + coeff_r * r + constant (coefficients affine in p).
struct LinearForm {
    PInt cn, cr, c0;
    long eval(long p, long n, long r) const {
        return cn.at(p) * n + cr.at(p) * r + c0.at(p);
    }
};

/// Exponent of b: a_nn n^2 + a_nr nr + a_rr r^2 + a_n n + a_r r + a_0,
/// all coefficients integers (q-exponents are doubled on entry), affine in p.
struct QuadraticBExponent {
    PInt nn, nr, rr, n, r, c0;
    long eval(long p, long nv, long rv) const {
        return nn.at(p) * nv * nv + nr.at(p) * nv * rv + rr.at(p) * rv * rv +
               n.at(p) * nv + r.at(p) * rv + c0.at(p);
    }
};

/// A parameter monomial: coeff * b^{b_exp} * prod(sym^e). Resolved against an
/// assignment at bind time.
struct ParamExpr {
    Rat coeff{1};
    long b_exp = 0;
    std::vector<std::pair<std::string, int>> pows;

    static ParamExpr sym(const std::string& s, int e = 1) {
        ParamExpr out;
        out.pows.emplace_back(s, e);
        return out;
    }
    static ParamExpr constant(const Rat& v) {
        ParamExpr out;
        out.coeff = v;
        return out;
    }
    ParamExpr& times(const std::string& s, int e = 1) {
        pows.emplace_back(s, e);
        return *this;
    }
    ParamExpr& qfactor(long q_exp) {  // multiply by q^{q_exp}
        b_exp += 2 * q_exp;
        return *this;
    }
    ParamExpr& bfactor(long e) {  // multiply by b^{e}
        b_exp += e;
        return *this;
    }
    ParamExpr& scale(const Rat& v) {
        coeff *= v;
        return *this;
    }

    Rat eval(const Assignment& a, const QBase& base) const {
        Rat out = coeff * base.bpow(b_exp);
        for (const auto& [name, e] : pows) {
            auto it = a.find(name);
            if (it == a.end())
                throw std::runtime_error("unbound symbol: " + name);
            out *= rpow(it->second, e);
        }
        return out;
    }
};

/// One Pochhammer factor (param; q^step)_{index}.
struct PochFactor {
    ParamExpr param;
    int step = 1;
    LinearForm index;
};

/// Symbolic description of one lattice-indexed series.
struct TermFamily {
    int arity = 2;  // 1 or 2
    LinearForm sign_exponent;                                // (-1)^{...}
    QuadraticBExponent b_exponent;                           // b^{...}
    std::vector<std::pair<ParamExpr, LinearForm>> monomials; // param^{...}
    std::vector<PochFactor> numerator;
    std::vector<PochFactor> denominator;
    LinearForm x_exponent;  // total x-degree of the (n, r) term
};

enum class CompareStatus { PASS, MISMATCH };

struct ComparisonOutcome {
    CompareStatus status = CompareStatus::PASS;
    long degree = -1;  // first mismatching degree when MISMATCH
    Rat lhs, rhs;
};

/// Exact truncated power series c_0..c_N.
struct TruncatedSeries {
    std::vector<Rat> coeffs;
    long order() const { return static_cast<long>(coeffs.size()) - 1; }
};

/// Exact coefficient-wise comparison; reports the first mismatching degree.
inline ComparisonOutcome compare(const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
    if (lhs.coeffs.size() != rhs.coeffs.size())
        throw std::invalid_argument("compare: truncation order mismatch");
    for (size_t m = 0; m < lhs.coeffs.size(); ++m) {
        if (lhs.coeffs[m] != rhs.coeffs[m])
            return {CompareStatus::MISMATCH, static_cast<long>(m), lhs.coeffs[m],
                    rhs.coeffs[m]};
    }
    return {};
}

/// A term family bound to a concrete assignment, p, and base: a closed exact
/// evaluator for summands and x-coefficients.
class BoundFamily {
public:
    BoundFamily(const TermFamily& fam, const Assignment& assignment, long p,
                const QBase& base, long N)
        : fam_(fam), p_(p), base_(base), N_(N), cache_(base.q) {
        if (fam_.x_exponent.cn.at(p) < 1)
            throw std::runtime_error("x_exponent must grow with n");
        if (fam_.arity == 2 && fam_.x_exponent.cr.at(p) < 1)
            throw std::runtime_error("x_exponent must grow with r");
        if (fam_.x_exponent.c0.at(p) != 0)
            throw std::runtime_error("x_exponent must vanish at the origin");
        auto resolve = [&](const std::vector<PochFactor>& fs,
                           std::vector<Bound>& out, bool check_pole) {
            for (const auto& f : fs) {
                Bound bf;
                bf.value = f.param.eval(assignment, base);
                bf.step = f.step;
                bf.index = f.index;
                const long lo = min_index(f.index);
                if (lo < 0)
                    throw std::runtime_error("negative Pochhammer index");
                if (check_pole) {
                    const long hi = max_index(f.index);
                    if (!pole_check(bf.value, base.q, f.step, hi))
                        throw std::runtime_error("parameter pole");
                }
                out.push_back(std::move(bf));
            }
        };
        resolve(fam_.numerator, num_, false);
        resolve(fam_.denominator, den_, true);
        for (const auto& [pe, lf] : fam_.monomials)
            mono_.emplace_back(pe.eval(assignment, base), lf);
    }

    /// Exact summand value at lattice point (n, r); r ignored for arity 1.
    Rat term(long n, long r) const {
        Rat out = (fam_.sign_exponent.eval(p_, n, r) % 2 == 0) ? Rat(1) : Rat(-1);
        out *= base_.bpow(fam_.b_exponent.eval(p_, n, r));
        for (const auto& [v, lf] : mono_) out *= rpow(v, lf.eval(p_, n, r));
        for (const auto& f : num_) out *= cache_.get(f.value, f.step, f.index.eval(p_, n, r));
        for (const auto& f : den_) out /= cache_.get(f.value, f.step, f.index.eval(p_, n, r));
        return out;
    }

    /// Exact coefficient of x^m: finite sum over contributing lattice points.
    Rat coefficient_of(long m) const {
        const long cn = fam_.x_exponent.cn.at(p_);
        Rat sum(0);
        if (fam_.arity == 1) {
            if (m % cn == 0) sum = term(m / cn, 0);
            return sum;
        }
        const long cr = fam_.x_exponent.cr.at(p_);
        for (long n = 0; cn * n <= m; ++n) {
            const long rem = m - cn * n;
            if (rem % cr == 0) sum += term(n, rem / cr);
        }
        return sum;
    }

    TruncatedSeries coefficients(long N) const {
        TruncatedSeries out;
        out.coeffs.reserve(static_cast<size_t>(N) + 1);
        for (long m = 0; m <= N; ++m) out.coeffs.push_back(coefficient_of(m));
        return out;
    }

    long order_bound() const { return N_; }

private:
    struct Bound {
        Rat value;
        int step;
        LinearForm index;
    };

    long min_index(const LinearForm& lf) const {
        long lo = lf.c0.at(p_);
        if (lf.cn.at(p_) < 0) lo += lf.cn.at(p_) * N_;
        if (fam_.arity == 2 && lf.cr.at(p_) < 0) lo += lf.cr.at(p_) * N_;
        return lo;
    }
    long max_index(const LinearForm& lf) const {
        long hi = lf.c0.at(p_);
        if (lf.cn.at(p_) > 0) hi += lf.cn.at(p_) * N_;
        if (fam_.arity == 2 && lf.cr.at(p_) > 0) hi += lf.cr.at(p_) * N_;
        return hi;
    }

    TermFamily fam_;
    long p_;
    QBase base_;
    long N_;
    mutable PochCache cache_;
    std::vector<Bound> num_, den_;
    std::vector<std::pair<Rat, LinearForm>> mono_;
};

inline BoundFamily bind(const TermFamily& fam, const Assignment& assignment, long p,
                        const QBase& base, long N) {
    return BoundFamily(fam, assignment, p, base, N);
}

/// A factor given directly as exact coefficients (infinite-product prefactors
/// and series whose Pochhammer parameters depend on x).
struct ExplicitFactor {
    std::string name;
    std::function<std::vector<Rat>(const Assignment&, long /*p*/, const QBase&, long /*N*/)>
        coefficients;
    /// Optional double-precision twin used by the numeric module (keyed by
    /// parameter name, with b passed as a double so q = b*b).
    std::function<std::vector<double>(const std::map<std::string, double>&, long /*p*/,
                                      double /*b*/, long /*N*/)>
        coefficients_f;
};

/// Formal product of term families and explicit-coefficient factors in x.
struct SeriesProduct {
    std::vector<TermFamily> families;
    std::vector<ExplicitFactor> explicits;
};

/// Coefficients of the product up to degree N via exact convolution.
inline TruncatedSeries truncate_product(const SeriesProduct& product,
                                        const Assignment& assignment, long p,
                                        const QBase& base, long N) {
    std::vector<Rat> acc(static_cast<size_t>(N) + 1, Rat(0));
    acc[0] = 1;
    auto convolve = [&](const std::vector<Rat>& f) {
        std::vector<Rat> out(static_cast<size_t>(N) + 1, Rat(0));
        for (long i = 0; i <= N; ++i) {
            if (acc[static_cast<size_t>(i)] == 0) continue;
            for (long j = 0; i + j <= N; ++j)
                out[static_cast<size_t>(i + j)] +=
                    acc[static_cast<size_t>(i)] * f[static_cast<size_t>(j)];
        }
        acc = std::move(out);
    };
    for (const auto& fam : product.families) {
        BoundFamily bf = bind(fam, assignment, p, base, N);
        convolve(bf.coefficients(N).coeffs);
    }
    for (const auto& ef : product.explicits) convolve(ef.coefficients(assignment, p, base, N));
    return TruncatedSeries{std::move(acc)};
}

}  // namespace qreduce
