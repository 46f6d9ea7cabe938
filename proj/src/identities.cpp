/// @file identities.cpp
/// @brief Identity registry encodings, verification drivers, seeded sweeps,
///        and the Bailey derivation cross-check.

#include "qreduce/identities.hpp"

#include <chrono>
#include <stdexcept>

namespace qreduce {
namespace {

using P = PInt;

LinearForm IX(P cn, P cr = P(0), P c0 = P(0)) {
    LinearForm l;
    l.cn = cn;
    l.cr = cr;
    l.c0 = c0;
    return l;
}
LinearForm Nn(long k = 1) { return IX(P(k)); }
LinearForm Rr(long k = 1) { return IX(P(0), P(k)); }

ParamExpr S(const char* s, int e = 1) { return ParamExpr::sym(s, e); }
/// The parameter q^e itself (for factorial-type factors).
ParamExpr Qp(long e) {
    ParamExpr x;
    x.qfactor(e);
    return x;
}

/// Small fluent builder for one term family.
struct FB {
    TermFamily f;
    explicit FB(int arity) {
        f.arity = arity;
        f.x_exponent = arity == 2 ? IX(P(1), P(1)) : Nn();
    }
    FB& num(ParamExpr pe, LinearForm ix, int step = 1) {
        f.numerator.push_back({pe, step, ix});
        return *this;
    }
    FB& den(ParamExpr pe, LinearForm ix, int step = 1) {
        f.denominator.push_back({pe, step, ix});
        return *this;
    }
    FB& mono(ParamExpr pe, LinearForm ix) {
        f.monomials.emplace_back(pe, ix);
        return *this;
    }
    FB& sgn(LinearForm s) {
        f.sign_exponent = s;
        return *this;
    }
    FB& bq(P nn, P nr, P rr, P n, P r) {
        f.b_exponent = {nn, nr, rr, n, r, P(0)};
        return *this;
    }
    /// Factorial denominators (q; q)_n and, for arity 2, (q; q)_r.
    FB& facts() {
        den(Qp(1), Nn());
        if (f.arity == 2) den(Qp(1), Rr());
        return *this;
    }
};

struct Sides {
    SeriesProduct lhs, rhs;
};

Sides from(FB& l, FB& r) {
    Sides s;
    s.lhs.families.push_back(l.f);
    s.rhs.families.push_back(r.f);
    return s;
}

Sides enc_2_1(Variant) {
    FB L(2), R(1);
    L.num(S("a"), Nn())
        .num(S("k").times("a", -1).times("z", -1), Rr())
        .num(S("z"), IX(P(1, 1), P(0, 1)))
        .den(S("k"), IX(P(1, 1), P(0, 1)))
        .mono(S("k").times("a", -1).times("z", -1), Nn())
        .facts();
    R.num(S("z"), IX(P(0, 1)))
        .num(S("k").times("a", -1), IX(P(1, 1)))
        .num(S("k").times("z", -1), Nn())
        .den(S("k"), IX(P(1, 1)))
        .den(S("k").times("a", -1), IX(P(0, 1)))
        .facts();
    return from(L, R);
}

Sides enc_2_2(Variant v) {
    const bool verb = (v == Variant::Verbatim);
    FB L(2), R(1);
    L.num(S("v"), IX(P(2), P(1)))
        .num(S("z"), IX(P(1, 1), P(0, 1)))
        .den(S("v").times("z").times("k", -1).qfactor(1), Nn())
        .den(S("k"), IX(P(1, 1), P(0, 1)))
        .sgn(verb ? IX(P(1), P(1)) : Nn())
        .bq(P(-1), P(-2), P(0), P(1), P(0))
        .facts();
    R.num(S("v"), Nn())
        .num(S("z"), IX(P(0, 1)))
        .num(S("k").times("v", -1), IX(P(0, 1)))
        .num(S("k").times("z", -1), Nn())
        .den(S("k").times("v", -1), IX(P(-1, 1)))
        .den(S("v").times("z").times("k", -1).qfactor(1), Nn())
        .den(S("k"), IX(P(1, 1)))
        .mono(S("v").times("z").times("k", -1).qfactor(1), Nn())
        .sgn(Nn())
        .bq(verb ? P(-1) : P(1), P(0), P(0), verb ? P(1) : P(-1), P(0))
        .facts();
    return from(L, R);
}

Sides enc_2_3(Variant) {
    FB L(2), R(1);
    L.num(S("a"), Nn())
        .num(S("j").times("a", -1).times("w", -1), Rr())
        .num(S("w"), IX(P(-1, 1), P(0, 1)))
        .den(S("j"), IX(P(-1, 1), P(0, 1)))
        .mono(S("a", -1), Nn())
        .facts();
    R.num(S("w").times("a"), IX(P(0, 1)))
        .num(S("w"), IX(P(-1, 1)))
        .num(S("j").times("w", -1), Nn())
        .den(S("w").times("a"), IX(P(-1, 1)))
        .den(S("j"), IX(P(0, 1)))
        .mono(S("a", -1), Nn())
        .facts();
    return from(L, R);
}

Sides enc_2_4(Variant) {
    FB L(2), R(1);
    L.num(S("v"), IX(P(2), P(1)))
        .num(S("w"), IX(P(-1, 1), P(0, 1)))
        .den(S("v").times("w").times("j", -1).qfactor(1), Nn())
        .den(S("j"), IX(P(-1, 1), P(0, 1)))
        .sgn(Nn())
        .mono(S("w").times("j", -1), Nn())
        .bq(P(-1), P(-2), P(0), P(1), P(0))
        .facts();
    R.num(S("v"), Nn())
        .num(S("w").times("v"), IX(P(1, 1)))
        .num(S("w"), IX(P(-1, 1)))
        .num(S("j").times("w", -1), Nn())
        .den(S("w").times("v"), IX(P(0, 1)))
        .den(S("v").times("w").times("j", -1).qfactor(1), Nn())
        .den(S("j"), IX(P(0, 1)))
        .sgn(Nn())
        .mono(S("w").times("j", -1), Nn())
        .bq(P(-1), P(0), P(0), P(1), P(0))
        .facts();
    return from(L, R);
}

Sides enc_2_5(Variant) {
    FB L(2), R(1);
    L.num(S("z"), IX(P(2, 1), P(1, 1)))
        .den(S("h"), Nn())
        .den(S("z").times("j", -1).times("h", -1).qfactor(2), Nn())
        .den(S("j"), IX(P(-1, 1), P(0, 1)))
        .mono(S("j", -1), Nn())
        .bq(P(0, -2), P(-2, -2), P(0), P(2), P(0))
        .facts();
    R.num(S("z"), IX(P(1, 1)))
        .num(S("z").times("h", -1).qfactor(1), IX(P(1, 1)))
        .num(S("j").times("h").qfactor(-1), IX(P(1, 1)))
        .den(S("h"), Nn())
        .den(S("z").times("j", -1).times("h", -1).qfactor(2), Nn())
        .den(S("j"), IX(P(0, 1)))
        .den(S("z").times("h", -1).qfactor(1), IX(P(0, 1)))
        .den(S("j").times("h").qfactor(-1), IX(P(0, 1)))
        .mono(S("j", -1).qfactor(1), Nn())
        .bq(P(0, -2), P(0), P(0), P(0), P(0))
        .facts();
    return from(L, R);
}

Sides enc_2_6(Variant v) {
    const bool verb = (v == Variant::Verbatim);
    FB L(2), R(1);
    L.num(S("z"), verb ? IX(P(2, 1), P(3, 1)) : IX(P(3, 1), P(2, 1)))
        .den(S("f"), IX(P(2), P(1)))
        .den(S("z").times("j", -1).times(verb ? "v" : "f", -1).qfactor(2), Nn())
        .den(S("j"), IX(P(-1, 1), P(0, 1)))
        .mono(S("j", -1), Nn())
        .bq(P(0, -2), P(-2, -2), P(0), P(2), P(0))
        .facts();
    R.num(S("z"), IX(P(2, 1)))
        .num(S("z").times("f", -1).qfactor(1), IX(P(1, 1)))
        .num(S("j").times("f").qfactor(-1), IX(P(2, 1)))
        .den(S("z").times("j", -1).times("f", -1).qfactor(2), Nn())
        .den(S("j"), IX(P(0, 1)))
        .den(S("z").times("f", -1).qfactor(1), IX(P(0, 1)))
        .den(S("j").times("f").qfactor(-1), IX(P(1, 1)))
        .den(S("f"), Nn(2))
        .mono(S("j", -1).qfactor(1), Nn())
        .bq(P(0, -2), P(0), P(0), P(0), P(0))
        .facts();
    return from(L, R);
}

Sides enc_2_7(Variant v) {
    const bool verb = (v == Variant::Verbatim);
    FB L(2), R(1);
    L.num(S("j").times("f").times("z", -1).qfactor(-1), Rr())
        .num(S("z"), IX(P(2, 1), P(1, 1)))
        .den(S("f"), IX(P(2), P(1)))
        .den(S("j"), IX(P(-1, 1), P(0, 1)))
        .sgn(Nn())
        .mono(S("f").times("z", -1), Nn())
        .bq(P(1, -2), P(0, -2), P(0), P(-1), P(0))
        .facts();
    if (verb)
        L.den(S("z").times("j", -1).times("v", -1).qfactor(2), Nn());
    R.num(S("z"), IX(P(1, 1)))
        .num(S("z").times("f", -1).qfactor(1), IX(P(0, 1)))
        .num(S("j").times("f").qfactor(-1), IX(P(2, 1)))
        .den(S("z").times("f", -1).qfactor(1), IX(P(-1, 1)))
        .den(S("j").times("f").qfactor(-1), IX(P(1, 1)))
        .den(S("f"), Nn(2))
        .den(S("j"), IX(P(0, 1)))
        .sgn(Nn())
        .mono(S("f").times("z", -1), Nn())
        .bq(P(1, -2), P(0), P(0), P(-1), P(0))
        .facts();
    return from(L, R);
}

Sides enc_2_8(Variant) {
    FB L(2), R(1);
    L.num(S("z"), IX(P(4, 1), P(3, 1)))
        .den(S("f"), IX(P(2), P(1)))
        .den(S("z").times("j", -1).times("f", -1).qfactor(2), IX(P(2), P(1)))
        .den(S("j"), IX(P(-1, 1), P(0, 1)))
        .mono(S("j", -1), Nn())
        .bq(P(0, -2), P(-2, -2), P(0), P(2), P(0))
        .facts();
    R.num(S("z"), IX(P(3, 1)))
        .num(S("z").times("f", -1).qfactor(1), IX(P(2, 1)))
        .num(S("j").times("f").qfactor(-1), IX(P(2, 1)))
        .den(S("f"), Nn(2))
        .den(S("z").times("j", -1).times("f", -1).qfactor(2), Nn(2))
        .den(S("j"), IX(P(0, 1)))
        .den(S("z").times("f", -1).qfactor(1), IX(P(1, 1)))
        .den(S("j").times("f").qfactor(-1), IX(P(1, 1)))
        .mono(S("j", -1).qfactor(1), Nn())
        .bq(P(0, -2), P(0), P(0), P(0), P(0))
        .facts();
    return from(L, R);
}

Sides enc_2_9(Variant) {
    FB L(2), R(1);
    L.num(S("h").times("j").times("z", -1).qfactor(-1), Rr())
        .num(S("z"), IX(P(1, 1), P(0, 1)))
        .den(S("h"), Nn())
        .den(S("j"), IX(P(-1, 1), P(0, 1)))
        .sgn(Nn())
        .mono(S("h").times("z", -1), Nn())
        .bq(P(1, -2), P(0, -2), P(0), P(-1), P(0))
        .facts();
    R.num(S("z"), IX(P(0, 1)))
        .num(S("z").times("h", -1).qfactor(1), IX(P(0, 1)))
        .num(S("j").times("h").qfactor(-1), IX(P(1, 1)))
        .den(S("z").times("h", -1).qfactor(1), IX(P(-1, 1)))
        .den(S("j").times("h").qfactor(-1), IX(P(0, 1)))
        .den(S("h"), Nn())
        .den(S("j"), IX(P(0, 1)))
        .sgn(Nn())
        .mono(S("h").times("z", -1), Nn())
        .bq(P(1, -2), P(0), P(0), P(-1), P(0))
        .facts();
    return from(L, R);
}

Sides enc_2_10(Variant v) {
    const bool verb = (v == Variant::Verbatim);
    FB L(2), R(1);
    L.num(S("u"), Rr())
        .num(S("j").times("z", -1).times("u", -1), Rr())
        .num(S("z"), IX(P(0, 1), P(-1, 1)))
        .den(S("j"), IX(P(-1, 1), P(0, 1)))
        .mono(S("z", -1), Nn())
        .bq(P(2, -2), verb ? P(-2, 2) : P(2, -2), P(0), P(0), P(0))
        .facts();
    R.num(S("z"), IX(P(-1, 1)))
        .num(S("u").times("z"), IX(P(0, 1)))
        .num(S("j").times("u", -1), IX(P(0, 1)))
        .den(S("u").times("z"), IX(P(-1, 1)))
        .den(S("j").times("u", -1), IX(P(-1, 1)))
        .den(S("j"), IX(P(0, 1)))
        .bq(P(2, -2), P(0), P(0), P(0), P(0))
        .facts();
    if (!verb) R.mono(S("z", -1), Nn());
    return from(L, R);
}

Sides enc_2_11(Variant) {
    FB L(2), R(1);
    L.num(S("v"), IX(P(2), P(1)))
        .num(S("w"), IX(P(-1, 1), P(0, 1)))
        .den(S("v").times("w").times("k", -1).qfactor(1), Rr())
        .den(S("k"), IX(P(0, 1), P(-1, 1)))
        .sgn(Nn())
        .mono(S("k").times("v", -1), Nn())
        .bq(P(-3, 2), P(4, -2), P(0), P(-1), P(0))
        .facts();
    R.num(S("v"), Nn())
        .num(S("k").times("v", -1), IX(P(-1, 1)))
        .num(S("w"), IX(P(-1, 1)))
        .num(S("w").times("v"), IX(P(1, 1)))
        .den(S("v").times("w").times("k", -1).qfactor(1), Nn())
        .den(S("w").times("v"), IX(P(0, 1)))
        .den(S("k").times("v", -1), IX(P(-2, 1)))
        .den(S("k"), IX(P(0, 1)))
        .facts();
    return from(L, R);
}

Sides enc_2_12(Variant) {
    FB L(2), R(1);
    L.num(S("k").times("v", -1).times("w", -1), Nn())
        .num(S("v"), IX(P(2), P(1)))
        .num(S("w"), IX(P(-1, 1), P(0, 1)))
        .den(S("k"), IX(P(1, 1), P(0, 1)))
        .mono(S("w"), Nn())
        .bq(P(-2, 2), P(-2, 2), P(0), P(0), P(0))
        .facts();
    R.num(S("v"), Nn())
        .num(S("k").times("v", -1), IX(P(0, 1)))
        .num(S("w"), IX(P(-1, 1)))
        .num(S("w").times("v"), IX(P(1, 1)))
        .den(S("w").times("v"), IX(P(0, 1)))
        .den(S("k").times("v", -1), IX(P(-1, 1)))
        .den(S("k"), IX(P(1, 1)))
        .facts();
    return from(L, R);
}

Sides enc_2_13(Variant) {
    FB L(2), R(1);
    L.num(S("k").times("e").times("w", -1).qfactor(-1), Nn())
        .num(S("w"), IX(P(-1, 1), P(0, 1)))
        .den(S("e"), Rr())
        .den(S("k"), IX(P(-1, 1), P(-2, 1)))
        .sgn(Nn())
        .mono(S("w").times("e", -1), Nn())
        .bq(P(-3, 2), P(4, -2), P(0), P(1), P(0))
        .facts();
    R.num(S("k").times("e").qfactor(-1), IX(P(0, 1)))
        .num(S("w"), IX(P(-1, 1)))
        .num(S("w").times("e", -1).qfactor(1), IX(P(-1, 1)))
        .den(S("e"), Nn())
        .den(S("k").times("e").qfactor(-1), IX(P(-1, 1)))
        .den(S("w").times("e", -1).qfactor(1), IX(P(-2, 1)))
        .den(S("k"), IX(P(-1, 1)))
        .facts();
    return from(L, R);
}

Sides enc_2_14(Variant v) {
    const bool verb = (v == Variant::Verbatim);
    FB L(2), R(1);
    L.num(S("a", 3), IX(P(3), P(1)))
        .den(S("a", 6).times("h", -2).qfactor(3), Nn(), 2)
        .den(Qp(2), Rr(), 2)
        .sgn(Nn())
        .bq(P(-3), P(-6), P(-1), P(2), P(0));
    if (verb)
        L.den(S("h"), Nn()).den(Qp(1), Nn());
    else
        L.den(S("h", 2), Nn(), 2).den(Qp(2), Nn(), 2);
    R.num(S("a", 3), Nn())
        .num(S("h", 2).times("a", -3).qfactor(-1), Nn())
        .num(S("a", 3).times("h", -2).qfactor(2), Nn())
        .den(S("h", 2), Nn(), 2)
        .den(S("a", 6).times("h", -2).qfactor(3), Nn(), 2)
        .den(Qp(2), Nn(), 2)
        .mono(S("a", 3), Nn())
        .bq(P(0), P(0), P(0), P(1), P(0));
    return from(L, R);
}

/// LHS of the quadratic-transformation specialization: a terminating-free
/// 3phi2 with argument proportional to x.
Sides enc_4_2(Variant) {
    FB L(1);
    L.num(S("v"), Nn())
        .num(S("k").times("z", -1), Nn())
        .num(S("v").times("k", -1).qfactor(1), Nn())
        .den(S("k"), Nn())
        .den(S("v").times("z").times("k", -1).qfactor(1), Nn())
        .mono(S("z"), Nn())
        .facts();
    Sides s;
    s.lhs.families.push_back(L.f);

    ExplicitFactor pre;
    pre.name = "q-binomial prefactor";
    pre.coefficients = [](const Assignment& a, long, const QBase& base, long N) {
        return q_binomial_series(a.at("v"), base.q, N);
    };
    pre.coefficients_f = [](const std::map<std::string, double>& a, long, double b, long N) {
        const double q = b * b;
        const double v = a.at("v");
        std::vector<double> c(static_cast<size_t>(N) + 1, 1.0);
        double top = 1.0, bot = 1.0, qp = 1.0;  // qp = q^{n-1}
        for (long n = 1; n <= N; ++n) {
            top *= (1.0 - v * qp);
            bot *= (1.0 - qp * q);
            qp *= q;
            c[static_cast<size_t>(n)] = top / bot;
        }
        return c;
    };
    s.rhs.explicits.push_back(pre);

    // 5phi4 with x-dependent lower parameters (vx; q)_n and (q/x; q)_n.
    // The conjugate numerator pairs collapse to (v; q^2)_n (vq; q^2)_n, and
    //   1/(q/x; q)_n = (-1)^n q^{-n(n+1)/2} x^n / (x q^{-n}; q)_n,
    // so each n-term is x^n times a product of geometric series in x.
    ExplicitFactor phi;
    phi.name = "quadratic 5phi4";
    phi.coefficients = [](const Assignment& a, long, const QBase& base, long N) {
        const Rat q = base.q;
        const Rat v = a.at("v"), z = a.at("z"), k = a.at("k");
        const Rat q2 = q * q;
        std::vector<Rat> total(static_cast<size_t>(N) + 1, Rat(0));
        auto mul_geom = [&](std::vector<Rat>& s, const Rat& c) {
            // multiply by 1/(1 - c x): running prefix s'_m = s_m + c s'_{m-1}
            for (long m = 1; m <= N; ++m)
                s[static_cast<size_t>(m)] += c * s[static_cast<size_t>(m - 1)];
        };
        for (long n = 0; n <= N; ++n) {
            Rat A = q_pochhammer(v, q2, n) * q_pochhammer(v * q, q2, n) *
                    q_pochhammer(z, q, n) * rpow(q, n);
            const Rat den = q_pochhammer(q, q, n) * q_pochhammer(q * v * z / k, q, n) *
                            q_pochhammer(k, q, n);
            if (den == 0) throw std::runtime_error("parameter pole");
            A /= den;
            if (n % 2) A = -A;
            A *= rpow(q, -n * (n + 1) / 2);
            std::vector<Rat> ser(static_cast<size_t>(N) + 1, Rat(0));
            ser[0] = 1;
            for (long i = 0; i < n; ++i) mul_geom(ser, v * rpow(q, i));
            for (long i = 1; i <= n; ++i) mul_geom(ser, rpow(q, -i));
            for (long m = 0; m + n <= N; ++m)
                total[static_cast<size_t>(m + n)] += A * ser[static_cast<size_t>(m)];
        }
        return total;
    };
    phi.coefficients_f = [](const std::map<std::string, double>& a, long, double b, long N) {
        const double q = b * b;
        const double v = a.at("v"), z = a.at("z"), k = a.at("k");
        const double q2 = q * q;
        std::vector<double> total(static_cast<size_t>(N) + 1, 0.0);
        auto poch = [](double x, double qq, long n) {
            double out = 1.0, t = x;
            for (long i = 0; i < n; ++i) {
                out *= (1.0 - t);
                t *= qq;
            }
            return out;
        };
        for (long n = 0; n <= N; ++n) {
            double A = poch(v, q2, n) * poch(v * q, q2, n) * poch(z, q, n) *
                       std::pow(q, static_cast<double>(n));
            A /= poch(q, q, n) * poch(q * v * z / k, q, n) * poch(k, q, n);
            if (n % 2) A = -A;
            A *= std::pow(q, -static_cast<double>(n * (n + 1)) / 2.0);
            std::vector<double> ser(static_cast<size_t>(N) + 1, 0.0);
            ser[0] = 1.0;
            auto mul_geom = [&](double c) {
                for (long m = 1; m <= N; ++m)
                    ser[static_cast<size_t>(m)] += c * ser[static_cast<size_t>(m - 1)];
            };
            for (long i = 0; i < n; ++i) mul_geom(v * std::pow(q, static_cast<double>(i)));
            for (long i = 1; i <= n; ++i) mul_geom(std::pow(q, -static_cast<double>(i)));
            for (long m = 0; m + n <= N; ++m)
                total[static_cast<size_t>(m + n)] += A * ser[static_cast<size_t>(m)];
        }
        return total;
    };
    s.rhs.explicits.push_back(phi);
    return s;
}

Sides encode(const std::string& id, Variant v) {
    if (id == "2.1" || id == "4.1") return enc_2_1(v);
    if (id == "2.2") return enc_2_2(v);
    if (id == "2.3") return enc_2_3(v);
    if (id == "2.4" || id == "4.3") return enc_2_4(v);
    if (id == "2.5") return enc_2_5(v);
    if (id == "2.6") return enc_2_6(v);
    if (id == "2.7") return enc_2_7(v);
    if (id == "2.8") return enc_2_8(v);
    if (id == "2.9") return enc_2_9(v);
    if (id == "2.10") return enc_2_10(v);
    if (id == "2.11") return enc_2_11(v);
    if (id == "2.12") return enc_2_12(v);
    if (id == "2.13") return enc_2_13(v);
    if (id == "2.14") return enc_2_14(v);
    if (id == "4.2") return enc_4_2(v);
    throw std::invalid_argument("unknown identity id: " + id);
}

std::vector<IdentityInfo> make_registry() {
    auto mk = [](const char* id, std::vector<std::string> syms, int recipe,
                 const char* sens) {
        IdentityInfo info;
        info.id = id;
        info.symbols = std::move(syms);
        info.recipe = recipe;
        info.sensitivity = sens;
        return info;
    };
    std::vector<IdentityInfo> reg;
    reg.push_back(mk("2.1", {"a", "z", "k"}, 1, "k"));
    {
        auto e = mk("2.2", {"v", "z", "k"}, 2, "k");
        e.note = "verbatim text carries (-x q^{-n})^r on the double-sum side and"
                 " q^{-C(n,2)} on the single-sum side; the corrected variant drops"
                 " the (-1)^r and flips the exponent to q^{+C(n,2)}; adjudicated by"
                 " recipe ii";
        reg.push_back(e);
    }
    reg.push_back(mk("2.3", {"a", "w", "j"}, 3, "j"));
    reg.push_back(mk("2.4", {"v", "w", "j"}, 4, "j"));
    reg.push_back(mk("2.5", {"h", "z", "j"}, 5, "j"));
    {
        auto e = mk("2.6", {"f", "z", "j"}, 6, "j");
        e.verbatim_extra = {"v"};
        e.note = "verbatim factor (q^2 z/(jv); q)_n should read (q^2 z/(jf); q)_n"
                 " and the z-type index (p+2)n+(p+3)r should read (p+3)n+(p+2)r;"
                 " adjudicated by recipe vi";
        reg.push_back(e);
    }
    {
        auto e = mk("2.7", {"f", "z", "j"}, 7, "j");
        e.verbatim_extra = {"v"};
        e.note = "verbatim carries an extra factor (q^2 z/(jv); q)_n with no source"
                 " in the derivation; the corrected variant drops it; adjudicated by"
                 " recipe vii";
        reg.push_back(e);
    }
    reg.push_back(mk("2.8", {"f", "z", "j"}, 8, "j"));
    reg.push_back(mk("2.9", {"h", "z", "j"}, 9, "j"));
    {
        auto e = mk("2.10", {"u", "z", "j"}, 10, "j");
        e.note = "verbatim exponent q^{(1-p)n^2-(1-p)nr} should read"
                 " q^{(1-p)(n^2+nr)} and the single-sum argument x^n should read"
                 " (x/z)^n; adjudicated by recipe x";
        reg.push_back(e);
    }
    reg.push_back(mk("2.11", {"v", "w", "k"}, 11, "k"));
    reg.push_back(mk("2.12", {"v", "w", "k"}, 12, "k"));
    reg.push_back(mk("2.13", {"e", "w", "k"}, 13, "k"));
    {
        auto e = mk("2.14", {"a", "h"}, 14, "h");
        e.note = "verbatim denominator factors (h; q)_n and (q; q)_n should read"
                 " (h^2; q^2)_n and (q^2; q^2)_n; adjudicated by recipe xiv";
        reg.push_back(e);
    }
    {
        auto e = mk("4.1", {"a", "z", "k"}, 1, "k");
        e.has_p = false;
        e.fixed_p = 0;
        e.classical_tag = "Kampe de Feriet reduction";
        reg.push_back(e);
    }
    {
        auto e = mk("4.2", {"v", "z", "k", "sqrt_v"}, 2, "k");
        e.has_p = false;
        e.fixed_p = 0;
        e.classical_tag = "Whipple/Sears-Carlitz";
        reg.push_back(e);
    }
    {
        auto e = mk("4.3", {"v", "w", "j"}, 4, "j");
        e.has_p = false;
        e.fixed_p = 1;
        e.classical_tag = "Horn H4 reduction";
        reg.push_back(e);
    }
    return reg;
}

const std::vector<IdentityInfo>& registry() {
    static const std::vector<IdentityInfo> reg = make_registry();
    return reg;
}

bool index_forms_ok(const SeriesProduct& sp, long p) {
    for (const auto& fam : sp.families) {
        auto ok = [&](const std::vector<PochFactor>& fs) {
            for (const auto& f : fs)
                if (f.index.cn.at(p) < 0 || f.index.cr.at(p) < 0 || f.index.c0.at(p) < 0)
                    return false;
            return true;
        };
        if (!ok(fam.numerator) || !ok(fam.denominator)) return false;
    }
    return true;
}

bool depends_on_p(const SeriesProduct& sp) {
    auto dep = [](const LinearForm& l) {
        return l.cn.cp != 0 || l.cr.cp != 0 || l.c0.cp != 0;
    };
    for (const auto& fam : sp.families) {
        for (const auto& f : fam.numerator)
            if (dep(f.index)) return true;
        for (const auto& f : fam.denominator)
            if (dep(f.index)) return true;
    }
    return false;
}

/// splitmix64: deterministic seeded stream for sweeps.
struct Rng {
    unsigned long long s;
    explicit Rng(unsigned long long seed) : s(seed) {}
    unsigned long long next() {
        s += 0x9e3779b97f4a7c15ULL;
        unsigned long long z = s;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    long range(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(next() % static_cast<unsigned long long>(hi - lo + 1));
    }
};

Rat small_rational(Rng& rng) {
    const long num = rng.range(1, 8);
    const long den = rng.range(num + 1, 9);
    return Rat(num, den);
}

}  // namespace

const std::vector<std::string>& identity_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> out;
        for (const auto& e : registry()) out.push_back(e.id);
        return out;
    }();
    return ids;
}

const IdentityInfo& identity_info(const std::string& id) {
    for (const auto& e : registry())
        if (e.id == id) return e;
    throw std::invalid_argument("unknown identity id: " + id);
}

Variant default_variant(const std::string& id) {
    return identity_info(id).note.empty() ? Variant::Verbatim : Variant::Corrected;
}

bool valid_p(const std::string& id, long p) {
    const IdentityInfo& info = identity_info(id);
    if (info.fixed_p) return p == *info.fixed_p;
    const Sides s = encode(id, Variant::Corrected);
    return index_forms_ok(s.lhs, p) && index_forms_ok(s.rhs, p);
}

std::vector<long> validity_window(const std::string& id) {
    const IdentityInfo& info = identity_info(id);
    if (info.fixed_p) return {*info.fixed_p};
    const Sides s = encode(id, Variant::Corrected);
    if (!depends_on_p(s.lhs) && !depends_on_p(s.rhs)) return {0};
    std::vector<long> out;
    for (long p = 0; p <= 2; ++p)
        if (index_forms_ok(s.lhs, p) && index_forms_ok(s.rhs, p)) out.push_back(p);
    return out;
}

BuiltIdentity build(const std::string& id, long p, long D, long G, Variant variant) {
    const IdentityInfo& info = identity_info(id);
    if (D < 0 || G < 0) throw std::invalid_argument("D and G must be nonnegative");
    if (info.fixed_p)
        p = *info.fixed_p;
    else if (!valid_p(id, p))
        throw std::invalid_argument("p out of range for identity");
    if (id == "4.2" && (D > 0 || G > 0))
        throw std::invalid_argument("4.2 fixes D = G = 0");
    BuiltIdentity out;
    out.info = info;
    out.variant = variant;
    out.p = p;
    out.D = D;
    out.G = G;
    Sides s = encode(id, variant);
    for (long i = 1; i <= D; ++i) {
        const std::string sym = "d" + std::to_string(i);
        s.lhs.families[0].numerator.push_back({S(sym.c_str()), 1, IX(P(1), P(1))});
        s.rhs.families[0].numerator.push_back({S(sym.c_str()), 1, Nn()});
    }
    for (long i = 1; i <= G; ++i) {
        const std::string sym = "g" + std::to_string(i);
        s.lhs.families[0].denominator.push_back({S(sym.c_str()), 1, IX(P(1), P(1))});
        s.rhs.families[0].denominator.push_back({S(sym.c_str()), 1, Nn()});
    }
    out.lhs = std::move(s.lhs);
    out.rhs = std::move(s.rhs);
    return out;
}

namespace {

Assignment merged_values(const ParamAssignment& a) {
    Assignment m = a.values;
    for (size_t i = 0; i < a.d.size(); ++i) m["d" + std::to_string(i + 1)] = a.d[i];
    for (size_t i = 0; i < a.g.size(); ++i) m["g" + std::to_string(i + 1)] = a.g[i];
    return m;
}

}  // namespace

VerificationReport verify(const std::string& id, const ParamAssignment& a, long N,
                          Variant variant) {
    const auto start = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.id = id;
    rep.variant = variant_name(variant);
    rep.p = a.p;
    rep.D = static_cast<long>(a.d.size());
    rep.G = static_cast<long>(a.g.size());
    rep.params = a.values;
    rep.b = a.b;
    rep.order = N;
    try {
        BuiltIdentity built = build(id, a.p, rep.D, rep.G, variant);
        rep.p = built.p;
        if (id == "4.2") {
            auto it = a.values.find("sqrt_v");
            auto iv = a.values.find("v");
            if (it == a.values.end() || iv == a.values.end() ||
                it->second * it->second != iv->second)
                throw std::runtime_error(
                    "inconsistent derived parameter: sqrt_v^2 must equal v");
        }
        const QBase base(a.b);
        const Assignment values = merged_values(a);
        const TruncatedSeries lhs = truncate_product(built.lhs, values, built.p, base, N);
        const TruncatedSeries rhs = truncate_product(built.rhs, values, built.p, base, N);
        const ComparisonOutcome out = compare(lhs, rhs);
        if (out.status == CompareStatus::PASS) {
            rep.status = "PASS";
        } else {
            rep.status = "MISMATCH";
            rep.mismatch_degree = out.degree;
            rep.lhs_coeff = out.lhs;
            rep.rhs_coeff = out.rhs;
            rep.has_coeffs = true;
        }
    } catch (const std::exception& e) {
        rep.status = "INVALID";
        rep.reason = e.what();
    }
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return rep;
}

std::vector<VerificationReport> sweep(const std::string& id, long N, long trials,
                                      unsigned long long seed) {
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    const IdentityInfo& info = identity_info(id);
    const Variant variant = default_variant(id);
    const std::vector<long> window = validity_window(id);
    static const char* bases[3] = {"1/2", "1/3", "2/5"};
    Rng rng(seed ^ std::hash<std::string>{}(id));
    std::vector<VerificationReport> out;
    for (long t = 0; t < trials; ++t) {
        const long D = (id == "4.2") ? 0 : t % 3;
        const long G = (id == "4.2") ? 0 : (t + 1) % 2;
        for (long p : window) {
            bool found = false;
            for (int attempt = 0; attempt < 200 && !found; ++attempt) {
                ParamAssignment a;
                a.b = parse_rational(bases[rng.next() % 3]);
                a.p = p;
                for (const auto& sym : info.symbols) {
                    if (sym == "sqrt_v") continue;
                    a.values[sym] = small_rational(rng);
                }
                if (id == "4.2") {
                    const Rat s = small_rational(rng);
                    a.values["sqrt_v"] = s;
                    a.values["v"] = s * s;
                }
                for (long i = 0; i < D; ++i) a.d.push_back(small_rational(rng));
                for (long i = 0; i < G; ++i) a.g.push_back(small_rational(rng));
                VerificationReport rep = verify(id, a, N, variant);
                if (rep.status == "INVALID") continue;
                out.push_back(std::move(rep));
                found = true;
            }
            if (!found)
                throw std::runtime_error("could not find pole-free assignment for " + id);
        }
    }
    return out;
}

ComparisonOutcome cross_check_with_bailey(const std::string& id, const ParamAssignment& a,
                                          long N) {
    const IdentityInfo& info = identity_info(id);
    if (info.recipe == 0) throw std::invalid_argument("no linked recipe for " + id);
    BuiltIdentity built = build(id, a.p, static_cast<long>(a.d.size()),
                                static_cast<long>(a.g.size()), Variant::Corrected);
    const QBase base(a.b);
    const Assignment values = merged_values(a);
    const TruncatedSeries lhs_reg = truncate_product(built.lhs, values, built.p, base, N);
    const TruncatedSeries rhs_reg = truncate_product(built.rhs, values, built.p, base, N);

    RecipeInstance inst = make_recipe(info.recipe, a.values, built.p, base, N, a.d, a.g);
    const long p = built.p, pp = inst.p_prime;
    TruncatedSeries lhs_b, rhs_b;
    for (long m = 0; m <= N; ++m) {
        Rat sum(0);
        for (long n = 0; n <= m; ++n) {
            const long r = m - n;
            sum += inst.delta(m) * inst.alpha(n) * inst.u(r) * inst.v(2 * n + r) *
                   inst.t(3 * n + r) * inst.w((p - 1) * n + p * r) *
                   inst.z((pp + 1) * n + pp * r);
        }
        lhs_b.coeffs.push_back(sum);
        rhs_b.coeffs.push_back(inst.delta(m) * beta_seq(inst.config, m));
    }
    const ComparisonOutcome left = compare(lhs_reg, lhs_b);
    if (left.status != CompareStatus::PASS) return left;
    return compare(rhs_reg, rhs_b);
}

VerificationReport sensitivity_check(const std::string& id, const ParamAssignment& a,
                                     long N) {
    const auto start = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.id = id;
    rep.variant = "sensitivity";
    rep.p = a.p;
    rep.D = static_cast<long>(a.d.size());
    rep.G = static_cast<long>(a.g.size());
    rep.params = a.values;
    rep.b = a.b;
    rep.order = N;
    try {
        const Variant variant = default_variant(id);
        BuiltIdentity built = build(id, a.p, rep.D, rep.G, variant);
        rep.p = built.p;
        const QBase base(a.b);
        const Assignment values = merged_values(a);
        Assignment perturbed = values;
        perturbed.at(built.info.sensitivity) *= base.q;
        const TruncatedSeries lhs = truncate_product(built.lhs, values, built.p, base, N);
        const TruncatedSeries rhs =
            truncate_product(built.rhs, perturbed, built.p, base, N);
        const ComparisonOutcome out = compare(lhs, rhs);
        if (out.status == CompareStatus::PASS) {
            rep.status = "PASS";
        } else {
            rep.status = "MISMATCH";
            rep.mismatch_degree = out.degree;
            rep.lhs_coeff = out.lhs;
            rep.rhs_coeff = out.rhs;
            rep.has_coeffs = true;
        }
    } catch (const std::exception& e) {
        rep.status = "INVALID";
        rep.reason = e.what();
    }
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return rep;
}

ParamAssignment sample_assignment(const std::string& id) {
    const IdentityInfo& info = identity_info(id);
    ParamAssignment a;
    a.b = parse_rational("1/2");
    a.p = validity_window(id).front();
    static const std::map<std::string, std::map<std::string, std::string>> std_params = {
        {"2.1", {{"a", "1/4"}, {"z", "1/3"}, {"k", "1/5"}}},
        {"2.2", {{"v", "1/4"}, {"z", "1/3"}, {"k", "1/5"}}},
        {"2.3", {{"a", "1/4"}, {"w", "1/3"}, {"j", "1/5"}}},
        {"2.4", {{"v", "1/4"}, {"w", "1/3"}, {"j", "1/5"}}},
        {"2.5", {{"h", "1/4"}, {"z", "1/3"}, {"j", "1/5"}}},
        {"2.6", {{"f", "1/4"}, {"z", "1/3"}, {"j", "1/5"}}},
        {"2.7", {{"f", "1/4"}, {"z", "1/3"}, {"j", "1/5"}}},
        {"2.8", {{"f", "1/4"}, {"z", "1/3"}, {"j", "1/5"}}},
        {"2.9", {{"h", "1/4"}, {"z", "1/3"}, {"j", "1/5"}}},
        {"2.10", {{"u", "1/4"}, {"z", "1/3"}, {"j", "1/5"}}},
        {"2.11", {{"v", "1/4"}, {"w", "1/3"}, {"k", "1/5"}}},
        {"2.12", {{"v", "1/4"}, {"w", "1/3"}, {"k", "1/5"}}},
        {"2.13", {{"e", "1/4"}, {"w", "1/3"}, {"k", "1/5"}}},
        {"2.14", {{"a", "1/4"}, {"h", "1/3"}}},
        {"4.1", {{"a", "1/4"}, {"z", "1/3"}, {"k", "1/5"}}},
        {"4.2", {{"v", "1/4"}, {"z", "1/3"}, {"k", "1/5"}, {"sqrt_v", "1/2"}}},
        {"4.3", {{"v", "1/4"}, {"w", "1/3"}, {"j", "1/5"}}},
    };
    for (const auto& [k, v] : std_params.at(info.id)) a.values[k] = parse_rational(v);
    return a;
}

}  // namespace qreduce
