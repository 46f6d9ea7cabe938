/// @file bailey.cpp
/// @brief The fourteen transform recipes: skeleton sequences, meta integers,
///        and the quadratic-exponent completion.
///
/// The printed double-sum sides carry a quadratic power of b that the recipe
/// sequences must reproduce. Writing it as
///   b^{nn n^2 + nr nr + rr r^2 + ln n + lr r},
/// the cross term belongs to delta (delta_m gains b^{(nr/2) m^2}), and the
/// residues go to alpha and u:
///   alpha_n *= b^{(nn - nr/2) n^2 + ln n},  u_r *= b^{(rr - nr/2) r^2 + lr r}.
/// The linear delta gauge is fixed to zero; verification is gauge-invariant.

#include "qreduce/bailey.hpp"

namespace qreduce {
namespace detail {

namespace {

using Fn = std::function<Rat(long)>;
using Cp = std::shared_ptr<RecipeCtx>;

Rat ipow(const Rat& v, long e) { return rpow(v, e); }

}  // namespace

RecipeParts recipe_parts(int idx, Cp c) {
    RecipeParts R;
    const long p = c->p;
    const Rat q = c->q();
    auto fact = [c, q](long n) { return c->po(q, n); };        // (q;q)_n
    auto fact2 = [c, q](long n) { return c->po(q * q, n, 2); };  // (q^2;q^2)_n

    switch (idx) {
        case 1: {  // two Pochhammer numerators against a z/k ratio sequence
            const Rat a = c->P("a"), z = c->P("z"), k = c->P("k");
            R.sk_alpha = [c, a, fact](long n) { return c->po(a, n) / fact(n); };
            R.sk_u = [c, a, z, k, fact](long r) { return c->po(k / (z * a), r) / fact(r); };
            R.z = [c, z, k](long m) { return c->po(z, m) / c->po(k, m); };
            R.p_prime = p;
            R.Ca = k / (z * a);
            R.closure = "balanced terminating 3phi2 in base q; terminator q^{-m} from the"
                        " u-factorial conversion; built on parameters a and k/(az)";
            break;
        }
        case 2: {
            const Rat v = c->P("v"), z = c->P("z"), k = c->P("k");
            const Rat gvk = q * v * z / k;
            R.sk_alpha = [c, gvk, fact](long n) { return Rat(1) / (c->po(gvk, n) * fact(n)); };
            R.sk_u = [fact](long r) { return Rat(1) / fact(r); };
            R.v = [c, v](long m) { return c->po(v, m); };
            R.z = [c, z, k](long m) { return c->po(z, m) / c->po(k, m); };
            R.p_prime = p;
            R.sign_n = -1;
            R.nn = -1; R.nr = -2; R.ln = 1;
            R.closure = "balanced terminating 3phi2 in base q; denominator parameter"
                        " qvz/k from alpha, second denominator from the k-sequence"
                        " conversion";
            break;
        }
        case 3: {
            const Rat a = c->P("a"), w = c->P("w"), j = c->P("j");
            R.sk_alpha = [c, a, fact](long n) { return c->po(a, n) / fact(n); };
            R.sk_u = [c, a, w, j, fact](long r) { return c->po(j / (a * w), r) / fact(r); };
            R.w = [c, w, j](long m) { return c->po(w, m) / c->po(j, m); };
            R.p_prime = p;
            R.Ca = Rat(1) / a;
            R.closure = "balanced terminating 3phi2 in base q; built on parameters a"
                        " and j/(aw)";
            break;
        }
        case 4: {
            const Rat v = c->P("v"), w = c->P("w"), j = c->P("j");
            const Rat gvw = q * v * w / j;
            R.sk_alpha = [c, gvw, fact](long n) { return Rat(1) / (c->po(gvw, n) * fact(n)); };
            R.sk_u = [fact](long r) { return Rat(1) / fact(r); };
            R.v = [c, v](long m) { return c->po(v, m); };
            R.w = [c, w, j](long m) { return c->po(w, m) / c->po(j, m); };
            R.p_prime = p;
            R.sign_n = -1;
            R.Ca = w / j;
            R.nn = -1; R.nr = -2; R.ln = 1;
            R.closure = "balanced terminating 3phi2 in base q; denominator parameter"
                        " qvw/j from alpha, second from the j-sequence conversion";
            break;
        }
        case 5: {
            const Rat h = c->P("h"), z = c->P("z"), j = c->P("j");
            const Rat g2 = q * q * z / (j * h);
            R.sk_alpha = [c, h, g2, fact](long n) {
                return Rat(1) / (c->po(h, n) * c->po(g2, n) * fact(n));
            };
            R.sk_u = [fact](long r) { return Rat(1) / fact(r); };
            R.w = [c, j](long m) { return Rat(1) / c->po(j, m); };
            R.z = [c, z](long m) { return c->po(z, m); };
            R.p_prime = p + 1;
            R.Ca = Rat(1) / j;
            R.nn = -2 * p; R.nr = -2 * (p + 1); R.ln = 2;
            R.closure = "balanced terminating 3phi2 in base q; denominator parameters"
                        " h and q^2 z/(jh) from alpha";
            break;
        }
        case 6: {
            const Rat f = c->P("f"), z = c->P("z"), j = c->P("j");
            const Rat g2 = q * q * z / (j * f);
            R.sk_alpha = [c, g2, fact](long n) { return Rat(1) / (c->po(g2, n) * fact(n)); };
            R.sk_u = [fact](long r) { return Rat(1) / fact(r); };
            R.v = [c, f](long m) { return Rat(1) / c->po(f, m); };
            R.w = [c, j](long m) { return Rat(1) / c->po(j, m); };
            R.z = [c, z](long m) { return c->po(z, m); };
            R.p_prime = p + 2;
            R.Ca = Rat(1) / j;
            R.nn = -2 * p; R.nr = -2 * (p + 1); R.ln = 2;
            R.closure = "balanced terminating 3phi2 in base q; denominator parameter"
                        " q^2 z/(jf) from alpha, second from the f-sequence conversion";
            break;
        }
        case 7: {
            const Rat f = c->P("f"), z = c->P("z"), j = c->P("j");
            const Rat ju = j * f / (z * q);
            R.sk_alpha = [fact](long n) { return Rat(1) / fact(n); };
            R.sk_u = [c, ju, fact](long r) { return c->po(ju, r) / fact(r); };
            R.v = [c, f](long m) { return Rat(1) / c->po(f, m); };
            R.w = [c, j](long m) { return Rat(1) / c->po(j, m); };
            R.z = [c, z](long m) { return c->po(z, m); };
            R.p_prime = p + 1;
            R.sign_n = -1;
            R.Ca = f / z;
            R.nn = 1 - 2 * p; R.nr = -2 * p; R.ln = -1;
            R.closure = "balanced terminating 3phi2 in base q; numerator parameter"
                        " jf/(zq) from u, denominators from the f and z sequence"
                        " conversions";
            break;
        }
        case 8: {
            const Rat f = c->P("f"), z = c->P("z"), j = c->P("j");
            const Rat g2 = q * q * z / (j * f);
            R.sk_alpha = [fact](long n) { return Rat(1) / fact(n); };
            R.sk_u = [fact](long r) { return Rat(1) / fact(r); };
            R.v = [c, f, g2](long m) { return Rat(1) / (c->po(f, m) * c->po(g2, m)); };
            R.w = [c, j](long m) { return Rat(1) / c->po(j, m); };
            R.z = [c, z](long m) { return c->po(z, m); };
            R.p_prime = p + 3;
            R.Ca = Rat(1) / j;
            R.nn = -2 * p; R.nr = -2 * (p + 1); R.ln = 2;
            R.closure = "balanced terminating 3phi2 in base q; denominators f and"
                        " q^2 z/(jf) from the v-sequence conversion";
            break;
        }
        case 9: {
            const Rat h = c->P("h"), z = c->P("z"), j = c->P("j");
            const Rat hu = h * j / (z * q);
            R.sk_alpha = [c, h, fact](long n) { return Rat(1) / (c->po(h, n) * fact(n)); };
            R.sk_u = [c, hu, fact](long r) { return c->po(hu, r) / fact(r); };
            R.w = [c, j](long m) { return Rat(1) / c->po(j, m); };
            R.z = [c, z](long m) { return c->po(z, m); };
            R.p_prime = p;
            R.sign_n = -1;
            R.Ca = h / z;
            R.nn = 1 - 2 * p; R.nr = -2 * p; R.ln = -1;
            R.closure = "balanced terminating 3phi2 in base q; numerator parameter"
                        " hj/(zq) from u, denominator h from alpha";
            break;
        }
        case 10: {
            const Rat u0 = c->P("u"), z = c->P("z"), j = c->P("j");
            const Rat ju = j / (z * u0);
            R.sk_alpha = [fact](long n) { return Rat(1) / fact(n); };
            R.sk_u = [c, u0, ju, fact](long r) { return c->po(u0, r) * c->po(ju, r) / fact(r); };
            R.w = [c, j](long m) { return Rat(1) / c->po(j, m); };
            R.z = [c, z](long m) { return c->po(z, m); };
            R.p_prime = p - 1;
            R.Ca = Rat(1) / z;
            R.nn = 2 * (1 - p); R.nr = 2 * (1 - p);
            R.closure = "balanced terminating 3phi2 in base q; numerator parameters"
                        " u and j/(zu) from u";
            break;
        }
        case 11: {
            const Rat v0 = c->P("v"), w = c->P("w"), k = c->P("k");
            const Rat gv = q * v0 * w / k;
            R.sk_alpha = [fact](long n) { return Rat(1) / fact(n); };
            R.sk_u = [c, gv, fact](long r) { return Rat(1) / (c->po(gv, r) * fact(r)); };
            R.v = [c, v0](long m) { return c->po(v0, m); };
            R.w = [c, w](long m) { return c->po(w, m); };
            R.z = [c, k](long m) { return Rat(1) / c->po(k, m); };
            R.p_prime = p - 1;
            R.sign_n = -1;
            R.Ca = k / v0;
            R.nn = 2 * p - 3; R.nr = -2 * (p - 2); R.ln = -1;
            R.closure = "balanced terminating 3phi2 in base q; denominator parameter"
                        " qvw/k from u, second from the k-sequence conversion";
            break;
        }
        case 12: {
            const Rat v0 = c->P("v"), w = c->P("w"), k = c->P("k");
            R.sk_alpha = [c, v0, w, k, fact](long n) {
                return c->po(k / (v0 * w), n) / fact(n);
            };
            R.sk_u = [fact](long r) { return Rat(1) / fact(r); };
            R.v = [c, v0](long m) { return c->po(v0, m); };
            R.w = [c, w](long m) { return c->po(w, m); };
            R.z = [c, k](long m) { return Rat(1) / c->po(k, m); };
            R.p_prime = p;
            R.Ca = w;
            R.nn = 2 * (p - 1); R.nr = 2 * (p - 1);
            R.closure = "balanced terminating 3phi2 in base q; numerator parameter"
                        " k/(vw) from alpha";
            break;
        }
        case 13: {
            const Rat e = c->P("e"), w = c->P("w"), k = c->P("k");
            const Rat ke = k * e / (w * q);
            R.sk_alpha = [c, ke, fact](long n) { return c->po(ke, n) / fact(n); };
            R.sk_u = [c, e, fact](long r) { return Rat(1) / (c->po(e, r) * fact(r)); };
            R.w = [c, w](long m) { return c->po(w, m); };
            R.z = [c, k](long m) { return Rat(1) / c->po(k, m); };
            R.p_prime = p - 2;
            R.sign_n = -1;
            R.Ca = w / e;
            R.nn = 2 * p - 3; R.nr = -2 * (p - 2); R.ln = 1;
            R.closure = "balanced terminating 3phi2 in base q; numerator parameter"
                        " ke/(wq) from alpha, denominator e from u";
            break;
        }
        case 14: {
            // Cubic-argument recipe; everything r-indexed lives in base q^2.
            const Rat a = c->P("a"), h = c->P("h");
            const Rat a3 = a * a * a;
            const Rat h2 = h * h;
            const Rat d2 = a3 * a3 * q * q * q / h2;
            R.sk_alpha = [c, h2, d2, fact2](long n) {
                return Rat(1) / (c->po(h2, n, 2) * c->po(d2, n, 2) * fact2(n));
            };
            R.sk_u = [fact2](long r) { return Rat(1) / fact2(r); };
            R.t = [c, a3](long m) { return c->po(a3, m); };
            R.p_prime = p;
            R.sign_n = -1;
            R.nn = -3; R.nr = -6; R.rr = -1; R.ln = 2;
            R.closure = "balanced terminating 3phi2 in base q^2:"
                        " 3phi2[a^3 q^m, a^3 q^{m+1}, q^{-2m}; h^2, a^6 q^3/h^2; q^2, q^2],"
                        " numerators from splitting (a^3;q)_{m+2r}, terminator from the"
                        " (q^2;q^2)_{m-r} conversion";
            break;
        }
        default:
            throw std::invalid_argument("recipe index out of range");
    }
    return R;
}

}  // namespace detail

RecipeInstance make_recipe(int idx, const Assignment& params, long p, const QBase& base,
                           long support, const std::vector<Rat>& dvec,
                           const std::vector<Rat>& gvec) {
    auto ctx = std::make_shared<detail::RecipeCtx>(base, p, params, dvec, gvec);
    detail::RecipeParts parts = detail::recipe_parts(idx, ctx);

    if (parts.nr % 2 != 0)
        throw std::logic_error("recipe exponent completion: odd cross coefficient");
    const long D2 = parts.nr / 2;
    const long A2 = parts.nn - D2;
    const long U2 = parts.rr - D2;
    const long A1 = parts.ln;
    const long U1 = parts.lr;

    RecipeInstance inst;
    inst.p_prime = parts.p_prime;
    inst.closure = parts.closure;
    // Unset sequences are the constant 1, defined at every integer index
    // (negative shifted indices occur for small p).
    auto lift = [](const std::function<Rat(long)>& f) {
        return f ? f : std::function<Rat(long)>([](long) { return Rat(1); });
    };
    inst.v = lift(parts.v);
    inst.t = lift(parts.t);
    inst.w = lift(parts.w);
    inst.z = lift(parts.z);

    const int sn = parts.sign_n, sr = parts.sign_r;
    const Rat Ca = parts.Ca, Cu = parts.Cu;
    auto sk_alpha = parts.sk_alpha;
    auto sk_u = parts.sk_u;
    inst.alpha = [ctx, sk_alpha, sn, Ca, A2, A1](long n) {
        Rat out = sk_alpha(n) * rpow(Ca, n) * ctx->base.bpow(A2 * n * n + A1 * n);
        if (sn < 0 && (n % 2)) out = -out;
        return out;
    };
    inst.u = [ctx, sk_u, sr, Cu, U2, U1](long r) {
        Rat out = sk_u(r) * rpow(Cu, r) * ctx->base.bpow(U2 * r * r + U1 * r);
        if (sr < 0 && (r % 2)) out = -out;
        return out;
    };
    inst.delta = [ctx, D2](long m) { return ctx->dg(m) * ctx->base.bpow(D2 * m * m); };

    inst.config.alpha = SequenceSpec::closed(inst.alpha);
    inst.config.u = SequenceSpec::closed(inst.u);
    inst.config.delta = SequenceSpec::closed(inst.delta);
    auto seq = [](const std::function<Rat(long)>& f) {
        return f ? SequenceSpec::closed(f) : SequenceSpec::constant(Rat(1));
    };
    inst.config.v = seq(parts.v);
    inst.config.t = seq(parts.t);
    inst.config.w = seq(parts.w);
    inst.config.z = seq(parts.z);
    inst.config.p = p;
    inst.config.p_prime = parts.p_prime;
    inst.config.delta_support = support;
    return inst;
}

}  // namespace qreduce
