#include "hm/varieties.hpp"

#include <random>
#include <stdexcept>

#include <fmt/format.h>

namespace hm {

namespace {

Residue prod(const PrimeContext& ctx, Residue a, Residue b, Residue c, Residue d, Residue e) {
    return ctx.mul(ctx.mul(ctx.mul(a, b), ctx.mul(c, d)), e);
}

// Shared body of F and G: the four cyclic monomial families with signs.
Residue eval_quintic(const Coords& v, const PrimeContext& ctx, std::array<int, 4> signs) {
    Residue acc = 0;
    for (int i = 0; i < 5; ++i) {
        const Residue a = v[i], b = v[(i + 1) % 5], c = v[(i + 2) % 5], d = v[(i + 3) % 5], e = v[(i + 4) % 5];
        const std::array<Residue, 4> terms{
            prod(ctx, a, a, a, b, e),
            prod(ctx, a, a, a, c, d),
            prod(ctx, a, b, b, e, e),
            prod(ctx, a, c, c, d, d),
        };
        for (int t = 0; t < 4; ++t) acc = signs[t] > 0 ? ctx.add(acc, terms[t]) : ctx.sub(acc, terms[t]);
    }
    return acc;
}

FpMatrix matrix_from(const std::array<std::array<std::int64_t, 5>, 5>& rows, const PrimeContext& ctx) {
    FpMatrix m(5, 5, ctx.p());
    for (std::size_t r = 0; r < 5; ++r)
        for (std::size_t c = 0; c < 5; ++c) m.set(r, c, rows[r][c]);
    return m;
}

}  // namespace

ProjPoint5 ProjPoint5::canonical(const Coords& c, const PrimeContext& ctx) {
    for (std::size_t k = 0; k < 5; ++k) {
        const Residue lead = c[k] % ctx.p();
        if (lead == 0) continue;
        const Residue s = ctx.inv(lead);
        Coords out{};
        for (std::size_t t = 0; t < 5; ++t) out[t] = ctx.mul(c[t] % ctx.p(), s);
        return ProjPoint5(out);
    }
    throw std::invalid_argument("ProjPoint5: zero vector is not a projective point");
}

ProjPoint5 ProjPoint5::from_ints(const std::array<std::int64_t, 5>& c, const PrimeContext& ctx) {
    Coords r{};
    for (std::size_t k = 0; k < 5; ++k) r[k] = ctx.reduce(c[k]);
    return canonical(r, ctx);
}

CurveParam CurveParam::canonical(Residue lambda, Residue mu, const PrimeContext& ctx) {
    lambda %= ctx.p();
    mu %= ctx.p();
    if (lambda != 0) return CurveParam(1, ctx.mul(mu, ctx.inv(lambda)));
    if (mu != 0) return CurveParam(0, 1);
    throw std::invalid_argument("CurveParam: (0:0) is not a point of P^1");
}

Residue eval_F(const Coords& x, const PrimeContext& ctx) { return eval_quintic(x, ctx, {+1, -1, +1, -1}); }

Residue eval_F_displayed(const Coords& x, const PrimeContext& ctx) { return eval_quintic(x, ctx, {+1, +1, -1, -1}); }

Residue eval_G(const Coords& z, const PrimeContext& ctx) { return eval_quintic(z, ctx, {+1, -1, -1, +1}); }

FpMatrix build_M(const Coords& x, const PrimeContext& ctx) {
    const std::int64_t x0 = x[0], x1 = x[1], x2 = x[2], x3 = x[3], x4 = x[4];
    return matrix_from({{{0, -x3, x1, x4, -x2},
                         {-x3, 0, -x4, x2, x0},
                         {x1, -x4, 0, -x0, x3},
                         {x4, x2, -x0, 0, -x1},
                         {-x2, x0, x3, -x1, 0}}},
                       ctx);
}

FpMatrix build_L(const Coords& z, const PrimeContext& ctx) {
    const std::int64_t z0 = z[0], z1 = z[1], z2 = z[2], z3 = z[3], z4 = z[4];
    return matrix_from({{{0, z2, -z4, -z1, z3},
                         {z4, 0, z3, -z0, -z2},
                         {-z3, z0, 0, z4, -z1},
                         {-z2, -z4, z1, 0, z0},
                         {z1, -z3, -z0, z2, 0}}},
                       ctx);
}

std::array<Residue, 5> bilinear_forms(const Coords& x, const Coords& z, const PrimeContext& ctx) {
    const auto v = build_M(x, ctx).apply(z);
    return {v[0], v[1], v[2], v[3], v[4]};
}

bool on_X(const Coords& x, const Coords& z, const PrimeContext& ctx) {
    for (Residue r : bilinear_forms(x, z, ctx))
        if (r != 0) return false;
    return true;
}

std::array<Residue, 5> eval_E(const Coords& z, Branch branch, const PrimeContext& ctx) {
    const Residue i = ctx.i();
    const Residue unit = branch == Branch::E1 ? i : ctx.neg(i);
    std::array<Residue, 5> out{};
    for (int k = 0; k < 5; ++k) {
        const Residue sq = ctx.mul(z[k], z[k]);
        const Residue s = ctx.add(ctx.mul(z[(k + 1) % 5], z[(k + 4) % 5]), ctx.mul(z[(k + 2) % 5], z[(k + 3) % 5]));
        out[k] = ctx.add(ctx.mul(unit, sq), s);
    }
    return out;
}

std::array<Residue, 5> eval_E_family(const Coords& z, const CurveParam& par, const PrimeContext& ctx) {
    const Residue l = par.lambda(), m = par.mu();
    const Residue c0 = ctx.neg(ctx.mul(l, m));
    const Residue c1 = ctx.neg(ctx.mul(m, m));
    const Residue c2 = ctx.mul(l, l);
    std::array<Residue, 5> out{};
    for (int k = 0; k < 5; ++k) {
        Residue q = ctx.mul(c0, ctx.mul(z[k], z[k]));
        q = ctx.add(q, ctx.mul(c1, ctx.mul(z[(k + 1) % 5], z[(k + 4) % 5])));
        q = ctx.add(q, ctx.mul(c2, ctx.mul(z[(k + 2) % 5], z[(k + 3) % 5])));
        out[k] = q;
    }
    return out;
}

DetCalibration calibrate_determinants(const PrimeContext& ctx, int samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Residue> dist(0, ctx.p() - 1);
    auto random_coords = [&] {
        Coords c{};
        for (auto& v : c) v = dist(rng);
        return c;
    };

    std::optional<Residue> c_F, c_G;
    int checked = 0;
    while (checked < samples || !c_F || !c_G) {
        const Coords v = random_coords();
        const Residue f = eval_F(v, ctx), g = eval_G(v, ctx);
        const Residue dm = determinant(build_M(v, ctx)), dl = determinant(build_L(v, ctx));
        if (!c_F && f != 0) c_F = ctx.mul(dm, ctx.inv(f));
        if (!c_G && g != 0) c_G = ctx.mul(dl, ctx.inv(g));
        if (c_F && ctx.mul(*c_F, f) != dm)
            throw std::logic_error(fmt::format("det M(x) is not proportional to F(x) over F_{}", ctx.p()));
        if (c_G && ctx.mul(*c_G, g) != dl)
            throw std::logic_error(fmt::format("det L(z) is not proportional to G(z) over F_{}", ctx.p()));
        ++checked;
        if (checked > 100 * (samples + 10)) throw std::logic_error("determinant calibration did not converge");
    }
    return {*c_F, *c_G};
}

Coords shift(const Coords& v, int k) {
    Coords out{};
    const int s = ((k % 5) + 5) % 5;
    for (int t = 0; t < 5; ++t) out[t] = v[(t + s) % 5];
    return out;
}

Coords tau_power(const Coords& v, int j, const PrimeContext& ctx) {
    const int jj = ((j % 5) + 5) % 5;
    if (jj == 0) return v;
    const Residue e = ctx.eps();
    Coords out{};
    for (int t = 0; t < 5; ++t) out[t] = ctx.mul(v[t], ctx.pow(e, static_cast<std::uint64_t>(jj * t)));
    return out;
}

}  // namespace hm
