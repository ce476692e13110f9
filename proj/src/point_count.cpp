#include "hm/point_count.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <thread>

#include <fmt/format.h>

namespace hm {

namespace {

constexpr int kMaxDegree = 5;

// Counts zeros of the system along the line prefix + (.., t) for t in F_p.
// `prefix` holds coordinates 0..3; coordinate 4 is stepped.
template <int Degree>
std::uint64_t count_line(const FormSystem& sys, Coords prefix, const PrimeContext& ctx) {
    const std::uint32_t p = ctx.p();
    const FormEvaluator& lead = sys.forms.front();

    // Newton forward differences of the lead form at t = 0..Degree.
    std::array<Residue, Degree + 1> d{};
    for (int t = 0; t <= Degree; ++t) {
        prefix[4] = static_cast<Residue>(t);
        d[t] = lead(prefix);
    }
    for (int k = 1; k <= Degree; ++k)
        for (int t = Degree; t >= k; --t) d[t] = ctx.sub(d[t], d[t - 1]);

    std::uint64_t hits = 0;
    for (std::uint32_t t = 0; t < p; ++t) {
        if (d[0] == 0) {
            bool all = true;
            if (sys.forms.size() > 1) {
                prefix[4] = t;
                for (std::size_t f = 1; f < sys.forms.size() && all; ++f) all = sys.forms[f](prefix) == 0;
            }
            hits += all ? 1 : 0;
        }
        for (int k = 0; k < Degree; ++k) {
            const Residue s = d[k] + d[k + 1];
            d[k] = s >= p ? s - p : s;
        }
    }
    return hits;
}

using LineCounter = std::uint64_t (*)(const FormSystem&, Coords, const PrimeContext&);

LineCounter line_counter(int degree) {
    switch (degree) {
        case 1: return &count_line<1>;
        case 2: return &count_line<2>;
        case 3: return &count_line<3>;
        case 4: return &count_line<4>;
        case 5: return &count_line<5>;
        default: throw std::invalid_argument(fmt::format("unsupported form degree {}", degree));
    }
}

bool all_vanish(const FormSystem& sys, const Coords& c) {
    return std::all_of(sys.forms.begin(), sys.forms.end(), [&](const FormEvaluator& f) { return f(c) == 0; });
}

// Stratum 0 lines with z1 in [lo, hi).
std::uint64_t count_leading_slab(const FormSystem& sys, const PrimeContext& ctx, LineCounter line, std::uint32_t lo,
                                 std::uint32_t hi) {
    const std::uint32_t p = ctx.p();
    std::uint64_t n = 0;
    for (std::uint32_t a = lo; a < hi; ++a)
        for (std::uint32_t b = 0; b < p; ++b)
            for (std::uint32_t c = 0; c < p; ++c) n += line(sys, Coords{1, a, b, c, 0}, ctx);
    return n;
}

// Strata 1..4: (0,1,*,*,*), (0,0,1,*,*), (0,0,0,1,*), (0,0,0,0,1).
std::uint64_t count_lower_strata(const FormSystem& sys, const PrimeContext& ctx, LineCounter line) {
    const std::uint32_t p = ctx.p();
    std::uint64_t n = 0;
    for (std::uint32_t b = 0; b < p; ++b)
        for (std::uint32_t c = 0; c < p; ++c) n += line(sys, Coords{0, 1, b, c, 0}, ctx);
    for (std::uint32_t c = 0; c < p; ++c) n += line(sys, Coords{0, 0, 1, c, 0}, ctx);
    n += line(sys, Coords{0, 0, 0, 1, 0}, ctx);
    n += all_vanish(sys, Coords{0, 0, 0, 0, 1}) ? 1 : 0;
    return n;
}

template <typename F>
CountRecord timed(std::uint32_t p, Variety v, F&& body) {
    const auto start = std::chrono::steady_clock::now();
    CountRecord rec;
    rec.p = p;
    rec.variety = v;
    rec.count = body();
    rec.elapsed = std::chrono::steady_clock::now() - start;
    rec.method = CountMethod::computed;
    return rec;
}

void require_countable(const PrimeContext& ctx) {
    if (ctx.p() >= kCountPrimeBound)
        throw InvalidPrime(fmt::format("p = {} exceeds the counting bound 2^16", ctx.p()));
}

}  // namespace

std::string_view variety_name(Variety v) {
    switch (v) {
        case Variety::G: return "G";
        case Variety::F: return "F";
        case Variety::E_union: return "E";
        case Variety::E1: return "E1";
        case Variety::E2: return "E2";
    }
    return "?";
}

std::optional<Variety> parse_variety(std::string_view s) {
    std::string up(s);
    for (auto& ch : up) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    for (Variety v : {Variety::G, Variety::F, Variety::E_union, Variety::E1, Variety::E2})
        if (up == variety_name(v)) return v;
    return std::nullopt;
}

std::uint64_t projective_size(std::uint32_t p) {
    const std::uint64_t q = p;
    return (((q + 1) * q + 1) * q + 1) * q + 1;
}

unsigned default_threads() { return std::max(1u, std::thread::hardware_concurrency()); }

std::uint64_t count_common_zeros(const FormSystem& system, const PrimeContext& ctx, unsigned threads) {
    require_countable(ctx);
    if (system.forms.empty()) throw std::invalid_argument("count_common_zeros: empty form system");
    if (system.degree < 0 || system.degree > kMaxDegree)
        throw std::invalid_argument(fmt::format("count_common_zeros: degree {} out of range", system.degree));

    // Degree 0 (constants) steps like degree 1 with a zero difference.
    const LineCounter line = line_counter(std::max(system.degree, 1));
    const std::uint32_t p = ctx.p();
    const unsigned workers = std::clamp(threads, 1u, p);

    std::vector<std::uint64_t> partial(workers, 0);
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            const std::uint32_t lo = static_cast<std::uint32_t>(std::uint64_t{p} * w / workers);
            const std::uint32_t hi = static_cast<std::uint32_t>(std::uint64_t{p} * (w + 1) / workers);
            pool.emplace_back([&, w, lo, hi] {
                std::uint64_t n = count_leading_slab(system, ctx, line, lo, hi);
                if (w == workers - 1) n += count_lower_strata(system, ctx, line);
                partial[w] = n;
            });
        }
    }
    std::uint64_t total = 0;
    for (auto n : partial) total += n;
    return total;
}

CountRecord count_hypersurface(const FormEvaluator& form, int degree, Variety tag, const PrimeContext& ctx,
                               unsigned threads) {
    return timed(ctx.p(), tag, [&] { return count_common_zeros(FormSystem{degree, {form}}, ctx, threads); });
}

CountRecord count_G(const PrimeContext& ctx, unsigned threads) {
    return count_hypersurface([&ctx](const Coords& z) { return eval_G(z, ctx); }, 5, Variety::G, ctx, threads);
}

CountRecord count_F(const PrimeContext& ctx, unsigned threads) {
    return count_hypersurface([&ctx](const Coords& x) { return eval_F(x, ctx); }, 5, Variety::F, ctx, threads);
}

CountRecord count_E_single(const PrimeContext& ctx, Branch branch, unsigned threads) {
    require_countable(ctx);
    const Residue unit = branch == Branch::E1 ? ctx.i() : ctx.neg(ctx.i());
    FormSystem sys{2, {}};
    for (int k = 0; k < 5; ++k) {
        sys.forms.emplace_back([&ctx, unit, k](const Coords& z) {
            const Residue s =
                ctx.add(ctx.mul(z[(k + 1) % 5], z[(k + 4) % 5]), ctx.mul(z[(k + 2) % 5], z[(k + 3) % 5]));
            return ctx.add(ctx.mul(unit, ctx.mul(z[k], z[k])), s);
        });
    }
    return timed(ctx.p(), branch == Branch::E1 ? Variety::E1 : Variety::E2,
                 [&] { return count_common_zeros(sys, ctx, threads); });
}

CountRecord count_E_union(const PrimeContext& ctx, unsigned threads) {
    require_countable(ctx);
    return timed(ctx.p(), Variety::E_union, [&]() -> std::uint64_t {
        // An F_p-point needs i in F_p: otherwise each quadric splits into
        // z_k^2 = 0 and s_k = 0 and forces z = 0.
        if (!ctx.has_i()) return 0;
        return count_E_single(ctx, Branch::E1, threads).count + count_E_single(ctx, Branch::E2, threads).count;
    });
}

CountRecord count_variety(Variety v, const PrimeContext& ctx, unsigned threads) {
    switch (v) {
        case Variety::G: return count_G(ctx, threads);
        case Variety::F: return count_F(ctx, threads);
        case Variety::E_union: return count_E_union(ctx, threads);
        case Variety::E1: return count_E_single(ctx, Branch::E1, threads);
        case Variety::E2: return count_E_single(ctx, Branch::E2, threads);
    }
    throw std::invalid_argument("unknown variety");
}

}  // namespace hm
