#include "hm/node_atlas.hpp"

#include <fmt/format.h>

namespace hm {

namespace {

const NodeRecord& require_defined(const NodeRecord& rec) {
    if (!rec.defined || !rec.coords)
        throw UndefinedNode(fmt::format("{} node (shift {}, sign {}, power {}) is not defined over this field",
                                        node_class_name(rec.node_class), rec.orbit.shift, rec.orbit.sign,
                                        rec.orbit.power));
    return rec;
}

NodeRecord make_node(NodeClass cls, OrbitIndex orbit, RulingDet det) {
    NodeRecord r{cls, orbit, det, false, std::nullopt, std::nullopt};
    return r;
}

void place(NodeRecord& rec, const Coords& x, const Coords& z, const PrimeContext& ctx) {
    rec.defined = true;
    rec.coords = std::make_pair(ProjPoint5::canonical(x, ctx), ProjPoint5::canonical(z, ctx));
    rec.ruling_rational = ruling_rational(rec, ctx);
}

}  // namespace

std::string_view node_class_name(NodeClass c) {
    switch (c) {
        case NodeClass::sigma: return "sigma";
        case NodeClass::tau: return "tau";
        case NodeClass::regular: return "regular";
    }
    return "?";
}

std::vector<NodeRecord> enumerate_nodes(const PrimeContext& ctx) {
    std::vector<NodeRecord> nodes;
    nodes.reserve(60);

    for (int k = 0; k < 5; ++k) {
        NodeRecord rec = make_node(NodeClass::sigma, {k, +1, 0}, RulingDet::one);
        Coords e{};
        e[k] = 1;
        place(rec, e, e, ctx);
        nodes.push_back(std::move(rec));
    }

    const Coords ones{1, 1, 1, 1, 1};
    for (int j = 0; j < 5; ++j) {
        NodeRecord rec = make_node(NodeClass::tau, {0, +1, j}, RulingDet::five);
        if (j == 0 || ctx.has_eps()) place(rec, tau_power(ones, 3 * j, ctx), tau_power(ones, j, ctx), ctx);
        nodes.push_back(std::move(rec));
    }

    const Residue m1 = ctx.p() - 1;
    const Coords x_base{0, 1, m1, m1, 1};
    for (int sign : {+1, -1}) {
        for (int k = 0; k < 5; ++k) {
            for (int j = 0; j < 5; ++j) {
                NodeRecord rec = make_node(NodeClass::regular, {k, sign, j}, RulingDet::gauss);
                if (ctx.has_i() && (j == 0 || ctx.has_eps())) {
                    const Residue si = sign > 0 ? ctx.i() : ctx.neg(ctx.i());
                    const Coords z_base{0, 1, si, ctx.neg(si), m1};
                    place(rec, shift(tau_power(x_base, 3 * j, ctx), k), shift(tau_power(z_base, j, ctx), k), ctx);
                }
                nodes.push_back(std::move(rec));
            }
        }
    }
    return nodes;
}

bool ruling_rational(const NodeRecord& rec, const PrimeContext& ctx) {
    if (!rec.defined) require_defined(rec);
    switch (rec.ruling_det_class) {
        case RulingDet::one: return true;
        case RulingDet::five: return legendre(5, ctx.p()) == 1;
        case RulingDet::gauss: {
            const Residue d = ctx.add(ctx.reduce(-12), ctx.mul(16, ctx.i()));
            if (legendre(d, ctx.p()) != 1)
                throw std::logic_error(fmt::format("-12+16i is not a square in F_{} although i is", ctx.p()));
            return true;
        }
    }
    return false;
}

std::int64_t blowup_correction(const NodeRecord& rec, const PrimeContext& ctx) {
    const std::int64_t p = ctx.p();
    return ruling_rational(rec, ctx) ? p * p + 2 * p : p * p;
}

bool verify_node_singular(const NodeRecord& rec, const PrimeContext& ctx) {
    require_defined(rec);
    const Coords& x = rec.coords->first.coords();
    const Coords& z = rec.coords->second.coords();
    if (!on_X(x, z, ctx)) return false;
    return matrix_rank(FpMatrix::hconcat(build_L(z, ctx), build_M(x, ctx))) <= 4;
}

NodeInventory summarize_nodes(const std::vector<NodeRecord>& nodes, const PrimeContext& ctx) {
    NodeInventory inv;
    for (const auto& rec : nodes) {
        if (!rec.defined) continue;
        const bool rational = rec.ruling_rational.value_or(false);
        switch (rec.node_class) {
            case NodeClass::sigma:
                ++inv.sigma_defined;
                inv.sigma_rational += rational;
                break;
            case NodeClass::tau:
                ++inv.tau_defined;
                inv.tau_rational += rational;
                break;
            case NodeClass::regular:
                ++inv.regular_defined;
                inv.regular_rational += rational;
                break;
        }
        inv.correction_total += blowup_correction(rec, ctx);
    }
    return inv;
}

int expected_defined_nodes(const PrimeContext& ctx) {
    switch (ctx.p_mod_20()) {
        case 1: return 60;
        case 11: return 10;
        case 9:
        case 13:
        case 17: return 16;
        default: return 6;
    }
}

}  // namespace hm
