#ifndef HM_NODE_ATLAS_HPP
#define HM_NODE_ATLAS_HPP

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "hm/fp_arith.hpp"
#include "hm/varieties.hpp"

namespace hm {

enum class NodeClass { sigma, tau, regular };

/// Square class of the local quadratic form at the node: 1, 5 or -12+16i.
enum class RulingDet { one, five, gauss };

std::string_view node_class_name(NodeClass c);

/// Position in the Heisenberg orbit: (sigma^shift tau^{3 power}, sigma^shift tau^power)
/// applied to the class representative; `sign` picks +-i for regular nodes.
struct OrbitIndex {
    int shift = 0;
    int sign = +1;
    int power = 0;
};

struct NodeRecord {
    NodeClass node_class;
    OrbitIndex orbit;
    RulingDet ruling_det_class;
    bool defined = false;
    /// Present iff defined.
    std::optional<std::pair<ProjPoint5, ProjPoint5>> coords;
    /// Present iff defined.
    std::optional<bool> ruling_rational;
};

/// Thrown when an operation needs coordinates of a node not defined over F_p.
class UndefinedNode : public Unavailable {
public:
    using Unavailable::Unavailable;
};

/// The 60 nodes of X: 5 sigma, 5 tau, 50 regular, in that order.
///
/// Sigma nodes are (e_k, e_k). Tau nodes are the (tau^3, tau)-orbit of
/// ((1:1:1:1:1), (1:1:1:1:1)); all but the power-0 member need epsilon.
/// Regular nodes are the orbit of ((0:1:-1:-1:1), (0:1:+-i:-+i:-1)); they
/// need i, and those with power != 0 also need epsilon.
std::vector<NodeRecord> enumerate_nodes(const PrimeContext& ctx);

/// Whether both rulings of the exceptional quadric are defined over F_p.
/// Throws UndefinedNode, and std::logic_error if -12+16i turns out to be a
/// non-square while i is in F_p.
bool ruling_rational(const NodeRecord& rec, const PrimeContext& ctx);

/// Points added by blowing up the node: p^2 + 2p with rational rulings, else p^2.
std::int64_t blowup_correction(const NodeRecord& rec, const PrimeContext& ctx);

/// on_X(x, z) and rank [L(z) | M(x)] <= 4. Throws UndefinedNode.
bool verify_node_singular(const NodeRecord& rec, const PrimeContext& ctx);

struct NodeInventory {
    int sigma_defined = 0;
    int tau_defined = 0;
    int regular_defined = 0;
    int sigma_rational = 0;
    int tau_rational = 0;
    int regular_rational = 0;
    std::int64_t correction_total = 0;

    int defined_total() const { return sigma_defined + tau_defined + regular_defined; }
    int rational_total() const { return sigma_rational + tau_rational + regular_rational; }
};

NodeInventory summarize_nodes(const std::vector<NodeRecord>& nodes, const PrimeContext& ctx);

/// Defined-node count predicted by p mod 20 alone: 60, 10, 16 or 6.
int expected_defined_nodes(const PrimeContext& ctx);

}  // namespace hm

#endif  // HM_NODE_ATLAS_HPP
