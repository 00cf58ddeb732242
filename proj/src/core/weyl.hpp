#ifndef EXALG_WEYL_HPP
#define EXALG_WEYL_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace exalg {

enum class RootSystemType { A, D, E6, E7 };

/// Simply-laced root system with Bourbaki node numbering (1-based labels).
struct RootSystemData {
    RootSystemType type;
    int rank;
    std::vector<std::vector<int>> cartan;

    static RootSystemData make(RootSystemType type, int rank);
    /// Parses "A2", "D6", "E6", "E7".
    static RootSystemData parse(const std::string& name);
    std::string name() const;
};

/// Weyl group orbit of a fundamental weight, in Dynkin-label coordinates,
/// closed under the simple reflections s_i(w) = w - w_i * alpha_i.
struct WeightOrbit {
    std::vector<std::vector<int>> weights;
    /// generator_action[i][k]: index of s_{i+1}(weights[k]).
    std::vector<std::vector<std::size_t>> generator_action;
    std::size_t size() const { return weights.size(); }
};

/// Full W-orbit of the fundamental weight at the given node (1-based).
WeightOrbit weight_orbit(const RootSystemData& system, int node);

/// Orbit count of W_P acting on the weight orbit, where P is the parabolic
/// of type {node}: W_P is generated by all simple reflections except s_node.
/// Equals |W_P \ W / W_P|, the number of G-orbits on pairs in (G/P)^2.
struct PairOrbitCount {
    std::size_t orbits;
    std::vector<std::size_t> orbit_sizes;  // descending
};
PairOrbitCount parabolic_pair_orbit_count(const RootSystemData& system, int node);

/// Verifies the braid relations of all generator pairs as permutations of
/// the orbit (m = 2 or 3 for simply-laced systems).
bool braid_relations_hold(const RootSystemData& system, const WeightOrbit& orbit);

std::string weyl_pairs_json(const RootSystemData& system, int node);

}  // namespace exalg

#endif
