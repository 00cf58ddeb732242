#include "core/weyl.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace exalg {

namespace {

std::vector<std::vector<int>> cartan_from_edges(int rank,
                                                const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<int>> c(rank, std::vector<int>(rank, 0));
    for (int i = 0; i < rank; ++i) c[i][i] = 2;
    for (auto [a, b] : edges) {
        c[a - 1][b - 1] = -1;
        c[b - 1][a - 1] = -1;
    }
    return c;
}

}  // namespace

RootSystemData RootSystemData::make(RootSystemType type, int rank) {
    std::vector<std::pair<int, int>> edges;
    switch (type) {
        case RootSystemType::A:
            if (rank < 1) throw std::invalid_argument("A_n needs n >= 1");
            for (int i = 1; i < rank; ++i) edges.emplace_back(i, i + 1);
            break;
        case RootSystemType::D:
            if (rank < 3) throw std::invalid_argument("D_n needs n >= 3");
            for (int i = 1; i + 2 <= rank - 1; ++i) edges.emplace_back(i, i + 1);
            edges.emplace_back(rank - 2, rank - 1);
            edges.emplace_back(rank - 2, rank);
            break;
        case RootSystemType::E6:
            rank = 6;
            edges = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 4}};
            break;
        case RootSystemType::E7:
            rank = 7;
            edges = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {2, 4}};
            break;
    }
    return RootSystemData{type, rank, cartan_from_edges(rank, edges)};
}

RootSystemData RootSystemData::parse(const std::string& name) {
    if (name.size() < 2) throw std::invalid_argument("root system name: " + name);
    char family = name[0];
    int rank = std::stoi(name.substr(1));
    switch (family) {
        case 'A':
        case 'a': return make(RootSystemType::A, rank);
        case 'D':
        case 'd': return make(RootSystemType::D, rank);
        case 'E':
        case 'e':
            if (rank == 6) return make(RootSystemType::E6, 6);
            if (rank == 7) return make(RootSystemType::E7, 7);
            throw std::invalid_argument("only E6 and E7 are built in");
        default: throw std::invalid_argument("root system name: " + name);
    }
}

std::string RootSystemData::name() const {
    switch (type) {
        case RootSystemType::A: return "A" + std::to_string(rank);
        case RootSystemType::D: return "D" + std::to_string(rank);
        case RootSystemType::E6: return "E6";
        case RootSystemType::E7: return "E7";
    }
    return "?";
}

WeightOrbit weight_orbit(const RootSystemData& system, int node) {
    if (node < 1 || node > system.rank) throw std::out_of_range("weight_orbit: bad node");
    std::vector<int> seed(system.rank, 0);
    seed[node - 1] = 1;

    WeightOrbit orbit;
    std::map<std::vector<int>, std::size_t> index;
    orbit.weights.push_back(seed);
    index.emplace(seed, 0);
    // reflections: s_i(w)_k = w_k - w_i * cartan[k][i] (simply laced)
    for (std::size_t head = 0; head < orbit.weights.size(); ++head) {
        std::vector<int> w = orbit.weights[head];
        for (int i = 0; i < system.rank; ++i) {
            if (w[i] == 0) continue;  // fixed by s_i
            std::vector<int> img = w;
            for (int k = 0; k < system.rank; ++k) img[k] -= w[i] * system.cartan[k][i];
            if (index.emplace(img, orbit.weights.size()).second) orbit.weights.push_back(img);
        }
    }
    orbit.generator_action.assign(system.rank, std::vector<std::size_t>(orbit.size()));
    for (std::size_t k = 0; k < orbit.size(); ++k)
        for (int i = 0; i < system.rank; ++i) {
            const auto& w = orbit.weights[k];
            if (w[i] == 0) {
                orbit.generator_action[i][k] = k;
                continue;
            }
            std::vector<int> img = w;
            for (int c = 0; c < system.rank; ++c) img[c] -= w[i] * system.cartan[c][i];
            orbit.generator_action[i][k] = index.at(img);
        }
    return orbit;
}

PairOrbitCount parabolic_pair_orbit_count(const RootSystemData& system, int node) {
    WeightOrbit orbit = weight_orbit(system, node);
    std::vector<std::size_t> parent(orbit.size());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int i = 0; i < system.rank; ++i) {
        if (i == node - 1) continue;  // P_theta convention: s_node is omitted
        for (std::size_t k = 0; k < orbit.size(); ++k) {
            std::size_t a = find(k), b = find(orbit.generator_action[i][k]);
            if (a != b) parent[a] = b;
        }
    }
    std::map<std::size_t, std::size_t> sizes;
    for (std::size_t k = 0; k < orbit.size(); ++k) ++sizes[find(k)];
    PairOrbitCount out;
    out.orbits = sizes.size();
    for (const auto& [root, size] : sizes) out.orbit_sizes.push_back(size);
    std::sort(out.orbit_sizes.rbegin(), out.orbit_sizes.rend());
    return out;
}

bool braid_relations_hold(const RootSystemData& system, const WeightOrbit& orbit) {
    auto apply = [&](int i, std::size_t k) { return orbit.generator_action[i][k]; };
    for (int i = 0; i < system.rank; ++i)
        for (int j = i + 1; j < system.rank; ++j) {
            int m = system.cartan[i][j] == 0 ? 2 : 3;
            for (std::size_t k = 0; k < orbit.size(); ++k) {
                std::size_t x = k;
                for (int rep = 0; rep < m; ++rep) x = apply(j, apply(i, x));
                if (x != k) return false;
            }
        }
    for (int i = 0; i < system.rank; ++i)
        for (std::size_t k = 0; k < orbit.size(); ++k)
            if (apply(i, apply(i, k)) != k) return false;
    return true;
}

std::string weyl_pairs_json(const RootSystemData& system, int node) {
    auto orbit = weight_orbit(system, node);
    auto pairs = parabolic_pair_orbit_count(system, node);
    nlohmann::ordered_json j;
    j["type"] = system.name();
    j["node"] = node;
    j["numbering"] = "bourbaki";
    j["orbit_size"] = orbit.size();
    j["double_cosets"] = pairs.orbits;
    j["orbit_partition"] = pairs.orbit_sizes;
    return j.dump();
}

}  // namespace exalg
