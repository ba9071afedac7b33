#pragma once

#include "permhard/circuits/boolean_circuit.hpp"

#include <fstream>
#include <random>
#include <sstream>
#include <string>

namespace permhard::testing {

inline BooleanCircuit random_circuit(std::mt19937_64& rng, std::size_t n, std::size_t gates) {
    std::vector<NandGate> g;
    for (std::size_t k = 0; k < gates; ++k) {
        std::uniform_int_distribution<std::size_t> pick(0, n + k - 1);
        g.push_back({pick(rng), pick(rng)});
    }
    return BooleanCircuit(n, std::move(g), n + gates - 1);
}

inline std::string netlist_path(const std::string& name) { return std::string(PERMHARD_NETLIST_DIR) + "/" + name + ".net"; }

inline BooleanCircuit load(const std::string& name) {
    std::ifstream in(netlist_path(name));
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_netlist(ss.str());
}

inline const std::vector<std::pair<std::string, long>>& corpus() {
    static const std::vector<std::pair<std::string, long>> c = {
        {"const0", 2}, {"const1", -2}, {"ident", 0},  {"not", 0},     {"nand", -2},  {"and", 2},  {"or", -2},
        {"xor", 0},    {"implies", -2}, {"and3", 6}, {"nand3", -6}, {"mux", 0},    {"const0_n2", 4},
    };
    return c;
}

}  // namespace permhard::testing
