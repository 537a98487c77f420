#include "qswap/network.hpp"

namespace qswap {

Network Network::shared_chain(int pairs) {
    if (pairs < 2) throw std::invalid_argument("Network: need at least 2 pairs");
    std::vector<std::string> nodes;
    nodes.push_back("A");
    for (int i = 1; i < pairs; ++i) nodes.push_back("M" + std::to_string(i));
    nodes.push_back("B");
    return Network(std::move(nodes));
}

Network Network::separated(int pairs) {
    if (pairs < 2) throw std::invalid_argument("Network: need at least 2 pairs");
    std::vector<std::string> nodes;
    nodes.push_back("A");
    for (int i = 1; i < pairs; ++i) {
        nodes.push_back("C" + std::to_string(i));
        nodes.push_back("D" + std::to_string(i));
    }
    nodes.push_back("B");
    return Network(std::move(nodes));
}

}  // namespace qswap
