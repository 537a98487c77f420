#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace qswap {

/// Particle statistics eta: +1 bosons (permanent), -1 fermions (determinant).
enum class Statistics { Boson = +1, Fermion = -1 };

inline int eta(Statistics s) { return static_cast<int>(s); }

/// Ordered list of spatial nodes. Node identity is the index (rank) into this
/// list; ranks define the canonical ordering of localized kets.
class Network {
  public:
    explicit Network(std::vector<std::string> nodes) : nodes_(std::move(nodes)) {}

    std::size_t size() const { return nodes_.size(); }
    const std::string& name(int rank) const { return nodes_.at(rank); }
    const std::vector<std::string>& nodes() const { return nodes_; }

    int rank(const std::string& name) const {
        for (std::size_t i = 0; i < nodes_.size(); ++i) {
            if (nodes_[i] == name) return static_cast<int>(i);
        }
        throw std::invalid_argument("Network: unknown node " + name);
    }

    /// A, M1..M_{N-1}, B: chain with shared intermediate nodes.
    static Network shared_chain(int pairs);
    /// A, C1, D1, ..., C_{N-1}, D_{N-1}, B: all-separated swap layout.
    static Network separated(int pairs);

  private:
    std::vector<std::string> nodes_;
};

}  // namespace qswap
