#pragma once

#include "fphom/diagrams.hpp"

namespace fphom {

/// Limit of a diagram restricted to a list of nodes (objects, repetitions allowed) and
/// constraints F(morphism)(x_to) = x_from.
struct LimitSystem {
    struct Edge {
        std::size_t from;  // node index
        std::size_t to;    // node index
        std::size_t morphism;
    };
    const Diagram* diagram;
    std::vector<std::size_t> nodes;
    std::vector<Edge> edges;

    std::size_t total_dim(int t) const;
    Matrix constraint_matrix(int t) const;
    /// Columns span the limit inside the product of node values in degree t.
    Matrix basis(int t) const;
    int dim(int t) const;
};

LimitSystem whole_diagram(const Diagram& d);

}  // namespace fphom
