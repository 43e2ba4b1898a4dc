#ifndef MAXKCUT_CHORDAL_HPP
#define MAXKCUT_CHORDAL_HPP

#include <utility>
#include <vector>

#include "maxkcut/graph.hpp"

namespace maxkcut {

/// Result of triangulating a graph: the chords added, the elimination order
/// that certifies chordality of the extension, and the maximal cliques of
/// the extended graph (each sorted, the list sorted lexicographically).
struct ChordalInfo {
    std::vector<std::pair<int, int>> fill_edges;
    std::vector<int> peo;
    std::vector<std::vector<int>> maximal_cliques;
};

/// Greedy minimum-degree elimination; ties broken by smallest vertex id so
/// results are reproducible.
ChordalInfo chordal_extend(const Graph& g);

struct ChordalCheck {
    bool chordal;
    std::vector<int> peo;           // maximum-cardinality-search order when chordal
    std::vector<int> witness_cycle; // a chordless cycle of length >= 4 otherwise
};

/// Maximum cardinality search followed by the perfect-elimination test.
ChordalCheck verify_chordal(const Graph& g);

/// Classic PEO sweep: candidate clique of v is {v} plus its later neighbors;
/// inclusion-maximal candidates survive. Throws InvalidPeo when the order is
/// not a perfect elimination ordering of g.
std::vector<std::vector<int>> maximal_cliques(const Graph& g, const std::vector<int>& peo);

/// g plus the fill edges (fill edges get zero weight).
Graph extended_graph(const Graph& g, const ChordalInfo& info);

} // namespace maxkcut

#endif
