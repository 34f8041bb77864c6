#pragma once

#include <set>

#include "mcg/graph.hpp"

namespace mcg::feasibility {

enum class Parity { even, odd };

struct ParitySpectrum {
    std::set<Parity> parities;  // values of |M . x| mod 2 over perfect matchings M
    bool complete;              // false iff the enumeration was truncated
};

struct EquivalenceClasses {
    std::vector<EdgeSet> classes;     // partition of E(g), by smallest edge id
    std::vector<EdgeSet> nontrivial;  // the classes with >= 2 edges
};

ParitySpectrum parity_spectrum(const Graph& g, const EdgeSet& x,
                               std::optional<long> limit = std::nullopt);

// True iff the spectrum is {even, odd}. Requires a matching-covered host; an
// incomplete spectrum raises LimitError rather than guessing.
bool is_feasible(const Graph& g, const EdgeSet& x, std::optional<long> limit = std::nullopt);

// No perfect matching contains exactly one of e, f. Decided by polynomial
// matchability queries; the enumeration cross-check lives in the test suite.
bool edges_equivalent(const Graph& g, EdgeId e, EdgeId f);

EquivalenceClasses equivalent_classes(const Graph& g);

}  // namespace mcg::feasibility
