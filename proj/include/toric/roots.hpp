#pragma once

#include <utility>
#include <vector>

#include "toric/fan.hpp"

namespace toric {

struct DemazureRoot {
    IntVec m;       // character in M, length d
    int eta_index;  // the unique ray with <m, v> = -1
    bool semisimple;

    bool operator==(const DemazureRoot& rhs) const {
        return m == rhs.m && eta_index == rhs.eta_index;
    }
};

struct RootSet {
    std::vector<DemazureRoot> roots; // grouped by eta_index, lex within groups
};

// All characters pairing to -1 on exactly one ray and nonnegatively on the
// rest.  Throws UnboundedError when a root polytope is unbounded, which
// happens exactly when the fan is not complete.
RootSet demazure_roots(const Fan& fan);

// Roots whose negative is also a root, in root-set order.
std::vector<DemazureRoot> semisimple_roots(const RootSet& rs);

// All cone pairs (sigma1, sigma2) of the fan with m nonpositive on sigma2
// and sigma1 = sigma2 intersect m-perp a facet of sigma2.
std::vector<std::pair<Cone, Cone>> hm_connected_pairs(const Fan& fan,
                                                      const DemazureRoot& root);

} // namespace toric
