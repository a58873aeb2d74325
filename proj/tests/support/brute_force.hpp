#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "reconf/graph.hpp"

namespace reconf::testing {

// Exhaustive checks for small graphs (vertex subsets as 64-bit masks over
// vertex indices). They share no code with the library algorithms.

bool brute_independent(const Graph& g, std::uint64_t set);
int brute_alpha(const Graph& g);
bool brute_is_module(const Graph& g, std::uint64_t m);
std::vector<std::uint64_t> brute_modules(const Graph& g);
/// Minimum k such that |V| <= k or V splits into at most k modules (at least
/// two) whose induced subgraphs have width at most k, recursively.
int brute_modular_width(const Graph& g);
/// Classes of the relation N(u)-v = N(v)-u, found by pairwise comparison.
int brute_twin_classes(const Graph& g);

std::uint64_t mask_of(const Graph& g, const VertexSet& s);

Graph random_gnp(std::mt19937_64& rng, int n, double p);
/// Independent set built by trying random vertices in random order.
VertexSet random_independent(std::mt19937_64& rng, const Graph& g, int attempts);

}  // namespace reconf::testing
