#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string_view>

#include "reconf/graph.hpp"
#include "reconf/rules.hpp"

namespace reconf {

/// Largest graph the brute-force searches accept: 20 unless the
/// RECONF_ORACLE_CAP environment variable says otherwise (at most 64).
int oracle_cap();

/// Exhaustive search of the configuration graph. For TJ and TS, sets of
/// different sizes are never reachable. Throws OracleCapExceeded above the
/// cap and InputError for dependent sets or TAR sets below the threshold.
bool oracle_reach(const Rule& rule, const Graph& g, const VertexSet& s, const VertexSet& t);

/// Largest set reachable from `s` under TAR(k), by exhaustive search.
int oracle_lambda(const Graph& g, const VertexSet& s, int k);

struct GenProfile {
  int n = 12;
  int width = 4;
  Rule::Kind rule = Rule::Kind::tar;
};

/// Parses "n=<int>,width=<int>[,rule=tar|tj|ts]".
GenProfile parse_profile(std::string_view text);

struct Instance {
  Graph graph;
  Rule rule;
  VertexSet start;
  VertexSet target;
};

/// Replaces vertex i of `quotient` (by index) with `parts[i]`. The result has
/// IDs 1..n, numbered part by part.
Graph substitute(const Graph& quotient, std::span<const Graph> parts);

/// Random graph on n vertices of modular width at most `width`: a prime
/// quotient of that order with random smaller graphs substituted in.
Graph random_bounded_width(std::mt19937_64& rng, int n, int width);

/// Deterministic random instance. TJ and TS instances get equal-size sets;
/// TAR instances get a threshold no larger than either set.
Instance gen_instance(std::uint64_t seed, const GenProfile& profile);

}  // namespace reconf
