#pragma once

#include "knottunnel/corridor.hpp"
#include "knottunnel/exactnum.hpp"

#include <utility>
#include <vector>

namespace knottunnel {

/// Result of the additive principal-path iteration. `values` holds the full
/// sequence in subscript order tau_{m-2}...tau_n, starting with the two
/// seeds.
struct IterationResult {
    int m;
    std::pair<Integer, Integer> seeds;
    std::vector<Integer> values;
    Integer final_value;
};

/// Seed tau_{m-2} and tau_{m-1}, where m is the first depth-2 subscript,
/// then value(tau_k) = value(tau_{k-1}) + value(c_k) for k = m...n.
/// Throws std::domain_error on semisimple input, std::invalid_argument on
/// seeds < 1.
IterationResult additive_iteration(const SString& s, const Integer& seed_a,
                                   const Integer& seed_b);

/// Lower bound for br(K_{tau_n}) given the bridge numbers c2, c3 of the
/// knots at tau_{m-2} and tau_{m-1}.
Integer lower_bound(const SString& s, const Integer& c2, const Integer& c3);

/// Upper bound for br(K_{tau_n}): the iteration seeded with (m, m+1).
Integer upper_bound(const SString& s);

/// The cheapest-descent recursion b_{2n} = b_{2n-1} + b_{2n-2},
/// b_{2n+1} = b_{2n} + b_{2n-2}. Returns b_2...b_{j_max}.
/// Requires j_max >= 3 and b2 <= b3.
std::vector<Integer> cheapest_descent(const Integer& b2, const Integer& b3,
                                      int j_max);

/// Minimum bridge number over all knots with a depth-d tunnel:
/// a_1 = 2, a_2 = 4, a_d = 2a_{d-1} + a_{d-2}.
Integer min_bridge_at_depth(int d);

/// Same recursion started at a_1 = 2, a_2 = 5: the minimum over torus knots.
Integer torus_min_bridge_at_depth(int d);

/// br(K_tau) <= m + 1 for a semisimple tunnel produced by m cablings.
Integer semisimple_upper(int m);

/// br(K_{tau_n}) <= m*F_{n-m+2} + F_{n-m+1} for a regular tunnel produced
/// by n cablings of which the first m give semisimple tunnels.
Integer fibonacci_upper(int n, int m);

/// Maximum bridge number over tunnels produced by n cablings: F_{n+2}.
Integer max_bridge(int n);

} // namespace knottunnel
