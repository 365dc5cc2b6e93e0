#include "knottunnel/bounds.hpp"

#include <stdexcept>

namespace knottunnel {

IterationResult additive_iteration(const SString& s, const Integer& seed_a,
                                   const Integer& seed_b) {
    if (seed_a < 1 || seed_b < 1) {
        throw std::invalid_argument("additive_iteration: seeds must be >= 1");
    }
    int m = first_regular_index(s); // throws on semisimple input
    CorridorGraph g = build_corridor(s);

    // value[i] holds value(tau_i) for m-2 <= i <= n. Both are tunnel
    // indices: m >= 2, and c_k never points above tau_{m-2} once k >= m.
    std::vector<Integer> value(static_cast<std::size_t>(g.n) + 1);
    value[m - 2] = seed_a;
    value[m - 1] = seed_b;
    for (int k = m; k <= g.n; ++k) {
        int carried = g.carried[static_cast<std::size_t>(k - 1)];
        value[k] = value[k - 1] + value[carried];
    }

    IterationResult r;
    r.m = m;
    r.seeds = {seed_a, seed_b};
    r.values.assign(value.begin() + (m - 2), value.end());
    r.final_value = value[g.n];
    return r;
}

Integer lower_bound(const SString& s, const Integer& c2, const Integer& c3) {
    return additive_iteration(s, c2, c3).final_value;
}

Integer upper_bound(const SString& s) {
    int m = first_regular_index(s);
    return additive_iteration(s, m, m + 1).final_value;
}

std::vector<Integer> cheapest_descent(const Integer& b2, const Integer& b3,
                                      int j_max) {
    if (j_max < 3) {
        throw std::invalid_argument("cheapest_descent: j_max must be >= 3");
    }
    if (b2 > b3) {
        throw std::invalid_argument("cheapest_descent: requires b2 <= b3");
    }
    std::vector<Integer> b;
    b.reserve(static_cast<std::size_t>(j_max) - 1);
    b.push_back(b2);
    b.push_back(b3);
    for (int j = 4; j <= j_max; ++j) {
        // b holds b_2...b_{j-1}; index of b_i is i - 2.
        if (j % 2 == 0) {
            b.push_back(b[j - 3] + b[j - 4]); // b_{2n} = b_{2n-1} + b_{2n-2}
        } else {
            b.push_back(b[j - 3] + b[j - 5]); // b_{2n+1} = b_{2n} + b_{2n-2}
        }
    }
    return b;
}

namespace {

Integer pell_recursion(int d, Integer a1, Integer a2) {
    if (d < 1) {
        throw std::domain_error("minimum bridge number: requires d >= 1");
    }
    if (d == 1) return a1;
    for (int i = 3; i <= d; ++i) {
        Integer next = 2 * a2 + a1;
        a1 = a2;
        a2 = next;
    }
    return a2;
}

} // namespace

Integer min_bridge_at_depth(int d) { return pell_recursion(d, 2, 4); }

Integer torus_min_bridge_at_depth(int d) { return pell_recursion(d, 2, 5); }

Integer semisimple_upper(int m) {
    if (m < 1) {
        throw std::domain_error("semisimple_upper: requires m >= 1");
    }
    return Integer(m) + 1;
}

Integer fibonacci_upper(int n, int m) {
    if (m < 2 || n <= m) {
        throw std::domain_error("fibonacci_upper: requires n > m >= 2");
    }
    return Integer(m) * fibonacci(n - m + 2) + fibonacci(n - m + 1);
}

Integer max_bridge(int n) {
    if (n < 1) {
        throw std::domain_error("max_bridge: requires n >= 1");
    }
    return fibonacci(n + 2);
}

} // namespace knottunnel
