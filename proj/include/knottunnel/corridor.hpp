#pragma once

#include "knottunnel/exactnum.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace knottunnel {

/// The binary parameter string s_2...s_n of a tunnel, leftmost character
/// first. The empty string stands for any depth-1 tunnel.
struct SString {
    std::string bits;

    std::size_t length() const { return bits.size(); }
    /// Subscript of the last tunnel, so bits.size() == n - 1.
    int n() const { return static_cast<int>(bits.size()) + 1; }
    bool contains_one() const { return bits.find('1') != std::string::npos; }
    bool empty() const { return bits.empty(); }

    bool operator==(const SString& other) const = default;
};

/// Validate a line over {0,1}. Throws std::invalid_argument otherwise.
SString parse_sstring(std::string_view text);

/// Carried-disk entry: kPrimitive for the primitive orbit, otherwise the
/// index i of the tunnel vertex tau_i.
inline constexpr int kPrimitive = -1;

/// Quotient 1-skeleton of the corridor. Vertex set: one primitive vertex
/// plus tunnel vertices tau_0...tau_n. The neighbors of tau_0 are
/// {primitive}; the neighbors of tau_i for i >= 1 are {tau_{i-1}, c_i}.
struct CorridorGraph {
    int n;
    /// c_1...c_n; carried[i-1] holds c_i.
    std::vector<int> carried;
};

/// c_1 is primitive; c_i stays put when s_i = 0 and jumps to tau_{i-2}
/// when s_i = 1.
CorridorGraph build_corridor(const SString& s);

/// Distances and shortest-path counts from the primitive vertex,
/// index i holds the value at tau_i.
struct DepthProfile {
    std::vector<int> depth;      // d_0...d_n
    std::vector<Integer> counts; // N_0...N_n
};

DepthProfile depth_profile(const CorridorGraph& g);

/// Simplicial distance from tau_n to the primitive vertex.
int depth(const SString& s);

/// Number of minimal giant-step sequences producing tau_n, counted by
/// breadth-first traversal of the corridor. This is the normative oracle
/// for the transfer-matrix algorithm.
Integer count_minimal_oracle(const SString& s);

/// Subscript of the first s_i = 1 (indexing starts at 2). Throws
/// std::domain_error when no 1 is present.
int first_regular_index(const SString& s);

enum class TunnelClass { Trivial, Simple, Semisimple, Regular };

std::string to_string(TunnelClass c);

/// Classification by cabling count and s-string. For nonempty s the cabling
/// count must equal n + 1; inconsistent arguments throw
/// std::invalid_argument.
TunnelClass classify(const SString& s, int cabling_count);

} // namespace knottunnel
