#include "knottunnel/corridor.hpp"

#include <stdexcept>

namespace knottunnel {

SString parse_sstring(std::string_view text) {
    for (char c : text) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument(
                "parse_sstring: s-string may contain only '0' and '1'");
        }
    }
    return SString{std::string(text)};
}

CorridorGraph build_corridor(const SString& s) {
    CorridorGraph g;
    g.n = s.n();
    g.carried.reserve(g.n);
    g.carried.push_back(kPrimitive); // c_1
    for (int i = 2; i <= g.n; ++i) {
        char s_i = s.bits[static_cast<std::size_t>(i - 2)];
        g.carried.push_back(s_i == '0' ? g.carried.back() : i - 2);
    }
    return g;
}

DepthProfile depth_profile(const CorridorGraph& g) {
    DepthProfile p;
    p.depth.resize(static_cast<std::size_t>(g.n) + 1);
    p.counts.resize(static_cast<std::size_t>(g.n) + 1);

    // Depth and count of the primitive vertex itself.
    auto depth_of = [&](int v) { return v == kPrimitive ? 0 : p.depth[v]; };
    auto count_of = [&](int v) -> Integer {
        return v == kPrimitive ? Integer(1) : p.counts[v];
    };

    p.depth[0] = 1;
    p.counts[0] = 1;
    // Neighbors of tau_i are tau_{i-1} and c_i, both earlier in index order,
    // so a single pass computes the breadth-first distances.
    for (int i = 1; i <= g.n; ++i) {
        int u = i - 1;
        int v = g.carried[static_cast<std::size_t>(i - 1)];
        int du = depth_of(u);
        int dv = depth_of(v);
        int d = 1 + (du < dv ? du : dv);
        Integer c = 0;
        if (du == d - 1) c += count_of(u);
        if (dv == d - 1) c += count_of(v);
        p.depth[i] = d;
        p.counts[i] = c;
    }
    return p;
}

int depth(const SString& s) {
    DepthProfile p = depth_profile(build_corridor(s));
    return p.depth.back();
}

Integer count_minimal_oracle(const SString& s) {
    DepthProfile p = depth_profile(build_corridor(s));
    return p.counts.back();
}

int first_regular_index(const SString& s) {
    auto pos = s.bits.find('1');
    if (pos == std::string::npos) {
        throw std::domain_error(
            "first_regular_index: tunnel is not regular (no 1 in s-string)");
    }
    return static_cast<int>(pos) + 2;
}

std::string to_string(TunnelClass c) {
    switch (c) {
    case TunnelClass::Trivial: return "trivial";
    case TunnelClass::Simple: return "simple";
    case TunnelClass::Semisimple: return "semisimple";
    case TunnelClass::Regular: return "regular";
    }
    return "unknown";
}

TunnelClass classify(const SString& s, int cabling_count) {
    if (cabling_count < 0) {
        throw std::invalid_argument("classify: cabling_count must be >= 0");
    }
    if (!s.empty() && cabling_count != s.n() + 1) {
        throw std::invalid_argument(
            "classify: cabling_count inconsistent with s-string length");
    }
    if (cabling_count == 0) return TunnelClass::Trivial;
    if (cabling_count == 1) return TunnelClass::Simple;
    return s.contains_one() ? TunnelClass::Regular : TunnelClass::Semisimple;
}

} // namespace knottunnel
