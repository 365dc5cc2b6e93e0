#include "knottunnel/giantsteps.hpp"

#include <stdexcept>

namespace knottunnel {

Mat2 transfer_matrix(Config c) {
    switch (c) {
    case Config::L1: return Mat2{1, 0, 1, 1};
    case Config::R1: return Mat2{1, 1, 0, 1};
    case Config::L2: return Mat2{0, 0, 1, 1};
    case Config::R2: return Mat2{1, 1, 0, 0};
    }
    throw std::logic_error("transfer_matrix: bad configuration");
}

std::string to_string(Config c) {
    switch (c) {
    case Config::L1: return "L1";
    case Config::R1: return "R1";
    case Config::L2: return "L2";
    case Config::R2: return "R2";
    }
    return "??";
}

namespace {

// The principal path alternates sides of the corridor as it descends; the
// blocks 10 and 100+ reverse its direction of travel, 11 and 110+ do not.
// A reversing block therefore toggles the configuration letter of the
// block itself, while a non-reversing block keeps the letter of its
// predecessor. The initial direction L and the orientation of the final
// vector are pinned by the worked '0011100011100' session (L1, R2, R1,
// final L2, count 4) and hold against the corridor oracle on all strings
// of length <= 14.
Config make_config(bool left, bool wide) {
    if (left) return wide ? Config::L2 : Config::L1;
    return wide ? Config::R2 : Config::R1;
}

} // namespace

BlockDecomposition decompose(const SString& s) {
    if (!s.contains_one()) {
        throw std::domain_error("decompose: s-string contains no 1");
    }
    BlockDecomposition d;
    const std::string& bits = s.bits;
    std::size_t i = bits.find('1');
    d.semisimple_prefix_length = i;

    bool left = true; // direction of travel entering the next block
    while (i < bits.size()) {
        if (i + 1 == bits.size()) {
            d.leftover_one = true;
            break;
        }
        std::size_t j = i + 2;
        while (j < bits.size() && bits[j] == '0') ++j;
        std::string block = bits.substr(i, j - i);
        bool reversing = block[1] == '0'; // 10 or 100+
        bool wide = block.size() > 2;     // 100+ or 110+
        if (reversing) left = !left;
        d.blocks.push_back(std::move(block));
        d.configs.push_back(make_config(left, wide));
        i = j;
    }

    if (d.leftover_one) {
        d.final_vector = {1, 1};
    } else {
        // The last parsed block is the final one; its configuration was
        // computed above but belongs to the final vector, not the product.
        d.final_config = d.configs.back();
        d.configs.pop_back();
        bool final_left = *d.final_config == Config::L1 ||
                          *d.final_config == Config::L2;
        d.final_vector = final_left ? std::pair{0, 1} : std::pair{1, 0};
    }
    return d;
}

GiantStepCount count_minimal_fast(const SString& s) {
    if (!s.contains_one()) {
        // Depth <= 1: a unique path of length 1 (or 0 for the trivial tunnel).
        return GiantStepCount{1, {}, mat2_identity()};
    }
    BlockDecomposition d = decompose(s);
    Mat2 product = mat2_identity();
    for (Config c : d.configs) {
        product = product * transfer_matrix(c);
    }
    auto [lambda, rho] = d.final_vector;
    Integer count = (product.a + product.c) * lambda +
                    (product.b + product.d) * rho;
    return GiantStepCount{std::move(count), std::move(d), std::move(product)};
}

} // namespace knottunnel
