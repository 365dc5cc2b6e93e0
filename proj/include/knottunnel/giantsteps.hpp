#pragma once

#include "knottunnel/corridor.hpp"
#include "knottunnel/exactnum.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace knottunnel {

/// The four corridor configurations between consecutive nabla-edges.
enum class Config { L1, R1, L2, R2 };

/// Transfer matrix of a configuration:
///   L1 = [[1,0],[1,1]]   R1 = [[1,1],[0,1]]
///   L2 = [[0,0],[1,1]]   R2 = [[1,1],[0,0]]
Mat2 transfer_matrix(Config c);

std::string to_string(Config c);

/// Block structure of an s-string after stripping the leading-zero
/// semisimple prefix. Every block has one of the forms 10, 11, 100+, 110+;
/// a single trailing 1 may be left over. All blocks except the last carry
/// an intermediate configuration; the last block (or the leftover 1)
/// determines the final vector (lambda_n, rho_n).
struct BlockDecomposition {
    std::size_t semisimple_prefix_length = 0;
    std::vector<std::string> blocks;
    std::vector<Config> configs;        // one per non-final block
    std::optional<Config> final_config; // absent when a 1 is left over
    bool leftover_one = false;
    std::pair<int, int> final_vector{0, 0}; // (lambda_n, rho_n)
};

/// Greedy left-to-right block parse. Throws std::domain_error when the
/// string contains no 1.
BlockDecomposition decompose(const SString& s);

struct GiantStepCount {
    Integer count;
    BlockDecomposition decomposition; // empty for depth <= 1 inputs
    Mat2 product;                     // product of the intermediate matrices
};

/// Number of minimal giant-step sequences by the transfer-matrix method:
/// [1 1] * M_2 ... M_n * (lambda_n, rho_n)^T, or 1 when depth <= 1.
/// Agrees with count_minimal_oracle on every input.
GiantStepCount count_minimal_fast(const SString& s);

} // namespace knottunnel
