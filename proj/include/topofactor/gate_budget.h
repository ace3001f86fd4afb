#pragma once

#include <cstdint>

#include "topofactor/config.h"

namespace topofactor {

// Workload size for modular exponentiation of an L-bit modulus.
struct GateBudget {
    std::int64_t key_length = 0;  // L
    std::int64_t n_total = 0;
    std::int64_t n_not = 0;
    std::int64_t n_cnot = 0;
    std::int64_t n_ccnot = 0;
    double eps_gate = 0.0;        // per-gate error budget
    std::int64_t demand_a4 = 0;   // magic states consumed by the full circuit
    std::int64_t demand_a8 = 0;
};

// L must be in [1, kMaxKeyLength]; counts stay exactly representable.
inline constexpr std::int64_t kMaxKeyLength = 65536;

GateBudget gate_counts(std::int64_t key_length, const ModelConfig& cfg);

struct FibWidth {
    std::int64_t qubits = 0;
    std::int64_t anyons = 0;
};

// 2L+3 qubits, three Fibonacci anyons per qubit.
FibWidth circuit_width_fib(std::int64_t key_length);

// Four Ising anyons per qubit.
std::int64_t ising_anyons(std::int64_t qubits);

}  // namespace topofactor
