#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "xxzsim/protocols.hpp"

namespace xxzsim {

using RngSeed = std::uint64_t;

/// xoshiro256** (Blackman & Vigna), seeded through splitmix64. Fully
/// specified integer arithmetic, so streams are identical on every platform.
class Xoshiro256ss {
public:
    explicit Xoshiro256ss(RngSeed seed);

    std::uint64_t next();

    /// Uniform double in [0, 1) from the top 53 bits.
    double next_unit();

private:
    std::uint64_t s_[4];
};

std::uint64_t splitmix64(std::uint64_t& state);

/// Derived seed for an indexed subtask (sweep point, per-axis circuit).
/// mix_seed(base, i) = splitmix64 of base xor (i+1)*golden-ratio-constant.
RngSeed mix_seed(RngSeed base, std::uint64_t index);

/// Measurement record of one protocol run: outcome bitstrings (one char per
/// measured qubit, first measured qubit leftmost) to occurrence counts.
/// Only observed outcomes are stored; counts sum to `shots`.
struct ShotCounts {
    std::uint64_t shots = 0;
    std::map<std::string, std::uint64_t> counts;
};

struct Estimate {
    double value = 0.0;
    double std_error = 0.0;
    std::uint64_t shots = 0;
};

/// Simulate the circuit exactly, then draw `shots` independent samples from
/// the marginal distribution over the measured qubits. Deterministic for a
/// given (circuit, shots, seed).
ShotCounts run_shots(const Circuit& c, std::uint64_t shots, RngSeed seed);

/// (N0 - N1)/shots over the indicated character of the outcome strings,
/// with std_error = sqrt((1 - value^2)/shots) for a +-1 valued observable.
Estimate mean_pm1(const ShotCounts& counts, std::size_t bit_position);

/// (N00 - N01 - N10 + N11)/shots for two measured qubits.
Estimate parity(const ShotCounts& counts);

/// N00/shots with binomial std_error sqrt(p(1-p)/shots).
Estimate prob00(const ShotCounts& counts);

/// {"shots": n, "counts": {"00": k, ...}} with keys in sorted order.
std::string to_json(const ShotCounts& counts);

}  // namespace xxzsim
