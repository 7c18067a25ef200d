#include "xxzsim/sampling.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace xxzsim {

namespace {

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Xoshiro256ss::Xoshiro256ss(RngSeed seed) {
    std::uint64_t sm = seed;
    for (auto& word : s_) word = splitmix64(sm);
}

std::uint64_t Xoshiro256ss::next() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

double Xoshiro256ss::next_unit() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

RngSeed mix_seed(RngSeed base, std::uint64_t index) {
    std::uint64_t state = base ^ ((index + 1) * 0x9e3779b97f4a7c15ULL);
    return splitmix64(state);
}

ShotCounts run_shots(const Circuit& c, std::uint64_t shots, RngSeed seed) {
    if (c.measured.empty()) throw std::invalid_argument("run_shots: circuit measures no qubits");
    if (shots < 1) throw std::invalid_argument("run_shots: shots must be >= 1");

    const std::vector<double> probs = measured_distribution(c);
    std::vector<double> cumulative(probs.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        acc += probs[i];
        cumulative[i] = acc;
    }

    Xoshiro256ss rng(seed);
    std::vector<std::uint64_t> tally(probs.size(), 0);
    for (std::uint64_t s = 0; s < shots; ++s) {
        const double u = rng.next_unit() * acc;
        std::size_t outcome = probs.size() - 1;
        for (std::size_t i = 0; i < cumulative.size(); ++i) {
            if (u < cumulative[i]) {
                outcome = i;
                break;
            }
        }
        ++tally[outcome];
    }

    ShotCounts out;
    out.shots = shots;
    for (std::size_t o = 0; o < tally.size(); ++o) {
        if (tally[o] == 0) continue;
        std::string key(c.measured.size(), '0');
        for (std::size_t j = 0; j < c.measured.size(); ++j)
            if (o & (std::size_t{1} << j)) key[j] = '1';
        out.counts.emplace(std::move(key), tally[o]);
    }
    return out;
}

Estimate mean_pm1(const ShotCounts& counts, std::size_t bit_position) {
    std::uint64_t n0 = 0;
    std::uint64_t n1 = 0;
    for (const auto& [key, n] : counts.counts) {
        if (bit_position >= key.size())
            throw std::invalid_argument("mean_pm1: bit position out of range");
        (key[bit_position] == '0' ? n0 : n1) += n;
    }
    Estimate e;
    e.shots = counts.shots;
    e.value = (static_cast<double>(n0) - static_cast<double>(n1)) / static_cast<double>(counts.shots);
    e.std_error = std::sqrt(std::max(0.0, 1.0 - e.value * e.value) / static_cast<double>(counts.shots));
    return e;
}

Estimate parity(const ShotCounts& counts) {
    double signed_sum = 0.0;
    for (const auto& [key, n] : counts.counts) {
        if (key.size() != 2) throw std::invalid_argument("parity: expected two measured qubits");
        const int ones = (key[0] == '1') + (key[1] == '1');
        signed_sum += (ones % 2 == 0 ? 1.0 : -1.0) * static_cast<double>(n);
    }
    Estimate e;
    e.shots = counts.shots;
    e.value = signed_sum / static_cast<double>(counts.shots);
    e.std_error = std::sqrt(std::max(0.0, 1.0 - e.value * e.value) / static_cast<double>(counts.shots));
    return e;
}

Estimate prob00(const ShotCounts& counts) {
    std::uint64_t n00 = 0;
    for (const auto& [key, n] : counts.counts) {
        if (key.size() != 2) throw std::invalid_argument("prob00: expected two measured qubits");
        if (key == "00") n00 += n;
    }
    Estimate e;
    e.shots = counts.shots;
    e.value = static_cast<double>(n00) / static_cast<double>(counts.shots);
    e.std_error = std::sqrt(std::max(0.0, e.value * (1.0 - e.value)) / static_cast<double>(counts.shots));
    return e;
}

std::string to_json(const ShotCounts& counts) {
    std::string out = "{\"shots\": " + std::to_string(counts.shots) + ", \"counts\": {";
    bool first = true;
    for (const auto& [key, n] : counts.counts) {
        if (!first) out += ", ";
        first = false;
        out += '"' + key + "\": " + std::to_string(n);
    }
    out += "}}";
    return out;
}

}  // namespace xxzsim
