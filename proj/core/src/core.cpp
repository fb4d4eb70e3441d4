#include "pace/core.hpp"

#include <cctype>

namespace pace {

namespace {

constexpr uint64_t kFnvOffset = 0xcbf29ce484222325ull;
constexpr uint64_t kFnvPrime = 0x100000001b3ull;

uint64_t fnv1a64(std::string_view s) {
    uint64_t h = kFnvOffset;
    for (unsigned char c : s) {
        h ^= c;
        h *= kFnvPrime;
    }
    return h;
}

uint64_t splitmix64(uint64_t& x) {
    x += 0x9e3779b97f4a7c15ull;
    uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

RngStream::RngStream(uint64_t seed, std::string_view stream_label) : label_(stream_label) {
    // Label folded into the seed sequence so distinct labels produce
    // decorrelated streams from the same root seed.
    uint64_t sm = seed ^ rotl(fnv1a64(stream_label), 17);
    for (auto& s : state_) {
        s = splitmix64(sm);
    }
    // xoshiro's all-zero state is invalid; splitmix cannot emit four zeros
    // from any input, but keep the guard explicit.
    if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) {
        state_[0] = 0x2545f4914f6cdd1dull;
    }
}

uint64_t RngStream::next_u64() {
    // xoshiro256**
    const uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
}

double RngStream::next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

bool RngStream::bernoulli(double p) {
    if (p <= 0.0) return false;
    if (p >= 1.0) return true;
    return next_double() < p;
}

uint64_t RngStream::uniform_index(uint64_t bound) {
    if (bound == 0) throw ArgumentError("uniform_index: bound must be positive");
    const uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        const uint64_t r = next_u64();
        if (r >= threshold) return r % bound;
    }
}

RngStream new_seeded_rng(uint64_t seed, std::string_view stream_label) {
    return RngStream(seed, stream_label);
}

std::string canonical_answer(std::string_view raw) {
    auto is_trim = [](char c) {
        return std::isspace(static_cast<unsigned char>(c)) != 0 || c == '$';
    };
    size_t b = 0, e = raw.size();
    while (b < e && is_trim(raw[b])) ++b;
    while (e > b && is_trim(raw[e - 1])) --e;

    std::string out;
    out.reserve(e - b);
    bool in_ws = false;
    for (size_t i = b; i < e; ++i) {
        const char c = raw[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            in_ws = true;
            continue;
        }
        if (in_ws && !out.empty()) out.push_back(' ');
        in_ws = false;
        out.push_back(c);
    }
    return out;
}

bool answers_match(std::string_view a, std::string_view b) {
    return canonical_answer(a) == canonical_answer(b);
}

void RunConfig::validate() const {
    if (exploration_budget < 1) throw ConfigError("exploration_budget must be positive");
    if (refinement_budget < 1) throw ConfigError("refinement_budget must be positive");
    if (temperature < 0.0) throw ConfigError("temperature must be non-negative");
    if (max_generation_length < 1) throw ConfigError("max_generation_length must be positive");
    if (beta <= 0.0) throw ConfigError("beta must be positive");
    if (iterations < 1) throw ConfigError("iterations must be positive");
    if (prompts_per_iteration < 1) throw ConfigError("prompts_per_iteration must be positive");
    if (max_inflight_requests < 1) throw ConfigError("max_inflight_requests must be positive");
    if (max_error_fraction < 0.0 || max_error_fraction > 1.0)
        throw ConfigError("max_error_fraction must lie in [0,1]");
}

const char* to_string(TrajectorySource s) {
    return s == TrajectorySource::Exploration ? "exploration" : "refinement";
}

const char* to_string(PairKind k) {
    switch (k) {
        case PairKind::Natural: return "natural";
        case PairKind::Synthetic: return "synthetic";
        case PairKind::BoN: return "bon";
    }
    return "natural";
}

TrajectorySource trajectory_source_from_string(std::string_view s) {
    if (s == "exploration") return TrajectorySource::Exploration;
    if (s == "refinement") return TrajectorySource::Refinement;
    throw ArgumentError("unknown trajectory source: " + std::string(s));
}

PairKind pair_kind_from_string(std::string_view s) {
    if (s == "natural") return PairKind::Natural;
    if (s == "synthetic") return PairKind::Synthetic;
    if (s == "bon") return PairKind::BoN;
    throw ArgumentError("unknown pair kind: " + std::string(s));
}

}  // namespace pace
