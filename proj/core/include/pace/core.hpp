#pragma once
// Shared domain types, error taxonomy, and the seeded-randomness contract.
//
// Every randomized operation in this library takes an RngStream produced by
// new_seeded_rng(seed, label). There is no ambient randomness anywhere: two
// runs with the same seed and labels replay bit-identically, regardless of
// thread scheduling, because each unit of work derives its own stream.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pace {

// ----------------------------- errors -----------------------------

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ArgumentError : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

// A caller violated a documented precondition (e.g. refined trajectory
// supplied for a non-BothFailed outcome, missing policy-table key).
struct ContractError : Error {
    using Error::Error;
};

// Unbound placeholder during prompt-template rendering; names the placeholder.
struct TemplateError : Error {
    explicit TemplateError(const std::string& placeholder)
        : Error("unbound template placeholder: " + placeholder), placeholder_name(placeholder) {}
    std::string placeholder_name;
};

// Transport-level failure talking to a generation endpoint.
struct BackendError : Error {
    BackendError(const std::string& what, int attempts_made)
        : Error(what), attempts(attempts_made) {}
    int attempts = 0;
};

// Endpoint responded but the body did not match the expected wire shape.
struct ProtocolError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

// ----------------------------- rng -----------------------------

// Deterministic random stream (xoshiro256** seeded through splitmix64).
// The generator is defined arithmetically on uint64, so sequences are
// identical across platforms and standard-library implementations; none of
// the std::<distribution> adapters are used for that reason.
class RngStream {
public:
    RngStream(uint64_t seed, std::string_view stream_label);

    uint64_t next_u64();

    // Uniform on [0, 1) with 53-bit resolution.
    double next_double();

    bool bernoulli(double p);

    // Uniform on [0, bound), bound > 0; unbiased via rejection.
    uint64_t uniform_index(uint64_t bound);

    const std::string& label() const { return label_; }

private:
    uint64_t state_[4];
    std::string label_;
};

// Factory for the seeded-randomness contract: identical (seed, stream_label)
// pairs yield identical draw sequences; distinct labels decorrelate streams.
RngStream new_seeded_rng(uint64_t seed, std::string_view stream_label);

// ----------------------------- answers -----------------------------

// Canonical form used whenever two answer strings are compared: trims outer
// whitespace and '$' math delimiters, collapses internal whitespace runs to
// a single space. No symbolic normalization is attempted.
std::string canonical_answer(std::string_view raw);

bool answers_match(std::string_view a, std::string_view b);

// ----------------------------- domain types -----------------------------

// One task: problem statement plus its canonical answer. When a label-noise
// experiment corrupts the ground truth, the original answer is retained so
// the ideal verifier stays computable.
struct Prompt {
    std::string id;
    std::string text;
    std::string ground_truth;
    bool corrupted = false;
    std::string original_truth;  // meaningful only when corrupted

    // The answer that is actually correct, independent of label corruption.
    const std::string& true_answer() const { return corrupted ? original_truth : ground_truth; }

    bool operator==(const Prompt&) const = default;
};

enum class TrajectorySource : uint8_t {
    Exploration,
    Refinement,
};

// One generated solution. latent_* flags exist only on trajectories from the
// synthetic policy simulator; they record ground truth the pipeline itself is
// never allowed to read (only the verifier bookkeeping and metrics may).
struct Trajectory {
    std::string prompt_id;
    std::string text;
    std::optional<std::string> extracted_answer;  // absent iff no boxed marker in text
    std::optional<double> sum_logprob;            // natural-log units, sequence sum
    TrajectorySource source = TrajectorySource::Exploration;
    std::optional<bool> latent_correct;
    std::optional<bool> latent_hallucinated;  // implies latent_correct == false

    bool operator==(const Trajectory&) const = default;
};

// Verifier output. passed is the practical verifier V; truly_correct is the
// ideal verifier R where it is knowable (simulation, or corrupted labels with
// the original answer retained).
struct Verdict {
    bool passed = false;
    std::optional<bool> truly_correct;

    bool operator==(const Verdict&) const = default;
};

enum class PairKind : uint8_t {
    Natural,    // exploration success: one pass, one fail
    Synthetic,  // exploration failure: gated refinement vs. hard negative
    BoN,        // best-of-N baseline pair
};

struct PreferencePair {
    std::string prompt_id;
    Trajectory winner;
    Trajectory loser;
    PairKind kind = PairKind::Natural;
    int iteration = 0;

    bool operator==(const PreferencePair&) const = default;
};

// Run-level knobs. Defaults: exploration N=2 at temperature 1.0, refinement
// budget K=1, beta 0.1, T=4 iterations, 40000 prompts sampled per iteration,
// generations capped at 4000 tokens, seed 42.
struct RunConfig {
    int exploration_budget = 2;
    int refinement_budget = 1;
    double temperature = 1.0;
    int max_generation_length = 4000;
    double beta = 0.1;
    int iterations = 4;
    int prompts_per_iteration = 40000;
    uint64_t seed = 42;
    int max_inflight_requests = 8;
    double max_error_fraction = 0.01;  // iteration aborts above this

    void validate() const;

    bool operator==(const RunConfig&) const = default;
};

const char* to_string(TrajectorySource s);
const char* to_string(PairKind k);
TrajectorySource trajectory_source_from_string(std::string_view s);
PairKind pair_kind_from_string(std::string_view s);

}  // namespace pace
