#pragma once
// Answer extraction, the practical verifier V, and ground-truth corruption
// for the label-noise experiment. verify() also maintains the ideal-verifier
// bookkeeping (truly_correct) that makes noise-hit accounting possible.

#include "pace/core.hpp"

namespace pace {

// Label-noise setup: a seeded fraction of prompts has its ground truth
// replaced by the literal string "0" (the small-digit trap).
struct NoiseSpec {
    double corruption_fraction = 0.2;
    enum class Mode : uint8_t { ReplaceWithZero } mode = Mode::ReplaceWithZero;
    uint64_t seed = 0;

    bool operator==(const NoiseSpec&) const = default;
};

// Contents of the LAST balanced \boxed{...} in text, nested braces handled by
// depth counting. Absent when there is no marker or the final marker is
// unbalanced. Absence is a value, not an error.
std::optional<std::string> extract_answer(std::string_view text);

// passed  := canonical(extracted) == canonical(prompt.ground_truth).
// truly_correct := latent flag when present; else comparison against
// original_truth on corrupted prompts; else equal to passed.
Verdict verify(const Trajectory& trajectory, const Prompt& prompt);

// Returns a copy of dataset with exactly round(fraction * size) prompts
// corrupted. Selection is a seeded permutation walk; prompts whose true
// answer is already "0" are skipped in favor of the next candidate. Ids,
// order, and text are preserved.
std::vector<Prompt> corrupt_labels(const std::vector<Prompt>& dataset, const NoiseSpec& spec);

}  // namespace pace
