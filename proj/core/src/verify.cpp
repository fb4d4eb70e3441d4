#include "pace/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace pace {

namespace {
constexpr std::string_view kBoxedMarker = "\\boxed{";
}

std::optional<std::string> extract_answer(std::string_view text) {
    // Last marker wins: models routinely emit several boxed values and the
    // final one is the answer.
    const size_t open = text.rfind(kBoxedMarker);
    if (open == std::string_view::npos) return std::nullopt;

    size_t i = open + kBoxedMarker.size();
    int depth = 1;
    const size_t begin = i;
    for (; i < text.size(); ++i) {
        const char c = text[i];
        if (c == '{') {
            ++depth;
        } else if (c == '}') {
            if (--depth == 0) return std::string(text.substr(begin, i - begin));
        }
    }
    return std::nullopt;  // unbalanced final marker
}

Verdict verify(const Trajectory& trajectory, const Prompt& prompt) {
    Verdict v;
    v.passed = trajectory.extracted_answer.has_value() &&
               answers_match(*trajectory.extracted_answer, prompt.ground_truth);
    if (trajectory.latent_correct.has_value()) {
        v.truly_correct = trajectory.latent_correct;
    } else if (prompt.corrupted) {
        v.truly_correct = trajectory.extracted_answer.has_value() &&
                          answers_match(*trajectory.extracted_answer, prompt.original_truth);
    } else {
        v.truly_correct = v.passed;
    }
    return v;
}

std::vector<Prompt> corrupt_labels(const std::vector<Prompt>& dataset, const NoiseSpec& spec) {
    if (dataset.empty()) throw ArgumentError("corrupt_labels: dataset is empty");
    if (spec.corruption_fraction < 0.0 || spec.corruption_fraction > 1.0)
        throw ArgumentError("corrupt_labels: corruption_fraction must lie in [0,1]");

    const auto target = static_cast<size_t>(
        std::llround(spec.corruption_fraction * static_cast<double>(dataset.size())));
    std::vector<Prompt> out = dataset;
    if (target == 0) return out;

    const std::string zero = "0";
    size_t eligible = 0;
    for (const auto& p : out) {
        if (!answers_match(p.ground_truth, zero)) ++eligible;
    }
    if (target > eligible) {
        throw ConfigError("corrupt_labels: requested " + std::to_string(target) +
                          " corruptions but only " + std::to_string(eligible) +
                          " prompts have a non-zero answer");
    }

    // Seeded Fisher-Yates permutation of indices; walk it and corrupt the
    // first `target` eligible prompts.
    auto rng = new_seeded_rng(spec.seed, "corrupt_labels");
    std::vector<size_t> order(out.size());
    std::iota(order.begin(), order.end(), size_t{0});
    for (size_t i = order.size() - 1; i > 0; --i) {
        std::swap(order[i], order[rng.uniform_index(i + 1)]);
    }

    size_t done = 0;
    for (size_t idx : order) {
        if (done == target) break;
        Prompt& p = out[idx];
        if (answers_match(p.ground_truth, zero)) continue;
        p.original_truth = p.ground_truth;
        p.ground_truth = zero;
        p.corrupted = true;
        ++done;
    }
    return out;
}

}  // namespace pace
