#include "summarax/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "summarax/error.hpp"

namespace summarax {

namespace {

long long clipped_overlap(const NGramCounts &a, const NGramCounts &b) {
    long long overlap = 0;
    for (const auto &[gram, count] : a) {
        auto it = b.find(gram);
        if (it != b.end())
            overlap += std::min(count, it->second);
    }
    return overlap;
}

long long total_count(const NGramCounts &grams) {
    long long total = 0;
    for (const auto &[gram, count] : grams)
        total += count;
    return total;
}

} // namespace

double modified_ngram_precision(const std::vector<Token> &candidate,
                                const std::vector<Token> &reference, int n) {
    if (n < 1)
        throw Error(Errc::invalid_n, "n-gram order must be >= 1");
    if (candidate.size() < static_cast<std::size_t>(n))
        return 0.0;
    const NGramCounts cand = extract_ngrams(candidate, n);
    const NGramCounts ref = extract_ngrams(reference, n);
    const long long total = total_count(cand);
    if (total == 0)
        return 0.0;
    return static_cast<double>(clipped_overlap(cand, ref)) / static_cast<double>(total);
}

double geometric_average_precision(const std::vector<double> &precisions,
                                   const std::vector<double> &weights) {
    if (precisions.size() != weights.size())
        throw Error(Errc::length_mismatch, "precision and weight lists differ in length");
    double weight_sum = 0.0;
    for (double w : weights) {
        if (!(w > 0.0))
            throw Error(Errc::invalid_weights, "weights must be positive");
        weight_sum += w;
    }
    if (std::abs(weight_sum - 1.0) > 1e-9)
        throw Error(Errc::invalid_weights, "weights must sum to 1");

    double log_sum = 0.0;
    for (std::size_t i = 0; i < precisions.size(); ++i) {
        const double p = precisions[i];
        if (p < 0.0 || p > 1.0)
            throw Error(Errc::out_of_range, "precision outside [0, 1]");
        if (p == 0.0)
            return 0.0;
        log_sum += weights[i] * std::log(p);
    }
    return std::exp(log_sum);
}

double brevity_penalty(long long candidate_len, long long reference_len) {
    if (reference_len < 1)
        throw Error(Errc::invalid_reference_length, "reference length must be >= 1");
    if (candidate_len < 0)
        throw Error(Errc::out_of_range, "candidate length must be >= 0");
    if (candidate_len == 0)
        return 0.0;
    if (candidate_len > reference_len)
        return 1.0;
    return std::exp(1.0 - static_cast<double>(reference_len) / static_cast<double>(candidate_len));
}

BleuBreakdown bleu_score(const std::vector<Token> &candidate, const std::vector<Token> &reference,
                         int max_n, const BleuOptions &options) {
    if (max_n < 1)
        throw Error(Errc::invalid_n, "max_n must be >= 1");

    BleuBreakdown breakdown;
    breakdown.candidate_len = static_cast<long long>(candidate.size());
    breakdown.reference_len = static_cast<long long>(reference.size());

    if (options.weights.empty()) {
        breakdown.weights.assign(static_cast<std::size_t>(max_n),
                                 1.0 / static_cast<double>(max_n));
    } else {
        breakdown.weights = options.weights;
    }

    for (int n = 1; n <= max_n; ++n) {
        double p = modified_ngram_precision(candidate, reference, n);
        if (options.smoothing_epsilon > 0.0)
            p = std::max(p, options.smoothing_epsilon);
        breakdown.precisions.push_back(p);
    }

    breakdown.geo_avg = geometric_average_precision(breakdown.precisions, breakdown.weights);
    breakdown.brevity_penalty = brevity_penalty(breakdown.candidate_len, breakdown.reference_len);
    breakdown.score = breakdown.brevity_penalty * breakdown.geo_avg;
    return breakdown;
}

RougeScore rouge_n(const std::vector<Token> &model, const std::vector<Token> &reference, int n) {
    if (n < 1)
        throw Error(Errc::invalid_n, "n-gram order must be >= 1");

    const NGramCounts model_grams = extract_ngrams(model, n);
    const NGramCounts ref_grams = extract_ngrams(reference, n);
    const long long overlap = clipped_overlap(model_grams, ref_grams);
    const long long model_total = total_count(model_grams);
    const long long ref_total = total_count(ref_grams);

    RougeScore score;
    score.n = n;
    score.recall = ref_total > 0 ? static_cast<double>(overlap) / static_cast<double>(ref_total) : 0.0;
    score.precision =
        model_total > 0 ? static_cast<double>(overlap) / static_cast<double>(model_total) : 0.0;
    score.f1 = f1_from(score.precision, score.recall);
    return score;
}

double f1_from(double precision, double recall) {
    if (precision < 0.0 || precision > 1.0 || recall < 0.0 || recall > 1.0)
        throw Error(Errc::out_of_range, "precision and recall must lie in [0, 1]");
    const double denom = precision + recall;
    if (denom == 0.0)
        return 0.0;
    return 2.0 * precision * recall / denom;
}

} // namespace summarax
