#ifndef SUMMARAX_METRICS_HPP_
#define SUMMARAX_METRICS_HPP_

#include <vector>

#include "summarax/textpipe.hpp"

namespace summarax {

struct BleuBreakdown {
    std::vector<double> precisions; // p_1..p_N as used in the geometric average
    std::vector<double> weights;    // w_1..w_N, positive, summing to 1
    double geo_avg = 0.0;
    long long candidate_len = 0;
    long long reference_len = 0;
    double brevity_penalty = 0.0;
    double score = 0.0; // brevity_penalty * geo_avg
};

struct RougeScore {
    int n = 1;
    double recall = 0.0;
    double precision = 0.0;
    double f1 = 0.0;
};

struct BleuOptions {
    std::vector<double> weights; // empty -> uniform 1/max_n
    // When > 0, floors each p_n at this value before the geometric average
    // (short-text smoothing). Off by default.
    double smoothing_epsilon = 0.0;
};

// Clipped n-gram precision: sum_g min(count_cand(g), count_ref(g)) divided by
// the candidate n-gram total. Candidates shorter than n score 0.
double modified_ngram_precision(const std::vector<Token> &candidate,
                                const std::vector<Token> &reference, int n);

// exp(sum w_n * ln p_n); 0 whenever some p_n is 0.
double geometric_average_precision(const std::vector<double> &precisions,
                                   const std::vector<double> &weights);

// 1 for c > r, exp(1 - r/c) for 0 < c <= r, 0 for c == 0.
double brevity_penalty(long long candidate_len, long long reference_len);

BleuBreakdown bleu_score(const std::vector<Token> &candidate, const std::vector<Token> &reference,
                         int max_n, const BleuOptions &options = {});

RougeScore rouge_n(const std::vector<Token> &model, const std::vector<Token> &reference, int n);

// Harmonic mean of precision and recall; 0 when both are 0.
double f1_from(double precision, double recall);

} // namespace summarax

#endif // SUMMARAX_METRICS_HPP_
