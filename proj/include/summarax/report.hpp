#ifndef SUMMARAX_REPORT_HPP_
#define SUMMARAX_REPORT_HPP_

#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "summarax/corpus.hpp"
#include "summarax/metrics.hpp"
#include "summarax/summarize.hpp"

namespace summarax {

struct EvalConfig {
    SummarizeOptions summarize;
    int rouge_n = 1;
    int bleu_max_n = 4;
    double bleu_smoothing_epsilon = 0.0; // 0 disables smoothing
    // Metric tokens are plain normalized tokens; optionally stopword-filter
    // them too (off by default: metrics compare texts as written).
    bool metric_stopword_filter = false;
    std::string stopword_source = "builtin";
    int workers = 1; // execution knob only; never serialized
};

struct PerDocumentScores {
    RougeScore rouge;
    BleuBreakdown bleu;            // at bleu_max_n
    double bleu4_composite = 0.0;  // full BLEU score at N = 4
};

struct AlgorithmAggregate {
    Algorithm algorithm = Algorithm::textrank;
    double mean_recall = 0.0;
    double mean_precision = 0.0;
    double mean_f1 = 0.0;
    // Macro-averaged individual n-gram precisions p_1..p_4 (0 beyond bleu_max_n).
    std::array<double, 4> mean_bleu{};
    double bleu4_composite = 0.0;
    std::map<DocumentId, PerDocumentScores> per_document;
};

struct EvalReport {
    EvalConfig config;
    std::vector<Algorithm> algorithms; // canonical order, duplicates removed
    std::vector<DocumentId> document_ids;
    std::vector<AlgorithmAggregate> aggregates; // one per algorithms[i]
    std::vector<Algorithm> ranking;             // mean_f1 desc, name asc on ties
    std::vector<std::string> warnings;          // summarizer fallbacks, with context
};

// Runs every (document, algorithm) cell, scores each summary against the
// paired reference, and macro-averages. Requires a fully paired corpus and a
// non-empty algorithm set. Failures abort with document/algorithm context.
// Results are identical for any worker count.
EvalReport evaluate_corpus(const Corpus &corpus, const std::set<Algorithm> &algorithms,
                           const EvalConfig &config, const StopwordList &stops);

// format is "json" or "csv"; anything else throws UnsupportedFormat. All
// reals use fixed 6-decimal formatting so identical reports serialize to
// identical bytes.
std::string emit_report(const EvalReport &report, const std::string &format);

} // namespace summarax

#endif // SUMMARAX_REPORT_HPP_
