#include "summarax/report.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <sstream>
#include <thread>

#include "summarax/error.hpp"

namespace summarax {

namespace {

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::string sci6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6e", v);
    return buf;
}

std::string json_escape(const std::string &s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (const char c : s) {
        switch (c) {
        case '"':
            out += "\\\"";
            break;
        case '\\':
            out += "\\\\";
            break;
        case '\n':
            out += "\\n";
            break;
        case '\r':
            out += "\\r";
            break;
        case '\t':
            out += "\\t";
            break;
        default:
            if (static_cast<unsigned char>(c) < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof buf, "\\u%04x", c);
                out += buf;
            } else {
                out += c;
            }
        }
    }
    return out;
}

struct Task {
    std::size_t doc_index;
    std::size_t algo_index;
};

struct TaskResult {
    PerDocumentScores scores;
    std::vector<std::string> warnings;
    std::string error; // empty on success
};

std::vector<Token> metric_tokens(const std::string &text, const EvalConfig &config,
                                 const StopwordList &stops) {
    std::vector<Token> tokens = tokenize(text);
    if (config.metric_stopword_filter)
        tokens = remove_stopwords(tokens, stops);
    return tokens;
}

TaskResult run_task(const Document &doc, const std::vector<TokenizedSentence> &sentences,
                    const std::string &reference, Algorithm algorithm, const EvalConfig &config,
                    const StopwordList &stops) {
    TaskResult result;
    try {
        const Summary summary = summarize(algorithm, sentences, stops, config.summarize);
        for (const std::string &warning : summary.warnings)
            result.warnings.push_back(std::string("document '") + doc.id + "', algorithm '" +
                                      algorithm_name(algorithm) + "': " + warning);
        const std::vector<Token> candidate = metric_tokens(summary.text, config, stops);
        const std::vector<Token> ref = metric_tokens(reference, config, stops);

        result.scores.rouge = rouge_n(candidate, ref, config.rouge_n);
        BleuOptions bleu_options;
        bleu_options.smoothing_epsilon = config.bleu_smoothing_epsilon;
        result.scores.bleu = bleu_score(candidate, ref, config.bleu_max_n, bleu_options);
        if (config.bleu_max_n == 4)
            result.scores.bleu4_composite = result.scores.bleu.score;
        else
            result.scores.bleu4_composite = bleu_score(candidate, ref, 4, bleu_options).score;
    } catch (const std::exception &e) {
        result.error = std::string("document '") + doc.id + "', algorithm '" +
                       algorithm_name(algorithm) + "': " + e.what();
    }
    return result;
}

} // namespace

EvalReport evaluate_corpus(const Corpus &corpus, const std::set<Algorithm> &algorithms,
                           const EvalConfig &config, const StopwordList &stops) {
    require_paired(corpus);
    if (algorithms.empty())
        throw Error(Errc::invalid_argument, "at least one algorithm must be selected");
    if (config.rouge_n < 1)
        throw Error(Errc::invalid_n, "rouge_n must be >= 1");
    if (config.bleu_max_n < 1)
        throw Error(Errc::invalid_n, "bleu_max_n must be >= 1");

    EvalReport report;
    report.config = config;
    for (Algorithm a : all_algorithms()) {
        if (algorithms.count(a))
            report.algorithms.push_back(a);
    }

    // Work through an id-sorted view so results do not depend on the
    // caller's document order.
    std::vector<const Document *> docs;
    docs.reserve(corpus.documents.size());
    for (const Document &doc : corpus.documents)
        docs.push_back(&doc);
    std::sort(docs.begin(), docs.end(),
              [](const Document *a, const Document *b) { return a->id < b->id; });
    for (const Document *doc : docs)
        report.document_ids.push_back(doc->id);

    // Sentences are shared read-only across all per-algorithm tasks.
    std::vector<std::vector<TokenizedSentence>> segmented;
    segmented.reserve(docs.size());
    for (const Document *doc : docs)
        segmented.push_back(segment_sentences(doc->text));

    std::vector<Task> tasks;
    for (std::size_t d = 0; d < docs.size(); ++d)
        for (std::size_t a = 0; a < report.algorithms.size(); ++a)
            tasks.push_back({d, a});

    std::vector<TaskResult> results(tasks.size());
    const int workers = std::clamp(config.workers, 1, 64);

    auto worker_loop = [&](std::atomic<std::size_t> &next) {
        for (;;) {
            const std::size_t t = next.fetch_add(1);
            if (t >= tasks.size())
                return;
            const Task &task = tasks[t];
            const Document &doc = *docs[task.doc_index];
            results[t] = run_task(doc, segmented[task.doc_index], corpus.references.at(doc.id),
                                  report.algorithms[task.algo_index], config, stops);
        }
    };

    if (workers <= 1 || tasks.size() <= 1) {
        std::atomic<std::size_t> next{0};
        worker_loop(next);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] { worker_loop(next); });
        for (std::thread &t : pool)
            t.join();
    }

    // Errors and warnings surface in task order so messages are
    // scheduling-independent.
    for (std::size_t t = 0; t < tasks.size(); ++t) {
        if (!results[t].error.empty())
            throw Error(Errc::invalid_argument, "evaluation failed for " + results[t].error);
        for (const std::string &warning : results[t].warnings)
            report.warnings.push_back(warning);
    }

    const auto doc_count = static_cast<double>(docs.size());
    for (std::size_t a = 0; a < report.algorithms.size(); ++a) {
        AlgorithmAggregate agg;
        agg.algorithm = report.algorithms[a];
        for (std::size_t d = 0; d < docs.size(); ++d) {
            const TaskResult &r = results[d * report.algorithms.size() + a];
            agg.mean_recall += r.scores.rouge.recall;
            agg.mean_precision += r.scores.rouge.precision;
            agg.mean_f1 += r.scores.rouge.f1;
            for (std::size_t n = 0; n < 4 && n < r.scores.bleu.precisions.size(); ++n)
                agg.mean_bleu[n] += r.scores.bleu.precisions[n];
            agg.bleu4_composite += r.scores.bleu4_composite;
            agg.per_document.emplace(docs[d]->id, r.scores);
        }
        agg.mean_recall /= doc_count;
        agg.mean_precision /= doc_count;
        agg.mean_f1 /= doc_count;
        for (double &v : agg.mean_bleu)
            v /= doc_count;
        agg.bleu4_composite /= doc_count;
        report.aggregates.push_back(std::move(agg));
    }

    report.ranking = report.algorithms;
    std::stable_sort(report.ranking.begin(), report.ranking.end(), [&](Algorithm x, Algorithm y) {
        double fx = 0.0, fy = 0.0;
        for (const AlgorithmAggregate &agg : report.aggregates) {
            if (agg.algorithm == x)
                fx = agg.mean_f1;
            if (agg.algorithm == y)
                fy = agg.mean_f1;
        }
        if (fx != fy)
            return fx > fy;
        return std::string(algorithm_name(x)) < algorithm_name(y);
    });
    return report;
}

namespace {

void emit_bleu_json(std::ostringstream &out, const BleuBreakdown &bleu, const std::string &indent) {
    out << "{\n";
    out << indent << "  \"precisions\": [";
    for (std::size_t i = 0; i < bleu.precisions.size(); ++i)
        out << (i ? ", " : "") << fixed6(bleu.precisions[i]);
    out << "],\n";
    out << indent << "  \"weights\": [";
    for (std::size_t i = 0; i < bleu.weights.size(); ++i)
        out << (i ? ", " : "") << fixed6(bleu.weights[i]);
    out << "],\n";
    out << indent << "  \"geo_avg\": " << fixed6(bleu.geo_avg) << ",\n";
    out << indent << "  \"candidate_len\": " << bleu.candidate_len << ",\n";
    out << indent << "  \"reference_len\": " << bleu.reference_len << ",\n";
    out << indent << "  \"brevity_penalty\": " << fixed6(bleu.brevity_penalty) << ",\n";
    out << indent << "  \"score\": " << fixed6(bleu.score) << "\n";
    out << indent << "}";
}

std::string emit_json(const EvalReport &report) {
    std::ostringstream out;
    const EvalConfig &cfg = report.config;

    out << "{\n";
    out << "  \"config\": {\n";
    out << "    \"algorithms\": [";
    for (std::size_t i = 0; i < report.algorithms.size(); ++i)
        out << (i ? ", " : "") << '"' << algorithm_name(report.algorithms[i]) << '"';
    out << "],\n";
    out << "    \"k\": " << cfg.summarize.k << ",\n";
    out << "    \"rouge_n\": " << cfg.rouge_n << ",\n";
    out << "    \"bleu_max_n\": " << cfg.bleu_max_n << ",\n";
    out << "    \"bleu_smoothing_epsilon\": " << sci6(cfg.bleu_smoothing_epsilon) << ",\n";
    out << "    \"averaging\": \"macro\",\n";
    out << "    \"bleu_reference\": \"paired_reference\",\n";
    out << "    \"metric_tokens\": \""
        << (cfg.metric_stopword_filter ? "normalized_stopword_filtered" : "normalized") << "\",\n";
    out << "    \"stopwords\": \"" << json_escape(cfg.stopword_source) << "\",\n";
    out << "    \"lexrank_mode\": \""
        << (cfg.summarize.lexrank_mode == LexRankMode::continuous ? "continuous" : "threshold")
        << "\",\n";
    out << "    \"lexrank_threshold\": " << fixed6(cfg.summarize.lexrank_threshold) << ",\n";
    out << "    \"luhn_significance_ratio\": " << fixed6(cfg.summarize.luhn_significance_ratio)
        << ",\n";
    out << "    \"luhn_gap_limit\": " << cfg.summarize.luhn_gap_limit << ",\n";
    out << "    \"kl_epsilon\": " << sci6(cfg.summarize.kl_epsilon) << ",\n";
    out << "    \"damping\": " << fixed6(cfg.summarize.rank.damping) << ",\n";
    out << "    \"rank_tol\": " << sci6(cfg.summarize.rank.tol) << ",\n";
    out << "    \"rank_max_iter\": " << cfg.summarize.rank.max_iter << "\n";
    out << "  },\n";

    out << "  \"corpus\": {\n";
    out << "    \"document_count\": " << report.document_ids.size() << ",\n";
    out << "    \"documents\": [";
    for (std::size_t i = 0; i < report.document_ids.size(); ++i)
        out << (i ? ", " : "") << '"' << json_escape(report.document_ids[i]) << '"';
    out << "]\n";
    out << "  },\n";

    out << "  \"algorithms\": [\n";
    for (std::size_t a = 0; a < report.aggregates.size(); ++a) {
        const AlgorithmAggregate &agg = report.aggregates[a];
        out << "    {\n";
        out << "      \"algorithm\": \"" << algorithm_name(agg.algorithm) << "\",\n";
        out << "      \"mean_recall\": " << fixed6(agg.mean_recall) << ",\n";
        out << "      \"mean_precision\": " << fixed6(agg.mean_precision) << ",\n";
        out << "      \"mean_f1\": " << fixed6(agg.mean_f1) << ",\n";
        for (std::size_t n = 0; n < 4; ++n)
            out << "      \"mean_bleu_" << n + 1 << "\": " << fixed6(agg.mean_bleu[n]) << ",\n";
        out << "      \"bleu4_composite\": " << fixed6(agg.bleu4_composite) << ",\n";
        out << "      \"per_document\": {\n";
        std::size_t emitted = 0;
        for (const auto &[id, scores] : agg.per_document) {
            out << "        \"" << json_escape(id) << "\": {\n";
            out << "          \"rouge\": {\"n\": " << scores.rouge.n
                << ", \"recall\": " << fixed6(scores.rouge.recall)
                << ", \"precision\": " << fixed6(scores.rouge.precision)
                << ", \"f1\": " << fixed6(scores.rouge.f1) << "},\n";
            out << "          \"bleu\": ";
            emit_bleu_json(out, scores.bleu, "          ");
            out << ",\n";
            out << "          \"bleu4_composite\": " << fixed6(scores.bleu4_composite) << "\n";
            out << "        }" << (++emitted < agg.per_document.size() ? "," : "") << "\n";
        }
        out << "      }\n";
        out << "    }" << (a + 1 < report.aggregates.size() ? "," : "") << "\n";
    }
    out << "  ],\n";

    out << "  \"ranking\": [";
    for (std::size_t i = 0; i < report.ranking.size(); ++i)
        out << (i ? ", " : "") << '"' << algorithm_name(report.ranking[i]) << '"';
    out << "]\n";
    out << "}\n";
    return out.str();
}

std::string emit_csv(const EvalReport &report) {
    std::ostringstream out;
    out << "algorithm,recall,precision,f1,bleu1,bleu2,bleu3,bleu4,bleu4_composite\n";
    for (const AlgorithmAggregate &agg : report.aggregates) {
        out << algorithm_name(agg.algorithm) << ',' << fixed6(agg.mean_recall) << ','
            << fixed6(agg.mean_precision) << ',' << fixed6(agg.mean_f1);
        for (double v : agg.mean_bleu)
            out << ',' << fixed6(v);
        out << ',' << fixed6(agg.bleu4_composite) << '\n';
    }
    return out.str();
}

} // namespace

std::string emit_report(const EvalReport &report, const std::string &format) {
    if (format == "json")
        return emit_json(report);
    if (format == "csv")
        return emit_csv(report);
    throw Error(Errc::unsupported_format, "unknown report format: " + format);
}

} // namespace summarax
