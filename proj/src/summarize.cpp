#include "summarax/summarize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "summarax/error.hpp"
#include "summarax/numerics.hpp"

namespace summarax {

const char *algorithm_name(Algorithm algorithm) {
    switch (algorithm) {
    case Algorithm::textrank:
        return "textrank";
    case Algorithm::lexrank:
        return "lexrank";
    case Algorithm::luhn:
        return "luhn";
    case Algorithm::lsa:
        return "lsa";
    case Algorithm::klsum:
        return "klsum";
    }
    return "unknown";
}

std::optional<Algorithm> parse_algorithm(const std::string &name) {
    for (Algorithm a : all_algorithms()) {
        if (name == algorithm_name(a))
            return a;
    }
    return std::nullopt;
}

const std::vector<Algorithm> &all_algorithms() {
    static const std::vector<Algorithm> algorithms = {
        Algorithm::textrank, Algorithm::lexrank, Algorithm::luhn, Algorithm::lsa,
        Algorithm::klsum,
    };
    return algorithms;
}

namespace {

void check_inputs(const std::vector<TokenizedSentence> &sentences, int k) {
    if (k < 1)
        throw Error(Errc::invalid_argument, "summary length k must be >= 1");
    if (sentences.empty())
        throw Error(Errc::empty_document, "document has no sentences");
}

// Top-k indices by (score descending, index ascending), returned in original
// (ascending index) order.
std::vector<int> select_top_k(const std::vector<double> &scores, int k) {
    std::vector<int> order(scores.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return scores[a] > scores[b]; });
    const std::size_t take = std::min<std::size_t>(static_cast<std::size_t>(k), order.size());
    order.resize(take);
    std::sort(order.begin(), order.end());
    return order;
}

std::string join_selected(const std::vector<TokenizedSentence> &sentences,
                          const std::vector<int> &selected) {
    std::string text;
    for (std::size_t i = 0; i < selected.size(); ++i) {
        if (i > 0)
            text += ' ';
        text += sentences[static_cast<std::size_t>(selected[i])].raw;
    }
    return text;
}

Summary make_summary(Algorithm algorithm, const std::vector<TokenizedSentence> &sentences,
                     const std::vector<double> &scores, int k) {
    Summary summary;
    summary.algorithm = algorithm;
    summary.selected = select_top_k(scores, k);
    for (std::size_t i = 0; i < scores.size(); ++i)
        summary.scores[static_cast<int>(i)] = scores[i];
    summary.text = join_selected(sentences, summary.selected);
    return summary;
}

Summary first_k_fallback(Algorithm algorithm, const std::vector<TokenizedSentence> &sentences,
                         int k) {
    Summary summary;
    summary.algorithm = algorithm;
    const int n = static_cast<int>(sentences.size());
    for (int i = 0; i < std::min(k, n); ++i) {
        summary.selected.push_back(i);
        summary.scores[i] = 0.0;
    }
    summary.text = join_selected(sentences, summary.selected);
    summary.warnings.push_back("EmptyVocabulary: all tokens are stopwords; kept leading sentences");
    return summary;
}

std::vector<Token> nonstop_tokens(const TokenizedSentence &sentence, const StopwordList &stops) {
    return remove_stopwords(sentence.tokens, stops);
}

} // namespace

SentenceVector build_sentence_vector(const std::vector<Token> &tokens, const IdfTable &idf) {
    SentenceVector vec;
    std::map<Token, long long> counts;
    for (const Token &t : tokens)
        ++counts[t];
    for (const auto &[token, count] : counts)
        vec.weights[token] = static_cast<double>(count) * idf.at(token);
    return vec;
}

double idf_modified_cosine(const SentenceVector &x, const SentenceVector &y) {
    if (x.weights.empty() || y.weights.empty())
        return 0.0;
    double dot = 0.0;
    for (const auto &[token, wx] : x.weights) {
        auto it = y.weights.find(token);
        if (it != y.weights.end())
            dot += wx * it->second;
    }
    if (dot == 0.0)
        return 0.0;
    double norm_x = 0.0;
    for (const auto &[token, w] : x.weights)
        norm_x += w * w;
    double norm_y = 0.0;
    for (const auto &[token, w] : y.weights)
        norm_y += w * w;
    return dot / (std::sqrt(norm_x) * std::sqrt(norm_y));
}

Summary summarize_textrank(const std::vector<TokenizedSentence> &sentences, int k,
                           const StopwordList &stops, const RankParams &rank) {
    check_inputs(sentences, k);
    const int n = static_cast<int>(sentences.size());

    std::vector<std::set<Token>> content(n);
    for (int i = 0; i < n; ++i) {
        auto kept = nonstop_tokens(sentences[static_cast<std::size_t>(i)], stops);
        content[static_cast<std::size_t>(i)] = std::set<Token>(kept.begin(), kept.end());
    }

    DenseMatrix graph(n, n);
    for (int i = 0; i < n; ++i) {
        const auto len_i = sentences[static_cast<std::size_t>(i)].tokens.size();
        for (int j = i + 1; j < n; ++j) {
            const auto len_j = sentences[static_cast<std::size_t>(j)].tokens.size();
            if (len_i < 2 || len_j < 2)
                continue;
            long long shared = 0;
            for (const Token &t : content[static_cast<std::size_t>(i)])
                shared += content[static_cast<std::size_t>(j)].count(t) ? 1 : 0;
            if (shared == 0)
                continue;
            const double denom =
                std::log(static_cast<double>(len_i)) + std::log(static_cast<double>(len_j));
            if (denom <= 0.0)
                continue;
            const double w = static_cast<double>(shared) / denom;
            graph.at(i, j) = w;
            graph.at(j, i) = w;
        }
    }

    const auto ranked = damped_score_iteration(graph, rank.damping, rank.tol, rank.max_iter);
    return make_summary(Algorithm::textrank, sentences, ranked.scores, k);
}

Summary summarize_lexrank(const std::vector<TokenizedSentence> &sentences, int k, LexRankMode mode,
                          double threshold, const RankParams &rank) {
    check_inputs(sentences, k);
    const int n = static_cast<int>(sentences.size());

    std::vector<std::vector<Token>> units;
    units.reserve(static_cast<std::size_t>(n));
    for (const TokenizedSentence &s : sentences)
        units.push_back(s.tokens);
    const IdfTable idf = compute_idf(units);

    std::vector<SentenceVector> vectors;
    vectors.reserve(static_cast<std::size_t>(n));
    for (const auto &unit : units)
        vectors.push_back(build_sentence_vector(unit, idf));

    DenseMatrix graph(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double cosine = idf_modified_cosine(vectors[static_cast<std::size_t>(i)],
                                                      vectors[static_cast<std::size_t>(j)]);
            double w = 0.0;
            if (mode == LexRankMode::continuous)
                w = cosine;
            else
                w = cosine >= threshold ? 1.0 : 0.0;
            graph.at(i, j) = w;
            graph.at(j, i) = w;
        }
    }

    const auto ranked = damped_score_iteration(graph, rank.damping, rank.tol, rank.max_iter);
    return make_summary(Algorithm::lexrank, sentences, ranked.scores, k);
}

double luhn_sentence_score(const TokenizedSentence &sentence, const std::set<Token> &significant,
                           int gap_limit) {
    if (gap_limit < 0)
        throw Error(Errc::invalid_argument, "gap_limit must be >= 0");

    std::vector<int> positions;
    for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
        if (significant.count(sentence.tokens[i]))
            positions.push_back(static_cast<int>(i));
    }
    if (positions.empty())
        return 0.0;

    double best = 0.0;
    int window_start = positions[0];
    int window_end = positions[0];
    int window_count = 1;
    for (std::size_t p = 1; p < positions.size(); ++p) {
        const int gap = positions[p] - window_end - 1;
        if (gap <= gap_limit) {
            window_end = positions[p];
            ++window_count;
        } else {
            const double span = static_cast<double>(window_end - window_start + 1);
            best = std::max(best, static_cast<double>(window_count) * window_count / span);
            window_start = positions[p];
            window_end = positions[p];
            window_count = 1;
        }
    }
    const double span = static_cast<double>(window_end - window_start + 1);
    best = std::max(best, static_cast<double>(window_count) * window_count / span);
    return best;
}

Summary summarize_luhn(const std::vector<TokenizedSentence> &sentences, int k,
                       const StopwordList &stops, double significance_ratio, int gap_limit) {
    check_inputs(sentences, k);
    if (!(significance_ratio > 0.0) || significance_ratio > 1.0)
        throw Error(Errc::invalid_argument, "significance ratio must lie in (0, 1]");

    std::vector<Token> doc_tokens;
    for (const TokenizedSentence &s : sentences) {
        auto kept = nonstop_tokens(s, stops);
        doc_tokens.insert(doc_tokens.end(), kept.begin(), kept.end());
    }
    const FrequencyTable freq = build_frequency_table(doc_tokens);

    std::set<Token> significant;
    if (!freq.counts.empty()) {
        const auto vocab = static_cast<double>(freq.counts.size());
        const auto cut = static_cast<std::size_t>(
            std::max(1.0, std::ceil(significance_ratio * vocab)));
        for (const auto &[token, count] : top_k(freq, cut))
            significant.insert(token);
    }

    std::vector<double> scores;
    scores.reserve(sentences.size());
    for (const TokenizedSentence &s : sentences)
        scores.push_back(luhn_sentence_score(s, significant, gap_limit));
    return make_summary(Algorithm::luhn, sentences, scores, k);
}

Summary summarize_lsa(const std::vector<TokenizedSentence> &sentences, int k,
                      const StopwordList &stops) {
    check_inputs(sentences, k);
    const int n = static_cast<int>(sentences.size());

    std::vector<std::map<Token, long long>> sentence_counts(static_cast<std::size_t>(n));
    std::set<Token> vocab_set;
    for (int j = 0; j < n; ++j) {
        for (const Token &t : nonstop_tokens(sentences[static_cast<std::size_t>(j)], stops)) {
            ++sentence_counts[static_cast<std::size_t>(j)][t];
            vocab_set.insert(t);
        }
    }
    if (vocab_set.empty())
        return first_k_fallback(Algorithm::lsa, sentences, k);

    const std::vector<Token> vocab(vocab_set.begin(), vocab_set.end());
    DenseMatrix terms(static_cast<int>(vocab.size()), n);
    for (int j = 0; j < n; ++j) {
        const auto &counts = sentence_counts[static_cast<std::size_t>(j)];
        for (std::size_t t = 0; t < vocab.size(); ++t) {
            auto it = counts.find(vocab[t]);
            if (it != counts.end())
                terms.at(static_cast<int>(t), j) = static_cast<double>(it->second);
        }
    }

    const SvdResult svd = svd_decompose(terms);
    const int dims = static_cast<int>(svd.singular_values.size());
    const double sigma_max = svd.singular_values.empty() ? 0.0 : svd.singular_values[0];
    const double cutoff = sigma_max * static_cast<double>(std::max(terms.rows, terms.cols)) * 1e-14;
    int rank = 0;
    while (rank < dims && svd.singular_values[static_cast<std::size_t>(rank)] > cutoff)
        ++rank;

    const int want = std::min(k, n);
    const int topics = std::min(want, rank);

    std::vector<bool> used(static_cast<std::size_t>(n), false);
    std::vector<int> selected;

    Summary summary;
    summary.algorithm = Algorithm::lsa;
    for (int j = 0; j < n; ++j)
        summary.scores[j] = std::abs(svd.vt.at(0, j));

    for (int topic = 0; topic < topics; ++topic) {
        int best = -1;
        double best_load = -1.0;
        for (int j = 0; j < n; ++j) {
            if (used[static_cast<std::size_t>(j)])
                continue;
            const double load = std::abs(svd.vt.at(topic, j));
            if (load > best_load) {
                best_load = load;
                best = j;
            }
        }
        used[static_cast<std::size_t>(best)] = true;
        selected.push_back(best);
        summary.scores[best] = best_load;
    }

    if (static_cast<int>(selected.size()) < want) {
        std::vector<int> rest;
        for (int j = 0; j < n; ++j) {
            if (!used[static_cast<std::size_t>(j)])
                rest.push_back(j);
        }
        std::stable_sort(rest.begin(), rest.end(), [&](int a, int b) {
            return std::abs(svd.vt.at(0, a)) > std::abs(svd.vt.at(0, b));
        });
        for (int j : rest) {
            if (static_cast<int>(selected.size()) >= want)
                break;
            selected.push_back(j);
        }
    }

    std::sort(selected.begin(), selected.end());
    summary.selected = std::move(selected);
    summary.text = join_selected(sentences, summary.selected);
    return summary;
}

Summary summarize_klsum(const std::vector<TokenizedSentence> &sentences, int k,
                        const StopwordList &stops, double epsilon) {
    check_inputs(sentences, k);
    const int n = static_cast<int>(sentences.size());

    std::vector<std::map<Token, long long>> sentence_counts(static_cast<std::size_t>(n));
    std::map<Token, long long> doc_counts;
    for (int j = 0; j < n; ++j) {
        for (const Token &t : nonstop_tokens(sentences[static_cast<std::size_t>(j)], stops)) {
            ++sentence_counts[static_cast<std::size_t>(j)][t];
            ++doc_counts[t];
        }
    }
    if (doc_counts.empty())
        return first_k_fallback(Algorithm::klsum, sentences, k);

    const ProbabilityDistribution doc_dist = distribution_from_counts(doc_counts);

    Summary summary;
    summary.algorithm = Algorithm::klsum;

    std::map<Token, long long> summary_counts;
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    std::vector<int> selected;
    const int want = std::min(k, n);

    for (int step = 0; step < want; ++step) {
        int best = -1;
        double best_div = std::numeric_limits<double>::infinity();
        for (int j = 0; j < n; ++j) {
            if (used[static_cast<std::size_t>(j)])
                continue;
            std::map<Token, long long> merged = summary_counts;
            for (const auto &[token, count] : sentence_counts[static_cast<std::size_t>(j)])
                merged[token] += count;
            double div = std::numeric_limits<double>::infinity();
            const ProbabilityDistribution q = distribution_from_counts(merged);
            if (!q.probs.empty())
                div = kl_divergence(doc_dist, q, epsilon);
            if (best == -1 || div < best_div) {
                best = j;
                best_div = div;
            }
        }
        used[static_cast<std::size_t>(best)] = true;
        selected.push_back(best);
        summary.scores[best] = best_div;
        for (const auto &[token, count] : sentence_counts[static_cast<std::size_t>(best)])
            summary_counts[token] += count;
    }

    std::sort(selected.begin(), selected.end());
    summary.selected = std::move(selected);
    summary.text = join_selected(sentences, summary.selected);
    return summary;
}

Summary summarize(Algorithm algorithm, const std::vector<TokenizedSentence> &sentences,
                  const StopwordList &stops, const SummarizeOptions &options) {
    switch (algorithm) {
    case Algorithm::textrank:
        return summarize_textrank(sentences, options.k, stops, options.rank);
    case Algorithm::lexrank:
        return summarize_lexrank(sentences, options.k, options.lexrank_mode,
                                 options.lexrank_threshold, options.rank);
    case Algorithm::luhn:
        return summarize_luhn(sentences, options.k, stops, options.luhn_significance_ratio,
                              options.luhn_gap_limit);
    case Algorithm::lsa:
        return summarize_lsa(sentences, options.k, stops);
    case Algorithm::klsum:
        return summarize_klsum(sentences, options.k, stops, options.kl_epsilon);
    }
    throw Error(Errc::invalid_argument, "unknown algorithm");
}

} // namespace summarax
