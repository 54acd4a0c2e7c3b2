#ifndef SUMMARAX_SUMMARIZE_HPP_
#define SUMMARAX_SUMMARIZE_HPP_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "summarax/textpipe.hpp"

namespace summarax {

enum class Algorithm { textrank, lexrank, luhn, lsa, klsum };

const char *algorithm_name(Algorithm algorithm);
std::optional<Algorithm> parse_algorithm(const std::string &name);
const std::vector<Algorithm> &all_algorithms();

// IDF-weighted bag-of-words vector: weight = occurrences * idf(word).
struct SentenceVector {
    std::map<Token, double> weights;
};

struct Summary {
    Algorithm algorithm = Algorithm::textrank;
    std::vector<int> selected;           // strictly increasing sentence indices
    std::map<int, double> scores;        // per-sentence ranking scores
    std::string text;                    // selected raw sentences joined by ' '
    std::vector<std::string> warnings;   // e.g. empty-vocabulary fallback
};

struct RankParams {
    double damping = 0.85;
    double tol = 1e-8;
    int max_iter = 200;
};

enum class LexRankMode { continuous, threshold };

SentenceVector build_sentence_vector(const std::vector<Token> &tokens, const IdfTable &idf);

// Cosine similarity of two idf-weighted vectors, in [0, 1]; 0 when either
// vector is empty.
double idf_modified_cosine(const SentenceVector &x, const SentenceVector &y);

// Graph ranking with edge weight
//   |shared distinct non-stopword tokens| / (ln|S_i| + ln|S_j|)
// for sentence pairs where both have >= 2 tokens.
Summary summarize_textrank(const std::vector<TokenizedSentence> &sentences, int k,
                           const StopwordList &stops, const RankParams &rank = {});

// Eigenvector centrality over the pairwise idf-modified-cosine graph. The idf
// table is computed over this document's sentences. Continuous mode keeps raw
// cosines as edge weights; threshold mode binarizes at the given cut.
Summary summarize_lexrank(const std::vector<TokenizedSentence> &sentences, int k,
                          LexRankMode mode = LexRankMode::continuous, double threshold = 0.1,
                          const RankParams &rank = {});

// Best window score (significant_count^2 / span) over windows whose
// significant tokens are separated by at most gap_limit fillers.
double luhn_sentence_score(const TokenizedSentence &sentence, const std::set<Token> &significant,
                           int gap_limit);

// Significant set = top ceil(ratio * distinct non-stopword vocabulary) tokens
// by document frequency, ties broken lexicographically.
Summary summarize_luhn(const std::vector<TokenizedSentence> &sentences, int k,
                       const StopwordList &stops, double significance_ratio = 0.1,
                       int gap_limit = 4);

// Term-sentence matrix SVD; one sentence per leading topic, remainder filled
// from the dominant topic loadings.
Summary summarize_lsa(const std::vector<TokenizedSentence> &sentences, int k,
                      const StopwordList &stops);

// Greedy selection minimizing KL(document unigrams || summary unigrams) at
// each step.
Summary summarize_klsum(const std::vector<TokenizedSentence> &sentences, int k,
                        const StopwordList &stops, double epsilon = 1e-12);

// Shared knobs for the dispatcher below; defaults match the per-function ones.
struct SummarizeOptions {
    int k = 3;
    RankParams rank;
    LexRankMode lexrank_mode = LexRankMode::continuous;
    double lexrank_threshold = 0.1;
    double luhn_significance_ratio = 0.1;
    int luhn_gap_limit = 4;
    double kl_epsilon = 1e-12;
};

Summary summarize(Algorithm algorithm, const std::vector<TokenizedSentence> &sentences,
                  const StopwordList &stops, const SummarizeOptions &options);

} // namespace summarax

#endif // SUMMARAX_SUMMARIZE_HPP_
