#ifndef SUMMARAX_TEXTPIPE_HPP_
#define SUMMARAX_TEXTPIPE_HPP_

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace summarax {

// A token is the normalized surface form: lowercased, no leading/trailing
// punctuation. Internal punctuation (hyphens, apostrophes) is preserved.
using Token = std::string;

struct TokenizedSentence {
    int index = 0;            // 0-based position in the document
    std::vector<Token> tokens;
    std::string raw;          // verbatim substring of the source text
};

struct StopwordList {
    std::set<Token> words;

    bool contains(const Token &t) const { return words.count(t) != 0; }
    bool empty() const { return words.empty(); }
};

struct FrequencyTable {
    std::map<Token, long long> counts;
    long long total = 0;
};

using NGram = std::vector<Token>;
using NGramCounts = std::map<NGram, long long>;

struct IdfTable {
    std::map<Token, double> idf;
    int unit_count = 0;

    // Unseen words are treated as occurring in a single unit (the rarest
    // observable class), keeping lookups total.
    double at(const Token &w) const;
};

// Splits text into sentence spans. Boundary rule: '.', '!' or '?' followed by
// whitespace and an uppercase ASCII letter or digit, unless the period closes
// a known abbreviation ("Dr.", "et al.", "Fig.", ...). A trailing unterminated
// fragment becomes its own sentence. Each returned span is a verbatim
// substring of the input.
std::vector<std::string> split_sentences(const std::string &text);

// Whitespace split, per-piece edge punctuation strip (ASCII + common Unicode
// punctuation), ASCII lowercasing. Pieces that strip to nothing are dropped.
std::vector<Token> tokenize(const std::string &raw_sentence);

// Normalization applied to a single whitespace-free piece; returns "" when
// the piece is punctuation-only.
Token normalize_token(const std::string &piece);

// Whitespace split + lowercase only; punctuation is kept. Backs the
// unfiltered frequency view.
std::vector<Token> tokenize_raw(const std::string &text);

// split_sentences + tokenize, with sentence indices assigned in order.
std::vector<TokenizedSentence> segment_sentences(const std::string &text);

std::vector<Token> remove_stopwords(const std::vector<Token> &tokens, const StopwordList &stops);

FrequencyTable build_frequency_table(const std::vector<Token> &tokens);

// Top-k rows of a frequency table: descending count, ties broken by
// lexicographic token order.
std::vector<std::pair<Token, long long>> top_k(const FrequencyTable &table, std::size_t k);

// All contiguous windows of length n with multiplicity. Throws InvalidN for n < 1.
NGramCounts extract_ngrams(const std::vector<Token> &tokens, int n);

// idf(w) = ln(N / df(w)) + 1 over the given units (sentences or documents).
// Throws EmptyUnitList when no units are given.
IdfTable compute_idf(const std::vector<std::vector<Token>> &units);

// True when the token carries no alphabetic character but at least one digit
// ("42", "3.5", "1,000").
bool is_numeric_token(const Token &t);

// Drops single-character tokens and numeric tokens; used by the filtered
// frequency view.
std::vector<Token> drop_single_and_numeric(const std::vector<Token> &tokens);

// Bundled English stopword list.
const StopwordList &default_stopwords();

// One token per line, '#' starts a comment, entries are normalized on load.
StopwordList parse_stopwords(const std::string &file_contents);
StopwordList load_stopwords(const std::string &path);

bool valid_utf8(const std::string &bytes);

// CRLF and lone CR become '\n'.
std::string normalize_newlines(std::string text);

} // namespace summarax

#endif // SUMMARAX_TEXTPIPE_HPP_
