#include "summarax/textpipe.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>

#include "summarax/error.hpp"

namespace summarax {

namespace {

bool is_ascii_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

bool is_ascii_upper(char c) { return c >= 'A' && c <= 'Z'; }
bool is_ascii_digit(char c) { return c >= '0' && c <= '9'; }
bool is_ascii_alnum(char c) {
    return is_ascii_digit(c) || is_ascii_upper(c) || (c >= 'a' && c <= 'z');
}

// Periods ending these strings never close a sentence. Multi-word entries
// ("et al.") are matched against the full preceding text.
const char *const kAbbreviations[] = {
    "et al.", "al.",  "Dr.",  "Mr.",  "Mrs.",  "Ms.",  "Prof.", "Fig.",
    "Figs.",  "Eq.",  "Eqs.", "Ref.", "Refs.", "e.g.", "i.e.",  "cf.",
    "vs.",    "No.",  "ca.",  "approx.",
};

// text[period_pos] is '.', check whether the text up to and including it ends
// with a listed abbreviation preceded by a word boundary.
bool ends_with_abbreviation(const std::string &text, std::size_t period_pos) {
    const std::size_t end = period_pos + 1;
    for (const char *abbrev : kAbbreviations) {
        const std::size_t len = std::char_traits<char>::length(abbrev);
        if (end < len)
            continue;
        if (text.compare(end - len, len, abbrev) != 0)
            continue;
        if (end == len || !is_ascii_alnum(text[end - len - 1]))
            return true;
    }
    return false;
}

// Decodes one UTF-8 codepoint starting at pos; returns its byte length.
// Malformed bytes are passed through as single opaque units.
std::uint32_t decode_codepoint(const std::string &s, std::size_t pos, std::size_t &len) {
    const auto byte = static_cast<unsigned char>(s[pos]);
    if (byte < 0x80) {
        len = 1;
        return byte;
    }
    std::size_t want = 0;
    std::uint32_t cp = 0;
    if ((byte & 0xE0) == 0xC0) {
        want = 2;
        cp = byte & 0x1F;
    } else if ((byte & 0xF0) == 0xE0) {
        want = 3;
        cp = byte & 0x0F;
    } else if ((byte & 0xF8) == 0xF0) {
        want = 4;
        cp = byte & 0x07;
    } else {
        len = 1;
        return 0xFFFD;
    }
    if (pos + want > s.size()) {
        len = 1;
        return 0xFFFD;
    }
    for (std::size_t i = 1; i < want; ++i) {
        const auto cont = static_cast<unsigned char>(s[pos + i]);
        if ((cont & 0xC0) != 0x80) {
            len = 1;
            return 0xFFFD;
        }
        cp = (cp << 6) | (cont & 0x3F);
    }
    len = want;
    return cp;
}

bool is_punct_codepoint(std::uint32_t cp) {
    if (cp < 0x80) {
        const char c = static_cast<char>(cp);
        return (c >= '!' && c <= '/') || (c >= ':' && c <= '@') || (c >= '[' && c <= '`') ||
               (c >= '{' && c <= '~');
    }
    // General Punctuation block (dashes, curly quotes, ellipsis, primes).
    if (cp >= 0x2010 && cp <= 0x2027)
        return true;
    if (cp >= 0x2030 && cp <= 0x205E)
        return true;
    switch (cp) {
    case 0x00A1: // inverted exclamation
    case 0x00A7: // section sign
    case 0x00AB: // left guillemet
    case 0x00B6: // pilcrow
    case 0x00B7: // middle dot
    case 0x00BB: // right guillemet
    case 0x00BF: // inverted question mark
        return true;
    default:
        return false;
    }
}

} // namespace

std::vector<std::string> split_sentences(const std::string &text) {
    std::vector<std::string> sentences;
    const std::size_t n = text.size();

    std::size_t start = 0;
    while (start < n && is_ascii_space(text[start]))
        ++start;

    std::size_t i = start;
    while (i < n) {
        const char c = text[i];
        if (c != '.' && c != '!' && c != '?') {
            ++i;
            continue;
        }
        // Consume a full terminator run ("...", "?!") as one candidate.
        std::size_t run_end = i + 1;
        while (run_end < n && (text[run_end] == '.' || text[run_end] == '!' || text[run_end] == '?'))
            ++run_end;
        std::size_t next = run_end;
        while (next < n && is_ascii_space(text[next]))
            ++next;

        bool boundary = next > run_end && next < n &&
                        (is_ascii_upper(text[next]) || is_ascii_digit(text[next]));
        if (boundary && c == '.' && run_end == i + 1 && ends_with_abbreviation(text, i))
            boundary = false;

        if (boundary) {
            sentences.push_back(text.substr(start, run_end - start));
            start = next;
            i = next;
        } else {
            i = run_end;
        }
    }

    if (start < n) {
        std::size_t end = n;
        while (end > start && is_ascii_space(text[end - 1]))
            --end;
        if (end > start)
            sentences.push_back(text.substr(start, end - start));
    }
    return sentences;
}

Token normalize_token(const std::string &piece) {
    // Collect codepoint boundaries so edge stripping works on multi-byte
    // punctuation as well.
    std::vector<std::pair<std::size_t, std::size_t>> cps; // (byte offset, byte length)
    std::vector<std::uint32_t> values;
    std::size_t pos = 0;
    while (pos < piece.size()) {
        std::size_t len = 0;
        values.push_back(decode_codepoint(piece, pos, len));
        cps.emplace_back(pos, len);
        pos += len;
    }

    std::size_t first = 0;
    std::size_t last = cps.size();
    while (first < last && is_punct_codepoint(values[first]))
        ++first;
    while (last > first && is_punct_codepoint(values[last - 1]))
        --last;
    if (first >= last)
        return {};

    const std::size_t byte_begin = cps[first].first;
    const std::size_t byte_end = cps[last - 1].first + cps[last - 1].second;
    Token out = piece.substr(byte_begin, byte_end - byte_begin);
    for (char &ch : out) {
        if (ch >= 'A' && ch <= 'Z')
            ch = static_cast<char>(ch - 'A' + 'a');
    }
    return out;
}

std::vector<Token> tokenize(const std::string &raw_sentence) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    const std::size_t n = raw_sentence.size();
    while (i < n) {
        while (i < n && is_ascii_space(raw_sentence[i]))
            ++i;
        std::size_t j = i;
        while (j < n && !is_ascii_space(raw_sentence[j]))
            ++j;
        if (j > i) {
            Token t = normalize_token(raw_sentence.substr(i, j - i));
            if (!t.empty())
                tokens.push_back(std::move(t));
        }
        i = j;
    }
    return tokens;
}

std::vector<Token> tokenize_raw(const std::string &text) {
    std::vector<Token> tokens;
    std::istringstream in(text);
    std::string piece;
    while (in >> piece) {
        for (char &ch : piece) {
            if (ch >= 'A' && ch <= 'Z')
                ch = static_cast<char>(ch - 'A' + 'a');
        }
        tokens.push_back(piece);
    }
    return tokens;
}

std::vector<TokenizedSentence> segment_sentences(const std::string &text) {
    std::vector<TokenizedSentence> sentences;
    auto raws = split_sentences(text);
    sentences.reserve(raws.size());
    for (std::size_t i = 0; i < raws.size(); ++i) {
        TokenizedSentence s;
        s.index = static_cast<int>(i);
        s.tokens = tokenize(raws[i]);
        s.raw = std::move(raws[i]);
        sentences.push_back(std::move(s));
    }
    return sentences;
}

std::vector<Token> remove_stopwords(const std::vector<Token> &tokens, const StopwordList &stops) {
    std::vector<Token> kept;
    kept.reserve(tokens.size());
    for (const Token &t : tokens) {
        if (!stops.contains(t))
            kept.push_back(t);
    }
    return kept;
}

FrequencyTable build_frequency_table(const std::vector<Token> &tokens) {
    FrequencyTable table;
    for (const Token &t : tokens)
        ++table.counts[t];
    table.total = static_cast<long long>(tokens.size());
    return table;
}

std::vector<std::pair<Token, long long>> top_k(const FrequencyTable &table, std::size_t k) {
    std::vector<std::pair<Token, long long>> rows(table.counts.begin(), table.counts.end());
    std::sort(rows.begin(), rows.end(), [](const auto &a, const auto &b) {
        if (a.second != b.second)
            return a.second > b.second;
        return a.first < b.first;
    });
    if (rows.size() > k)
        rows.resize(k);
    return rows;
}

NGramCounts extract_ngrams(const std::vector<Token> &tokens, int n) {
    if (n < 1)
        throw Error(Errc::invalid_n, "n-gram arity must be >= 1, got " + std::to_string(n));
    NGramCounts grams;
    if (tokens.size() < static_cast<std::size_t>(n))
        return grams;
    const std::size_t windows = tokens.size() - static_cast<std::size_t>(n) + 1;
    for (std::size_t i = 0; i < windows; ++i) {
        NGram g(tokens.begin() + static_cast<std::ptrdiff_t>(i),
                tokens.begin() + static_cast<std::ptrdiff_t>(i + n));
        ++grams[g];
    }
    return grams;
}

double IdfTable::at(const Token &w) const {
    auto it = idf.find(w);
    if (it != idf.end())
        return it->second;
    return std::log(static_cast<double>(std::max(unit_count, 1))) + 1.0;
}

IdfTable compute_idf(const std::vector<std::vector<Token>> &units) {
    if (units.empty())
        throw Error(Errc::empty_unit_list, "idf needs at least one unit");
    IdfTable table;
    table.unit_count = static_cast<int>(units.size());
    std::map<Token, int> df;
    for (const auto &unit : units) {
        std::set<Token> seen(unit.begin(), unit.end());
        for (const Token &t : seen)
            ++df[t];
    }
    const double n_units = static_cast<double>(units.size());
    for (const auto &[token, count] : df)
        table.idf[token] = std::log(n_units / static_cast<double>(count)) + 1.0;
    return table;
}

bool is_numeric_token(const Token &t) {
    bool has_digit = false;
    std::size_t pos = 0;
    while (pos < t.size()) {
        std::size_t len = 0;
        const std::uint32_t cp = decode_codepoint(t, pos, len);
        if ((cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z') || cp >= 0x80)
            return false;
        if (cp >= '0' && cp <= '9')
            has_digit = true;
        pos += len;
    }
    return has_digit;
}

std::vector<Token> drop_single_and_numeric(const std::vector<Token> &tokens) {
    std::vector<Token> kept;
    kept.reserve(tokens.size());
    for (const Token &t : tokens) {
        if (t.size() <= 1 || is_numeric_token(t))
            continue;
        kept.push_back(t);
    }
    return kept;
}

StopwordList parse_stopwords(const std::string &file_contents) {
    StopwordList list;
    std::istringstream in(file_contents);
    std::string line;
    while (std::getline(in, line)) {
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos)
            line.resize(hash);
        for (const Token &t : tokenize(line))
            list.words.insert(t);
    }
    return list;
}

StopwordList load_stopwords(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(Errc::io_error, "cannot open stopword file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string contents = buf.str();
    if (!valid_utf8(contents))
        throw Error(Errc::encoding_error, "stopword file is not valid UTF-8: " + path);
    return parse_stopwords(contents);
}

bool valid_utf8(const std::string &bytes) {
    std::size_t i = 0;
    const std::size_t n = bytes.size();
    while (i < n) {
        const auto b0 = static_cast<unsigned char>(bytes[i]);
        if (b0 < 0x80) {
            ++i;
            continue;
        }
        std::size_t len;
        std::uint32_t cp, min_cp;
        if ((b0 & 0xE0) == 0xC0) {
            len = 2;
            cp = b0 & 0x1F;
            min_cp = 0x80;
        } else if ((b0 & 0xF0) == 0xE0) {
            len = 3;
            cp = b0 & 0x0F;
            min_cp = 0x800;
        } else if ((b0 & 0xF8) == 0xF0) {
            len = 4;
            cp = b0 & 0x07;
            min_cp = 0x10000;
        } else {
            return false;
        }
        if (i + len > n)
            return false;
        for (std::size_t k = 1; k < len; ++k) {
            const auto bk = static_cast<unsigned char>(bytes[i + k]);
            if ((bk & 0xC0) != 0x80)
                return false;
            cp = (cp << 6) | (bk & 0x3F);
        }
        if (cp < min_cp || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF))
            return false;
        i += len;
    }
    return true;
}

std::string normalize_newlines(std::string text) {
    std::string out;
    out.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '\r') {
            out.push_back('\n');
            if (i + 1 < text.size() && text[i + 1] == '\n')
                ++i;
        } else {
            out.push_back(text[i]);
        }
    }
    return out;
}

} // namespace summarax
