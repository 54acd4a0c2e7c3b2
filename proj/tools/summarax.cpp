#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "summarax/corpus.hpp"
#include "summarax/error.hpp"
#include "summarax/metrics.hpp"
#include "summarax/report.hpp"
#include "summarax/summarize.hpp"
#include "summarax/textpipe.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitCorpus = 3;

struct UsageFailure {
    std::string message;
};

struct IoFailure {
    std::string message;
};

std::string read_input_file(const std::string &path) {
    std::string text = summarax::read_text_file(path);
    if (!summarax::valid_utf8(text))
        throw IoFailure{"input is not valid UTF-8: " + path};
    return summarax::normalize_newlines(std::move(text));
}

void write_output(const std::string &path, const std::string &contents) {
    if (path.empty() || path == "-") {
        std::cout << contents;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoFailure{"cannot open output file: " + path};
    out << contents;
    out.flush();
    if (!out)
        throw IoFailure{"failed writing output file: " + path};
}

summarax::StopwordList resolve_stopwords(const std::string &path, std::string *source_label) {
    if (path.empty()) {
        if (source_label)
            *source_label = "builtin";
        return summarax::default_stopwords();
    }
    if (source_label)
        *source_label = path;
    return summarax::load_stopwords(path);
}

// One line per sentence on stdout: internal line breaks and tabs collapse to
// spaces so downstream line-oriented tooling stays happy.
std::string flatten(const std::string &raw) {
    std::string out = raw;
    for (char &c : out) {
        if (c == '\n' || c == '\t' || c == '\r')
            c = ' ';
    }
    return out;
}

std::string csv_field(const std::string &value) {
    if (value.find_first_of(",\"\n") == std::string::npos)
        return value;
    std::string quoted = "\"";
    for (char c : value) {
        if (c == '"')
            quoted += "\"\"";
        else
            quoted += c;
    }
    quoted += '"';
    return quoted;
}

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

nlohmann::json load_config_json(const std::string &path) {
    std::string text;
    try {
        text = summarax::read_text_file(path);
    } catch (const summarax::Error &e) {
        throw IoFailure{e.what()};
    }
    nlohmann::json cfg = nlohmann::json::parse(text, nullptr, false);
    if (cfg.is_discarded() || !cfg.is_object())
        throw UsageFailure{"config file is not a JSON object: " + path};
    return cfg;
}

// Config-file values only apply to flags the user did not pass; flags win.
template <typename T>
void merge_key(const CLI::App &cmd, const std::string &flag, const nlohmann::json &cfg,
               const char *key, T &target) {
    if (cmd.count(flag) > 0 || !cfg.contains(key))
        return;
    try {
        target = cfg.at(key).get<T>();
    } catch (const nlohmann::json::exception &) {
        throw UsageFailure{std::string("config key '") + key + "' has the wrong type"};
    }
}

summarax::LexRankMode parse_lexrank_mode(const std::string &mode) {
    if (mode == "continuous")
        return summarax::LexRankMode::continuous;
    if (mode == "threshold")
        return summarax::LexRankMode::threshold;
    throw UsageFailure{"unknown lexrank mode: " + mode};
}

// ---------------------------------------------------------------------------
// summarize
// ---------------------------------------------------------------------------

struct SummarizeArgs {
    std::string input;
    std::string algo = "textrank";
    int k = 3;
    bool show_scores = false;
    std::string stopword_path;
    std::string lexrank_mode = "continuous";
    double lexrank_threshold = 0.1;
    double luhn_ratio = 0.1;
    int luhn_gap = 4;
    double kl_epsilon = 1e-12;
    std::string output;
    std::string config_path;
};

int run_summarize(const CLI::App &cmd, SummarizeArgs args) {
    if (!args.config_path.empty()) {
        const nlohmann::json cfg = load_config_json(args.config_path);
        merge_key(cmd, "--algo", cfg, "algo", args.algo);
        merge_key(cmd, "--k", cfg, "k", args.k);
        merge_key(cmd, "--scores", cfg, "scores", args.show_scores);
        merge_key(cmd, "--stopwords", cfg, "stopwords", args.stopword_path);
        merge_key(cmd, "--lexrank-mode", cfg, "lexrank-mode", args.lexrank_mode);
        merge_key(cmd, "--lexrank-threshold", cfg, "lexrank-threshold", args.lexrank_threshold);
        merge_key(cmd, "--luhn-ratio", cfg, "luhn-ratio", args.luhn_ratio);
        merge_key(cmd, "--luhn-gap", cfg, "luhn-gap", args.luhn_gap);
        merge_key(cmd, "--kl-epsilon", cfg, "kl-epsilon", args.kl_epsilon);
        merge_key(cmd, "--output", cfg, "output", args.output);
    }
    const auto algorithm = summarax::parse_algorithm(args.algo);
    if (!algorithm)
        throw UsageFailure{"unknown algorithm: " + args.algo};
    if (args.k < 1)
        throw UsageFailure{"k must be >= 1"};

    const summarax::StopwordList stops = resolve_stopwords(args.stopword_path, nullptr);
    const std::string text = read_input_file(args.input);
    const auto sentences = summarax::segment_sentences(text);

    summarax::SummarizeOptions options;
    options.k = args.k;
    options.lexrank_mode = parse_lexrank_mode(args.lexrank_mode);
    options.lexrank_threshold = args.lexrank_threshold;
    options.luhn_significance_ratio = args.luhn_ratio;
    options.luhn_gap_limit = args.luhn_gap;
    options.kl_epsilon = args.kl_epsilon;

    const summarax::Summary summary = summarax::summarize(*algorithm, sentences, stops, options);
    for (const std::string &warning : summary.warnings)
        std::cerr << "warning: " << warning << "\n";

    std::string out;
    for (int index : summary.selected) {
        if (args.show_scores) {
            const auto it = summary.scores.find(index);
            out += std::to_string(index);
            out += '\t';
            out += fixed6(it == summary.scores.end() ? 0.0 : it->second);
            out += '\t';
        }
        out += flatten(sentences[static_cast<std::size_t>(index)].raw);
        out += '\n';
    }
    write_output(args.output, out);
    return kExitOk;
}

// ---------------------------------------------------------------------------
// evaluate
// ---------------------------------------------------------------------------

struct EvaluateArgs {
    std::string corpus_dir;
    std::vector<std::string> algos = {"textrank", "lexrank", "luhn", "lsa", "klsum"};
    int k = 3;
    int rouge_n = 1;
    int bleu_max_n = 4;
    double bleu_smoothing = 0.0;
    bool metric_stopword_filter = false;
    std::string stopword_path;
    std::string lexrank_mode = "continuous";
    double lexrank_threshold = 0.1;
    double luhn_ratio = 0.1;
    int luhn_gap = 4;
    double kl_epsilon = 1e-12;
    std::string json_path = "report.json";
    std::string csv_path;
    int workers = 1;
    std::string config_path;
};

int run_evaluate(const CLI::App &cmd, EvaluateArgs args) {
    if (!args.config_path.empty()) {
        const nlohmann::json cfg = load_config_json(args.config_path);
        merge_key(cmd, "--algos", cfg, "algos", args.algos);
        merge_key(cmd, "--k", cfg, "k", args.k);
        merge_key(cmd, "--rouge-n", cfg, "rouge-n", args.rouge_n);
        merge_key(cmd, "--bleu-max-n", cfg, "bleu-max-n", args.bleu_max_n);
        merge_key(cmd, "--bleu-smoothing", cfg, "bleu-smoothing", args.bleu_smoothing);
        merge_key(cmd, "--metric-stopword-filter", cfg, "metric-stopword-filter",
                  args.metric_stopword_filter);
        merge_key(cmd, "--stopwords", cfg, "stopwords", args.stopword_path);
        merge_key(cmd, "--lexrank-mode", cfg, "lexrank-mode", args.lexrank_mode);
        merge_key(cmd, "--lexrank-threshold", cfg, "lexrank-threshold", args.lexrank_threshold);
        merge_key(cmd, "--luhn-ratio", cfg, "luhn-ratio", args.luhn_ratio);
        merge_key(cmd, "--luhn-gap", cfg, "luhn-gap", args.luhn_gap);
        merge_key(cmd, "--kl-epsilon", cfg, "kl-epsilon", args.kl_epsilon);
        merge_key(cmd, "--json", cfg, "json", args.json_path);
        merge_key(cmd, "--csv", cfg, "csv", args.csv_path);
        merge_key(cmd, "--workers", cfg, "workers", args.workers);
    }
    if (args.k < 1)
        throw UsageFailure{"k must be >= 1"};
    if (args.rouge_n < 1 || args.rouge_n > 4)
        throw UsageFailure{"rouge-n must lie in [1, 4]"};
    if (args.bleu_max_n < 1 || args.bleu_max_n > 9)
        throw UsageFailure{"bleu-max-n must lie in [1, 9]"};
    if (args.workers < 1)
        throw UsageFailure{"workers must be >= 1"};
    if (args.algos.empty())
        throw UsageFailure{"at least one algorithm must be selected"};

    std::set<summarax::Algorithm> selection;
    for (const std::string &name : args.algos) {
        const auto algorithm = summarax::parse_algorithm(name);
        if (!algorithm)
            throw UsageFailure{"unknown algorithm: " + name};
        selection.insert(*algorithm);
    }

    summarax::EvalConfig config;
    config.summarize.k = args.k;
    config.summarize.lexrank_mode = parse_lexrank_mode(args.lexrank_mode);
    config.summarize.lexrank_threshold = args.lexrank_threshold;
    config.summarize.luhn_significance_ratio = args.luhn_ratio;
    config.summarize.luhn_gap_limit = args.luhn_gap;
    config.summarize.kl_epsilon = args.kl_epsilon;
    config.rouge_n = args.rouge_n;
    config.bleu_max_n = args.bleu_max_n;
    config.bleu_smoothing_epsilon = args.bleu_smoothing;
    config.metric_stopword_filter = args.metric_stopword_filter;
    config.workers = args.workers;

    const summarax::StopwordList stops =
        resolve_stopwords(args.stopword_path, &config.stopword_source);

    const summarax::Corpus corpus = summarax::load_corpus(args.corpus_dir);
    for (const std::string &warning : corpus.warnings)
        std::cerr << "warning: " << warning << "\n";

    const summarax::EvalReport report =
        summarax::evaluate_corpus(corpus, selection, config, stops);
    for (const std::string &warning : report.warnings)
        std::cerr << "warning: " << warning << "\n";

    write_output(args.json_path, summarax::emit_report(report, "json"));
    if (!args.csv_path.empty())
        write_output(args.csv_path, summarax::emit_report(report, "csv"));

    std::printf("%-12s %8s %10s %9s\n", "Algorithm", "Recall", "Precision", "F1-Score");
    for (summarax::Algorithm algorithm : report.ranking) {
        for (const summarax::AlgorithmAggregate &agg : report.aggregates) {
            if (agg.algorithm != algorithm)
                continue;
            std::printf("%-12s %8.3f %10.3f %9.3f\n", summarax::algorithm_name(algorithm),
                        agg.mean_recall, agg.mean_precision, agg.mean_f1);
        }
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// freq
// ---------------------------------------------------------------------------

struct FreqArgs {
    std::string input;
    bool raw = false;
    long long top = -1;
    bool drop_single = false;
    std::string stopword_path;
    std::string output;
    std::string config_path;
};

int run_freq(const CLI::App &cmd, FreqArgs args) {
    if (!args.config_path.empty()) {
        const nlohmann::json cfg = load_config_json(args.config_path);
        merge_key(cmd, "--raw", cfg, "raw", args.raw);
        merge_key(cmd, "--top", cfg, "top", args.top);
        merge_key(cmd, "--drop-single", cfg, "drop-single", args.drop_single);
        merge_key(cmd, "--stopwords", cfg, "stopwords", args.stopword_path);
        merge_key(cmd, "--output", cfg, "output", args.output);
    }
    if (args.top == 0 || args.top < -1)
        throw UsageFailure{"top must be >= 1"};

    const std::string text = read_input_file(args.input);
    std::vector<summarax::Token> tokens;
    if (args.raw) {
        tokens = summarax::tokenize_raw(text);
    } else {
        const summarax::StopwordList stops = resolve_stopwords(args.stopword_path, nullptr);
        tokens = summarax::remove_stopwords(summarax::tokenize(text), stops);
        if (args.drop_single)
            tokens = summarax::drop_single_and_numeric(tokens);
    }

    const summarax::FrequencyTable table = summarax::build_frequency_table(tokens);
    const std::size_t limit =
        args.top < 0 ? table.counts.size() : static_cast<std::size_t>(args.top);
    std::string out = "token,count\n";
    for (const auto &[token, count] : summarax::top_k(table, limit)) {
        out += csv_field(token);
        out += ',';
        out += std::to_string(count);
        out += '\n';
    }
    write_output(args.output, out);
    return kExitOk;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"summarax: extractive summarization and BLEU/ROUGE evaluation"};
    app.require_subcommand(1);

    SummarizeArgs sum_args;
    CLI::App *sum_cmd = app.add_subcommand("summarize", "Summarize a single text file");
    sum_cmd->add_option("input", sum_args.input, "UTF-8 text file")->required();
    sum_cmd->add_option("--algo", sum_args.algo,
                        "Algorithm: textrank|lexrank|luhn|lsa|klsum (default textrank)");
    sum_cmd->add_option("-k,--k", sum_args.k, "Sentences to select (default 3)");
    sum_cmd->add_flag("--scores", sum_args.show_scores, "Print index<TAB>score<TAB>sentence");
    sum_cmd->add_option("--stopwords", sum_args.stopword_path, "Stopword file override")
        ->envname("SUMMARAX_STOPWORDS");
    sum_cmd->add_option("--lexrank-mode", sum_args.lexrank_mode, "continuous|threshold");
    sum_cmd->add_option("--lexrank-threshold", sum_args.lexrank_threshold,
                        "Binarization cut for threshold mode (default 0.1)");
    sum_cmd->add_option("--luhn-ratio", sum_args.luhn_ratio,
                        "Significant-vocabulary ratio (default 0.1)");
    sum_cmd->add_option("--luhn-gap", sum_args.luhn_gap, "Max gap inside a window (default 4)");
    sum_cmd->add_option("--kl-epsilon", sum_args.kl_epsilon, "KL flooring epsilon (default 1e-12)");
    sum_cmd->add_option("-o,--output", sum_args.output, "Output file (default stdout)");
    sum_cmd->add_option("--config", sum_args.config_path, "JSON config file; flags win");

    EvaluateArgs eval_args;
    CLI::App *eval_cmd = app.add_subcommand("evaluate", "Evaluate algorithms over a paired corpus");
    eval_cmd->add_option("corpus", eval_args.corpus_dir, "Corpus root (docs/ + refs/)")->required();
    eval_cmd->add_option("--algos", eval_args.algos, "Comma-separated algorithm list (default all)")
        ->delimiter(',');
    eval_cmd->add_option("-k,--k", eval_args.k, "Sentences per summary (default 3)");
    eval_cmd->add_option("--rouge-n", eval_args.rouge_n, "ROUGE order, 1..4 (default 1)");
    eval_cmd->add_option("--bleu-max-n", eval_args.bleu_max_n, "BLEU max order, 1..9 (default 4)");
    eval_cmd->add_option("--bleu-smoothing", eval_args.bleu_smoothing,
                         "Floor for p_n (default 0 = off)");
    eval_cmd->add_flag("--metric-stopword-filter", eval_args.metric_stopword_filter,
                       "Stopword-filter metric tokens");
    eval_cmd->add_option("--stopwords", eval_args.stopword_path, "Stopword file override")
        ->envname("SUMMARAX_STOPWORDS");
    eval_cmd->add_option("--lexrank-mode", eval_args.lexrank_mode, "continuous|threshold");
    eval_cmd->add_option("--lexrank-threshold", eval_args.lexrank_threshold,
                         "Binarization cut (default 0.1)");
    eval_cmd->add_option("--luhn-ratio", eval_args.luhn_ratio, "Significance ratio (default 0.1)");
    eval_cmd->add_option("--luhn-gap", eval_args.luhn_gap, "Window gap limit (default 4)");
    eval_cmd->add_option("--kl-epsilon", eval_args.kl_epsilon, "KL epsilon (default 1e-12)");
    eval_cmd->add_option("--json", eval_args.json_path, "JSON report path (default report.json)");
    eval_cmd->add_option("--csv", eval_args.csv_path, "Also write the CSV report here");
    eval_cmd->add_option("--workers", eval_args.workers,
                         "Worker threads; output is independent of this (default 1)");
    eval_cmd->add_option("--config", eval_args.config_path, "JSON config file; flags win");

    FreqArgs freq_args;
    CLI::App *freq_cmd = app.add_subcommand("freq", "Token frequency CSV for a text file");
    freq_cmd->add_option("input", freq_args.input, "UTF-8 text file")->required();
    freq_cmd->add_flag("--raw", freq_args.raw, "Skip punctuation stripping and stopword removal");
    freq_cmd->add_option("--top", freq_args.top, "Keep only the N most frequent tokens");
    freq_cmd->add_flag("--drop-single", freq_args.drop_single,
                       "Also drop single-character and numeric tokens");
    freq_cmd->add_option("--stopwords", freq_args.stopword_path, "Stopword file override")
        ->envname("SUMMARAX_STOPWORDS");
    freq_cmd->add_option("-o,--output", freq_args.output, "Output file (default stdout)");
    freq_cmd->add_option("--config", freq_args.config_path, "JSON config file; flags win");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (sum_cmd->parsed())
            return run_summarize(*sum_cmd, sum_args);
        if (eval_cmd->parsed())
            return run_evaluate(*eval_cmd, eval_args);
        if (freq_cmd->parsed())
            return run_freq(*freq_cmd, freq_args);
    } catch (const UsageFailure &e) {
        std::cerr << "error: " << e.message << "\n";
        return kExitUsage;
    } catch (const IoFailure &e) {
        std::cerr << "error: " << e.message << "\n";
        return kExitIo;
    } catch (const summarax::Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        if (eval_cmd->parsed())
            return e.code() == summarax::Errc::io_error ? kExitIo : kExitCorpus;
        return kExitIo;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitUsage;
}
