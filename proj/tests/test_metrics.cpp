#include <doctest.h>

#include <cmath>
#include <random>

#include "summarax/error.hpp"
#include "summarax/metrics.hpp"

using namespace summarax;

namespace {

std::vector<Token> toks(std::initializer_list<const char *> words) {
    std::vector<Token> out;
    for (const char *w : words)
        out.emplace_back(w);
    return out;
}

} // namespace

TEST_CASE("modified precision: identity, clipping, disjoint") {
    const auto cat = toks({"the", "cat", "sat"});
    CHECK(modified_ngram_precision(cat, cat, 1) == doctest::Approx(1.0));

    const auto repeated = toks({"the", "the", "the", "the"});
    const auto ref = toks({"the", "cat"});
    CHECK(modified_ngram_precision(repeated, ref, 1) == doctest::Approx(0.25));

    CHECK(modified_ngram_precision(toks({"a", "b"}), toks({"c", "d"}), 1) == 0.0);
    CHECK(modified_ngram_precision(toks({"a", "b"}), toks({"c", "d"}), 2) == 0.0);
}

TEST_CASE("modified precision: candidate shorter than n scores 0") {
    CHECK(modified_ngram_precision(toks({"a"}), toks({"a", "b", "c"}), 2) == 0.0);
    CHECK(modified_ngram_precision({}, toks({"a"}), 1) == 0.0);
}

TEST_CASE("modified precision rejects n < 1") {
    try {
        modified_ngram_precision(toks({"a"}), toks({"a"}), 0);
        FAIL("expected throw");
    } catch (const Error &e) {
        CHECK(e.code() == Errc::invalid_n);
    }
}

TEST_CASE("self precision is 1 for any sequence long enough") {
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> len(1, 50);
    std::uniform_int_distribution<int> pick(0, 3);
    const std::vector<Token> vocab = {"w", "x", "y", "z"};
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Token> seq;
        const int n = len(rng);
        for (int i = 0; i < n; ++i)
            seq.push_back(vocab[static_cast<std::size_t>(pick(rng))]);
        for (int order = 1; order <= std::min(4, n); ++order)
            CHECK(modified_ngram_precision(seq, seq, order) == doctest::Approx(1.0));
    }
}

TEST_CASE("geometric average precision") {
    CHECK(geometric_average_precision({1, 1, 1, 1}, {0.25, 0.25, 0.25, 0.25}) ==
          doctest::Approx(1.0));
    CHECK(geometric_average_precision({1.0, 0.5}, {0.5, 0.5}) ==
          doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
    CHECK(geometric_average_precision({1.0, 0.5}, {0.5, 0.5}) ==
          doctest::Approx(0.70711).epsilon(1e-4));
    CHECK(geometric_average_precision({1.0, 0.0, 0.5}, {0.4, 0.3, 0.3}) == 0.0);
}

TEST_CASE("geometric average precision errors") {
    try {
        geometric_average_precision({1.0}, {0.5, 0.5});
        FAIL("expected throw");
    } catch (const Error &e) {
        CHECK(e.code() == Errc::length_mismatch);
    }
    try {
        geometric_average_precision({1.0, 1.0}, {0.5, 0.4});
        FAIL("expected throw");
    } catch (const Error &e) {
        CHECK(e.code() == Errc::invalid_weights);
    }
    CHECK_THROWS_AS(geometric_average_precision({1.0, 1.0}, {1.5, -0.5}), Error);
}

TEST_CASE("brevity penalty branches") {
    CHECK(brevity_penalty(10, 5) == doctest::Approx(1.0));
    CHECK(brevity_penalty(7, 7) == doctest::Approx(1.0));
    CHECK(brevity_penalty(5, 10) == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
    CHECK(brevity_penalty(5, 10) == doctest::Approx(0.36788).epsilon(1e-4));
    CHECK(brevity_penalty(0, 10) == 0.0);
}

TEST_CASE("brevity penalty monotone in candidate length") {
    const long long r = 20;
    double prev = -1.0;
    for (long long c = 1; c <= 40; ++c) {
        const double bp = brevity_penalty(c, r);
        CHECK(bp >= prev);
        prev = bp;
        if (c >= r)
            CHECK(bp == doctest::Approx(1.0));
        else
            CHECK(bp == doctest::Approx(std::exp(1.0 - static_cast<double>(r) / c)).epsilon(1e-12));
    }
}

TEST_CASE("brevity penalty rejects bad reference length") {
    try {
        brevity_penalty(3, 0);
        FAIL("expected throw");
    } catch (const Error &e) {
        CHECK(e.code() == Errc::invalid_reference_length);
    }
    CHECK_THROWS_AS(brevity_penalty(-1, 3), Error);
}

TEST_CASE("bleu identity scores 1") {
    const auto seq = toks({"one", "two", "three", "four", "five"});
    const auto b = bleu_score(seq, seq, 4);
    CHECK(b.score == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(b.brevity_penalty == doctest::Approx(1.0));
    for (double p : b.precisions)
        CHECK(p == doctest::Approx(1.0));
}

TEST_CASE("bleu hand-composed case") {
    // candidate "the cat", reference "the cat sat on": p1 = 1, BP = e^(1-2)
    const auto b = bleu_score(toks({"the", "cat"}), toks({"the", "cat", "sat", "on"}), 1);
    CHECK(b.precisions[0] == doctest::Approx(1.0));
    CHECK(b.brevity_penalty == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
    CHECK(b.score == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
    CHECK(b.score == doctest::Approx(0.36788).epsilon(1e-4));
}

TEST_CASE("bleu disjoint texts score 0") {
    const auto b = bleu_score(toks({"a", "b", "c", "d"}), toks({"e", "f", "g", "h"}), 4);
    CHECK(b.score == 0.0);
    CHECK(b.geo_avg == 0.0);
}

TEST_CASE("bleu breakdown self-consistency") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> len(1, 30);
    std::uniform_int_distribution<int> pick(0, 4);
    const std::vector<Token> vocab = {"a", "b", "c", "d", "e"};
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<Token> cand, ref;
        for (int i = 0, n = len(rng); i < n; ++i)
            cand.push_back(vocab[static_cast<std::size_t>(pick(rng))]);
        for (int i = 0, n = len(rng); i < n; ++i)
            ref.push_back(vocab[static_cast<std::size_t>(pick(rng))]);
        const auto b = bleu_score(cand, ref, 4);
        CHECK(std::abs(b.score - b.brevity_penalty * b.geo_avg) <= 1e-12);
        CHECK(b.score >= 0.0);
        CHECK(b.score <= 1.0);
        if (b.candidate_len > b.reference_len)
            CHECK(b.brevity_penalty == 1.0);
    }
}

TEST_CASE("bleu smoothing floors zero precisions when enabled") {
    const auto cand = toks({"a", "b"});
    const auto ref = toks({"a", "c"});
    const auto plain = bleu_score(cand, ref, 2);
    CHECK(plain.score == 0.0); // p2 = 0

    BleuOptions smooth;
    smooth.smoothing_epsilon = 1e-3;
    const auto b = bleu_score(cand, ref, 2, smooth);
    CHECK(b.precisions[1] == doctest::Approx(1e-3));
    CHECK(b.score > 0.0);
}

TEST_CASE("bleu propagates empty-reference error") {
    CHECK_THROWS_AS(bleu_score(toks({"a"}), {}, 1), Error);
}

TEST_CASE("rouge identity") {
    const auto seq = toks({"the", "cat", "sat"});
    const auto r = rouge_n(seq, seq, 1);
    CHECK(r.recall == doctest::Approx(1.0));
    CHECK(r.precision == doctest::Approx(1.0));
    CHECK(r.f1 == doctest::Approx(1.0));
}

TEST_CASE("rouge hand-counted unigram case") {
    const auto model = toks({"the", "cat", "sat", "on", "the", "mat"});
    const auto ref = toks({"the", "cat", "on", "mat"});
    const auto r = rouge_n(model, ref, 1);
    CHECK(r.recall == doctest::Approx(1.0));
    CHECK(r.precision == doctest::Approx(4.0 / 6.0).epsilon(1e-12));
    CHECK(r.f1 == doctest::Approx(0.8).epsilon(1e-12));
}

TEST_CASE("rouge empty model scores zero") {
    const auto r = rouge_n({}, toks({"a", "b"}), 1);
    CHECK(r.recall == 0.0);
    CHECK(r.precision == 0.0);
    CHECK(r.f1 == 0.0);
}

TEST_CASE("rouge recall/precision swap symmetry") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> len(0, 25);
    std::uniform_int_distribution<int> pick(0, 3);
    const std::vector<Token> vocab = {"p", "q", "r", "s"};
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<Token> a, b;
        for (int i = 0, n = len(rng); i < n; ++i)
            a.push_back(vocab[static_cast<std::size_t>(pick(rng))]);
        for (int i = 0, n = len(rng); i < n; ++i)
            b.push_back(vocab[static_cast<std::size_t>(pick(rng))]);
        for (int order = 1; order <= 2; ++order) {
            const auto ab = rouge_n(a, b, order);
            const auto ba = rouge_n(b, a, order);
            CHECK(ab.recall == doctest::Approx(ba.precision).epsilon(1e-15));
            CHECK(ab.precision == doctest::Approx(ba.recall).epsilon(1e-15));
        }
    }
}

TEST_CASE("f1 at full recall matches the frozen 3-decimal table") {
    // (precision, expected f1 at recall 1.0), rounded to 3 decimals
    const std::vector<std::pair<double, double>> rows = {
        {0.370, 0.540}, {0.299, 0.460}, {0.423, 0.595}, {0.350, 0.519}, {0.250, 0.400},
    };
    for (const auto &[p, want] : rows) {
        const double f1 = f1_from(p, 1.0);
        CHECK(std::round(f1 * 1000.0) / 1000.0 == doctest::Approx(want).epsilon(1e-12));
    }
}

TEST_CASE("f1 of equal precision and recall") {
    CHECK(f1_from(0.3, 0.3) == doctest::Approx(0.3).epsilon(1e-15));
    CHECK(f1_from(0.0, 0.0) == 0.0);
}

TEST_CASE("f1 bounds and range errors") {
    CHECK_THROWS_AS(f1_from(-0.1, 0.5), Error);
    CHECK_THROWS_AS(f1_from(0.5, 1.1), Error);
    std::mt19937 rng(29);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        const double p = unit(rng);
        const double r = unit(rng);
        const double f1 = f1_from(p, r);
        if (p + r > 0) {
            CHECK(f1 >= std::min(p, r) - 1e-15);
            CHECK(f1 <= std::max(p, r) + 1e-15);
        }
    }
}
