#pragma once

// Shared helpers for the test suites: exhaustive word enumeration and a
// generic rewriting normalizer that applies the four Garside rules in an
// arbitrary (optionally randomized) order. The latter is an independent
// implementation used to cross-check the production engine.

#include <functional>
#include <random>
#include <stdexcept>
#include <vector>

#include "braid3/garside.hpp"
#include "braid3/word.hpp"

namespace braid3::testsupport {

// Calls f with every band word of exactly `len` letters (6^len words).
inline void forEachWordOfLength(int len, const std::function<void(const Word&)>& f) {
    std::vector<int> digits(static_cast<std::size_t>(len), 0);
    while (true) {
        Word w;
        for (int d : digits) w.append(d % 3 + 1, d < 3 ? 1 : -1);
        f(w);
        int i = 0;
        while (i < len && digits[static_cast<std::size_t>(i)] == 5) {
            digits[static_cast<std::size_t>(i)] = 0;
            ++i;
        }
        if (i == len) break;
        ++digits[static_cast<std::size_t>(i)];
    }
}

inline void forEachWordUpTo(int maxLen, const std::function<void(const Word&)>& f) {
    for (int len = 0; len <= maxLen; ++len) forEachWordOfLength(len, f);
}

// --- generic rewriting normalizer -----------------------------------------

struct RewriteToken {
    bool isDelta = false;
    long long deltaPower = 0;  // when isDelta
    int index = 1;             // when letter
    int sign = 1;
};

// Applies, until exhaustion, whichever of the four rules the picker selects:
//   (1) a_i^{-1}        -> delta^{-1} a_{i+1}
//   (2) a_{i+1} a_i     -> delta
//   (3) delta^k delta^l -> delta^{k+l}
//   (4) a_i delta^k     -> delta^k a_{i+k}
// and reads the normal form off the terminal token list.
inline NormalForm rewriteNormalize(const Word& w, std::mt19937& rng) {
    std::vector<RewriteToken> ts;
    for (const auto& s : w.syllables()) {
        long long k = toLongChecked(s.exponent, "test exponent");
        int sign = k > 0 ? 1 : -1;
        for (long long j = 0; j < (k > 0 ? k : -k); ++j) ts.push_back({false, 0, s.index, sign});
    }

    struct Rule {
        int rule;
        std::size_t pos;
    };
    for (long long iter = 0;; ++iter) {
        if (iter > 200000) throw std::runtime_error("rewrite oracle did not terminate");
        std::vector<Rule> applicable;
        for (std::size_t i = 0; i < ts.size(); ++i) {
            if (!ts[i].isDelta && ts[i].sign < 0) applicable.push_back({1, i});
            if (i + 1 < ts.size()) {
                const auto& x = ts[i];
                const auto& y = ts[i + 1];
                if (!x.isDelta && !y.isDelta && x.sign > 0 && y.sign > 0 &&
                    x.index == normIndex(y.index + 1))
                    applicable.push_back({2, i});
                if (x.isDelta && y.isDelta) applicable.push_back({3, i});
                if (!x.isDelta && x.sign > 0 && y.isDelta) applicable.push_back({4, i});
            }
        }
        if (applicable.empty()) break;
        Rule r = applicable[std::uniform_int_distribution<std::size_t>(0, applicable.size() - 1)(rng)];
        std::size_t i = r.pos;
        switch (r.rule) {
            case 1: {
                int idx = ts[i].index;
                ts[i] = {true, -1, 0, 1};
                ts.insert(ts.begin() + static_cast<long>(i) + 1, {false, 0, normIndex(idx + 1), 1});
                break;
            }
            case 2: {
                ts[i] = {true, 1, 0, 1};
                ts.erase(ts.begin() + static_cast<long>(i) + 1);
                break;
            }
            case 3: {
                ts[i].deltaPower += ts[i + 1].deltaPower;
                ts.erase(ts.begin() + static_cast<long>(i) + 1);
                break;
            }
            case 4: {
                RewriteToken letter = ts[i];
                RewriteToken delta = ts[i + 1];
                letter.index = normIndex(letter.index + delta.deltaPower);
                ts[i] = delta;
                ts[i + 1] = letter;
                break;
            }
        }
        std::erase_if(ts, [](const RewriteToken& t) { return t.isDelta && t.deltaPower == 0; });
    }

    // Terminal shape: at most one leading delta power, then positive letters
    // whose indices step by 0 or +1. Built directly, not via the engine under
    // test.
    BigInt u = 0;
    std::size_t i = 0;
    if (i < ts.size() && ts[i].isDelta) {
        u = ts[i].deltaPower;
        ++i;
    }
    NondecreasingPositive p;
    int prev = 0;
    for (; i < ts.size(); ++i) {
        if (ts[i].isDelta || ts[i].sign < 0) throw std::runtime_error("rewrite oracle terminal shape");
        int idx = ts[i].index;
        if (p.exponents.empty()) {
            p.start = idx;
            p.exponents.push_back(1);
        } else if (idx == prev) {
            p.exponents.back() += 1;
        } else if (idx == normIndex(prev + 1)) {
            p.exponents.push_back(1);
        } else {
            throw std::runtime_error("rewrite oracle terminal shape has a descent");
        }
        prev = idx;
    }
    return NormalForm(u, std::move(p));
}

}  // namespace braid3::testsupport
