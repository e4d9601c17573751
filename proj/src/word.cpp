#include "braid3/word.hpp"

#include <cctype>
#include <limits>

namespace braid3 {

long long toLongChecked(const BigInt& x, const char* what) {
    if (x > std::numeric_limits<long long>::max() || x < std::numeric_limits<long long>::min())
        throw ResourceLimit(std::string(what) + " does not fit in a machine integer: " + toString(x));
    return static_cast<long long>(x);
}

int normIndex(long long i) {
    long long r = i % 3;
    if (r <= 0) r += 3;
    return static_cast<int>(r);
}

BigInt normIndexBig(const BigInt& i) {
    BigInt r = i % 3;
    if (r <= 0) r += 3;
    return r;
}

Word::Word(std::vector<Syllable> syllables) {
    for (auto& s : syllables) append(s.index, s.exponent);
}

void Word::append(int index, const BigInt& exponent) {
    if (exponent == 0) return;
    int idx = normIndex(index);
    if (!syls_.empty() && syls_.back().index == idx) {
        syls_.back().exponent += exponent;
        // A full cancellation exposes the previous syllable, which is distinct
        // from its own neighbour by the invariant, so no further merge cascades.
        if (syls_.back().exponent == 0) syls_.pop_back();
        return;
    }
    syls_.push_back({idx, exponent});
}

BigInt Word::wordLength() const {
    BigInt n = 0;
    for (const auto& s : syls_) n += abs(s.exponent);
    return n;
}

int Permutation::cycleCount() const {
    std::array<bool, 3> seen{false, false, false};
    int cycles = 0;
    for (int i = 0; i < 3; ++i) {
        if (seen[i]) continue;
        ++cycles;
        int j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = images[j] - 1;
        }
    }
    return cycles;
}

Permutation Permutation::inverse() const {
    Permutation r;
    for (int i = 0; i < 3; ++i) r.images[images[i] - 1] = i + 1;
    return r;
}

Permutation composePermutations(const Permutation& first, const Permutation& then) {
    Permutation r;
    for (int i = 0; i < 3; ++i) r.images[i] = then.images[first.images[i] - 1];
    return r;
}

namespace {

// Transposition induced by one band generator: a1 -> (1 2), a2 -> (2 3),
// a3 -> (1 3).
Permutation generatorPermutation(int index) {
    switch (index) {
        case 1: return Permutation{{2, 1, 3}};
        case 2: return Permutation{{1, 3, 2}};
        default: return Permutation{{3, 2, 1}};
    }
}

constexpr long long kMaxMaterializedLetters = 1'000'000;

BigInt parseExponent(std::string_view text, std::size_t tokenStart, std::size_t& pos) {
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    std::size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits) throw SyntaxError("malformed exponent", tokenStart);
    return BigInt(std::string(text.substr(start, pos - start)));
}

void appendDeltaPower(Word& w, const BigInt& power) {
    long long n = toLongChecked(power, "delta power in input");
    if (n > kMaxMaterializedLetters / 2 || n < -kMaxMaterializedLetters / 2)
        throw ResourceLimit("delta power too large to expand: " + toString(power));
    for (long long i = 0; i < n; ++i) {
        w.append(2, 1);
        w.append(1, 1);
    }
    for (long long i = 0; i < -n; ++i) {
        w.append(1, -1);
        w.append(2, -1);
    }
}

}  // namespace

Word parse(std::string_view text) {
    Word w;
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
            continue;
        }
        std::size_t tokenStart = pos;
        char c = text[pos];
        if (c == 'a' || c == 's') {
            ++pos;
            if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
                throw SyntaxError("expected generator index after '" + std::string(1, c) + "'", tokenStart);
            int gen = text[pos] - '0';
            ++pos;
            bool ok = (c == 'a') ? (gen >= 1 && gen <= 3) : (gen >= 1 && gen <= 2);
            if (!ok) throw SyntaxError("unknown generator token", tokenStart);
            BigInt exp = 1;
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                exp = parseExponent(text, tokenStart, pos);
            }
            if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])))
                throw SyntaxError("unexpected character in token", tokenStart);
            w.append(gen, exp);  // s1 = a1, s2 = a2
        } else if (c == 'd') {
            ++pos;
            BigInt exp = 1;
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                exp = parseExponent(text, tokenStart, pos);
            }
            if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])))
                throw SyntaxError("unexpected character in token", tokenStart);
            appendDeltaPower(w, exp);
        } else {
            throw SyntaxError("unknown token", tokenStart);
        }
    }
    return w;
}

std::string serialize(const Word& w) {
    std::string out;
    for (const auto& s : w.syllables()) {
        if (!out.empty()) out += ' ';
        out += 'a';
        out += static_cast<char>('0' + s.index);
        if (s.exponent != 1) {
            out += '^';
            out += toString(s.exponent);
        }
    }
    return out;
}

std::string toArtin(const Word& w) {
    std::string out;
    auto emit = [&out](int artinIndex, const BigInt& exp) {
        if (exp == 0) return;
        if (!out.empty()) out += ' ';
        out += 's';
        out += static_cast<char>('0' + artinIndex);
        if (exp != 1) {
            out += '^';
            out += toString(exp);
        }
    };
    for (const auto& s : w.syllables()) {
        if (s.index == 3) {
            emit(2, 1);
            emit(1, s.exponent);
            emit(2, -1);
        } else {
            emit(s.index, s.exponent);
        }
    }
    return out;
}

Permutation permutation(const Word& w) {
    Permutation p;
    for (const auto& s : w.syllables()) {
        if (s.exponent % 2 != 0) p = composePermutations(p, generatorPermutation(s.index));
    }
    return p;
}

int closureComponents(const Word& w) { return permutation(w).cycleCount(); }

Word invertWord(const Word& w) {
    Word out;
    const auto& syls = w.syllables();
    for (auto it = syls.rbegin(); it != syls.rend(); ++it) out.append(it->index, -it->exponent);
    return out;
}

Word concatWords(const Word& a, const Word& b) {
    Word out = a;
    for (const auto& s : b.syllables()) out.append(s.index, s.exponent);
    return out;
}

BigInt exponentSum(const Word& w) {
    BigInt n = 0;
    for (const auto& s : w.syllables()) n += s.exponent;
    return n;
}

Word letter(int index, long long exponent) {
    Word w;
    w.append(index, exponent);
    return w;
}

Word deltaWord(long long power) {
    Word w;
    appendDeltaPower(w, power);
    return w;
}

}  // namespace braid3
