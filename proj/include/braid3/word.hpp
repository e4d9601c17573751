#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "braid3/bigint.hpp"
#include "braid3/errors.hpp"

namespace braid3 {

// Band generator indices live in {1,2,3}; any integer is identified with its
// representative mod 3 (index i+3k is the same generator as index i).
int normIndex(long long i);
BigInt normIndexBig(const BigInt& i);

// One syllable a_i^k with k != 0.
struct Syllable {
    int index = 1;      // in {1,2,3}
    BigInt exponent;    // nonzero

    bool operator==(const Syllable& o) const = default;
};

// A free-group word in the band generators a1, a2, a3. Adjacent syllables
// always have distinct indices; merging and zero-dropping happen on
// construction and after every operation.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Syllable> syllables);

    const std::vector<Syllable>& syllables() const { return syls_; }
    bool empty() const { return syls_.empty(); }

    // Sum of |exponent| over syllables (the letter count |W|).
    BigInt wordLength() const;
    std::size_t sylLength() const { return syls_.size(); }

    void append(int index, const BigInt& exponent);  // merges at the seam

    bool operator==(const Word& o) const { return syls_ == o.syls_; }

private:
    std::vector<Syllable> syls_;
};

// Permutation of the three strands induced by a braid; images[i] is the image
// of strand i+1. Earlier letters of a word act first.
struct Permutation {
    std::array<int, 3> images{1, 2, 3};

    bool isIdentity() const { return images == std::array<int, 3>{1, 2, 3}; }
    int cycleCount() const;
    Permutation inverse() const;
    bool operator==(const Permutation& o) const = default;
};

Permutation composePermutations(const Permutation& first, const Permutation& then);

// Grammar: whitespace-separated tokens `a1|a2|a3|s1|s2|d`, each optionally
// followed by `^<int>`. s1, s2 are the Artin generators; d is the fundamental
// braid and expands to a2 a1 immediately. Throws SyntaxError with the byte
// offset of the bad token.
Word parse(std::string_view text);

// Canonical serialization: `a1 a2^2 a3^-1`; exponent +1 is omitted.
std::string serialize(const Word& w);

// Artin-generator form: a3^e expands to s2 s1^e s2^-1.
std::string toArtin(const Word& w);

Permutation permutation(const Word& w);

// Number of components of the closure = cycle count of the permutation.
int closureComponents(const Word& w);

Word invertWord(const Word& w);
Word concatWords(const Word& a, const Word& b);
BigInt exponentSum(const Word& w);

// Convenience builders used all over the tests and higher modules.
Word letter(int index, long long exponent = 1);
Word deltaWord(long long power = 1);

}  // namespace braid3
