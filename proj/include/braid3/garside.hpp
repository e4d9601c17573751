#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "braid3/bigint.hpp"
#include "braid3/word.hpp"

namespace braid3 {

// Positive word whose syllable indices step by exactly +1 (mod 3); the index
// of syllable j is start+j. The empty word stores start = 1 by convention so
// that structural equality is element equality.
struct NondecreasingPositive {
    int start = 1;
    std::vector<BigInt> exponents;  // all >= 1

    bool empty() const { return exponents.empty(); }
    std::size_t sylLength() const { return exponents.size(); }
    BigInt length() const;
    int indexAt(std::size_t j) const { return normIndex(start + static_cast<long long>(j)); }
    int lastIndex() const { return indexAt(exponents.size() - 1); }
    Word toWord() const;

    bool operator==(const NondecreasingPositive& o) const = default;
};

// The unique expression delta^u P of a 3-braid. Structural equality of normal
// forms is element equality; all higher layers compare through it.
class NormalForm {
public:
    NormalForm() = default;  // identity
    NormalForm(BigInt u, NondecreasingPositive p);

    static NormalForm identity() { return NormalForm(); }
    static NormalForm deltaPower(BigInt u);

    const BigInt& deltaExp() const { return u_; }   // inf
    const NondecreasingPositive& positive() const { return p_; }

    BigInt inf() const { return u_; }
    BigInt sup() const { return u_ + p_.length(); }
    BigInt len() const { return p_.length(); }
    long long syl() const { return static_cast<long long>(p_.sylLength()); }
    BigInt esyl() const { return u_ + syl(); }
    bool isIdentity() const { return u_ == 0 && p_.empty(); }

    // Compact canonical key; used as a hash-map key by conjugacy searches.
    std::string key() const;

    bool operator==(const NormalForm& o) const { return u_ == o.u_ && p_ == o.p_; }
    bool operator<(const NormalForm& o) const;

private:
    BigInt u_;
    NondecreasingPositive p_;
};

struct GarsideStats {
    BigInt inf;
    BigInt sup;
    BigInt canonicalLength;
    long long sylLength = 0;
    BigInt extSylLength;
};

// Incremental Garside rewriting engine. Feeding syllables and delta powers
// left to right maintains the invariant state = delta^u * (reduced stack);
// a whole syllable is absorbed in O(1) amortized stack operations, so pure
// delta powers and large positive exponents never get expanded letterwise.
class Normalizer {
public:
    void pushSyllable(int index, const BigInt& exponent);
    void pushDelta(const BigInt& power);
    void pushWord(const Word& w);
    void pushNormalForm(const NormalForm& nf);
    NormalForm finish();

private:
    void pushPositive(int actualIndex, BigInt count);

    BigInt u_ = 0;
    int shift_ = 0;  // actual index of entry = normIndex(raw + shift_)
    std::vector<Syllable> stack_;
};

NormalForm normalize(const Word& w);

// Any word that normalizes back to nf; delta powers are expanded, so this
// materializes O(|u| + |P|) letters.
Word nfToWord(const NormalForm& nf);

// The rotation automorphism applied t times: indices shift by t, u unchanged.
// Equals conjugation by delta^t.
NormalForm tau(const NormalForm& nf, long long t);
Word tauWord(const Word& w, long long t);

NormalForm multiply(const NormalForm& x, const NormalForm& y);

// Conjugate c^{-1} x c for a single-letter or word conjugator.
NormalForm conjugateByLetter(const NormalForm& x, int index, int sign);
NormalForm conjugateByWord(const NormalForm& x, const Word& c);

// Right complement P* of a positive word: the positive word with P P* =
// delta^{|P|}, computed letterwise. Throws NotPositive on negative exponents.
Word rightComplement(const Word& p);
NondecreasingPositive rightComplement(const NondecreasingPositive& p);

// Closed-form inverse delta^{-sup} tau^{-sup}(P*); no generic rewriting.
NormalForm inverse(const NormalForm& nf);

GarsideStats stats(const NormalForm& nf);

// Serialization `d^<u> | <P>`; the identity prints `d^0 |`.
std::string serializeNormalForm(const NormalForm& nf);

}  // namespace braid3
