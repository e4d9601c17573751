#pragma once

#include <optional>

#include "braid3/conjugacy.hpp"
#include "braid3/garside.hpp"

namespace braid3 {

// Seifert surface built from three disks plus one band per letter.
struct BandedSurfaceStats {
    BigInt eulerCharacteristic;              // 3 - |W|
    std::optional<BigInt> genusIfKnot;       // |W|/2 - 1 when the closure is a knot
};

enum class SqpStatus { Positive, Negative, Neither, TrivialBoth };

const char* sqpStatusName(SqpStatus s);

// Strand permutation of the closure, computed directly on the normal form.
Permutation permutationOf(const NormalForm& nf);

bool isKnot(const NormalForm& nf);

// Maximal inf / minimal sup over the conjugacy class.
BigInt infS(const NormalForm& nf);
BigInt supS(const NormalForm& nf);

// Minimal band-word length over the conjugacy class, read off the summit
// representative delta^u P as |P| + 2 max(u,0) + 2 max(-u-|P|, 0).
BigInt classShortestLength(const NormalForm& nf);

// A concrete class-minimal word. It represents the summit representative (a
// conjugate of nf), not nf itself; callers needing nf compose with the
// toSummit0 conjugator.
struct ShortestWord {
    Word word;
    NormalForm representative;  // normalize(word) == representative
    bool classMinimal = true;
};

ShortestWord shortestWord(const NormalForm& nf);

// Genus of the knot closure via the minimal banded surface; NotAKnot when the
// closure has more than one component.
BigInt genus(const NormalForm& nf);

bool isUnknot(const NormalForm& nf);

// Positive iff some conjugate is a positive band word (infS >= 0); Negative
// iff supS <= 0; TrivialBoth only for the identity.
SqpStatus sqpStatus(const NormalForm& nf);

BandedSurfaceStats bandedSurface(const Word& w);

}  // namespace braid3
