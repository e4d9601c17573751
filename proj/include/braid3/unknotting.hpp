#pragma once

#include <optional>
#include <set>
#include <vector>

#include "braid3/knot.hpp"

namespace braid3 {

// A class-minimal word of the shape W a1^{+-2} representing a conjugate of
// the input; deleting the trailing square is one crossing change.
struct WaaForm {
    Word w;
    int sign = 1;   // sign of the trailing a1^{2} / a1^{-2}
    Word fullWord;  // w followed by a1^{2 sign}
};

struct UnknottingStep {
    Word word;                    // class-minimal word before the change
    std::size_t changedPosition;  // letter offset of the deleted a1^{+-2}
};

// Crossing-change sequence ending at the unknot. Between steps the word is
// re-expressed by conjugation (the closure is unchanged), so step i+1's word
// represents the same knot as step i's word with the square deleted.
struct UnknottingSequence {
    std::vector<UnknottingStep> steps;
    Word finalWord;
};

// Certificate that u(K) < g(K): a class-minimal conjugate word
// a1 a2^{+-2k} a1^{-1} W together with the crossing-change bound it yields.
struct Witness {
    BigInt k;       // >= 1
    int sign = 1;   // sign of the a2-block
    Word tail;      // W
    Word fullWord;  // a1 a2^{2k sign} a1^{-1} W
    BigInt uBound;  // <= genus - 1
};

// Decomposition delta^u a1^{2k} Q1 (a_{i+1} ... a_{i+2p-2}) Q2 of a conjugate
// in the minimal summit class, with the structural side conditions:
// Q1 empty or (starts with a2, ends with a_i^{>=2}); Q2 empty or (starts with
// a_{i+2p-1}^{>=2}, ends with a_{3-u}).
struct GeneralForm {
    BigInt u;
    BigInt k;
    int i = 1;
    BigInt p;
    Word q1;
    Word q2;
    NormalForm element;  // the decomposed conjugate itself

    NormalForm reassembled() const;
};

enum class KnotLabel { SQP, MirrorSQP, FigureEight, TwoBraid, ConnectedSumTwoBraids };
enum class Relation { EQUAL, STRICT, OPEN };

const char* knotLabelName(KnotLabel l);
const char* relationName(Relation r);

struct Classification {
    std::set<KnotLabel> labels;
    Relation relation = Relation::EQUAL;
    std::optional<Witness> witness;
    Word canonicalRep;
    BigInt genus;
};

// A conjugate in the minimal summit class whose last syllable has index 1 and
// even exponent >= 2, found by cycling an even syllable to the back.
NormalForm squareTailForm(const NormalForm& nf);

// Class-minimal word W a1^{+-2} for a nontrivial knot conjugate.
WaaForm waaForm(const NormalForm& nf);

// Crossing-change sequence of length <= genus reaching the unknot.
UnknottingSequence unknottingSequence(const NormalForm& nf);

// Requires the minimal syllable length in the conjugacy class of the inverse
// to be at least 3; PreconditionFailed otherwise.
GeneralForm generalDecomposition(const NormalForm& nf);

// Searches the summit sets of nf and its inverse for an interior even
// syllable pattern a_j a_{j+1}^{2k} a_{j+2} meeting the delta-power bound and
// emits the best verified witness; NoPattern when none applies.
Witness strictnessWitness(const NormalForm& nf);

// Decision tree for when u(K) = g(K) can hold, with certificates.
Classification classify(const NormalForm& nf);

}  // namespace braid3
