#pragma once

#include <optional>
#include <vector>

#include "braid3/garside.hpp"

namespace braid3 {

enum class StepKind { InfRaise, SylReduce, PositiveCycle, TauShift, SimpleElement };

// One recorded conjugation: applying the step to x yields c^{-1} x c.
struct ConjugationStep {
    NormalForm by;
    StepKind kind = StepKind::SimpleElement;
};

struct SummitData {
    NormalForm representative;
    NormalForm conjugator;  // c with c^{-1} alpha c = representative
    std::vector<ConjugationStep> trail;
    std::optional<std::vector<NormalForm>> summitSet;
};

// Summit membership: len <= 1 or esyl != 2 (mod 3).
bool isSummit(const NormalForm& nf);

// Minimal-syllable summit membership: syl <= 1 or esyl == 0 (mod 3).
// Throws NotSummit when nf is not a summit element.
bool isSummit0(const NormalForm& nf);

// Positive conjugate by the last letter of P; raises inf by exactly 1.
// Requires len >= 2 and esyl == 2 (mod 3), else MoveNotApplicable.
NormalForm infRaiseMove(const NormalForm& nf, ConjugationStep* step = nullptr);

// Positive conjugate by the last syllable of P; lowers syl by exactly 1 and
// lands at esyl == 0 (mod 3). Requires syl >= 2 and esyl == 1 (mod 3).
NormalForm sylReduceMove(const NormalForm& nf, ConjugationStep* step = nullptr);

// Iterates infRaiseMove to the summit level, then sylReduceMove to minimal
// syllable length. Always terminates: each raise increases inf (bounded by
// the maximal inf in the class), each reduce lowers syl.
SummitData toSummit0(const NormalForm& nf);

// The full summit set: closure of the toSummit0 representative under
// conjugation by the simple elements {a1, a2, a3, delta}, retaining exactly
// the conjugates of maximal inf (equivalently minimal len). Sorted output.
std::vector<NormalForm> summitSet(const NormalForm& nf);

// Conjugacy decision: a verified conjugator c with c^{-1} x c = y, or absent.
std::optional<NormalForm> areConjugate(const NormalForm& x, const NormalForm& y);

// Exponent sum of any word representing nf (2u + |P|); conjugacy invariant.
BigInt elementExponentSum(const NormalForm& nf);

}  // namespace braid3
