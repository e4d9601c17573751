#include "braid3/knot.hpp"

#include <stdexcept>

#include "braid3/errors.hpp"

namespace braid3 {

namespace {

Permutation deltaPermutation() {
    // delta = a2 a1 sends 1 -> 2 -> 3 -> 1.
    return Permutation{{2, 3, 1}};
}

Permutation generatorPerm(int index) {
    switch (index) {
        case 1: return Permutation{{2, 1, 3}};
        case 2: return Permutation{{1, 3, 2}};
        default: return Permutation{{3, 2, 1}};
    }
}

}  // namespace

const char* sqpStatusName(SqpStatus s) {
    switch (s) {
        case SqpStatus::Positive: return "Positive";
        case SqpStatus::Negative: return "Negative";
        case SqpStatus::Neither: return "Neither";
        default: return "TrivialBoth";
    }
}

Permutation permutationOf(const NormalForm& nf) {
    int um = static_cast<int>(((nf.deltaExp() % 3) + 3) % 3);
    Permutation p;
    for (int i = 0; i < um; ++i) p = composePermutations(p, deltaPermutation());
    const auto& pos = nf.positive();
    for (std::size_t j = 0; j < pos.exponents.size(); ++j)
        if (pos.exponents[j] % 2 != 0) p = composePermutations(p, generatorPerm(pos.indexAt(j)));
    return p;
}

bool isKnot(const NormalForm& nf) { return permutationOf(nf).cycleCount() == 1; }

BigInt infS(const NormalForm& nf) { return toSummit0(nf).representative.inf(); }

BigInt supS(const NormalForm& nf) {
    // sup is minimal exactly where inf is maximal, so the summit
    // representative of nf itself carries the value; no inverse needed.
    return toSummit0(nf).representative.sup();
}

BigInt classShortestLength(const NormalForm& nf) {
    NormalForm rep = toSummit0(nf).representative;
    BigInt u = rep.inf();
    BigInt lenP = rep.len();
    BigInt n = lenP;
    if (u > 0) n += 2 * u;
    BigInt ell = -u - lenP;
    if (ell > 0) n += 2 * ell;
    return n;
}

ShortestWord shortestWord(const NormalForm& nf) {
    NormalForm rep = toSummit0(nf).representative;
    const BigInt u = rep.inf();
    const BigInt lenP = rep.len();
    Word out;
    if (u >= 0) {
        out = concatWords(deltaWord(toLongChecked(u, "delta power")), rep.positive().toWord());
    } else if (-lenP < u) {
        // Split P = P1 P2 at letter |P1| = -u; the word is (P1*)^{-1} P2.
        BigInt cut = -u;
        Word p1, p2;
        const auto& p = rep.positive();
        BigInt seen = 0;
        for (std::size_t j = 0; j < p.exponents.size(); ++j) {
            const BigInt& k = p.exponents[j];
            BigInt toP1 = cut - seen;
            if (toP1 < 0) toP1 = 0;
            if (toP1 > k) toP1 = k;
            if (toP1 > 0) p1.append(p.indexAt(j), toP1);
            if (k - toP1 > 0) p2.append(p.indexAt(j), k - toP1);
            seen += k;
        }
        out = concatWords(invertWord(rightComplement(p1)), p2);
    } else {
        BigInt ell = -u - lenP;
        out = concatWords(deltaWord(toLongChecked(-ell, "delta power")),
                          invertWord(rightComplement(rep.positive().toWord())));
    }
    if (out.wordLength() != classShortestLength(nf))
        throw std::logic_error("shortest word has the wrong length");
    if (!(normalize(out) == rep)) throw std::logic_error("shortest word does not normalize to the representative");
    return {std::move(out), std::move(rep), true};
}

BigInt genus(const NormalForm& nf) {
    if (!isKnot(nf)) throw NotAKnot();
    BigInt n = classShortestLength(nf);
    if (n % 2 != 0) throw std::logic_error("knot class with odd minimal word length");
    return n / 2 - 1;
}

bool isUnknot(const NormalForm& nf) { return isKnot(nf) && genus(nf) == 0; }

SqpStatus sqpStatus(const NormalForm& nf) {
    BigInt lo = infS(nf);
    BigInt hi = supS(nf);
    if (lo >= 0 && hi <= 0) return SqpStatus::TrivialBoth;
    if (lo >= 0) return SqpStatus::Positive;
    if (hi <= 0) return SqpStatus::Negative;
    return SqpStatus::Neither;
}

BandedSurfaceStats bandedSurface(const Word& w) {
    BandedSurfaceStats s;
    BigInt n = w.wordLength();
    s.eulerCharacteristic = 3 - n;
    if (closureComponents(w) == 1) s.genusIfKnot = n / 2 - 1;
    return s;
}

}  // namespace braid3
