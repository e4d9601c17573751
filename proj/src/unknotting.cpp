#include "braid3/unknotting.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "braid3/errors.hpp"

namespace braid3 {

namespace {

int mod3i(const BigInt& x) {
    BigInt r = x % 3;
    if (r < 0) r += 3;
    return static_cast<int>(r);
}

int esylMod3(const NormalForm& nf) { return mod3i(nf.esyl()); }

// Letters [from, from+count) of a positive word given by its syllables.
Word letterRange(const Word& w, long long from, long long count) {
    Word out;
    long long pos = 0;
    for (const auto& s : w.syllables()) {
        long long k = toLongChecked(s.exponent, "syllable exponent");
        if (k < 0) throw std::logic_error("letterRange expects a positive word");
        long long lo = std::max(from, pos);
        long long hi = std::min(from + count, pos + k);
        if (hi > lo) out.append(s.index, hi - lo);
        pos += k;
    }
    if (pos < from + count) throw std::logic_error("letterRange out of bounds");
    return out;
}

// Positive conjugate moving the first j syllables of P to the back:
// delta^u P1 P2 -> delta^u P2 tau^{-u}(P1), a conjugation by tau^{-u}(P1).
NormalForm cycleSyllables(const NormalForm& nf, std::size_t j) {
    if (j == 0) return nf;
    const auto& p = nf.positive();
    if (j >= p.sylLength()) throw std::logic_error("cycle amount out of range");
    Word p1;
    for (std::size_t s = 0; s < j; ++s) p1.append(p.indexAt(s), p.exponents[s]);
    NormalForm out = conjugateByWord(nf, tauWord(p1, -mod3i(nf.deltaExp())));
    if (out.inf() != nf.inf() || out.len() != nf.len())
        throw std::logic_error("positive cycling left the summit level");
    return out;
}

Word dropTrailingSquare(const Word& full, int sign) {
    auto syls = full.syllables();
    if (syls.empty() || syls.back().index != 1)
        throw std::logic_error("word does not end with an a1 block");
    Word out;
    for (std::size_t s = 0; s + 1 < syls.size(); ++s) out.append(syls[s].index, syls[s].exponent);
    out.append(1, syls.back().exponent - 2 * sign);
    return out;
}

}  // namespace

const char* knotLabelName(KnotLabel l) {
    switch (l) {
        case KnotLabel::SQP: return "SQP";
        case KnotLabel::MirrorSQP: return "MirrorSQP";
        case KnotLabel::FigureEight: return "FigureEight";
        case KnotLabel::TwoBraid: return "TwoBraid";
        default: return "ConnectedSumTwoBraids";
    }
}

const char* relationName(Relation r) {
    switch (r) {
        case Relation::EQUAL: return "EQUAL";
        case Relation::STRICT: return "STRICT";
        default: return "OPEN";
    }
}

NormalForm GeneralForm::reassembled() const {
    Word w;
    w.append(1, 2 * k);
    for (const auto& s : q1.syllables()) w.append(s.index, s.exponent);
    long long run = toLongChecked(2 * p - 2, "run length");
    for (long long j = 1; j <= run; ++j) w.append(normIndex(i + j), 1);
    for (const auto& s : q2.syllables()) w.append(s.index, s.exponent);
    Normalizer n;
    n.pushDelta(u);
    n.pushWord(w);
    return n.finish();
}

NormalForm squareTailForm(const NormalForm& nf) {
    if (!isKnot(nf)) throw NotAKnot();
    NormalForm rep = toSummit0(nf).representative;
    if (rep.syl() == 0) throw SylZero();
    const auto& exps = rep.positive().exponents;
    std::size_t r = exps.size();
    std::size_t even = r;
    for (std::size_t j = r; j-- > 0;) {
        if (exps[j] % 2 == 0) {
            even = j;
            break;
        }
    }
    if (even == r) throw std::logic_error("minimal summit form of a knot has no even syllable");
    if (even != r - 1) rep = cycleSyllables(rep, even + 1);
    // tau-normalize the last syllable to index 1
    rep = tau(rep, 1 - rep.positive().lastIndex());
    const auto& p = rep.positive();
    if (p.lastIndex() != 1 || p.exponents.back() < 2 || p.exponents.back() % 2 != 0)
        throw std::logic_error("squareTailForm shape check failed");
    return rep;
}

WaaForm waaForm(const NormalForm& nf) {
    if (!isKnot(nf)) throw NotAKnot();
    if (isUnknot(nf)) throw IsUnknot();
    NormalForm rep = toSummit0(nf).representative;

    WaaForm out;
    if (rep.len() == 0) {
        BigInt u = rep.inf();
        if (u >= 2) {
            // delta^u = (a2 a1)^{u-2} a1 a2 a1^2
            out.sign = 1;
            out.w = concatWords(deltaWord(toLongChecked(u - 2, "delta power")),
                                concatWords(letter(1), letter(2)));
        } else if (u <= -2) {
            Word wp = concatWords(deltaWord(toLongChecked(-u - 2, "delta power")),
                                  concatWords(letter(1), letter(2)));
            out.sign = -1;
            out.w = invertWord(wp);
        } else {
            throw std::logic_error("pure delta knot with |u| < 2 is the unknot or a link");
        }
    } else if (rep.sup() >= 2) {
        NormalForm g = squareTailForm(nf);
        BigInt u = g.inf();
        Word full;
        if (u >= 0) {
            full = concatWords(deltaWord(toLongChecked(u, "delta power")), g.positive().toWord());
        } else {
            Word q = g.positive().toWord();
            long long cut = toLongChecked(-u, "prefix length");
            long long total = toLongChecked(q.wordLength(), "word length");
            Word q1 = letterRange(q, 0, cut);
            Word q2 = letterRange(q, cut, total - cut);
            full = concatWords(invertWord(rightComplement(q1)), q2);
        }
        out.sign = 1;
        out.w = dropTrailingSquare(full, 1);
    } else if (rep.inf() <= -2) {
        WaaForm mir = waaForm(inverse(nf));
        if (mir.sign != 1) throw std::logic_error("mirrored form expected a positive square");
        out.sign = -1;
        out.w = invertWord(mir.w);
    } else {
        throw std::logic_error("residual shape is the unknot and was excluded");
    }
    out.fullWord = concatWords(out.w, letter(1, out.sign * 2));
    if (out.fullWord.wordLength() != classShortestLength(nf))
        throw std::logic_error("W a1^{+-2} word is not class-minimal");
    if (closureComponents(out.fullWord) != 1) throw std::logic_error("W a1^{+-2} closure is not a knot");
    if (elementExponentSum(normalize(out.fullWord)) != elementExponentSum(nf))
        throw std::logic_error("W a1^{+-2} word left the conjugacy class");
    return out;
}

UnknottingSequence unknottingSequence(const NormalForm& nf) {
    if (!isKnot(nf)) throw NotAKnot();
    UnknottingSequence seq;
    BigInt g = genus(nf);
    NormalForm cur = nf;
    while (!isUnknot(cur)) {
        WaaForm wf = waaForm(cur);
        std::size_t pos = static_cast<std::size_t>(toLongChecked(wf.fullWord.wordLength() - 2, "offset"));
        seq.steps.push_back({wf.fullWord, pos});
        cur = normalize(wf.w);
        if (!isKnot(cur)) throw std::logic_error("crossing change broke the knot closure");
        if (BigInt(seq.steps.size()) > g) throw std::logic_error("unknotting sequence exceeded the genus bound");
    }
    seq.finalWord = shortestWord(cur).word;
    return seq;
}

GeneralForm generalDecomposition(const NormalForm& nf) {
    if (!isKnot(nf)) throw NotAKnot();
    NormalForm gamma = toSummit0(inverse(nf)).representative;
    if (gamma.syl() < 3)
        throw PreconditionFailed("minimal syllable length of the inverse class is below 3");

    // Cycle an even syllable of the inverse form into an interior position and
    // pin its index to 2, so the positive part contains a1 a2^{2p} a3.
    {
        const auto& exps = gamma.positive().exponents;
        std::size_t r = exps.size(), e = r;
        for (std::size_t j = 0; j < r; ++j) {
            if (exps[j] % 2 == 0) {
                e = j;
                break;
            }
        }
        if (e == r) throw std::logic_error("minimal summit form of a knot has no even syllable");
        std::size_t j = (e == 0) ? r - 1 : e - 1;
        gamma = cycleSyllables(gamma, j);
        gamma = tau(gamma, 2 - gamma.positive().indexAt(1));
        if (!isSummit0(gamma)) throw std::logic_error("cycled inverse form left the minimal class");
    }
    const BigInt twoP = gamma.positive().exponents[1];
    const BigInt c1 = gamma.positive().exponents[0];
    const BigInt qLen = gamma.len();

    NormalForm abar = inverse(gamma);
    const BigInt u = abar.inf();

    // The complement image of a1 a2^{2p} a3 sits at letters
    // [lenR2, lenR2 + 2p + 2) of the positive part of abar.
    Word pbar = abar.positive().toWord();
    BigInt lenR2 = qLen - (c1 - 1) - (twoP + 2);
    long long total = toLongChecked(qLen, "word length");
    long long suffix = toLongChecked(c1 + 1, "suffix length");
    Word bWord = letterRange(pbar, total - suffix, suffix);
    NormalForm beta = conjugateByWord(abar, invertWord(bWord));  // B abar B^{-1}
    if (beta.inf() != u || beta.len() != abar.len() || esylMod3(beta) != 0)
        throw std::logic_error("front-block conjugate is not in the minimal summit class");

    long long runLen = toLongChecked(twoP - 2, "run length");
    long long rS = beta.syl() - runLen;
    if (rS < 1) throw std::logic_error("front block vanished");
    {
        const auto& exps = beta.positive().exponents;
        for (long long j = rS; j < beta.syl(); ++j)
            if (exps[static_cast<std::size_t>(j)] != 1) throw std::logic_error("run syllable not single");
        if (exps[0] < 2 || exps[static_cast<std::size_t>(rS - 1)] < 2)
            throw std::logic_error("front block does not start and end squared");
    }

    // Rotate the first even front-block syllable to the very front, index 1.
    std::size_t q = static_cast<std::size_t>(rS);
    for (std::size_t j = 0; j < static_cast<std::size_t>(rS); ++j) {
        if (beta.positive().exponents[j] % 2 == 0) {
            q = j;
            break;
        }
    }
    if (q == static_cast<std::size_t>(rS)) throw std::logic_error("front block has no even syllable");
    beta = cycleSyllables(beta, q);
    beta = tau(beta, 1 - beta.positive().start);
    if (!isSummit0(beta)) throw std::logic_error("final form left the minimal summit class");

    GeneralForm gf;
    gf.element = beta;
    gf.u = u;
    const auto& p = beta.positive();
    if (p.start != 1 || p.exponents[0] % 2 != 0) throw std::logic_error("front syllable not a1^{2k}");
    gf.k = p.exponents[0] / 2;
    gf.p = twoP / 2;
    std::size_t q1Count = static_cast<std::size_t>(rS) - 1 - q;
    for (std::size_t s = 1; s <= q1Count; ++s) gf.q1.append(p.indexAt(s), p.exponents[s]);
    gf.i = normIndex(1 + static_cast<long long>(q1Count));
    for (std::size_t s = q1Count + 1 + static_cast<std::size_t>(runLen); s < p.sylLength(); ++s)
        gf.q2.append(p.indexAt(s), p.exponents[s]);

    // Side conditions: run indices, the squares framing the run, the tail index.
    for (long long j = 1; j <= runLen; ++j) {
        std::size_t s = q1Count + static_cast<std::size_t>(j);
        if (p.indexAt(s) != normIndex(gf.i + j) || p.exponents[s] != 1)
            throw std::logic_error("run block malformed");
    }
    if (!gf.q1.empty()) {
        if (gf.q1.syllables().front().index != 2 || gf.q1.syllables().back().index != gf.i ||
            gf.q1.syllables().back().exponent < 2)
            throw std::logic_error("Q1 side condition failed");
    }
    if (!gf.q2.empty()) {
        if (gf.q2.syllables().front().index != normIndex(gf.i + toLongChecked(2 * gf.p - 1, "idx")) ||
            gf.q2.syllables().front().exponent < 2 ||
            gf.q2.syllables().back().index != normIndex(3 - mod3i(u)))
            throw std::logic_error("Q2 side condition failed");
    }
    if (!(gf.reassembled() == beta)) throw std::logic_error("decomposition does not reassemble");
    return gf;
}

namespace {

// One direction of the witness pattern scan: looks for an interior even
// syllable a_j a_{j+1}^{2k} a_{j+2} with m <= |P| - (2k+1) in every summit
// element of `cls`, builds the rotated class-minimal word and scores it.
void scanWitnesses(const NormalForm& cls, int dir, const BigInt& clsMin, const BigInt& g,
                   std::map<std::string, Witness>& found) {
    for (const NormalForm& beta : summitSet(cls)) {
        BigInt m = -beta.inf();
        if (m < 1) continue;
        const auto& exps = beta.positive().exponents;
        std::size_t r = exps.size();
        if (r < 3) continue;
        for (std::size_t t = 1; t + 1 < r; ++t) {
            if (exps[t] % 2 != 0) continue;
            const BigInt twoK = exps[t];
            if (m > beta.len() - (twoK + 1)) continue;
            NormalForm host = tau(beta, 2 - beta.positive().indexAt(t));
            Word pw = host.positive().toWord();
            BigInt prefB = 0;
            for (std::size_t s = 0; s < t; ++s) prefB += exps[s];
            long long pref = toLongChecked(prefB - 1, "prefix length");
            long long block = toLongChecked(twoK + 2, "pattern length");
            long long totalL = toLongChecked(host.len(), "length");
            Word p1 = letterRange(pw, 0, pref);
            Word p2 = letterRange(pw, pref + block, totalL - pref - block);
            long long want = toLongChecked(m - 1, "target prefix");
            long long have = pref;
            if (want < have) {
                long long d = have - want;
                Word moved = letterRange(p1, 0, d);
                p1 = letterRange(p1, d, have - d);
                p2 = concatWords(p2, tauWord(moved, mod3i(m)));
            } else if (want > have) {
                long long d = want - have;
                long long p2len = toLongChecked(p2.wordLength(), "p2 length");
                if (d > p2len) throw std::logic_error("witness rotation out of letters");
                Word moved = letterRange(p2, p2len - d, d);
                p2 = letterRange(p2, 0, p2len - d);
                p1 = concatWords(tauWord(moved, -mod3i(m)), p1);
            }
            Word tail = concatWords(tauWord(p2, -1), invertWord(rightComplement(p1)));
            if (dir < 0) tail = invertWord(tail);
            Word full;
            full.append(1, 1);
            full.append(2, dir > 0 ? twoK : -twoK);
            full.append(1, -1);
            full = concatWords(full, tail);
            if (full.wordLength() != clsMin) throw std::logic_error("witness word is not class-minimal");
            if (closureComponents(full) != 1) throw std::logic_error("witness closure is not a knot");
            std::string key = serialize(full);
            if (found.contains(key)) continue;
            NormalForm tailNf = normalize(tail);
            if (!isKnot(tailNf)) throw std::logic_error("witness tail closure is not a knot");
            BigInt uB = BigInt(unknottingSequence(tailNf).steps.size()) + twoK / 2;
            if (uB > g - 1) throw std::logic_error("witness bound does not beat the genus");
            Witness w;
            w.k = twoK / 2;
            w.sign = dir;
            w.tail = std::move(tail);
            w.fullWord = full;
            w.uBound = uB;
            found.emplace(std::move(key), std::move(w));
        }
    }
}

}  // namespace

Witness strictnessWitness(const NormalForm& nf) {
    if (!isKnot(nf)) throw NotAKnot();
    if (sqpStatus(nf) != SqpStatus::Neither)
        throw PreconditionFailed("witness search requires a class that is neither positive nor negative");
    BigInt g = genus(nf);
    BigInt clsMin = classShortestLength(nf);
    std::map<std::string, Witness> found;
    scanWitnesses(nf, +1, clsMin, g, found);
    scanWitnesses(inverse(nf), -1, clsMin, g, found);
    if (found.empty()) throw NoPattern();
    const Witness* best = nullptr;
    std::string bestKey;
    for (const auto& [key, w] : found) {
        if (!best || w.uBound < best->uBound || (w.uBound == best->uBound && key < bestKey)) {
            best = &w;
            bestKey = key;
        }
    }
    return *best;
}

namespace {

// A knot closes a 2-braid iff it is conjugate to a1^q a2^{+-1} for the odd
// q = +-(2g+1) matching the exponent sum.
std::optional<Word> twoBraidRep(const NormalForm& nf, const BigInt& g) {
    BigInt e = elementExponentSum(nf);
    for (int qs : {1, -1}) {
        BigInt q = qs * (2 * g + 1);
        for (int eps : {1, -1}) {
            if (q + eps != e) continue;
            Word cand;
            cand.append(1, q);
            cand.append(2, eps);
            if (areConjugate(nf, normalize(cand))) return cand;
        }
    }
    return std::nullopt;
}

}  // namespace

Classification classify(const NormalForm& nf) {
    if (!isKnot(nf)) throw NotAKnot();
    Classification cls;
    cls.genus = genus(nf);

    auto strict = [&cls, &nf]() {
        cls.relation = Relation::STRICT;
        cls.witness = strictnessWitness(nf);
        cls.canonicalRep = cls.witness->fullWord;
    };

    SqpStatus st = sqpStatus(nf);
    if (st == SqpStatus::Positive || st == SqpStatus::Negative) {
        cls.relation = Relation::EQUAL;
        if (st == SqpStatus::Positive) {
            cls.labels.insert(KnotLabel::SQP);
            cls.canonicalRep = shortestWord(nf).word;
        } else {
            cls.labels.insert(KnotLabel::MirrorSQP);
            cls.canonicalRep = invertWord(shortestWord(inverse(nf)).word);
        }
        if (auto tb = twoBraidRep(nf, cls.genus)) cls.labels.insert(KnotLabel::TwoBraid);
        return cls;
    }

    NormalForm rep = toSummit0(nf).representative;
    NormalForm repInv = toSummit0(inverse(nf)).representative;

    auto caseSingleSyllable = [&](const NormalForm& r) {
        // delta^{-(3m+1)} a_i^{2p}
        BigInt u = r.inf();
        if ((-u - 1) % 3 != 0) throw std::logic_error("single-syllable knot form with esyl != 0");
        BigInt m = (-u - 1) / 3;
        BigInt twoP = r.positive().exponents[0];
        if (twoP % 2 != 0) throw std::logic_error("single-syllable knot form with odd exponent");
        if (m == 0) {
            auto tb = twoBraidRep(nf, cls.genus);
            if (!tb) throw std::logic_error("2-braid shape did not verify");
            cls.relation = Relation::EQUAL;
            cls.labels.insert(KnotLabel::TwoBraid);
            cls.canonicalRep = *tb;
        } else {
            if (3 * m + 1 > twoP - 1)
                throw std::logic_error("negative-braid shape should have been caught earlier");
            strict();
        }
    };

    auto caseTwoSyllables = [&](const NormalForm& r) {
        // delta^{-(3m+2)} a_i^{2p} a_{i+1}^{2q}
        BigInt u = r.inf();
        if ((-u - 2) % 3 != 0) throw std::logic_error("two-syllable knot form with esyl != 0");
        BigInt m = (-u - 2) / 3;
        BigInt e0 = r.positive().exponents[0];
        BigInt e1 = r.positive().exponents[1];
        if (e0 % 2 != 0 || e1 % 2 != 0) throw std::logic_error("two-syllable knot form with odd exponent");
        if (m == 0 && e0 == 2 && e1 == 2) {
            cls.relation = Relation::EQUAL;
            cls.labels.insert(KnotLabel::FigureEight);
            cls.canonicalRep = parse("a1^-1 a2 a1^-1 a2");
        } else {
            strict();
        }
    };

    if (rep.syl() == 1) {
        caseSingleSyllable(rep);
    } else if (repInv.syl() == 1) {
        caseSingleSyllable(repInv);
    } else if (rep.syl() == 2) {
        caseTwoSyllables(rep);
    } else if (repInv.syl() == 2) {
        caseTwoSyllables(repInv);
    } else if ((rep.inf() == -1 || rep.inf() == -2) || (repInv.inf() == -1 || repInv.inf() == -2)) {
        strict();
    } else {
        GeneralForm gf = generalDecomposition(nf);
        BigInt m = -gf.u;
        if (m < 3) throw std::logic_error("general case entered with small delta power");
        BigInt qLen = gf.q1.wordLength() + gf.q2.wordLength() + 2 * gf.p - 2;
        BigInt l1 = gf.q1.wordLength();
        BigInt l2 = gf.q2.wordLength();
        if (m <= qLen - 1 || l1 == 2 || l2 == 2 || l1 >= 3 || l2 >= 3) {
            strict();
        } else {
            if (l1 != 0 || l2 != 0) throw std::logic_error("side words of length 1 are impossible");
            if (gf.k < 2 || gf.p < 2) throw std::logic_error("composite shape needs both parameters >= 2");
            if (m >= qLen + 3) {
                strict();
            } else {
                if (m != 2 * gf.p - 1) throw std::logic_error("composite shape delta power mismatch");
                cls.relation = Relation::OPEN;
                cls.labels.insert(KnotLabel::ConnectedSumTwoBraids);
                Word repWord;
                repWord.append(1, 2 * gf.k - 1);
                repWord.append(2, -(2 * gf.p - 1));
                if (!areConjugate(nf, normalize(repWord)))
                    throw std::logic_error("composite representative did not verify");
                cls.canonicalRep = std::move(repWord);
            }
        }
    }
    return cls;
}

}  // namespace braid3
