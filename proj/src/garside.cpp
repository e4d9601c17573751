#include "braid3/garside.hpp"

#include <stdexcept>

#include "braid3/errors.hpp"

namespace braid3 {

namespace {

constexpr long long kMaxMaterializedLetters = 1'000'000;

int mod3(const BigInt& x) {
    BigInt r = x % 3;
    if (r < 0) r += 3;
    return static_cast<int>(r);
}

void checkMaterializable(const BigInt& letters, const char* what) {
    if (letters > kMaxMaterializedLetters)
        throw ResourceLimit(std::string(what) + " would require " + toString(letters) + " letters");
}

}  // namespace

BigInt NondecreasingPositive::length() const {
    BigInt n = 0;
    for (const auto& e : exponents) n += e;
    return n;
}

Word NondecreasingPositive::toWord() const {
    Word w;
    for (std::size_t j = 0; j < exponents.size(); ++j) w.append(indexAt(j), exponents[j]);
    return w;
}

NormalForm::NormalForm(BigInt u, NondecreasingPositive p) : u_(std::move(u)), p_(std::move(p)) {
    if (p_.empty()) {
        p_.start = 1;
    } else {
        p_.start = normIndex(p_.start);
        for (const auto& e : p_.exponents)
            if (e < 1) throw std::invalid_argument("normal form exponents must be positive");
    }
}

NormalForm NormalForm::deltaPower(BigInt u) { return NormalForm(std::move(u), {}); }

std::string NormalForm::key() const {
    std::string k = toString(u_);
    k += '|';
    k += static_cast<char>('0' + p_.start);
    for (const auto& e : p_.exponents) {
        k += ',';
        k += toString(e);
    }
    return k;
}

bool NormalForm::operator<(const NormalForm& o) const {
    if (u_ != o.u_) return u_ < o.u_;
    if (p_.start != o.p_.start) return p_.start < o.p_.start;
    return p_.exponents < o.p_.exponents;
}

void Normalizer::pushPositive(int actualIndex, BigInt count) {
    while (count > 0) {
        if (stack_.empty()) {
            stack_.push_back({normIndex(actualIndex - shift_), count});
            return;
        }
        int top = normIndex(stack_.back().index + shift_);
        if (top == actualIndex) {
            stack_.back().exponent += count;
            return;
        }
        if (actualIndex == normIndex(top + 1)) {
            stack_.push_back({normIndex(actualIndex - shift_), count});
            return;
        }
        // Descent a_{c+1} a_c: one letter pair collapses to delta, which
        // migrates left applying tau to everything still on the stack.
        while (!stack_.empty() && count > 0 &&
               normIndex(stack_.back().index + shift_) == normIndex(actualIndex + 1)) {
            u_ += 1;
            shift_ = (shift_ + 1) % 3;
            stack_.back().exponent -= 1;
            count -= 1;
            if (stack_.back().exponent == 0) stack_.pop_back();
        }
    }
}

void Normalizer::pushSyllable(int index, const BigInt& exponent) {
    if (exponent == 0) return;
    int idx = normIndex(index);
    if (exponent > 0) {
        pushPositive(idx, exponent);
        return;
    }
    // a_i^{-k} = delta^{-k} (a_{i+2-k} ... a_{i+1}): an ascending run of k
    // letters; the run genuinely has k syllables in the output.
    BigInt k = -exponent;
    checkMaterializable(k, "negative syllable expansion");
    u_ -= k;
    shift_ = (((shift_ - mod3(k)) % 3) + 3) % 3;
    long long kk = static_cast<long long>(k);
    for (long long j = 1; j <= kk; ++j) pushPositive(normIndex(idx + 1 - kk + j), 1);
}

void Normalizer::pushDelta(const BigInt& power) {
    if (power == 0) return;
    u_ += power;
    shift_ = (((shift_ + mod3(power)) % 3) + 3) % 3;
}

void Normalizer::pushWord(const Word& w) {
    for (const auto& s : w.syllables()) pushSyllable(s.index, s.exponent);
}

void Normalizer::pushNormalForm(const NormalForm& nf) {
    pushDelta(nf.deltaExp());
    const auto& p = nf.positive();
    for (std::size_t j = 0; j < p.exponents.size(); ++j) pushPositive(p.indexAt(j), p.exponents[j]);
}

NormalForm Normalizer::finish() {
    NondecreasingPositive p;
    if (!stack_.empty()) {
        p.start = normIndex(stack_.front().index + shift_);
        p.exponents.reserve(stack_.size());
        for (const auto& s : stack_) p.exponents.push_back(s.exponent);
    }
    NormalForm out(u_, std::move(p));
    u_ = 0;
    shift_ = 0;
    stack_.clear();
    return out;
}

NormalForm normalize(const Word& w) {
    Normalizer n;
    n.pushWord(w);
    return n.finish();
}

Word nfToWord(const NormalForm& nf) {
    checkMaterializable(abs(nf.deltaExp()) * 2, "delta power expansion");
    Word w = deltaWord(toLongChecked(nf.deltaExp(), "delta power"));
    return concatWords(w, nf.positive().toWord());
}

NormalForm tau(const NormalForm& nf, long long t) {
    if (nf.positive().empty()) return nf;
    NondecreasingPositive p = nf.positive();
    p.start = normIndex(p.start + t);
    return NormalForm(nf.deltaExp(), std::move(p));
}

Word tauWord(const Word& w, long long t) {
    Word out;
    for (const auto& s : w.syllables()) out.append(normIndex(s.index + t), s.exponent);
    return out;
}

NormalForm multiply(const NormalForm& x, const NormalForm& y) {
    Normalizer n;
    n.pushNormalForm(x);
    n.pushNormalForm(y);
    return n.finish();
}

NormalForm conjugateByLetter(const NormalForm& x, int index, int sign) {
    Normalizer n;
    n.pushSyllable(index, -sign);
    n.pushNormalForm(x);
    n.pushSyllable(index, sign);
    return n.finish();
}

NormalForm conjugateByWord(const NormalForm& x, const Word& c) {
    Normalizer n;
    n.pushWord(invertWord(c));
    n.pushNormalForm(x);
    n.pushWord(c);
    return n.finish();
}

Word rightComplement(const Word& p) {
    BigInt total = 0;
    for (const auto& s : p.syllables()) {
        if (s.exponent < 0) throw NotPositive();
        total += s.exponent;
    }
    checkMaterializable(total, "right complement");
    // (a_{i_1} ... a_{i_r})* = a_{i_r+2} a_{i_{r-1}+3} ... a_{i_1+r+1}: the
    // j-th output letter comes from the (r+1-j)-th input letter shifted by j+1.
    Word out;
    long long j = 1;
    const auto& syls = p.syllables();
    for (auto it = syls.rbegin(); it != syls.rend(); ++it) {
        long long k = toLongChecked(it->exponent, "syllable exponent");
        for (long long c = 0; c < k; ++c, ++j) out.append(normIndex(it->index + j + 1), 1);
    }
    return out;
}

NondecreasingPositive rightComplement(const NondecreasingPositive& p) {
    NondecreasingPositive out;
    if (p.empty()) return out;
    checkMaterializable(p.length(), "right complement");
    out.start = normIndex(p.lastIndex() + 2);
    // Scanning the input syllables from the back: inside a syllable the output
    // index advances each letter, and at each syllable boundary it repeats, so
    // boundary letters merge into the previous output syllable.
    for (std::size_t s = p.exponents.size(); s-- > 0;) {
        long long k = toLongChecked(p.exponents[s], "syllable exponent");
        if (out.exponents.empty()) {
            out.exponents.push_back(1);
        } else {
            out.exponents.back() += 1;
        }
        for (long long j = 1; j < k; ++j) out.exponents.push_back(1);
    }
    return out;
}

NormalForm inverse(const NormalForm& nf) {
    BigInt s = nf.sup();
    NondecreasingPositive comp = rightComplement(nf.positive());
    if (!comp.empty()) comp.start = normIndex(comp.start - mod3(s));
    return NormalForm(-s, std::move(comp));
}

GarsideStats stats(const NormalForm& nf) {
    return {nf.inf(), nf.sup(), nf.len(), nf.syl(), nf.esyl()};
}

std::string serializeNormalForm(const NormalForm& nf) {
    std::string out = "d^" + toString(nf.deltaExp()) + " |";
    std::string p = serialize(nf.positive().toWord());
    if (!p.empty()) {
        out += ' ';
        out += p;
    }
    return out;
}

}  // namespace braid3
