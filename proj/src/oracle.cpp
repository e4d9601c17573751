#include "braid3/oracle.hpp"

#include <deque>
#include <stdexcept>
#include <unordered_map>

#include "braid3/conjugacy.hpp"
#include "braid3/errors.hpp"

namespace braid3 {

LaurentPoly LaurentPoly::constant(long long c) { return monomial(c, 0); }

LaurentPoly LaurentPoly::monomial(long long coeff, long long degree) {
    LaurentPoly p;
    if (coeff != 0) p.coeffs_[degree] = coeff;
    return p;
}

void LaurentPoly::set(long long degree, const BigInt& c) {
    if (c == 0)
        coeffs_.erase(degree);
    else
        coeffs_[degree] = c;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [d, c] : o.coeffs_) {
        auto it = r.coeffs_.find(d);
        BigInt v = (it == r.coeffs_.end()) ? c : BigInt(it->second + c);
        r.set(d, v);
    }
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [d, c] : o.coeffs_) {
        auto it = r.coeffs_.find(d);
        BigInt v = (it == r.coeffs_.end()) ? BigInt(-c) : BigInt(it->second - c);
        r.set(d, v);
    }
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [d1, c1] : coeffs_)
        for (const auto& [d2, c2] : o.coeffs_) {
            auto it = r.coeffs_.find(d1 + d2);
            BigInt v = (it == r.coeffs_.end()) ? BigInt(c1 * c2) : BigInt(it->second + c1 * c2);
            r.set(d1 + d2, v);
        }
    return r;
}

std::string LaurentPoly::str() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (const auto& [d, c] : coeffs_) {
        if (!out.empty()) out += " + ";
        out += toString(c);
        if (d != 0) out += "*t^" + std::to_string(d);
    }
    return out;
}

LaurentMatrix LaurentMatrix::identity() {
    return {LaurentPoly::constant(1), LaurentPoly::constant(0), LaurentPoly::constant(0),
            LaurentPoly::constant(1)};
}

LaurentMatrix LaurentMatrix::operator*(const LaurentMatrix& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

std::string LaurentMatrix::str() const {
    return "[[" + a.str() + ", " + b.str() + "], [" + c.str() + ", " + d.str() + "]]";
}

namespace {

LaurentMatrix sigma1(int sign) {
    if (sign > 0)
        return {LaurentPoly::monomial(-1, 1), LaurentPoly::constant(1), LaurentPoly::constant(0),
                LaurentPoly::constant(1)};
    return {LaurentPoly::monomial(-1, -1), LaurentPoly::monomial(1, -1), LaurentPoly::constant(0),
            LaurentPoly::constant(1)};
}

LaurentMatrix sigma2(int sign) {
    if (sign > 0)
        return {LaurentPoly::constant(1), LaurentPoly::constant(0), LaurentPoly::monomial(1, 1),
                LaurentPoly::monomial(-1, 1)};
    return {LaurentPoly::constant(1), LaurentPoly::constant(0), LaurentPoly::constant(1),
            LaurentPoly::monomial(-1, -1)};
}

LaurentMatrix bandMatrix(int index, int sign) {
    switch (index) {
        case 1: return sigma1(sign);
        case 2: return sigma2(sign);
        default: {
            // a3 = s2 s1 s2^{-1}
            if (sign > 0) return sigma2(1) * sigma1(1) * sigma2(-1);
            return sigma2(1) * sigma1(-1) * sigma2(-1);
        }
    }
}

LaurentMatrix matrixPow(const LaurentMatrix& m, long long e) {
    LaurentMatrix r = LaurentMatrix::identity();
    LaurentMatrix base = m;
    long long n = e;
    while (n > 0) {
        if (n & 1) r = r * base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

}  // namespace

LaurentMatrix burau(const Word& w) {
    LaurentMatrix m = LaurentMatrix::identity();
    for (const auto& s : w.syllables()) {
        long long e = toLongChecked(s.exponent, "burau exponent");
        int sign = e > 0 ? 1 : -1;
        m = m * matrixPow(bandMatrix(s.index, sign), e > 0 ? e : -e);
    }
    return m;
}

bool burauEqual(const Word& w1, const Word& w2) { return burau(w1) == burau(w2); }

std::optional<long long> bruteShortest(const NormalForm& nf, long long maxLen,
                                       const OracleBudget& budget) {
    if (maxLen > 8) throw BudgetExceeded("bruteShortest guard allows maxLen <= 8");
    std::unordered_map<std::string, bool> target;
    for (const auto& s : summitSet(nf)) target.emplace(s.key(), true);
    long long nodes = 0;
    // Depth-first enumeration of all band words of a fixed length.
    std::vector<std::pair<int, int>> letters;  // (index, sign)
    auto search = [&](auto&& self, long long remaining) -> bool {
        if (remaining == 0) {
            if (++nodes > budget.nodeCap) throw BudgetExceeded("bruteShortest node cap");
            Word w;
            for (auto [i, s] : letters) w.append(i, s);
            return target.contains(normalize(w).key());
        }
        for (int i = 1; i <= 3; ++i)
            for (int s : {1, -1}) {
                letters.push_back({i, s});
                bool hit = self(self, remaining - 1);
                letters.pop_back();
                if (hit) return true;
            }
        return false;
    };
    for (long long len = 0; len <= maxLen; ++len)
        if (search(search, len)) return len;
    return std::nullopt;
}

namespace {

struct BallExploration {
    std::unordered_map<std::string, NormalForm> elements;
    std::unordered_map<std::string, std::pair<std::string, std::pair<int, int>>> parent;
    std::string startKey;
};

BallExploration exploreBall(const NormalForm& start, int depth, const OracleBudget& budget,
                            const std::string* stopAt = nullptr) {
    BallExploration ball;
    ball.startKey = start.key();
    ball.elements.emplace(ball.startKey, start);
    std::deque<std::pair<std::string, int>> queue{{ball.startKey, 0}};
    while (!queue.empty()) {
        auto [key, d] = queue.front();
        queue.pop_front();
        if (d == depth) continue;
        NormalForm x = ball.elements.at(key);
        for (int i = 1; i <= 3; ++i)
            for (int s : {1, -1}) {
                NormalForm y = conjugateByLetter(x, i, s);
                std::string yk = y.key();
                if (ball.elements.contains(yk)) continue;
                if (ball.elements.size() >= static_cast<std::size_t>(budget.nodeCap))
                    throw BudgetExceeded("conjugacy ball node cap");
                ball.elements.emplace(yk, std::move(y));
                ball.parent.emplace(yk, std::make_pair(key, std::make_pair(i, s)));
                if (stopAt && yk == *stopAt) return ball;
                queue.push_back({std::move(yk), d + 1});
            }
    }
    return ball;
}

}  // namespace

std::optional<Word> bruteConjugate(const NormalForm& x, const NormalForm& y, int depth,
                                   const OracleBudget& budget) {
    if (depth > 8) throw BudgetExceeded("bruteConjugate guard allows depth <= 8");
    std::string want = y.key();
    if (x.key() == want) return Word();
    BallExploration ball = exploreBall(x, depth, budget, &want);
    if (!ball.elements.contains(want)) return std::nullopt;
    // Walk parents back to the start; the conjugator reads left to right.
    std::vector<std::pair<int, int>> seq;
    std::string k = want;
    while (k != ball.startKey) {
        const auto& [pk, edge] = ball.parent.at(k);
        seq.push_back(edge);
        k = pk;
    }
    Word c;
    for (auto it = seq.rbegin(); it != seq.rend(); ++it) c.append(it->first, it->second);
    if (!(conjugateByWord(x, c) == y)) throw std::logic_error("brute conjugator failed verification");
    return c;
}

ConjugacyBallStats bruteBallStats(const NormalForm& nf, int depth, const OracleBudget& budget) {
    if (depth > 8) throw BudgetExceeded("bruteMaxInf guard allows depth <= 8");
    BallExploration ball = exploreBall(nf, depth, budget);
    ConjugacyBallStats stats;
    stats.maxInf = nf.inf();
    stats.minSyl = nf.syl();
    stats.size = ball.elements.size();
    for (const auto& [k, v] : ball.elements) {
        if (v.inf() > stats.maxInf) stats.maxInf = v.inf();
        if (v.syl() < stats.minSyl) stats.minSyl = v.syl();
    }
    return stats;
}

BigInt bruteMaxInf(const NormalForm& nf, int depth, const OracleBudget& budget) {
    return bruteBallStats(nf, depth, budget).maxInf;
}

}  // namespace braid3
