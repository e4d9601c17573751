#pragma once

#include <map>
#include <optional>
#include <string>

#include "braid3/garside.hpp"

namespace braid3 {

// Integer Laurent polynomial in one variable, sparse and exact.
class LaurentPoly {
public:
    LaurentPoly() = default;
    static LaurentPoly constant(long long c);
    static LaurentPoly monomial(long long coeff, long long degree);

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    bool operator==(const LaurentPoly& o) const = default;

    bool isZero() const { return coeffs_.empty(); }
    std::string str() const;

private:
    void set(long long degree, const BigInt& c);
    std::map<long long, BigInt> coeffs_;  // degree -> nonzero coefficient
};

// 2x2 matrix over Laurent polynomials; the reduced Burau image of a 3-braid.
struct LaurentMatrix {
    LaurentPoly a, b, c, d;

    static LaurentMatrix identity();
    LaurentMatrix operator*(const LaurentMatrix& o) const;
    bool operator==(const LaurentMatrix& o) const = default;
    std::string str() const;
};

// Reduced Burau image; earlier letters multiply on the left.
LaurentMatrix burau(const Word& w);

// Faithful on three strands, so this decides group equality independently of
// the rewriting engine.
bool burauEqual(const Word& w1, const Word& w2);

struct OracleBudget {
    long long nodeCap = 2'000'000;
};

// Minimum L <= maxLen such that some band word of length L normalizes into
// the summit set of nf; absent when none exists within maxLen.
std::optional<long long> bruteShortest(const NormalForm& nf, long long maxLen,
                                       const OracleBudget& budget = {});

// Conjugator word c of length <= depth with normalize(c^{-1} x c) = y.
std::optional<Word> bruteConjugate(const NormalForm& x, const NormalForm& y, int depth,
                                   const OracleBudget& budget = {});

// Maximum inf over all conjugates by words of length <= depth.
BigInt bruteMaxInf(const NormalForm& nf, int depth, const OracleBudget& budget = {});

// Shared ball exploration: extremal statistics of the conjugates reachable by
// at most `depth` single-generator conjugations.
struct ConjugacyBallStats {
    BigInt maxInf;
    long long minSyl = 0;
    std::size_t size = 0;
};

ConjugacyBallStats bruteBallStats(const NormalForm& nf, int depth, const OracleBudget& budget = {});

}  // namespace braid3
