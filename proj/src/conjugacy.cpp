#include "braid3/conjugacy.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_map>

#include "braid3/errors.hpp"
#include "braid3/knot.hpp"

namespace braid3 {

namespace {

constexpr std::size_t kSummitSetCap = 10'000;

int esylMod3(const NormalForm& nf) {
    BigInt r = nf.esyl() % 3;
    if (r < 0) r += 3;
    return static_cast<int>(r);
}

}  // namespace

BigInt elementExponentSum(const NormalForm& nf) { return 2 * nf.deltaExp() + nf.len(); }

bool isSummit(const NormalForm& nf) { return nf.len() <= 1 || esylMod3(nf) != 2; }

bool isSummit0(const NormalForm& nf) {
    if (!isSummit(nf)) throw NotSummit();
    return nf.syl() <= 1 || esylMod3(nf) == 0;
}

NormalForm infRaiseMove(const NormalForm& nf, ConjugationStep* step) {
    if (nf.len() < 2 || esylMod3(nf) != 2)
        throw MoveNotApplicable("inf-raise needs len >= 2 and esyl == 2 mod 3");
    const auto& p = nf.positive();
    Word lastLetter = letter(p.lastIndex(), 1);
    // beta = L alpha L^{-1}, i.e. conjugation by c = L^{-1}.
    Word c = invertWord(lastLetter);
    NormalForm out = conjugateByWord(nf, c);
    if (out.inf() != nf.inf() + 1) throw std::logic_error("inf-raise did not raise inf by 1");
    if (step) *step = {normalize(c), StepKind::InfRaise};
    return out;
}

NormalForm sylReduceMove(const NormalForm& nf, ConjugationStep* step) {
    if (nf.syl() < 2 || esylMod3(nf) != 1)
        throw MoveNotApplicable("syl-reduce needs syl >= 2 and esyl == 1 mod 3");
    const auto& p = nf.positive();
    Word lastSyl;
    lastSyl.append(p.lastIndex(), p.exponents.back());
    Word c = invertWord(lastSyl);
    NormalForm out = conjugateByWord(nf, c);
    if (out.syl() != nf.syl() - 1 || out.inf() != nf.inf() || esylMod3(out) != 0)
        throw std::logic_error("syl-reduce did not produce the expected shape");
    if (step) *step = {normalize(c), StepKind::SylReduce};
    return out;
}

SummitData toSummit0(const NormalForm& nf) {
    SummitData sd;
    sd.representative = nf;
    sd.conjugator = NormalForm::identity();
    while (sd.representative.len() >= 2 && esylMod3(sd.representative) == 2) {
        ConjugationStep step;
        sd.representative = infRaiseMove(sd.representative, &step);
        sd.conjugator = multiply(sd.conjugator, step.by);
        sd.trail.push_back(std::move(step));
    }
    while (sd.representative.syl() >= 2 && esylMod3(sd.representative) == 1) {
        ConjugationStep step;
        sd.representative = sylReduceMove(sd.representative, &step);
        sd.conjugator = multiply(sd.conjugator, step.by);
        sd.trail.push_back(std::move(step));
    }
    if (!isSummit(sd.representative) || !isSummit0(sd.representative))
        throw std::logic_error("toSummit0 did not reach a minimal summit form");
    if (!(multiply(inverse(sd.conjugator), multiply(nf, sd.conjugator)) == sd.representative))
        throw std::logic_error("toSummit0 conjugator does not verify");
    return sd;
}

namespace detail {

// BFS closure under simple-element conjugation with path tracking.
// paths[key] = (element, w) where w^{-1} rep w = element.
struct SummitExploration {
    std::vector<NormalForm> elements;                       // sorted at the end
    std::unordered_map<std::string, NormalForm> pathFrom;   // key -> conjugator from rep
    std::unordered_map<std::string, NormalForm> byKey;
};

SummitExploration exploreSummitSet(const NormalForm& rep) {
    SummitExploration ex;
    const BigInt infS = rep.inf();
    const BigInt lenMin = rep.len();
    std::deque<std::string> queue;
    ex.byKey.emplace(rep.key(), rep);
    ex.pathFrom.emplace(rep.key(), NormalForm::identity());
    queue.push_back(rep.key());
    while (!queue.empty()) {
        std::string k = std::move(queue.front());
        queue.pop_front();
        NormalForm x = ex.byKey.at(k);
        NormalForm w = ex.pathFrom.at(k);
        auto visit = [&](const NormalForm& y, const NormalForm& c) {
            if (y.inf() != infS) return;
            if (y.len() != lenMin) throw std::logic_error("summit element with unexpected len");
            std::string yk = y.key();
            if (ex.byKey.contains(yk)) return;
            if (ex.byKey.size() >= kSummitSetCap)
                throw BudgetExceeded("summit set exceeds cap of 10000 elements");
            ex.byKey.emplace(yk, y);
            ex.pathFrom.emplace(yk, multiply(w, c));
            queue.push_back(std::move(yk));
        };
        for (int g = 1; g <= 3; ++g) visit(conjugateByLetter(x, g, 1), normalize(letter(g, 1)));
        visit(tau(x, 1), NormalForm::deltaPower(1));
    }
    ex.elements.reserve(ex.byKey.size());
    for (const auto& [k, v] : ex.byKey) ex.elements.push_back(v);
    std::sort(ex.elements.begin(), ex.elements.end());
    return ex;
}

}  // namespace detail

std::vector<NormalForm> summitSet(const NormalForm& nf) {
    SummitData sd = toSummit0(nf);
    return detail::exploreSummitSet(sd.representative).elements;
}

std::optional<NormalForm> areConjugate(const NormalForm& x, const NormalForm& y) {
    if (elementExponentSum(x) != elementExponentSum(y)) return std::nullopt;
    if (permutationOf(x).cycleCount() != permutationOf(y).cycleCount()) return std::nullopt;
    SummitData sx = toSummit0(x);
    SummitData sy = toSummit0(y);
    if (sx.representative.inf() != sy.representative.inf()) return std::nullopt;
    if (sx.representative.len() != sy.representative.len()) return std::nullopt;
    auto ex = detail::exploreSummitSet(sx.representative);
    auto it = ex.pathFrom.find(sy.representative.key());
    if (it == ex.pathFrom.end()) return std::nullopt;
    // x --sx.c--> rep_x --w--> rep_y <--sy.c-- y, so c = sx.c * w * sy.c^{-1}.
    NormalForm c = multiply(multiply(sx.conjugator, it->second), inverse(sy.conjugator));
    if (!(multiply(inverse(c), multiply(x, c)) == y))
        throw std::logic_error("areConjugate produced an unverified conjugator");
    return c;
}

}  // namespace braid3
