#include "braid3/oracle.hpp"

#include "braid3/errors.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace braid3;
using braid3::testsupport::forEachWordUpTo;

namespace {
NormalForm nfOf(const char* text) { return normalize(parse(text)); }
}  // namespace

TEST_CASE("burau: braid relations and faithfulness spot checks") {
    // the defining relation of the dual presentation
    CHECK(burauEqual(parse("a2 a1"), parse("a3 a2")));
    CHECK(burauEqual(parse("a2 a1"), parse("a1 a3")));
    // the Artin relation
    CHECK(burauEqual(parse("s1 s2 s1"), parse("s2 s1 s2")));
    CHECK_FALSE(burauEqual(parse("a1"), parse("a2")));
    // inverses and the center
    CHECK(burau(concatWords(parse("a3"), parse("a3^-1"))) == LaurentMatrix::identity());
    CHECK(burauEqual(concatWords(parse("a1"), deltaWord(3)), concatWords(deltaWord(3), parse("a1"))));
    // a normal-form equality
    CHECK(burauEqual(parse("s1^-1 s2 s1^-1 s2"), concatWords(deltaWord(-2), parse("a1^2 a2^2"))));
}

TEST_CASE("burau equality coincides with normal-form equality (|w| <= 3)") {
    std::vector<std::pair<NormalForm, Word>> pool;
    forEachWordUpTo(3, [&](const Word& w) { pool.emplace_back(normalize(w), w); });
    for (std::size_t i = 0; i < pool.size(); i += 5)
        for (std::size_t j = i; j < pool.size(); j += 11)
            CHECK((pool[i].first == pool[j].first) == burauEqual(pool[i].second, pool[j].second));
}

TEST_CASE("bruteShortest: pinned values") {
    CHECK(bruteShortest(NormalForm::deltaPower(1), 4) == 2);
    CHECK(bruteShortest(nfOf("s1^-1 s2 s1^-1 s2"), 6) == 4);
    CHECK(bruteShortest(NormalForm::deltaPower(2), 6) == 4);  // trefoil summit
    CHECK(bruteShortest(NormalForm::identity(), 3) == 0);
    CHECK_FALSE(bruteShortest(NormalForm::deltaPower(-4), 5).has_value());
    CHECK_THROWS_AS(bruteShortest(nfOf("a1"), 9), BudgetExceeded);
}

TEST_CASE("bruteConjugate: pinned values") {
    auto c = bruteConjugate(nfOf("a1"), nfOf("a2"), 2);
    REQUIRE(c.has_value());
    CHECK(conjugateByWord(nfOf("a1"), *c) == nfOf("a2"));
    CHECK_FALSE(bruteConjugate(nfOf("a1"), nfOf("a1^-1"), 8).has_value());
    NormalForm f8 = nfOf("s1^-1 s2 s1^-1 s2");
    auto amphi = bruteConjugate(f8, inverse(f8), 6);
    REQUIRE(amphi.has_value());
    CHECK(conjugateByWord(f8, *amphi) == inverse(f8));
}

TEST_CASE("bruteMaxInf: pinned values") {
    CHECK(bruteMaxInf(nfOf("a1^3 a2"), 6) == 2);
    CHECK(bruteMaxInf(nfOf("s1^-1 s2 s1^-1 s2"), 6) == -2);
    CHECK(bruteMaxInf(NormalForm::deltaPower(3), 2) == 3);
}

TEST_CASE("oracle budgets trip") {
    OracleBudget tiny;
    tiny.nodeCap = 3;
    CHECK_THROWS_AS(bruteMaxInf(nfOf("a1^2 a2^-1"), 6, tiny), BudgetExceeded);
}
