#include "braid3/corpus.hpp"

#include "braid3/word.hpp"

namespace braid3 {

namespace {

std::string alphaWord(int k) {
    // a_{k+1}^{-(k-1)} a_k^2 a_{k+1}^k a_{k+2}: genus k, unknotting number 1.
    Word w;
    w.append(normIndex(k + 1), -(k - 1));
    w.append(normIndex(k), 2);
    w.append(normIndex(k + 1), k);
    w.append(normIndex(k + 2), 1);
    return serialize(w);
}

std::vector<CorpusEntry> build() {
    std::vector<CorpusEntry> c;
    c.push_back({"unknot-delta", "d", "unknot as the fundamental braid"});
    c.push_back({"unknot-band", "a3^-1 a1", "unknot with a negative band"});
    c.push_back({"trefoil", "a1^3 a2", "(2,3) torus knot"});
    c.push_back({"figure-eight", "s1^-1 s2 s1^-1 s2", "figure-eight knot"});
    c.push_back({"torus-2-5", "a1^5 a2", "(2,5) torus knot"});
    c.push_back({"torus-2-7", "a1^7 a2", "(2,7) torus knot"});
    c.push_back({"torus-2-5-mirror", "a1^-5 a2^-1", "mirror (2,5) torus knot"});
    c.push_back({"sigma-3-m3", "a1^3 a2^-3", "granny-type composite, trefoil with its reverse mirror"});
    c.push_back({"sigma-3-m5", "a1^3 a2^-5", "composite of (2,3) and mirror (2,5)"});
    c.push_back({"sigma-5-m5", "a1^5 a2^-5", "composite of (2,5) and its reverse mirror"});
    for (int k = 1; k <= 6; ++k)
        c.push_back({"alpha-" + std::to_string(k), alphaWord(k),
                     "genus " + std::to_string(k) + ", unknotting number 1"});
    c.push_back({"delta-m4-a1-6", "d^-4 a1^6", "strict inequality showcase, genus 2"});
    return c;
}

}  // namespace

const std::vector<CorpusEntry>& corpus() {
    static const std::vector<CorpusEntry> entries = build();
    return entries;
}

}  // namespace braid3
