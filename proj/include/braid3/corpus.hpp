#pragma once

#include <string>
#include <vector>

namespace braid3 {

struct CorpusEntry {
    std::string name;
    std::string text;  // word in the input grammar
    std::string note;
};

// Bundled worked examples: classic knots, the torus families, the genus-k
// unknotting-number-one family, and the strictness showcase.
const std::vector<CorpusEntry>& corpus();

}  // namespace braid3
