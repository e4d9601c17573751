// Command-line interface over the 3-braid calculus library.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "braid3/conjugacy.hpp"
#include "braid3/corpus.hpp"
#include "braid3/errors.hpp"
#include "braid3/garside.hpp"
#include "braid3/knot.hpp"
#include "braid3/oracle.hpp"
#include "braid3/unknotting.hpp"
#include "braid3/word.hpp"

using json = nlohmann::json;
using namespace braid3;

namespace {

// Oversized integers serialize as strings; plain mode prints them bare.
std::string plainScalar(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

json bigToJson(const BigInt& x) {
    if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
        return static_cast<long long>(x);
    return toString(x);
}

json normalizeRecord(const NormalForm& nf) {
    GarsideStats st = stats(nf);
    return json{{"normalForm", serializeNormalForm(nf)}, {"inf", bigToJson(st.inf)},
                {"sup", bigToJson(st.sup)},              {"len", bigToJson(st.canonicalLength)},
                {"syl", st.sylLength},                   {"esyl", bigToJson(st.extSylLength)}};
}

json invariantsRecord(const Word& w, const NormalForm& nf) {
    json rec;
    rec["components"] = closureComponents(w);
    rec["isKnot"] = isKnot(nf);
    rec["infS"] = bigToJson(infS(nf));
    rec["supS"] = bigToJson(supS(nf));
    rec["lenMin"] = bigToJson(toSummit0(nf).representative.len());
    rec["shortestLength"] = bigToJson(classShortestLength(nf));
    if (isKnot(nf))
        rec["genus"] = bigToJson(genus(nf));
    else
        rec["genus"] = nullptr;
    rec["sqpStatus"] = sqpStatusName(sqpStatus(nf));
    return rec;
}

std::string invariantsPlain(const json& rec) {
    std::string genusStr = rec["genus"].is_null() ? "-" : plainScalar(rec["genus"]);
    return "components=" + rec["components"].dump() + " isKnot=" + rec["isKnot"].dump() +
           " infS=" + plainScalar(rec["infS"]) + " supS=" + plainScalar(rec["supS"]) +
           " lenMin=" + plainScalar(rec["lenMin"]) + " shortestLength=" + plainScalar(rec["shortestLength"]) +
           " genus=" + genusStr + " sqpStatus=" + rec["sqpStatus"].get<std::string>();
}

json summitRecord(const NormalForm& nf, bool full) {
    SummitData sd = toSummit0(nf);
    auto set = summitSet(nf);
    json rec;
    rec["representative"] = serializeNormalForm(sd.representative);
    rec["conjugator"] = serializeNormalForm(sd.conjugator);
    rec["trailLength"] = sd.trail.size();
    rec["summitSetSize"] = set.size();
    if (full) {
        json arr = json::array();
        for (const auto& s : set) arr.push_back(serializeNormalForm(s));
        rec["summitSet"] = arr;
    }
    return rec;
}

json classifyRecord(const Classification& cls) {
    json rec;
    json labels = json::array();
    for (auto l : cls.labels) labels.push_back(knotLabelName(l));
    rec["labels"] = labels;
    rec["relation"] = relationName(cls.relation);
    rec["genus"] = bigToJson(cls.genus);
    if (cls.witness) {
        rec["uBound"] = bigToJson(cls.witness->uBound);
        rec["witness"] = serialize(cls.witness->fullWord);
    } else {
        rec["uBound"] = nullptr;
        rec["witness"] = nullptr;
    }
    rec["canonicalRep"] = serialize(cls.canonicalRep);
    return rec;
}

std::string classifyPlain(const json& rec) {
    std::string labels;
    for (const auto& l : rec["labels"]) {
        if (!labels.empty()) labels += ',';
        labels += l.get<std::string>();
    }
    std::string out = "labels=" + (labels.empty() ? std::string("-") : labels) +
                      " relation=" + rec["relation"].get<std::string>() +
                      " genus=" + plainScalar(rec["genus"]);
    if (!rec["uBound"].is_null()) {
        out += " uBound=" + plainScalar(rec["uBound"]);
        out += " witness=\"" + rec["witness"].get<std::string>() + "\"";
    }
    out += " rep=\"" + rec["canonicalRep"].get<std::string>() + "\"";
    return out;
}

json unknotSeqRecord(const UnknottingSequence& seq) {
    json steps = json::array();
    for (const auto& st : seq.steps)
        steps.push_back(json{{"word", serialize(st.word)}, {"changedPosition", st.changedPosition}});
    return json{{"steps", steps}, {"finalWord", serialize(seq.finalWord)}, {"length", seq.steps.size()}};
}

// Dispatch shared by the single-word commands and batch mode.
json runCommand(const std::string& command, const std::string& wordText,
                const std::string& word2Text, int depth, long long maxLen, bool full) {
    Word w = parse(wordText);
    if (command == "normalize") return normalizeRecord(normalize(w));
    if (command == "invariants") return invariantsRecord(w, normalize(w));
    if (command == "summit") return summitRecord(normalize(w), full);
    if (command == "genus") {
        json g = bigToJson(genus(normalize(w)));
        return json{{"genus", g}};
    }
    if (command == "shortest") {
        ShortestWord sw = shortestWord(normalize(w));
        return json{{"word", serialize(sw.word)},
                    {"length", bigToJson(sw.word.wordLength())},
                    {"classMinimal", sw.classMinimal},
                    {"representative", serializeNormalForm(sw.representative)}};
    }
    if (command == "unknot-seq") return unknotSeqRecord(unknottingSequence(normalize(w)));
    if (command == "classify") return classifyRecord(classify(normalize(w)));
    if (command == "conjugate") {
        auto c = areConjugate(normalize(w), normalize(parse(word2Text)));
        if (c) return json{{"conjugate", true}, {"conjugator", serializeNormalForm(*c)}};
        return json{{"conjugate", false}, {"conjugator", nullptr}};
    }
    if (command == "oracle-shortest") {
        auto r = bruteShortest(normalize(w), maxLen);
        return r ? json{{"shortest", *r}} : json{{"shortest", nullptr}};
    }
    if (command == "oracle-maxinf") {
        json m = bigToJson(bruteMaxInf(normalize(w), depth));
        return json{{"maxInf", m}};
    }
    if (command == "oracle-conjugate") {
        auto c = bruteConjugate(normalize(w), normalize(parse(word2Text)), depth);
        if (c) return json{{"conjugator", serialize(*c)}};
        return json{{"conjugator", nullptr}};
    }
    if (command == "oracle-burau-equal") {
        bool eq = burauEqual(w, parse(word2Text));
        return json{{"equal", eq}};
    }
    throw Error("unknown batch command: " + command);
}

int runBatch(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "cannot open " << path << "\n";
        return 1;
    }
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        json out;
        out["v"] = 1;
        try {
            json rec = json::parse(line);
            out["id"] = rec.value("id", "");
            std::string cmd = rec.at("command").get<std::string>();
            std::string word = rec.value("word", "");
            std::string word2 = rec.value("word2", "");
            int depth = rec.value("depth", 8);
            long long maxLen = rec.value("maxLen", 8);
            out["result"] = runCommand(cmd, word, word2, depth, maxLen, false);
        } catch (const std::exception& e) {
            out["error"] = e.what();
        }
        std::cout << out.dump() << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact calculus for 3-braids in band generators"};
    app.require_subcommand(1);

    bool asJson = false;
    app.add_flag("--json", asJson, "emit one JSON record");

    std::string wordText, word2Text;
    int depth = 8;
    long long maxLen = 8;
    bool full = false;

    auto* cNormalize = app.add_subcommand("normalize", "Garside normal form d^u P");
    cNormalize->add_option("word", wordText)->required();
    auto* cInvariants = app.add_subcommand("invariants", "conjugacy and knot invariants");
    cInvariants->add_option("word", wordText)->required();
    auto* cSummit = app.add_subcommand("summit", "summit representative and set");
    cSummit->add_option("word", wordText)->required();
    cSummit->add_flag("--full", full, "list the whole summit set");
    auto* cConjugate = app.add_subcommand("conjugate", "decide conjugacy, print a conjugator");
    cConjugate->add_option("word", wordText)->required();
    cConjugate->add_option("word2", word2Text)->required();
    auto* cGenus = app.add_subcommand("genus", "genus of the knot closure");
    cGenus->add_option("word", wordText)->required();
    auto* cShortest = app.add_subcommand("shortest", "class-minimal word");
    cShortest->add_option("word", wordText)->required();
    auto* cUnknotSeq = app.add_subcommand("unknot-seq", "crossing-change sequence to the unknot");
    cUnknotSeq->add_option("word", wordText)->required();
    auto* cClassify = app.add_subcommand("classify", "unknotting-number-versus-genus classification");
    cClassify->add_option("word", wordText)->required();

    auto* cOracle = app.add_subcommand("oracle", "brute-force reference computations");
    cOracle->require_subcommand(1);
    auto* oShortest = cOracle->add_subcommand("shortest", "minimal word length by enumeration");
    oShortest->add_option("word", wordText)->required();
    oShortest->add_option("--max-len", maxLen);
    auto* oConjugate = cOracle->add_subcommand("conjugate", "bounded conjugator search");
    oConjugate->add_option("word", wordText)->required();
    oConjugate->add_option("word2", word2Text)->required();
    oConjugate->add_option("--depth", depth);
    auto* oMaxInf = cOracle->add_subcommand("maxinf", "bounded maximal inf search");
    oMaxInf->add_option("word", wordText)->required();
    oMaxInf->add_option("--depth", depth);
    auto* oBurau = cOracle->add_subcommand("burau-equal", "exact Burau matrix equality");
    oBurau->add_option("word", wordText)->required();
    oBurau->add_option("word2", word2Text)->required();

    std::string batchFile;
    auto* cBatch = app.add_subcommand("batch", "process JSONL records");
    cBatch->add_option("--jsonl", batchFile, "input file, one record per line")->required();

    bool evalCorpus = false;
    auto* cCorpus = app.add_subcommand("corpus", "bundled examples");
    cCorpus->add_flag("--eval", evalCorpus, "evaluate every entry");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (cBatch->parsed()) return runBatch(batchFile);

        if (cCorpus->parsed()) {
            if (asJson) {
                json arr = json::array();
                for (const auto& e : corpus()) {
                    json rec{{"name", e.name}, {"word", e.text}, {"note", e.note}};
                    if (evalCorpus) {
                        Word w = parse(e.text);
                        NormalForm nf = normalize(w);
                        rec["invariants"] = invariantsRecord(w, nf);
                        if (isKnot(nf)) rec["classification"] = classifyRecord(classify(nf));
                    }
                    arr.push_back(rec);
                }
                std::cout << arr.dump(2) << "\n";
            } else {
                for (const auto& e : corpus()) {
                    std::cout << e.name << ": " << e.text << "  # " << e.note << "\n";
                    if (evalCorpus) {
                        Word w = parse(e.text);
                        NormalForm nf = normalize(w);
                        std::cout << "  " << serializeNormalForm(nf) << "\n";
                        std::cout << "  " << invariantsPlain(invariantsRecord(w, nf)) << "\n";
                        if (isKnot(nf)) std::cout << "  " << classifyPlain(classifyRecord(classify(nf))) << "\n";
                    }
                }
            }
            return 0;
        }

        std::string cmd;
        if (cNormalize->parsed()) cmd = "normalize";
        else if (cInvariants->parsed()) cmd = "invariants";
        else if (cSummit->parsed()) cmd = "summit";
        else if (cConjugate->parsed()) cmd = "conjugate";
        else if (cGenus->parsed()) cmd = "genus";
        else if (cShortest->parsed()) cmd = "shortest";
        else if (cUnknotSeq->parsed()) cmd = "unknot-seq";
        else if (cClassify->parsed()) cmd = "classify";
        else if (cOracle->parsed()) {
            if (oShortest->parsed()) cmd = "oracle-shortest";
            else if (oConjugate->parsed()) cmd = "oracle-conjugate";
            else if (oMaxInf->parsed()) cmd = "oracle-maxinf";
            else cmd = "oracle-burau-equal";
        }

        json rec = runCommand(cmd, wordText, word2Text, depth, maxLen, full);
        rec["v"] = 1;
        if (asJson) {
            std::cout << rec.dump() << "\n";
            return 0;
        }

        // Plain output per command.
        if (cmd == "normalize") std::cout << rec["normalForm"].get<std::string>() << "\n";
        else if (cmd == "invariants") std::cout << invariantsPlain(rec) << "\n";
        else if (cmd == "summit") {
            std::cout << "representative=" << rec["representative"].get<std::string>()
                      << "  conjugator=" << rec["conjugator"].get<std::string>()
                      << "  trail=" << rec["trailLength"] << "  size=" << rec["summitSetSize"] << "\n";
            if (full)
                for (const auto& s : rec["summitSet"]) std::cout << "  " << s.get<std::string>() << "\n";
        } else if (cmd == "conjugate") {
            if (rec["conjugate"].get<bool>())
                std::cout << rec["conjugator"].get<std::string>() << "\n";
            else
                std::cout << "not-conjugate\n";
        } else if (cmd == "genus") std::cout << plainScalar(rec["genus"]) << "\n";
        else if (cmd == "shortest") std::cout << rec["word"].get<std::string>() << "\n";
        else if (cmd == "unknot-seq") {
            int i = 1;
            for (const auto& st : rec["steps"])
                std::cout << "step " << i++ << ": " << st["word"].get<std::string>()
                          << "  (change at letter " << st["changedPosition"] << ")\n";
            std::cout << "final: " << rec["finalWord"].get<std::string>() << "\n";
        } else if (cmd == "classify") {
            std::cout << classifyPlain(rec) << "\n";
        } else if (cmd == "oracle-shortest") std::cout << rec["shortest"].dump() << "\n";
        else if (cmd == "oracle-maxinf") std::cout << plainScalar(rec["maxInf"]) << "\n";
        else if (cmd == "oracle-conjugate") std::cout << rec["conjugator"].dump() << "\n";
        else if (cmd == "oracle-burau-equal") std::cout << rec["equal"].dump() << "\n";
        return 0;
    } catch (const SyntaxError& e) {
        std::cerr << "syntax error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
