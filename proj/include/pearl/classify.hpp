#pragma once
#include <optional>
#include <string>
#include <vector>

#include "pearl/diagram.hpp"

namespace pearl {

enum class Verdict { LSpaceKnot, AlmostLSpaceKnot, OtherNonLSpace, Invalid };
enum class SacCase { CaseI, CaseII };
enum class CaseTag { Case1, Case2, Case3 };

std::string to_string(Verdict v);
std::string to_string(SacCase c);
std::string to_string(CaseTag c);

struct InconsistentArcs {
    std::vector<int> z, w;  // bottom nest (around z) and top nest (around w)
};

struct Classification {
    FourTuple tuple;
    Verdict verdict = Verdict::Invalid;
    std::optional<SacCase> sacCase;
    std::optional<CaseTag> caseTag;
    InconsistentArcs inconsistent;
    std::vector<std::string> reasons;  // filled for Invalid
};

InconsistentArcs inconsistent_arcs(const Diagram& d);
bool is_coherent(const Diagram& d);
std::optional<SacCase> strongly_almost_coherent(const Diagram& d);
CaseTag case_tag(const Diagram& d);
Classification classify(const FourTuple& t);
Classification classify(const Diagram& d);

}  // namespace pearl
