#pragma once
#include <optional>
#include <string>
#include <vector>

#include "pearl/classify.hpp"
#include "pearl/sink_analysis.hpp"
#include "pearl/splitting.hpp"

namespace pearl {

struct Check {
    std::string name;
    bool pass = false;
    std::string witness;  // empty when passing
};

// Everything the pipeline learned about one tuple.
struct Certificate {
    FourTuple tuple;
    Classification classification;
    std::string stage;  // how far the pipeline went
    std::vector<Check> checks;

    // branched surface stage (incoherent tuples)
    int circles = -1;
    int annuli = -1;
    int boundaryChi = 0;
    std::vector<std::string> cyclicOrder;
    std::optional<MeridianCert> meridian;

    // sink analysis (strongly almost coherent tuples)
    std::optional<SinkDiskReport> sinks;
    std::optional<GeneralizedBetaTube> tube;
    std::optional<SplitReport> split;
    std::optional<bool> sinkFree;

    bool all_pass() const {
        for (auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    const Check* first_failure() const {
        for (auto& c : checks)
            if (!c.pass) return &c;
        return nullptr;
    }
};

// validate, classify, build the modified branched surface, run the boundary
// checks, sink analysis and (Case 3) the splitting. Total: failures are
// recorded as checks, only StructuralError escapes.
Certificate laminarity_pipeline(const FourTuple& t);

}  // namespace pearl
