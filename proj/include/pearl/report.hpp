#pragma once
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pearl/certificate.hpp"

namespace pearl {

using json = nlohmann::json;

json to_json(const Diagram& d);  // pearl-diagram/1
json to_json(const BranchedSurface& b);  // pearl-bs/1
json to_json(const Classification& c);
json to_json(const Certificate& c);  // pearl-cert/1
json to_json(const SplitReport& r);

// compact single-line form used for files and census lines
std::string dump(const json& j);

enum class Format { Json, Csv };

struct CensusSpec {
    int pMin = 1, pMax = 8;
    std::optional<std::pair<int, int>> q, r, s;  // inclusive ranges
    std::optional<Verdict> verdict;
    std::optional<CaseTag> caseTag;
    Format format = Format::Json;
    int jobs = 1;
};

struct CensusSummary {
    int total = 0;
    int lspace = 0, almost = 0, other = 0;
    int case1 = 0, case2 = 0, case3 = 0;
    int failures = 0;  // certificates with a failing check
};

// Runs the pipeline on every selected tuple, `jobs` at a time, and writes
// one line per tuple in lexicographic tuple order followed by a summary.
CensusSummary run_census(const CensusSpec& spec, std::ostream& out);
std::vector<FourTuple> census_tuples(const CensusSpec& spec);

std::string csv_header();
std::string csv_row(const Certificate& c);

// Cut-open square with alpha segments, beta arcs, basepoints and, when the
// surface is given, branch directions, region S and the tube outline.
std::string render_svg(const Diagram& d, const BranchedSurface* b = nullptr);

}  // namespace pearl
