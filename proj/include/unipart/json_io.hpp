#pragma once

#include "unipart/analyze.hpp"
#include "unipart/homology.hpp"
#include "unipart/setpart.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace unipart {

// Insertion-ordered JSON keeps emitted reports byte-stable.
using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

// Input files that do not match the published schemas raise SchemaError with
// a JSON-path diagnostic; domain failures keep using Error.
class SchemaError : public std::runtime_error {
public:
    SchemaError(std::string path, const std::string& detail)
        : std::runtime_error(path + ": " + detail), path_(std::move(path)) {}
    const std::string& path() const { return path_; }

private:
    std::string path_;
};

Json scalar_to_json(const CycNumber& v);
// Accepts {"m": 8, "coeffs": ["1/2", ...]} or a bare rational string.
CycNumber scalar_from_json(const Json& j, const std::string& path = "$");

Json matrix_to_json(const CMatrix& a);
// {"m": conductor, "rows": [[entry, ...], ...]}; an entry is a rational
// string or a coefficient array.
CMatrix matrix_from_json(const Json& j, const std::string& path = "$");

Json subspace_to_json(const CSubspace& s);
CSubspace subspace_from_json(const Json& j, const std::string& path = "$");

Json partition_to_json(const OrthoPartition& p);
OrthoPartition partition_from_json(const Json& j, const std::string& path = "$");

struct GroupInput {
    std::vector<CMatrix> generators;
    std::optional<long> p;
};
// {"m": conductor, "generators": [rows or matrix objects, ...], "p": 2}.
GroupInput group_from_json(const Json& j);

Json report_to_json(const AnalysisReport& r);
AnalysisReport report_from_json(const Json& j);

Json homology_to_json(const HomologyResult& h);
// {"n_vertices": 6, "facets": [[0,1,4], ...]}.
ChainComplex complex_from_json(const Json& j);

Json sweep_to_json(const std::vector<SweepRow>& rows, long n, long p);
std::string sweep_to_csv(const std::vector<SweepRow>& rows);
std::string sweep_to_text(const std::vector<SweepRow>& rows);

} // namespace unipart
