#pragma once

#include "qdist/metrics.hpp"
#include "qdist/parametric.hpp"

#include <json.hpp>

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qdist::cli {

using json = nlohmann::ordered_json;

/// Malformed problem file or command line; exit status 2.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Kind { PointQuadric, VarietyQuadric, QuadricQuadric, CenteredQuadricQuadric, FamilyPoint };

const char* to_string(Kind k);
using qdist::to_string;

struct Problem {
    Kind kind = Kind::PointQuadric;
    std::vector<Quadric> quadrics;
    std::optional<VectorQ> point;
    std::optional<LinearVariety> variety;
    std::optional<QuadricFamily> family;
    int bits = 128;
    bool exact = false;
};

Problem parse_problem(const json& doc);
Problem load_problem(const std::string& path);

/// Scalar from a JSON integer or a "p/q" / decimal string.
Scalar parse_json_scalar(const json& v);

json rational(const Scalar& v);
/// {"value", "decimal", "error_bound"}
json approximation(const Scalar& v, const Scalar& error_bound, int bits);
json polynomial(const UniPoly& p);

json report_json(const DistanceReport& r, bool exact);
/// Output of the distance, intersect and poly commands.
json distance_json(const Problem& p);
json intersect_json(const Problem& p);
json poly_json(const Problem& p);
json family_json(const FamilyReport& r, bool exact);

struct Grid {
    Scalar x_min, x_max, y_min, y_max;
    unsigned steps = 0;
};
/// "x0min,x0max,y0min,y0max,steps"
Grid parse_grid(const std::string& text);

/// Runs `qdist <command> ...`; returns the exit status (0, 2 or 3).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qdist::cli
