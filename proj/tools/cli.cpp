#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

namespace qdist::cli {

namespace {

const json& field(const json& obj, const char* key) {
    if (!obj.is_object() || !obj.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
    return obj.at(key);
}

VectorQ parse_vector(const json& v) {
    if (!v.is_array()) throw ParseError("expected an array of numbers");
    std::vector<Scalar> out;
    for (const auto& x : v) out.push_back(parse_json_scalar(x));
    return VectorQ(std::move(out));
}

MatrixQ parse_matrix(const json& v) {
    if (!v.is_array() || v.empty()) throw ParseError("expected a non-empty array of rows");
    const std::size_t cols = v.front().is_array() ? v.front().size() : 0;
    if (cols == 0) throw ParseError("matrix rows must be non-empty arrays");
    MatrixQ m(v.size(), cols);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_array() || v[i].size() != cols) throw ParseError("matrix rows have different lengths");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = parse_json_scalar(v[i][j]);
    }
    return m;
}

// A scalar, or an array of coefficients in ascending powers of t.
UniPoly parse_tpoly(const json& v) {
    if (v.is_array()) {
        std::vector<Scalar> c;
        for (const auto& x : v) c.push_back(parse_json_scalar(x));
        return UniPoly(std::move(c), "t");
    }
    return UniPoly::constant(parse_json_scalar(v), "t");
}

Quadric parse_quadric(const json& q) {
    const MatrixQ A = parse_matrix(field(q, "A"));
    const VectorQ B = q.contains("B") ? parse_vector(q.at("B")) : VectorQ(A.rows());
    const Scalar c = q.contains("c") ? parse_json_scalar(q.at("c")) : Scalar(-1);
    if (c == 0)
        throw Degeneracy("origin-on-surface", "the quadric passes through the origin; translate the problem");
    return normalize(A, B, c);
}

QuadricFamily parse_family(const json& f) {
    const json& a = field(f, "A");
    if (!a.is_array()) throw ParseError("family A must be an array of rows");
    std::vector<std::vector<UniPoly>> A;
    for (const auto& row : a) {
        if (!row.is_array()) throw ParseError("family A must be an array of rows");
        std::vector<UniPoly> r;
        for (const auto& e : row) r.push_back(parse_tpoly(e));
        A.push_back(std::move(r));
    }
    std::vector<UniPoly> B;
    if (f.contains("B")) {
        for (const auto& e : f.at("B")) B.push_back(parse_tpoly(e));
    } else {
        B.assign(A.size(), UniPoly({}, "t"));
    }
    const UniPoly c = f.contains("c") ? parse_tpoly(f.at("c")) : UniPoly::constant(-1, "t");
    std::optional<Scalar> lo, hi;
    if (f.contains("interval")) {
        const json& iv = f.at("interval");
        if (!iv.is_array() || iv.size() != 2) throw ParseError("interval must be [lo, hi] (null for unbounded)");
        if (!iv[0].is_null()) lo = parse_json_scalar(iv[0]);
        if (!iv[1].is_null()) hi = parse_json_scalar(iv[1]);
    }
    return QuadricFamily(std::move(A), std::move(B), c, lo, hi);
}

Kind parse_kind(const std::string& k) {
    for (Kind v : {Kind::PointQuadric, Kind::VarietyQuadric, Kind::QuadricQuadric, Kind::CenteredQuadricQuadric,
                   Kind::FamilyPoint})
        if (k == to_string(v)) return v;
    throw ParseError("unknown problem kind '" + k + "'");
}

int decimal_digits(int bits) { return std::clamp(bits * 3 / 10, 10, 60); }

json decimals(const VectorQ& v, int bits) {
    json out = json::array();
    for (const auto& x : v.entries()) out.push_back(to_decimal(x, decimal_digits(bits)));
    return out;
}

json rationals(const VectorQ& v) {
    json out = json::array();
    for (const auto& x : v.entries()) out.push_back(to_string(x));
    return out;
}

std::string short_decimal(const Scalar& v) { return v == 0 ? "0" : to_decimal(v, 6); }

json intersection_json(const IntersectionResult& ir) {
    json j{{"intersects", ir.intersects}, {"certificate", rational(ir.certificate)}, {"flagged", ir.flagged}};
    if (!ir.phi.is_zero()) j["phi"] = polynomial(ir.phi);
    if (!ir.note.empty()) j["note"] = ir.note;
    return j;
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw ParseError("cannot write '" + path + "'");
    f << text;
}

// ---------------------------------------------------------------------
// Commands

std::string cmd_sweep(const Problem& p, const Grid& g, std::string* exact_csv) {
    if (p.kind != Kind::PointQuadric || p.quadrics[0].dim() != 2)
        throw ParseError("sweep needs a point-quadric problem in the plane");
    std::ostringstream csv, ex;
    csv << "x0,y0,value_sign,value_decimal\n";
    ex << "x0,y0,value\n";
    for (unsigned i = 0; i <= g.steps; ++i) {
        const Scalar x = g.x_min + (g.x_max - g.x_min) * i / g.steps;
        for (unsigned k = 0; k <= g.steps; ++k) {
            const Scalar y = g.y_min + (g.y_max - g.y_min) * k / g.steps;
            const Scalar v = point_discriminant_surface(p.quadrics[0], VectorQ{x, y});
            csv << to_decimal(x, 12) << ',' << to_decimal(y, 12) << ',' << sign(v) << ','
                << (v == 0 ? std::string("0") : to_decimal(v, 12)) << '\n';
            ex << to_string(x) << ',' << to_string(y) << ',' << to_string(v) << '\n';
        }
    }
    if (exact_csv) *exact_csv = ex.str();
    return csv.str();
}

}  // namespace

json distance_json(const Problem& p) {
    switch (p.kind) {
        case Kind::PointQuadric: return report_json(solve_point(p.quadrics[0], *p.point, p.bits), p.exact);
        case Kind::VarietyQuadric: return report_json(solve_variety(p.quadrics[0], *p.variety, p.bits), p.exact);
        case Kind::QuadricQuadric:
            return report_json(solve_general(p.quadrics[0], p.quadrics[1], p.bits), p.exact);
        case Kind::CenteredQuadricQuadric:
            return report_json(solve_centered(p.quadrics[0], p.quadrics[1], p.bits), p.exact);
        case Kind::FamilyPoint: return family_json(family_solve(*p.family, *p.point, p.bits), p.exact);
    }
    return {};
}

json intersect_json(const Problem& p) {
    IntersectionResult ir;
    switch (p.kind) {
        case Kind::PointQuadric:
            ir.certificate = p.quadrics[0].value(*p.point);
            ir.intersects = ir.certificate == 0;
            break;
        case Kind::VarietyQuadric: ir = variety_intersects(p.quadrics[0], *p.variety); break;
        case Kind::QuadricQuadric: ir = general_intersects(p.quadrics[0], p.quadrics[1]); break;
        case Kind::CenteredQuadricQuadric:
            ir.intersects = centered_intersects(p.quadrics[0], p.quadrics[1]);
            break;
        case Kind::FamilyPoint: {
            const auto t = family_touching(*p.family, *p.point, p.bits);
            ir.intersects = t.has_value();
            json j = intersection_json(ir);
            j["t"] = t ? json(rational(*t)) : json(nullptr);
            return j;
        }
    }
    return intersection_json(ir);
}

json poly_json(const Problem& p) {
    json j{{"kind", to_string(p.kind)}};
    switch (p.kind) {
        case Kind::PointQuadric: j["F"] = polynomial(point_distance_poly(p.quadrics[0], *p.point)); break;
        case Kind::VarietyQuadric: j["F"] = polynomial(variety_distance_poly(p.quadrics[0], *p.variety)); break;
        case Kind::QuadricQuadric:
            j["F"] = polynomial(general_distance_poly(p.quadrics[0], p.quadrics[1]));
            break;
        case Kind::CenteredQuadricQuadric:
            j["F"] = polynomial(centered_distance_poly(p.quadrics[0], p.quadrics[1]));
            break;
        case Kind::FamilyPoint: {
            const FamilyPolys f = family_distance_poly(*p.family, *p.point);
            j["interior"] = polynomial(f.interior);
            j["at_lo"] = f.at_lo ? polynomial(*f.at_lo) : json(nullptr);
            j["at_hi"] = f.at_hi ? polynomial(*f.at_hi) : json(nullptr);
            j["degenerate"] = f.degenerate;
            break;
        }
    }
    return j;
}

const char* to_string(Kind k) {
    switch (k) {
        case Kind::PointQuadric: return "point-quadric";
        case Kind::VarietyQuadric: return "variety-quadric";
        case Kind::QuadricQuadric: return "quadric-quadric";
        case Kind::CenteredQuadricQuadric: return "centered-quadric-quadric";
        case Kind::FamilyPoint: return "family-point";
    }
    return "?";
}

Scalar parse_json_scalar(const json& v) {
    try {
        if (v.is_number_integer()) return Scalar(std::to_string(v.get<long long>()));
        if (v.is_string()) return parse_scalar(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    throw ParseError("numbers must be integers or \"p/q\" strings, got " + v.dump());
}

Problem parse_problem(const json& doc) {
    Problem p;
    try {
        p.kind = parse_kind(field(doc, "kind").get<std::string>());
        if (doc.contains("options")) {
            const json& o = doc.at("options");
            if (o.contains("bits")) p.bits = o.at("bits").get<int>();
            if (o.contains("exact")) p.exact = o.at("exact").get<bool>();
        }
        switch (p.kind) {
            case Kind::PointQuadric:
                p.quadrics.push_back(parse_quadric(field(doc, "quadric")));
                p.point = parse_vector(field(doc, "point"));
                break;
            case Kind::VarietyQuadric: {
                p.quadrics.push_back(parse_quadric(field(doc, "quadric")));
                const json& v = field(doc, "variety");
                std::optional<VectorQ> H;
                if (v.contains("H")) H = parse_vector(v.at("H"));
                p.variety = LinearVariety(parse_matrix(field(v, "C")), H);
                if (p.variety->dim() != p.quadrics[0].dim()) throw ParseError("variety and quadric dimensions differ");
                break;
            }
            case Kind::QuadricQuadric:
            case Kind::CenteredQuadricQuadric: {
                const json& qs = field(doc, "quadrics");
                if (!qs.is_array() || qs.size() != 2) throw ParseError("'quadrics' must hold exactly two quadrics");
                for (const auto& q : qs) p.quadrics.push_back(parse_quadric(q));
                if (p.quadrics[0].dim() != p.quadrics[1].dim()) throw ParseError("quadric dimensions differ");
                if (p.kind == Kind::CenteredQuadricQuadric)
                    for (const auto& q : p.quadrics)
                        if (!q.B.is_zero()) throw ParseError("centered quadrics must have B = 0");
                break;
            }
            case Kind::FamilyPoint:
                p.family = parse_family(field(doc, "family"));
                p.point = parse_vector(field(doc, "point"));
                break;
        }
        if (p.point && !p.quadrics.empty() && p.point->dim() != p.quadrics[0].dim())
            throw ParseError("point and quadric dimensions differ");
        if (p.point && p.family && p.point->dim() != p.family->dim())
            throw ParseError("point and family dimensions differ");
    } catch (const json::exception& e) {
        throw ParseError(e.what());
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
    if (p.bits < 16 || p.bits > 4096) throw ParseError("bits must lie in [16, 4096]");
    return p;
}

Problem load_problem(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot read '" + path + "'");
    json doc;
    try {
        doc = json::parse(f);
    } catch (const json::exception& e) {
        throw ParseError(e.what());
    }
    return parse_problem(doc);
}

json rational(const Scalar& v) { return to_string(v); }

json approximation(const Scalar& v, const Scalar& error_bound, int bits) {
    return {{"value", to_string(v)},
            {"decimal", to_decimal(v, decimal_digits(bits))},
            {"error_bound", short_decimal(error_bound)}};
}

json polynomial(const UniPoly& p) {
    json c = json::array();
    for (const auto& x : p.coefficients()) c.push_back(to_string(x));
    return {{"var", p.var()}, {"degree", p.degree()}, {"coefficients", c}};
}

json report_json(const DistanceReport& r, bool exact) {
    const Scalar ulp = pow2(-r.bits);
    json j{{"status", "ok"}, {"intersecting", r.intersecting}, {"bits", r.bits}};
    j["intersection"] = intersection_json(r.intersection);
    if (!r.F.is_zero()) j["F"] = polynomial(r.F);
    j["z_power"] = r.z_power;
    json zs = json::array();
    Scalar z_err = 0;
    for (const auto& z : r.positive_zeros) {
        const Scalar w = z.interval.width();
        json e{{"value", approximation(z.value, w, r.bits)}, {"multiplicity", z.multiplicity}, {"simple", z.is_simple}};
        if (exact) e["isolating_interval"] = {to_string(z.interval.lo), to_string(z.interval.hi)};
        zs.push_back(e);
        if (&z == &r.positive_zeros.front()) z_err = w;
    }
    j["positive_zeros"] = zs;
    if (r.has_value) {
        j["z_star"] = approximation(r.z_star, z_err, r.bits);
        const Scalar d_err = r.d > 0 ? Scalar(ulp + z_err / r.d) : Scalar(ulp);
        j["d"] = approximation(r.d, d_err, r.bits);
    } else {
        j["z_star"] = nullptr;
        j["d"] = nullptr;
    }
    j["simple"] = r.simple;
    j["candidate_z"] = r.candidate_z ? approximation(*r.candidate_z, ulp, r.bits) : json(nullptr);
    json mult = json::array();
    for (const auto& m : r.points.multipliers) mult.push_back(to_decimal(m, decimal_digits(r.bits)));
    j["multipliers"] = mult;
    json pts = json::array();
    for (const auto& p : r.points.pairs) {
        json e{{"x", decimals(p.x, r.bits)}, {"y", decimals(p.y, r.bits)}};
        if (exact) {
            e["x_exact"] = rationals(p.x);
            e["y_exact"] = rationals(p.y);
        }
        pts.push_back(e);
    }
    j["points"] = pts;
    json res = json::array();
    for (const auto& x : r.residuals) res.push_back(short_decimal(x));
    j["residuals"] = res;
    j["warnings"] = r.warnings;
    return j;
}

json family_json(const FamilyReport& r, bool exact) {
    const Scalar ulp = pow2(-r.bits);
    json j{{"status", "ok"}, {"kind", "family-point"}, {"touching", r.touching}, {"bits", r.bits}};
    j["z_star"] = approximation(r.z_star, ulp, r.bits);
    j["d"] = approximation(r.d, ulp, r.bits);
    j["t_star"] = r.t_star ? approximation(*r.t_star, ulp, r.bits) : json(nullptr);
    j["branch"] = r.branch;
    j["degenerate"] = r.polys.degenerate;
    if (!r.touching) {
        j["interior"] = polynomial(r.polys.interior);
        j["at_lo"] = r.polys.at_lo ? polynomial(*r.polys.at_lo) : json(nullptr);
        j["at_hi"] = r.polys.at_hi ? polynomial(*r.polys.at_hi) : json(nullptr);
    }
    json cs = json::array();
    for (const auto& c : r.candidates) {
        json e{{"branch", c.branch},
               {"z", to_decimal(c.z, decimal_digits(r.bits))},
               {"t", c.t ? json(to_decimal(*c.t, decimal_digits(r.bits))) : json(nullptr)},
               {"accepted", c.accepted}};
        if (!c.note.empty()) e["note"] = c.note;
        if (c.branch == "interior" && c.t) {
            e["residual_F"] = short_decimal(c.residual_F);
            e["residual_Ft"] = short_decimal(c.residual_Ft);
        }
        cs.push_back(e);
    }
    j["candidates"] = cs;
    j["member"] = report_json(r.member, exact);
    j["warnings"] = r.warnings;
    return j;
}

Grid parse_grid(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) parts.push_back(item);
    if (parts.size() != 5) throw ParseError("--grid expects x0min,x0max,y0min,y0max,steps");
    Grid g;
    try {
        g.x_min = parse_scalar(parts[0]);
        g.x_max = parse_scalar(parts[1]);
        g.y_min = parse_scalar(parts[2]);
        g.y_max = parse_scalar(parts[3]);
        const Scalar s = parse_scalar(parts[4]);
        if (s.get_den() != 1 || s < 1 || s > 100000) throw ParseError("grid steps must be a positive integer");
        g.steps = static_cast<unsigned>(s.get_num().get_ui());
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    if (g.x_min >= g.x_max || g.y_min >= g.y_max) throw ParseError("grid ranges must be increasing");
    return g;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact distances and intersections of quadrics"};
    app.require_subcommand(1);
    std::string input, out_path, grid_text;
    std::optional<int> bits;
    bool exact = false;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--input,-i", input, "problem file (JSON)")->required();
        sub->add_option("--bits", bits, "precision of approximations in bits (default 128)");
        sub->add_flag("--exact", exact, "include exact rationals and isolating intervals");
        sub->add_option("--out,-o", out_path, "write the result to this file");
    };
    auto* distance = app.add_subcommand("distance", "full distance report");
    auto* intersect = app.add_subcommand("intersect", "intersection test with certificate");
    auto* poly = app.add_subcommand("poly", "the distance polynomial, exactly");
    auto* family = app.add_subcommand("family", "distance to a one-parameter family");
    auto* sweep = app.add_subcommand("sweep", "grid of D_z(F) over a rectangle of points, as CSV");
    for (auto* s : {distance, intersect, poly, family, sweep}) add_common(s);
    sweep->add_option("--grid", grid_text, "x0min,x0max,y0min,y0max,steps")->required();

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        Problem p = load_problem(input);
        if (bits) p.bits = *bits;
        if (exact) p.exact = true;
        if (p.bits < 16 || p.bits > 4096) throw ParseError("bits must lie in [16, 4096]");
        if (*sweep) {
            std::string exact_csv;
            write_output(cmd_sweep(p, parse_grid(grid_text), &exact_csv), out_path, out);
            if (p.exact && !out_path.empty()) write_output(exact_csv, out_path + ".exact.csv", out);
            return 0;
        }
        json result;
        if (*distance) result = distance_json(p);
        if (*intersect) result = intersect_json(p);
        if (*poly) result = poly_json(p);
        if (*family) {
            if (p.kind != Kind::FamilyPoint) throw ParseError("'family' needs a family-point problem");
            result = distance_json(p);
        }
        write_output(result.dump(2) + "\n", out_path, out);
        return 0;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const Degeneracy& e) {
        const json j{{"status", "degenerate"}, {"reason", e.reason()}, {"message", e.what()}};
        out << j.dump(2) << "\n";
        err << "degenerate: " << e.reason() << ": " << e.what() << "\n";
        return 3;
    }
}

}  // namespace qdist::cli
