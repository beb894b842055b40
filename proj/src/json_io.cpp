#include "unipart/json_io.hpp"

#include <sstream>

namespace unipart {

namespace {

[[noreturn]] void schema_fail(const std::string& path, const std::string& detail) {
    throw SchemaError(path, detail);
}

const Json& field(const Json& j, const char* name, const std::string& path) {
    if (!j.is_object()) schema_fail(path, "expected an object");
    auto it = j.find(name);
    if (it == j.end()) schema_fail(path, std::string("missing field \"") + name + "\"");
    return *it;
}

long int_field(const Json& j, const char* name, const std::string& path) {
    const Json& v = field(j, name, path);
    if (!v.is_number_integer()) schema_fail(path + "." + name, "expected an integer");
    return v.get<long>();
}

Rational rational_from_json(const Json& j, const std::string& path) {
    try {
        if (j.is_string()) return parse_rational(j.get<std::string>());
        if (j.is_number_integer()) return Rational(j.get<long>());
    } catch (const Error& e) {
        schema_fail(path, e.what());
    }
    schema_fail(path, "expected a rational string or integer");
}

std::vector<Rational> coeffs_from_json(const Json& j, const std::string& path) {
    if (!j.is_array()) schema_fail(path, "expected a coefficient array");
    std::vector<Rational> out;
    for (size_t i = 0; i < j.size(); ++i)
        out.push_back(rational_from_json(j[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

Json coeffs_to_json(const CycNumber& v) {
    Json a = Json::array();
    for (const auto& q : v.coeffs()) a.push_back(format_rational(q));
    return a;
}

// Entries inside a matrix/vector: rational string, integer, or coeff array,
// interpreted at the enclosing conductor.
CycNumber entry_from_json(const Json& j, long m, const std::string& path) {
    try {
        if (j.is_array()) return CycNumber::from_coeffs(m, coeffs_from_json(j, path));
        return CycNumber::from_rational(rational_from_json(j, path), m);
    } catch (const Error& e) {
        schema_fail(path, e.what());
    }
}

Json entry_to_json(const CycNumber& v) {
    if (v.is_rational()) return format_rational(v.rational_value());
    return coeffs_to_json(v);
}

std::vector<std::vector<CycNumber>> rows_from_json(const Json& j, long m, long expect_cols,
                                                   const std::string& path) {
    if (!j.is_array() || j.empty()) schema_fail(path, "expected a nonempty array of rows");
    std::vector<std::vector<CycNumber>> rows;
    for (size_t r = 0; r < j.size(); ++r) {
        const Json& row = j[r];
        std::string rpath = path + "[" + std::to_string(r) + "]";
        if (!row.is_array() || row.empty()) schema_fail(rpath, "expected a nonempty row array");
        if (expect_cols > 0 && static_cast<long>(row.size()) != expect_cols)
            schema_fail(rpath, "row length differs");
        std::vector<CycNumber> entries;
        for (size_t c = 0; c < row.size(); ++c)
            entries.push_back(entry_from_json(row[c], m, rpath + "[" + std::to_string(c) + "]"));
        rows.push_back(std::move(entries));
    }
    for (const auto& row : rows)
        if (row.size() != rows[0].size()) schema_fail(path, "ragged rows");
    return rows;
}

Json rows_to_json(const CMatrix& a) {
    Json rows = Json::array();
    for (long r = 0; r < a.rows(); ++r) {
        Json row = Json::array();
        for (long c = 0; c < a.cols(); ++c) row.push_back(entry_to_json(a.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string route_name(Route r) { return r == Route::A ? "A" : "B"; }

Verdict verdict_from_name(const std::string& name, const std::string& path) {
    for (Verdict v : {Verdict::ContractibleByMainTheorem, Verdict::ContractibleByDimensionCriterion,
                      Verdict::InconclusiveProjectiveElementaryAbelian,
                      Verdict::InconclusiveTrivialProjectiveImage})
        if (name == verdict_name(v)) return v;
    schema_fail(path, "unknown verdict \"" + name + "\"");
}

} // namespace

Json scalar_to_json(const CycNumber& v) {
    Json j = Json::object();
    j["m"] = v.conductor();
    j["coeffs"] = coeffs_to_json(v);
    return j;
}

CycNumber scalar_from_json(const Json& j, const std::string& path) {
    if (j.is_string() || j.is_number_integer())
        return CycNumber::from_rational(rational_from_json(j, path), 1);
    long m = int_field(j, "m", path);
    try {
        return CycNumber::from_coeffs(m, coeffs_from_json(field(j, "coeffs", path), path + ".coeffs"));
    } catch (const Error& e) {
        schema_fail(path, e.what());
    }
}

Json matrix_to_json(const CMatrix& a) {
    Json j = Json::object();
    j["m"] = a.conductor();
    j["rows"] = rows_to_json(a);
    return j;
}

CMatrix matrix_from_json(const Json& j, const std::string& path) {
    long m = int_field(j, "m", path);
    auto rows = rows_from_json(field(j, "rows", path), m, 0, path + ".rows");
    try {
        return CMatrix::from_rows(std::move(rows));
    } catch (const Error& e) {
        schema_fail(path, e.what());
    }
}

Json subspace_to_json(const CSubspace& s) {
    Json j = Json::object();
    j["n"] = s.ambient_dim();
    j["m"] = s.conductor();
    Json basis = Json::array();
    for (const auto& v : s.basis_vectors()) {
        Json row = Json::array();
        for (const auto& e : v) row.push_back(entry_to_json(e));
        basis.push_back(std::move(row));
    }
    j["basis"] = std::move(basis);
    return j;
}

CSubspace subspace_from_json(const Json& j, const std::string& path) {
    long n = int_field(j, "n", path);
    long m = int_field(j, "m", path);
    const Json& basis = field(j, "basis", path);
    try {
        if (basis.is_array() && basis.empty()) return CSubspace::zero(n, m);
        auto rows = rows_from_json(basis, m, n, path + ".basis");
        return CSubspace::span(n, m, std::move(rows));
    } catch (const Error& e) {
        schema_fail(path, e.what());
    }
}

Json partition_to_json(const OrthoPartition& p) {
    Json j = Json::object();
    j["n"] = p.ambient_dim();
    j["m"] = p.conductor();
    Json classes = Json::array();
    for (const auto& cls : p.classes()) classes.push_back(subspace_to_json(cls));
    j["classes"] = std::move(classes);
    return j;
}

OrthoPartition partition_from_json(const Json& j, const std::string& path) {
    long n = int_field(j, "n", path);
    long m = int_field(j, "m", path);
    const Json& classes = field(j, "classes", path);
    if (!classes.is_array()) schema_fail(path + ".classes", "expected an array");
    std::vector<CSubspace> parsed;
    for (size_t i = 0; i < classes.size(); ++i)
        parsed.push_back(subspace_from_json(classes[i], path + ".classes[" + std::to_string(i) + "]"));
    try {
        return OrthoPartition::from_classes(n, m, std::move(parsed));
    } catch (const Error& e) {
        schema_fail(path, e.what());
    }
}

GroupInput group_from_json(const Json& j) {
    const std::string path = "$";
    GroupInput input;
    if (j.contains("p")) input.p = int_field(j, "p", path);
    const Json& gens = field(j, "generators", path);
    if (!gens.is_array() || gens.empty()) schema_fail(path + ".generators", "expected a nonempty array");
    long file_m = j.contains("m") ? int_field(j, "m", path) : 0;
    for (size_t i = 0; i < gens.size(); ++i) {
        std::string gpath = path + ".generators[" + std::to_string(i) + "]";
        if (gens[i].is_object()) {
            input.generators.push_back(matrix_from_json(gens[i], gpath));
        } else {
            if (file_m <= 0) schema_fail(gpath, "rows need a file-level conductor \"m\"");
            auto rows = rows_from_json(gens[i], file_m, 0, gpath);
            try {
                input.generators.push_back(CMatrix::from_rows(std::move(rows)));
            } catch (const Error& e) {
                schema_fail(gpath, e.what());
            }
        }
    }
    return input;
}

Json report_to_json(const AnalysisReport& r) {
    Json j = Json::object();
    j["schema_version"] = kSchemaVersion;
    j["verdict"] = verdict_name(r.verdict);
    j["contractible"] = verdict_is_contractible(r.verdict);
    if (r.witness) j["route"] = route_name(r.witness->route);
    else j["route"] = nullptr;
    if (r.witness) {
        Json w = Json::object();
        w["v_representative"] = matrix_to_json(r.witness->v_representative);
        w["lift_b"] = matrix_to_json(r.witness->lift_b);
        Json jg = Json::array();
        for (const auto& g : r.witness->j_generators) jg.push_back(matrix_to_json(g));
        w["j_generators"] = std::move(jg);
        w["mu"] = partition_to_json(r.witness->mu);
        j["witness"] = std::move(w);
    } else {
        j["witness"] = nullptr;
    }
    j["diagnostics"] = r.diagnostics;
    return j;
}

AnalysisReport report_from_json(const Json& j) {
    const std::string path = "$";
    const Json& verdict = field(j, "verdict", path);
    if (!verdict.is_string()) schema_fail(path + ".verdict", "expected a string");
    AnalysisReport r{verdict_from_name(verdict.get<std::string>(), path + ".verdict"), std::nullopt, {}};
    const Json& w = field(j, "witness", path);
    if (!w.is_null()) {
        const Json& route = field(j, "route", path);
        if (!route.is_string() || (route != "A" && route != "B"))
            schema_fail(path + ".route", "expected \"A\" or \"B\"");
        Witness witness{
            matrix_from_json(field(w, "v_representative", path + ".witness"), path + ".witness.v_representative"),
            matrix_from_json(field(w, "lift_b", path + ".witness"), path + ".witness.lift_b"),
            {},
            partition_from_json(field(w, "mu", path + ".witness"), path + ".witness.mu"),
            route == "A" ? Route::A : Route::B,
        };
        const Json& jg = field(w, "j_generators", path + ".witness");
        if (!jg.is_array()) schema_fail(path + ".witness.j_generators", "expected an array");
        for (size_t i = 0; i < jg.size(); ++i)
            witness.j_generators.push_back(
                matrix_from_json(jg[i], path + ".witness.j_generators[" + std::to_string(i) + "]"));
        r.witness = std::move(witness);
    }
    if (j.contains("diagnostics")) {
        const Json& d = j["diagnostics"];
        if (!d.is_array()) schema_fail(path + ".diagnostics", "expected an array");
        for (const auto& line : d) {
            if (!line.is_string()) schema_fail(path + ".diagnostics", "expected strings");
            r.diagnostics.push_back(line.get<std::string>());
        }
    }
    return r;
}

Json homology_to_json(const HomologyResult& h) {
    Json j = Json::object();
    j["schema_version"] = kSchemaVersion;
    j["betti_minus_one"] = h.betti_minus_one;
    j["reduced_betti"] = h.betti;
    Json torsion = Json::array();
    for (const auto& degree : h.torsion) {
        Json t = Json::array();
        for (const auto& d : degree) t.push_back(d.get_str());
        torsion.push_back(std::move(t));
    }
    j["torsion"] = std::move(torsion);
    j["acyclic"] = h.is_z_acyclic();
    j["pretty"] = h.to_string();
    return j;
}

ChainComplex complex_from_json(const Json& j) {
    const std::string path = "$";
    long n = int_field(j, "n_vertices", path);
    const Json& facets = field(j, "facets", path);
    if (!facets.is_array()) schema_fail(path + ".facets", "expected an array");
    std::vector<std::vector<long>> parsed;
    for (size_t i = 0; i < facets.size(); ++i) {
        const Json& f = facets[i];
        std::string fpath = path + ".facets[" + std::to_string(i) + "]";
        if (!f.is_array() || f.empty()) schema_fail(fpath, "expected a nonempty vertex array");
        std::vector<long> verts;
        for (const auto& v : f) {
            if (!v.is_number_integer()) schema_fail(fpath, "expected integer vertices");
            verts.push_back(v.get<long>());
        }
        parsed.push_back(std::move(verts));
    }
    try {
        return complex_from_facets(n, parsed);
    } catch (const Error& e) {
        schema_fail(path, e.what());
    }
}

namespace {

Json sweep_row_to_json(const SweepRow& row) {
    Json r = Json::object();
    std::string gens;
    for (size_t i = 0; i < row.generators.size(); ++i) {
        if (i) gens += " ";
        gens += perm_cycles(row.generators[i]);
    }
    if (gens.empty()) gens = "()";
    r["subgroup_generators"] = gens;
    r["order"] = row.order;
    r["elementary_abelian"] = row.elementary_abelian;
    r["fixed_poset_size"] = row.fixed_poset_size;
    r["betti_minus_one"] = row.fixed_homology.betti_minus_one;
    r["reduced_betti"] = row.fixed_homology.betti;
    Json torsion = Json::array();
    for (const auto& degree : row.fixed_homology.torsion) {
        Json t = Json::array();
        for (const auto& d : degree) t.push_back(d.get_str());
        torsion.push_back(std::move(t));
    }
    r["torsion"] = std::move(torsion);
    r["acyclic"] = row.acyclic;
    // Non-acyclic fixed posets must come from elementary abelian subgroups.
    r["implication_holds"] = row.acyclic || row.elementary_abelian;
    return r;
}

std::string csv_quote(const std::string& cell) {
    if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
    std::string out = "\"";
    for (char c : cell) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace

Json sweep_to_json(const std::vector<SweepRow>& rows, long n, long p) {
    Json j = Json::object();
    j["schema_version"] = kSchemaVersion;
    j["n"] = n;
    j["p"] = p;
    Json out = Json::array();
    for (const auto& row : rows) out.push_back(sweep_row_to_json(row));
    j["rows"] = std::move(out);
    return j;
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream out;
    out << "subgroup_generators,order,elementary_abelian,fixed_poset_size,reduced_betti,torsion,"
           "acyclic,implication_holds\n";
    for (const auto& row : rows) {
        Json r = sweep_row_to_json(row);
        out << csv_quote(r["subgroup_generators"].get<std::string>()) << ","
            << row.order << ","
            << (row.elementary_abelian ? "true" : "false") << ","
            << row.fixed_poset_size << ","
            << csv_quote(r["reduced_betti"].dump()) << ","
            << csv_quote(r["torsion"].dump()) << ","
            << (row.acyclic ? "true" : "false") << ","
            << (row.acyclic || row.elementary_abelian ? "true" : "false") << "\n";
    }
    return out.str();
}

std::string sweep_to_text(const std::vector<SweepRow>& rows) {
    std::ostringstream out;
    for (const auto& row : rows) {
        Json r = sweep_row_to_json(row);
        out << "order " << row.order
            << "  generators " << r["subgroup_generators"].get<std::string>()
            << "  elementary_abelian " << (row.elementary_abelian ? "yes" : "no")
            << "  fixed_poset_size " << row.fixed_poset_size
            << "  homology " << row.fixed_homology.to_string()
            << "  acyclic " << (row.acyclic ? "yes" : "no")
            << "  implication " << (row.acyclic || row.elementary_abelian ? "holds" : "FAILS")
            << "\n";
    }
    return out.str();
}

} // namespace unipart
