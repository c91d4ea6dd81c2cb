#include "nabext/json_io.hpp"

#include <fstream>
#include <sstream>

namespace nabext {

namespace {

Rational rational_field(const json& j, const std::string& what) {
    if (!j.is_string())
        throw ParseError(what + ": expected a rational string");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw ParseError(what + ": " + e.what());
    }
}

Vec vec_field(const json& j, int dim, const std::string& what) {
    if (!j.is_array() || int(j.size()) != dim)
        throw ParseError(what + ": expected an array of " + std::to_string(dim) + " rationals");
    Vec v(dim);
    for (int i = 0; i < dim; ++i)
        v[i] = rational_field(j[i], what);
    return v;
}

std::vector<int> parse_index_key(const std::string& key, const std::string& what) {
    std::vector<int> out;
    if (key.empty())
        return out;
    std::size_t pos = 0;
    while (pos <= key.size()) {
        std::size_t comma = key.find(',', pos);
        std::string tok = key.substr(pos, comma == std::string::npos ? comma : comma - pos);
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError(what + ": bad index key \"" + key + "\"");
        out.push_back(std::stoi(tok));
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    return out;
}

ordered_json vec_to_json(const Vec& v) {
    ordered_json a = ordered_json::array();
    for (const auto& x : v)
        a.push_back(x.str());
    return a;
}

std::string index_key(const std::vector<int>& ix) {
    std::string s;
    for (std::size_t i = 0; i < ix.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(ix[i]);
    }
    return s;
}

}  // namespace

std::string canonical_dump(const ordered_json& j) { return j.dump(2) + "\n"; }

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open file: " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out)
        throw ParseError("cannot open file for writing: " + path);
    out << content;
}

ordered_json algebra_to_json(const LieAlgebra& a) {
    ordered_json j;
    j["dim"] = a.dim();
    j["basis"] = a.basis_names();
    ordered_json brackets = ordered_json::object();
    for (int i = 0; i < a.dim(); ++i)
        for (int k = i + 1; k < a.dim(); ++k)
            if (!vec_is_zero(a.bracket(i, k)))
                brackets[index_key({i, k})] = vec_to_json(a.bracket(i, k));
    j["brackets"] = std::move(brackets);
    return j;
}

LieAlgebra algebra_from_json(const json& j) {
    if (!j.is_object() || !j.contains("dim") || !j["dim"].is_number_integer())
        throw ParseError("algebra: missing integer field \"dim\"");
    const int dim = j["dim"].get<int>();
    if (dim < 0)
        throw ParseError("algebra: negative dim");
    std::vector<std::string> names;
    if (j.contains("basis")) {
        if (!j["basis"].is_array() || int(j["basis"].size()) != dim)
            throw ParseError("algebra: \"basis\" must list one name per dimension");
        for (const auto& n : j["basis"]) {
            if (!n.is_string())
                throw ParseError("algebra: basis names must be strings");
            names.push_back(n.get<std::string>());
        }
    }
    LieAlgebra a(dim, std::move(names));
    if (j.contains("brackets")) {
        if (!j["brackets"].is_object())
            throw ParseError("algebra: \"brackets\" must be an object");
        for (const auto& [key, val] : j["brackets"].items()) {
            const std::vector<int> ix = parse_index_key(key, "algebra brackets");
            if (ix.size() != 2 || ix[0] >= ix[1] || ix[1] >= dim)
                throw ParseError("algebra: bracket key \"" + key +
                                 "\" must be \"i,j\" with 0 <= i < j < dim");
            a.set_bracket(ix[0], ix[1], vec_field(val, dim, "algebra bracket " + key));
        }
    }
    return a;
}

ordered_json cochain_to_json(const Cochain& c) {
    ordered_json j;
    j["arity"] = c.arity();
    ordered_json coeffs = ordered_json::object();
    for (const auto& [mi, v] : c.coeffs())
        coeffs[index_key(mi.indices)] = vec_to_json(v);
    j["coeffs"] = std::move(coeffs);
    return j;
}

Cochain cochain_from_json(const json& j, int source_dim, int target_dim) {
    if (!j.is_object() || !j.contains("arity") || !j["arity"].is_number_integer())
        throw ParseError("cochain: missing integer field \"arity\"");
    const int arity = j["arity"].get<int>();
    if (arity < 0)
        throw ParseError("cochain: negative arity");
    Cochain c(source_dim, arity, target_dim);
    if (j.contains("coeffs")) {
        if (!j["coeffs"].is_object())
            throw ParseError("cochain: \"coeffs\" must be an object");
        for (const auto& [key, val] : j["coeffs"].items()) {
            MultiIndex mi(parse_index_key(key, "cochain coeffs"));
            if (mi.size() != arity || !mi.strictly_increasing() ||
                (!mi.indices.empty() && mi.indices.back() >= source_dim))
                throw ParseError("cochain: key \"" + key +
                                 "\" is not a strictly increasing multi-index of the arity");
            c.set_coeff(std::move(mi), vec_field(val, target_dim, "cochain coeff " + key));
        }
    }
    return c;
}

ordered_json matrix_to_json(const Matrix& m) {
    ordered_json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    ordered_json entries = ordered_json::array();
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            entries.push_back(m.at(r, c).str());
    j["entries"] = std::move(entries);
    return j;
}

std::vector<std::string> matrix_to_flat(const Matrix& m) {
    std::vector<std::string> out;
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            out.push_back(m.at(r, c).str());
    return out;
}

Matrix matrix_from_flat(const json& entries, int rows, int cols, const std::string& what) {
    if (!entries.is_array() || int(entries.size()) != rows * cols)
        throw ParseError(what + ": expected " + std::to_string(rows * cols) +
                         " row-major entries");
    Matrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            m.at(r, c) = rational_field(entries[r * cols + c], what);
    return m;
}

Matrix matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") ||
        !j["rows"].is_number_integer() || !j["cols"].is_number_integer())
        throw ParseError("matrix: missing integer fields \"rows\"/\"cols\"");
    const int rows = j["rows"].get<int>(), cols = j["cols"].get<int>();
    if (rows < 0 || cols < 0)
        throw ParseError("matrix: negative shape");
    if (!j.contains("entries"))
        throw ParseError("matrix: missing \"entries\"");
    return matrix_from_flat(j["entries"], rows, cols, "matrix entries");
}

ordered_json cocycle_to_json(const NonAbelianCocycle& c) {
    ordered_json j;
    j["chi"] = cochain_to_json(c.chi);
    ordered_json psi = ordered_json::array();
    for (const auto& m : c.psi) {
        ordered_json flat = ordered_json::array();
        for (const auto& s : matrix_to_flat(m))
            flat.push_back(s);
        psi.push_back(std::move(flat));
    }
    j["psi"] = std::move(psi);
    return j;
}

NonAbelianCocycle cocycle_from_json(const json& j, int dim_g, int dim_h) {
    if (!j.is_object() || !j.contains("chi") || !j.contains("psi"))
        throw ParseError("cocycle: expected fields \"chi\" and \"psi\"");
    NonAbelianCocycle c;
    c.chi = cochain_from_json(j["chi"], dim_g, dim_h);
    if (c.chi.arity() != 2)
        throw ParseError("cocycle: chi must have arity 2");
    if (!j["psi"].is_array() || int(j["psi"].size()) != dim_g)
        throw ParseError("cocycle: \"psi\" must list one operator per g-basis vector");
    for (int i = 0; i < dim_g; ++i)
        c.psi.push_back(
            matrix_from_flat(j["psi"][i], dim_h, dim_h, "psi[" + std::to_string(i) + "]"));
    return c;
}

ordered_json module_to_json(const ModuleStructure& m) {
    ordered_json j;
    j["space_dim"] = m.space_dim;
    ordered_json action = ordered_json::array();
    for (const auto& a : m.action) {
        ordered_json flat = ordered_json::array();
        for (const auto& s : matrix_to_flat(a))
            flat.push_back(s);
        action.push_back(std::move(flat));
    }
    j["action"] = std::move(action);
    return j;
}

ModuleStructure module_from_json(const json& j, const LieAlgebra& algebra) {
    if (!j.is_object() || !j.contains("space_dim") || !j["space_dim"].is_number_integer())
        throw ParseError("module: missing integer field \"space_dim\"");
    const int q = j["space_dim"].get<int>();
    if (q < 0)
        throw ParseError("module: negative space_dim");
    if (!j.contains("action") || !j["action"].is_array() ||
        int(j["action"].size()) != algebra.dim())
        throw ParseError("module: \"action\" must list one matrix per algebra basis vector");
    ModuleStructure m{algebra, q, {}};
    for (int i = 0; i < algebra.dim(); ++i)
        m.action.push_back(
            matrix_from_flat(j["action"][i], q, q, "action[" + std::to_string(i) + "]"));
    return m;
}

ordered_json lelement_to_json(const LElement& x) {
    ordered_json j;
    j["degree"] = x.degree;
    ordered_json comps = ordered_json::object();
    for (const auto& [b, comp] : x.value.components)
        comps[std::to_string(b.m) + "," + std::to_string(b.n)] = cochain_to_json(comp);
    j["components"] = std::move(comps);
    return j;
}

LElement lelement_from_json(const json& j, const DgLaContext& ctx) {
    if (!j.is_object() || !j.contains("degree") || !j["degree"].is_number_integer())
        throw ParseError("element: missing integer field \"degree\"");
    const int degree = j["degree"].get<int>();
    BigradedCochain bc{ctx.dim_g(), ctx.dim_h(), {}};
    if (j.contains("components")) {
        if (!j["components"].is_object())
            throw ParseError("element: \"components\" must be an object");
        for (const auto& [key, val] : j["components"].items()) {
            const std::vector<int> mn = parse_index_key(key, "element components");
            if (mn.size() != 2)
                throw ParseError("element: component key \"" + key + "\" must be \"m,n\"");
            Cochain comp = cochain_from_json(val, ctx.dim_sum(), ctx.dim_h());
            if (comp.arity() != degree + 1)
                throw ParseError("element: component arity does not match degree");
            for (const auto& [mi, v] : comp.coeffs()) {
                const Bigrade b = bigrade_of(mi, ctx.dim_g());
                if (b.m != mn[0] || b.n != mn[1])
                    throw ParseError("element: coefficient bigrade does not match key " + key);
            }
            if (!comp.is_zero())
                bc.components.emplace(Bigrade{mn[0], mn[1]}, std::move(comp));
        }
    }
    return make_element(ctx, degree, std::move(bc));
}

ordered_json lie_report_to_json(const LieReport& rep, const LieAlgebra& a) {
    ordered_json j;
    j["valid"] = rep.valid;
    ordered_json vs = ordered_json::array();
    for (const auto& v : rep.violations) {
        ordered_json o;
        o["identity"] = v.kind == LieViolation::Kind::Jacobi ? "jacobi" : "antisymmetry";
        ordered_json idx = ordered_json::array();
        ordered_json names = ordered_json::array();
        for (int i : v.indices)
            if (i >= 0) {
                idx.push_back(i);
                names.push_back(a.basis_name(i));
            }
        o["indices"] = std::move(idx);
        o["basis"] = std::move(names);
        o["defect"] = vec_to_json(v.defect);
        vs.push_back(std::move(o));
    }
    j["violations"] = std::move(vs);
    return j;
}

ordered_json cocycle_report_to_json(const CocycleReport& rep) {
    ordered_json j;
    j["valid"] = rep.valid;
    ordered_json vs = ordered_json::array();
    for (const auto& v : rep.violations) {
        ordered_json o;
        switch (v.kind) {
            case CocycleViolation::Kind::Derivation: o["equation"] = "derivation"; break;
            case CocycleViolation::Kind::ActionCompat: o["equation"] = "action_compat"; break;
            case CocycleViolation::Kind::CyclicSum: o["equation"] = "cyclic_sum"; break;
        }
        o["indices"] = v.indices;
        o["defect"] = vec_to_json(v.defect);
        vs.push_back(std::move(o));
    }
    j["violations"] = std::move(vs);
    return j;
}

ordered_json witness_to_json(const WitnessResult& w) {
    ordered_json j;
    switch (w.kind) {
        case WitnessResult::Kind::Found: j["kind"] = "found"; break;
        case WitnessResult::Kind::NotEquivalent: j["kind"] = "not_equivalent"; break;
        case WitnessResult::Kind::Unknown: j["kind"] = "unknown"; break;
    }
    if (w.beta)
        j["beta"] = matrix_to_json(*w.beta);
    if (w.kind == WitnessResult::Kind::NotEquivalent)
        j["stage"] = w.failing_stage;
    if (w.kind == WitnessResult::Kind::Unknown) {
        j["parameters"] = w.residual.parameter_names;
        ordered_json cs = ordered_json::array();
        for (const auto& poly : w.residual.constraints) {
            ordered_json terms = ordered_json::object();
            for (const auto& [mono, coef] : poly.terms) {
                std::string key;
                for (std::size_t i = 0; i < mono.size(); ++i) {
                    if (i)
                        key += "*";
                    key += w.residual.parameter_names[mono[i]];
                }
                terms[key] = coef.str();
            }
            cs.push_back(std::move(terms));
        }
        j["constraints"] = std::move(cs);
    }
    return j;
}

ordered_json cohomology_to_json(const CohomologyResult& r) {
    ordered_json j;
    j["degree"] = r.degree;
    j["dim_cocycles"] = r.dim_cocycles;
    j["dim_coboundaries"] = r.dim_coboundaries;
    j["dim_H"] = r.dim_h;
    ordered_json reps = ordered_json::array();
    for (const auto& c : r.representative_basis)
        reps.push_back(cochain_to_json(c));
    j["representatives"] = std::move(reps);
    return j;
}

}  // namespace nabext
