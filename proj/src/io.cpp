#include "edmcp/io.hpp"

#include <fstream>
#include <sstream>

namespace edmcp::io {

namespace {

Rational rational_field(const json& j, const char* key) {
    if (!j.contains(key)) return Rational(0);
    const json& v = j.at(key);
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long>());
    throw ParseError(std::string("scalar field '") + key + "' must be a \"p/q\" string");
}

long field_radicand(const json& j) {
    if (!j.contains("field")) return 0;
    const json& f = j.at("field");
    if (!f.is_object() || !f.contains("rad") || !f.at("rad").is_number_integer())
        throw ParseError("\"field\" must be {\"rad\": integer}");
    return f.at("rad").get<long>();
}

void check_field(long declared, long actual) {
    if (actual > 1 && declared != actual)
        throw ParseError("entry radicand " + std::to_string(actual) + " does not match field radicand " +
                         std::to_string(declared));
}

std::size_t dimension(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number_integer() || j.at(key).get<long>() < 0)
        throw ParseError(std::string("missing or invalid \"") + key + "\"");
    return j.at(key).get<std::size_t>();
}

}  // namespace

json scalar_to_json(const Scalar& x) {
    if (x.is_rational()) return to_string(x.rat());
    return json{{"rat", to_string(x.rat())}, {"coef", to_string(x.coef())}, {"rad", x.radicand()}};
}

Scalar scalar_from_json(const json& j) {
    try {
        if (j.is_string()) return Scalar(parse_rational(j.get<std::string>()));
        if (j.is_number_integer()) return Scalar(j.get<long>());
        if (j.is_object()) {
            if (!j.contains("rad") || !j.at("rad").is_number_integer())
                throw ParseError("surd scalar needs an integer \"rad\"");
            const long rad = j.at("rad").get<long>();
            if (rad < 0) throw ParseError("surd radicand must be nonnegative");
            return Scalar::surd(rational_field(j, "rat"), rational_field(j, "coef"), rad);
        }
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("bad scalar ") + j.dump() + ": " + e.what());
    }
    throw ParseError("bad scalar " + j.dump());
}

json matrix_to_json(const SymMatrix& a) {
    json entries = json::array();
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) entries.push_back(scalar_to_json(a(i, j)));
    return json{{"n", a.dim()}, {"entries", std::move(entries)}, {"field", {{"rad", a.radicand()}}}};
}

SymMatrix matrix_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("matrix JSON must be an object");
    const std::size_t n = dimension(j, "n");
    if (!j.contains("entries") || !j.at("entries").is_array() || j.at("entries").size() != n * n)
        throw ParseError("\"entries\" must hold n*n scalars");
    std::vector<Scalar> entries;
    entries.reserve(n * n);
    for (const auto& e : j.at("entries")) entries.push_back(scalar_from_json(e));
    SymMatrix a;
    try {
        a = SymMatrix::from_entries(n, std::move(entries));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    check_field(field_radicand(j), a.radicand());
    return a;
}

json factorization_to_json(const CpFactorization& f) {
    json atoms = json::array();
    for (const auto& atom : f.atoms) {
        json support = json::array();
        for (const auto& x : atom.support) support.push_back(scalar_to_json(x));
        atoms.push_back(json{{"weight", scalar_to_json(atom.weight)}, {"support", std::move(support)}});
    }
    return json{{"dim", f.dim},
                {"integral", f.integral},
                {"field", {{"rad", f.radicand()}}},
                {"atoms", std::move(atoms)}};
}

CpFactorization factorization_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("factorization JSON must be an object");
    CpFactorization f;
    f.dim = dimension(j, "dim");
    if (j.contains("integral")) {
        if (!j.at("integral").is_boolean()) throw ParseError("\"integral\" must be a boolean");
        f.integral = j.at("integral").get<bool>();
    }
    if (!j.contains("atoms") || !j.at("atoms").is_array()) throw ParseError("missing \"atoms\" array");
    for (const auto& a : j.at("atoms")) {
        if (!a.is_object() || !a.contains("weight") || !a.contains("support") || !a.at("support").is_array())
            throw ParseError("atom must be {\"weight\": scalar, \"support\": [scalars]}");
        Atom atom{scalar_from_json(a.at("weight")), {}};
        for (const auto& x : a.at("support")) atom.support.push_back(scalar_from_json(x));
        if (atom.support.size() != f.dim)
            throw ParseError("atom support has length " + std::to_string(atom.support.size()) + ", expected " +
                             std::to_string(f.dim));
        // kept verbatim, even zero atoms, so that verify() sees exactly what was written
        f.atoms.push_back(std::move(atom));
    }
    check_field(field_radicand(j), f.radicand());
    return f;
}

json lrl_to_json(const LrlPair& p) {
    json r = json::array();
    for (const auto& row : p.r) r.push_back(json(row));
    return json{{"n", p.l.size()}, {"L", p.l}, {"R", std::move(r)}};
}

json report_to_json(const VerificationReport& r) {
    json out{{"passed", r.passed()},
             {"gram_matches", r.gram_matches},
             {"columns_nonneg", r.columns_nonneg},
             {"kernel_orthogonal", r.kernel_orthogonal},
             {"integrality_ok", r.integrality_ok}};
    if (r.first_discrepancy) {
        const auto& d = *r.first_discrepancy;
        out["first_discrepancy"] = {
            {"i", d.i}, {"j", d.j}, {"expected", scalar_to_json(d.expected)}, {"got", scalar_to_json(d.got)}};
    }
    if (r.first_kernel_violation) {
        const auto& k = *r.first_kernel_violation;
        out["first_kernel_violation"] = {
            {"atom", k.atom}, {"kernel_vector", k.kernel_vector}, {"product", scalar_to_json(k.product)}};
    }
    if (r.first_negative_atom) out["first_negative_atom"] = *r.first_negative_atom;
    return out;
}

json dnn_to_json(const DnnVerdict& v) {
    switch (v.kind) {
        case DnnVerdict::Kind::dnn:
            return json{{"dnn", true}};
        case DnnVerdict::Kind::not_nonneg:
            return json{{"dnn", false}, {"reason", "negative entry"}, {"i", v.i}, {"j", v.j}};
        case DnnVerdict::Kind::not_psd: {
            json w = json::array();
            for (const auto& x : v.witness) w.push_back(scalar_to_json(x));
            return json{{"dnn", false}, {"reason", "not PSD"}, {"witness", std::move(w)}};
        }
    }
    return {};
}

json numeric_to_json(const NumericFactor& f) {
    return json{{"B", f.b}, {"max_residual", f.max_residual}, {"max_entry", f.max_entry}};
}

json outcome_to_json(const SearchOutcome& o, std::size_t dim) {
    json out = o.certificate ? factorization_to_json(*o.certificate)
                             : json{{"dim", dim}, {"integral", true}, {"field", {{"rad", 0}}}, {"atoms", json::array()}};
    out["status"] = to_string(o.status);
    out["nodes"] = o.nodes;
    return out;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

}  // namespace edmcp::io
