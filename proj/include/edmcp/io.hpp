#pragma once

#include "edmcp/constructors.hpp"
#include "edmcp/factor.hpp"
#include "edmcp/integer_cp.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace edmcp::io {

using json = nlohmann::json;

/// Malformed or inconsistent JSON input.
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Scalars: "p/q" for rationals, {"rat":"p/q","coef":"p/q","rad":s} otherwise.
// Readers also take bare integers and let "rat"/"coef" default to 0.
json scalar_to_json(const Scalar& x);
Scalar scalar_from_json(const json& j);

// {"n":n, "entries":[row-major scalars], "field":{"rad":s}}
json matrix_to_json(const SymMatrix& a);
SymMatrix matrix_from_json(const json& j);

// {"dim":n, "integral":bool, "field":{"rad":s}, "atoms":[{"weight":w,"support":[...]}]}
json factorization_to_json(const CpFactorization& f);
CpFactorization factorization_from_json(const json& j);

// {"n":n, "L":[[...]], "R":[[...]]}; not a CP certificate.
json lrl_to_json(const LrlPair& p);

json report_to_json(const VerificationReport& r);
json dnn_to_json(const DnnVerdict& v);
json numeric_to_json(const NumericFactor& f);

/// Factorization JSON (when found) plus "status" and "nodes".
json outcome_to_json(const SearchOutcome& o, std::size_t dim);

json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace edmcp::io
