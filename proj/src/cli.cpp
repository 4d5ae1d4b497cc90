#include "edmcp/cli.hpp"

#include "edmcp/edm.hpp"
#include "edmcp/io.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

namespace edmcp::cli {

namespace {

using io::json;

Scalar parse_scalar_flag(const std::string& text) {
    try {
        return io::scalar_from_json(json::parse(text));
    } catch (const json::parse_error&) {
        return io::scalar_from_json(json(text));
    }
}

json read_input(const std::string& path, std::istream& in) {
    if (!path.empty() && path != "-") return io::read_json_file(path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw io::ParseError(std::string("stdin: ") + e.what());
    }
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty() || path == "-")
        out << text << '\n';
    else
        io::write_text_file(path, text + '\n');
}

std::vector<Vector> kernel_for(const SymMatrix& a, const std::string& mode) {
    if (mode == "none") return {};
    const PsdCertificate cert = ldl_certify(a);
    return cert.kernel;
}

struct Manifest {
    std::string command;
    json parameters = json::object();
    json result = json::object();
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    void write(const std::string& path, std::ostream& err) const {
        const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const json m{{"command", command},
                     {"parameters", parameters},
                     {"version", kVersion},
                     {"elapsed_seconds", elapsed},
                     {"result", result}};
        if (path.empty())
            err << m.dump() << '\n';
        else
            io::write_text_file(path, m.dump(2) + '\n');
    }
};

const Scalar& default_q() {
    static const Scalar q = Scalar::sqrt(make_rational(7, 5));
    return q;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact constructions and CP certificates for distance matrices of arithmetic progressions", "edmcp"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    // gen
    auto* gen = app.add_subcommand("gen", "Write a matrix as JSON");
    std::string gen_kind, gen_out, gen_q, gen_points;
    int gen_n = 0, gen_i = 0;
    gen->add_option("kind", gen_kind)->required()->check(CLI::IsMember({"an", "edm", "bn", "rn", "qn", "ei"}));
    gen->add_option("--n", gen_n, "Dimension");
    gen->add_option("--i", gen_i, "Residue modulus for ei");
    gen->add_option("--q", gen_q, "Shift multiplier for rn/qn as a JSON scalar");
    gen->add_option("--points", gen_points, "Comma-separated rationals for edm");
    gen->add_option("--out", gen_out, "Output path");

    // factorize
    auto* fac = app.add_subcommand("factorize", "Build a factorization");
    std::string fac_method, fac_in, fac_out, fac_q, fac_shift, fac_manifest;
    int fac_n = 0, fac_digits = -1;
    bool fac_verify = false, fac_expand = false, fac_jordan = false;
    fac->add_option("method", fac_method)
        ->required()
        ->check(CLI::IsMember({"lrl", "optimal", "inductive", "integer", "dd"}));
    fac->add_option("--n", fac_n, "Dimension");
    fac->add_option("--in", fac_in, "Input matrix JSON (dd only)");
    fac->add_option("--q", fac_q, "Shift multiplier for inductive as a JSON scalar (default sqrt(7/5))");
    fac->add_option("--shift", fac_shift, "dd with --n: factorize A_n + shift*I (default g_D(n))");
    fac->add_flag("--verify", fac_verify, "Verify exactly; exit 1 on failure");
    fac->add_option("--numeric", fac_digits, "Also emit a decimal factor rounded to DIGITS");
    fac->add_flag("--expand", fac_expand, "integer: weight-one atoms instead of weighted blocks");
    fac->add_flag("--jordan", fac_jordan, "integer: use the Jordan-totient shift for every n");
    fac->add_option("--out", fac_out, "Output path");
    fac->add_option("--manifest", fac_manifest, "Manifest path (default stderr)");

    // verify
    auto* ver = app.add_subcommand("verify", "Verify a factorization against a matrix");
    std::string ver_matrix, ver_fac, ver_kernel = "auto", ver_out;
    ver->add_option("matrix", ver_matrix, "Matrix JSON path")->required();
    ver->add_option("factorization", ver_fac, "Factorization JSON path")->required();
    ver->add_option("--kernel", ver_kernel)->check(CLI::IsMember({"auto", "none"}));
    ver->add_option("--out", ver_out, "Output path");

    // search
    auto* sea = app.add_subcommand("search", "Exhaustive integer CP factorization search");
    std::string sea_in, sea_out, sea_kernel = "auto", sea_manifest;
    SearchConfig cfg;
    std::int64_t sea_max_entry = 0;
    bool sea_any = false;
    sea->add_option("matrix", sea_in, "Matrix JSON path (default stdin)");
    sea->add_option("--node-limit", cfg.node_limit)->check(CLI::PositiveNumber);
    sea->add_option("--jobs", cfg.jobs)->check(CLI::Range(1u, 256u));
    sea->add_option("--max-entry", sea_max_entry, "Cap on column entries")->check(CLI::PositiveNumber);
    sea->add_option("--kernel", sea_kernel)->check(CLI::IsMember({"auto", "none"}));
    sea->add_flag("--any", sea_any, "With several jobs, return whichever certificate is found first");
    sea->add_option("--out", sea_out, "Output path");
    sea->add_option("--manifest", sea_manifest, "Manifest path (default stderr)");

    // bounds
    auto* bnd = app.add_subcommand("bounds", "Table of shift functions");
    int bnd_max = 0;
    std::string bnd_format = "csv", bnd_out;
    bnd->add_option("--n-max", bnd_max)->required()->check(CLI::Range(2, 1'000'000));
    bnd->add_option("--format", bnd_format)->check(CLI::IsMember({"csv", "json"}));
    bnd->add_option("--out", bnd_out, "Output path");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : bad_input;
    }

    try {
        if (*gen) {
            SymMatrix a;
            auto need_n = [&](int lo) {
                if (gen_n < lo) throw std::invalid_argument("--n must be at least " + std::to_string(lo));
            };
            const Scalar q = gen_q.empty() ? default_q() : parse_scalar_flag(gen_q);
            if (gen_kind == "an") {
                need_n(2);
                a = build_An(gen_n);
            } else if (gen_kind == "bn") {
                need_n(2);
                a = build_Bn(gen_n);
            } else if (gen_kind == "rn") {
                need_n(2);
                a = build_Rn(gen_n, scaled_min_shift(q));
            } else if (gen_kind == "qn") {
                need_n(3);
                a = build_Qn(gen_n, scaled_min_shift(q));
            } else if (gen_kind == "ei") {
                need_n(2);
                a = build_Ei(gen_n, gen_i);
            } else {
                std::vector<Rational> pts;
                std::stringstream ss(gen_points);
                for (std::string tok; std::getline(ss, tok, ',');) pts.push_back(parse_rational(tok));
                if (pts.empty()) throw std::invalid_argument("edm needs --points");
                a = build_edm(PointSet(std::move(pts)));
            }
            emit(io::matrix_to_json(a).dump(), gen_out, out);
            return ok;
        }

        if (*fac) {
            Manifest manifest{"factorize " + fac_method};
            manifest.parameters = {{"n", fac_n}, {"verify", fac_verify}};
            auto need_n = [&](int lo) {
                if (fac_n < lo) throw std::invalid_argument("--n must be at least " + std::to_string(lo));
            };
            if (!fac_in.empty() && fac_method != "dd")
                throw std::invalid_argument("--in is only accepted by the dd method");

            if (fac_method == "lrl") {
                need_n(3);
                const LrlPair p = lrl_factorize(fac_n);
                const bool good = p.product() == build_An(fac_n);
                manifest.result = {{"atoms", nullptr}, {"verified", fac_verify ? json(good) : json(nullptr)}};
                emit(io::lrl_to_json(p).dump(), fac_out, out);
                manifest.write(fac_manifest, err);
                return fac_verify && !good ? verify_failed : ok;
            }

            SymMatrix a;
            CpFactorization f;
            std::vector<Vector> kernel;
            if (fac_method == "optimal") {
                need_n(2);
                a = build_Bn(fac_n);
                f = optimal_factorize(fac_n);
            } else if (fac_method == "inductive") {
                need_n(2);
                const Scalar q = fac_q.empty() ? default_q() : parse_scalar_flag(fac_q);
                manifest.parameters["q"] = io::scalar_to_json(q);
                a = build_An(fac_n).plus_identity(q * Scalar(f_min(fac_n)));
                f = inductive_factorize(fac_n, q);
            } else if (fac_method == "integer") {
                need_n(2);
                if (fac_n <= 5 && !fac_jordan) {
                    SmallnCertificate c = smalln_certificate(fac_n);
                    a = c.matrix;
                    f = fac_expand ? c.integral : c.weighted;
                } else {
                    a = build_An(fac_n).plus_identity(Scalar(g_jordan(fac_n)));
                    f = jordan_sum_factorize(fac_n, WeightExpansion::four_squares);
                }
            } else {
                if (!fac_in.empty()) {
                    a = io::matrix_from_json(read_input(fac_in, in));
                } else {
                    need_n(2);
                    const Scalar shift = fac_shift.empty() ? Scalar(g_diag(fac_n)) : parse_scalar_flag(fac_shift);
                    a = build_An(fac_n).plus_identity(shift);
                }
                f = dd_factorize(a);
            }

            json result = io::factorization_to_json(f);
            if (fac_digits >= 0) result["numeric"] = io::numeric_to_json(to_numeric(f, fac_digits));
            manifest.result = {{"atoms", f.atoms.size()}, {"rad", f.radicand()}};
            int code = ok;
            if (fac_verify) {
                kernel = kernel_for(a, "auto");
                const VerificationReport report = verify(a, f, kernel);
                manifest.result["verification"] = io::report_to_json(report);
                if (!report.passed()) code = verify_failed;
            }
            emit(result.dump(), fac_out, out);
            manifest.write(fac_manifest, err);
            return code;
        }

        if (*ver) {
            const SymMatrix a = io::matrix_from_json(read_input(ver_matrix, in));
            const CpFactorization f = io::factorization_from_json(read_input(ver_fac, in));
            if (f.dim != a.dim()) throw DimensionMismatch(f.dim, a.dim(), "factorization vs matrix");
            const VerificationReport report = verify(a, f, kernel_for(a, ver_kernel));
            emit(io::report_to_json(report).dump(), ver_out, out);
            return report.passed() ? ok : verify_failed;
        }

        if (*sea) {
            const SymMatrix a = io::matrix_from_json(read_input(sea_in, in));
            Manifest manifest{"search"};
            const DnnVerdict dnn = dnn_check(a);
            if (!dnn.is_dnn()) {
                json report = io::dnn_to_json(dnn);
                report["status"] = "rejected";
                emit(report.dump(), sea_out, out);
                return bad_input;
            }
            if (sea_max_entry > 0) cfg.max_column_entry = sea_max_entry;
            cfg.reproducible = !sea_any;
            if (sea_kernel == "auto") cfg.kernel = integer_kernel(ldl_certify(a).kernel);
            manifest.parameters = {{"n", a.dim()},
                                   {"node_limit", cfg.node_limit},
                                   {"jobs", cfg.jobs},
                                   {"kernel", sea_kernel},
                                   {"reproducible", cfg.reproducible}};
            const SearchOutcome o = integer_cp_search(a, cfg);
            manifest.result = {{"status", to_string(o.status)}, {"nodes", o.nodes}};
            emit(io::outcome_to_json(o, a.dim()).dump(), sea_out, out);
            manifest.write(sea_manifest, err);
            return o.status == SearchOutcome::Status::limit ? resource_limit : ok;
        }

        if (*bnd) {
            const Scalar q = default_q();
            std::ostringstream table;
            table << std::setprecision(10);
            json rows = json::array();
            if (bnd_format == "csv") table << "n,f,sqrt(7/5)*f,g_J,g_D,g_J/f\n";
            // running sum of J_2 keeps the table linear in n-max
            Rational gj = 0;
            for (int n = 2; n <= bnd_max; ++n) {
                gj += jordan_totient2(n - 1);
                const Rational f = f_min(n);
                const double scaled = (q * Scalar(f)).to_double();
                const double ratio = Rational(gj / f).get_d();
                if (bnd_format == "csv") {
                    table << n << ',' << f.get_num() << ',' << std::fixed << std::setprecision(4) << scaled << ','
                          << gj.get_num() << ',' << g_diag(n).get_num() << ',' << std::setprecision(6) << ratio
                          << '\n'
                          << std::defaultfloat;
                } else {
                    rows.push_back({{"n", n},
                                    {"f", to_string(f)},
                                    {"sqrt75_f", scaled},
                                    {"g_J", to_string(gj)},
                                    {"g_D", to_string(g_diag(n))},
                                    {"g_J_over_f", ratio}});
                }
            }
            constexpr double kLimit = 1.66381;  // 2 / zeta(3)
            if (bnd_format == "csv") {
                table << "# g_J/f tends to " << kLimit << " as n grows";
                emit(table.str(), bnd_out, out);
            } else {
                emit(json{{"rows", std::move(rows)}, {"g_J_over_f_limit", kLimit}}.dump(), bnd_out, out);
            }
            return ok;
        }
    } catch (const NotCertifiedError& e) {
        err << "construction error: " << e.what() << '\n';
        return construction_error;
    } catch (const InternalContradiction& e) {
        err << "construction error: " << e.what() << '\n';
        return construction_error;
    } catch (const std::invalid_argument& e) {
        err << "invalid input: " << e.what() << '\n';
        return bad_input;
    } catch (const std::domain_error& e) {
        err << "invalid input: " << e.what() << '\n';
        return bad_input;
    } catch (const RadicandMismatch& e) {
        err << "invalid input: " << e.what() << '\n';
        return bad_input;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return bad_input;
    }
    return ok;
}

}  // namespace edmcp::cli
