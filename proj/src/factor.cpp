#include "edmcp/factor.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace edmcp {

long CpFactorization::radicand() const {
    long r = 0;
    for (const auto& atom : atoms) {
        if (!atom.weight.is_rational()) r = std::max(r, atom.weight.radicand());
        for (const auto& c : atom.support)
            if (!c.is_rational()) r = std::max(r, c.radicand());
    }
    return r;
}

void CpFactorization::add(Scalar weight, Vector support) {
    if (support.size() != dim) throw DimensionMismatch(support.size(), dim, "CpFactorization::add");
    if (weight.is_zero() || is_zero(support)) return;
    atoms.push_back({std::move(weight), std::move(support)});
}

void CpFactorization::embed(const CpFactorization& inner, std::size_t offset) {
    if (inner.dim + offset > dim) throw DimensionMismatch(inner.dim + offset, dim, "CpFactorization::embed");
    for (const auto& atom : inner.atoms) {
        Vector c(dim);
        std::copy(atom.support.begin(), atom.support.end(), c.begin() + static_cast<long>(offset));
        atoms.push_back({atom.weight, std::move(c)});
    }
}

SymMatrix gram(const CpFactorization& f) {
    SymMatrix g(f.dim);
    for (const auto& atom : f.atoms) g.add_rank_one(atom.weight, atom.support);
    return g;
}

VerificationReport verify(const SymMatrix& a, const CpFactorization& f, const std::vector<Vector>& kernel) {
    if (a.dim() != f.dim) throw DimensionMismatch(a.dim(), f.dim, "verify");
    for (const auto& v : kernel)
        if (v.size() != a.dim()) throw DimensionMismatch(v.size(), a.dim(), "verify kernel");

    VerificationReport report;

    report.columns_nonneg = true;
    for (std::size_t k = 0; k < f.atoms.size() && report.columns_nonneg; ++k) {
        const auto& atom = f.atoms[k];
        if (atom.support.size() != f.dim) throw DimensionMismatch(atom.support.size(), f.dim, "verify atom");
        bool ok = atom.weight.sign() >= 0 &&
                  std::all_of(atom.support.begin(), atom.support.end(), [](const Scalar& x) { return x.sign() >= 0; });
        if (!ok) {
            report.columns_nonneg = false;
            report.first_negative_atom = k;
        }
    }

    if (f.integral) {
        for (const auto& atom : f.atoms) {
            bool ok = atom.weight == Scalar(1) && std::all_of(atom.support.begin(), atom.support.end(), [](const Scalar& x) {
                          return x.is_rational() && is_integer(x.rat());
                      });
            if (!ok) {
                report.integrality_ok = false;
                break;
            }
        }
    }

    const SymMatrix g = gram(f);
    report.gram_matches = true;
    for (std::size_t i = 0; i < a.dim() && report.gram_matches; ++i)
        for (std::size_t j = i; j < a.dim(); ++j)
            if (!(a(i, j) == g(i, j))) {
                report.gram_matches = false;
                report.first_discrepancy = Discrepancy{i, j, a(i, j), g(i, j)};
                break;
            }

    report.kernel_orthogonal = true;
    for (std::size_t k = 0; k < f.atoms.size() && report.kernel_orthogonal; ++k)
        for (std::size_t v = 0; v < kernel.size(); ++v) {
            Scalar p = dot(f.atoms[k].support, kernel[v]);
            if (!p.is_zero()) {
                report.kernel_orthogonal = false;
                report.first_kernel_violation = KernelViolation{k, v, p};
                break;
            }
        }
    return report;
}

DnnVerdict dnn_check(const SymMatrix& a) {
    DnnVerdict verdict;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = i; j < a.dim(); ++j)
            if (a(i, j).sign() < 0) {
                verdict.kind = DnnVerdict::Kind::not_nonneg;
                verdict.i = i;
                verdict.j = j;
                return verdict;
            }
    PsdCertificate cert = ldl_certify(a);
    if (!cert.psd) {
        verdict.kind = DnnVerdict::Kind::not_psd;
        verdict.witness = std::move(cert.witness);
    }
    return verdict;
}

namespace {

using Adjacency = std::vector<std::vector<std::size_t>>;

Adjacency pattern_of(const SymMatrix& a) {
    Adjacency adj(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (i != j && !a(i, j).is_zero()) adj[i].push_back(j);
    return adj;
}

bool is_bipartite(const Adjacency& adj) {
    std::vector<int> color(adj.size(), -1);
    for (std::size_t s = 0; s < adj.size(); ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        std::vector<std::size_t> stack{s};
        while (!stack.empty()) {
            std::size_t u = stack.back();
            stack.pop_back();
            for (std::size_t v : adj[u]) {
                if (color[v] < 0) {
                    color[v] = 1 - color[u];
                    stack.push_back(v);
                } else if (color[v] == color[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace

GraphVerdict cp_graph_check(const SymMatrix& a, const CycleSearchOptions& opts) {
    const Adjacency adj = pattern_of(a);
    GraphVerdict verdict;
    if (is_bipartite(adj)) return verdict;

    const bool bounded = a.dim() > opts.max_dim;
    std::size_t steps = 0;
    bool exhausted_budget = false;
    std::vector<std::size_t> path;
    std::vector<bool> on_path(adj.size(), false);

    // Simple cycles are enumerated once per smallest vertex `start`; only
    // vertices larger than `start` may appear on the path.
    std::function<bool(std::size_t, std::size_t)> extend = [&](std::size_t start, std::size_t u) -> bool {
        if (bounded && ++steps > opts.node_budget) {
            exhausted_budget = true;
            return false;
        }
        for (std::size_t v : adj[u]) {
            if (v == start && path.size() >= 5 && path.size() % 2 == 1) return true;
            if (v <= start || on_path[v]) continue;
            path.push_back(v);
            on_path[v] = true;
            if (extend(start, v)) return true;
            on_path[v] = false;
            path.pop_back();
            if (exhausted_budget) return false;
        }
        return false;
    };

    for (std::size_t s = 0; s < adj.size(); ++s) {
        path.assign(1, s);
        std::fill(on_path.begin(), on_path.end(), false);
        on_path[s] = true;
        if (extend(s, s)) {
            verdict.kind = GraphVerdict::Kind::odd_cycle;
            verdict.cycle = path;
            return verdict;
        }
        if (exhausted_budget) break;
    }
    if (exhausted_budget) verdict.kind = GraphVerdict::Kind::resource_limit;
    return verdict;
}

bool special_hypothesis_check(const SymMatrix& a, std::size_t m, const Vector& w, const Scalar& lambda) {
    const std::size_t n = a.dim();
    if (w.size() != n || m > n) return false;
    if (lambda.sign() < 0) return false;
    for (std::size_t i = 0; i < n; ++i) {
        if (i < m ? w[i].sign() <= 0 : w[i].sign() >= 0) return false;
        for (std::size_t j = i + 1; j < n; ++j) {
            bool same_block = (i < m) == (j < m);
            if (same_block ? !a(i, j).is_zero() : a(i, j).sign() < 0) return false;
        }
    }
    Vector aw = a * w;
    for (std::size_t i = 0; i < n; ++i)
        if (!(aw[i] == lambda * w[i])) return false;
    return true;
}

NumericFactor to_numeric(const CpFactorization& f, int digits) {
    const double scale = std::pow(10.0, digits);
    auto round_to = [scale](double x) { return std::round(x * scale) / scale; };

    NumericFactor out;
    out.b.assign(f.dim, std::vector<double>(f.atoms.size(), 0.0));
    for (std::size_t k = 0; k < f.atoms.size(); ++k) {
        const double root = std::sqrt(f.atoms[k].weight.to_double());
        for (std::size_t i = 0; i < f.dim; ++i) out.b[i][k] = round_to(root * f.atoms[k].support[i].to_double());
    }
    const SymMatrix g = gram(f);
    for (std::size_t i = 0; i < f.dim; ++i)
        for (std::size_t j = 0; j < f.dim; ++j) {
            double bbt = 0.0;
            for (std::size_t k = 0; k < f.atoms.size(); ++k) bbt += out.b[i][k] * out.b[j][k];
            const double exact = g(i, j).to_double();
            out.max_entry = std::max(out.max_entry, std::abs(exact));
            out.max_residual = std::max(out.max_residual, std::abs(exact - bbt));
        }
    return out;
}

}  // namespace edmcp
