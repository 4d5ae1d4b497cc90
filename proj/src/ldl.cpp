#include "edmcp/ldl.hpp"

#include <optional>

namespace edmcp {

SymMatrix PsdCertificate::reconstruct(std::size_t dim) const {
    SymMatrix out(dim);
    for (std::size_t k = 0; k < columns.size(); ++k)
        if (!pivots[k].is_zero()) out.add_rank_one(pivots[k], columns[k]);
    return out;
}

PsdCertificate ldl_certify(const SymMatrix& a) {
    const std::size_t n = a.dim();
    // Invariant: work == T a T^T, with T tracked row by row.
    SymMatrix work = a;
    std::vector<Vector> t(n);
    for (std::size_t i = 0; i < n; ++i) t[i] = unit_vector(n, i);

    std::vector<bool> active(n, true);
    PsdCertificate cert;

    auto fail_with = [&](Vector y) {
        // x = T^T y gives x^T a x = y^T work y
        Vector x(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (y[i].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (!t[i][j].is_zero()) x[j] += y[i] * t[i][j];
        }
        cert.psd = false;
        cert.witness = std::move(x);
        cert.pivots.clear();
        cert.columns.clear();
        cert.order.clear();
        return cert;
    };

    for (std::size_t step = 0; step < n; ++step) {
        std::optional<std::size_t> pivot;
        for (std::size_t i = 0; i < n; ++i) {
            if (!active[i]) continue;
            int s = work(i, i).sign();
            if (s < 0) return fail_with(unit_vector(n, i));
            if (s > 0 && !pivot) pivot = i;
        }
        if (!pivot) {
            // Every remaining diagonal entry is zero; any off-diagonal entry
            // in this block makes a 2x2 indefinite minor.
            for (std::size_t i = 0; i < n; ++i) {
                if (!active[i]) continue;
                for (std::size_t j = i + 1; j < n; ++j) {
                    if (!active[j] || work(i, j).is_zero()) continue;
                    Vector y(n);
                    y[i] = 1;
                    y[j] = work(i, j).sign() > 0 ? -1 : 1;
                    return fail_with(std::move(y));
                }
            }
            break;
        }
        const std::size_t p = *pivot;
        const Scalar d = work(p, p);
        Vector col(n);
        col[p] = 1;
        active[p] = false;
        for (std::size_t i = 0; i < n; ++i) {
            if (!active[i] || work(i, p).is_zero()) continue;
            col[i] = work(i, p) / d;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (!active[i] || col[i].is_zero()) continue;
            for (std::size_t j = i; j < n; ++j) {
                if (!active[j] || col[j].is_zero()) continue;
                work.add_to(i, j, -(d * col[i] * col[j]));
            }
            for (std::size_t c = 0; c < n; ++c)
                if (!t[p][c].is_zero()) t[i][c] -= col[i] * t[p][c];
        }
        for (std::size_t i = 0; i < n; ++i)
            if (active[i]) work.set(i, p, 0);
        cert.order.push_back(p);
        cert.pivots.push_back(d);
        cert.columns.push_back(std::move(col));
    }

    cert.psd = true;
    cert.rank = cert.pivots.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (!active[i]) continue;
        cert.order.push_back(i);
        cert.pivots.emplace_back(0);
        cert.columns.push_back(unit_vector(n, i));
        cert.kernel.push_back(t[i]);
    }
    return cert;
}

}  // namespace edmcp
