#include "casimir/noncomm_linalg.hpp"

#include <bit>
#include <future>

#include "casimir/config.hpp"

namespace casimir {

namespace {

// Depth-first expansion over row choices, one column at a time. `inv` tracks
// the inversion parity of the row sequence; `prefix` is the product of the
// factors chosen so far, leftmost column first.
void det_dfs(const std::vector<const UEAMatrix*>& mats, int col, std::uint32_t used, int inv,
             const UPoly& prefix, UPoly& acc) {
    int m = static_cast<int>(mats.size());
    if (col == m) {
        acc = acc + (inv ? prefix.scale(Rat(-1)) : prefix);
        return;
    }
    const UEAMatrix& a = *mats[col];
    for (int r = 0; r < m; ++r) {
        if (used & (1u << r)) continue;
        const UPoly& e = a.at(r, col);
        if (e.is_zero()) continue;
        int add = std::popcount(used >> (r + 1)) & 1;
        det_dfs(mats, col + 1, used | (1u << r), inv ^ add, prefix * e, acc);
    }
}

UPoly det_core(const std::vector<const UEAMatrix*>& mats) {
    int m = static_cast<int>(mats.size());
    if (m == 0) throw std::invalid_argument("empty determinant");
    if (m > 31) throw std::invalid_argument("determinant size over 31");
    for (const UEAMatrix* a : mats)
        if (a->rows() != m || a->cols() != m)
            throw std::invalid_argument("factor matrices must be square of the expansion size");

    auto branch = [&mats, m](int r) {
        UPoly acc;
        const UPoly& e = mats[0]->at(r, 0);
        if (!e.is_zero()) det_dfs(mats, 1, 1u << r, 0, e, acc);
        return acc;
    };

    UPoly acc;
    if (limits().parallelism > 1 && m >= 4) {
        std::vector<std::future<UPoly>> parts;
        parts.reserve(m);
        for (int r = 0; r < m; ++r) parts.push_back(std::async(std::launch::async, branch, r));
        for (auto& p : parts) acc = acc + p.get();
    } else {
        for (int r = 0; r < m; ++r) acc = acc + branch(r);
    }
    return acc;
}

}  // namespace

UPoly column_det(const UEAMatrix& a) {
    std::vector<const UEAMatrix*> mats(static_cast<std::size_t>(a.rows()), &a);
    return det_core(mats);
}

UPoly alpha_det(const std::vector<UEAMatrix>& mats) {
    std::vector<const UEAMatrix*> ptrs;
    ptrs.reserve(mats.size());
    for (const UEAMatrix& a : mats) ptrs.push_back(&a);
    return det_core(ptrs);
}

}  // namespace casimir
