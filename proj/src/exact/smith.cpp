#include "roq/exact/smith.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace roq {

namespace {

struct Reducer {
    IntMatrix d, l, linv, r, rinv;

    void swap_rows(std::size_t a, std::size_t b) {
        d.swap_rows(a, b);
        l.swap_rows(a, b);
        linv.swap_cols(a, b);
    }
    void swap_cols(std::size_t a, std::size_t b) {
        d.swap_cols(a, b);
        r.swap_cols(a, b);
        rinv.swap_rows(a, b);
    }
    // row[dst] += c * row[src]
    void add_row(std::size_t dst, std::size_t src, const Integer& c) {
        d.add_row(dst, src, c);
        l.add_row(dst, src, c);
        linv.add_col(src, dst, -c);
    }
    // col[dst] += c * col[src]
    void add_col(std::size_t dst, std::size_t src, const Integer& c) {
        d.add_col(dst, src, c);
        r.add_col(dst, src, c);
        rinv.add_row(src, dst, -c);
    }
    void negate_row(std::size_t i) {
        d.negate_row(i);
        l.negate_row(i);
        linv.negate_col(i);
    }
};

Integer abs_val(const Integer& v) { return v < 0 ? Integer(-v) : v; }

}  // namespace

std::vector<Integer> SmithForm::invariants() const {
    std::vector<Integer> out;
    for (std::size_t i = 0; i < rank; ++i) out.push_back(diag(i, i));
    return out;
}

SmithForm smith_normal_form(const IntMatrix& m) {
    const std::size_t nr = m.rows();
    const std::size_t nc = m.cols();
    Reducer s{m, IntMatrix::identity(nr), IntMatrix::identity(nr), IntMatrix::identity(nc),
              IntMatrix::identity(nc)};

    std::size_t t = 0;
    while (t < nr && t < nc) {
        // pivot: smallest nonzero entry of the trailing block
        bool found = false;
        std::size_t pi = 0, pj = 0;
        Integer best;
        for (std::size_t i = t; i < nr; ++i)
            for (std::size_t j = t; j < nc; ++j) {
                const Integer& v = s.d(i, j);
                if (v == 0) continue;
                Integer a = abs_val(v);
                if (!found || a < best) {
                    found = true;
                    best = a;
                    pi = i;
                    pj = j;
                }
            }
        if (!found) break;
        s.swap_rows(t, pi);
        s.swap_cols(t, pj);

        for (;;) {
            bool dirty = false;
            for (std::size_t i = t + 1; i < nr; ++i) {
                if (s.d(i, t) == 0) continue;
                Integer q = s.d(i, t) / s.d(t, t);
                s.add_row(i, t, -q);
                if (s.d(i, t) != 0) dirty = true;
            }
            for (std::size_t j = t + 1; j < nc; ++j) {
                if (s.d(t, j) == 0) continue;
                Integer q = s.d(t, j) / s.d(t, t);
                s.add_col(j, t, -q);
                if (s.d(t, j) != 0) dirty = true;
            }
            if (dirty) {
                // move the smallest remainder into the pivot position
                std::size_t bi = t, bj = t;
                Integer b = abs_val(s.d(t, t));
                for (std::size_t i = t + 1; i < nr; ++i)
                    if (s.d(i, t) != 0 && abs_val(s.d(i, t)) < b) {
                        b = abs_val(s.d(i, t));
                        bi = i;
                        bj = t;
                    }
                for (std::size_t j = t + 1; j < nc; ++j)
                    if (s.d(t, j) != 0 && abs_val(s.d(t, j)) < b) {
                        b = abs_val(s.d(t, j));
                        bi = t;
                        bj = j;
                    }
                s.swap_rows(t, bi);
                s.swap_cols(t, bj);
                continue;
            }
            // divisibility of the trailing block by the pivot
            bool fixed = false;
            for (std::size_t i = t + 1; i < nr && !fixed; ++i)
                for (std::size_t j = t + 1; j < nc; ++j)
                    if (s.d(i, j) % s.d(t, t) != 0) {
                        s.add_row(t, i, 1);
                        fixed = true;
                        break;
                    }
            if (!fixed) break;
        }
        if (s.d(t, t) < 0) s.negate_row(t);
        ++t;
    }

    SmithForm out;
    out.diag = std::move(s.d);
    out.left = std::move(s.l);
    out.left_inv = std::move(s.linv);
    out.right = std::move(s.r);
    out.right_inv = std::move(s.rinv);
    out.rank = t;
    return out;
}

}  // namespace roq
