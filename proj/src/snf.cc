#include <oddwalk/errors.hh>
#include <oddwalk/snf.hh>

#include <utility>

namespace oddwalk
{
    IntMatrix IntMatrix::identity(int n)
    {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            m.at(i, i) = 1;
        return m;
    }

    IntMatrix IntMatrix::operator*(const IntMatrix & o) const
    {
        if (cols != o.rows)
            throw InputError("matrix shapes do not match");
        IntMatrix out(rows, o.cols);
        for (int i = 0; i < rows; ++i)
            for (int k = 0; k < cols; ++k) {
                if (at(i, k) == 0)
                    continue;
                for (int j = 0; j < o.cols; ++j)
                    out.at(i, j) += at(i, k) * o.at(k, j);
            }
        return out;
    }

    namespace
    {
        struct Work
        {
            IntMatrix d, u, v;
            bool track;

            void swap_rows(int i, int j)
            {
                if (i == j)
                    return;
                for (int c = 0; c < d.cols; ++c)
                    std::swap(d.at(i, c), d.at(j, c));
                if (track)
                    for (int c = 0; c < u.cols; ++c)
                        std::swap(u.at(i, c), u.at(j, c));
            }

            void swap_cols(int i, int j)
            {
                if (i == j)
                    return;
                for (int r = 0; r < d.rows; ++r)
                    std::swap(d.at(r, i), d.at(r, j));
                if (track)
                    for (int r = 0; r < v.rows; ++r)
                        std::swap(v.at(r, i), v.at(r, j));
            }

            // row i += q * row j
            void add_row(int i, int j, const mpz_class & q)
            {
                for (int c = 0; c < d.cols; ++c)
                    if (d.at(j, c) != 0)
                        d.at(i, c) += q * d.at(j, c);
                if (track)
                    for (int c = 0; c < u.cols; ++c)
                        if (u.at(j, c) != 0)
                            u.at(i, c) += q * u.at(j, c);
            }

            // col i += q * col j
            void add_col(int i, int j, const mpz_class & q)
            {
                for (int r = 0; r < d.rows; ++r)
                    if (d.at(r, j) != 0)
                        d.at(r, i) += q * d.at(r, j);
                if (track)
                    for (int r = 0; r < v.rows; ++r)
                        if (v.at(r, j) != 0)
                            v.at(r, i) += q * v.at(r, j);
            }

            void negate_row(int i)
            {
                for (int c = 0; c < d.cols; ++c)
                    d.at(i, c) = -d.at(i, c);
                if (track)
                    for (int c = 0; c < u.cols; ++c)
                        u.at(i, c) = -u.at(i, c);
            }
        };
    }

    SNFResult smith_normal_form(const IntMatrix & m, bool with_transforms)
    {
        Work w{m, {}, {}, with_transforms};
        if (with_transforms) {
            w.u = IntMatrix::identity(m.rows);
            w.v = IntMatrix::identity(m.cols);
        }
        auto & d = w.d;
        const int lim = std::min(m.rows, m.cols);
        bool exhausted = false;
        for (int t = 0; t < lim && ! exhausted; ++t) {
            while (true) {
                // smallest nonzero |entry| in the trailing block
                int pi = -1, pj = -1;
                mpz_class best;
                for (int i = t; i < d.rows; ++i)
                    for (int j = t; j < d.cols; ++j)
                        if (d.at(i, j) != 0 && (pi == -1 || abs(d.at(i, j)) < best)) {
                            best = abs(d.at(i, j));
                            pi = i;
                            pj = j;
                        }
                if (pi == -1) {
                    // trailing block is zero
                    exhausted = true;
                    break;
                }
                w.swap_rows(t, pi);
                w.swap_cols(t, pj);

                bool clean = true;
                for (int i = t + 1; i < d.rows; ++i)
                    if (d.at(i, t) != 0) {
                        mpz_class q;
                        mpz_fdiv_q(q.get_mpz_t(), d.at(i, t).get_mpz_t(), d.at(t, t).get_mpz_t());
                        w.add_row(i, t, -q);
                        if (d.at(i, t) != 0)
                            clean = false;
                    }
                for (int j = t + 1; j < d.cols; ++j)
                    if (d.at(t, j) != 0) {
                        mpz_class q;
                        mpz_fdiv_q(q.get_mpz_t(), d.at(t, j).get_mpz_t(), d.at(t, t).get_mpz_t());
                        w.add_col(j, t, -q);
                        if (d.at(t, j) != 0)
                            clean = false;
                    }
                if (! clean)
                    continue;

                // divisibility: fold a non-multiple row into row t and retry
                int bad = -1;
                for (int i = t + 1; i < d.rows && bad == -1; ++i)
                    for (int j = t + 1; j < d.cols; ++j)
                        if (d.at(i, j) % d.at(t, t) != 0) {
                            bad = i;
                            break;
                        }
                if (bad != -1) {
                    w.add_row(t, bad, 1);
                    continue;
                }
                if (d.at(t, t) < 0)
                    w.negate_row(t);
                break;
            }
        }
        SNFResult out;
        out.rank = 0;
        for (int i = 0; i < lim; ++i)
            if (d.at(i, i) != 0) {
                out.invariant_factors.push_back(d.at(i, i));
                ++out.rank;
            }
        if (with_transforms) {
            out.u = std::move(w.u);
            out.v = std::move(w.v);
            out.d = std::move(w.d);
        }
        return out;
    }

    mpz_class determinant(const IntMatrix & m)
    {
        if (m.rows != m.cols)
            throw InputError("determinant of a non-square matrix");
        const int n = m.rows;
        if (n == 0)
            return 1;
        IntMatrix a = m;
        mpz_class prev = 1;
        int sign = 1;
        for (int k = 0; k < n - 1; ++k) {
            if (a.at(k, k) == 0) {
                int r = k + 1;
                while (r < n && a.at(r, k) == 0)
                    ++r;
                if (r == n)
                    return 0;
                for (int c = 0; c < n; ++c)
                    std::swap(a.at(k, c), a.at(r, c));
                sign = -sign;
            }
            for (int i = k + 1; i < n; ++i)
                for (int j = k + 1; j < n; ++j) {
                    mpz_class x = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                    mpz_divexact(a.at(i, j).get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
                }
            prev = a.at(k, k);
        }
        return sign * a.at(n - 1, n - 1);
    }
}
