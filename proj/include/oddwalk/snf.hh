#ifndef ODDWALK_SNF_HH
#define ODDWALK_SNF_HH 1

#include <gmpxx.h>

#include <vector>

namespace oddwalk
{
    // Dense integer matrix, row-major.
    struct IntMatrix
    {
        int rows = 0, cols = 0;
        std::vector<mpz_class> a;

        IntMatrix() = default;
        IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}

        mpz_class & at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
        const mpz_class & at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

        static IntMatrix identity(int n);
        IntMatrix operator*(const IntMatrix & other) const;
        bool operator==(const IntMatrix & other) const = default;
    };

    struct SNFResult
    {
        // Nonzero diagonal entries d_1 | d_2 | ... , all positive.
        std::vector<mpz_class> invariant_factors;
        int rank = 0;
        // U * A * V = D when requested; U and V unimodular.
        IntMatrix u, v, d;
    };

    // Pivot on the entry of least absolute value. with_transforms keeps U, V.
    SNFResult smith_normal_form(const IntMatrix & m, bool with_transforms = false);

    // Determinant by fraction-free elimination (Bareiss); square only.
    mpz_class determinant(const IntMatrix & m);
}

#endif
