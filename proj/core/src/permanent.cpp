#include "swaptest/permanent.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace swaptest {

namespace {

void require_square(const ComplexMatrix &m, std::size_t max_dim, const char *who) {
    if (!m.is_square()) {
        throw std::invalid_argument(std::string(who) + ": matrix must be square");
    }
    if (m.rows() > max_dim) {
        throw std::invalid_argument(std::string(who) + ": dimension exceeds supported maximum");
    }
}

} // namespace

Complex permanent_naive(const ComplexMatrix &m) {
    require_square(m, kPermanentNaiveMaxDim, "permanent_naive");
    const std::size_t n = m.rows();
    if (n == 0) {
        return Complex(1.0, 0.0); // empty product over the empty permutation
    }
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Complex total(0.0, 0.0);
    do {
        Complex prod(1.0, 0.0);
        for (std::size_t k = 0; k < n; ++k) {
            prod *= m(k, perm[k]);
        }
        total += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

Complex permanent_ryser(const ComplexMatrix &m) {
    require_square(m, kPermanentRyserMaxDim, "permanent_ryser");
    const std::size_t n = m.rows();
    if (n == 0) {
        return Complex(1.0, 0.0);
    }
    // Per(A) = (-1)^n sum_{S != 0} (-1)^{|S|} prod_i sum_{j in S} a_ij,
    // visiting subsets in Gray-code order so each step updates the row
    // sums by a single column.
    std::vector<Complex> row_sums(n, Complex(0.0, 0.0));
    Complex total(0.0, 0.0);
    std::uint64_t gray_prev = 0;
    const std::uint64_t subsets = std::uint64_t{1} << n;
    for (std::uint64_t k = 1; k < subsets; ++k) {
        const std::uint64_t gray = k ^ (k >> 1);
        const std::uint64_t diff = gray ^ gray_prev;
        const auto col = static_cast<std::size_t>(std::countr_zero(diff));
        const double step = (gray & diff) ? 1.0 : -1.0;
        for (std::size_t i = 0; i < n; ++i) {
            row_sums[i] += step * m(i, col);
        }
        Complex prod(1.0, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            prod *= row_sums[i];
        }
        const std::size_t bits = static_cast<std::size_t>(std::popcount(gray));
        total += ((n - bits) % 2 == 0) ? prod : -prod;
        gray_prev = gray;
    }
    return total;
}

} // namespace swaptest
