#include "cprime/instances.hpp"

#include <algorithm>
#include <stdexcept>

namespace cprime {

namespace {

using Matrix = std::vector<Index>;

Matrix mat_mul2(const Matrix& a, const Matrix& b)
{
    Matrix c(4);
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            c[static_cast<std::size_t>(i * 2 + j)] = (a[static_cast<std::size_t>(i * 2)] * b[static_cast<std::size_t>(j)] +
                                                      a[static_cast<std::size_t>(i * 2 + 1)] * b[static_cast<std::size_t>(2 + j)]) % 2;
        }
    }
    return c;
}

}  // namespace

std::vector<std::vector<Index>> column_module_matrices()
{
    const Matrix zero{0, 0, 0, 0};
    const Matrix ones{1, 1, 1, 1};
    std::vector<Matrix> elems{zero, ones};
    // r * J for r in ring-index order, M_2(Z_2) encoded with entry (0,0) least significant.
    for (Index r = 0; r < 16; ++r) {
        Matrix rm{r & 1, (r >> 1) & 1, (r >> 2) & 1, (r >> 3) & 1};
        Matrix img = mat_mul2(rm, ones);
        if (std::find(elems.begin(), elems.end(), img) == elems.end()) elems.push_back(img);
    }
    return elems;
}

FiniteModule make_column_module(const RingPtr& m2z2)
{
    if (m2z2->size() != 16) throw std::invalid_argument("column module needs M_2(Z_2)");
    const auto elems = column_module_matrices();
    const auto n = static_cast<Index>(elems.size());
    auto lookup = [&](const Matrix& m) {
        return static_cast<Index>(std::find(elems.begin(), elems.end(), m) - elems.begin());
    };
    std::vector<Index> add(static_cast<std::size_t>(n * n));
    std::vector<Index> act(static_cast<std::size_t>(16 * n));
    for (Index x = 0; x < n; ++x) {
        for (Index y = 0; y < n; ++y) {
            Matrix s(4);
            for (std::size_t p = 0; p < 4; ++p) s[p] = (elems[static_cast<std::size_t>(x)][p] + elems[static_cast<std::size_t>(y)][p]) % 2;
            add[static_cast<std::size_t>(x * n + y)] = lookup(s);
        }
        for (Index r = 0; r < 16; ++r) {
            Matrix rm{r & 1, (r >> 1) & 1, (r >> 2) & 1, (r >> 3) & 1};
            act[static_cast<std::size_t>(r * n + x)] = lookup(mat_mul2(rm, elems[static_cast<std::size_t>(x)]));
        }
    }
    return make_module_from_tables(m2z2, "M2(Z2).J", n, std::move(add), std::move(act), 0);
}

Index reduce_integer_matrix(const FiniteRing& base, Index k, const std::vector<long long>& entries)
{
    std::vector<Index> reduced(entries.size());
    const long long n = base.size();
    for (std::size_t i = 0; i < entries.size(); ++i) reduced[i] = static_cast<Index>(((entries[i] % n) + n) % n);
    return encode_matrix(base, k, reduced);
}

FiniteModule make_reduction_module(const RingPtr& zn, Index m)
{
    const Index n = zn->size();
    if (m < 1 || n % m != 0) throw std::invalid_argument("reduction module needs m | n");
    std::vector<Index> add(static_cast<std::size_t>(m * m));
    std::vector<Index> act(static_cast<std::size_t>(n * m));
    for (Index x = 0; x < m; ++x) {
        for (Index y = 0; y < m; ++y) add[static_cast<std::size_t>(x * m + y)] = (x + y) % m;
        for (Index r = 0; r < n; ++r) act[static_cast<std::size_t>(r * m + x)] = (r * x) % m;
    }
    return make_module_from_tables(zn, "Z" + std::to_string(m) + "@" + zn->name(), m, std::move(add), std::move(act), 0);
}

FiniteModule make_z4_with_z2_action(const RingPtr& z2)
{
    if (z2->size() != 2) throw std::invalid_argument("expects Z_2");
    std::vector<Index> add(16);
    for (Index x = 0; x < 4; ++x) {
        for (Index y = 0; y < 4; ++y) add[static_cast<std::size_t>(x * 4 + y)] = (x + y) % 4;
    }
    std::vector<Index> act(8);
    for (Index x = 0; x < 4; ++x) {
        act[static_cast<std::size_t>(z2->zero() * 4 + x)] = 0;
        act[static_cast<std::size_t>(z2->one() * 4 + x)] = x;
    }
    return make_module_from_tables(z2, "Z4@Z2", 4, std::move(add), std::move(act), 0, AxiomCheck::skip_scalar_additivity);
}

}  // namespace cprime
