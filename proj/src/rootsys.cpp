#include "qkmv/rootsys.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace qkmv {

char series_letter(Series s) { return "ABCD"[static_cast<int>(s)]; }

Series series_from_letter(char c) {
    switch (c) {
        case 'A': return Series::A;
        case 'B': return Series::B;
        case 'C': return Series::C;
        case 'D': return Series::D;
        default: throw std::invalid_argument(std::string("unknown series ") + c);
    }
}

int inner(const Root& a, const Root& b) {
    int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Root operator+(const Root& a, const Root& b) {
    Root r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Root operator-(const Root& a, const Root& b) {
    Root r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Root operator-(const Root& a) { return scaled(a, -1); }

Root scaled(const Root& a, int k) {
    Root r(a);
    for (auto& x : r) x *= k;
    return r;
}

Root eps(int l, int i) {
    Root r(l, 0);
    r[i - 1] = 1;
    return r;
}

Root root_of(int l, int i) {
    Root r(l, 0);
    r[std::abs(i) - 1] += i > 0 ? 1 : -1;
    return r;
}

Root root_of(int l, int i, int j) { return root_of(l, i) + root_of(l, j); }

std::string root_name(const Root& r) {
    std::vector<int> idx;
    for (std::size_t k = 0; k < r.size(); ++k) {
        const int pos = static_cast<int>(k) + 1;
        for (int m = 0; m < std::abs(r[k]); ++m) idx.push_back(r[k] > 0 ? pos : -pos);
    }
    std::ostringstream os;
    os << "e_{";
    if (idx.size() == 2) {
        int a = idx[0], b = idx[1];
        // positive index first; two negatives listed as e_{-j,-i} with i<j
        if (a < 0 && b > 0) std::swap(a, b);
        if (a < 0 && b < 0) std::swap(a, b);
        os << a << "," << b;
    } else {
        for (std::size_t k = 0; k < idx.size(); ++k) os << (k ? "," : "") << idx[k];
    }
    os << "}";
    return os.str();
}

int min_rank(Series s) {
    switch (s) {
        case Series::A: return 3;
        case Series::B: return 3;
        case Series::C: return 2;
        case Series::D: return 4;
    }
    return 0;
}

std::string RootSystem::label() const { return std::string(1, series_letter(series)) + std::to_string(l); }

bool RootSystem::is_root(const Root& r) const {
    return std::find(positive_roots.begin(), positive_roots.end(), r) != positive_roots.end() ||
           std::find(positive_roots.begin(), positive_roots.end(), -r) != positive_roots.end();
}

namespace {

std::vector<Root> ordering(Series s, int l) {
    std::vector<Root> out;
    const int last = s == Series::A ? l - 1 : l;
    for (int i = 1; i <= last; ++i) {
        for (int j = i + 1; j <= l; ++j) out.push_back(eps(l, i) - eps(l, j));
        if (s == Series::A) continue;
        if (s == Series::B) out.push_back(eps(l, i));
        if (s == Series::C) out.push_back(scaled(eps(l, i), 2));
        for (int j = l; j > i; --j) out.push_back(eps(l, i) + eps(l, j));
    }
    return out;
}

std::vector<int> solve_coordinates(const std::vector<Root>& basis, const Root& r) {
    const int n = static_cast<int>(basis.size());
    const int m = static_cast<int>(r.size());
    std::vector<std::vector<mpq_class>> a(m, std::vector<mpq_class>(n + 1));
    for (int row = 0; row < m; ++row) {
        for (int col = 0; col < n; ++col) a[row][col] = basis[col][row];
        a[row][n] = r[row];
    }
    int pivot_row = 0;
    std::vector<int> pivot_col_of_row;
    for (int col = 0; col < n && pivot_row < m; ++col) {
        int p = pivot_row;
        while (p < m && a[p][col] == 0) ++p;
        if (p == m) continue;
        std::swap(a[p], a[pivot_row]);
        for (int row = 0; row < m; ++row) {
            if (row == pivot_row || a[row][col] == 0) continue;
            mpq_class f = a[row][col] / a[pivot_row][col];
            for (int k = col; k <= n; ++k) a[row][k] -= f * a[pivot_row][k];
        }
        pivot_col_of_row.push_back(col);
        ++pivot_row;
    }
    for (int row = pivot_row; row < m; ++row)
        if (a[row][n] != 0) return {};
    std::vector<int> x(n, 0);
    for (int row = 0; row < pivot_row; ++row) {
        const int col = pivot_col_of_row[row];
        mpq_class val = a[row][n] / a[row][col];
        if (val.get_den() != 1) return {};
        x[col] = static_cast<int>(val.get_num().get_si());
    }
    return x;
}

}  // namespace

std::vector<int> simple_coordinates(const RootSystem& rs, const Root& r) {
    return solve_coordinates(rs.simple_roots, r);
}

namespace {

RootSystem build_unchecked(Series s, int l) {
    RootSystem rs;
    rs.series = s;
    rs.l = l;
    for (int i = 1; i < l; ++i) rs.simple_roots.push_back(eps(l, i) - eps(l, i + 1));
    switch (s) {
        case Series::A: rs.theta = eps(l, 1) - eps(l, l); break;
        case Series::B:
            rs.simple_roots.push_back(eps(l, l));
            rs.theta = eps(l, 1) + eps(l, 2);
            break;
        case Series::C:
            rs.simple_roots.push_back(scaled(eps(l, l), 2));
            rs.theta = scaled(eps(l, 1), 2);
            break;
        case Series::D:
            rs.simple_roots.push_back(eps(l, l - 1) + eps(l, l));
            rs.theta = eps(l, 1) + eps(l, 2);
            break;
    }
    rs.normal_ordering = ordering(s, l);
    rs.positive_roots = rs.normal_ordering;
    rs.marks = simple_coordinates(rs, rs.theta);

    const int r = rs.num_simple();
    rs.cartan_matrix.assign(r, std::vector<int>(r));
    rs.serre_exponents.assign(r, std::vector<int>(r));
    for (int i = 0; i < r; ++i) {
        const int aii = inner(rs.simple_roots[i], rs.simple_roots[i]);
        for (int j = 0; j < r; ++j) {
            rs.cartan_matrix[i][j] = 2 * inner(rs.simple_roots[i], rs.simple_roots[j]) / aii;
            rs.serre_exponents[i][j] = 1 - rs.cartan_matrix[i][j];
        }
        rs.affine_exponents.push_back(1 + 2 * inner(rs.simple_roots[i], rs.theta) / aii);
    }
    return rs;
}

}  // namespace

RootSystem build_root_system(Series s, int l) {
    if (l < min_rank(s) || l > 11)
        throw RankOutOfRange(std::string("rank ") + std::to_string(l) + " outside the range of series " +
                             series_letter(s));
    return build_unchecked(s, l);
}

RootSystem build_gl2() { return build_unchecked(Series::A, 2); }

int affine_exponent(const RootSystem& rs, int i) {
    if (i < 1 || i > rs.num_simple()) throw std::out_of_range("simple root index");
    return rs.affine_exponents[i - 1];
}

}  // namespace qkmv
