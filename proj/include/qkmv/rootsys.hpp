#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace qkmv {

enum class Series { A, B, C, D };

char series_letter(Series s);
Series series_from_letter(char c);

struct RankOutOfRange : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Integer vector over eps_1..eps_l.
using Root = std::vector<int>;

int inner(const Root& a, const Root& b);
Root operator+(const Root& a, const Root& b);
Root operator-(const Root& a, const Root& b);
Root operator-(const Root& a);
Root scaled(const Root& a, int k);

// Unit vector eps_i (1-based) of length l.
Root eps(int l, int i);
// Root of the generator e_{i,j} with signed indices: e_{1,-2} -> eps1 - eps2.
Root root_of(int l, int i, int j);
// Root of the short generator e_{i} (series B), signed index.
Root root_of(int l, int i);
// Generator name in the e_{i,-j} index convention, e.g. "e_{1,-2}", "e_{-3}".
std::string root_name(const Root& r);

int min_rank(Series s);

struct RootSystem {
    Series series{};
    int l = 0;  // gl_l index for A, rank otherwise
    std::vector<Root> simple_roots;
    std::vector<Root> positive_roots;   // same content as normal_ordering
    std::vector<Root> normal_ordering;
    Root theta;
    std::vector<int> marks;             // theta = sum marks[i] * simple_roots[i]
    std::vector<std::vector<int>> cartan_matrix;    // a_ij = 2(a_i,a_j)/(a_i,a_i)
    std::vector<std::vector<int>> serre_exponents;  // 1 - a_ij
    std::vector<int> affine_exponents;              // 1 + 2(a_i,theta)/(a_i,a_i)

    int num_simple() const { return static_cast<int>(simple_roots.size()); }
    std::string label() const;  // "A3", "C2", ...
    bool is_root(const Root& r) const;
};

RootSystem build_root_system(Series s, int l);
// gl_2 (sl_2 plus a central direction). Only the general Drinfeldian catalog
// accepts it.
RootSystem build_gl2();

// 1-based index into the simple roots.
int affine_exponent(const RootSystem& rs, int i);

// Coefficients of a root in the simple-root basis (empty if not in the lattice span).
std::vector<int> simple_coordinates(const RootSystem& rs, const Root& r);

}  // namespace qkmv
