#pragma once

#include "qkmv/relations.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qkmv {

// Square matrix over Scalar, stored by rows with only nonzero entries.
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(int n) : rows_(n) {}
    static Matrix identity(int n);
    static Matrix unit(int n, int i, int j);  // 0-based elementary matrix
    static Matrix diagonal(const std::vector<Scalar>& d);

    int dim() const { return static_cast<int>(rows_.size()); }
    Scalar at(int i, int j) const;
    void set(int i, int j, const Scalar& c);
    void add(int i, int j, const Scalar& c);
    const std::map<int, Scalar>& row(int i) const { return rows_[i]; }

    bool is_zero() const;
    int nonzeros() const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Scalar& c, const Matrix& a);
    friend bool operator==(const Matrix& a, const Matrix& b);

    Matrix map(const std::function<Scalar(const Scalar&)>& f) const;
    std::string str() const;

private:
    std::vector<std::map<int, Scalar>> rows_;
};

Matrix kron(const Matrix& a, const Matrix& b);

struct UnknownSymbol : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct GateFailure : std::runtime_error {
    GateFailure(const std::string& what, std::string relation_id)
        : std::runtime_error(what), id(std::move(relation_id)) {}
    std::string id;
};

enum class RepKind { FundamentalGl, VectorB, VectorC, VectorD, EvaluationGl, Classical };

std::string rep_kind_name(RepKind k);

struct Representation {
    std::string tag;
    RootSystem rs;
    bool classical = false;
    int n = 0;
    std::vector<Root> basis_weights;
    std::map<Root, Matrix> root_vectors;  // every root, composites evaluated
    std::optional<Matrix> xi;             // image of the affine letter
    Assignment specialization;            // applied to every scalar (v := 1 for classical reps)

    Matrix letter(const GenSym& g) const;
};

// Image of the affine letter under the change of generator (tau * rho(e~)),
// the gl evaluation map (u * rho(e~)), a classical evaluation (u * rho(e_{-theta}))
// or an arbitrary matrix.
struct XiMode {
    enum Kind { TildeSubstitution, Evaluation, ClassicalEvaluation, Custom } kind = TildeSubstitution;
    Scalar parameter = Scalar::variable(Var::u);
    std::optional<Matrix> custom;

    static XiMode tilde() { return {TildeSubstitution, Scalar(1), std::nullopt}; }
    static XiMode evaluation(Var spectral = Var::u) { return {Evaluation, Scalar::variable(spectral), std::nullopt}; }
    static XiMode classical_evaluation(Var spectral = Var::u) {
        return {ClassicalEvaluation, Scalar::variable(spectral), std::nullopt};
    }
    static XiMode with_matrix(Matrix m) { return {Custom, Scalar(1), std::move(m)}; }
};

// Builds the representation and runs its gate (uqg catalog for quantum
// kinds, classical-current catalog for the classical kind). The classical kind
// uses the classical vector/fundamental module of rs.series and carries the
// affine image u * rho(e_{-theta}). EvaluationGl carries u * rho(e~).
Representation build_representation(RepKind kind, const RootSystem& rs, int sign = +1);
// Same without the gate.
Representation build_representation_unchecked(RepKind kind, const RootSystem& rs, int sign = +1);

// V (x) V with the generators acting through the coproduct
// e_a -> e_a (x) 1 + k_a^{-1} (x) e_a, e_{-a} -> e_{-a} (x) k_a + 1 (x) e_{-a}
// (primitive in the classical case). Much less degenerate than V itself.
Representation tensor_square(const Representation& rep);

// Adds the affine image and checks its weight relations.
Representation extend_with_xi(const Representation& rep, const XiMode& mode);

Matrix evaluate(const Representation& rep, const NcExpr& x);
Matrix evaluate(const Representation& a, const Representation& b, const TensorExpr& x);
Matrix evaluate(const Representation& rep, const TensorExpr& x);
Matrix evaluate(const Representation& rep, const Tensor3Expr& x);

struct RelationResult {
    std::string id;
    std::string key;
    bool pass = false;
    int defect = 0;  // nonzero entries of the evaluated difference
    std::string note;
};

struct Report {
    std::string title;
    std::vector<RelationResult> results;

    bool all_pass() const;
    int failures() const;
    const RelationResult* find_key(const std::string& key) const;
};

// Evaluates lhs - rhs of every relation; failures are data.
Report verify_catalog(const Representation& rep, const Catalog& cat);
Report verify_relations(const Representation& rep, const std::vector<Relation>& rels, const std::string& title);

// Elements in which the affine letter stays symbolic: a word M0 xi M1 xi ... is
// stored as the tensor M0 (x) M1 (x) ..., keyed by the row/column indices.
struct XiPoly {
    std::map<int, std::map<std::vector<int>, Scalar>> parts;

    bool is_zero() const;
    friend bool operator==(const XiPoly& a, const XiPoly& b) { return a.parts == b.parts; }
};

// With weight_restricted, only index paths where each xi slot connects basis
// vectors differing by -theta are kept: the image of xi always lies in that
// subspace, and relations derived with the weight relation of xi are only
// equal there.
XiPoly xi_polynomial_form(const NcExpr& x, const Representation& rep, bool weight_restricted = true);
// Substitutes a matrix for xi.
Matrix collapse(const XiPoly& p, const Matrix& xi);
bool xi_poly_equal(const XiPoly& a, const XiPoly& b);
// a = c * b for one scalar c != 0 (or both zero).
std::optional<Scalar> xi_poly_ratio(const XiPoly& a, const XiPoly& b);

// Affine family xi = base + sum_k t_k directions[k] of matrices supported on
// the weight -theta entries, cut out by relations of xi-degree <= 1.
struct XiFamily {
    Matrix base;
    std::vector<Matrix> directions;
    bool consistent = true;
};

XiFamily solve_linear_xi(const Representation& rep, const std::vector<const Relation*>& rels);

// An XiPoly restricted to a family: coefficients keyed by matrix entry and the
// sorted direction indices of the monomial in t.
using FamilyPoly = std::map<std::tuple<int, int, std::vector<int>>, Scalar>;

FamilyPoly restrict_to_family(const XiPoly& p, const XiFamily& f);
std::optional<Scalar> family_poly_ratio(const FamilyPoly& a, const FamilyPoly& b);

// General and explicit Drinfeldian catalogs on the vector module of rs (or its
// tensor square) with xi symbolic on the weight -theta entries:
//  - linear relations sharing a key agree up to one scalar;
//  - the weight relations (kweight vs weight, different Cartan bases) vanish;
//  - the linear relations of both catalogs cut out the same affine family of
//    xi matrices, on which the quadratic relations agree up to one scalar.
Report general_explicit_equivalence(const RootSystem& rs, bool square = false);

// Both claims of the scaling automorphism: uniform xi-degree of every
// quantum-current relation, and for gl the shifted evaluation point.
Report verify_scaling_automorphism(const RootSystem& rs);

// Perturbs one entry of one generator matrix and reports whether the uqg gate
// notices (a failing relation is the expected outcome).
Report negative_control(const RootSystem& rs);

// Worker count from QKMV_WORKERS (default: hardware concurrency).
int worker_count();
// Caps worker_count() on the calling thread; 0 removes the cap.
void set_thread_worker_cap(int n);

}  // namespace qkmv
