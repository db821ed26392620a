#include "qkmv/reps.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <sstream>
#include <functional>
#include <set>
#include <thread>

namespace qkmv {

// ---------------------------------------------------------------------------
// Matrix

Matrix Matrix::identity(int n) {
    Matrix m(n);
    for (int i = 0; i < n; ++i) m.rows_[i].emplace(i, Scalar(1));
    return m;
}

Matrix Matrix::unit(int n, int i, int j) {
    Matrix m(n);
    m.rows_[i].emplace(j, Scalar(1));
    return m;
}

Matrix Matrix::diagonal(const std::vector<Scalar>& d) {
    Matrix m(static_cast<int>(d.size()));
    for (std::size_t i = 0; i < d.size(); ++i) m.set(static_cast<int>(i), static_cast<int>(i), d[i]);
    return m;
}

Scalar Matrix::at(int i, int j) const {
    auto it = rows_[i].find(j);
    return it == rows_[i].end() ? Scalar() : it->second;
}

void Matrix::set(int i, int j, const Scalar& c) {
    if (c.is_zero())
        rows_[i].erase(j);
    else
        rows_[i][j] = c;
}

void Matrix::add(int i, int j, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = rows_[i].try_emplace(j, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) rows_[i].erase(it);
}

bool Matrix::is_zero() const {
    return std::all_of(rows_.begin(), rows_.end(), [](const auto& r) { return r.empty(); });
}

int Matrix::nonzeros() const {
    int n = 0;
    for (const auto& r : rows_) n += static_cast<int>(r.size());
    return n;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (rows_.empty()) return *this = o;
    for (int i = 0; i < o.dim(); ++i)
        for (const auto& [j, c] : o.rows_[i]) add(i, j, c);
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (rows_.empty()) rows_.resize(o.dim());
    for (int i = 0; i < o.dim(); ++i)
        for (const auto& [j, c] : o.rows_[i]) add(i, j, -c);
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix out(a.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (const auto& [k, c] : a.rows_[i])
            for (const auto& [j, d] : b.rows_[k]) out.add(i, j, c * d);
    return out;
}

Matrix operator*(const Scalar& c, const Matrix& a) {
    if (c.is_zero()) return Matrix(a.dim());
    Matrix out = a;
    for (auto& r : out.rows_)
        for (auto& [j, x] : r) x *= c;
    return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
    if (a.dim() != b.dim()) return false;
    for (int i = 0; i < a.dim(); ++i) {
        if (a.rows_[i].size() != b.rows_[i].size()) return false;
        for (const auto& [j, c] : a.rows_[i]) {
            auto it = b.rows_[i].find(j);
            if (it == b.rows_[i].end() || !(it->second == c)) return false;
        }
    }
    return true;
}

Matrix Matrix::map(const std::function<Scalar(const Scalar&)>& f) const {
    Matrix out(dim());
    for (int i = 0; i < dim(); ++i)
        for (const auto& [j, c] : rows_[i]) out.set(i, j, f(c));
    return out;
}

std::string Matrix::str() const {
    std::ostringstream os;
    for (int i = 0; i < dim(); ++i)
        for (const auto& [j, c] : rows_[i]) os << "(" << i << "," << j << "): " << c.str() << "\n";
    return os.str();
}

Matrix kron(const Matrix& a, const Matrix& b) {
    const int n = a.dim(), m = b.dim();
    Matrix out(n * m);
    for (int i = 0; i < n; ++i)
        for (const auto& [j, c] : a.row(i))
            for (int k = 0; k < m; ++k)
                for (const auto& [l, d] : b.row(k)) out.set(i * m + k, j * m + l, c * d);
    return out;
}

// ---------------------------------------------------------------------------
// Representations

std::string rep_kind_name(RepKind k) {
    switch (k) {
        case RepKind::FundamentalGl: return "fundamental-gl";
        case RepKind::VectorB: return "vector-B";
        case RepKind::VectorC: return "vector-C";
        case RepKind::VectorD: return "vector-D";
        case RepKind::EvaluationGl: return "evaluation-gl";
        case RepKind::Classical: return "classical";
    }
    return "?";
}

Matrix Representation::letter(const GenSym& g) const {
    auto diag = [&](auto f) {
        std::vector<Scalar> d;
        d.reserve(n);
        for (const auto& w : basis_weights) d.push_back(f(g.lambda().twice_pairing(w)));
        return Matrix::diagonal(d);
    };
    switch (g.kind) {
        case SymKind::RootVec: {
            auto it = root_vectors.find(g.weight());
            if (it == root_vectors.end()) throw UnknownSymbol("no image for " + g.str() + " in " + tag);
            return it->second;
        }
        case SymKind::CartanExp:
            if (classical) throw UnknownSymbol(g.str() + " in classical representation " + tag);
            return diag([](int t) { return Scalar::v_pow(t); });
        case SymKind::QBracket:
            if (classical) throw UnknownSymbol(g.str() + " in classical representation " + tag);
            return diag([&](int t) { return q_number_twice(t + g.c2); });
        case SymKind::CartanLin: return diag([&](int t) { return Scalar(mpq_class(t + g.c2, 2)); });
        case SymKind::Xi:
        case SymKind::XiClassical:
        case SymKind::AffineVec:
            if (!xi) throw UnknownSymbol("no image for " + g.str() + " in " + tag);
            return *xi;
    }
    throw UnknownSymbol(g.str());
}

namespace {

Matrix evaluate_word(const Representation& rep, const Word& w) {
    if (w.empty()) return Matrix::identity(rep.n);
    Matrix m = rep.letter(w[0]);
    for (std::size_t i = 1; i < w.size(); ++i) m = m * rep.letter(w[i]);
    return m;
}

Scalar coefficient(const Representation& rep, const Scalar& c) {
    return rep.specialization.empty() ? c : specialize(c, rep.specialization);
}

void fill_composites(Representation& rep) {
    for (const auto& [r, x] : composite_root_vectors(rep.rs)) rep.root_vectors[r] = evaluate(rep, x);
}

Representation base_module(Series s, const RootSystem& rs, int sign, bool classical) {
    Representation rep;
    rep.rs = rs;
    rep.classical = classical;
    const int l = rs.l;
    auto eps_ = [&](int i) { return eps(l, i); };
    for (int i = 1; i <= l; ++i) rep.basis_weights.push_back(eps_(i));
    if (s == Series::B) rep.basis_weights.push_back(Root(l, 0));
    if (s != Series::A)
        for (int i = l; i >= 1; --i) rep.basis_weights.push_back(-eps_(i));
    rep.n = static_cast<int>(rep.basis_weights.size());
    auto pos = [&](const Root& w) {
        return static_cast<int>(std::find(rep.basis_weights.begin(), rep.basis_weights.end(), w) -
                                rep.basis_weights.begin());
    };
    auto E = [&](const Root& a, const Root& b) { return Matrix::unit(rep.n, pos(a), pos(b)); };
    const Scalar sg(sign);
    for (int i = 1; i < l; ++i) {
        Root r = eps_(i) - eps_(i + 1);
        Matrix p = E(eps_(i), eps_(i + 1)), m = E(eps_(i + 1), eps_(i));
        if (s != Series::A) {
            p += sg * E(-eps_(i + 1), -eps_(i));
            m += sg * E(-eps_(i), -eps_(i + 1));
        }
        rep.root_vectors[r] = p;
        rep.root_vectors[-r] = m;
    }
    const Root zero(l, 0);
    switch (s) {
        case Series::B:
            rep.root_vectors[eps_(l)] = E(eps_(l), zero) + E(zero, -eps_(l));
            rep.root_vectors[-eps_(l)] = E(zero, eps_(l)) + E(-eps_(l), zero);
            break;
        case Series::C: {
            // [e_{l,l}, e_{-l,-l}] must be [2 e_{l,-l}]_q, so the product of the
            // two entries is [2] (2 in the classical module)
            rep.root_vectors[scaled(eps_(l), 2)] = E(eps_(l), -eps_(l));
            rep.root_vectors[scaled(eps_(l), -2)] = (classical ? Scalar(2) : q_number(2)) * E(-eps_(l), eps_(l));
            break;
        }
        case Series::D: {
            Root r = eps_(l - 1) + eps_(l);
            rep.root_vectors[r] = E(eps_(l - 1), -eps_(l)) + sg * E(eps_(l), -eps_(l - 1));
            rep.root_vectors[-r] = E(-eps_(l), eps_(l - 1)) + sg * E(-eps_(l - 1), eps_(l));
            break;
        }
        case Series::A: break;
    }
    if (classical) rep.specialization = {{Var::v, Scalar(1)}};
    fill_composites(rep);
    return rep;
}

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

Representation build_representation_unchecked(RepKind kind, const RootSystem& rs, int sign) {
    Representation rep;
    switch (kind) {
        case RepKind::FundamentalGl:
        case RepKind::EvaluationGl:
            require(rs.series == Series::A, rep_kind_name(kind) + " needs series A");
            rep = base_module(Series::A, rs, sign, false);
            break;
        case RepKind::VectorB:
            require(rs.series == Series::B, "vector-B needs series B");
            rep = base_module(Series::B, rs, sign, false);
            break;
        case RepKind::VectorC:
            require(rs.series == Series::C, "vector-C needs series C");
            rep = base_module(Series::C, rs, sign, false);
            break;
        case RepKind::VectorD:
            require(rs.series == Series::D, "vector-D needs series D");
            rep = base_module(Series::D, rs, sign, false);
            break;
        case RepKind::Classical:
            rep = base_module(rs.series, rs, sign, true);
            break;
    }
    rep.tag = rep_kind_name(kind) + "/" + rs.label();
    if (kind == RepKind::EvaluationGl) rep.xi = Scalar::variable(Var::u) * evaluate(rep, tilde_e(rs));
    if (kind == RepKind::Classical) rep.xi = Scalar::variable(Var::u) * rep.root_vectors.at(-rs.theta);
    return rep;
}

Representation build_representation(RepKind kind, const RootSystem& rs, int sign) {
    Representation rep = build_representation_unchecked(kind, rs, sign);
    Catalog gate = relation_catalog(kind == RepKind::Classical ? Family::ClassicalCurrent : Family::Uqg, rs);
    Report r = verify_catalog(rep, gate);
    for (const auto& res : r.results)
        if (!res.pass) throw GateFailure(rep.tag + " violates " + res.id, res.id);
    if (rep.xi) extend_with_xi(rep, XiMode::with_matrix(*rep.xi));
    return rep;
}

Representation tensor_square(const Representation& rep) {
    Representation out;
    out.rs = rep.rs;
    out.classical = rep.classical;
    out.specialization = rep.specialization;
    out.tag = rep.tag + "^2";
    out.n = rep.n * rep.n;
    for (const auto& a : rep.basis_weights)
        for (const auto& b : rep.basis_weights) out.basis_weights.push_back(a + b);
    const Matrix id = Matrix::identity(rep.n);
    for (const auto& a : rep.rs.simple_roots) {
        const Matrix& e = rep.root_vectors.at(a);
        const Matrix& f = rep.root_vectors.at(-a);
        if (rep.classical) {
            out.root_vectors[a] = kron(e, id) + kron(id, e);
            out.root_vectors[-a] = kron(f, id) + kron(id, f);
            continue;
        }
        const Matrix k = rep.letter(GenSym::cartan_exp(k_lambda(a)));
        const Matrix kinv = rep.letter(GenSym::cartan_exp(-k_lambda(a)));
        out.root_vectors[a] = kron(e, id) + kron(kinv, e);
        out.root_vectors[-a] = kron(f, k) + kron(id, f);
    }
    fill_composites(out);
    return out;
}

Representation extend_with_xi(const Representation& rep, const XiMode& mode) {
    Representation out = rep;
    switch (mode.kind) {
        case XiMode::TildeSubstitution:
            require(!rep.classical, "tilde substitution needs a quantum representation");
            out.xi = Scalar::tau() * evaluate(rep, tilde_e(rep.rs));
            out.tag += "+tilde";
            break;
        case XiMode::Evaluation:
            require(!rep.classical && rep.rs.series == Series::A, "evaluation map exists for gl only");
            out.xi = mode.parameter * evaluate(rep, tilde_e(rep.rs));
            out.tag += "+evaluation";
            break;
        case XiMode::ClassicalEvaluation:
            require(rep.classical, "classical evaluation needs a classical representation");
            out.xi = mode.parameter * rep.root_vectors.at(-rep.rs.theta);
            out.tag += "+evaluation";
            break;
        case XiMode::Custom:
            out.xi = *mode.custom;
            out.tag += "+custom";
            break;
    }
    // weight gate: xi has weight -theta
    const Matrix& x = *out.xi;
    for (int i = 1; i <= rep.rs.l; ++i) {
        const int w = -rep.rs.theta[i - 1];
        bool ok;
        if (rep.classical) {
            Matrix h = out.letter(GenSym::cartan_lin(Lambda::unit(rep.rs.l, i), 0));
            ok = h * x - x * h == Scalar(w) * x;
        } else {
            Matrix k = out.letter(GenSym::cartan_exp(Lambda::unit(rep.rs.l, i)));
            Matrix kinv = out.letter(GenSym::cartan_exp(-Lambda::unit(rep.rs.l, i)));
            ok = k * x * kinv == Scalar::q_pow(w) * x;
        }
        if (!ok) throw GateFailure(out.tag + ": affine image has the wrong weight", "weight:" + std::to_string(i));
    }
    return out;
}

Matrix evaluate(const Representation& rep, const NcExpr& x) {
    Matrix out(rep.n);
    for (const auto& t : x.terms()) {
        Scalar c = coefficient(rep, t.coeff);
        if (c.is_zero()) continue;
        out += c * evaluate_word(rep, t.key[0]);
    }
    return out;
}

Matrix evaluate(const Representation& a, const Representation& b, const TensorExpr& x) {
    Matrix out(a.n * b.n);
    for (const auto& t : x.terms()) {
        Scalar c = coefficient(a, t.coeff);
        if (c.is_zero()) continue;
        out += c * kron(evaluate_word(a, t.key[0]), evaluate_word(b, t.key[1]));
    }
    return out;
}

Matrix evaluate(const Representation& rep, const TensorExpr& x) { return evaluate(rep, rep, x); }

Matrix evaluate(const Representation& rep, const Tensor3Expr& x) {
    Matrix out(rep.n * rep.n * rep.n);
    for (const auto& t : x.terms()) {
        Scalar c = coefficient(rep, t.coeff);
        if (c.is_zero()) continue;
        out += c * kron(kron(evaluate_word(rep, t.key[0]), evaluate_word(rep, t.key[1])), evaluate_word(rep, t.key[2]));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Verification

namespace {
thread_local int worker_cap = 0;
}

void set_thread_worker_cap(int n) { worker_cap = n; }

int worker_count() {
    if (worker_cap > 0) return worker_cap;
    if (const char* env = std::getenv("QKMV_WORKERS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

bool Report::all_pass() const {
    return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.pass; });
}

int Report::failures() const {
    return static_cast<int>(std::count_if(results.begin(), results.end(), [](const auto& r) { return !r.pass; }));
}

const RelationResult* Report::find_key(const std::string& key) const {
    for (const auto& r : results)
        if (r.key == key) return &r;
    return nullptr;
}

Report verify_relations(const Representation& rep, const std::vector<Relation>& rels, const std::string& title) {
    Report report;
    report.title = title;
    report.results.resize(rels.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i; (i = next++) < rels.size();) {
            RelationResult& res = report.results[i];
            res.id = rels[i].id;
            res.key = rels[i].key;
            try {
                Matrix d = evaluate(rep, rels[i].difference());
                res.defect = d.nonzeros();
                res.pass = res.defect == 0;
            } catch (const std::exception& e) {
                res.pass = false;
                res.note = e.what();
            }
        }
    };
    const int workers = std::min<int>(worker_count(), static_cast<int>(rels.size()));
    std::vector<std::thread> pool;
    for (int w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    return report;
}

Report verify_catalog(const Representation& rep, const Catalog& cat) {
    return verify_relations(rep, cat.relations, cat.label() + " on " + rep.tag);
}

// ---------------------------------------------------------------------------
// XiPoly

bool XiPoly::is_zero() const {
    return std::all_of(parts.begin(), parts.end(), [](const auto& p) { return p.second.empty(); });
}

XiPoly xi_polynomial_form(const NcExpr& x, const Representation& rep, bool weight_restricted) {
    XiPoly out;
    const Root mtheta = -rep.rs.theta;
    auto allowed = [&](int col, int row) {
        return !weight_restricted || rep.basis_weights[col] - rep.basis_weights[row] == mtheta;
    };
    for (const auto& t : x.terms()) {
        Scalar c = coefficient(rep, t.coeff);
        if (c.is_zero()) continue;
        std::vector<Matrix> segments;
        Word seg;
        for (const auto& g : t.key[0]) {
            if (g.is_xi()) {
                segments.push_back(evaluate_word(rep, seg));
                seg.clear();
            } else {
                seg.push_back(g);
            }
        }
        segments.push_back(evaluate_word(rep, seg));
        auto& part = out.parts[static_cast<int>(segments.size()) - 1];
        std::vector<int> idx;
        std::function<void(std::size_t, const Scalar&)> rec = [&](std::size_t s, const Scalar& acc) {
            if (s == segments.size()) {
                auto [it, inserted] = part.try_emplace(idx, acc);
                if (!inserted) {
                    it->second += acc;
                    if (it->second.is_zero()) part.erase(it);
                }
                return;
            }
            for (int i = 0; i < rep.n; ++i) {
                if (s > 0 && !allowed(idx.back(), i)) continue;
                for (const auto& [j, e] : segments[s].row(i)) {
                    idx.push_back(i);
                    idx.push_back(j);
                    rec(s + 1, acc * e);
                    idx.resize(idx.size() - 2);
                }
            }
        };
        rec(0, c);
    }
    for (auto it = out.parts.begin(); it != out.parts.end();)
        it = it->second.empty() ? out.parts.erase(it) : std::next(it);
    return out;
}

bool xi_poly_equal(const XiPoly& a, const XiPoly& b) { return a == b; }

Matrix collapse(const XiPoly& p, const Matrix& xi) {
    const int n = xi.dim();
    Matrix out(n);
    for (const auto& [d, part] : p.parts)
        for (const auto& [idx, c] : part) {
            Scalar acc = c;
            for (int k = 0; k < d && !acc.is_zero(); ++k) acc *= xi.at(idx[2 * k + 1], idx[2 * k + 2]);
            out.add(idx.front(), idx.back(), acc);
        }
    return out;
}

std::optional<Scalar> xi_poly_ratio(const XiPoly& a, const XiPoly& b) {
    if (a.is_zero() && b.is_zero()) return Scalar(1);
    if (a.is_zero() || b.is_zero()) return std::nullopt;
    if (a.parts.size() != b.parts.size()) return std::nullopt;
    const auto& [d0, first] = *a.parts.begin();
    auto bd = b.parts.find(d0);
    if (bd == b.parts.end()) return std::nullopt;
    auto bi = bd->second.find(first.begin()->first);
    if (bi == bd->second.end()) return std::nullopt;
    Scalar r = first.begin()->second / bi->second;
    for (const auto& [d, pa] : a.parts) {
        auto pb = b.parts.find(d);
        if (pb == b.parts.end() || pb->second.size() != pa.size()) return std::nullopt;
        for (const auto& [k, c] : pa) {
            auto it = pb->second.find(k);
            if (it == pb->second.end() || !(c == r * it->second)) return std::nullopt;
        }
    }
    return r;
}

// ---------------------------------------------------------------------------
// General versus explicit catalogs

namespace {

using Entry = std::pair<int, int>;

std::vector<Entry> xi_support(const Representation& rep) {
    std::vector<Entry> out;
    for (int r = 0; r < rep.n; ++r)
        for (int c = 0; c < rep.n; ++c)
            if (rep.basis_weights[r] - rep.basis_weights[c] == -rep.rs.theta) out.push_back({r, c});
    return out;
}

}  // namespace

XiFamily solve_linear_xi(const Representation& rep, const std::vector<const Relation*>& rels) {
    const std::vector<Entry> support = xi_support(rep);
    std::map<Entry, int> column;
    for (std::size_t k = 0; k < support.size(); ++k) column[support[k]] = static_cast<int>(k);
    const int m = static_cast<int>(support.size());

    // One row per matrix entry of each relation; the last column is the constant.
    std::vector<std::vector<Scalar>> rows;
    for (const Relation* r : rels) {
        const XiPoly p = xi_polynomial_form(r->difference(), rep);
        std::map<Entry, std::vector<Scalar>> eqs;
        auto row = [&](int i, int j) -> std::vector<Scalar>& {
            auto [it, fresh] = eqs.try_emplace({i, j});
            if (fresh) it->second.assign(m + 1, Scalar(0));
            return it->second;
        };
        for (const auto& [d, part] : p.parts) {
            if (d > 1) throw std::invalid_argument(r->id + " is not linear in xi");
            for (const auto& [idx, c] : part) {
                if (d == 0)
                    row(idx[0], idx[1])[m] += c;
                else
                    row(idx[0], idx[3])[column.at({idx[1], idx[2]})] += c;
            }
        }
        for (auto& [e, v] : eqs) rows.push_back(std::move(v));
    }

    std::vector<int> pivot_of(m, -1);
    std::size_t rank = 0;
    for (int col = 0; col < m && rank < rows.size(); ++col) {
        std::size_t p = rank;
        while (p < rows.size() && rows[p][col].is_zero()) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[rank], rows[p]);
        const Scalar inv = rows[rank][col].inverse();
        for (auto& x : rows[rank]) x *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || rows[i][col].is_zero()) continue;
            const Scalar f = rows[i][col];
            for (int k = col; k <= m; ++k) rows[i][k] -= f * rows[rank][k];
        }
        pivot_of[col] = static_cast<int>(rank++);
    }

    XiFamily out;
    out.base = Matrix(rep.n);
    for (std::size_t i = rank; i < rows.size(); ++i)
        if (!rows[i][m].is_zero()) out.consistent = false;
    for (int col = 0; col < m; ++col)
        if (pivot_of[col] >= 0) out.base.set(support[col].first, support[col].second, -rows[pivot_of[col]][m]);
    for (int free = 0; free < m; ++free) {
        if (pivot_of[free] >= 0) continue;
        Matrix dir(rep.n);
        dir.set(support[free].first, support[free].second, Scalar(1));
        for (int col = 0; col < m; ++col)
            if (pivot_of[col] >= 0) dir.set(support[col].first, support[col].second, -rows[pivot_of[col]][free]);
        out.directions.push_back(std::move(dir));
    }
    return out;
}

FamilyPoly restrict_to_family(const XiPoly& p, const XiFamily& f) {
    FamilyPoly out;
    auto add = [&](const std::tuple<int, int, std::vector<int>>& key, const Scalar& c) {
        auto [it, fresh] = out.try_emplace(key, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) out.erase(it);
        }
    };
    for (const auto& [d, part] : p.parts)
        for (const auto& [idx, c] : part) {
            // Expand the product of the d affine entries monomial by monomial.
            std::map<std::vector<int>, Scalar> acc{{{}, c}};
            for (int k = 0; k < d; ++k) {
                const int r = idx[2 * k + 1], col = idx[2 * k + 2];
                std::vector<std::pair<int, Scalar>> factor;
                const Scalar b = f.base.at(r, col);
                if (!b.is_zero()) factor.push_back({-1, b});
                for (std::size_t t = 0; t < f.directions.size(); ++t) {
                    const Scalar x = f.directions[t].at(r, col);
                    if (!x.is_zero()) factor.push_back({static_cast<int>(t), x});
                }
                std::map<std::vector<int>, Scalar> next;
                for (const auto& [mono, s] : acc)
                    for (const auto& [t, x] : factor) {
                        std::vector<int> m2 = mono;
                        if (t >= 0) m2.insert(std::upper_bound(m2.begin(), m2.end(), t), t);
                        next[m2] += s * x;
                    }
                acc = std::move(next);
            }
            for (const auto& [mono, s] : acc)
                if (!s.is_zero()) add({idx.front(), idx.back(), mono}, s);
        }
    return out;
}

std::optional<Scalar> family_poly_ratio(const FamilyPoly& a, const FamilyPoly& b) {
    if (a.empty() && b.empty()) return Scalar(1);
    if (a.size() != b.size() || a.empty()) return std::nullopt;
    auto it = b.find(a.begin()->first);
    if (it == b.end()) return std::nullopt;
    const Scalar r = a.begin()->second / it->second;
    for (const auto& [k, c] : a) {
        auto jt = b.find(k);
        if (jt == b.end() || !(c == r * jt->second)) return std::nullopt;
    }
    return r;
}

Report general_explicit_equivalence(const RootSystem& rs, bool square) {
    RepKind kind = RepKind::FundamentalGl;
    if (rs.series == Series::B) kind = RepKind::VectorB;
    if (rs.series == Series::C) kind = RepKind::VectorC;
    if (rs.series == Series::D) kind = RepKind::VectorD;
    const Representation v = build_representation(kind, rs);
    const Representation rep = square ? tensor_square(v) : v;
    const Catalog general = relation_catalog(Family::DrinfeldianGeneral, rs);
    const Catalog expl = relation_catalog(Family::DrinfeldianExplicit, rs);
    Report report;
    report.title = "general vs explicit " + rs.label() + (square ? " on V (x) V" : "");
    const std::string prefix = "equivalence/" + rs.label() + (square ? "/VxV/" : "/");

    std::vector<const Relation*> lin_g, lin_e;
    for (const auto& r : general.relations)
        if (r.xi_degree <= 1) lin_g.push_back(&r);
    for (const auto& r : expl.relations)
        if (r.xi_degree <= 1) lin_e.push_back(&r);
    const XiFamily fam = solve_linear_xi(rep, lin_e);
    const XiFamily fam_g = solve_linear_xi(rep, lin_g);

    auto is_weight = [](const std::string& key) {
        return key.rfind("weight:", 0) == 0 || key.rfind("kweight:", 0) == 0;
    };
    std::vector<const Relation*> work = lin_e;
    for (const Relation* r : lin_g)
        if (is_weight(r->key)) work.push_back(r);
    for (const auto& r : expl.relations)
        if (r.xi_degree > 1) work.push_back(&r);

    std::vector<RelationResult> results(work.size());
    std::atomic<std::size_t> next{0};
    auto run = [&] {
        for (std::size_t i; (i = next++) < work.size();) {
            const Relation& r = *work[i];
            RelationResult& res = results[i];
            res.id = prefix + r.key;
            res.key = r.key;
            const XiPoly a = xi_polynomial_form(r.difference(), rep);
            if (is_weight(r.key)) {
                res.pass = a.is_zero();
                res.note = "weight relation";
                continue;
            }
            const Relation* g = general.find(r.key);
            if (!g) {
                res.note = "no general relation";
                continue;
            }
            const XiPoly b = xi_polynomial_form(g->difference(), rep);
            std::optional<Scalar> c;
            bool vanish = false;
            if (r.xi_degree <= 1) {
                c = xi_poly_ratio(a, b);
                vanish = a.is_zero() && b.is_zero();
            } else {
                const FamilyPoly fa = restrict_to_family(a, fam), fb = restrict_to_family(b, fam);
                c = family_poly_ratio(fa, fb);
                vanish = fa.empty() && fb.empty();
            }
            res.pass = c.has_value() && !c->is_zero();
            res.defect = res.pass ? 0 : 1;
            if (vanish)
                res.note = "both vanish";
            else
                res.note = c ? "ratio " + c->str() : "not proportional";
            if (r.xi_degree > 1) res.note += " on the linear family";
        }
    };
    const int workers = std::min<int>(worker_count(), static_cast<int>(work.size()));
    std::vector<std::thread> pool;
    for (int w = 1; w < workers; ++w) pool.emplace_back(run);
    run();
    for (auto& t : pool) t.join();

    // Same family: equal dimension, and each catalog's linear relations vanish
    // on the other's base point and directions.
    auto vanish_on = [&](const std::vector<const Relation*>& rels, const XiFamily& f) {
        for (const Relation* r : rels)
            if (!restrict_to_family(xi_polynomial_form(r->difference(), rep), f).empty()) return false;
        return true;
    };
    const bool same = fam.consistent && fam_g.consistent && fam.directions.size() == fam_g.directions.size() &&
                      vanish_on(lin_g, fam) && vanish_on(lin_e, fam_g);
    report.results.push_back({prefix + "linear-family", "linear-family", same, same ? 0 : 1,
                              std::to_string(fam.directions.size()) + " free directions"});
    for (auto& r : results) report.results.push_back(std::move(r));
    return report;
}

// ---------------------------------------------------------------------------
// Scaling automorphism and negative control

Report verify_scaling_automorphism(const RootSystem& rs) {
    Report report;
    report.title = "scaling automorphism " + rs.label();
    for (const auto& r : relation_catalog(Family::QuantumCurrent, rs).relations) {
        std::set<int> degrees;
        const NcExpr d = r.difference();
        for (const auto& t : d.terms()) degrees.insert(word_xi_count(t.key[0]));
        RelationResult res{r.id, "uniform:" + r.key, degrees.size() == 1, static_cast<int>(degrees.size()) - 1, ""};
        report.results.push_back(res);
    }
    if (rs.series != Series::A) return report;

    const Representation base = build_representation(RepKind::FundamentalGl, rs);
    const Matrix et = evaluate(base, tilde_e(rs));
    const Scalar u = Scalar::variable(Var::u), a = Scalar::variable(Var::a), eta = Scalar::variable(Var::eta);
    const Scalar shrink = Scalar(1) - (Scalar::q() - Scalar::q().inverse()) * a;
    const Matrix image = shrink * (u * et) + (eta * a) * et;
    const Scalar shifted = u * shrink + eta * a;
    report.results.push_back({"scaling/" + rs.label() + "/shifted-point", "shifted-point", image == shifted * et, 0, ""});
    const Matrix at_zero = image.map([](const Scalar& c) { return specialize(c, {{Var::a, Scalar(0)}}); });
    report.results.push_back({"scaling/" + rs.label() + "/identity-at-zero", "identity-at-zero", at_zero == u * et, 0, ""});
    Representation moved = extend_with_xi(base, XiMode::with_matrix(image));
    Report moved_report = verify_catalog(moved, relation_catalog(Family::DrinfeldianExplicit, rs));
    for (auto res : moved_report.results) {
        res.key = "shifted:" + res.key;
        report.results.push_back(res);
    }
    return report;
}

Report negative_control(const RootSystem& rs) {
    RepKind kind = RepKind::FundamentalGl;
    if (rs.series == Series::B) kind = RepKind::VectorB;
    if (rs.series == Series::C) kind = RepKind::VectorC;
    if (rs.series == Series::D) kind = RepKind::VectorD;
    const Representation base = build_representation(kind, rs);
    const Catalog gate = relation_catalog(Family::Uqg, rs);
    Report report;
    report.title = "negative control " + rs.label();
    for (const auto& a : rs.simple_roots)
        for (const Root& r : {a, -a}) {
            Representation bad = base;
            bad.root_vectors.clear();
            for (const auto& s : rs.simple_roots) {
                bad.root_vectors[s] = base.root_vectors.at(s);
                bad.root_vectors[-s] = base.root_vectors.at(-s);
            }
            Matrix& m = bad.root_vectors[r];
            for (int i = 0; i < m.dim(); ++i)
                if (!m.row(i).empty()) {
                    auto [j, c] = *m.row(i).begin();
                    m.set(i, j, Scalar(2) * c);
                    break;
                }
            fill_composites(bad);
            Report r2 = verify_catalog(bad, gate);
            report.results.push_back({"negative/" + rs.label() + "/" + root_name(r), "perturb:" + root_name(r),
                                      !r2.all_pass(), r2.failures(), "relations failing after the perturbation"});
        }
    return report;
}

}  // namespace qkmv
