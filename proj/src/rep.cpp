#include "p13/rep.hpp"

#include "p13/dirac.hpp"
#include "p13/error.hpp"
#include "p13/points.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace p13 {

namespace {

// ----------------------------------------------------------------------------
// Shared scalar shorthands
// ----------------------------------------------------------------------------

ScalarExpr sE() { return ScalarExpr::energy(); }
ScalarExpr sA() { return ScalarExpr::abs_p3(); }
ScalarExpr sp(int k) { return ScalarExpr::p(k); }
ScalarExpr half() { return ScalarExpr::rational(1, 2); }

DiffOp sc(int n, const ScalarExpr& s) { return DiffOp::scalar_op(n, s); }

// x_k p_l - x_l p_k with arbitrary coordinate operators.
DiffOp orbital(const DiffOp& xk, const DiffOp& xl, int k, int l) {
    const int n = xk.dim();
    return xk * sc(n, sp(l)) - xl * sc(n, sp(k));
}

DiffOp boost_orbital(const DiffOp& xk, const DiffOp& h, int k) {
    const int n = xk.dim();
    return sc(n, ScalarExpr::t0() * sp(k)) - anticommutator(xk, h).scale(half());
}

// s1 p2 - s2 p1.
MatrixOp w_spin() {
    MatrixOp w{2};
    const ScalarExpr i = ScalarExpr::imag_unit();
    w.at(0, 1) = sp(2) + i * sp(1);
    w.at(1, 0) = sp(2) - i * sp(1);
    return w;
}

// ----------------------------------------------------------------------------
// The three spin-correction patterns shared by the phi, chi and w builders
// ----------------------------------------------------------------------------

struct FamilySpec {
    int kind = 1;            // correction pattern
    ScalarExpr e3, a;        // helicity scalar and the |p3|-like scalar
    MatrixOp s3;             // spin matrix for pattern 3
    DiffOp H;
    std::array<DiffOp, 3> X; // coordinate operators (possibly shifted)
};

std::array<DiffOp, 10> family_gens(const FamilySpec& f) {
    const int n = f.H.dim();
    const ScalarExpr E = sE(), p1 = sp(1), p2 = sp(2);
    const ScalarExpr epa = E + f.a;
    const ScalarExpr two = ScalarExpr::rational(2);

    std::array<DiffOp, 10> g;
    g[GP0] = f.H;
    for (int k = 1; k <= 3; ++k) g[static_cast<std::size_t>(GP0 + k)] = sc(n, sp(k));

    DiffOp m12 = orbital(f.X[0], f.X[1], 1, 2);
    DiffOp m13 = orbital(f.X[0], f.X[2], 1, 3);
    DiffOp m23 = orbital(f.X[1], f.X[2], 2, 3);
    DiffOp b1 = boost_orbital(f.X[0], f.H, 1);
    DiffOp b2 = boost_orbital(f.X[1], f.H, 2);
    DiffOp b3 = boost_orbital(f.X[2], f.H, 3);

    switch (f.kind) {
        case 1:
            g[GJ12] = m12 + sc(n, f.e3 / (two * E)) * f.H;
            g[GJ13] = m13 - sc(n, p2 / (two * E * epa)) * f.H;
            g[GJ23] = m23 + sc(n, p1 / (two * E * epa)) * f.H;
            g[GJ01] = b1 - sc(n, p2 * f.e3 / (two * epa));
            g[GJ02] = b2 + sc(n, p1 * f.e3 / (two * epa));
            g[GJ03] = b3;
            break;
        case 2:
            g[GJ12] = m12 + sc(n, f.e3 / two);
            g[GJ13] = m13 - sc(n, p2 / (two * epa));
            g[GJ23] = m23 + sc(n, p1 / (two * epa));
            g[GJ01] = b1 - sc(n, p2 * f.e3 / (two * E * epa)) * f.H;
            g[GJ02] = b2 + sc(n, p1 * f.e3 / (two * E * epa)) * f.H;
            g[GJ03] = b3;
            break;
        case 3: {
            DiffOp s3{f.s3};
            g[GJ12] = m12 + sc(n, f.e3 / two) * s3;
            g[GJ13] = m13 - sc(n, p2 / (two * epa)) * s3;
            g[GJ23] = m23 + sc(n, p1 / (two * epa)) * s3;
            g[GJ01] = b1 - sc(n, p2 * f.e3 / (two * epa)) * s3;
            g[GJ02] = b2 + sc(n, p1 * f.e3 / (two * epa)) * s3;
            g[GJ03] = b3;
            break;
        }
        default:
            throw UnknownRep("family pattern out of range");
    }
    return g;
}

std::array<DiffOp, 3> plain_x(int n) {
    return {DiffOp::x(1, n), DiffOp::x(2, n), DiffOp::x(3, n)};
}

// Shifted coordinates shared by the chi and w builders; `primed` swaps the
// |p3| structure for p3 and drops the helicity factor on the x3 shift.
std::array<DiffOp, 3> shifted_x(bool primed) {
    const ScalarExpr E = sE(), p1 = sp(1), p2 = sp(2);
    const ScalarExpr a = primed ? sp(3) : sA();
    const ScalarExpr e3 = primed ? ScalarExpr::rational(1) : sA() / sp(3);
    const ScalarExpr epa = E + a;
    const ScalarExpr two = ScalarExpr::rational(2);
    const MatrixOp w = w_spin();

    MatrixOp d1 = (ScalarExpr::rational(-1) / (two * E)) * sigma(2)
                + (p2 / (two * E * epa)) * sigma(3)
                + (ScalarExpr::rational(-1) * p1 / (two * E * E * epa)) * w;
    MatrixOp d2 = (ScalarExpr::rational(1) / (two * E)) * sigma(1)
                + (ScalarExpr::rational(-1) * p1 / (two * E * epa)) * sigma(3)
                + (ScalarExpr::rational(-1) * p2 / (two * E * E * epa)) * w;
    MatrixOp d3 = (ScalarExpr::rational(-1) * e3 / (two * E * E)) * w;

    return {DiffOp::x(1, 2) + DiffOp(d1), DiffOp::x(2, 2) + DiffOp(d2),
            DiffOp::x(3, 2) + DiffOp(d3)};
}

DiffOp sigma_dot_p() {
    return DiffOp(sp(1) * sigma(1) + sp(2) * sigma(2) + sp(3) * sigma(3));
}

// ----------------------------------------------------------------------------
// Builders
// ----------------------------------------------------------------------------

Rep build_phi(int kind, bool primed) {
    FamilySpec f;
    f.kind = kind;
    f.e3 = primed ? ScalarExpr::rational(1) : sA() / sp(3);
    f.a = primed ? sp(3) : sA();
    f.s3 = sigma(3);
    f.H = kind == 3 ? DiffOp(MatrixOp::scalar_mat(2, sE())) : DiffOp(sE() * sigma(3));
    f.X = plain_x(2);

    Rep r;
    r.id = "phi" + std::to_string(kind) + (primed ? "p" : "");
    r.family = "phi" + std::to_string(kind);
    r.n = 2;
    r.gen = family_gens(f);
    return r;
}

Rep build_chi(int kind) {
    FamilySpec f;
    f.kind = kind;
    f.e3 = sA() / sp(3);
    f.a = sA();
    f.s3 = sigma(3);
    f.H = DiffOp(sp(1) * sigma(1) + sp(2) * sigma(2) + sA() * sigma(3));
    f.X = shifted_x(false);

    Rep r;
    r.id = "chi" + std::to_string(kind);
    r.family = "phi" + std::to_string(kind);
    r.n = 2;
    r.gen = family_gens(f);
    r.partner = "phi" + std::to_string(kind);
    r.kernel = "v1";
    return r;
}

Rep build_w1() {
    const int n = 2;
    const DiffOp H = sigma_dot_p();
    const auto X = plain_x(n);

    Rep r;
    r.id = "w1";
    r.family = "phi1";
    r.n = n;
    r.gen[GP0] = H;
    for (int k = 1; k <= 3; ++k) r.gen[static_cast<std::size_t>(GP0 + k)] = sc(n, sp(k));
    r.gen[GJ12] = orbital(X[0], X[1], 1, 2) + DiffOp(half() * sigma(3));
    r.gen[GJ13] = orbital(X[0], X[2], 1, 3) - DiffOp(half() * sigma(2));
    r.gen[GJ23] = orbital(X[1], X[2], 2, 3) + DiffOp(half() * sigma(1));
    r.gen[GJ01] = boost_orbital(X[0], H, 1);
    r.gen[GJ02] = boost_orbital(X[1], H, 2);
    r.gen[GJ03] = boost_orbital(X[2], H, 3);
    r.partner = "phi1p";
    r.kernel = "v";
    return r;
}

Rep build_w2() {
    FamilySpec f;
    f.kind = 2;
    f.e3 = ScalarExpr::rational(1);
    f.a = sp(3);
    f.s3 = sigma(3);
    f.H = sigma_dot_p();
    f.X = shifted_x(true);

    Rep r;
    r.id = "w2";
    r.family = "phi2";
    r.n = 2;
    r.gen = family_gens(f);
    r.partner = "phi2p";
    r.kernel = "v";
    return r;
}

Rep build_w3() {
    const int n = 2;
    const DiffOp H{MatrixOp::scalar_mat(2, sE())};
    const auto X = plain_x(n);
    const ScalarExpr inv2E = (ScalarExpr::rational(2) * sE()).inverse();

    Rep r;
    r.id = "w3";
    r.family = "phi3";
    r.n = n;
    r.gen[GP0] = H;
    for (int k = 1; k <= 3; ++k) r.gen[static_cast<std::size_t>(GP0 + k)] = sc(n, sp(k));
    r.gen[GJ12] = orbital(X[0], X[1], 1, 2) + DiffOp(half() * sigma(3));
    r.gen[GJ13] = orbital(X[0], X[2], 1, 3) - DiffOp(half() * sigma(2));
    r.gen[GJ23] = orbital(X[1], X[2], 2, 3) + DiffOp(half() * sigma(1));
    // Boost corrections (s_l p_n - s_n p_l)/(2E), cyclic in (k,l,n).
    r.gen[GJ01] = boost_orbital(X[0], H, 1)
                + DiffOp(inv2E * (sp(3) * sigma(2) - sp(2) * sigma(3)));
    r.gen[GJ02] = boost_orbital(X[1], H, 2)
                + DiffOp(inv2E * (sp(1) * sigma(3) - sp(3) * sigma(1)));
    r.gen[GJ03] = boost_orbital(X[2], H, 3)
                + DiffOp(inv2E * (sp(2) * sigma(1) - sp(1) * sigma(2)));
    r.partner = "phi3p";
    r.kernel = "v";
    return r;
}

Rep build_scalar(bool plus) {
    MatrixOp s3{1};
    s3.at(0, 0) = ScalarExpr::rational(plus ? 1 : -1);

    FamilySpec f;
    f.kind = 3;
    f.e3 = sA() / sp(3);
    f.a = sA();
    f.s3 = s3;
    f.H = DiffOp(MatrixOp::scalar_mat(1, sE()));
    f.X = plain_x(1);

    Rep r;
    r.id = plus ? "scalar_plus" : "scalar_minus";
    r.family = r.id;
    r.n = 1;
    r.gen = family_gens(f);
    return r;
}

Rep build_dirac(char basis) {
    Rep r;
    r.id = std::string("dirac_") + basis;
    r.family = "dirac";
    r.n = 4;
    r.gen = dirac_gens(basis);
    return r;
}

// ----------------------------------------------------------------------------
// Exact sampling utilities for the structure-constant derivation
// ----------------------------------------------------------------------------

std::vector<ExactPoint> table_points() {
    std::vector<ExactPoint> pts;
    pts.push_back(exact_point(0, 1, {1, 1, 1}, Rat(0)));
    pts.push_back(exact_point(1, 1, {1, -1, 1}, Rat(1)));
    pts.push_back(exact_point(2, -1, {-1, 1, 1}, Rat(-2)));
    pts.push_back(exact_point(3, 1, {1, 1, -1}, Rat(1, 3)));
    pts.push_back(exact_point(4, -1, {1, 1, 1}, Rat(2)));
    pts.push_back(exact_point(5, 1, {-1, -1, -1}, Rat(-1)));
    pts.push_back(exact_point(6, -1, {1, -1, -1}, Rat(5)));
    pts.push_back(exact_point(7, 1, {-1, 1, -1}, Rat(-1, 2)));
    return pts;
}

using EvalMap = std::map<XMono, std::vector<GaussQ>>;

EvalMap eval_op(const DiffOp& d, const ExactPoint& pt) {
    EvalMap out;
    for (const auto& [mono, mat] : d.terms()) {
        std::vector<GaussQ> vals;
        vals.reserve(static_cast<std::size_t>(mat.dim()) * static_cast<std::size_t>(mat.dim()));
        for (int i = 0; i < mat.dim(); ++i)
            for (int j = 0; j < mat.dim(); ++j) vals.push_back(mat.at(i, j).eval_exact(pt));
        out[mono] = std::move(vals);
    }
    return out;
}

// Unique exact solution of an overdetermined consistent system with 10
// unknowns; throws NotClosed when the system is inconsistent or deficient.
std::array<GaussQ, 10> solve_bracket(std::vector<std::array<GaussQ, 11>> rows) {
    const int ncols = 10;
    int rank = 0;
    for (int col = 0; col < ncols; ++col) {
        int pivot = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (!rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)].is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw NotClosed("bracket system is rank deficient");
        std::swap(rows[static_cast<std::size_t>(rank)], rows[static_cast<std::size_t>(pivot)]);
        auto& prow = rows[static_cast<std::size_t>(rank)];
        const GaussQ pc = prow[static_cast<std::size_t>(col)];
        for (auto& v : prow) v = v / pc;
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r == rank) continue;
            auto& row = rows[static_cast<std::size_t>(r)];
            const GaussQ f = row[static_cast<std::size_t>(col)];
            if (f.is_zero()) continue;
            for (int c = col; c <= ncols; ++c)
                row[static_cast<std::size_t>(c)] =
                    row[static_cast<std::size_t>(c)] - f * prow[static_cast<std::size_t>(c)];
        }
        ++rank;
    }
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
        if (!rows[static_cast<std::size_t>(r)][10].is_zero())
            throw NotClosed("bracket system is inconsistent");
    std::array<GaussQ, 10> c{};
    for (int i = 0; i < 10; ++i) c[static_cast<std::size_t>(i)] = rows[static_cast<std::size_t>(i)][10];
    return c;
}

std::array<GaussQ, 10> fit_bracket(const DiffOp& b, const std::array<DiffOp, 10>& gens) {
    std::vector<std::array<GaussQ, 11>> rows;
    const int n = b.dim();
    for (const auto& pt : table_points()) {
        std::array<EvalMap, 10> gv;
        for (int k = 0; k < 10; ++k) gv[static_cast<std::size_t>(k)] = eval_op(gens[static_cast<std::size_t>(k)], pt);
        EvalMap bv = eval_op(b, pt);

        std::set<XMono> monos;
        for (const auto& m : bv) monos.insert(m.first);
        for (const auto& g : gv)
            for (const auto& m : g) monos.insert(m.first);

        for (const auto& mono : monos) {
            for (int e = 0; e < n * n; ++e) {
                std::array<GaussQ, 11> row{};
                bool nontrivial = false;
                for (int k = 0; k < 10; ++k) {
                    const auto it = gv[static_cast<std::size_t>(k)].find(mono);
                    if (it == gv[static_cast<std::size_t>(k)].end()) continue;
                    row[static_cast<std::size_t>(k)] = it->second[static_cast<std::size_t>(e)];
                    if (!row[static_cast<std::size_t>(k)].is_zero()) nontrivial = true;
                }
                const auto bit = bv.find(mono);
                if (bit != bv.end()) {
                    row[10] = bit->second[static_cast<std::size_t>(e)];
                    if (!row[10].is_zero()) nontrivial = true;
                }
                if (nontrivial) rows.push_back(row);
            }
        }
    }
    return solve_bracket(std::move(rows));
}

DiffOp combo(const std::array<GaussQ, 10>& c, const std::array<DiffOp, 10>& gens, int n) {
    DiffOp out{n};
    for (int k = 0; k < 10; ++k) {
        const GaussQ& ck = c[static_cast<std::size_t>(k)];
        if (ck.is_zero()) continue;
        out += gens[static_cast<std::size_t>(k)].scale(ScalarExpr(ck));
    }
    return out;
}

ConventionTable derive_table() {
    const Rep w = build_rep("w1");
    ConventionTable t;
    for (int i = 0; i < 10; ++i) {
        for (int j = i + 1; j < 10; ++j) {
            const DiffOp b = commutator(w.gen[static_cast<std::size_t>(i)], w.gen[static_cast<std::size_t>(j)]);
            std::array<GaussQ, 10> c{};
            if (!b.is_zero()) {
                c = fit_bracket(b, w.gen);
                if (!(b - combo(c, w.gen, w.n)).is_zero())
                    throw NotClosed("sampled bracket fit fails symbolic certification");
            }
            t.c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = c;
            for (int k = 0; k < 10; ++k)
                t.c[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] =
                    GaussQ(0) - c[static_cast<std::size_t>(k)];
        }
    }
    return t;
}

}  // namespace

// ----------------------------------------------------------------------------
// Public surface
// ----------------------------------------------------------------------------

const std::vector<std::string>& rep_ids() {
    static const std::vector<std::string> ids = {
        "phi1", "phi2", "phi3", "phi1p", "phi2p", "phi3p", "chi1", "chi2",
        "w1", "w2", "w3", "scalar_plus", "scalar_minus", "dirac_a", "dirac_b"};
    return ids;
}

Rep build_rep(const std::string& id) {
    if (id == "phi1") return build_phi(1, false);
    if (id == "phi2") return build_phi(2, false);
    if (id == "phi3") return build_phi(3, false);
    if (id == "phi1p") return build_phi(1, true);
    if (id == "phi2p") return build_phi(2, true);
    if (id == "phi3p") return build_phi(3, true);
    if (id == "chi1") return build_chi(1);
    if (id == "chi2") return build_chi(2);
    if (id == "w1") return build_w1();
    if (id == "w2") return build_w2();
    if (id == "w3") return build_w3();
    if (id == "scalar_plus") return build_scalar(true);
    if (id == "scalar_minus") return build_scalar(false);
    if (id == "dirac_a") return build_dirac('a');
    if (id == "dirac_b") return build_dirac('b');
    throw UnknownRep(id);
}

const Rep& get_rep(const std::string& id) {
    static std::map<std::string, Rep> cache;
    auto it = cache.find(id);
    if (it == cache.end()) it = cache.emplace(id, build_rep(id)).first;
    return it->second;
}

std::string ConventionTable::str() const {
    std::ostringstream os;
    for (int i = 0; i < 10; ++i)
        for (int j = i + 1; j < 10; ++j) {
            bool any = false;
            std::ostringstream line;
            line << "[" << kGenNames[static_cast<std::size_t>(i)] << ","
                 << kGenNames[static_cast<std::size_t>(j)] << "] =";
            for (int k = 0; k < 10; ++k) {
                const GaussQ& v = c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
                if (v.is_zero()) continue;
                line << " + (" << v.str() << ")*" << kGenNames[static_cast<std::size_t>(k)];
                any = true;
            }
            if (any) os << line.str() << "\n";
        }
    return os.str();
}

const ConventionTable& convention_table() {
    static const ConventionTable t = derive_table();
    return t;
}

std::vector<BracketResidual> closure_residuals(const Rep& r) {
    const ConventionTable& t = convention_table();
    std::vector<BracketResidual> out;
    out.reserve(45);
    for (int i = 0; i < 10; ++i)
        for (int j = i + 1; j < 10; ++j) {
            DiffOp res = commutator(r.gen[static_cast<std::size_t>(i)], r.gen[static_cast<std::size_t>(j)])
                       - combo(t.c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], r.gen, r.n);
            out.push_back({i, j, std::move(res)});
        }
    return out;
}

CasimirPair casimirs(const Rep& r) {
    DiffOp lam_sum = r.g(GJ12) * r.g(GP3) + r.g(GJ23) * r.g(GP1) - r.g(GJ13) * r.g(GP2);
    if (lam_sum.x_degree() != 0)
        throw NotScalar(r.id + ": helicity numerator keeps x dependence");
    const ScalarExpr inv_e = sE().inverse();
    CasimirPair c;
    c.lambda = inv_e * lam_sum.coeff(XMono{0, 0, 0});
    if (r.g(GP0).x_degree() != 0) throw NotScalar(r.id + ": H keeps x dependence");
    c.epsilon = inv_e * r.g(GP0).coeff(XMono{0, 0, 0});
    return c;
}

std::vector<ContentLine> content(const CasimirPair& c) {
    const int n = c.lambda.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const bool diag = i == j;
            if (!diag && (!c.lambda.at(i, j).is_zero() || !c.epsilon.at(i, j).is_zero()))
                throw NotScalar("content expects diagonal Casimir matrices");
            if (diag && (!c.lambda.at(i, i).is_constant() || !c.epsilon.at(i, i).is_constant()))
                throw NotScalar("content expects constant Casimir matrices");
        }

    std::vector<ContentLine> lines;
    for (int i = 0; i < n; ++i) {
        const GaussQ eps = c.epsilon.at(i, i).constant_value();
        const GaussQ lam = c.lambda.at(i, i).constant_value();
        bool merged = false;
        for (auto& l : lines)
            if (l.eps == eps && l.lam == lam) {
                ++l.mult;
                merged = true;
                break;
            }
        if (!merged) lines.push_back({eps, lam, 1});
    }
    auto key = [](const GaussQ& q) { return std::make_pair(q.re, q.im); };
    std::sort(lines.begin(), lines.end(), [&](const ContentLine& a, const ContentLine& b) {
        if (key(a.eps) != key(b.eps)) return key(a.eps) > key(b.eps);
        return key(a.lam) > key(b.lam);
    });
    return lines;
}

std::string content_str(const std::vector<ContentLine>& lines) {
    std::ostringstream os;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (i) os << " + ";
        os << "D(eps=" << lines[i].eps.str() << ",lam=" << lines[i].lam.str() << ")";
        if (lines[i].mult > 1) os << "x" << lines[i].mult;
    }
    return os.str();
}

Rep transform_rep(const Rep& r, const ScaledUnitary& v, bool forward, std::string new_id) {
    Rep out;
    out.id = new_id.empty() ? r.id + "@" + v.name : std::move(new_id);
    out.family = r.family;
    out.n = r.n;
    out.partner = r.id;
    out.kernel = v.name;
    for (int k = 0; k < 10; ++k)
        out.gen[static_cast<std::size_t>(k)] = v.conjugate(r.gen[static_cast<std::size_t>(k)], forward);
    return out;
}

bool reps_equal(const Rep& a, const Rep& b, DiffOp* worst) {
    if (a.n != b.n) return false;
    for (int k = 0; k < 10; ++k) {
        DiffOp d = a.gen[static_cast<std::size_t>(k)] - b.gen[static_cast<std::size_t>(k)];
        if (!d.is_zero()) {
            if (worst) *worst = std::move(d);
            return false;
        }
    }
    return true;
}

}  // namespace p13
