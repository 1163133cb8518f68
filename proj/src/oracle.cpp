#include "p13/oracle.hpp"

#include "p13/dirac.hpp"
#include "p13/error.hpp"
#include "p13/symmetry.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace p13 {

namespace {

using CMat = Eigen::Matrix<std::complex<double>, Eigen::Dynamic, Eigen::Dynamic>;

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double unit_real(std::uint64_t& state) {
    return static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53;
}

[[nodiscard]] CMat to_eigen(const std::vector<std::complex<double>>& m, int n) {
    CMat out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out(i, j) = m[static_cast<std::size_t>(i) * n + j];
    return out;
}

[[nodiscard]] CMat eval_mat(const MatrixOp& m, const NumPoint& pt) {
    return to_eigen(m.eval_num(pt), m.dim());
}

// Worst of f over the stream's points, swapping in reserve points when a
// denominator lands too close to zero.
template <typename F>
[[nodiscard]] double worst_over_points(const SamplePlan& plan, const std::string& stream, F&& f) {
    const std::vector<NumPoint> pts = sample_points(plan, stream);
    std::vector<NumPoint> reserve;
    std::size_t ri = 0;
    double worst = 0.0;
    for (NumPoint pt : pts) {
        for (int attempt = 0;; ++attempt) {
            try {
                worst = std::max(worst, f(pt));
                break;
            } catch (const SingularPoint&) {
                if (attempt >= 8) throw;
                if (reserve.empty()) reserve = sample_points(plan, stream + "#retry");
                if (ri >= reserve.size()) throw;
                pt = reserve[ri++];
            }
        }
    }
    return worst;
}

[[nodiscard]] double point_scale(const NumPoint& pt) { return std::max(1.0, pt.e * pt.e); }

[[nodiscard]] double max_abs(const std::vector<std::complex<double>>& v) {
    double m = 0.0;
    for (const auto& z : v) m = std::max(m, std::abs(z));
    return m;
}

}  // namespace

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::vector<NumPoint> sample_points(const SamplePlan& plan, const std::string& stream) {
    std::uint64_t state = plan.seed ^ fnv1a(stream);
    for (int i = 0; i < 4; ++i) splitmix64(state);  // decorrelate nearby seeds

    auto signed_draw = [&](double floor) {
        const double v = floor + (plan.range - floor) * unit_real(state);
        return (splitmix64(state) & 1) ? v : -v;
    };

    std::vector<NumPoint> out;
    out.reserve(2 * static_cast<std::size_t>(plan.count));
    for (int branch : {+1, -1})
        for (int i = 0; i < plan.count; ++i) {
            NumPoint pt{};
            double r = 0.0;
            do {  // flooring R keeps 1/R and 1/(E -+ p3) bounded
                pt.p1 = signed_draw(0.0);
                pt.p2 = signed_draw(0.0);
                r = std::hypot(pt.p1, pt.p2);
            } while (r < plan.p3_floor);
            pt.p3 = signed_draw(plan.p3_floor);
            pt.t0 = signed_draw(0.0);
            pt.r = r;
            pt.e = std::hypot(r, pt.p3);
            pt.a = branch * std::abs(pt.p3);
            out.push_back(pt);
        }
    return out;
}

NumericVerdict numeric_zero(const MatrixOp& m, const SamplePlan& plan, const std::string& stream) {
    const double worst = worst_over_points(plan, stream, [&](const NumPoint& pt) {
        return max_abs(m.eval_num(pt)) / point_scale(pt);
    });
    return {worst <= plan.tol, worst};
}

NumericVerdict numeric_zero(const DiffOp& op, const SamplePlan& plan, const std::string& stream) {
    const double worst = worst_over_points(plan, stream, [&](const NumPoint& pt) {
        double w = 0.0;
        for (const auto& [mono, g] : op.terms())
            w = std::max(w, max_abs(g.eval_num(pt)) / point_scale(pt));
        return w;
    });
    return {worst <= plan.tol, worst};
}

NumericVerdict numeric_equal(const DiffOp& a, const DiffOp& b, const SamplePlan& plan,
                             const std::string& stream) {
    if (a.dim() != b.dim()) throw DimensionMismatch("numeric_equal");
    std::set<XMono> monos;
    for (const auto& [mono, g] : a.terms()) monos.insert(mono);
    for (const auto& [mono, g] : b.terms()) monos.insert(mono);
    const double worst = worst_over_points(plan, stream, [&](const NumPoint& pt) {
        double w = 0.0;
        for (const auto& mono : monos) {
            const auto va = a.coeff(mono).eval_num(pt);
            const auto vb = b.coeff(mono).eval_num(pt);
            for (std::size_t i = 0; i < va.size(); ++i)
                w = std::max(w, std::abs(va[i] - vb[i]) / point_scale(pt));
        }
        return w;
    });
    return {worst <= plan.tol, worst};
}

NumericKernel plane_wave_kernel(const std::vector<std::complex<double>>& m, int n, double tol) {
    Eigen::JacobiSVD<CMat> svd(to_eigen(m, n), Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double scale = std::max(sv.size() > 0 ? sv(0) : 0.0, 1.0);
    const double lo = tol * scale;
    const double hi = 1e4 * tol * scale;
    NumericKernel out;
    for (int i = 0; i < sv.size(); ++i) {
        if (sv(i) >= lo && sv(i) < hi)
            throw DegenerateKernel("singular value inside the rank tolerance band");
        if (sv(i) < lo) {
            std::vector<std::complex<double>> col(static_cast<std::size_t>(n));
            for (int r = 0; r < n; ++r) col[static_cast<std::size_t>(r)] = svd.matrixV()(r, i);
            out.basis.push_back(std::move(col));
        }
    }
    out.dim = static_cast<int>(out.basis.size());
    return out;
}

NumericVerdict weyl_block_probe(char basis, const SamplePlan& plan) {
    const GammaBasis& b = gamma_basis(basis);
    const ScaledUnitary w = kernel_weyl(basis);
    const DiffOp conj = w.conjugate(dirac_gens(basis)[GP0], true);

    // The conjugation sends g4 to g0, so sorting diag(g0) descending aligns
    // the two chirality halves into contiguous blocks.
    std::array<int, 4> idx{};
    {
        const NumPoint probe{0.0, 3.0, 4.0, 12.0, 13.0, 12.0, 5.0};
        const CMat g0 = eval_mat(b.g[0], probe);
        int pos = 0;
        for (int i = 0; i < 4; ++i)
            if (g0(i, i).real() > 0) idx[static_cast<std::size_t>(pos++)] = i;
        for (int i = 0; i < 4; ++i)
            if (g0(i, i).real() < 0) idx[static_cast<std::size_t>(pos++)] = i;
        if (pos != 4) throw NotClosed("g0 diagonal is not a sign pattern");
    }

    const double worst = worst_over_points(plan, "weyl-blocks", [&](const NumPoint& pt) {
        const double scale = std::max(1.0, pt.e);
        double w2 = 0.0;
        for (const auto& [mono, g] : conj.terms())
            if (x_total(mono) > 0) w2 = std::max(w2, max_abs(g.eval_num(pt)) / scale);

        const CMat m = eval_mat(conj.coeff({0, 0, 0}), pt);
        const std::complex<double> im(0.0, 1.0);
        Eigen::Matrix2cd sp;
        sp << pt.p3, pt.p1 - im * pt.p2, pt.p1 + im * pt.p2, -pt.p3;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                std::complex<double> want{0.0, 0.0};
                if (i / 2 == j / 2) want = (i < 2 ? 1.0 : -1.0) * sp(i % 2, j % 2);
                const std::complex<double> got =
                    m(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(j)]);
                w2 = std::max(w2, std::abs(got - want) / scale);
            }
        return w2;
    });
    return {worst <= plan.tol, worst};
}

namespace {

[[nodiscard]] NumPoint endo_point(const EndoSpec& e, NumPoint pt) {
    if (e.p_reflect[0]) pt.p1 = -pt.p1;
    if (e.p_reflect[1]) pt.p2 = -pt.p2;
    if (e.p_reflect[2]) pt.p3 = -pt.p3;  // a = |p3| and r, e are invariant
    if (e.t_reflect) pt.t0 = -pt.t0;
    return pt;
}

[[nodiscard]] CMat endo_eval(const MatrixOp& g, const EndoSpec& e, const NumPoint& pt) {
    CMat out = eval_mat(g, endo_point(e, pt));
    if (e.conj) out = out.conjugate().eval();
    return out;
}

}  // namespace

NumericVerdict numeric_relation(const Rep& rep, const Kind& kind, const MatrixOp& m,
                                const SamplePlan& plan, const std::string& stream) {
    const XMono unit{0, 0, 0};
    std::vector<std::pair<MatrixOp, double>> rows;
    for (int mu = GP0; mu <= GP3; ++mu)
        rows.emplace_back(rep.g(static_cast<Gen>(mu)).coeff(unit),
                          kind.eta[static_cast<std::size_t>(mu)]);
    const CasimirPair cp = casimirs(rep);
    rows.emplace_back(cp.lambda, kind.eta_lambda());
    rows.emplace_back(cp.epsilon, kind.eta_epsilon());

    const double worst = worst_over_points(plan, stream, [&](const NumPoint& pt) {
        const double scale = std::max(1.0, pt.e);
        const CMat mm = eval_mat(m, pt);
        double w = 0.0;
        for (const auto& [g, eta] : rows) {
            const CMat res = mm * endo_eval(g, kind.endo, pt) - eta * eval_mat(g, pt) * mm;
            w = std::max(w, res.cwiseAbs().maxCoeff() / scale);
        }
        return w;
    });
    return {worst <= plan.tol, worst};
}

NumericVerdict unitary_probe(const ScaledUnitary& v, const SamplePlan& plan,
                             const std::string& stream) {
    const ScalarExpr norm = v.s.expand();
    const double worst = worst_over_points(plan, stream, [&](const NumPoint& pt) {
        const CMat n = eval_mat(v.n_mat, pt);
        const std::complex<double> s = norm.eval_num(pt);
        const CMat res = n.adjoint() * n / s - CMat::Identity(n.rows(), n.cols());
        return res.cwiseAbs().maxCoeff();
    });
    return {worst <= plan.tol, worst};
}

MasterVerdict master_equation_probe(char basis, int k, double kappa, const SamplePlan& plan) {
    const GammaBasis& bb = gamma_basis(basis);
    const MatrixOp proj_p = dirac_projector(basis, k, +1);
    const MatrixOp proj_m = dirac_projector(basis, k, -1);

    std::string stream = "master-";
    stream += basis;
    stream += '-';
    stream += std::to_string(k);
    std::vector<NumPoint> pts = sample_points(plan, stream);
    if (pts.size() > 10) pts.resize(10);

    MasterVerdict out;
    int phys_plus = -1, phys_minus = -1;
    for (const NumPoint& pt : pts) {
        const double scale = std::max(1.0, pt.e);
        const CMat g0 = eval_mat(bb.g[0], pt);
        CMat slash_p = CMat::Zero(4, 4);
        for (int j = 1; j <= 3; ++j) {
            const double pj = j == 1 ? pt.p1 : j == 2 ? pt.p2 : pt.p3;
            slash_p += pj * eval_mat(bb.g[static_cast<std::size_t>(j)], pt);
        }
        const CMat pp = eval_mat(proj_p, pt);
        const CMat pm = eval_mat(proj_m, pt);

        auto dirac_of = [&](double omega) -> CMat { return omega * g0 - slash_p; };
        auto kernel_of = [&](const CMat& m) {
            std::vector<std::complex<double>> flat(16);
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) flat[static_cast<std::size_t>(i * 4 + j)] = m(i, j);
            return plane_wave_kernel(flat, 4, plan.tol);
        };
        // Constrained pair written out independently: u with dir u = 0 and
        // the subsidiary condition.  The equation must carry exactly this
        // physical content.
        auto stacked_dim = [&](const CMat& dir) {
            CMat st(8, 4);
            st.topRows(4) = dir;
            st.bottomRows(4) = pp;
            Eigen::JacobiSVD<CMat> svd(st);
            const double thr = plan.tol * std::max(svd.singularValues()(0), 1.0);
            int dim = 0;
            for (int i = 0; i < 4; ++i) {
                const double sv = i < svd.singularValues().size() ? svd.singularValues()(i) : 0.0;
                if (sv >= thr && sv < 1e4 * thr)
                    throw DegenerateKernel("constrained pair near a rank transition");
                if (sv < thr) ++dim;
            }
            return dim;
        };

        for (double omega : {pt.e, -pt.e, pt.e + 1.5}) {
            const bool on_shell = std::abs(std::abs(omega) - pt.e) < 1e-12;
            const CMat dir = dirac_of(omega);
            const CMat m = (dir + kappa * pp) * pm;
            const NumericKernel ker = kernel_of(m);

            CMat phys = CMat::Zero(4, std::max(ker.dim, 1));
            for (int c = 0; c < ker.dim; ++c) {
                Eigen::Vector4cd u;
                for (int r = 0; r < 4; ++r)
                    u(r) = ker.basis[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)];
                const Eigen::Vector4cd phi = pm * u;
                phys.col(c) = phi;
                // the field the equation propagates satisfies the free
                // equation and the subsidiary condition; off shell it is null
                out.worst = std::max(out.worst, (dir * phi).norm() / scale);
                out.worst = std::max(out.worst, (pp * phi).norm() / scale);
                if (!on_shell) out.worst = std::max(out.worst, phi.norm() / scale);
            }
            // absolute threshold: a column of gauge junk is numerically null
            int pdim = 0;
            if (ker.dim > 0) {
                Eigen::JacobiSVD<CMat> psvd(phys);
                for (int i = 0; i < psvd.singularValues().size(); ++i)
                    if (psvd.singularValues()(i) > 1e-6) ++pdim;
            }

            if (pdim != stacked_dim(dir)) out.pass = false;
            if (on_shell) {
                int& slot = omega > 0 ? phys_plus : phys_minus;
                if (slot < 0) slot = pdim;
                if (pdim != slot) out.pass = false;
            } else if (pdim != 0) {
                out.pass = false;
            }
        }
    }
    // the shell carries the full two-component content and nothing else
    if (phys_plus < 0 || phys_minus < 0 || phys_plus + phys_minus != 2) out.pass = false;
    if (out.worst > plan.tol) out.pass = false;

    std::ostringstream os;
    os << "k=" << k << " kappa=" << kappa << " physical(+E)=" << phys_plus
       << " physical(-E)=" << phys_minus;
    out.detail = os.str();
    return out;
}

}  // namespace p13
