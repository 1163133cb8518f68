#pragma once

#include "p13/diffop.hpp"

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace p13 {

// ============================================================================
// Randomized numeric cross-checks for symbolic zero claims
// ============================================================================

struct SamplePlan {
    std::uint64_t seed = 1;
    int count = 20;        // points per branch
    double p3_floor = 0.1;  // also floors R, keeping 1/R and 1/(E+p3) tame
    double range = 10.0;
    double tol = 1e-9;  // relative to the point scale max(1, E^2)
};

struct NumericVerdict {
    bool zero = true;
    double worst = 0.0;  // worst scaled residual over all points
};

[[nodiscard]] std::uint64_t fnv1a(const std::string& s);

// Deterministic stream per check id: draws depend only on (seed, stream),
// never on evaluation order.
[[nodiscard]] std::vector<NumPoint> sample_points(const SamplePlan& plan,
                                                  const std::string& stream);

[[nodiscard]] NumericVerdict numeric_zero(const DiffOp& op, const SamplePlan& plan,
                                          const std::string& stream);
[[nodiscard]] NumericVerdict numeric_zero(const MatrixOp& m, const SamplePlan& plan,
                                          const std::string& stream);

// Equality without symbolic cancellation: both sides are evaluated in floats
// per x-monomial and compared, so a wrong exact normal form cannot hide.
[[nodiscard]] NumericVerdict numeric_equal(const DiffOp& a, const DiffOp& b,
                                           const SamplePlan& plan, const std::string& stream);

// Orthonormal kernel basis of a dense complex n x n matrix (row-major), via a
// rank-revealing decomposition at the given tolerance.
struct NumericKernel {
    int dim = 0;
    std::vector<std::vector<std::complex<double>>> basis;
};
[[nodiscard]] NumericKernel plane_wave_kernel(const std::vector<std::complex<double>>& m, int n,
                                              double tol);

// Forward-conjugates the Hamiltonian by the chiral kernel and compares the
// diagonal blocks against +sigma.p / -sigma.p (off-diagonal blocks against 0)
// at every sample point.
[[nodiscard]] NumericVerdict weyl_block_probe(char basis, const SamplePlan& plan);

struct Rep;
struct Kind;
struct ScaledUnitary;

// Independent float path for the x-free relation rows: evaluates m, the
// translations and both Casimirs as plain complex matrices and recomputes
// m.endo(g) - eta g m at every sample point.
[[nodiscard]] NumericVerdict numeric_relation(const Rep& rep, const Kind& kind, const MatrixOp& m,
                                              const SamplePlan& plan, const std::string& stream);

// adjoint(V) V - 1 through float evaluation of N and the norm scalar.
[[nodiscard]] NumericVerdict unitary_probe(const ScaledUnitary& v, const SamplePlan& plan,
                                           const std::string& stream);

// Plane-wave probe of the kappa-family equation: at omega = +-E every kernel
// vector's physical part solves the free equation and the k-th subsidiary
// condition; physical multiplicity is 2 on shell and 0 at a generic omega.
struct MasterVerdict {
    bool pass = true;
    double worst = 0.0;
    std::string detail;
};
[[nodiscard]] MasterVerdict master_equation_probe(char basis, int k, double kappa,
                                                  const SamplePlan& plan);

}  // namespace p13
