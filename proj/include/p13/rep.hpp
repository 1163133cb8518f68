#pragma once

#include "p13/diffop.hpp"
#include "p13/unitary.hpp"

#include <array>
#include <string>
#include <vector>

namespace p13 {

// ============================================================================
// Representations of the massless Poincare algebra in momentum space
// ============================================================================

// Fixed generator order used by every table in the engine.
enum Gen : int {
    GP0 = 0, GP1 = 1, GP2 = 2, GP3 = 3,
    GJ12 = 4, GJ13 = 5, GJ23 = 6,
    GJ01 = 7, GJ02 = 8, GJ03 = 9,
};

inline constexpr std::array<const char*, 10> kGenNames = {
    "P0", "P1", "P2", "P3", "J12", "J13", "J23", "J01", "J02", "J03"};

struct Rep {
    std::string id;
    std::string family;   // invariance family: phi1, phi2, phi3, scalar_plus, scalar_minus, dirac
    int n = 2;
    std::array<DiffOp, 10> gen;

    // Unitary-equivalent rep with constant Casimirs plus the kernel that
    // carries the equivalence; empty when the rep is its own partner.
    std::string partner;
    std::string kernel;

    [[nodiscard]] const DiffOp& g(Gen k) const { return gen[static_cast<std::size_t>(k)]; }
};

[[nodiscard]] const std::vector<std::string>& rep_ids();
[[nodiscard]] Rep build_rep(const std::string& id);

// Cached registry; builders are deterministic so sharing is safe.
[[nodiscard]] const Rep& get_rep(const std::string& id);

// ============================================================================
// Structure constants
// ============================================================================

// [g_i, g_j] = sum_k c[i][j][k] g_k, derived once by exact sampling from an
// explicitly closed rep and then certified symbolically.  Every other closure
// check is measured against this one table.
struct ConventionTable {
    std::array<std::array<std::array<GaussQ, 10>, 10>, 10> c{};

    [[nodiscard]] std::string str() const;
};

[[nodiscard]] const ConventionTable& convention_table();

struct BracketResidual {
    int i, j;
    DiffOp residual;  // [g_i, g_j] - sum_k c g_k; zero iff the bracket closes
};

[[nodiscard]] std::vector<BracketResidual> closure_residuals(const Rep& r);

// ============================================================================
// Casimir data
// ============================================================================

// Helicity operator (J12 P3 + J23 P1 + J31 P2)/E and sign-of-energy P0/E.
// Both collapse to x-free matrices for every rep here; NotScalar otherwise.
struct CasimirPair {
    MatrixOp lambda;
    MatrixOp epsilon;
};

[[nodiscard]] CasimirPair casimirs(const Rep& r);

// Joint spectrum of a constant commuting Casimir pair, ordered by (eps, lam)
// descending; requires diagonal constant matrices.
struct ContentLine {
    GaussQ eps, lam;
    int mult = 1;
};

[[nodiscard]] std::vector<ContentLine> content(const CasimirPair& c);
[[nodiscard]] std::string content_str(const std::vector<ContentLine>& lines);

// ============================================================================
// Equivalence
// ============================================================================

// Conjugates every generator; backward (the default) models psi -> V^-1 psi.
[[nodiscard]] Rep transform_rep(const Rep& r, const ScaledUnitary& v, bool forward = false,
                                std::string new_id = "");

[[nodiscard]] bool reps_equal(const Rep& a, const Rep& b, DiffOp* worst = nullptr);

}  // namespace p13
