#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coslab/laws.hpp"
#include "coslab/matrix.hpp"
#include "coslab/resolvent.hpp"
#include "coslab/spectral.hpp"

// Reference computations behind the reproduce command. Each runner returns the
// measured numbers plus the pass verdict for its check; all randomness derives
// from the given seed, so reruns are byte-identical.
namespace coslab::suite {

inline constexpr int kGeneratorCount = 20;
inline constexpr Eigen::Index kGeneratorDim = 8;
inline constexpr double kGeneratorNormBound = 4.0;

std::vector<ComplexMatrix> generator_set(std::uint64_t seed);

// d'Alembert residual over a 10x10 (t,s) grid in [0,1]^2 per generator.
struct DalembertChecks {
    struct Row {
        int gen;
        double t, s, residual;
    };
    std::vector<Row> rows;
    double max_residual = 0.0;
    bool pass = false;  // max <= 1e-8
};
DalembertChecks run_dalembert_suite(std::uint64_t seed);

// (lambda, s) sweep shared by the resolvent checks.
std::vector<Complex> sweep_lambdas();
std::vector<double> sweep_s_values();

// Residual of (lambda^2 I - A) S = lambda (cosh(lambda s) I - C(s)).
struct IdentityChecks {
    struct Row {
        int gen;
        Complex lambda;
        double s;
        double residual;
    };
    std::vector<Row> rows;
    double max_residual = 0.0;
    bool pass = false;  // max <= 1e-7
};
IdentityChecks run_identity_suite(std::uint64_t seed);

// resolvent_via_s against the direct solve of (lambda^2 I - A).
struct OracleChecks {
    struct Row {
        int gen;
        Complex lambda;
        double s;
        double rel_diff;
        bool ok;
    };
    std::vector<Row> rows;
    double max_rel_diff = 0.0;
    bool pass = false;  // all ok and max <= 1e-6
};
OracleChecks run_oracle_suite(std::uint64_t seed);

// ||S|| <= sup||C|| sinh(|s| Re l)/Re l on the sweep, plus the scalar
// inequality sinh(|s| x)/x <= 2|s| e^{|s| x} on random samples.
struct SBoundChecks {
    struct Row {
        int gen;
        Complex lambda;
        double s;
        double lhs, rhs;
    };
    struct ScalarRow {
        double s, x, lhs, rhs;
    };
    std::vector<Row> rows;
    std::vector<ScalarRow> scalar_rows;
    double worst_slack = 0.0;  // max of lhs - rhs over everything
    bool pass = false;         // worst_slack <= 1e-8
};
SBoundChecks run_s_bound_suite(std::uint64_t seed);

// ||lambda^2 R(lambda^2, A)|| <= M |lambda| / (Re lambda - omega) with the
// fitted growth pair, for 50 lambda per generator with Re lambda >= omega+0.5.
struct GrowthBoundChecks {
    struct Row {
        int gen;
        Complex lambda;
        double value, bound;
    };
    std::vector<Row> rows;
    double worst_slack = 0.0;  // max of value - bound
    bool pass = false;         // worst_slack <= 1e-6
};
GrowthBoundChecks run_growth_bound_suite(std::uint64_t seed);

// diag(cos kt) optimality window sups.
struct DiagOptimality {
    double sup32 = 0.0;      // n=32, grid sup on [0, 0.1]; expect >= 2 - 1e-6
    double sup8 = 0.0;       // n=8; expect 1 - cos(0.8) within 1e-9
    double expected8 = 0.0;  // 1 - cos(0.8)
    bool pass = false;
};
DiagOptimality run_diag_optimality();

// Scalar distance sup vs the closed form 8/(3 sqrt 3).
struct ScalarDistance {
    double grid_sup = 0.0;
    double analytic = 0.0;
    bool pass = false;  // |grid_sup - analytic| <= 1e-6 and matches 1.5396007
};
ScalarDistance run_scalar_distance();

// limsup proxy: -> 0 for every bounded generator; stays >= 1.9 for the
// diagonal example at coarse levels.
struct LimsupChecks {
    struct Row {
        std::string label;
        double estimate;
    };
    std::vector<Row> bounded;    // levels = 30; expect <= 1e-6
    std::vector<Row> diagonal;   // n in {64, 96, 128}, levels = 4; expect >= 1.9
    bool pass = false;
};
LimsupChecks run_limsup_suite(std::uint64_t seed);

// Frequency-domain semigroup proof for A = (-0.1).
struct FrequencyChecks {
    struct Row {
        double lambda;
        double norm_distance;  // ||lambda R(lambda, A) - I||
        double laplace_rel_diff;
    };
    std::vector<Row> rows;
    double r = 0.0;  // grid sup of ||T(s) - I|| on [0, 50]
    bool pass = false;
};
FrequencyChecks run_frequency_suite();

// Time-domain proof: Cesaro identity and inverse bound on the scalar and
// nilpotent examples.
struct CesaroChecks {
    struct Row {
        std::string example;
        double t;
        double identity_residual, inv_norm, bound;
        bool applicable;
    };
    std::vector<Row> rows;
    bool pass = false;
};
CesaroChecks run_cesaro_suite();

// Extension family: block norm equality and n^2 A recovery order.
struct ExtensionChecks {
    struct NormRow {
        std::string base;
        double t;
        double materialized, block_max, diff;
    };
    struct RecoveryRow {
        std::string base;
        int block;
        double h, err, err_half, ratio;
    };
    std::vector<NormRow> norm_rows;
    std::vector<RecoveryRow> recovery_rows;
    bool pass = false;
};
ExtensionChecks run_extension_suite(std::uint64_t seed);

// Region machinery for A = (-1), c = 0.5, t0 = pi/6.
struct RegionChecks {
    SpectralRegionParams params;
    RTildeCertificate certificate;
    double cert_max_at_bump = 0.0;  // boundary max at r_tilde + 1e-4
    bool params_ok = false;
    bool certificate_ok = false;
    RegionVerification verification;
    bool pass = false;
};
RegionChecks run_region_suite(std::uint64_t seed);

}  // namespace coslab::suite
