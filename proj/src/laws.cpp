#include "coslab/laws.hpp"

#include <algorithm>
#include <cmath>

#include "coslab/error.hpp"

namespace coslab {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::vector<double> sorted_unique(std::vector<double> grid) {
    for (double t : grid)
        if (!std::isfinite(t)) throw invalid_input("norm_profile: grid values must be finite");
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    if (grid.empty()) throw invalid_input("norm_profile: empty grid");
    return grid;
}

template <typename Dist>
NormProfile profile_of(FamilyKind kind, const std::vector<double>& grid, Dist dist) {
    NormProfile out;
    out.kind = kind;
    out.t = sorted_unique(grid);
    out.dist.reserve(out.t.size());
    for (double t : out.t) out.dist.push_back(dist(t));
    return out;
}

}  // namespace

NormProfile norm_profile(const CosineFamily& fam, const std::vector<double>& grid) {
    const Eigen::Index n = fam.generator().dim();
    return profile_of(FamilyKind::cosine, grid,
                      [&](double t) { return op_norm(fam.at(t) - identity(n)); });
}

NormProfile norm_profile(const Semigroup& sg, const std::vector<double>& grid) {
    for (double t : grid)
        if (t < 0.0) throw invalid_input("norm_profile: semigroup grid must be nonnegative");
    const Eigen::Index n = sg.generator().dim();
    return profile_of(FamilyKind::semigroup, grid,
                      [&](double t) { return op_norm(sg.at(t) - identity(n)); });
}

NormProfile norm_profile_vs_scalar(const CosineFamily& fam, double a,
                                   const std::vector<double>& grid) {
    const Eigen::Index n = fam.generator().dim();
    return profile_of(FamilyKind::cosine, grid, [&](double t) {
        return op_norm(fam.at(t) - std::cos(a * t) * identity(n));
    });
}

double limsup_zero_estimate(const CosineFamily& fam, double t_start, int levels) {
    if (!(t_start > 0.0)) throw invalid_input("limsup_zero_estimate: requires t_start > 0");
    if (levels < 3) throw invalid_input("limsup_zero_estimate: requires levels >= 3");
    const Eigen::Index n = fam.generator().dim();
    const int keep = (levels + 1) / 2;
    double best = 0.0;
    for (int j = levels - keep; j < levels; ++j) {
        const double t = std::ldexp(t_start, -j);
        best = std::max(best, op_norm(fam.at(t) - identity(n)));
    }
    return best;
}

const char* law_name(LawId law) {
    switch (law) {
        case LawId::zero_two_local: return "zero-two-local";
        case LawId::zero_two_global: return "zero-two-global";
        case LawId::zero_one_global: return "zero-one-global";
        case LawId::scalar_distance: return "scalar-distance";
    }
    return "unknown";
}

LawVerdict classify(const NormProfile& profile, LawId law, double margin) {
    const bool needs_semigroup = (law == LawId::zero_one_global);
    if ((profile.kind == FamilyKind::semigroup) != needs_semigroup)
        throw invalid_input("classify: profile kind does not match the law");
    if (profile.t.empty()) throw invalid_input("classify: empty profile");

    LawVerdict out;
    out.law = law;
    out.threshold = needs_semigroup ? 1.0 : 2.0;

    // Local law: limsup proxy over the smaller-t half (grid is sorted
    // ascending, so that is the leading half); global laws: full max.
    const std::size_t count = (law == LawId::zero_two_local)
                                  ? profile.t.size() - profile.t.size() / 2
                                  : profile.t.size();
    double measured = 0.0;
    for (std::size_t i = 0; i < count; ++i) measured = std::max(measured, profile.dist[i]);
    out.measured = measured;

    if (measured < out.threshold - margin) {
        switch (law) {
            case LawId::zero_two_local:
                out.conclusion = "generator bounded => uniformly continuous";
                break;
            case LawId::zero_two_global:
            case LawId::zero_one_global:
                out.conclusion = "family is identically I";
                break;
            case LawId::scalar_distance:
                out.conclusion = "family equals the scalar comparison family";
                break;
        }
    } else {
        out.conclusion = "no conclusion (hypothesis fails)";
    }
    return out;
}

CosineFamily diag_cosine_example(int n) {
    if (n < 1) throw invalid_input("diag_cosine_example: requires n >= 1");
    ComplexMatrix a = ComplexMatrix::Zero(n, n);
    for (int k = 1; k <= n; ++k)
        a(k - 1, k - 1) = Complex(-static_cast<double>(k) * static_cast<double>(k), 0.0);
    return CosineFamily(Generator(a));
}

ExtensionFamily::ExtensionFamily(CosineFamily base, int n_blocks)
    : base_(std::move(base)), n_blocks_(n_blocks) {
    if (n_blocks < 1) throw invalid_input("ExtensionFamily: requires n_blocks >= 1");
}

Eigen::Index ExtensionFamily::dim() const {
    return static_cast<Eigen::Index>(n_blocks_) * base_.generator().dim();
}

ComplexMatrix ExtensionFamily::block_at(int block, double t) const {
    if (block < 1 || block > n_blocks_) throw invalid_input("ExtensionFamily: block out of range");
    return base_.at(static_cast<double>(block) * t);
}

ComplexMatrix ExtensionFamily::block_generator(int block) const {
    if (block < 1 || block > n_blocks_) throw invalid_input("ExtensionFamily: block out of range");
    const double n2 = static_cast<double>(block) * static_cast<double>(block);
    return n2 * base_.generator().matrix();
}

ComplexMatrix ExtensionFamily::block_generator_recover(int block, double h) const {
    if (block < 1 || block > n_blocks_) throw invalid_input("ExtensionFamily: block out of range");
    if (!(h > 0.0 && h <= 1.0))
        throw invalid_input("ExtensionFamily: recovery step must satisfy 0 < h <= 1");
    const Eigen::Index d = base_.generator().dim();
    return 2.0 / (h * h) * (block_at(block, h) - identity(d));
}

double ExtensionFamily::dist_to_identity(double t) const {
    const Eigen::Index d = base_.generator().dim();
    double best = 0.0;
    for (int n = 1; n <= n_blocks_; ++n)
        best = std::max(best, op_norm(block_at(n, t) - identity(d)));
    return best;
}

ComplexMatrix ExtensionFamily::materialize(double t) const {
    const Eigen::Index d = base_.generator().dim();
    ComplexMatrix out = ComplexMatrix::Zero(dim(), dim());
    for (int n = 1; n <= n_blocks_; ++n)
        out.block((n - 1) * d, (n - 1) * d, d, d) = block_at(n, t);
    return out;
}

double scalar_distance_sup(double a, int grid_points) {
    if (a == 0.0) throw invalid_input("scalar_distance_sup: requires a != 0");
    if (grid_points < 1) throw invalid_input("scalar_distance_sup: requires grid_points >= 1");
    const double period = 2.0 * kPi / std::abs(a);
    double best = 0.0;
    for (int i = 0; i <= grid_points; ++i) {
        const double t = period * static_cast<double>(i) / grid_points;
        best = std::max(best, std::abs(std::cos(3.0 * a * t) - std::cos(a * t)));
    }
    return best;
}

double scalar_distance_closed_form() { return 8.0 / (3.0 * std::sqrt(3.0)); }

}  // namespace coslab
