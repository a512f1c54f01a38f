#pragma once

#include <string>
#include <vector>

#include "coslab/family.hpp"
#include "coslab/matrix.hpp"

namespace coslab {

enum class FamilyKind { cosine, semigroup };

/// Sampled t -> ||F(t) - I|| data (or distance to a scalar comparison family).
/// Grid values are sorted and deduplicated; distances are grid lower bounds of
/// the corresponding suprema.
struct NormProfile {
    FamilyKind kind = FamilyKind::cosine;
    std::vector<double> t;
    std::vector<double> dist;
};

NormProfile norm_profile(const CosineFamily& fam, const std::vector<double>& grid);
NormProfile norm_profile(const Semigroup& sg, const std::vector<double>& grid);

/// Distance profile ||C(t) - cos(a t) I|| against the scalar family.
NormProfile norm_profile_vs_scalar(const CosineFamily& fam, double a,
                                   const std::vector<double>& grid);

/// Proxy for limsup_{t->0+} ||C(t) - I||: max of the distance over the
/// geometric grid {t_start 2^{-j}, j = 0..levels-1} restricted to the finer
/// half (last ceil(levels/2) levels). Requires levels >= 3.
double limsup_zero_estimate(const CosineFamily& fam, double t_start, int levels);

enum class LawId { zero_two_local, zero_two_global, zero_one_global, scalar_distance };

/// Hyphenated law name used in reports ("zero-two-local", ...).
const char* law_name(LawId law);

/// Classifier output: the measured sup (or limsup proxy), the theorem's
/// threshold, and a conclusion claimed only when measured clears the threshold
/// by the margin.
struct LawVerdict {
    LawId law = LawId::zero_two_local;
    double measured = 0.0;
    double threshold = 0.0;
    std::string conclusion;
};

/// For zero_two_local the measured value is the max over the smaller-t half of
/// the profile (a limsup proxy); for the other laws it is the max over the
/// whole profile. Grid maxima are lower bounds, hence the margin before any
/// positive conclusion.
LawVerdict classify(const NormProfile& profile, LawId law, double margin = 1e-3);

/// The family diag(cos t, cos 2t, ..., cos nt) with generator
/// diag(-1, -4, ..., -n^2).
CosineFamily diag_cosine_example(int n);

/// Block-diagonal extension: block n evaluates to C(n t), n = 1..blocks. Kept
/// lazy per block; the full matrix is only materialized on request at small
/// scale. The n-th block of the generator is n^2 A.
class ExtensionFamily {
  public:
    ExtensionFamily(CosineFamily base, int n_blocks);

    const CosineFamily& base() const { return base_; }
    int blocks() const { return n_blocks_; }
    Eigen::Index dim() const;

    ComplexMatrix block_at(int block, double t) const;
    ComplexMatrix block_generator(int block) const;
    ComplexMatrix block_generator_recover(int block, double h) const;

    /// max_{1<=n<=blocks} ||C(n t) - I||, the block-diagonal operator norm of
    /// C_ext(t) - I without materializing it.
    double dist_to_identity(double t) const;

    /// Full block-diagonal C_ext(t), for cross-checks at small scale.
    ComplexMatrix materialize(double t) const;

  private:
    CosineFamily base_;
    int n_blocks_;
};

/// Grid sup of |cos(3 a t) - cos(a t)| over one period [0, 2 pi / |a|].
double scalar_distance_sup(double a, int grid_points);

/// 8 / (3 sqrt(3)), the exact value of the sup above.
double scalar_distance_closed_form();

}  // namespace coslab
