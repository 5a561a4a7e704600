#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "weil/geometry.hpp"

#include <nlohmann/json_fwd.hpp>

namespace weil {

/// Whether a sampling check evaluates its samples serially or with the
/// OpenMP kernel. Both produce identical reports for a given seed; the
/// serial path is the reference implementation.
enum class ExecPolicy { Serial, Parallel };

/// Axis-aligned sampling box for base points, one interval per chart
/// variable.
struct SampleRegion {
    std::vector<std::pair<double, double>> box;

    int dim() const { return static_cast<int>(box.size()); }
};

class Rng;

/// One random near point: base uniform in the region, nilpotent
/// coefficients uniform in [-1,1], drawn coordinate-major in basis order.
NearPoint sample_near_point(const PresPtr& algebra, const SampleRegion& region, Rng& rng);

/// Per-point outcome of the parallelism check.
struct FrameSample {
    std::vector<double> base;
    double aug_det = 0.0;
    FrameVerdict verdict = FrameVerdict::Indeterminate;
    std::string error;  // nonempty when evaluation failed at this point
};

/// Report of the frame (parallelism) check: the frame trivializes T M^A
/// over the sampled near points iff every sample passes.
struct FrameReport {
    FrameVerdict verdict = FrameVerdict::Indeterminate;
    std::vector<FrameSample> samples;
    int pass_count = 0;
    int fail_count = 0;
    int indeterminate_count = 0;
    int error_count = 0;
    std::uint64_t seed = 0;
    PresPtr algebra;

    nlohmann::json to_json() const;
};

/// Draw `count` near points (base uniform in the region, nilpotent
/// coefficients uniform in [-1,1]) and run the pointwise frame test at
/// each, plus any explicit points prepended to the sample list.
/// Sample generation is sequential from the seed; evaluation order never
/// affects the report.
FrameReport parallelism_check(const std::vector<VectorField>& fields, const PresPtr& algebra,
                              const SampleRegion& region, int count, std::uint64_t seed,
                              const std::vector<NearPoint>& explicit_points = {},
                              ExecPolicy policy = ExecPolicy::Parallel);

/// Report of the chart-level check of Weil's theorem (M^A)^B = M^{A(x)B}:
/// the canonical linear map A^B -> A(x)B must be bijective and
/// multiplicative on random pairs.
struct WeilIsoReport {
    bool bijective = false;
    int product_dim = 0;  // dim(A) * dim(B)
    int tensor_dim = 0;   // dim(A(x)B)
    int samples = 0;
    std::uint64_t seed = 0;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    PresPtr algebra_a, algebra_b;

    nlohmann::json to_json() const;
};

WeilIsoReport weil_iso_check(const PresPtr& a, const PresPtr& b, int samples, std::uint64_t seed,
                             ExecPolicy policy = ExecPolicy::Parallel);

}  // namespace weil
