#include "weil/checks.hpp"

#include <cmath>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "weil/json_io.hpp"
#include "weil/rng.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace weil {

NearPoint sample_near_point(const PresPtr& algebra, const SampleRegion& region, Rng& rng) {
    NearPoint xi{algebra, {}};
    xi.coords.reserve(region.box.size());
    for (const auto& [lo, hi] : region.box) {
        std::vector<double> coeffs(static_cast<std::size_t>(algebra->dim()), 0.0);
        coeffs[0] = rng.uniform(lo, hi);
        for (int i = 1; i < algebra->dim(); ++i) coeffs[static_cast<std::size_t>(i)] = rng.uniform(-1.0, 1.0);
        xi.coords.emplace_back(algebra, std::move(coeffs));
    }
    return xi;
}

namespace {

FrameSample run_frame_sample(const std::vector<VectorField>& fields, const NearPoint& xi) {
    FrameSample s;
    s.base = project(xi);
    try {
        FrameTest t = frame_test(fields, xi);
        s.aug_det = t.aug_det;
        s.verdict = t.verdict;
    } catch (const std::exception& e) {
        s.error = e.what();
        s.verdict = FrameVerdict::Fail;
    }
    return s;
}

}  // namespace

FrameReport parallelism_check(const std::vector<VectorField>& fields, const PresPtr& algebra,
                              const SampleRegion& region, int count, std::uint64_t seed,
                              const std::vector<NearPoint>& explicit_points, ExecPolicy policy) {
    const int n = region.dim();
    if (fields.empty() || static_cast<int>(fields.size()) != n)
        throw std::invalid_argument("need n fields on an n-dimensional chart");
    for (const VectorField& f : fields)
        if (f.chart_dim != n) throw std::invalid_argument("field dimension does not match region");
    for (const NearPoint& p : explicit_points) {
        if (p.dim() != n) throw std::invalid_argument("explicit point dimension does not match region");
        if (!same_presentation(p.algebra, algebra)) throw std::invalid_argument("presentation mismatch");
    }
    if (count < 0) throw std::invalid_argument("sample count must be non-negative");

    // Samples are drawn sequentially from the seed; only their evaluation
    // is parallel, into indexed slots, so reports do not depend on thread
    // count or schedule.
    std::vector<NearPoint> points = explicit_points;
    points.reserve(points.size() + static_cast<std::size_t>(count));
    Rng rng(seed);
    for (int i = 0; i < count; ++i) points.push_back(sample_near_point(algebra, region, rng));

    FrameReport report;
    report.seed = seed;
    report.algebra = algebra;
    report.samples.resize(points.size());

    const std::int64_t total = static_cast<std::int64_t>(points.size());
    if (policy == ExecPolicy::Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
        for (std::int64_t i = 0; i < total; ++i)
            report.samples[static_cast<std::size_t>(i)] = run_frame_sample(fields, points[static_cast<std::size_t>(i)]);
    } else {
        for (std::int64_t i = 0; i < total; ++i)
            report.samples[static_cast<std::size_t>(i)] = run_frame_sample(fields, points[static_cast<std::size_t>(i)]);
    }

    for (const FrameSample& s : report.samples) {
        if (!s.error.empty()) ++report.error_count;
        switch (s.verdict) {
            case FrameVerdict::Pass: ++report.pass_count; break;
            case FrameVerdict::Fail: ++report.fail_count; break;
            case FrameVerdict::Indeterminate: ++report.indeterminate_count; break;
        }
    }
    if (report.fail_count > 0) report.verdict = FrameVerdict::Fail;
    else if (report.indeterminate_count > 0) report.verdict = FrameVerdict::Indeterminate;
    else report.verdict = FrameVerdict::Pass;
    return report;
}

nlohmann::json FrameReport::to_json() const {
    nlohmann::json j;
    j["verdict"] = weil::to_string(verdict);
    j["seed"] = seed;
    j["algebra"] = presentation_to_json(*algebra);
    j["counts"] = {{"pass", pass_count},
                   {"fail", fail_count},
                   {"indeterminate", indeterminate_count},
                   {"error", error_count}};
    auto arr = nlohmann::json::array();
    for (const FrameSample& s : samples) {
        nlohmann::json e;
        e["base"] = s.base;
        if (s.error.empty()) e["aug_det"] = s.aug_det;
        else e["error"] = s.error;
        e["ok"] = s.verdict == FrameVerdict::Pass;
        if (s.verdict == FrameVerdict::Indeterminate) e["indeterminate"] = true;
        arr.push_back(std::move(e));
    }
    j["samples"] = std::move(arr);
    return j;
}

WeilIsoReport weil_iso_check(const PresPtr& a, const PresPtr& b, int samples, std::uint64_t seed,
                             ExecPolicy policy) {
    WeilIsoReport report;
    report.samples = samples;
    report.seed = seed;
    report.algebra_a = a;
    report.algebra_b = b;
    report.tolerance = 1e-10;

    PresPtr t = tensor(a, b);
    const int da = a->dim(), db = b->dim();
    report.product_dim = da * db;
    report.tensor_dim = t->dim();

    // The canonical map sends basis monomial mA with B-coefficient on mB to
    // the tensor basis monomial mA*mB. Bijectivity = the index map is a
    // bijection onto the tensor basis.
    std::vector<int> tensor_index(static_cast<std::size_t>(da * db), -1);
    std::vector<bool> hit(static_cast<std::size_t>(t->dim()), false);
    bool bijective = t->dim() == da * db;
    for (int i = 0; i < da && bijective; ++i)
        for (int j = 0; j < db && bijective; ++j) {
            Monomial m = Monomial::unit(t->num_vars());
            const Monomial& ma = a->basis()[static_cast<std::size_t>(i)];
            const Monomial& mb = b->basis()[static_cast<std::size_t>(j)];
            for (int v = 0; v < a->num_vars(); ++v) m.exponents[static_cast<std::size_t>(v)] = ma.exponents[static_cast<std::size_t>(v)];
            for (int v = 0; v < b->num_vars(); ++v)
                m.exponents[static_cast<std::size_t>(a->num_vars() + v)] = mb.exponents[static_cast<std::size_t>(v)];
            int k = t->basis_index(m);
            if (k < 0 || hit[static_cast<std::size_t>(k)]) bijective = false;
            else {
                hit[static_cast<std::size_t>(k)] = true;
                tensor_index[static_cast<std::size_t>(i * db + j)] = k;
            }
        }
    report.bijective = bijective;

    if (bijective && samples > 0) {
        // A^B elements: one B-coefficient vector per A basis monomial.
        using VecAB = std::vector<std::vector<double>>;
        auto draw = [&](Rng& rng) {
            VecAB u(static_cast<std::size_t>(da), std::vector<double>(static_cast<std::size_t>(db)));
            for (auto& row : u)
                for (double& c : row) c = rng.uniform(-1.0, 1.0);
            return u;
        };
        Rng rng(seed);
        std::vector<std::pair<VecAB, VecAB>> pairs;
        pairs.reserve(static_cast<std::size_t>(samples));
        for (int s = 0; s < samples; ++s) pairs.emplace_back(draw(rng), draw(rng));

        auto to_tensor = [&](const VecAB& u) {
            std::vector<double> coeffs(static_cast<std::size_t>(t->dim()), 0.0);
            for (int i = 0; i < da; ++i)
                for (int j = 0; j < db; ++j)
                    coeffs[static_cast<std::size_t>(tensor_index[static_cast<std::size_t>(i * db + j)])] =
                        u[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            return WeilElement(t, std::move(coeffs));
        };

        auto residual_of = [&](const std::pair<VecAB, VecAB>& pr) {
            const VecAB& u = pr.first;
            const VecAB& v = pr.second;
            // product in A^B: A's structure constants with coefficients
            // multiplied in B
            VecAB w(static_cast<std::size_t>(da), std::vector<double>(static_cast<std::size_t>(db), 0.0));
            for (int i = 0; i < da; ++i)
                for (int j = 0; j < da; ++j) {
                    int k = a->product_index(i, j);
                    if (k < 0) continue;
                    WeilElement bu(b, u[static_cast<std::size_t>(i)]);
                    WeilElement bv(b, v[static_cast<std::size_t>(j)]);
                    WeilElement prod = bu * bv;
                    for (int c = 0; c < db; ++c) w[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)] += prod.coeff(c);
                }
            WeilElement lhs = to_tensor(w);
            WeilElement rhs = to_tensor(u) * to_tensor(v);
            double r = 0.0;
            for (int c = 0; c < t->dim(); ++c) r = std::max(r, std::fabs(lhs.coeff(c) - rhs.coeff(c)));
            return r;
        };

        std::vector<double> residuals(static_cast<std::size_t>(samples), 0.0);
        if (policy == ExecPolicy::Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
            for (int s = 0; s < samples; ++s) residuals[static_cast<std::size_t>(s)] = residual_of(pairs[static_cast<std::size_t>(s)]);
        } else {
            for (int s = 0; s < samples; ++s) residuals[static_cast<std::size_t>(s)] = residual_of(pairs[static_cast<std::size_t>(s)]);
        }
        for (double r : residuals) report.max_residual = std::max(report.max_residual, r);
    }

    report.pass = report.bijective && report.max_residual <= report.tolerance;
    return report;
}

nlohmann::json WeilIsoReport::to_json() const {
    nlohmann::json j;
    j["verdict"] = pass ? "pass" : "fail";
    j["bijective"] = bijective;
    j["product_dim"] = product_dim;
    j["tensor_dim"] = tensor_dim;
    j["samples"] = samples;
    j["seed"] = seed;
    j["max_residual"] = max_residual;
    j["tolerance"] = tolerance;
    j["algebra_a"] = presentation_to_json(*algebra_a);
    j["algebra_b"] = presentation_to_json(*algebra_b);
    return j;
}

}  // namespace weil
