#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "weil/catalog.hpp"
#include "weil/checks.hpp"
#include "weil/rng.hpp"

#include "oracles.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace weil;
using namespace weil::testing;

namespace {

std::vector<VectorField> coordinate_frame(int n) {
    std::vector<VectorField> fields;
    for (int j = 0; j < n; ++j) {
        std::vector<std::string> comps(static_cast<std::size_t>(n), "0");
        comps[static_cast<std::size_t>(j)] = "1";
        fields.push_back(parse_field(comps));
    }
    return fields;
}

SampleRegion box(int n, double lo, double hi) {
    SampleRegion r;
    r.box.assign(static_cast<std::size_t>(n), {lo, hi});
    return r;
}

}  // namespace

TEST_CASE("the canonical map A^B -> A(x)B is bijective and multiplicative") {
    auto cat = fixture_catalog();
    for (const auto& [na, a] : cat)
        for (const auto& [nb, b] : cat) {
            CAPTURE(na);
            CAPTURE(nb);
            WeilIsoReport r = weil_iso_check(a, b, 200, 0);
            CHECK(r.bijective);
            CHECK(r.product_dim == r.tensor_dim);
            CHECK(r.max_residual <= 1e-10);
            CHECK(r.pass);
        }
}

TEST_CASE("tensoring with the trivial algebra is the identity") {
    for (const auto& [name, p] : fixture_catalog()) {
        CAPTURE(name);
        WeilIsoReport r = weil_iso_check(p, make_reals(), 50, 1);
        CHECK(r.pass);
        CHECK(r.tensor_dim == p->dim());
    }
}

TEST_CASE("coordinate frames certify parallelism over every catalog algebra") {
    for (const auto& [name, p] : fixture_catalog()) {
        CAPTURE(name);
        FrameReport r = parallelism_check(coordinate_frame(3), p, box(3, -2.0, 2.0), 100, 7);
        CHECK(r.verdict == FrameVerdict::Pass);
        CHECK(r.pass_count == 100);
        CHECK(r.fail_count == 0);
        for (const FrameSample& s : r.samples) CHECK(s.aug_det == 1.0);
    }
}

TEST_CASE("rotation frames pass with unit determinant") {
    std::vector<VectorField> rotation = {
        parse_field({"cos(x1)", "sin(x1)"}),
        parse_field({"-sin(x1)", "cos(x1)"}),
    };
    PresPtr dxd = tensor(make_truncated(1, 1), make_truncated(1, 1));
    FrameReport r = parallelism_check(rotation, dxd, box(2, -3.0, 3.0), 100, 11);
    CHECK(r.verdict == FrameVerdict::Pass);
    for (const FrameSample& s : r.samples) CHECK(std::fabs(s.aug_det - 1.0) <= 1e-12);
}

TEST_CASE("a degenerate frame fails exactly at its planted point") {
    std::vector<VectorField> fields = {parse_field({"x1", "0"}), parse_field({"0", "1"})};
    PresPtr dual = make_truncated(1, 1);

    // sampled away from x1 = 0 the frame is a basis
    FrameReport clear = parallelism_check(fields, dual, SampleRegion{{{0.1, 1.0}, {-1.0, 1.0}}}, 50, 3);
    CHECK(clear.verdict == FrameVerdict::Pass);
    FrameReport negative = parallelism_check(fields, dual, SampleRegion{{{-1.0, -0.1}, {-1.0, 1.0}}}, 50, 3);
    CHECK(negative.verdict == FrameVerdict::Pass);

    // the planted point x1 = 0 (with nonzero nilpotent part) fails
    NearPoint planted{dual, {WeilElement(dual, {0.0, 0.7}), WeilElement(dual, {0.5, -0.3})}};
    FrameReport withPoint =
        parallelism_check(fields, dual, SampleRegion{{{0.1, 1.0}, {-1.0, 1.0}}}, 50, 3, {planted});
    CHECK(withPoint.verdict == FrameVerdict::Fail);
    CHECK(withPoint.fail_count == 1);
    CHECK(withPoint.samples[0].aug_det == 0.0);
    CHECK(withPoint.samples[0].verdict == FrameVerdict::Fail);
}

TEST_CASE("frame verdicts are invariant under rescaling nilpotent parts") {
    Rng rng(101);
    PresPtr t22 = make_truncated(2, 2);
    std::vector<VectorField> frame = {
        parse_field({"x1", "sin(x2)"}),
        parse_field({"cos(x1)", "1"}),
    };
    for (int trial = 0; trial < 100; ++trial) {
        NearPoint xi = random_near_point(rng, t22, 2, -2.0, 2.0);
        bool verdict = frame_is_basis(frame, xi);
        double lambda = rng.uniform(-10.0, 10.0);
        NearPoint scaled{t22, {}};
        for (const WeilElement& c : xi.coords)
            scaled.coords.push_back(WeilElement::constant(t22, c.augmentation()) + c.nilpotent_part().scale(lambda));
        CHECK(frame_is_basis(frame, scaled) == verdict);
    }
}

TEST_CASE("borderline determinants are reported indeterminate, not passed") {
    // |det| = 1e-11 with entry scale 1 falls between the noise floor and
    // the pass threshold
    std::vector<VectorField> fields = {parse_field({"x1", "0"}), parse_field({"0", "1"})};
    PresPtr dual = make_truncated(1, 1);
    NearPoint borderline{dual, {WeilElement(dual, {1e-11, 0.4}), WeilElement(dual, {0.0, 1.0})}};
    FrameTest t = frame_test(fields, borderline);
    CHECK(t.verdict == FrameVerdict::Indeterminate);
    CHECK_FALSE(frame_is_basis(fields, borderline));

    FrameReport r = parallelism_check(fields, dual, SampleRegion{{{0.2, 1.0}, {-1.0, 1.0}}}, 10, 5, {borderline});
    CHECK(r.verdict == FrameVerdict::Indeterminate);
    CHECK(r.indeterminate_count == 1);
    CHECK(r.fail_count == 0);
}

TEST_CASE("evaluation failures are recorded per point") {
    std::vector<VectorField> fields = {parse_field({"1/x1"})};
    PresPtr dual = make_truncated(1, 1);
    NearPoint bad{dual, {WeilElement(dual, {0.0, 1.0})}};
    FrameReport r = parallelism_check(fields, dual, SampleRegion{{{0.5, 1.0}}}, 5, 9, {bad});
    CHECK(r.verdict == FrameVerdict::Fail);
    CHECK(r.error_count == 1);
    CHECK(r.samples[0].error == "lift undefined: denominator not invertible at base point");
    CHECK(r.pass_count == 5);
}

TEST_CASE("sampling rejects mismatched dimensions") {
    PresPtr dual = make_truncated(1, 1);
    CHECK_THROWS_AS(parallelism_check(coordinate_frame(2), dual, box(3, -1.0, 1.0), 5, 0), std::invalid_argument);
    CHECK_THROWS_AS(parallelism_check({}, dual, box(0, -1.0, 1.0), 5, 0), std::invalid_argument);
    NearPoint wrong{dual, {WeilElement(dual, {0.0, 1.0})}};
    CHECK_THROWS_AS(parallelism_check(coordinate_frame(2), dual, box(2, -1.0, 1.0), 5, 0, {wrong}),
                    std::invalid_argument);
}

TEST_CASE("reports are deterministic and independent of the execution policy") {
#ifdef _OPENMP
    omp_set_num_threads(4);
#endif
    PresPtr dxd = tensor(make_truncated(1, 1), make_truncated(1, 1));
    std::vector<VectorField> frame = {
        parse_field({"exp(x1)", "x2"}),
        parse_field({"-x2", "1"}),
    };
    FrameReport parallel1 = parallelism_check(frame, dxd, box(2, -1.5, 1.5), 200, 42, {}, ExecPolicy::Parallel);
    FrameReport parallel2 = parallelism_check(frame, dxd, box(2, -1.5, 1.5), 200, 42, {}, ExecPolicy::Parallel);
    FrameReport serial = parallelism_check(frame, dxd, box(2, -1.5, 1.5), 200, 42, {}, ExecPolicy::Serial);
    std::string d1 = parallel1.to_json().dump();
    CHECK(d1 == parallel2.to_json().dump());
    CHECK(d1 == serial.to_json().dump());

    FrameReport other_seed = parallelism_check(frame, dxd, box(2, -1.5, 1.5), 200, 43, {}, ExecPolicy::Parallel);
    CHECK(d1 != other_seed.to_json().dump());

    WeilIsoReport w1 = weil_iso_check(dxd, make_truncated(1, 2), 300, 5, ExecPolicy::Parallel);
    WeilIsoReport w2 = weil_iso_check(dxd, make_truncated(1, 2), 300, 5, ExecPolicy::Serial);
    CHECK(w1.to_json().dump() == w2.to_json().dump());
}

TEST_CASE("near-point sampling is reproducible from the seed") {
    PresPtr t22 = make_truncated(2, 2);
    SampleRegion region = box(2, -1.0, 1.0);
    Rng a(123), b(123);
    NearPoint p = sample_near_point(t22, region, a);
    NearPoint q = sample_near_point(t22, region, b);
    for (int i = 0; i < 2; ++i) CHECK(p.coords[static_cast<std::size_t>(i)] == q.coords[static_cast<std::size_t>(i)]);
}
