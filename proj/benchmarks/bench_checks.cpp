// Timing comparison between the serial reference evaluators and the
// OpenMP kernels behind frame-check and weil-check. Both lanes must
// produce byte-identical reports; the benchmark asserts that too.
//
// Usage: bench_checks [frame_samples] [weil_samples]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <nlohmann/json.hpp>

#include "weil/catalog.hpp"
#include "weil/checks.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace weil;

namespace {

double seconds(std::chrono::steady_clock::time_point a, std::chrono::steady_clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

template <typename F>
double time_best_of(int reps, F&& f) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        auto t0 = std::chrono::steady_clock::now();
        f();
        auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, seconds(t0, t1));
    }
    return best;
}

}  // namespace

int main(int argc, char** argv) {
    const int frame_samples = argc > 1 ? std::atoi(argv[1]) : 20000;
    const int weil_samples = argc > 2 ? std::atoi(argv[2]) : 20000;

#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not available; both lanes run serially\n");
#endif

    // frame check on R^3 over a 12-dimensional algebra, transcendental frame
    PresPtr algebra = tensor(parse_algebra_spec("trunc:2,2"), parse_algebra_spec("dual"));
    std::vector<VectorField> frame = {
        parse_field({"cos(x1)", "sin(x1)", "0"}),
        parse_field({"-sin(x1)", "cos(x1)", "x3"}),
        parse_field({"exp(x2)", "0", "1"}),
    };
    SampleRegion region{{{-1.0, 1.0}, {-1.0, 1.0}, {-1.0, 1.0}}};

    std::string serial_report, parallel_report;
    double t_serial = time_best_of(3, [&] {
        serial_report =
            parallelism_check(frame, algebra, region, frame_samples, 1, {}, ExecPolicy::Serial).to_json().dump();
    });
    double t_parallel = time_best_of(3, [&] {
        parallel_report =
            parallelism_check(frame, algebra, region, frame_samples, 1, {}, ExecPolicy::Parallel).to_json().dump();
    });
    std::printf("frame-check  %6d samples  serial %8.3fs  parallel %8.3fs  speedup %.2fx  reports %s\n",
                frame_samples, t_serial, t_parallel, t_serial / t_parallel,
                serial_report == parallel_report ? "identical" : "DIFFER");
    if (serial_report != parallel_report) return 1;

    // multiplicativity sampling for the tensor isomorphism check
    PresPtr a = parse_algebra_spec("trunc:2,2");
    PresPtr b = parse_algebra_spec("tensor:dual,dual");
    std::string ws, wp;
    double w_serial = time_best_of(3, [&] { ws = weil_iso_check(a, b, weil_samples, 1, ExecPolicy::Serial).to_json().dump(); });
    double w_parallel =
        time_best_of(3, [&] { wp = weil_iso_check(a, b, weil_samples, 1, ExecPolicy::Parallel).to_json().dump(); });
    std::printf("weil-check   %6d samples  serial %8.3fs  parallel %8.3fs  speedup %.2fx  reports %s\n",
                weil_samples, w_serial, w_parallel, w_serial / w_parallel, ws == wp ? "identical" : "DIFFER");
    return ws == wp ? 0 : 1;
}
