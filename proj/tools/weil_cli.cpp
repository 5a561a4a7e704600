// Command-line front end for Weil-algebra arithmetic and near-point
// calculus: algebra construction, lifting of smooth expressions, Taylor
// (jet) output, and the frame / tensor-isomorphism verification suites.
//
// Exit codes: 0 pass, 1 fail (or runtime domain error), 2 indeterminate,
// 64 usage or spec error. Every error path prints a single line starting
// with "error:" on stderr.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "weil/catalog.hpp"
#include "weil/checks.hpp"
#include "weil/expr.hpp"
#include "weil/geometry.hpp"
#include "weil/json_io.hpp"
#include "weil/text_input.hpp"

namespace {

using namespace weil;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitIndeterminate = 2;
constexpr int kExitUsage = 64;

void emit(const std::string& body, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
    out << body;
}

/// Human-friendly number: strip the trailing ".0" nlohmann gives integral
/// doubles, keep the shortest round-trip form otherwise.
std::string fmt_number(double v) {
    std::string s = nlohmann::json(v).dump();
    if (s.size() > 2 && s.ends_with(".0")) s.resize(s.size() - 2);
    return s;
}

std::string coeff_listing(const WeilElement& a) {
    std::string out = "{";
    const PresPtr& p = a.presentation();
    for (int i = 0; i < p->dim(); ++i) {
        if (i) out += ", ";
        out += p->basis_name(i) + ": " + fmt_number(a.coeff(i));
    }
    return out + "}";
}

std::string describe_algebra(const PresPtr& p) {
    std::string out = "dim " + std::to_string(p->dim()) + ", height " + std::to_string(p->height()) +
                      ", vars " + std::to_string(p->num_vars()) + ", trunc " + std::to_string(p->trunc_order()) + "\n";
    out += "basis: [";
    for (int i = 0; i < p->dim(); ++i) {
        if (i) out += ", ";
        out += p->basis_name(i);
    }
    out += "]\n";
    if (!p->extra_gens().empty()) {
        out += "extra generators: [";
        for (std::size_t i = 0; i < p->extra_gens().size(); ++i) {
            if (i) out += ", ";
            out += monomial_name(p->extra_gens()[i]);
        }
        out += "]\n";
    }
    return out;
}

std::vector<VectorField> parse_frame(const std::string& fields_arg) {
    std::vector<std::vector<std::string>> rows;
    std::size_t start = 0;
    while (start <= fields_arg.size()) {
        std::size_t split = fields_arg.find(';', start);
        std::string field = fields_arg.substr(start, split == std::string::npos ? std::string::npos : split - start);
        std::vector<std::string> comps;
        std::size_t cstart = 0;
        while (cstart <= field.size()) {
            std::size_t csplit = field.find(',', cstart);
            comps.push_back(field.substr(cstart, csplit == std::string::npos ? std::string::npos : csplit - cstart));
            if (csplit == std::string::npos) break;
            cstart = csplit + 1;
        }
        rows.push_back(std::move(comps));
        if (split == std::string::npos) break;
        start = split + 1;
    }
    std::vector<VectorField> frame;
    for (const auto& comps : rows) {
        if (comps.size() != rows[0].size())
            throw std::invalid_argument("all fields must have the same number of components");
        frame.push_back(parse_field(comps));
    }
    if (frame.empty() || frame.size() != rows[0].size())
        throw std::invalid_argument("need n fields with n components each (got " + std::to_string(frame.size()) +
                                    " fields of " + std::to_string(rows.empty() ? 0 : rows[0].size()) +
                                    " components)");
    return frame;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Weil-algebra arithmetic and near-point calculus.\n"
        "Algebras are finite-dimensional local algebras presented by monomial\n"
        "relations: R[X1..Xs]/((X1..Xs)^{k+1} + extra monomial generators).\n"
        "Ideals needing non-monomial generators are out of scope."};
    app.require_subcommand(1);
    app.fallthrough();  // accept the global --json/--out after a subcommand

    std::string out_path;
    bool as_json = false;
    app.add_option("--out", out_path, "write the result to a file instead of stdout");
    app.add_flag("--json", as_json, "emit JSON instead of the human-readable form");

    // algebra <spec>
    auto* cmd_algebra = app.add_subcommand("algebra", "print basis, dimension and height of an algebra");
    std::string algebra_spec;
    cmd_algebra->add_option("spec", algebra_spec, "preset (reals, dual, trunc:s,k, tensor:<a>,<b>) or inline JSON")
        ->required();

    // tensor <a> <b>
    auto* cmd_tensor = app.add_subcommand("tensor", "tensor product of two algebras");
    std::string tensor_a, tensor_b;
    cmd_tensor->add_option("a", tensor_a, "left factor")->required();
    cmd_tensor->add_option("b", tensor_b, "right factor")->required();

    // mul <spec> <a> <b>
    auto* cmd_mul = app.add_subcommand("mul", "multiply two elements");
    std::string mul_spec, mul_lhs, mul_rhs;
    cmd_mul->add_option("algebra", mul_spec, "algebra spec")->required();
    cmd_mul->add_option("a", mul_lhs, "left element, e.g. \"1+2T\"")->required();
    cmd_mul->add_option("b", mul_rhs, "right element")->required();

    // lift <spec> <expr> --point ...
    auto* cmd_lift = app.add_subcommand("lift", "evaluate an expression at a near point");
    std::string lift_spec, lift_expr, lift_point;
    bool lift_ast = false;
    cmd_lift->add_option("algebra", lift_spec, "algebra spec")->required();
    cmd_lift->add_option("expr", lift_expr, "smooth expression in x1..xn")->required();
    cmd_lift->add_option("--point", lift_point, "near point, e.g. \"x1=3+1T\"")->required();
    cmd_lift->add_flag("--ast", lift_ast, "print the parsed expression AST as JSON and exit");

    // taylor <expr> --x0 --order
    auto* cmd_taylor = app.add_subcommand("taylor", "Taylor (jet) coefficients of a single-variable expression");
    std::string taylor_expr;
    double taylor_x0 = 0.0;
    int taylor_order = 5;
    cmd_taylor->add_option("expr", taylor_expr, "expression in x1")->required();
    cmd_taylor->add_option("--x0", taylor_x0, "expansion point (default 0)");
    cmd_taylor->add_option("--order", taylor_order, "truncation order (default 5)");

    // frame-check <spec> --fields ... [--region --samples --seed --point --serial]
    auto* cmd_frame = app.add_subcommand("frame-check", "test whether n fields frame the near-point manifold");
    std::string frame_spec, frame_fields, frame_region;
    std::vector<std::string> frame_points;
    int frame_samples = 100;
    std::uint64_t frame_seed = 0;
    bool frame_serial = false;
    cmd_frame->add_option("algebra", frame_spec, "algebra spec")->required();
    cmd_frame->add_option("--fields", frame_fields, "fields separated by ';', components by ','")->required();
    cmd_frame->add_option("--region", frame_region, "sampling box \"x1:[a,b],x2:[c,d]\" (default [-1,1]^n)");
    cmd_frame->add_option("--samples", frame_samples, "number of sampled near points (default 100)");
    cmd_frame->add_option("--seed", frame_seed, "sampling seed (default 0)");
    cmd_frame->add_option("--point", frame_points, "explicit near point(s) to include");
    cmd_frame->add_flag("--serial", frame_serial, "use the serial reference evaluator");

    // weil-check <a> <b> [--samples --seed --serial]
    auto* cmd_weil = app.add_subcommand("weil-check", "check the canonical map A^B -> A(x)B");
    std::string weil_a, weil_b;
    int weil_samples = 200;
    std::uint64_t weil_seed = 0;
    bool weil_serial = false;
    cmd_weil->add_option("a", weil_a, "algebra A")->required();
    cmd_weil->add_option("b", weil_b, "algebra B")->required();
    cmd_weil->add_option("--samples", weil_samples, "random pairs to test (default 200)");
    cmd_weil->add_option("--seed", weil_seed, "sampling seed (default 0)");
    cmd_weil->add_flag("--serial", weil_serial, "use the serial reference evaluator");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (*cmd_algebra || *cmd_tensor) {
            PresPtr p = *cmd_algebra ? parse_algebra_spec(algebra_spec)
                                     : tensor(parse_algebra_spec(tensor_a), parse_algebra_spec(tensor_b));
            emit(as_json ? presentation_to_json(*p).dump(2) + "\n" : describe_algebra(p), out_path);
            return kExitPass;
        }

        if (*cmd_mul) {
            PresPtr p = parse_algebra_spec(mul_spec);
            WeilElement product = parse_element_text(p, mul_lhs) * parse_element_text(p, mul_rhs);
            emit(as_json ? element_to_json(product, mul_spec).dump(2) + "\n" : coeff_listing(product) + "\n",
                 out_path);
            return kExitPass;
        }

        if (*cmd_lift) {
            PresPtr p = parse_algebra_spec(lift_spec);
            // the point determines the chart dimension
            int n = 1;
            for (std::size_t at = lift_point.find('x'); at != std::string::npos; at = lift_point.find('x', at + 1)) {
                int idx = std::atoi(lift_point.c_str() + at + 1);
                if (idx > n) n = idx;
            }
            NearPoint xi = parse_near_point_text(p, n, lift_point);
            ExprPtr e = parse_expr(lift_expr, n);
            if (lift_ast) {
                emit(ast_json(e).dump(2) + "\n", out_path);
                return kExitPass;
            }
            WeilElement value = eval_weil(e, p, xi.coords);
            emit(as_json ? element_to_json(value, lift_spec).dump(2) + "\n" : coeff_listing(value) + "\n", out_path);
            return kExitPass;
        }

        if (*cmd_taylor) {
            ExprPtr e = parse_expr(taylor_expr, 1);
            if (taylor_order < 0) throw std::invalid_argument("order must be non-negative");
            std::vector<double> coeffs = taylor_coeffs(e, taylor_x0, taylor_order);
            if (as_json) {
                nlohmann::json j{{"x0", taylor_x0}, {"order", taylor_order}, {"coeffs", coeffs}};
                emit(j.dump(2) + "\n", out_path);
            } else {
                std::string line = "[";
                for (std::size_t i = 0; i < coeffs.size(); ++i) {
                    if (i) line += ", ";
                    line += fmt_number(coeffs[i]);
                }
                emit(line + "]\n", out_path);
            }
            return kExitPass;
        }

        if (*cmd_frame) {
            PresPtr p = parse_algebra_spec(frame_spec);
            std::vector<VectorField> fields = parse_frame(frame_fields);
            const int n = static_cast<int>(fields.size());
            SampleRegion region;
            if (frame_region.empty()) region.box.assign(static_cast<std::size_t>(n), {-1.0, 1.0});
            else region = parse_region_text(frame_region, n);
            std::vector<NearPoint> explicit_points;
            for (const std::string& text : frame_points)
                explicit_points.push_back(parse_near_point_text(p, n, text));
            FrameReport report = parallelism_check(fields, p, region, frame_samples, frame_seed, explicit_points,
                                                   frame_serial ? ExecPolicy::Serial : ExecPolicy::Parallel);
            emit(report.to_json().dump(2) + "\n", out_path);
            switch (report.verdict) {
                case FrameVerdict::Pass: return kExitPass;
                case FrameVerdict::Fail: return kExitFail;
                case FrameVerdict::Indeterminate: return kExitIndeterminate;
            }
        }

        if (*cmd_weil) {
            if (weil_samples < 0) throw std::invalid_argument("samples must be non-negative");
            WeilIsoReport report = weil_iso_check(parse_algebra_spec(weil_a), parse_algebra_spec(weil_b), weil_samples,
                                                  weil_seed, weil_serial ? ExecPolicy::Serial : ExecPolicy::Parallel);
            emit(report.to_json().dump(2) + "\n", out_path);
            return report.pass ? kExitPass : kExitFail;
        }
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
