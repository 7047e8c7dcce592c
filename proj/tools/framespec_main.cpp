#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "framespec/frames.hpp"
#include "framespec/hamiltonian.hpp"
#include "framespec/models.hpp"
#include "framespec/reproduce.hpp"
#include "framespec/secular.hpp"
#include "framespec/serialization.hpp"

namespace {

using framespec::json;

constexpr int kExitInput = 1;   // unreadable file, malformed JSON, bad arguments
constexpr int kExitDomain = 2;  // valid input rejected by the mathematics
constexpr int kExitRepro = 3;   // a reproduction check failed

void emit(const json& j, bool compact) {
    if (compact)
        std::cout << j.dump() << "\n";
    else
        std::cout << j.dump(2) << "\n";
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw framespec::ParseError("cannot read file: " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw framespec::ParseError(path + ": " + e.what());
    }
}

// Negative tol means "module default".
struct Options {
    double tol = -1.0;
    bool compact = false;
};

framespec::FrameHamiltonian load_hamiltonian(const std::string& path, const Options& opt) {
    const auto [frame, coeffs] = framespec::hamiltonian_from_json(load_json(path));
    return opt.tol < 0.0 ? framespec::build(frame, coeffs)
                         : framespec::build(frame, coeffs, opt.tol);
}

void cmd_frame_check(const std::string& path, const Options& opt) {
    const framespec::Frame f = framespec::frame_from_json(load_json(path));
    const framespec::FrameReport r =
        opt.tol < 0.0 ? framespec::frame_report(f) : framespec::frame_report(f, opt.tol);
    emit(framespec::report_to_json(r), opt.compact);
}

void cmd_frame_dilate(const std::string& path, const Options& opt) {
    const framespec::Frame f = framespec::frame_from_json(load_json(path));
    const framespec::NaimarkDilation d =
        opt.tol < 0.0 ? framespec::naimark_dilate(f) : framespec::naimark_dilate(f, opt.tol);
    emit(framespec::report_to_json(d), opt.compact);
}

void cmd_ham_spectrum(const std::string& path, const Options& opt) {
    const framespec::FrameHamiltonian fh = load_hamiltonian(path, opt);
    const framespec::EigenDecomposition& eig = fh.eigensystem();
    framespec::CMatrix recon(fh.matrix().rows(), fh.matrix().cols());
    for (std::size_t k = 0; k < eig.values.size(); ++k)
        recon.add_outer(eig.values[k], eig.vectors[k], eig.vectors[k]);
    json out;
    out["values"] = eig.values;
    out["reconstruction_residual"] = (recon - fh.matrix()).max_norm();
    emit(out, opt.compact);
}

void cmd_ham_connect(const std::string& path, const Options& opt) {
    const framespec::FrameHamiltonian fh = load_hamiltonian(path, opt);
    emit(framespec::report_to_json(framespec::e_connect(fh)), opt.compact);
}

void cmd_ham_certify(const std::string& path, double mu, const Options& opt) {
    const framespec::FrameHamiltonian fh = load_hamiltonian(path, opt);
    const framespec::EigenCertificate cert =
        opt.tol < 0.0 ? framespec::certify_eigenvalue(fh, mu)
                      : framespec::certify_eigenvalue(fh, mu, opt.tol);
    emit(framespec::report_to_json(cert), opt.compact);
}

void cmd_secular_mercedes(const std::vector<double>& e, const Options& opt) {
    emit(framespec::report_to_json(framespec::mercedes_roots(e[0], e[1], e[2])), opt.compact);
}

void cmd_secular_casazza(const std::vector<double>& e, const Options& opt) {
    emit(framespec::report_to_json(framespec::casazza_roots(e)), opt.compact);
}

void cmd_secular_pair(double e3, double e4, double beta, const Options& opt) {
    const double root = framespec::projected_pair_root(e3, e4, beta);
    const double c = std::cos(beta), s = std::sin(beta);
    json out;
    out["root"] = root;
    out["residual"] = std::abs((e3 - root) * c * c + (e4 - root) * s * s);
    emit(out, opt.compact);
}

void print_table(const framespec::ReproductionReport& r) {
    std::printf("example %d: %s\n", r.example_id, r.all_pass() ? "pass" : "FAIL");
    for (const framespec::ReproductionCheck& c : r.checks)
        std::printf("  [%s] %-64s %-11s deviation %.3e  tolerance %.3e\n",
                    c.pass ? "pass" : "FAIL", c.name.c_str(), c.provenance.c_str(),
                    c.deviation, c.tolerance);
}

int cmd_reproduce(const std::string& which, bool as_json, bool compact) {
    std::vector<framespec::ReproductionReport> reports;
    if (which == "all") {
        reports = framespec::reproduce_all();
    } else {
        int id = 0;
        try {
            id = std::stoi(which);
        } catch (const std::exception&) {
            throw framespec::ParseError("reproduce: expected an example id 1..5 or 'all'");
        }
        reports.push_back(framespec::reproduce_example(id));
    }

    bool ok = true;
    for (const auto& r : reports) ok = ok && r.all_pass();

    if (as_json) {
        if (reports.size() == 1) {
            emit(framespec::report_to_json(reports[0]), compact);
        } else {
            json out = json::array();
            for (const auto& r : reports) out.push_back(framespec::report_to_json(r));
            emit(out, compact);
        }
    } else {
        for (const auto& r : reports) print_table(r);
        std::printf("%s\n", ok ? "all checks passed" : "some checks FAILED");
    }
    return ok ? 0 : kExitRepro;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Parseval frame and frame-Hamiltonian toolkit"};
    app.require_subcommand(1);

    Options opt;
    bool as_json = false;
    app.add_option("--tol", opt.tol,
                   "override the default tolerance of the wrapped operation")
        ->envname("FRAMESPEC_TOL");
    app.add_flag("--json", as_json, "compact single-line JSON output");

    std::string path;
    double mu = 0.0;
    std::vector<double> evals;
    double e3 = 0.0, e4 = 0.0, beta = 0.0;
    std::string which;

    CLI::App* frame = app.add_subcommand("frame", "frame diagnostics and dilation");
    frame->require_subcommand(1);
    frame->fallthrough();
    CLI::App* frame_check = frame->add_subcommand("check", "spectral frame bounds and Parseval verdict");
    frame_check->add_option("path", path, "frame JSON file")->required();
    frame_check->fallthrough();
    CLI::App* frame_dilate = frame->add_subcommand("dilate", "dilate a Parseval frame to an orthonormal basis");
    frame_dilate->add_option("path", path, "frame JSON file")->required();
    frame_dilate->fallthrough();

    CLI::App* ham = app.add_subcommand("ham", "operator sums over Parseval frames");
    ham->require_subcommand(1);
    ham->fallthrough();
    CLI::App* ham_spectrum = ham->add_subcommand("spectrum", "eigenvalues of the operator sum");
    ham_spectrum->add_option("path", path, "Hamiltonian JSON file")->required();
    ham_spectrum->fallthrough();
    CLI::App* ham_connect = ham->add_subcommand("connect", "collapse onto an orthonormal eigenbasis");
    ham_connect->add_option("path", path, "Hamiltonian JSON file")->required();
    ham_connect->fallthrough();
    CLI::App* ham_certify = ham->add_subcommand("certify", "test a candidate eigenvalue");
    ham_certify->add_option("path", path, "Hamiltonian JSON file")->required();
    ham_certify->add_option("--mu", mu, "candidate eigenvalue")->required();
    ham_certify->fallthrough();

    CLI::App* secular = app.add_subcommand("secular", "scalar secular equations");
    secular->require_subcommand(1);
    secular->fallthrough();
    CLI::App* sec_mercedes = secular->add_subcommand("mercedes", "both roots for three coefficients");
    sec_mercedes->add_option("coeffs", evals, "three coefficients")->required()->expected(3);
    sec_mercedes->fallthrough();
    CLI::App* sec_casazza = secular->add_subcommand("casazza", "gap roots of the reciprocal-sum equation");
    sec_casazza->add_option("coeffs", evals, "strictly increasing coefficients")
        ->required()
        ->expected(2, -1);
    sec_casazza->fallthrough();
    CLI::App* sec_pair = secular->add_subcommand("pair", "root of the projected two-level equation");
    sec_pair->add_option("e3", e3, "first coefficient")->required();
    sec_pair->add_option("e4", e4, "second coefficient")->required();
    sec_pair->add_option("beta", beta, "mixing angle in (0, pi/2)")->required();
    sec_pair->fallthrough();

    CLI::App* repro = app.add_subcommand("reproduce", "re-derive the worked examples and verify every published value");
    repro->add_option("which", which, "example id 1..5 or 'all'")->required();
    repro->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // help exits 0; any argument problem maps to the input-error code
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }
    opt.compact = as_json;

    try {
        if (frame_check->parsed()) {
            cmd_frame_check(path, opt);
        } else if (frame_dilate->parsed()) {
            cmd_frame_dilate(path, opt);
        } else if (ham_spectrum->parsed()) {
            cmd_ham_spectrum(path, opt);
        } else if (ham_connect->parsed()) {
            cmd_ham_connect(path, opt);
        } else if (ham_certify->parsed()) {
            cmd_ham_certify(path, mu, opt);
        } else if (sec_mercedes->parsed()) {
            cmd_secular_mercedes(evals, opt);
        } else if (sec_casazza->parsed()) {
            cmd_secular_casazza(evals, opt);
        } else if (sec_pair->parsed()) {
            cmd_secular_pair(e3, e4, beta, opt);
        } else if (repro->parsed()) {
            return cmd_reproduce(which, as_json, opt.compact);
        }
    } catch (const framespec::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const framespec::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return 0;
}
