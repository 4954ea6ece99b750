// Command-line driver for the heckelab shared library. Every subcommand maps
// onto one C-API runner and prints its JSON run report (stdout or --out).
// Exit codes: 0 pass, 1 verification failure, 2 usage or input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "heckelab.h"

namespace {

using nlohmann::ordered_json;

struct OwnedString {
    char* s = nullptr;
    ~OwnedString() { hl_string_free(s); }
    std::string str() const { return s ? std::string(s) : std::string(); }
};

bool completed(hl_status st) { return st == HL_OK || st == HL_VERIFICATION_FAILED; }

bool write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) return false;
    f << content;
    return static_cast<bool>(f);
}

std::string read_file(const std::string& path, bool& ok) {
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        ok = false;
        return {};
    }
    std::ostringstream os;
    os << f.rdbuf();
    ok = true;
    return os.str();
}

int deliver(hl_status st, const std::string& report, const std::string& out_path,
            const std::vector<std::string>& artifacts = {}) {
    if (!completed(st)) {
        std::cerr << "error: " << hl_last_error() << "\n";
        return 2;
    }
    std::string text = report;
    if (!artifacts.empty()) {
        ordered_json j = ordered_json::parse(report);
        j["artifacts"] = artifacts;
        text = j.dump(2);
    }
    if (out_path.empty()) {
        std::cout << text << "\n";
    } else if (!write_file(out_path, text + "\n")) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return 2;
    }
    return st == HL_OK ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"heckelab: exact Hecke-algebra and L-function computations "
                 "for Siegel modular forms"};
    app.require_subcommand(1);
    app.set_version_flag("--version", hl_version());
    std::string out_path;
    auto add_out = [&out_path](CLI::App* sub) {
        sub->add_option("--out", out_path, "write the JSON report to a file instead of stdout");
    };

    auto* rankin = app.add_subcommand("rankin", "tensor generating-series pipeline");
    add_out(rankin);
    int genus = 2;
    bool reconstruct = false, check_feq = false;
    int order = 8;
    std::string newton_prefix;
    rankin->add_option("--genus", genus, "genus (1 or 2)")->required();
    rankin->add_flag("--reconstruct", reconstruct, "reconstruct R(X), S(X) over the Hecke algebra");
    rankin->add_flag("--check-feq", check_feq, "verify the functional equation of the s_i");
    rankin->add_option("--order", order, "series truncation order (default 8)");
    rankin->add_option("--newton-prefix", newton_prefix,
                       "write Newton polygons to PREFIX.{r,s}.{csv,svg}");

    auto* euler = app.add_subcommand("euler", "Euler factor constructors");
    add_out(euler);
    std::string etype;
    int egenus = 2;
    long eweight = 0;
    bool eisenstein = false;
    euler->add_option("--type", etype, "spinor | standard | triple")->required();
    euler->add_option("--genus", egenus, "genus (1..3)");
    euler->add_option("--weight", eweight, "weight k");
    euler->add_flag("--eisenstein", eisenstein,
                    "use Siegel-Eisenstein parameters and check the normalization");
    long espec = 0;
    euler->add_option("--specialize-p", espec, "substitute an integer for the symbolic prime");

    auto* hodge = app.add_subcommand("hodge", "Hodge types and the lift comparison");
    add_out(hodge);
    int hgenus = 2;
    long hweight = 0, htensor = -1;
    int hlift = 0;
    hodge->add_option("--genus", hgenus)->required();
    hodge->add_option("--weight", hweight)->required();
    hodge->add_option("--tensor", htensor, "tensor with the spin type of this weight");
    hodge->add_option("--check-lift", hlift, "run the genus-4m Kuenneth comparison for m");

    auto* gamma = app.add_subcommand("gamma", "gamma shifts, centers and critical values");
    add_out(gamma);
    std::string gkind;
    std::vector<long> gweights;
    bool gnumeric = false;
    gamma->add_option("--kind", gkind, "spin3 | spin4 | tensor-g2 | triple")->required();
    gamma->add_option("--weights", gweights, "1, 2 or 3 weights")->required()->delimiter(',');
    gamma->add_flag("--numeric", gnumeric, "run the numeric gamma checks");

    auto* lift = app.add_subcommand("lift", "Ikeda lift and Eisenstein evidence checks");
    add_out(lift);
    std::string lcheck;
    int ln = 1;
    long lweight = 0;
    lift->add_option("--check", lcheck, "ikeda-standard | ikeda-miyawaki | eisenstein | quadratic")
        ->required();
    lift->add_option("--n", ln, "lift index n (genus 2n), or m for eisenstein");
    lift->add_option("--weight", lweight, "weight k")->required();

    auto* family = app.add_subcommand("family", "Eisenstein family tables, slopes, congruences");
    add_out(family);
    long fp = 5;
    std::vector<long> fweights;
    long fbound = 20, fkummer = 0;
    std::string fcsv;
    family->add_option("--p", fp, "prime p")->required();
    family->add_option("--weights", fweights, "weights k1,k2,...")->required()->delimiter(',');
    family->add_option("--bound", fbound, "coefficient bound N");
    family->add_option("--kummer", fkummer, "check Kummer congruences mod p^m");
    family->add_option("--csv", fcsv, "write the family table CSV to a file");

    auto* dirichlet = app.add_subcommand("dirichlet", "Dirichlet coefficients from Euler factors");
    add_out(dirichlet);
    std::string dfactors;
    long dbound = 100;
    dirichlet->add_option("--factors", dfactors, "JSON file: {\"2\": poly-in-X, ...}")->required();
    dirichlet->add_option("--bound", dbound, "largest index H");

    auto* newton = app.add_subcommand("newton", "Newton polygon of points or coefficients");
    add_out(newton);
    std::string ninput, ncsv, nsvg;
    newton->add_option("--input", ninput, "JSON file with points or coefficients")->required();
    newton->add_option("--csv", ncsv, "write degree,valuation CSV here");
    newton->add_option("--svg", nsvg, "write the hull SVG here");

    CLI11_PARSE(app, argc, argv);

    if (rankin->parsed()) {
        OwnedString rep;
        bool need_reconstruction = reconstruct || !newton_prefix.empty();
        hl_status st = hl_run_rankin(genus, need_reconstruction ? 1 : 0, check_feq ? 1 : 0, order,
                                     &rep.s);
        std::vector<std::string> artifacts;
        if (!newton_prefix.empty() && completed(st)) {
            ordered_json j = ordered_json::parse(rep.str());
            for (auto [key, suffix] : {std::pair<const char*, const char*>{"R", ".r"},
                                       std::pair<const char*, const char*>{"S", ".s"}}) {
                const auto& np = j["details"]["newton"][key];
                std::string base = newton_prefix + suffix;
                if (write_file(base + ".csv", np["csv"].get<std::string>()))
                    artifacts.push_back(base + ".csv");
                if (write_file(base + ".svg", np["svg"].get<std::string>()))
                    artifacts.push_back(base + ".svg");
            }
        }
        return deliver(st, rep.str(), out_path, artifacts);
    }
    if (euler->parsed()) {
        OwnedString rep;
        hl_status st =
            hl_run_euler(etype.c_str(), egenus, eweight, eisenstein ? 1 : 0, espec, &rep.s);
        return deliver(st, rep.str(), out_path);
    }
    if (hodge->parsed()) {
        OwnedString rep;
        hl_status st = hl_run_hodge(hgenus, hweight, htensor, hlift, &rep.s);
        return deliver(st, rep.str(), out_path);
    }
    if (gamma->parsed()) {
        OwnedString rep;
        hl_status st = hl_run_gamma(gkind.c_str(), gweights.data(), gweights.size(),
                                    gnumeric ? 1 : 0, &rep.s);
        return deliver(st, rep.str(), out_path);
    }
    if (lift->parsed()) {
        OwnedString rep;
        hl_status st = hl_run_lift(lcheck.c_str(), ln, lweight, &rep.s);
        return deliver(st, rep.str(), out_path);
    }
    if (family->parsed()) {
        OwnedString rep;
        hl_status st = hl_run_family(fp, fweights.data(), fweights.size(), fbound, fkummer, &rep.s);
        std::vector<std::string> artifacts;
        if (!fcsv.empty() && completed(st)) {
            ordered_json j = ordered_json::parse(rep.str());
            if (write_file(fcsv, j["details"]["table_csv"].get<std::string>()))
                artifacts.push_back(fcsv);
        }
        return deliver(st, rep.str(), out_path, artifacts);
    }
    if (dirichlet->parsed()) {
        bool ok = false;
        std::string factors = read_file(dfactors, ok);
        if (!ok) {
            std::cerr << "error: cannot read " << dfactors << "\n";
            return 2;
        }
        OwnedString rep;
        hl_status st = hl_run_dirichlet(factors.c_str(), dbound, &rep.s);
        return deliver(st, rep.str(), out_path);
    }
    if (newton->parsed()) {
        bool ok = false;
        std::string input = read_file(ninput, ok);
        if (!ok) {
            std::cerr << "error: cannot read " << ninput << "\n";
            return 2;
        }
        OwnedString rep, csv, svg;
        hl_status st = hl_run_newton(input.c_str(), &rep.s, ncsv.empty() ? nullptr : &csv.s,
                                     nsvg.empty() ? nullptr : &svg.s);
        std::vector<std::string> artifacts;
        if (completed(st)) {
            if (!ncsv.empty() && csv.s && write_file(ncsv, csv.str())) artifacts.push_back(ncsv);
            if (!nsvg.empty() && svg.s && write_file(nsvg, svg.str())) artifacts.push_back(nsvg);
        }
        return deliver(st, rep.str(), out_path, artifacts);
    }
    return 2;
}
