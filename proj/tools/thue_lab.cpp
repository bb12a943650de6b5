// thue_lab: generate, saturate, verify and render unit-circle packings.
//
// Exit codes: 0 all checks pass, 1 violations or not saturated, 2 input or
// construction error.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "thue/io.hpp"
#include "thue/packing.hpp"
#include "thue/svg.hpp"
#include "thue/verifier.hpp"

namespace {

constexpr int kPass = 0;
constexpr int kViolations = 1;
constexpr int kError = 2;

struct DomainFlags {
    std::vector<double> torus;
    std::vector<double> box;
    double margin = 4.0;

    void add(CLI::App* cmd) {
        auto* t = cmd->add_option("--torus", torus, "Torus periods W H")->expected(2);
        auto* b = cmd->add_option("--box", box, "Box size W H")->expected(2);
        t->excludes(b);
        cmd->add_option("--margin", margin, "Box analysis margin")->capture_default_str();
    }

    std::optional<thue::Domain> domain() const {
        if (!torus.empty()) return thue::Domain::torus(torus[0], torus[1]);
        if (!box.empty()) return thue::Domain::box(box[0], box[1], margin);
        return std::nullopt;
    }
};

struct ToleranceFlags {
    thue::Tolerances tol;

    void add(CLI::App* cmd) {
        cmd->add_option("--eps-eq", tol.eps_eq, "Length equality tolerance")->capture_default_str();
        cmd->add_option("--eps-merge", tol.eps_merge, "Circumcenter merge tolerance")->capture_default_str();
        cmd->add_option("--eps-area", tol.eps_area, "Relative area tolerance")->capture_default_str();
    }
};

struct RenderFlags {
    std::vector<std::string> layers{"circles", "voronoi"};
    double scale = 40.0;

    void add(CLI::App* cmd) {
        cmd->add_option("--layers", layers, "Comma-separated layers")->delimiter(',')->capture_default_str();
        cmd->add_option("--scale", scale, "Pixels per plane unit")->capture_default_str();
    }

    thue::RenderSpec spec() const {
        thue::RenderSpec s;
        s.layers.clear();
        for (const std::string& l : layers) {
            if (!l.empty()) s.layers.push_back(thue::parse_layer(l));
        }
        s.scale = scale;
        s.validate();
        return s;
    }
};

std::uint64_t default_seed() {
    if (const char* env = std::getenv("THUE_LAB_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string("THUE_LAB_SEED is not an unsigned integer: ") + env);
        }
    }
    return 0;
}

void emit(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
    } else {
        thue::write_file(path, content);
    }
}

int verdict_code(const thue::Report& r) { return r.verdict ? kPass : kViolations; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Voronoi/Delaunay analysis and Thue density certificates for unit-circle packings"};
    app.require_subcommand(1);

    // generate
    auto* gen = app.add_subcommand("generate", "Write a hexagonal, square or random packing");
    std::string kind;
    std::optional<std::uint64_t> seed;
    int max_failures = 1000;
    double perturb_by = 0.0;
    std::string gen_out;
    DomainFlags gen_domain;
    gen->add_option("--kind", kind, "hex, square or random")->required()->check(CLI::IsMember({"hex", "square", "random"}));
    gen_domain.add(gen);
    gen->add_option("--seed", seed, "RNG seed (default $THUE_LAB_SEED, else 0)");
    gen->add_option("--max-failures", max_failures, "Random: consecutive rejections before stopping")
        ->capture_default_str();
    gen->add_option("--perturb", perturb_by, "Displace centers by up to this distance");
    gen->add_option("-o,--output", gen_out, "Output packing JSON (default stdout)");

    // saturate
    auto* sat = app.add_subcommand("saturate", "Insert circles until no gap of radius 2 remains");
    std::string sat_in;
    std::string sat_out;
    DomainFlags sat_domain;
    ToleranceFlags sat_tol;
    sat->add_option("input", sat_in, "Packing JSON or CSV")->required();
    sat->add_option("-o,--output", sat_out, "Output packing JSON (default stdout)");
    sat_domain.add(sat);
    sat_tol.add(sat);

    // verify
    auto* ver = app.add_subcommand("verify", "Run the Thue proof pipeline and write a report");
    std::string ver_in;
    std::string ver_report;
    std::vector<std::string> ver_checks;
    DomainFlags ver_domain;
    ToleranceFlags ver_tol;
    ver->add_option("input", ver_in, "Packing JSON or CSV")->required();
    ver->add_option("--checks", ver_checks, "Comma-separated subset of checks")->delimiter(',');
    ver->add_option("--report", ver_report, "Report JSON path (default stdout)");
    ver_domain.add(ver);
    ver_tol.add(ver);

    // render
    auto* ren = app.add_subcommand("render", "Draw the packing and its tessellations as SVG");
    std::string ren_in;
    std::string ren_out;
    std::string ren_report;
    DomainFlags ren_domain;
    ToleranceFlags ren_tol;
    RenderFlags ren_flags;
    ren->add_option("input", ren_in, "Packing JSON or CSV")->required();
    ren->add_option("-o,--output", ren_out, "Output SVG (default stdout)");
    ren->add_option("--report", ren_report, "Report JSON whose violations are drawn");
    ren_domain.add(ren);
    ren_tol.add(ren);
    ren_flags.add(ren);

    // analyze
    auto* ana = app.add_subcommand("analyze", "verify and render from one construction");
    std::string ana_in;
    std::string ana_report;
    std::string ana_svg;
    std::vector<std::string> ana_checks;
    DomainFlags ana_domain;
    ToleranceFlags ana_tol;
    RenderFlags ana_flags;
    ana_flags.layers = {"circles", "voronoi", "violations"};
    ana->add_option("input", ana_in, "Packing JSON or CSV")->required();
    ana->add_option("--report", ana_report, "Report JSON path (default stdout)");
    ana->add_option("--svg", ana_svg, "Output SVG");
    ana->add_option("--checks", ana_checks, "Comma-separated subset of checks")->delimiter(',');
    ana_domain.add(ana);
    ana_tol.add(ana);
    ana_flags.add(ana);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kPass : kError;
    }

    try {
        if (gen->parsed()) {
            const auto domain = gen_domain.domain();
            if (!domain) throw std::invalid_argument("generate needs --torus W H or --box W H");
            thue::PackingConfiguration config;
            const std::uint64_t s = seed ? *seed : default_seed();
            if (kind == "hex") {
                config = thue::gen_hexagonal(*domain);
            } else if (kind == "square") {
                config = thue::gen_square(*domain);
            } else {
                config = thue::gen_random(*domain, s, max_failures);
            }
            if (perturb_by > 0.0) config = thue::perturb(config, s, perturb_by);
            emit(gen_out, thue::packing_to_json(config));
            std::cerr << config.size() << " centers\n";
            return kPass;
        }
        if (sat->parsed()) {
            sat_tol.tol.validate();
            const auto config = thue::load_packing(sat_in, sat_domain.domain());
            config.domain.validate();
            if (!thue::validate(config, sat_tol.tol).empty()) throw thue::PackingError("input is not a valid packing");
            const auto out = thue::greedy_saturate(config, sat_tol.tol);
            emit(sat_out, thue::packing_to_json(out));
            std::cerr << "inserted " << out.size() - config.size() << " centers\n";
            return kPass;
        }
        if (ver->parsed()) {
            const auto config = thue::load_packing(ver_in, ver_domain.domain());
            thue::VerifyOptions opts{ver_tol.tol, {ver_checks.begin(), ver_checks.end()}};
            const thue::Report report = thue::check_thue(config, opts);
            emit(ver_report, thue::report_to_json(report).dump(2) + "\n");
            return verdict_code(report);
        }
        if (ren->parsed()) {
            const thue::RenderSpec spec = ren_flags.spec();
            const auto config = thue::load_packing(ren_in, ren_domain.domain());
            ren_tol.tol.validate();
            config.domain.validate();
            if (config.size() < 3) throw thue::PackingError("rendering needs at least 3 centers");
            const auto diagram = thue::build_diagram(config, ren_tol.tol);
            const auto lts = thue::build_l_triangles(diagram);
            std::vector<thue::Point> marks;
            if (!ren_report.empty()) marks = thue::violation_points(nlohmann::json::parse(thue::read_file(ren_report)));
            emit(ren_out, thue::render_svg(diagram, lts, spec, marks));
            return kPass;
        }
        if (ana->parsed()) {
            const thue::RenderSpec spec = ana_flags.spec();
            const auto config = thue::load_packing(ana_in, ana_domain.domain());
            thue::VerifyOptions opts{ana_tol.tol, {ana_checks.begin(), ana_checks.end()}};
            const thue::Analysis a = thue::analyze(config, opts);
            const nlohmann::json report = thue::report_to_json(a.report);
            emit(ana_report, report.dump(2) + "\n");
            if (!ana_svg.empty()) {
                thue::write_file(ana_svg, thue::render_svg(a.diagram, a.l_triangles, spec, thue::violation_points(report)));
            }
            return verdict_code(a.report);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kError;
    }
    return kError;
}
