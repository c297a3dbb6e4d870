#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "fanplan/canonical.hpp"
#include "fanplan/configs.hpp"
#include "fanplan/fan.hpp"
#include "fanplan/format.hpp"
#include "fanplan/fuzz.hpp"
#include "fanplan/layout.hpp"
#include "fanplan/recheck.hpp"
#include "fanplan/simplify.hpp"
#include "fanplan/svg.hpp"
#include "fanplan/validate.hpp"

namespace {

using namespace fanplan;

// exit codes: 0 ok/true, 1 property false, 2 input error, 3 internal contradiction
constexpr int kOk = 0, kFalse = 1, kInput = 2, kInternal = 3;

const char* reason_text(FanReason r) {
    return r == FanReason::no_common_endpoint ? "no-common-endpoint" : "inconsistent-sides";
}

void print_violation(const FanViolation& v) {
    std::cout << "fan violation at edge " << v.edge << " (" << reason_text(v.reason) << ")";
    if (!v.witness_edges.empty()) {
        std::cout << " edges:";
        for (const Id& e : v.witness_edges) std::cout << " " << e;
    }
    if (!v.witness_crossings.empty()) {
        std::cout << " crossings:";
        for (const Id& c : v.witness_crossings) std::cout << " " << c;
    }
    std::cout << "\n";
}

void print_configs(const ConfigReport& rep) {
    std::cout << "S1 (adjacent crossings): " << rep.s1.size() << "\n";
    for (const auto& w : rep.s1)
        std::cout << "  " << w.e << " x " << w.f << " at " << w.crossing << "\n";
    std::cout << "S2 (pairs crossing twice or more): " << rep.s2.size() << "\n";
    for (const auto& w : rep.s2) {
        std::cout << "  " << w.e << " x " << w.f << " at";
        for (const Id& c : w.crossings) std::cout << " " << c;
        std::cout << "\n";
    }
    std::cout << "SF1 (independent edges over a common edge): " << rep.sf1.size() << "\n";
    for (const auto& w : rep.sf1)
        std::cout << "  " << w.c1 << ", " << w.c2 << " over " << w.base << "\n";
    std::cout << "SF2 (shared endpoint on different sides): " << rep.sf2.size() << "\n";
    for (const auto& w : rep.sf2)
        std::cout << "  " << w.c1 << ", " << w.c2 << " over " << w.base << " (" << w.crossing1
                  << " vs " << w.crossing2 << ")\n";
}

int cmd_check(const std::string& file, bool fan, bool simple, bool quasi3, bool density,
              bool configs) {
    Drawing d = read_drawing_file(file);
    bool all_requested = !fan && !simple && !quasi3 && !density && !configs;
    bool ok = true;

    std::cout << "vertices " << d.graph.vertices.size() << ", edges " << d.graph.edges.size()
              << ", crossings " << d.crossing_count() << "\n";
    if (fan || all_requested) {
        FanOutcome outcome = check_fan_planar(d);
        std::cout << "fan-planar: " << (outcome.ok() ? "yes" : "no") << "\n";
        if (outcome.ok()) {
            for (const auto& [e, v] : outcome.cert->special)
                std::cout << "  special(" << e << ") = " << v << "\n";
        } else {
            print_violation(*outcome.violation);
        }
        if (fan) ok = ok && outcome.ok();
    }
    if (simple || all_requested) {
        bool s = is_simple(d);
        std::cout << "simple: " << (s ? "yes" : "no") << "\n";
        if (simple) ok = ok && s;
    }
    if (quasi3 || all_requested) {
        QuasiplanarityReport q = is_3quasiplanar(d);
        std::cout << "3-quasiplanar: " << (q.quasiplanar ? "yes" : "no");
        if (!q.quasiplanar)
            std::cout << " (witness " << q.witness[0] << ", " << q.witness[1] << ", "
                      << q.witness[2] << ")";
        std::cout << "\n";
        if (quasi3) ok = ok && q.quasiplanar;
    }
    if (density || all_requested) {
        DensityReport rep = density_report(d);
        std::cout << "density: n=" << rep.n << " m=" << rep.m << " bound=" << rep.bound << " "
                  << (rep.satisfied ? "satisfied" : "violated") << "\n";
        if (density) ok = ok && rep.satisfied;
    }
    if (configs || (all_requested && !is_simple(d))) print_configs(detect_configurations(d));
    return ok ? kOk : kFalse;
}

int cmd_simplify(const std::string& file, const std::string& out, bool trace) {
    Drawing d = read_drawing_file(file);
    SimplifyHooks hooks;
    if (trace)
        hooks.on_step = [](const Drawing&, const StepRecord& rec) {
            std::cerr << to_string(rec.rule) << " " << rec.target << " " << rec.before << " -> "
                      << rec.after << "\n";
        };
    SimplifyResult res;
    try {
        res = simplify(d, hooks);
    } catch (const not_fan_planar_error& e) {
        print_violation(e.violation);
        return kFalse;
    }
    if (out.empty())
        std::cout << serialize(res.drawing);
    else
        write_drawing_file(out, res.drawing);
    return kOk;
}

int cmd_fuzz(uint64_t seed, int n, int moves, int count, const std::string& dir) {
    std::filesystem::create_directories(dir);
    for (int i = 0; i < count; ++i) {
        FuzzParams p;
        p.seed = seed + static_cast<uint64_t>(i);
        p.n = n;
        p.moves = moves;
        Drawing d = fuzz(p);
        std::string path = dir + "/fuzz-" + std::to_string(p.seed) + ".fpd";
        write_drawing_file(path, d);
        std::cout << path << " crossings=" << d.crossing_count() << "\n";
    }
    return kOk;
}

int cmd_render(const std::string& file, const std::string& out) {
    Drawing d = read_drawing_file(file);
    LayoutResult l = layout(d);
    std::string svg = render_svg(d, l);
    if (out.empty()) {
        std::cout << svg;
    } else {
        std::ofstream os(out, std::ios::trunc);
        if (!os) throw error("cannot write " + out);
        os << svg;
    }
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"fan-planar drawing toolkit"};
    app.require_subcommand(1);

    std::string file, out, dir = ".";
    bool fan = false, simple = false, quasi3 = false, density = false, configs = false,
         trace = false;
    uint64_t seed = 1;
    int n = 8, moves = 4, count = 1;

    CLI::App* check = app.add_subcommand("check", "verify properties of a drawing");
    check->add_option("file", file)->required();
    check->add_flag("--fan", fan, "require fan-planarity");
    check->add_flag("--simple", simple, "require simplicity");
    check->add_flag("--quasi3", quasi3, "require 3-quasiplanarity");
    check->add_flag("--density", density, "require m <= 6.5n - 20");
    check->add_flag("--configs", configs, "print all forbidden-configuration witnesses");

    CLI::App* simp = app.add_subcommand("simplify", "redraw as a simple fan-planar drawing");
    simp->add_option("file", file)->required();
    simp->add_option("-o,--output", out, "output file (stdout when omitted)");
    simp->add_flag("--trace", trace, "stream rewrite steps to stderr");

    CLI::App* fz = app.add_subcommand("fuzz", "emit fan-planar drawings with known provenance");
    fz->add_option("--seed", seed, "base random seed");
    fz->add_option("--n", n, "vertex budget");
    fz->add_option("--moves", moves, "de-simplification moves");
    fz->add_option("--count", count, "number of drawings");
    fz->add_option("-o,--output", dir, "output directory");

    CLI::App* rend = app.add_subcommand("render", "render a drawing to SVG");
    rend->add_option("file", file)->required();
    rend->add_option("-o,--output", out, "output file (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kInput;
    }

    try {
        if (check->parsed()) return cmd_check(file, fan, simple, quasi3, density, configs);
        if (simp->parsed()) return cmd_simplify(file, out, trace);
        if (fz->parsed()) return cmd_fuzz(seed, n, moves, count, dir);
        if (rend->parsed()) return cmd_render(file, out);
    } catch (const fanplan::internal_contradiction& e) {
        std::cerr << "internal contradiction: " << e.what() << "\n";
        return kInternal;
    } catch (const fanplan::route_error& e) {
        std::cerr << "internal route error: " << e.what() << "\n";
        return kInternal;
    } catch (const fanplan::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInput;
    }
    return kInput;
}
