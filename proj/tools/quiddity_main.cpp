// quiddity: enumerate quiddity cycles, print friezes and root systems, and
// analyze the affine slice arrangements they generate.
//
// Exit codes: 0 success, 2 invalid input, 3 internal invariant violation.

#include <quiddity/affine.hpp>
#include <quiddity/cycle.hpp>
#include <quiddity/enumerate.hpp>
#include <quiddity/frieze.hpp>
#include <quiddity/json_io.hpp>
#include <quiddity/rank2.hpp>
#include <quiddity/svg.hpp>
#include <quiddity/triangulation.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace quiddity;

constexpr int kExitInvalidInput = 2;
constexpr int kExitInvariant = 3;

std::vector<Integer> parse_entries(const std::string& text) {
    std::vector<Integer> out;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, ',')) {
        const auto b = item.find_first_not_of(" \t");
        const auto e = item.find_last_not_of(" \t");
        if (b == std::string::npos) throw std::invalid_argument("empty entry in cycle");
        const std::string tok = item.substr(b, e - b + 1);
        const std::size_t digits = tok.find_first_not_of("0123456789", tok[0] == '-' ? 1 : 0);
        if (digits != std::string::npos || tok == "-")
            throw std::invalid_argument("bad integer in cycle: '" + tok + "'");
        out.emplace_back(tok);
    }
    if (out.empty()) throw std::invalid_argument("empty cycle");
    return out;
}

QuiddityCycle parse_cycle(const std::string& text) {
    auto c = QuiddityCycle::try_make(parse_entries(text));
    if (!c) throw std::invalid_argument("'" + text + "' is not a quiddity cycle");
    return *c;
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    out << content;
}

int run_enumerate(int length, bool dense_only, bool up_to_rotation) {
    if (length < 2) throw std::invalid_argument("--length must be >= 2");
    visit_cycles(length, [&](const QuiddityCycle& c) {
        if (dense_only && (c.length() < 3 || !is_dense(c))) return;
        if (up_to_rotation && c != lex_min_rotation(c)) return;
        std::cout << to_json(c).dump() << '\n';
    });
    return 0;
}

int run_frieze(const std::string& cycle_text, const std::string& format) {
    const QuiddityCycle c = parse_cycle(cycle_text);
    if (c.length() < 3) throw std::invalid_argument("frieze needs a cycle of length >= 3");
    const FriezeTable table = frieze_pattern(c);
    if (format == "text")
        std::cout << render_frieze_text(table);
    else
        std::cout << to_json(table).dump() << '\n';
    return 0;
}

int run_triangulate(const std::string& cycle_text) {
    const QuiddityCycle c = parse_cycle(cycle_text);
    if (c.length() < 3) throw std::invalid_argument("triangulation needs a cycle of length >= 3");
    std::cout << to_json(to_triangulation(c)).dump() << '\n';
    return 0;
}

int run_roots(const std::string& cycle_text, int chamber) {
    const QuiddityCycle c = parse_cycle(cycle_text);
    std::cout << to_json(positive_roots(c, chamber)).dump() << '\n';
    return 0;
}

int run_affine(const std::string& cycle_text, int chamber, const std::string& check,
               int d_bound) {
    const QuiddityCycle c = parse_cycle(cycle_text);
    if (c.length() < 3) throw std::invalid_argument("affine analysis needs length >= 3");
    if (chamber < 1 || chamber > c.length()) throw std::invalid_argument("chamber out of range");

    nlohmann::json report{{"c", to_json(c)["c"]}, {"chamber", chamber}};
    if (check == "simplicial") {
        const auto res = is_simplicial_affine(c, chamber);
        report["simplicial"] = res.simplicial;
        if (res.witness) report["witness"] = to_json(*res.witness);
    } else if (check == "count") {
        report["cells"] = fundamental_cells(make_affine_root_set(c, chamber)).size();
    } else if (check == "det") {
        const auto dc = determinant_classes(c, chamber);
        report["cells"] = dc.cell_count;
        report["detClasses"] = to_json(dc);
    } else if (check == "ca") {
        const auto res = crystallographic_check(c, chamber, d_bound);
        report["crystallographic"] = res.crystallographic;
        report["dBound"] = res.d_bound;
        if (res.witness) report["witness"] = to_json(*res.witness);
    } else {
        throw std::invalid_argument("unknown check: " + check);
    }
    std::cout << report.dump() << '\n';
    return 0;
}

int run_render(const std::string& what, const std::string& cycle_text, int chamber,
               const std::string& out_path) {
    const QuiddityCycle c = parse_cycle(cycle_text);
    if (c.length() < 3) throw std::invalid_argument("render needs a cycle of length >= 3");
    if (what == "triangulation") {
        write_output(out_path, render_triangulation_svg(c));
    } else if (what == "arrangement") {
        write_output(out_path,
                     render_arrangement_svg(c, chamber, make_rect(-1, -1, 2, 2), 160));
    } else {
        throw std::invalid_argument("unknown render target: " + what);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"quiddity cycles, friezes, and affine slice arrangements"};
    app.require_subcommand(1);

    int length = 0;
    bool dense_only = false, up_to_rotation = false;
    auto* cmd_enum = app.add_subcommand("enumerate", "list all cycles of a given length");
    cmd_enum->add_option("--length", length, "cycle length (>= 2)")->required();
    cmd_enum->add_flag("--dense", dense_only, "keep only dense cycles");
    cmd_enum->add_flag("--up-to-rotation", up_to_rotation,
                       "emit only lexicographically minimal rotations");

    std::string cycle_text, format = "text";
    auto* cmd_frieze = app.add_subcommand("frieze", "print the frieze pattern of a cycle");
    cmd_frieze->add_option("--cycle", cycle_text, "comma-separated entries")->required();
    cmd_frieze->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    std::string tri_cycle;
    auto* cmd_tri = app.add_subcommand("triangulate", "print the triangulation of a cycle");
    cmd_tri->add_option("--cycle", tri_cycle, "comma-separated entries")->required();

    std::string roots_cycle;
    int roots_chamber = 1;
    auto* cmd_roots = app.add_subcommand("roots", "rank-2 positive roots at a chamber");
    cmd_roots->add_option("--cycle", roots_cycle, "comma-separated entries")->required();
    cmd_roots->add_option("--chamber", roots_chamber, "chamber index (1-based)");

    std::string aff_cycle, check;
    int aff_chamber = 1, d_bound = 3;
    auto* cmd_aff = app.add_subcommand("affine", "analyze the affine slice arrangement");
    cmd_aff->add_option("--cycle", aff_cycle, "comma-separated entries")->required();
    cmd_aff->add_option("--chamber", aff_chamber, "chamber index (1-based)");
    cmd_aff->add_option("--check", check, "simplicial, count, det, or ca")
        ->required()
        ->check(CLI::IsMember({"simplicial", "count", "det", "ca"}));
    cmd_aff->add_option("--d-bound", d_bound, "truncation depth for the ca check");

    std::string what, render_cycle, out_path;
    int render_chamber = 1;
    auto* cmd_render = app.add_subcommand("render", "emit an SVG figure");
    cmd_render->add_option("--what", what, "triangulation or arrangement")
        ->required()
        ->check(CLI::IsMember({"triangulation", "arrangement"}));
    cmd_render->add_option("--cycle", render_cycle, "comma-separated entries")->required();
    cmd_render->add_option("--chamber", render_chamber, "chamber index (1-based)");
    cmd_render->add_option("-o,--output", out_path, "output file ('-' for stdout)")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_enum->parsed()) return run_enumerate(length, dense_only, up_to_rotation);
        if (cmd_frieze->parsed()) return run_frieze(cycle_text, format);
        if (cmd_tri->parsed()) return run_triangulate(tri_cycle);
        if (cmd_roots->parsed()) return run_roots(roots_cycle, roots_chamber);
        if (cmd_aff->parsed()) return run_affine(aff_cycle, aff_chamber, check, d_bound);
        if (cmd_render->parsed()) return run_render(what, render_cycle, render_chamber, out_path);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInvariant;
    }
    return 0;
}
