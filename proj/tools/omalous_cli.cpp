// Command-line front end. Exit codes: 0 success, 1 usage error, 2 domain error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "omalous/cb/cayley_bacharach.hpp"
#include "omalous/error.hpp"
#include "omalous/exactmath/serialize.hpp"
#include "omalous/liqin/liqin.hpp"
#include "omalous/qsc/qsc.hpp"
#include "omalous/surface/surface.hpp"

namespace {

using nlohmann::json;
using namespace omalous;

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("FileError", "cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw DomainError("ParseError", path + ": " + e.what());
    }
}

// Text output: one "path: value" line per leaf, in key order.
void print_text(const json& j, const std::string& prefix, std::ostream& out) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) print_text(v, prefix.empty() ? k : prefix + "." + k, out);
    } else if (j.is_array() && std::any_of(j.begin(), j.end(), [](const json& e) { return e.is_structured(); })) {
        for (std::size_t i = 0; i < j.size(); ++i) print_text(j[i], prefix + "[" + std::to_string(i) + "]", out);
    } else {
        out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
    }
}

// Commands with a compact text rendering store it under "text"; JSON output drops it.
void emit(json j, const std::string& format) {
    if (format == "text" && j.contains("text")) {
        std::cout << j.at("text").get<std::string>();
    } else if (format == "text") {
        print_text(j, "", std::cout);
    } else {
        j.erase("text");
        std::cout << j.dump(2) << '\n';
    }
}

struct RingArgs {
    std::optional<int> pn;
    std::vector<int> pnm;
    std::string matrices;
    std::string ring;

    void attach(CLI::App* cmd) {
        auto* a = cmd->add_option("--pn", pn, "QH*(P^n)")->check(CLI::PositiveNumber);
        auto* b = cmd->add_option("--pnm", pnm, "QH*(P^n x P^m)")->expected(2)->check(CLI::PositiveNumber);
        auto* c = cmd->add_option("--matrices", matrices, "deformation matrices JSON")->check(CLI::ExistingFile);
        auto* d = cmd->add_option("--ring", ring, "ring JSON as written by 'qsc ring'")->check(CLI::ExistingFile);
        a->excludes(b, c, d);
        b->excludes(c, d);
        c->excludes(d);
    }

    bool given() const { return pn || !pnm.empty() || !matrices.empty() || !ring.empty(); }

    qsc::RingPresentation build() const {
        if (pn) return qsc::qh_projective_space(*pn);
        if (!pnm.empty()) return qsc::qh_product_projective(pnm[0], pnm[1]);
        if (!matrices.empty()) return qsc::quadric_family_relations(qsc::matrices_from_json(read_json_file(matrices)));
        return qsc::ring_from_json(read_json_file(ring));
    }
};

// A polynomial file is either exactmath Q-polynomial JSON over ring
// variables and parameters, or polynomial JSON with a "params" list.
exact::RPolynomial read_ring_poly(const qsc::RingPresentation& ring, const std::string& path) {
    const json j = read_json_file(path);
    if (j.contains("params")) {
        const auto raw = exact::rpolynomial_from_json(j);
        return ring.lift(exact::flatten(raw));
    }
    return ring.lift(exact::qpolynomial_from_json(j));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact workbench for Li-Qin bounds, Cayley-Bacharach checks and quantum cohomology rings"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "json";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->envname("OMALOUS_FORMAT");

    std::int64_t degree = 0, rank = 2;
    std::string sign = "plus";
    auto add_degree = [&](CLI::App* c) { c->add_option("--degree", degree, "hypersurface degree")->required(); };
    auto add_rank = [&](CLI::App* c, bool required) {
        auto* o = c->add_option("--rank", rank, "bundle rank");
        if (required) o->required();
    };
    auto add_sign = [&](CLI::App* c) {
        c->add_option("--sign", sign, "c1 = +K or -K")->check(CLI::IsMember({"plus", "minus"}))->capture_default_str();
    };

    auto* invariants = app.add_subcommand("invariants", "invariants of a smooth degree-d surface in P^3");
    add_degree(invariants);

    auto* alpha = app.add_subcommand("alpha", "stability bound with term breakdown");
    add_degree(alpha);
    add_rank(alpha, true);
    add_sign(alpha);

    auto* good = app.add_subcommand("good", "goodness of type (r, H) for both signs");
    add_degree(good);
    add_rank(good, true);

    std::int64_t d_min = 5, scan_cap = liqin::kDefaultScanCap;
    auto* d0 = app.add_subcommand("d0", "certified threshold degree");
    add_rank(d0, true);
    d0->add_option("--d-min", d_min, "least degree considered")->capture_default_str();
    d0->add_option("--scan-cap", scan_cap, "largest degree the exact scan may reach")->capture_default_str();

    auto* cycle_length = app.add_subcommand("cycle-length", "total 0-cycle length forced by the extension");
    add_degree(cycle_length);
    add_rank(cycle_length, true);
    add_sign(cycle_length);

    std::string surface_file, cycles_file;
    auto* cb_cmd = app.add_subcommand("cb", "Cayley-Bacharach checks and extension certificate");
    cb_cmd->add_option("--surface", surface_file, "hypersurface JSON {degree, F}")->required()->check(CLI::ExistingFile);
    cb_cmd->add_option("--cycles", cycles_file, "cycles JSON {cycles: [...]}")->required()->check(CLI::ExistingFile);
    add_rank(cb_cmd, true);
    add_sign(cb_cmd);

    std::size_t count = 0;
    std::uint64_t seed = 0;
    auto* sample = app.add_subcommand("sample", "heuristic sampler of points on lines of a hypersurface");
    sample->add_option("--surface", surface_file, "hypersurface JSON {degree, F}")->required()->check(CLI::ExistingFile);
    sample->add_option("--count", count, "number of points")->required();
    sample->add_option("--seed", seed, "random seed")->capture_default_str();

    auto* qsc_cmd = app.add_subcommand("qsc", "quantum cohomology quotient rings");
    qsc_cmd->require_subcommand(1);
    RingArgs ring_args;
    std::string poly_file, check_matrices;
    auto* ring_cmd = qsc_cmd->add_subcommand("ring", "ring presentation, Groebner basis and staircase");
    ring_args.attach(ring_cmd);
    auto* reduce_cmd = qsc_cmd->add_subcommand("reduce", "normal form of a polynomial");
    ring_args.attach(reduce_cmd);
    reduce_cmd->add_option("--poly", poly_file, "polynomial JSON")->required()->check(CLI::ExistingFile);
    auto* corr_cmd = qsc_cmd->add_subcommand("correlator", "coefficient of the top basis monomial");
    ring_args.attach(corr_cmd);
    corr_cmd->add_option("--poly", poly_file, "polynomial JSON")->required()->check(CLI::ExistingFile);
    auto* classical_cmd = qsc_cmd->add_subcommand("check-classical", "compare with QH*(P^1 x P^1)");
    classical_cmd->add_option("--matrices", check_matrices, "deformation matrices JSON")
        ->required()
        ->check(CLI::ExistingFile);

    try {
        app.parse(argc, argv);
        for (auto* c : {ring_cmd, reduce_cmd, corr_cmd}) {
            if (c->parsed() && !ring_args.given()) throw CLI::RequiredError("one of --pn, --pnm, --matrices, --ring");
        }
        if (d0->parsed() && scan_cap < d_min) throw CLI::ValidationError("--scan-cap", "must be >= --d-min");
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        json out;
        const auto s = liqin::sign_from_string(sign);
        if (invariants->parsed()) {
            const auto data = surface::hypersurface_invariants(degree);
            out = surface::to_json(data);
            out["noether"] = surface::to_json(surface::check_noether(data));
            out["bmy"] = surface::check_bmy(data);
        } else if (alpha->parsed()) {
            out = liqin::to_json(liqin::alpha(surface::hypersurface_invariants(degree), rank, s));
        } else if (good->parsed()) {
            out = liqin::to_json(liqin::is_good(surface::hypersurface_invariants(degree), rank));
        } else if (d0->parsed()) {
            out = liqin::to_json(liqin::find_d0(rank, d_min, scan_cap));
        } else if (cycle_length->parsed()) {
            const auto data = surface::hypersurface_invariants(degree);
            out = {{"degree", degree},
                   {"rank", rank},
                   {"sign", liqin::to_string(s)},
                   {"cycle_length", liqin::required_cycle_length(data, rank, s)}};
        } else if (cb_cmd->parsed()) {
            const auto h = surface::hypersurface_from_json(read_json_file(surface_file));
            const auto cycles = cb::cycles_from_json(read_json_file(cycles_file));
            out = cb::to_json(
                cb::extension_certificate(surface::hypersurface_invariants(h.degree), h, cycles, rank, s));
        } else if (sample->parsed()) {
            const auto h = surface::hypersurface_from_json(read_json_file(surface_file));
            out = cb::to_json(cb::sample_cycle(h, count, seed));
            out["heuristic"] = true;
            out["seed"] = seed;
        } else if (ring_cmd->parsed()) {
            out = qsc::to_json(ring_args.build());
        } else if (reduce_cmd->parsed()) {
            const auto ring = ring_args.build();
            const auto nf = ring.reduce(read_ring_poly(ring, poly_file));
            out = qsc::to_json(nf, ring.params());
            out["reduced_str"] = exact::to_string(nf.reduced);
            std::string text = "input: " + exact::to_string(nf.input) + "\nreduced: " + exact::to_string(nf.reduced) + "\n";
            const exact::RationalFunction one(ring.params(), exact::Rational(1));
            for (std::size_t i = 0; i < nf.basis.size(); ++i) {
                const auto m = exact::RPolynomial::term(ring.vars(), nf.basis[i], one);
                text += "coordinate " + exact::to_string(m) + ": " + nf.coordinates[i].str() + "\n";
            }
            out["text"] = text;
        } else if (corr_cmd->parsed()) {
            const auto ring = ring_args.build();
            const auto value = ring.correlator(read_ring_poly(ring, poly_file));
            out = {{"correlator", exact::to_json_value(value)}, {"value", value.str()}};
            out["text"] = "correlator: " + value.str() + "\n";
        } else if (classical_cmd->parsed()) {
            out = {{"classical",
                    qsc::check_classical_specialization(qsc::matrices_from_json(read_json_file(check_matrices)))}};
        }
        emit(out, format);
        return 0;
    } catch (const DomainError& e) {
        const json err = {{"error", {{"code", e.code()}, {"message", e.what()}}}};
        if (format == "text") {
            std::cerr << "error " << e.code() << ": " << e.what() << '\n';
        } else {
            std::cout << err.dump(2) << '\n';
        }
        return 2;
    } catch (const json::exception& e) {
        std::cout << json{{"error", {{"code", "ParseError"}, {"message", e.what()}}}}.dump(2) << '\n';
        return 2;
    }
}
