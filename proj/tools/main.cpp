#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "eqmaps/confighom.hpp"
#include "eqmaps/report.hpp"
#include "eqmaps/resolution.hpp"
#include "eqmaps/specseq.hpp"
#include "eqmaps/verify.hpp"

namespace {

using namespace eqmaps;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct cli_state {
    bool json = false;
    int exit_code = kExitOk;
};

void emit(cli_state& state, const report::report_document& doc, bool verification)
{
    if (state.json)
        std::cout << doc.to_json().dump(2) << "\n";
    else
        std::cout << doc.to_text();
    if (verification && !doc.all_passed())
        state.exit_code = kExitVerifyFailed;
}

confighom::space_kind space_from_string(const std::string& name)
{
    using confighom::space_kind;
    if (name == "euclid" || name == "rm")
        return space_kind::euclidean;
    if (name == "sphere")
        return space_kind::sphere;
    if (name == "rp")
        return space_kind::proj_space;
    if (name == "rp-star")
        return space_kind::proj_space_punctured;
    if (name == "lens")
        return space_kind::lens;
    if (name == "lens-star")
        return space_kind::lens_punctured;
    throw std::invalid_argument("unknown space '" + name +
                                "' (expected euclid|sphere|rp|rp-star|lens|lens-star)");
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact engine for twisted configuration-space homology and the Poincare series "
                 "of spaces of equivariant sphere maps"};
    app.require_subcommand(1);

    cli_state state;
    int truncation = 40;
    app.add_flag("--json", state.json, "emit machine-readable JSON");

    // ---- table ----------------------------------------------------------
    std::string family_name;
    int arg_m = 1, arg_M = 2, arg_r = 2, arg_s = 1;
    bool based = false, free_flag = false, verify_flag = false;

    CLI::App* table = app.add_subcommand("table", "closed-form Poincare series of a map space");
    table->add_option("family", family_name, "general|even|odd|lens")->required();
    table->add_option("m", arg_m, "source sphere dimension")->required();
    table->add_option("M", arg_M, "target sphere dimension")->required();
    table->add_flag("--based", based, "based maps");
    table->add_flag("--free", free_flag, "free maps (default)");
    table->add_flag("--verify", verify_flag, "also assemble the first page and compare");
    table->add_option("-T,--truncation", truncation, "series truncation (default 40)");
    table->add_option("--r", arg_r, "lens order");
    table->add_option("--s", arg_s, "lens character exponent");
    table->callback([&] {
        map_space_spec spec{family_from_string(family_name), arg_m, arg_M, based, 0, 0};
        if (spec.family == map_family::lens_equivariant) {
            spec.r = arg_r;
            spec.s = arg_s;
        }
        spec.validate();
        const auto closed = series::table_closed_form(spec);
        const auto expansion = series::expand(closed, truncation);

        report::report_document doc;
        doc.command = "table";
        doc.params = {{"case", spec.case_id()}, {"T", std::to_string(truncation)}};
        report::case_result c;
        c.case_id = spec.case_id();
        c.route_values["closed_form"] = closed.to_string();
        c.route_values["expansion"] = expansion.to_string();
        c.verdict = true;
        if (verify_flag) {
            const auto page = specseq::build_e1(spec, specseq::default_p_min(spec, truncation));
            const auto assembled = specseq::total_poincare(page, truncation);
            c.route_values["e1_series"] = assembled.to_string();
            c.verdict = assembled == expansion;
        }
        doc.add(std::move(c));
        if (state.json) {
            nlohmann::json out = doc.to_json();
            out["closed_form"] = report::closed_form_json(closed);
            out["expansion"] = report::series_json(expansion);
            std::cout << out.dump(2) << "\n";
            if (verify_flag && !doc.all_passed())
                state.exit_code = kExitVerifyFailed;
        } else {
            emit(state, doc, verify_flag);
        }
    });

    // ---- e1 --------------------------------------------------------------
    int p_min = 0;
    CLI::App* e1 = app.add_subcommand("e1", "assemble the first page of a map-space family");
    e1->add_option("family", family_name, "general|even|odd|lens")->required();
    e1->add_option("m", arg_m)->required();
    e1->add_option("M", arg_M)->required();
    e1->add_flag("--based", based);
    e1->add_option("-T,--truncation", truncation);
    e1->add_option("--p-min", p_min, "assembly depth (default from truncation)");
    e1->add_option("--r", arg_r);
    e1->add_option("--s", arg_s);
    e1->callback([&] {
        map_space_spec spec{family_from_string(family_name), arg_m, arg_M, based, 0, 0};
        if (spec.family == map_family::lens_equivariant) {
            spec.r = arg_r;
            spec.s = arg_s;
        }
        spec.validate();
        const int depth = p_min < 0 ? p_min : specseq::default_p_min(spec, truncation);
        const auto page = specseq::build_e1(spec, depth);
        const bool wedge_ok = specseq::wedge_support_check(page);
        const auto status = specseq::degeneration_status(page);
        if (state.json) {
            nlohmann::json cells = nlohmann::json::array();
            for (const auto& [pq, dim] : page.cells)
                cells.push_back({{"p", pq.first}, {"q", pq.second}, {"dim", dim}});
            nlohmann::json out;
            out["case"] = spec.case_id();
            out["p_min"] = depth;
            out["cells"] = std::move(cells);
            out["wedge_ok"] = wedge_ok;
            out["degeneration"] = specseq::to_string(status);
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << spec.case_id() << "  (p_min " << depth << ")\n";
            for (const auto& [pq, dim] : page.cells)
                std::cout << "  E1[" << pq.first << "," << pq.second << "] = " << dim << "\n";
            std::cout << "wedge: " << (wedge_ok ? "inside" : "VIOLATED")
                      << ", degeneration: " << specseq::to_string(status) << "\n";
        }
        if (!wedge_ok)
            state.exit_code = kExitVerifyFailed;
    });

    // ---- euler -----------------------------------------------------------
    int arg_N = 4;
    CLI::App* euler = app.add_subcommand("euler", "horizontal Euler characteristics, all routes");
    euler->add_option("N", arg_N, "even point count <= 10")->required();
    euler->callback([&] {
        if (arg_N > 10)
            throw std::invalid_argument("euler: N exceeds the supported bound 10");
        report::report_document doc;
        doc.command = "euler";
        doc.params["N"] = std::to_string(arg_N);
        for (int s = 0; s <= arg_N / 2 - 1; ++s) {
            report::case_result c;
            c.case_id = "euler:N=" + std::to_string(arg_N) + ":s=" + std::to_string(s);
            const long long via_sum = resolution::horizontal_euler_sum(arg_N, s);
            const long long via_closed = resolution::horizontal_euler_closed(arg_N, s);
            c.route_values["sum_route"] = std::to_string(via_sum);
            c.route_values["closed_route"] = std::to_string(via_closed);
            c.verdict = via_sum == via_closed;
            if (arg_N <= 8) {
                const long long via_oracle = resolution::permutation_oracle(arg_N, s);
                c.route_values["oracle_route"] = std::to_string(via_oracle);
                c.verdict = c.verdict && via_oracle == via_closed;
            }
            doc.add(std::move(c));
        }
        emit(state, doc, true);
    });

    // ---- oracle ----------------------------------------------------------
    CLI::App* oracle = app.add_subcommand("oracle", "per-place-set permutation counts vs the "
                                                    "closed fraction");
    oracle->add_option("N", arg_N, "even point count <= 8")->required();
    oracle->callback([&] {
        if (arg_N > 8)
            throw std::invalid_argument("oracle: N exceeds the brute-force bound 8");
        report::report_document doc;
        doc.command = "oracle";
        doc.params["N"] = std::to_string(arg_N);
        const auto places = resolution::odd_places(arg_N);
        const int P = static_cast<int>(places.size());
        for (int mask = 0; mask < (1 << P); ++mask) {
            std::vector<int> chosen;
            std::string label;
            for (int b = 0; b < P; ++b) {
                if (mask & (1 << b)) {
                    chosen.push_back(places[static_cast<std::size_t>(b)]);
                    label += (label.empty() ? "" : ",") + std::to_string(places[b]);
                }
            }
            report::case_result c;
            c.case_id = "places:[" + label + "]";
            const long long counted = resolution::permutation_count_for_places(arg_N, chosen);
            const long long closed = resolution::combi_closed_count(arg_N, chosen);
            c.route_values["enumerated"] = std::to_string(counted);
            c.route_values["closed_fraction"] = std::to_string(closed);
            c.verdict = counted == closed;
            doc.add(std::move(c));
        }
        doc.sort_canonical();
        emit(state, doc, true);
    });

    // ---- confighom ---------------------------------------------------------
    std::string space_name;
    bool flag_sign = false, flag_theta = false, flag_theta_sign = false, flag_or = false;
    bool flag_ordered = false;
    std::string variant_name = "homology";
    CLI::App* cfg = app.add_subcommand("confighom", "twisted homology of a configuration space");
    cfg->add_option("space", space_name, "euclid|sphere|rp|rp-star|lens|lens-star")->required();
    cfg->add_option("m", arg_m, "manifold dimension")->required();
    cfg->add_option("N", arg_N, "number of points")->required();
    cfg->add_option("--r", arg_r, "lens order");
    cfg->add_flag("--sign", flag_sign, "sign local system");
    cfg->add_flag("--theta", flag_theta, "theta system (theta-tilde on unordered spaces)");
    cfg->add_flag("--theta-sign", flag_theta_sign, "theta-tilde tensor sign system");
    cfg->add_flag("--or", flag_or, "orientation system");
    cfg->add_flag("--ordered", flag_ordered, "ordered configurations");
    cfg->add_option("--variant", variant_name, "homology|cohomology|borel-moore");
    cfg->callback([&] {
        confighom::config_space_spec spec;
        spec.space = space_from_string(space_name);
        spec.m = arg_m;
        spec.N = arg_N;
        spec.r = arg_r;
        spec.ordered = flag_ordered;
        if (flag_sign)
            spec.coeff = confighom::coeff_system::sign_q;
        else if (flag_theta_sign)
            spec.coeff = confighom::coeff_system::theta_tilde_sign_q;
        else if (flag_theta)
            spec.coeff = flag_ordered ? confighom::coeff_system::theta_q
                                      : confighom::coeff_system::theta_tilde_q;
        else if (flag_or)
            spec.coeff = confighom::coeff_system::or_q;
        if (variant_name == "cohomology")
            spec.variant = confighom::variant_kind::cohomology;
        else if (variant_name == "borel-moore" || variant_name == "bm")
            spec.variant = confighom::variant_kind::borel_moore;
        else if (variant_name == "homology")
            spec.variant = confighom::variant_kind::homology;
        else
            throw std::invalid_argument("unknown variant '" + variant_name + "'");

        const auto dims = confighom::config_homology(spec);
        if (state.json) {
            nlohmann::json out;
            out["case"] = spec.describe();
            std::map<int, long long> plain(dims.begin(), dims.end());
            out["dims"] = report::dims_json(plain);
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << spec.describe() << "\n  ";
            if (dims.empty())
                std::cout << "trivial";
            for (const auto& [d, v] : dims)
                std::cout << "{" << d << ": " << v << "} ";
            std::cout << "\n";
        }
    });

    // ---- phi ---------------------------------------------------------------
    CLI::App* phi = app.add_subcommand("phi", "residual fiber polynomial, both routes");
    phi->add_option("N", arg_N, "even point count")->required();
    phi->add_option("m", arg_m, "odd dimension")->required();
    phi->callback([&] {
        const auto closed = resolution::phi_poincare_closed(arg_N, arg_m);
        const auto assembled = resolution::phi_poincare_from_euler(arg_N, arg_m);
        report::report_document doc;
        doc.command = "phi";
        doc.params = {{"N", std::to_string(arg_N)}, {"m", std::to_string(arg_m)}};
        report::case_result c;
        c.case_id = "phi:N=" + std::to_string(arg_N) + ":m=" + std::to_string(arg_m);
        c.route_values["closed_route"] = closed.to_string();
        c.route_values["euler_route"] = assembled.to_string();
        c.verdict = closed == assembled;
        doc.add(std::move(c));
        emit(state, doc, true);
    });

    // ---- leray ---------------------------------------------------------------
    CLI::App* leray = app.add_subcommand("leray", "evaluation-bundle differential consistency");
    leray->add_option("family", family_name, "general|even|odd|lens")->required();
    leray->add_option("m", arg_m)->required();
    leray->add_option("M", arg_M)->required();
    leray->add_option("-T,--truncation", truncation);
    leray->add_option("--r", arg_r);
    leray->add_option("--s", arg_s);
    leray->callback([&] {
        map_space_spec spec{family_from_string(family_name), arg_m, arg_M, false, 0, 0};
        if (spec.family == map_family::lens_equivariant) {
            spec.r = arg_r;
            spec.s = arg_s;
        }
        spec.validate();
        map_space_spec based_spec = spec;
        based_spec.based = true;
        const auto fiber = series::table_closed_form(based_spec);
        const auto total = series::table_closed_form(spec);
        const auto pairs = specseq::leray_dm_pairs(spec);
        const auto qs = pairs.q_values(truncation);

        report::report_document doc;
        doc.command = "leray";
        doc.params = {{"case", spec.case_id()}, {"T", std::to_string(truncation)}};
        report::case_result c;
        c.case_id = "leray:" + spec.case_id();
        c.route_values["fiber"] = fiber.to_string();
        c.route_values["total"] = total.to_string();
        if (pairs.empty)
            c.route_values["dm_pairs"] = "none";
        else
            c.route_values["dm_pairs"] = "q = " + std::to_string(pairs.first_q) + " + " +
                                         std::to_string(pairs.step) + "k";
        c.verdict = specseq::leray_verify(fiber, spec.M, qs, total, truncation);
        doc.add(std::move(c));
        emit(state, doc, true);
    });

    // ---- stable-range ----------------------------------------------------------
    long long arg_k = 0, arg_n = 0, arg_d = 0;
    CLI::App* stable = app.add_subcommand("stable-range", "stability bound (k-n)(d+1)");
    stable->add_option("k", arg_k, "number of polynomials")->required();
    stable->add_option("n", arg_n, "number of variables")->required();
    stable->add_option("d", arg_d, "degree")->required();
    stable->callback([&] {
        const long long bound = series::stable_range_bound(arg_k, arg_n, arg_d);
        if (state.json)
            std::cout << nlohmann::json{{"bound", bound}}.dump(2) << "\n";
        else
            std::cout << bound << "\n";
    });

    // ---- verify-all ----------------------------------------------------------
    CLI::App* verify_all = app.add_subcommand("verify-all", "run the full verification suite");
    verify_all->add_option("-T,--truncation", truncation);
    verify_all->callback([&] { emit(state, verify::verify_all(truncation), true); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return state.exit_code;
}
