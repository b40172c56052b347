#include "eqmaps/verify.hpp"

#include <sstream>

#include "eqmaps/partitions.hpp"
#include "eqmaps/resolution.hpp"
#include "eqmaps/specseq.hpp"

namespace eqmaps::verify {

namespace {

using report::case_result;
using report::report_document;

std::vector<map_space_spec> table_specs()
{
    std::vector<map_space_spec> specs;
    for (map_family family :
         {map_family::general, map_family::even_maps, map_family::odd_maps}) {
        for (int m = 1; m <= 8; ++m)
            for (int M = m + 1; M <= 9; ++M)
                for (bool based : {false, true})
                    specs.push_back({family, m, M, based, 0, 0});
    }
    return specs;
}

std::vector<map_space_spec> lens_specs()
{
    std::vector<map_space_spec> specs;
    for (int m = 1; m <= 7; m += 2)
        for (int M = m + 2; M <= 9; M += 2)
            for (int r : {2, 3, 4, 6})
                for (int s = 1; s <= r; ++s)
                    for (bool based : {false, true})
                        specs.push_back({map_family::lens_equivariant, m, M, based, r, s});
    return specs;
}

case_result series_match_case(const map_space_spec& spec, int T, const std::string& prefix)
{
    const auto closed = series::table_closed_form(spec);
    const auto expected = series::expand(closed, T);
    const auto page = specseq::build_e1(spec, specseq::default_p_min(spec, T));
    const auto assembled = specseq::total_poincare(page, T);

    case_result c;
    c.case_id = prefix + ":" + spec.case_id();
    c.route_values["closed_form"] = closed.to_string();
    c.route_values["e1_series"] = assembled.to_string();
    c.verdict = assembled == expected;
    return c;
}

std::string laurent_str(const series::laurent_polynomial& p)
{
    return p.to_string();
}

}  // namespace

report_document verify_tables(int truncation)
{
    report_document doc;
    doc.command = "verify-tables";
    doc.params["T"] = std::to_string(truncation);
    for (const map_space_spec& spec : table_specs())
        doc.add(series_match_case(spec, truncation, "table"));
    doc.sort_canonical();
    return doc;
}

report_document verify_lens(int truncation)
{
    report_document doc;
    doc.command = "verify-lens";
    doc.params["T"] = std::to_string(truncation);
    for (const map_space_spec& spec : lens_specs())
        doc.add(series_match_case(spec, truncation, "lens"));

    // r = 2 specialisations reproduce the antipodal families cell by cell.
    for (int m = 1; m <= 7; m += 2) {
        for (int M = m + 2; M <= 9; M += 2) {
            for (bool based : {false, true}) {
                const int depth = -(truncation / (M - m)) - 1;
                const map_space_spec even{map_family::even_maps, m, M, based, 0, 0};
                const map_space_spec odd{map_family::odd_maps, m, M, based, 0, 0};
                const map_space_spec lens_even{map_family::lens_equivariant, m, M, based, 2, 2};
                const map_space_spec lens_odd{map_family::lens_equivariant, m, M, based, 2, 1};

                case_result c;
                c.case_id = "lens-r2-even:" + even.case_id();
                c.verdict = specseq::build_e1(even, depth).cells ==
                            specseq::build_e1(lens_even, depth).cells;
                c.route_values["match"] = c.verdict ? "cells equal" : "cells differ";
                doc.add(std::move(c));

                case_result d;
                d.case_id = "lens-r2-odd:" + odd.case_id();
                d.verdict = specseq::build_e1(odd, depth).cells ==
                            specseq::build_e1(lens_odd, depth).cells;
                d.route_values["match"] = d.verdict ? "cells equal" : "cells differ";
                doc.add(std::move(d));
            }
        }
    }
    doc.sort_canonical();
    return doc;
}

report_document verify_euler_routes()
{
    report_document doc;
    doc.command = "verify-euler";
    for (int N = 2; N <= 10; N += 2) {
        for (int s = 0; s <= N / 2 - 1; ++s) {
            const long long via_sum = resolution::horizontal_euler_sum(N, s);
            const long long via_closed = resolution::horizontal_euler_closed(N, s);
            case_result c;
            c.case_id = "euler:N=" + std::to_string(N) + ":s=" + std::to_string(s);
            c.route_values["sum_route"] = std::to_string(via_sum);
            c.route_values["closed_route"] = std::to_string(via_closed);
            c.verdict = via_sum == via_closed;
            if (N <= 8) {
                const long long via_oracle = resolution::permutation_oracle(N, s);
                c.route_values["oracle_route"] = std::to_string(via_oracle);
                c.verdict = c.verdict && via_oracle == via_closed;
            }
            doc.add(std::move(c));
        }
    }
    // Per-place-set counts against the closed fraction.
    for (int N = 2; N <= 8; N += 2) {
        const auto places = resolution::odd_places(N);
        bool all_match = true;
        const int P = static_cast<int>(places.size());
        for (int mask = 0; mask < (1 << P); ++mask) {
            std::vector<int> chosen;
            for (int b = 0; b < P; ++b)
                if (mask & (1 << b))
                    chosen.push_back(places[static_cast<std::size_t>(b)]);
            if (resolution::permutation_count_for_places(N, chosen) !=
                resolution::combi_closed_count(N, chosen))
                all_match = false;
        }
        case_result c;
        c.case_id = "euler-places:N=" + std::to_string(N);
        c.route_values["place_sets"] = std::to_string(1 << P);
        c.verdict = all_match;
        doc.add(std::move(c));
    }
    doc.sort_canonical();
    return doc;
}

report_document verify_phi_routes()
{
    report_document doc;
    doc.command = "verify-phi";
    for (int N = 2; N <= 8; N += 2) {
        for (int m : {1, 3, 5}) {
            const auto closed = resolution::phi_poincare_closed(N, m);
            const auto assembled = resolution::phi_poincare_from_euler(N, m);
            case_result c;
            c.case_id = "phi:N=" + std::to_string(N) + ":m=" + std::to_string(m);
            c.route_values["closed_route"] = laurent_str(closed);
            c.route_values["euler_route"] = laurent_str(assembled);
            c.verdict = closed == assembled &&
                        closed.sum_of_coefficients() == to_bigint(factorial(N - 1));
            doc.add(std::move(c));
        }
    }
    doc.sort_canonical();
    return doc;
}

report_document verify_partition_blocks()
{
    report_document doc;
    doc.command = "verify-partitions";
    for (int n = 2; n <= 6; n += 2) {
        for (int k = 1; k <= n / 2; ++k) {
            for (const auto& part : partitions::enumerate_partitions(n, k, true)) {
                case_result c;
                c.case_id = "partition:n=" + std::to_string(n) + ":" + part.to_string();
                c.route_values["partition"] = report::partition_json(part.blocks()).dump();
                const int expected_degree = n - k - 1;
                const long long expected_rank = partitions::partition_weight(part);
                try {
                    const auto dims = partitions::relative_partition_homology(part);
                    std::ostringstream got;
                    for (const auto& [d, v] : dims)
                        got << "H_" << d << "=" << v << " ";
                    c.route_values["homology"] = got.str();
                    c.route_values["expected"] = "H_" + std::to_string(expected_degree) + "=" +
                                                 std::to_string(expected_rank);
                    c.verdict = dims.size() == 1 && dims.count(expected_degree) == 1 &&
                                dims.at(expected_degree) == expected_rank;
                } catch (const std::exception& e) {
                    c.route_values["error"] = e.what();
                    c.verdict = false;
                }
                doc.add(std::move(c));
            }
        }
    }
    doc.sort_canonical();
    return doc;
}

report_document verify_duality_euler()
{
    report_document doc;
    doc.command = "verify-duality";

    for (int N = 2; N <= 10; N += 2) {
        for (int m : {1, 3, 5, 7}) {
            confighom::config_space_spec hom;
            hom.space = confighom::space_kind::proj_space;
            hom.m = m;
            hom.N = N;
            hom.coeff = confighom::coeff_system::theta_tilde_sign_q;
            hom.variant = confighom::variant_kind::homology;
            confighom::config_space_spec bm = hom;
            bm.coeff = confighom::coeff_system::theta_tilde_q;
            bm.variant = confighom::variant_kind::borel_moore;

            std::map<int, bigint> hterms, bterms;
            for (const auto& [d, v] : confighom::config_homology(hom))
                hterms[d] = to_bigint(v);
            for (const auto& [d, v] : confighom::config_homology(bm))
                bterms[d] = to_bigint(v);
            const auto hpoly = series::laurent_polynomial::from_terms(hterms);
            const auto bpoly = series::laurent_polynomial::from_terms(bterms);

            case_result c;
            c.case_id = "dual:N=" + std::to_string(N) + ":m=" + std::to_string(m);
            c.route_values["homology"] = hpoly.to_string();
            c.route_values["borel_moore"] = bpoly.to_string();
            c.verdict = series::poincare_dual_check(hpoly, bpoly,
                                                    static_cast<long long>(m) * N);
            doc.add(std::move(c));
        }
    }

    // Euler characteristic vanishing of the providers that promise it.
    auto euler_case = [&doc](const std::string& id, const confighom::config_space_spec& spec) {
        std::map<int, bigint> terms;
        for (const auto& [d, v] : confighom::config_homology(spec))
            terms[d] = to_bigint(v);
        case_result c;
        c.case_id = id;
        const bigint chi = series::euler_char(series::laurent_polynomial::from_terms(terms));
        c.route_values["euler"] = chi.get_str();
        c.verdict = chi == 0;
        doc.add(std::move(c));
    };

    for (int m : {1, 3, 5}) {
        for (int r : {1, 2, 3, 4}) {
            for (int N = 1; N <= 6; ++N) {
                confighom::config_space_spec spec;
                spec.space = confighom::space_kind::lens;
                spec.m = m;
                spec.N = N;
                spec.r = r;
                spec.coeff = confighom::coeff_system::const_q;
                euler_case("euler0:lens-const:m=" + std::to_string(m) + ":r=" + std::to_string(r) +
                               ":N=" + std::to_string(N),
                           spec);
            }
            for (int N = 1; N <= 5; N += 2) {
                confighom::config_space_spec spec;
                spec.space = confighom::space_kind::lens;
                spec.m = m;
                spec.N = N;
                spec.r = r;
                spec.coeff = confighom::coeff_system::sign_q;
                euler_case("euler0:lens-sign:m=" + std::to_string(m) + ":r=" + std::to_string(r) +
                               ":N=" + std::to_string(N),
                           spec);
            }
        }
        for (int N = 2; N <= 6; N += 2) {
            confighom::config_space_spec spec;
            spec.space = confighom::space_kind::proj_space;
            spec.m = m;
            spec.N = N;
            spec.coeff = confighom::coeff_system::theta_tilde_sign_q;
            euler_case("euler0:proj-theta-sign:m=" + std::to_string(m) +
                           ":N=" + std::to_string(N),
                       spec);
        }
    }
    doc.sort_canonical();
    return doc;
}

report_document verify_leray(int truncation)
{
    report_document doc;
    doc.command = "verify-leray";
    doc.params["T"] = std::to_string(truncation);

    auto leray_case = [&doc, truncation](map_space_spec free_spec) {
        free_spec.based = false;
        map_space_spec based_spec = free_spec;
        based_spec.based = true;

        const auto fiber = series::table_closed_form(based_spec);
        const auto total = series::table_closed_form(free_spec);
        const auto pairs = specseq::leray_dm_pairs(free_spec).q_values(truncation);

        case_result c;
        c.case_id = "leray:" + free_spec.case_id();
        c.route_values["fiber"] = fiber.to_string();
        c.route_values["total"] = total.to_string();
        c.route_values["dm_pairs"] = std::to_string(pairs.size());
        try {
            c.verdict = specseq::leray_verify(fiber, free_spec.M, pairs, total, truncation);
        } catch (const std::exception& e) {
            c.route_values["error"] = e.what();
            c.verdict = false;
        }
        doc.add(std::move(c));
    };

    for (map_family family :
         {map_family::general, map_family::even_maps, map_family::odd_maps}) {
        for (int m = 1; m <= 8; ++m)
            for (int M = m + 1; M <= 9; ++M)
                leray_case({family, m, M, false, 0, 0});
    }
    for (int m = 1; m <= 7; m += 2)
        for (int M = m + 2; M <= 9; M += 2)
            leray_case({map_family::lens_equivariant, m, M, false, 2, 1});

    doc.sort_canonical();
    return doc;
}

report_document verify_structural(int truncation)
{
    report_document doc;
    doc.command = "verify-structure";
    doc.params["T"] = std::to_string(truncation);

    std::vector<map_space_spec> specs = table_specs();
    for (const map_space_spec& spec : lens_specs())
        specs.push_back(spec);

    for (const map_space_spec& spec : specs) {
        const auto page = specseq::build_e1(spec, specseq::default_p_min(spec, truncation));
        case_result c;
        c.case_id = "structure:" + spec.case_id();
        const bool wedge_ok = specseq::wedge_support_check(page);
        const auto status = specseq::degeneration_status(page);
        c.route_values["wedge"] = wedge_ok ? "inside" : "violated";
        c.route_values["degeneration"] = specseq::to_string(status);
        c.verdict = wedge_ok && status != specseq::degeneration::unknown;
        doc.add(std::move(c));
    }
    doc.sort_canonical();
    return doc;
}

report_document verify_all(int truncation)
{
    report_document doc;
    doc.command = "verify-all";
    doc.params["T"] = std::to_string(truncation);
    for (const report_document& part :
         {verify_tables(truncation), verify_lens(truncation), verify_euler_routes(),
          verify_phi_routes(), verify_partition_blocks(), verify_duality_euler(),
          verify_leray(truncation), verify_structural(truncation)}) {
        for (const case_result& r : part.results)
            doc.add(r);
    }
    doc.sort_canonical();
    return doc;
}

}  // namespace eqmaps::verify
