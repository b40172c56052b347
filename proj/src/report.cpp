#include "eqmaps/report.hpp"

#include <algorithm>
#include <sstream>

namespace eqmaps::report {

void report_document::add(case_result r)
{
    results.push_back(std::move(r));
}

void report_document::sort_canonical()
{
    std::stable_sort(results.begin(), results.end(),
                     [](const case_result& a, const case_result& b) { return a.case_id < b.case_id; });
}

long long report_document::passed() const
{
    long long n = 0;
    for (const case_result& r : results)
        if (r.verdict)
            ++n;
    return n;
}

nlohmann::json report_document::to_json() const
{
    nlohmann::json out;
    out["command"] = command;
    out["params"] = params;
    out["results"] = nlohmann::json::array();
    for (const case_result& r : results) {
        nlohmann::json entry;
        entry["case_id"] = r.case_id;
        entry["route_values"] = r.route_values;
        entry["verdict"] = r.verdict;
        out["results"].push_back(std::move(entry));
    }
    out["summary"] = {{"checked", checked()}, {"passed", passed()}, {"failed", failed()}};
    return out;
}

std::string report_document::to_text() const
{
    std::ostringstream out;
    for (const case_result& r : results) {
        out << (r.verdict ? "[ok]   " : "[FAIL] ") << r.case_id;
        for (const auto& [route, value] : r.route_values)
            out << "\n         " << route << ": " << value;
        out << "\n";
    }
    out << "checked " << checked() << ", passed " << passed() << ", failed " << failed() << "\n";
    return out.str();
}

namespace {

nlohmann::json coeff_array(const std::vector<bigint>& coeffs)
{
    nlohmann::json arr = nlohmann::json::array();
    for (const bigint& c : coeffs) {
        if (!c.fits_slong_p())
            arr.push_back(c.get_str());
        else
            arr.push_back(c.get_si());
    }
    return arr;
}

}  // namespace

nlohmann::json closed_form_json(const series::rational_expr& e)
{
    return {{"num", coeff_array(e.num())}, {"den", coeff_array(e.den())}};
}

nlohmann::json series_json(const series::poincare_series& s)
{
    return coeff_array(s.coeffs());
}

nlohmann::json dims_json(const std::map<int, long long>& dims)
{
    nlohmann::json out = nlohmann::json::object();
    for (const auto& [d, v] : dims)
        out[std::to_string(d)] = v;
    return out;
}

nlohmann::json partition_json(const std::vector<std::vector<int>>& blocks)
{
    nlohmann::json out = nlohmann::json::array();
    for (const auto& block : blocks)
        out.push_back(block);
    return out;
}

}  // namespace eqmaps::report
