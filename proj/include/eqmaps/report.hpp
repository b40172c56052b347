#ifndef EQMAPS_REPORT_HPP
#define EQMAPS_REPORT_HPP

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "eqmaps/series.hpp"

namespace eqmaps::report {

struct case_result {
    std::string case_id;
    std::map<std::string, std::string> route_values;
    bool verdict = false;
};

// Machine-readable run report: one entry per verified case, summary counts
// derived from the entries. Entries are kept sorted by case_id.
struct report_document {
    std::string command;
    std::map<std::string, std::string> params;
    std::vector<case_result> results;

    void add(case_result r);
    void sort_canonical();
    long long checked() const { return static_cast<long long>(results.size()); }
    long long passed() const;
    long long failed() const { return checked() - passed(); }
    bool all_passed() const { return failed() == 0; }

    nlohmann::json to_json() const;
    std::string to_text() const;
};

nlohmann::json closed_form_json(const series::rational_expr& e);
nlohmann::json series_json(const series::poincare_series& s);
nlohmann::json dims_json(const std::map<int, long long>& dims);
// Partitions travel as arrays of arrays of 1-based indices.
nlohmann::json partition_json(const std::vector<std::vector<int>>& blocks);

}  // namespace eqmaps::report

#endif
