#include "eqmaps/mapspace.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace eqmaps {

void map_space_spec::validate() const
{
    if (m < 1)
        throw std::invalid_argument("map_space_spec: source dimension m must be >= 1");
    if (M <= m)
        throw std::invalid_argument("map_space_spec: need m < M");
    if (family == map_family::lens_equivariant) {
        if (m % 2 == 0 || M % 2 == 0)
            throw std::invalid_argument("map_space_spec: lens family needs odd m and M");
        if (r < 1)
            throw std::invalid_argument("map_space_spec: lens family needs r >= 1");
        if (s < 1 || s > r)
            throw std::invalid_argument("map_space_spec: lens family needs 0 < s <= r");
    }
}

int map_space_spec::lens_tau() const
{
    return std::gcd(r, s);
}

std::string map_space_spec::case_id() const
{
    std::ostringstream id;
    id << to_string(family) << ":m=" << m << ":M=" << M;
    if (family == map_family::lens_equivariant)
        id << ":r=" << r << ":s=" << s;
    id << (based ? ":based" : ":free");
    return id.str();
}

std::string to_string(map_family f)
{
    switch (f) {
    case map_family::general: return "general";
    case map_family::even_maps: return "even";
    case map_family::odd_maps: return "odd";
    case map_family::lens_equivariant: return "lens";
    }
    return "?";
}

map_family family_from_string(const std::string& name)
{
    if (name == "general")
        return map_family::general;
    if (name == "even")
        return map_family::even_maps;
    if (name == "odd")
        return map_family::odd_maps;
    if (name == "lens")
        return map_family::lens_equivariant;
    throw std::invalid_argument("unknown map family '" + name +
                                "' (expected general|even|odd|lens)");
}

}  // namespace eqmaps
