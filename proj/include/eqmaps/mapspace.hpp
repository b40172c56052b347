#ifndef EQMAPS_MAPSPACE_HPP
#define EQMAPS_MAPSPACE_HPP

#include <string>

namespace eqmaps {

// The four families of sphere-map spaces the engine knows about. even_maps
// and odd_maps are the spaces of maps commuting with the antipodal action
// (f(-x) = f(x) resp. f(-x) = -f(x)); lens_equivariant is the Z/r family of
// maps of odd spheres with f(zeta x) = zeta^s f(x).
enum class map_family { general, even_maps, odd_maps, lens_equivariant };

struct map_space_spec {
    map_family family = map_family::general;
    int m = 0;  // source sphere dimension
    int M = 0;  // target sphere dimension
    bool based = false;
    int r = 0;  // lens family only
    int s = 0;  // lens family only, 0 < s <= r

    // Throws std::invalid_argument on violated constraints (m >= 1, m < M;
    // lens family needs odd m, M and 0 < s <= r).
    void validate() const;

    // gcd(r, s); the lens family's configuration spaces live on L^m_tau.
    int lens_tau() const;

    std::string case_id() const;
};

std::string to_string(map_family f);
map_family family_from_string(const std::string& name);

}  // namespace eqmaps

#endif
