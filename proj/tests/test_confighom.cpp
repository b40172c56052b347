#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eqmaps/confighom.hpp"

using namespace eqmaps;
using namespace eqmaps::confighom;
using linalg::graded_dims;

namespace {

config_space_spec spec(space_kind space, int m, int N, coeff_system coeff,
                       variant_kind variant = variant_kind::cohomology, int r = 1,
                       bool ordered = false)
{
    config_space_spec s;
    s.space = space;
    s.m = m;
    s.N = N;
    s.r = r;
    s.ordered = ordered;
    s.coeff = coeff;
    s.variant = variant;
    return s;
}

}  // namespace

TEST_CASE("sign cohomology of lens configurations")
{
    CHECK(config_homology(spec(space_kind::lens, 3, 3, coeff_system::sign_q,
                               variant_kind::cohomology, 2)) == graded_dims{{2, 1}, {5, 1}});
    CHECK(config_homology(spec(space_kind::lens, 3, 4, coeff_system::sign_q,
                               variant_kind::cohomology, 2))
              .empty());
    CHECK(config_homology(spec(space_kind::lens, 5, 5, coeff_system::sign_q,
                               variant_kind::cohomology, 3)) == graded_dims{{8, 1}, {13, 1}});
}

TEST_CASE("constant cohomology of lens and sphere configurations")
{
    for (int N = 1; N <= 6; ++N) {
        CHECK(config_homology(spec(space_kind::lens, 3, N, coeff_system::const_q,
                                   variant_kind::cohomology, 4)) == graded_dims{{0, 1}, {3, 1}});
        CHECK(config_homology(spec(space_kind::sphere, 5, N, coeff_system::const_q)) ==
              graded_dims{{0, 1}, {5, 1}});
    }
    // even spheres: the two-point space collapses, then a single odd class
    CHECK(config_homology(spec(space_kind::sphere, 2, 1, coeff_system::const_q)) ==
          graded_dims{{0, 1}, {2, 1}});
    CHECK(config_homology(spec(space_kind::sphere, 2, 2, coeff_system::const_q)) ==
          graded_dims{{0, 1}});
    CHECK(config_homology(spec(space_kind::sphere, 2, 5, coeff_system::const_q)) ==
          graded_dims{{0, 1}, {3, 1}});
    CHECK(config_homology(spec(space_kind::sphere, 4, 3, coeff_system::const_q)) ==
          graded_dims{{0, 1}, {7, 1}});
}

TEST_CASE("twisted homology of projective configurations")
{
    CHECK(config_homology(spec(space_kind::proj_space, 3, 2, coeff_system::theta_tilde_sign_q,
                               variant_kind::homology)) == graded_dims{{2, 1}, {5, 1}});
    CHECK(config_homology(spec(space_kind::proj_space, 3, 3, coeff_system::theta_tilde_sign_q,
                               variant_kind::homology))
              .empty());
    CHECK(config_homology(spec(space_kind::proj_space, 3, 4, coeff_system::theta_tilde_sign_q,
                               variant_kind::homology)) == graded_dims{{4, 1}, {7, 1}});

    // Borel-Moore side of the same pair
    CHECK(config_homology(spec(space_kind::proj_space, 3, 2, coeff_system::theta_tilde_q,
                               variant_kind::borel_moore)) == graded_dims{{1, 1}, {4, 1}});
}

TEST_CASE("euclid configurations")
{
    CHECK(config_homology(spec(space_kind::euclidean, 3, 4, coeff_system::sign_q)) ==
          graded_dims{{4, 1}});
    CHECK(config_homology(spec(space_kind::euclidean, 3, 5, coeff_system::const_q)) ==
          graded_dims{{0, 1}});
    CHECK(config_homology(spec(space_kind::euclidean, 2, 4, coeff_system::const_q)) ==
          graded_dims{{0, 1}, {1, 1}});
    CHECK(config_homology(spec(space_kind::euclidean, 2, 4, coeff_system::sign_q)).empty());
    CHECK(config_homology(spec(space_kind::euclidean, 2, 1, coeff_system::sign_q)) ==
          graded_dims{{0, 1}});
}

TEST_CASE("even projective spaces vanish or concentrate as stated")
{
    for (int N = 2; N <= 5; ++N) {
        CHECK(config_homology(spec(space_kind::proj_space, 2, N, coeff_system::const_q,
                                   variant_kind::homology)) == graded_dims{{0, 1}, {3, 1}});
        CHECK(config_homology(spec(space_kind::proj_space, 2, N, coeff_system::const_q,
                                   variant_kind::borel_moore))
                  .empty());
        CHECK(config_homology(spec(space_kind::proj_space, 2, N, coeff_system::sign_q,
                                   variant_kind::borel_moore))
                  .empty());
        // the theta-twisted Borel-Moore groups sit at Nm and Nm-(2m-1)
        CHECK(config_homology(spec(space_kind::proj_space, 2, N, coeff_system::theta_tilde_q,
                                   variant_kind::borel_moore)) ==
              graded_dims{{2 * N - 3, 1}, {2 * N, 1}});

        CHECK(config_homology(spec(space_kind::proj_space_punctured, 2, N,
                                   coeff_system::const_q)) == graded_dims{{0, 1}, {1, 1}});
        CHECK(config_homology(spec(space_kind::proj_space_punctured, 2, N, coeff_system::const_q,
                                   variant_kind::borel_moore))
                  .empty());
        CHECK(config_homology(spec(space_kind::proj_space_punctured, 2, N, coeff_system::sign_q,
                                   variant_kind::borel_moore))
                  .empty());
        CHECK(config_homology(spec(space_kind::proj_space_punctured, 4, N,
                                   coeff_system::theta_tilde_q, variant_kind::borel_moore)) ==
              graded_dims{{4 * N - 3, 1}, {4 * N, 1}});
    }
    CHECK(config_homology(spec(space_kind::proj_space, 2, 1, coeff_system::theta_tilde_q,
                               variant_kind::borel_moore)) == graded_dims{{2, 1}});
    CHECK(config_homology(spec(space_kind::proj_space, 2, 1, coeff_system::const_q,
                               variant_kind::borel_moore)) == graded_dims{{0, 1}});
}

TEST_CASE("punctured projective and lens configurations")
{
    CHECK(config_homology(spec(space_kind::proj_space_punctured, 3, 5,
                               coeff_system::theta_tilde_sign_q, variant_kind::homology)) ==
          graded_dims{{6, 1}});
    for (int N = 1; N <= 5; ++N) {
        CHECK(config_homology(spec(space_kind::proj_space_punctured, 3, N,
                                   coeff_system::const_q)) == graded_dims{{0, 1}});
        CHECK(config_homology(spec(space_kind::proj_space_punctured, 3, N,
                                   coeff_system::sign_q)) == graded_dims{{N / 2 * 2, 1}});
        CHECK(config_homology(spec(space_kind::lens_punctured, 3, N, coeff_system::sign_q,
                                   variant_kind::cohomology, 3)) == graded_dims{{N / 2 * 2, 1}});
        CHECK(config_homology(spec(space_kind::lens_punctured, 3, N, coeff_system::const_q,
                                   variant_kind::cohomology, 3)) == graded_dims{{0, 1}});
    }
}

TEST_CASE("orientation systems resolve by parity")
{
    CHECK(config_homology(spec(space_kind::proj_space, 2, 3, coeff_system::or_q,
                               variant_kind::borel_moore)) ==
          config_homology(spec(space_kind::proj_space, 2, 3, coeff_system::theta_tilde_q,
                               variant_kind::borel_moore)));
    CHECK(config_homology(spec(space_kind::sphere, 3, 2, coeff_system::or_q)) ==
          config_homology(spec(space_kind::sphere, 3, 2, coeff_system::const_q)));
}

TEST_CASE("ordered configurations")
{
    CHECK(config_homology(spec(space_kind::proj_space, 3, 3, coeff_system::theta_q,
                               variant_kind::homology, 1, true))
              .empty());
    CHECK(config_homology(spec(space_kind::proj_space, 5, 5, coeff_system::theta_q,
                               variant_kind::homology, 1, true))
              .empty());
    CHECK_THROWS_AS(config_homology(spec(space_kind::proj_space, 4, 3, coeff_system::theta_q,
                                         variant_kind::homology, 1, true)),
                    uncovered_case);

    CHECK(config_homology(spec(space_kind::euclidean, 3, 3, coeff_system::const_q,
                               variant_kind::cohomology, 1, true)) ==
          graded_dims{{0, 1}, {2, 3}, {4, 2}});
    CHECK(config_homology(spec(space_kind::proj_space, 2, 3, coeff_system::const_q,
                               variant_kind::borel_moore, 1, true))
              .empty());
}

TEST_CASE("uncovered cases name the nearest rule")
{
    try {
        config_homology(spec(space_kind::proj_space, 2, 3, coeff_system::sign_q));
        FAIL("expected uncovered_case");
    } catch (const uncovered_case& e) {
        CHECK(e.nearest_rule() == "proj_const_even");
        CHECK(std::string(e.what()).find("B(RP^2, 3)") != std::string::npos);
    }
}

TEST_CASE("spec validation")
{
    CHECK_THROWS_AS(config_homology(spec(space_kind::lens, 4, 2, coeff_system::const_q)),
                    std::invalid_argument);
    CHECK_THROWS_AS(config_homology(spec(space_kind::sphere, 3, 2, coeff_system::theta_tilde_q)),
                    std::invalid_argument);
    CHECK_THROWS_AS(config_homology(spec(space_kind::proj_space, 3, 2, coeff_system::theta_q)),
                    std::invalid_argument);
    CHECK_THROWS_AS(config_homology(spec(space_kind::proj_space, 3, 2, coeff_system::sign_q,
                                         variant_kind::cohomology, 1, true)),
                    std::invalid_argument);
}

TEST_CASE("ordered flat configuration polynomial")
{
    CHECK(ordered_config_poincare(3, 4) ==
          series::laurent_polynomial::from_terms(
              {{0, bigint(1)}, {2, bigint(6)}, {4, bigint(11)}, {6, bigint(6)}}));
    CHECK(ordered_config_poincare(7, 1) ==
          series::laurent_polynomial::from_terms({{0, bigint(1)}}));
    for (int m : {2, 3})
        for (int N = 1; N <= 6; ++N)
            CHECK(ordered_config_poincare(m, N).sum_of_coefficients() == to_bigint(factorial(N)));
}

TEST_CASE("tower polynomial over the punctured projective space")
{
    CHECK(punctured_cover_poincare(3, 2) ==
          series::laurent_polynomial::from_terms(
              {{0, bigint(1)}, {2, bigint(4)}, {4, bigint(3)}}));
    CHECK(punctured_cover_poincare(3, 1) ==
          series::laurent_polynomial::from_terms({{0, bigint(1)}, {2, bigint(1)}}));
    for (int m : {3, 5})
        CHECK(punctured_cover_poincare(m, 3).sum_of_coefficients() == 48);
    CHECK_THROWS_AS(punctured_cover_poincare(2, 3), std::invalid_argument);

    const auto summary = punctured_ordered_theta_summary(3, 4);
    CHECK(summary.dimension == 24);
    CHECK(summary.even_degrees_only);
}

TEST_CASE("covered specs stay within the dimension window")
{
    for (int m = 1; m <= 4; ++m) {
        for (int N = 1; N <= 5; ++N) {
            for (coeff_system coeff : {coeff_system::const_q, coeff_system::sign_q,
                                       coeff_system::theta_tilde_q,
                                       coeff_system::theta_tilde_sign_q}) {
                for (variant_kind variant :
                     {variant_kind::homology, variant_kind::borel_moore}) {
                    for (space_kind space :
                         {space_kind::euclidean, space_kind::sphere, space_kind::proj_space,
                          space_kind::proj_space_punctured, space_kind::lens,
                          space_kind::lens_punctured}) {
                        config_space_spec s = spec(space, m, N, coeff, variant, 2);
                        graded_dims dims;
                        try {
                            dims = config_homology(s);
                        } catch (const std::exception&) {
                            continue;  // invalid or uncovered combinations
                        }
                        for (const auto& [d, v] : dims) {
                            CHECK(v > 0);
                            CHECK(d >= 0);
                            CHECK(d <= m * N);
                        }
                    }
                }
            }
        }
    }
}
