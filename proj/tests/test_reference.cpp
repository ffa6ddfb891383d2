#include <doctest.h>

#include "anncode/reference_checks.hpp"

using namespace anncode;

TEST_SUITE("reference") {

TEST_CASE("all worked examples pass in a fixed order") {
    const auto results = run_reference_checks();
    const std::vector<std::string> names = {
        "example1", "example2", "example3", "table1", "example4_lexigraph", "example5", "example6",
        "gamma_t_2", "gamma_t_3", "gamma_t_4", "gamma_prime", "sum_dimension", "union_subspace",
        "homomorphism"};
    REQUIRE(results.size() == names.size());
    for (std::size_t i = 0; i < names.size(); ++i) {
        CHECK(results[i].name == names[i]);
        CHECK_MESSAGE(results[i].passed, results[i].detail);
    }
}

TEST_CASE("mutated builders are caught") {
    ReferenceBuilders star;
    star.star_into_leaf = [](int k) {
        GroundGraph g = anncode::star_into_leaf(k);
        g.add_edge(0, 1);  // the leaf is no longer a sink
        return g;
    };
    CHECK(!run_reference_checks(star).front().passed);

    ReferenceBuilders gam;
    gam.gamma_t = [](int t) {
        GroundGraph g = anncode::gamma_t(t);
        g.add_edge(gamma_t_x(t, 1), gamma_t_x(t, 2));
        return g;
    };
    CHECK(!check_gamma_t(2, gam).passed);
    CHECK(check_gamma_t(2).passed);
}

}  // TEST_SUITE
