#include <doctest.h>

#include <random>

#include "defgen/field.hpp"

using namespace defgen;

TEST_CASE("house area membership") {
    CHECK(in_house_area({10.0, 15.0}));
    CHECK(in_house_area({5.0, 15.0}));    // apex of the two lines
    CHECK(!in_house_area({25.0, 15.0}));  // outside the circle
    CHECK(in_house_area({20.0, 15.0}));   // on the circle
    CHECK(in_house_area({12.0, 8.0}));    // on y = -x + 20
    CHECK(in_house_area({12.0, 22.0}));   // on y = x + 10
    CHECK(!in_house_area({12.0, 7.9}));
    CHECK(!in_house_area({12.0, 22.1}));
    CHECK(!in_house_area({4.0, 15.0}));   // left of the apex
}

TEST_CASE("house area is symmetric about y = 15") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> ux(0.0, 30.0), uy(0.0, 30.0);
    for (int k = 0; k < 2000; ++k) {
        const double x = ux(rng), y = uy(rng);
        CHECK(in_house_area({x, y}) == in_house_area({x, 30.0 - y}));
    }
}

TEST_CASE("low gain zone bounds are inclusive") {
    CHECK(in_low_gain_zone({18.0, 15.0}));
    CHECK(!in_low_gain_zone({14.944, 15.0}));
    CHECK(!in_low_gain_zone({18.0, 9.999}));
    CHECK(in_low_gain_zone({14.945, 10.0}));
    CHECK(in_low_gain_zone({21.960, 20.0}));
    CHECK(!in_low_gain_zone({21.961, 15.0}));
}

TEST_CASE("make_grid dimensions") {
    const FieldSpec spec;
    Grid g = make_grid(spec, 0.25);
    CHECK(g.nx == 244);
    CHECK(g.ny == 120);
    CHECK(g.dx == doctest::Approx(0.25));
    CHECK(g.cell_area() == doctest::Approx(0.0625));

    g = make_grid(spec, 0.5);
    CHECK(g.nx == 122);
    CHECK(g.ny == 60);

    CHECK_THROWS(make_grid(spec, 0.0));
    CHECK_THROWS(make_grid(spec, -0.25));
    CHECK_THROWS(make_grid(spec, 1.5));
}

TEST_CASE("grid covers the field and centers stay inside") {
    const FieldSpec spec;
    for (double res : {1.0, 0.5, 0.3, 0.25, 0.13}) {
        const Grid g = make_grid(spec, res);
        CHECK(g.nx * g.dx == doctest::Approx(spec.width));
        CHECK(g.ny * g.dy == doctest::Approx(spec.height));
        CHECK(g.dx <= res + 1e-12);
        CHECK(g.center(0, 0).x > 0.0);
        CHECK(g.center(g.nx - 1, g.ny - 1).x < spec.width);
        CHECK(g.center(g.nx - 1, g.ny - 1).y < spec.height);
    }
}

TEST_CASE("grid indexing is bijective and row-major in x") {
    const Grid g = make_grid(FieldSpec{}, 0.5);
    CHECK(g.index(0, 0) == 0);
    CHECK(g.index(1, 0) == 1);  // x varies fastest
    CHECK(g.index(0, 1) == static_cast<std::size_t>(g.nx));
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> ui(0, g.nx - 1), uj(0, g.ny - 1);
    for (int k = 0; k < 500; ++k) {
        const int i = ui(rng), j = uj(rng);
        const std::size_t idx = g.index(i, j);
        CHECK(static_cast<int>(idx % g.nx) == i);
        CHECK(static_cast<int>(idx / g.nx) == j);
    }
}
