#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <vector>

#include "physarum/diffusion.hpp"
#include "physarum/geometry.hpp"
#include "physarum/grid.hpp"
#include "physarum/metrics.hpp"
#include "physarum/pgm.hpp"
#include "physarum/wave.hpp"

using namespace physarum;

namespace {

Grid open_grid(int w, int h) {
    Grid g;
    g.width = w;
    g.height = h;
    g.cells.resize(static_cast<std::size_t>(w) * h);
    return g;
}

// Reference distance computation: iterate relaxation to a fixed point, no
// queue involved, so errors in the BFS frontier logic cannot be mirrored here.
std::vector<double> relaxed_distances(const GateGeometry& geo, Coord origin) {
    const std::size_t n = static_cast<std::size_t>(geo.width) * geo.height;
    const double inf = 1e18;
    std::vector<double> d(n, inf);
    d[static_cast<std::size_t>(origin.row) * geo.width + origin.col] = 0.0;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int r = 0; r < geo.height; ++r) {
            for (int c = 0; c < geo.width; ++c) {
                if (!geo.accessible({r, c})) continue;
                const std::size_t i = static_cast<std::size_t>(r) * geo.width + c;
                for (const auto& off : kNeighbourOffsets) {
                    const Coord nb{r + off.di, c + off.dj};
                    if (!geo.accessible(nb)) continue;
                    const std::size_t j = static_cast<std::size_t>(nb.row) * geo.width + nb.col;
                    if (d[j] + 1.0 < d[i]) {
                        d[i] = d[j] + 1.0;
                        changed = true;
                    }
                }
            }
        }
    }
    for (auto& v : d)
        if (v >= inf) v = kWaveSentinel;
    return d;
}

GateGeometry random_maze(std::mt19937_64& rng, int w, int h) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    while (true) {
        GateGeometry g;
        g.width = w;
        g.height = h;
        g.name = "random";
        g.mask.assign(static_cast<std::size_t>(w) * h, 1);
        for (auto& m : g.mask) m = u(rng) < 0.35 ? 0 : 1;
        std::uniform_int_distribution<int> rr(0, h - 1), cc(0, w - 1);
        g.input_x = {rr(rng), cc(rng)};
        g.input_y = {rr(rng), cc(rng)};
        g.mask[static_cast<std::size_t>(g.input_x.row) * w + g.input_x.col] = 1;
        g.mask[static_cast<std::size_t>(g.input_y.row) * w + g.input_y.col] = 1;
        if (g.input_x.row == g.input_y.row && g.input_x.col == g.input_y.col) continue;
        g.output_p = {g.input_x};
        g.output_q = {g.input_y};
        return g;
    }
}

}  // namespace

TEST_CASE("one diffusion step on a delta impulse reproduces the kernel") {
    Grid g = open_grid(5, 5);
    g.cells[g.index(2, 2)].smell = 36.0;
    diffuse_smell(g);
    for (int r = 0; r < 5; ++r) {
        for (int c = 0; c < 5; ++c) {
            const int dr = r - 2, dc = c - 2;
            const double expect =
                (std::abs(dr) <= 1 && std::abs(dc) <= 1) ? kSmellKernel[dr + 1][dc + 1] : 0.0;
            CHECK(g.cells[g.index(r, c)].smell == expect);
        }
    }
}

TEST_CASE("diffusion conserves total smell in a closed maze") {
    Grid g = open_grid(10, 10);
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, 10.0);
    for (int r = 0; r < 10; ++r)
        for (int c = 0; c < 10; ++c) {
            auto& cell = g.cells[g.index(r, c)];
            cell.accessible = (r * 10 + c) % 7 != 3;  // scatter walls
            cell.smell = cell.accessible ? u(rng) : 0.0;
        }
    const double before = g.total_smell();
    for (int s = 0; s < 1000; ++s) diffuse_smell(g);
    CHECK(g.total_smell() == Catch::Approx(before).epsilon(1e-9));
}

TEST_CASE("diffusion is local to the 3x3 neighbourhood") {
    Grid a = open_grid(7, 7);
    Grid b = open_grid(7, 7);
    a.cells[a.index(3, 3)].smell = 1.0;
    b.cells[b.index(3, 3)].smell = 1.0;
    b.cells[b.index(0, 0)].smell = 50.0;  // perturbation at Chebyshev distance 3
    diffuse_smell(a);
    diffuse_smell(b);
    CHECK(a.cells[a.index(3, 3)].smell == b.cells[b.index(3, 3)].smell);
    CHECK(a.cells[a.index(2, 2)].smell == b.cells[b.index(2, 2)].smell);
    CHECK(a.cells[a.index(1, 1)].smell != b.cells[b.index(1, 1)].smell);
}

TEST_CASE("walls hold no smell and block none of the conservation") {
    Grid g = open_grid(5, 5);
    g.cells[g.index(2, 2)].accessible = false;
    g.cells[g.index(1, 2)].smell = 9.0;
    for (int s = 0; s < 50; ++s) diffuse_smell(g);
    CHECK(g.cells[g.index(2, 2)].smell == 0.0);
    CHECK(g.total_smell() == Catch::Approx(9.0).epsilon(1e-12));
}

TEST_CASE("food sources replenish after diffusion") {
    Grid g = open_grid(5, 5);
    g.food_sources.push_back({{2, 2}, 5.0});
    g.cells[g.index(2, 2)].smell = 5.0;
    diffuse_smell(g);
    CHECK(g.cells[g.index(2, 2)].smell == 5.0);
    CHECK(g.cells[g.index(2, 1)].smell > 0.0);

    // A richer field is not trimmed down to the source strength.
    g.cells[g.index(2, 2)].smell = 40.0;
    diffuse_smell(g);
    CHECK(g.cells[g.index(2, 2)].smell > 5.0);
}

TEST_CASE("wave field matches an independent relaxation on random mazes") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 25; ++i) {
        const GateGeometry geo = random_maze(rng, 12, 9);
        const auto bfs = generate_wave_field(geo, geo.input_x);
        const auto ref = relaxed_distances(geo, geo.input_x);
        REQUIRE(bfs == ref);
    }
}

TEST_CASE("wave distances use diagonal steps at unit cost") {
    const GateGeometry geo = open_geometry(5, 5);
    const auto field = generate_wave_field(geo, {0, 0});
    CHECK(field[0] == 0.0);
    CHECK(field[static_cast<std::size_t>(4) * 5 + 4] == 4.0);  // pure diagonal
    CHECK(field[static_cast<std::size_t>(0) * 5 + 4] == 4.0);
    CHECK(field[static_cast<std::size_t>(3) * 5 + 1] == 3.0);  // Chebyshev metric
}

TEST_CASE("unreachable pockets keep the sentinel and bad origins throw") {
    const std::string text =
        "X.#.P\n"
        "..#..\n"
        "Y.#.Q\n";
    const GateGeometry geo = parse_maze(text, "pocket");
    const auto field = generate_wave_field(geo, geo.input_x);
    CHECK(field[static_cast<std::size_t>(0) * 5 + 4] == kWaveSentinel);
    CHECK(field[static_cast<std::size_t>(1) * 5 + 1] == 1.0);
    CHECK_THROWS_AS(generate_wave_field(geo, Coord{0, 2}), ConfigurationError);
}

TEST_CASE("min-combining two origins takes the pointwise closer one") {
    const GateGeometry geo = open_geometry(7, 1);
    auto a = generate_wave_field(geo, {0, 0});
    const auto b = generate_wave_field(geo, {0, 6});
    min_combine_wave(a, b);
    const std::vector<double> expect{0, 1, 2, 3, 2, 1, 0};
    CHECK(a == expect);
}

TEST_CASE("wave_for_inputs is empty when no input is active") {
    const GateGeometry geo = open_geometry(5, 5);
    CHECK_FALSE(wave_for_inputs(geo, {false, false}).has_value());
    CHECK(wave_for_inputs(geo, {true, false}).has_value());
    CHECK(wave_for_inputs(geo, {false, true}).has_value());
    CHECK(wave_for_inputs(geo, {true, true}).has_value());
}

TEST_CASE("circularity of symmetric blobs is 1") {
    std::vector<double> mass(25, 0.0);
    mass[2 * 5 + 2] = 4.0;
    mass[1 * 5 + 2] = 1.0;
    mass[3 * 5 + 2] = 1.0;
    mass[2 * 5 + 1] = 1.0;
    mass[2 * 5 + 3] = 1.0;
    const auto c = circularity(mass, 5, 5);
    CHECK_FALSE(c.degenerate);
    CHECK(c.ratio == Catch::Approx(1.0).margin(1e-12));
}

TEST_CASE("a straight line of mass is degenerate") {
    std::vector<double> mass(25, 0.0);
    for (int c = 0; c < 5; ++c) mass[2 * 5 + c] = 1.0;
    const auto r = circularity(mass, 5, 5);
    CHECK(r.degenerate);
    CHECK(std::isinf(r.ratio));
}

TEST_CASE("a point mass is perfectly circular, zero mass is an error") {
    std::vector<double> mass(25, 0.0);
    mass[7] = 3.0;
    const auto c = circularity(mass, 5, 5);
    CHECK(c.ratio == 1.0);
    CHECK_FALSE(c.degenerate);

    const std::vector<double> empty(25, 0.0);
    CHECK_THROWS_AS(circularity(empty, 5, 5), ConfigurationError);
}

TEST_CASE("an elongated blob has a ratio well above 1") {
    std::vector<double> mass(100, 0.0);
    for (int c = 1; c < 9; ++c) {
        mass[4 * 10 + c] = 1.0;
        mass[5 * 10 + c] = 1.0;
    }
    const auto r = circularity(mass, 10, 10);
    CHECK(r.ratio > 5.0);
    CHECK_FALSE(r.degenerate);
}

TEST_CASE("mass frames scale to the frame maximum and blank walls") {
    Grid g = open_grid(3, 2);
    g.cells[g.index(0, 0)].mass = 2.0;
    g.cells[g.index(0, 1)].mass = 1.0;
    g.cells[g.index(1, 2)].accessible = false;
    const std::string frame = render_mass_frame(g);
    const std::string header = "P5\n3 2\n255\n";
    REQUIRE(frame.size() == header.size() + 6);
    CHECK(frame.compare(0, header.size(), header) == 0);
    const auto* px = reinterpret_cast<const unsigned char*>(frame.data() + header.size());
    CHECK(px[0] == 255);
    CHECK(px[1] == 128);  // llround(255 * 0.5)
    CHECK(px[2] == 0);
    CHECK(px[5] == 0);  // wall
}

TEST_CASE("an empty grid renders all black") {
    Grid g = open_grid(4, 4);
    const std::string frame = render_mass_frame(g);
    const std::string header = "P5\n4 4\n255\n";
    for (std::size_t i = header.size(); i < frame.size(); ++i)
        CHECK(static_cast<unsigned char>(frame[i]) == 0);
}

TEST_CASE("wave frames darken with distance and zero the sentinel") {
    const std::vector<double> wave{0.0, 1.0, 2.0, kWaveSentinel};
    const std::string frame = render_wave_frame(wave, 4, 1);
    const std::string header = "P5\n4 1\n255\n";
    const auto* px = reinterpret_cast<const unsigned char*>(frame.data() + header.size());
    CHECK(px[0] == 255);
    CHECK(px[1] > px[2]);
    CHECK(px[2] > 0);
    CHECK(px[3] == 0);
}
