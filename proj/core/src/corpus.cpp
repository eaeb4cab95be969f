#include "squareham/corpus.hpp"

#include <random>

namespace squareham {

namespace {

// Rotations are counterclockwise dart lists; edge e owns darts 2e, 2e+1.

PlaneMultigraph from_rotations(std::vector<std::vector<int>> rotations, int n_edges,
                               int outer_dart) {
    std::vector<std::array<int, 2>> edges(n_edges);
    for (int e = 0; e < n_edges; ++e) edges[e] = {2 * e, 2 * e + 1};
    return PlaneMultigraph::build(std::move(rotations), std::move(edges), outer_dart);
}

// Two vertices joined by three parallel arcs.
PlaneMultigraph make_theta() {
    return from_rotations({{0, 2, 4}, {5, 3, 1}}, 3, 4);
}

// Outer triangle 0,1,2 with 3 in the middle.
// e0=01 e1=02 e2=03 e3=12 e4=13 e5=23
PlaneMultigraph make_k4() {
    return from_rotations({{0, 4, 2}, {6, 8, 1}, {3, 10, 7}, {11, 5, 9}}, 6, 2);
}

// Outer triangle 0,1,2, inner triangle 3,4,5, rungs 0-3, 1-4, 2-5.
// e0=01 e1=02 e2=03 e3=12 e4=14 e5=25 e6=34 e7=35 e8=45
PlaneMultigraph make_prism() {
    return from_rotations({{0, 4, 2},
                           {6, 8, 1},
                           {3, 10, 7},
                           {12, 14, 5},
                           {16, 13, 9},
                           {11, 15, 17}},
                          9, 2);
}

// Outer square 0,1,2,3, inner square 4,5,6,7, rungs i to i+4.
// e0=01 e1=03 e2=04 e3=12 e4=15 e5=23 e6=26 e7=37 e8=45 e9=47 e10=56 e11=67
PlaneMultigraph make_cube() {
    return from_rotations({{0, 4, 2},
                           {6, 8, 1},
                           {10, 12, 7},
                           {3, 14, 11},
                           {16, 18, 5},
                           {20, 17, 9},
                           {22, 21, 13},
                           {19, 23, 15}},
                          12, 2);
}

// 46-vertex Tutte graph with a fixed planar rotation system; the largest
// face is the outer one.
static const int kTutteRotations[46][3] = {
    {0, 4, 2},
    {1, 6, 8},
    {10, 3, 12},
    {14, 5, 16},
    {7, 18, 20},
    {19, 22, 24},
    {23, 26, 28},
    {27, 30, 32},
    {31, 34, 36},
    {35, 38, 40},
    {39, 11, 42},
    {13, 44, 46},
    {45, 48, 50},
    {49, 54, 52},
    {53, 33, 56},
    {55, 58, 60},
    {59, 62, 64},
    {63, 66, 68},
    {67, 15, 70},
    {17, 72, 74},
    {73, 76, 78},
    {77, 82, 80},
    {81, 61, 84},
    {83, 86, 88},
    {87, 90, 92},
    {91, 94, 96},
    {95, 9, 98},
    {100, 29, 89},
    {102, 101, 104},
    {106, 25, 103},
    {110, 107, 108},
    {112, 97, 109},
    {105, 93, 113},
    {99, 21, 111},
    {57, 116, 114},
    {115, 118, 51},
    {119, 120, 122},
    {121, 124, 41},
    {125, 117, 37},
    {123, 43, 47},
    {85, 128, 126},
    {127, 130, 79},
    {131, 132, 134},
    {133, 136, 69},
    {137, 129, 65},
    {135, 71, 75},
};
static const int kTutteOuterDart = 0;

PlaneMultigraph make_tutte() {
    std::vector<std::vector<int>> rotations(46);
    for (int v = 0; v < 46; ++v)
        rotations[v] = {kTutteRotations[v][0], kTutteRotations[v][1], kTutteRotations[v][2]};
    return from_rotations(std::move(rotations), 69, kTutteOuterDart);
}

} // namespace

PlaneMultigraph named(const std::string& name) {
    if (name == "theta") return make_theta();
    if (name == "k4") return make_k4();
    if (name == "prism") return make_prism();
    if (name == "cube") return make_cube();
    if (name == "tutte") return make_tutte();
    fail(ErrorCode::UnknownName, "no corpus graph named '" + name + "'");
}

PlaneMultigraph random_class_G(int n_target, std::uint64_t seed, bool allow_multi) {
    const int start = allow_multi ? 2 : 4;
    if (n_target < start || n_target % 2 != 0)
        fail(ErrorCode::BadParity, "target size must be even and at least " +
                                       std::to_string(start));

    PlaneMultigraph map = allow_multi ? make_theta() : make_k4();
    std::mt19937_64 rng(seed);
    // rng() % k keeps the stream identical across standard libraries.
    auto pick = [&rng](int k) { return static_cast<int>(rng() % static_cast<unsigned>(k)); };

    while (map.vertex_count() < n_target) {
        const auto faces = trace_faces(map);
        const Face& face = faces[pick(static_cast<int>(faces.size()))];
        const int len = face.size();
        const int i = pick(len);
        int j = pick(len - 1);
        if (j >= i) ++j;
        // Face walks in the class are cycles, so distinct positions carry
        // distinct edges.
        const int arrive_x = face.walk[i];
        const int arrive_y = face.walk[j];
        const int degree_before = map.degree(map.tail(arrive_x));
        map.subdivide_edge(map.edge_of(arrive_x));
        map.subdivide_edge(map.edge_of(arrive_y));
        map.add_chord(arrive_x, arrive_y);
        if (map.degree(map.tail(arrive_x)) != degree_before)
            fail(ErrorCode::DegreeViolation, "expansion changed an old vertex degree");
    }
    return map;
}

} // namespace squareham
