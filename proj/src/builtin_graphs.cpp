#include "girthcut/errors.hpp"
#include "girthcut/graph.hpp"

#include <array>
#include <string>

namespace girthcut {

namespace {

// Cubic cages and near-cages. All but Petersen are the LCF expansions
// Heawood [5,-5]^7, Pappus [5,7,-7,7,-7,-5]^3, McGee [12,7,-7]^8 and
// Tutte-Coxeter [-13,-9,7,-7,9,13]^5.

constexpr std::array<Edge, 15> kPetersen{{
    {0, 1}, {0, 4}, {0, 5}, {1, 2}, {1, 6}, {2, 3}, {2, 7}, {3, 4},
    {3, 8}, {4, 9}, {5, 7}, {5, 8}, {6, 8}, {6, 9}, {7, 9},
}};

constexpr std::array<Edge, 21> kHeawood{{
    {0, 1},  {0, 5},  {0, 13}, {1, 2},   {1, 10},  {2, 3},   {2, 7},
    {3, 4},  {3, 12}, {4, 5},  {4, 9},   {5, 6},   {6, 7},   {6, 11},
    {7, 8},  {8, 9},  {8, 13}, {9, 10},  {10, 11}, {11, 12}, {12, 13},
}};

constexpr std::array<Edge, 27> kPappus{{
    {0, 1},   {0, 5},   {0, 17},  {1, 2},   {1, 8},   {2, 3},   {2, 13},
    {3, 4},   {3, 10},  {4, 5},   {4, 15},  {5, 6},   {6, 7},   {6, 11},
    {7, 8},   {7, 14},  {8, 9},   {9, 10},  {9, 16},  {10, 11}, {11, 12},
    {12, 13}, {12, 17}, {13, 14}, {14, 15}, {15, 16}, {16, 17},
}};

constexpr std::array<Edge, 36> kMcGee{{
    {0, 1},   {0, 12},  {0, 23},  {1, 2},   {1, 8},   {2, 3},   {2, 19},
    {3, 4},   {3, 15},  {4, 5},   {4, 11},  {5, 6},   {5, 22},  {6, 7},
    {6, 18},  {7, 8},   {7, 14},  {8, 9},   {9, 10},  {9, 21},  {10, 11},
    {10, 17}, {11, 12}, {12, 13}, {13, 14}, {13, 20}, {14, 15}, {15, 16},
    {16, 17}, {16, 23}, {17, 18}, {18, 19}, {19, 20}, {20, 21}, {21, 22},
    {22, 23},
}};

constexpr std::array<Edge, 45> kTutteCoxeter{{
    {0, 1},   {0, 17},  {0, 29},  {1, 2},   {1, 22},  {2, 3},   {2, 9},
    {3, 4},   {3, 26},  {4, 5},   {4, 13},  {5, 6},   {5, 18},  {6, 7},
    {6, 23},  {7, 8},   {7, 28},  {8, 9},   {8, 15},  {9, 10},  {10, 11},
    {10, 19}, {11, 12}, {11, 24}, {12, 13}, {12, 29}, {13, 14}, {14, 15},
    {14, 21}, {15, 16}, {16, 17}, {16, 25}, {17, 18}, {18, 19}, {19, 20},
    {20, 21}, {20, 27}, {21, 22}, {22, 23}, {23, 24}, {24, 25}, {25, 26},
    {26, 27}, {27, 28}, {28, 29},
}};

constexpr std::array<std::string_view, 5> kNames{"petersen", "heawood", "pappus", "mcgee", "tutte_coxeter"};

} // namespace

std::span<const std::string_view> builtin_names() { return kNames; }

Graph builtin(std::string_view name) {
    if (name == "petersen") {
        return Graph(10, kPetersen);
    }
    if (name == "heawood") {
        return Graph(14, kHeawood);
    }
    if (name == "pappus") {
        return Graph(18, kPappus);
    }
    if (name == "mcgee") {
        return Graph(24, kMcGee);
    }
    if (name == "tutte_coxeter") {
        return Graph(30, kTutteCoxeter);
    }
    std::string valid;
    for (auto n : kNames) {
        valid += valid.empty() ? "" : ", ";
        valid += n;
    }
    throw LookupError("unknown built-in graph '" + std::string(name) + "' (valid: " + valid + ")");
}

} // namespace girthcut
