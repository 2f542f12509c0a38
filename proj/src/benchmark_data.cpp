#include "benchmark_data.hpp"

// Constant tables for the fixed-data benchmark functions.

namespace vortex::data {

const std::array<double, 11> kKowalikA = {0.1957, 0.1947, 0.1735, 0.1600, 0.0844, 0.0627,
                                           0.0456, 0.0342, 0.0323, 0.0235, 0.0246};
// Reciprocals of 0.25, 0.5, 1, 2, 4, 6, 8, 10, 12, 14, 16.
const std::array<double, 11> kKowalikB = {4.0,       2.0,        1.0,       0.5,
                                           0.25,      1.0 / 6.0,  0.125,     0.1,
                                           1.0 / 12.0, 1.0 / 14.0, 0.0625};

const std::array<std::array<double, 4>, 10> kShekelA = {{
    {4, 4, 4, 4},
    {1, 1, 1, 1},
    {8, 8, 8, 8},
    {6, 6, 6, 6},
    {3, 7, 3, 7},
    {2, 9, 2, 9},
    {5, 5, 3, 3},
    {8, 1, 8, 1},
    {6, 2, 6, 2},
    {7, 3.6, 7, 3.6},
}};
const std::array<double, 10> kShekelC = {0.1, 0.2, 0.2, 0.4, 0.4, 0.6, 0.3, 0.7, 0.5, 0.5};

const std::array<double, 4> kHartmanC = {1.0, 1.2, 3.0, 3.2};
const std::array<std::array<double, 3>, 4> kHartman3A = {{
    {3.0, 10.0, 30.0},
    {0.1, 10.0, 35.0},
    {3.0, 10.0, 30.0},
    {0.1, 10.0, 35.0},
}};
const std::array<std::array<double, 3>, 4> kHartman3P = {{
    {0.3689, 0.1170, 0.2673},
    {0.4699, 0.4387, 0.7470},
    {0.1091, 0.8732, 0.5547},
    {0.03815, 0.5743, 0.8828},
}};
const std::array<std::array<double, 6>, 4> kHartman6A = {{
    {10.0, 3.0, 17.0, 3.5, 1.7, 8.0},
    {0.05, 10.0, 17.0, 0.1, 8.0, 14.0},
    {3.0, 3.5, 1.7, 10.0, 17.0, 8.0},
    {17.0, 8.0, 0.05, 10.0, 0.1, 14.0},
}};
const std::array<std::array<double, 6>, 4> kHartman6P = {{
    {0.1312, 0.1696, 0.5569, 0.0124, 0.8283, 0.5886},
    {0.2329, 0.4135, 0.8307, 0.3736, 0.1004, 0.9991},
    {0.2348, 0.1451, 0.3522, 0.2883, 0.3047, 0.6650},
    {0.4047, 0.8828, 0.8732, 0.5743, 0.1091, 0.0381},
}};

const std::array<std::array<double, 10>, 5> kLangermanA = {{
    {9.681, 0.667, 4.783, 9.095, 3.517, 9.325, 6.544, 0.211, 5.122, 2.020},
    {9.400, 2.041, 3.788, 7.931, 2.882, 2.672, 3.568, 1.284, 7.033, 7.374},
    {8.025, 9.152, 5.114, 7.621, 4.564, 4.711, 2.996, 6.126, 0.734, 4.982},
    {2.196, 0.415, 5.649, 6.979, 9.510, 9.166, 6.304, 6.054, 9.377, 1.426},
    {8.074, 8.777, 3.467, 1.863, 6.708, 6.349, 4.534, 0.276, 7.633, 1.567},
}};
// The 2-D table variant uses 0.1 for the third weight; the 5-D and 10-D
// variants use 1.5. These reproduce the published minima -1.0809384 (2-D)
// and -1.4999992 (5-D).
const std::array<double, 5> kLangermanC2 = {0.806, 0.517, 0.1, 0.908, 0.965};
const std::array<double, 5> kLangermanC = {0.806, 0.517, 1.5, 0.908, 0.965};

// Fletcher-Powell: a, b are integer matrices on [-100, 100] and alpha is
// uniform on [-pi, pi], drawn once from numpy.random.RandomState(20160225)
// in the order a2, b2, alpha2, a5, b5, alpha5, a10, b10, alpha10.
// Row-major, a[i][j] at index i * d + j.
const std::array<double, 4> kFletcherPowellA2 = {
    67, 45, 12, -79};
const std::array<double, 4> kFletcherPowellB2 = {
    16, -13, -59, 25};
const std::array<double, 2> kFletcherPowellAlpha2 = {
    1.6850678522431233, -2.7682343603017014};

const std::array<double, 25> kFletcherPowellA5 = {
    -46, -56, 73, -34, -42, -33, -4, 95, 80, -12, -99, -64, 80, 48, 6, -51, 68, -71, 22, -10,
    32, -16, -29, 34, 46};
const std::array<double, 25> kFletcherPowellB5 = {
    100, 68, -47, -13, 54, -59, 1, 77, 29, 96, 23, 32, -29, -26, 97, -35, -76, -48, 66, 48,
    -60, -55, 28, 36, 99};
const std::array<double, 5> kFletcherPowellAlpha5 = {
    2.9469995922930652, 0.1791668546446239, 2.8528937450026781, -1.3833954799697223,
    1.2601988062535847};

const std::array<double, 100> kFletcherPowellA10 = {
    -10, -65, 54, 70, 62, 14, -55, -12, -65, -32, -8, -29, -49, -77, 44, -100, -7, 7, 72, -19,
    -25, -27, -28, 97, -51, -98, -6, 52, -26, 18, -100, -90, -38, -45, 81, 35, 31, 86, -41, 8,
    9, 47, 83, 91, -8, -20, 28, 85, 1, 22, 96, -90, 89, -41, -67, 72, -8, -48, -26, -84, 44,
    -34, -56, -42, 70, 26, 23, 90, -75, 83, 32, 99, 37, -68, -25, -22, -48, 53, -24, -45, -23,
    -98, 36, 90, 7, -91, 57, -92, 89, 42, 62, -51, -94, -50, -82, 27, -60, 49, -45, -33};
const std::array<double, 100> kFletcherPowellB10 = {
    -17, 61, 79, 92, 14, 84, 32, -35, 88, 51, 69, -5, 48, -64, 53, 27, 77, -76, -21, 54, -100,
    42, -51, 8, -33, -51, -83, 6, 7, 75, 9, 8, 34, -47, -95, 93, -77, 27, -66, -70, -10, 27,
    92, -90, -28, 3, 74, -80, -78, 99, 90, -53, -10, 97, -39, -69, 98, 12, 68, -6, -41, 30,
    -35, -16, -69, 11, -11, -75, -34, 10, -65, -26, -76, 14, -79, -25, 100, -79, -97, 51, 63,
    97, -28, 7, -73, -8, -2, -4, -44, -92, -30, -43, 30, 91, 90, -95, -23, 26, 68, -6};
const std::array<double, 10> kFletcherPowellAlpha10 = {
    -2.6569658928889668, 1.2265843331516093, 3.0509673269712501, -0.30023819165173782,
    -1.7394246204293515, -1.6763878430974399, 0.10021945517227815, 1.5831963932752773,
    1.9119931765852991, 0.53007998409085966};

}  // namespace vortex::data
