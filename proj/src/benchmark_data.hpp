#pragma once

#include <array>

namespace vortex::data {

extern const std::array<double, 11> kKowalikA;
extern const std::array<double, 11> kKowalikB;

extern const std::array<std::array<double, 4>, 10> kShekelA;
extern const std::array<double, 10> kShekelC;

extern const std::array<double, 4> kHartmanC;
extern const std::array<std::array<double, 3>, 4> kHartman3A;
extern const std::array<std::array<double, 3>, 4> kHartman3P;
extern const std::array<std::array<double, 6>, 4> kHartman6A;
extern const std::array<std::array<double, 6>, 4> kHartman6P;

extern const std::array<std::array<double, 10>, 5> kLangermanA;
extern const std::array<double, 5> kLangermanC2;
extern const std::array<double, 5> kLangermanC;

extern const std::array<double, 4> kFletcherPowellA2;
extern const std::array<double, 4> kFletcherPowellB2;
extern const std::array<double, 2> kFletcherPowellAlpha2;
extern const std::array<double, 25> kFletcherPowellA5;
extern const std::array<double, 25> kFletcherPowellB5;
extern const std::array<double, 5> kFletcherPowellAlpha5;
extern const std::array<double, 100> kFletcherPowellA10;
extern const std::array<double, 100> kFletcherPowellB10;
extern const std::array<double, 10> kFletcherPowellAlpha10;

}  // namespace vortex::data
