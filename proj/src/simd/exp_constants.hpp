#pragma once

// Shared by every kernel backend so the exp approximation is identical.
//
// exp(y) = 2^n * exp(r), n = nearbyint(y / ln 2), r = y - n ln 2 split in
// two parts (Cody-Waite), exp(r) by a degree-13 Taylor polynomial in
// Horner form with fma. |r| <= ln2/2 so the truncation error is < 1e-17.

namespace covermeasure::simd::detail {

inline constexpr double kLog2e = 1.4426950408889634074;
inline constexpr double kLn2Hi = 6.93147180369123816490e-01;
inline constexpr double kLn2Lo = 1.90821492927058770002e-10;
inline constexpr double kExpLow = -708.0;
inline constexpr double kExpHigh = 709.0;
// 2^52 + 2^51: adding it to a small integral double leaves the integer in
// the low mantissa bits.
inline constexpr double kRoundMagic = 6755399441055744.0;

// 1/13!, 1/12!, ..., 1/2!, 1, 1 (highest degree first).
inline constexpr double kExpCoefficients[] = {
    1.6059043836821614599e-10, 2.0876756987868098979e-09, 2.5052108385441718775e-08,
    2.7557319223985890653e-07, 2.7557319223985890653e-06, 2.4801587301587301587e-05,
    1.9841269841269841270e-04, 1.3888888888888888889e-03, 8.3333333333333333333e-03,
    4.1666666666666666667e-02, 1.6666666666666666667e-01, 5.0000000000000000000e-01,
    1.0,                       1.0,
};
inline constexpr int kExpCoefficientCount = sizeof(kExpCoefficients) / sizeof(kExpCoefficients[0]);

}  // namespace covermeasure::simd::detail
