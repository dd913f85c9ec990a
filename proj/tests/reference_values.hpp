#pragma once

// Generated by tests/oracle/mint_reference.py. Do not edit by hand.

#include <complex>

namespace combid::reference {

struct ComplexPoint {
  std::complex<double> argument;
  std::complex<double> value;
};

inline const ComplexPoint kGamma[] = {
    {{1.0, 2.0}, {0.15190400267003615, 0.01980488016185498}},
    {{0.5, 0.5}, {0.8181639995417473, -0.7633138287139826}},
    {{-2.5, 1.5}, {0.003412139564239149, -0.024053490434664735}},
    {{3.25, -4.75}, {0.11967606475194988, 0.007476901534339267}},
    {{-7.3, 0.2}, {0.00022606131515147553, 0.00023065434516651964}},
    {{0.1, 9.0}, {-5.684934191752512e-07, -4.962611139163839e-07}},
    {{8.5, 0.5}, {6990.167218490056, 11918.630854148443}},
    {{-0.5, -3.0}, {0.0010673793768183472, 0.007326453413613273}},
    {{2.0, 6.5}, {-5.330334608955802e-06, 0.0015463718610322778}},
    {{-4.6, -2.2}, {0.00015792299320746263, -3.139847831717691e-05}},
};

inline const ComplexPoint kLogGamma[] = {
    {{1.0, 2.0}, {-1.8760787864309294, 0.12964631630978832}},
    {{0.5, 0.5}, {0.11238724280962312, -0.7507292021220507}},
    {{-2.5, 1.5}, {-3.7175134511917918, -7.7130655258341925}},
    {{3.25, -4.75}, {-2.121018810134082, -6.220790239755782}},
    {{-7.3, 0.2}, {-8.037972572918985, -24.33728675330247}},
    {{0.1, 9.0}, {-14.097044047963877, 10.142440510734916}},
    {{8.5, 0.5}, {9.533672570991898, 1.0403692935463271}},
    {{-0.5, -3.0}, {-4.90576222619839, 1.4261257331230843}},
    {{2.0, 6.5}, {-6.471837885822415, 7.857428614375615}},
    {{-4.6, -2.2}, {-8.734018699685553, 12.37010853317452}},
};

inline const std::complex<double> kBinomialHalfQuarter = {1.0787052023767587, 0.0};
inline const std::complex<double> kSqrtOnePlusI = {1.09868411346781, 0.45508986056222733};
inline const std::complex<double> kFallingProduct = {-3.0, 1.0};
inline const std::complex<double> kProductDifference = {-5.431517966086369, 8.294365339719318};
inline const std::complex<double> kPowerDifference7 = {0.0, -16.0};
inline constexpr double kHarmonic100 = 5.187377517639621;

}  // namespace combid::reference
