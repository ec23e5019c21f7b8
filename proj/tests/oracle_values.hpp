#pragma once

// Generated by tests/oracle/derive_values.py (mpmath, 40 digits).

namespace oracle_values {

inline constexpr double kRuleT4_352 = 0.03442708418040983484;
inline constexpr double kRuleOne_331 = 0.22439947525641380275;
inline constexpr double kRule352Node0 = -1.8090169943749474241;
inline constexpr double kRule352Weight0 = 0.0026532148407661758054;
inline constexpr double kRule352Node1 = -0.6909830056250525759;
inline constexpr double kRule352Weight1 = 0.017126948970503910252;
inline constexpr double kRule352Node2 = 0.0;
inline constexpr double kRule352Weight2 = 0.10471975511965977462;
inline constexpr double kRule352Node3 = 0.75;
inline constexpr double kRule352Weight3 = 0.0066624229113357776981;
inline constexpr double kSquaredT6_231 = 0.00040190296642603800219;
inline constexpr double kSignedT2_321 = 0.049866550056980845055;
inline constexpr double kSignedT_121 = 0.52359877559829887308;
inline constexpr double kSumForm_532_u2 = 0.048495345795241064494;
inline constexpr double kCorollaryC_22 = 0.58904862254808623221;
inline constexpr double kCorollaryB_1 = 1.5707963267948966192;
inline constexpr double kS_57 = 0.1953125;
inline constexpr double kThetaLhs_57 = 0.030679615757712824594;
inline constexpr double kPfU3Re = -0.65294117647058807494;
inline constexpr double kPfU3Im = -1.1882352941176471237;
inline constexpr double kPfT3Re = -0.030962565653581738018;
inline constexpr double kPfT3Im = -0.028978792623338723915;
inline constexpr double kXi_352_m1 = -5.0;
inline constexpr double kEta_352_m1 = 4.9497474683058326708;
inline constexpr double kGlaisher_1 = 0.35921380821474026113;
inline constexpr double kRamanujan_61_b1 = 3.9751625377694324801e-50;
inline constexpr double kLimitTwoCosh_11 = 1.8946339747463045608;
inline constexpr double kFactor131Coeff0 = 2.8284271247461900976;
inline constexpr double kFactor131Coeff1 = 2.8284271247461900976;
inline constexpr double kFactor131Coeff2 = 2.8284271247461900976;
inline constexpr double kFactor131Coeff3 = 1.4142135623730950488;

}  // namespace oracle_values
