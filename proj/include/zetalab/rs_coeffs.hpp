#pragma once

// Chebyshev coefficients (on z = 2p - 1 in [-1,1]) of the
// Riemann-Siegel correction terms C0..C4, generated by
// scripts/gen_rs_coeffs.py from high-precision residual
// fits.  Do not edit by hand.

#include <array>

namespace zetalab::detail {

inline constexpr std::array<double, 19> rs_c0_cheb = {
    0.6426672862397683,
    7.401486830834377e-17,
    0.27197299999785496,
    8.326672684688674e-17,
    0.010738605819340228,
    6.938893903907228e-17,
    -0.0013743815296337236,
    -1.3877787807814457e-17,
    -0.00012468221880318166,
    1.850371707708594e-17,
    -5.764599706395192e-07,
    -1.6653345369377348e-16,
    2.7280674297358587e-07,
    -3.700743415417188e-17,
    8.0779529840376e-09,
    -8.326672684688674e-17,
    -2.0884620768879536e-10,
    1.0177044392397268e-16,
    -1.3115469069587455e-11,
};

inline constexpr std::array<double, 20> rs_c1_cheb = {
    3.5684707503739564e-15,
    0.010697913921003305,
    -3.828245590901483e-15,
    0.017170651243377737,
    1.3166551182663966e-15,
    0.0027932111497884445,
    -4.773380764729514e-16,
    -3.63756537194005e-05,
    5.554006328919077e-16,
    -2.710895523118717e-05,
    -9.656627349604226e-17,
    -1.048374986586499e-06,
    1.607510421071841e-16,
    5.8864671541715517e-08,
    1.7058114180438602e-16,
    4.322967006554438e-09,
    -5.695675412790516e-16,
    -1.1369829809997992e-11,
    4.58545238816536e-16,
    -6.699902857625524e-12,
};

inline constexpr std::array<double, 21> rs_c2_cheb = {
    0.0031461158528456115,
    -8.655351283783086e-14,
    -0.002308783883283629,
    3.827297817502369e-14,
    5.769820722936247e-05,
    7.839368983246959e-15,
    0.00035238862040433774,
    3.15898565986239e-14,
    2.5246667317344122e-05,
    6.779606534732899e-15,
    -3.4428211753208478e-06,
    -2.26536996626725e-14,
    -3.535074938949307e-07,
    2.7832933440635754e-14,
    3.730794139919853e-09,
    6.037224395174141e-14,
    1.277820894437607e-09,
    5.2939730868737746e-14,
    2.1769991833175382e-11,
    1.577080705972867e-14,
    -1.9132203044329877e-12,
};

inline constexpr std::array<double, 16> rs_c3_cheb = {
    1.8548098792163246e-10,
    7.1232574390673e-05,
    -2.0506933079609776e-10,
    0.0002323430480736784,
    7.321287885092413e-11,
    -0.00012929912125831094,
    -2.8773664292730436e-11,
    1.807449283948186e-05,
    1.7834032679766942e-11,
    6.526184535528861e-06,
    -2.4329169276343537e-12,
    -1.169609451863748e-07,
    4.1533002397168536e-12,
    -7.349776588291339e-08,
    3.6308310371217672e-12,
    -1.781634578048675e-09,
};

inline constexpr std::array<double, 15> rs_c4_cheb = {
    0.00016764139629189644,
    -8.769123091707273e-10,
    -0.00022726974355816127,
    3.2188159006170155e-10,
    6.476737331958984e-05,
    2.3640396100267743e-11,
    -8.48961539304392e-06,
    1.8944716185171785e-10,
    -2.6173179835924572e-06,
    2.997670303169923e-11,
    8.338150429648716e-07,
    -1.4767078240828044e-10,
    6.304072591019376e-08,
    1.5262547673082875e-10,
    -1.0235060113929417e-08,
};

}  // namespace zetalab::detail
