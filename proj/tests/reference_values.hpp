#pragma once

// Frozen output of tests/reference/generate_reference.py (mpmath, 120 digits).
// Exactly degenerate cases were evaluated at gamma = 1 + 1e-40.

#include <limits>

#include "celent/params.hpp"

namespace celent::reference {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct MomentCase {
  const char* name;
  SystemParams params;
  double t;
  double n_a, n_b, c_ab, det, v_s;
};

// kappa=0.5 gamma=0.75 omega=0 theta=0.25 A=10
inline constexpr double kOscDisc = -0.17612263885053369442;
inline constexpr double kOscMuRe = 0.25;
inline constexpr double kOscMuIm = 0.52458709782452608231;
inline constexpr double kOscL = 1.5;
inline constexpr double kOscM = 1.5576015661428097365;
inline constexpr double kDrivenB = 10504.0;  // omega=10, gamma=1

// [C+, C-, D+, D-]
inline constexpr double kPropBaselineT1[4] = {2.7258027407499170389, -1.1682011746071073024,
                                              -1.9470019576785121706, 1.9470019576785121706};
inline constexpr double kPropOscT25[4] = {1.9864392915349282814, -1.7119233568701398962,
                                          -1.9201918177732679303, 1.9201918177732679303};

inline const MomentCase kMomentCases[] = {
    {"oscillatory_fig3_t3", {0.5, 0.75, 0, 0.25, 10}, 3, 7.5654532005757015896,
     6.8687484360948202775, 7.4942450250997041394, -4.1985136564287621623, 0.42952798097987166507},
    {"generic_t2", {0.7, 0.6, 3, 0.4, 20}, 2, 7.0301719166696852242, 2.2293073446292427359,
     4.1775568217733024312, -1.7795671113066858304, 0.62328578899609732632},
    {"baseline_t1", {0.5, 1, 0, 0, 10}, 1, 8.4448939244261589937, 4.5102005215524932297,
     6.4775472229893261117, -3.8704530436543868597, 0.41566003095065706561},
    {"baseline_t10", {0.5, 1, 0, 0, 10}, 10, 57.9112364302835052, 47.978615900274359871,
     52.944926165278932536, -24.664237648289788766, 0.53517318017675649124},
    {"baseline_t50", {0.5, 1, 0, 0, 10}, 50, 59.999999981806793537, 49.999999981945672976,
     54.999999981876233256, -24.999999999305602807, 0.54638982799110467535},
    {"baseline_steady", {0.5, 1, 0, 0, 10}, kInf, 60, 50, 55, -25, 0.54638982812739225789},
    {"driven_fig5_t50", {0.5, 1, 10, 0, 10}, 50, 3.969894332233829845e9, 2.1920299274133546048e9,
     2.9499368105755828105e9, -1.4636320550262665391e9, 0.52494318550625920528},
    {"driven_fig8_a100_t30", {0.5, 0.75, 10, 0.25, 100}, 30, 8.5378226189370202896e63,
     5.4313031698914870349e63, 6.8096624772600789954e63, -4.9899696225077723011e63,
     0.28557166741266117835},
    {"driven_fig10_t50", {0.5, 0.75, 10, 0.25, 25}, 50, 2.4869790834220740907e18,
     1.582082221910327915e18, 1.9835839770841328669e18, -1.1686435499123804493e18,
     0.42559550607856283141},
    {"weak_drive_steady", {0.8, 0.5, 0.4, 0.1, 6}, kInf, -0.39199668520910139421,
     0.13963838157169948367, 0.2443779304096801666, -0.11445835557538835001,
     0.02547957071746254392},
};

}  // namespace celent::reference
