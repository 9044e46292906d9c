#pragma once

#include <array>
#include <map>
#include <string_view>

namespace coentropy::known {

struct PairRow {
  std::string_view first;
  std::string_view second;
  // Closed form as prime -> "p/q" coefficient; empty when only a decimal is known.
  std::array<std::pair<long, std::string_view>, 4> closed_form;
  std::string_view decimal;  // printed decimal when no closed form is given
};

/// Coentropic, non-cospectral pairs on 9 vertices (1-based edge lists).
inline constexpr std::array<PairRow, 8> kNineVertexPairs{{
    {"{{1, 8}, {1, 9}, {2, 8}, {2, 9}, {3, 8}, {3, 9}, {4, 8}, {4, 9}, {5, 8}, {5, 9}, {6, 8}, {6, 9}, "
     "{7, 8}, {7, 9}, {8, 9}}",
     "{{1, 7}, {1, 8}, {1, 9}, {2, 7}, {2, 8}, {2, 9}, {3, 7}, {3, 8}, {3, 9}, {4, 9}, {5, 9}, {6, 9}, "
     "{7, 8}, {7, 9}, {8, 9}}",
     {{{2, "3/5"}, {3, "-1/5"}, {5, "1"}, {0, ""}}},
     ""},
    {"{{1, 7}, {1, 8}, {1, 9}, {2, 7}, {2, 8}, {2, 9}, {3, 7}, {3, 8}, {3, 9}, {4, 7}, {4, 8}, {4, 9}, "
     "{5, 7}, {5, 8}, {5, 9}, {6, 9}, {7, 8}, {7, 9}, {8, 9}}",
     "{{1, 6}, {1, 7}, {1, 8}, {1, 9}, {2, 6}, {2, 7}, {2, 8}, {2, 9}, {3, 8}, {3, 9}, {4, 8}, {4, 9}, "
     "{5, 9}, {6, 7}, {6, 8}, {6, 9}, {7, 8}, {7, 9}, {8, 9}}",
     {{{2, "-5/19"}, {3, "-15/19"}, {19, "1"}, {0, ""}}},
     ""},
    {"{{1, 5}, {1, 8}, {1, 9}, {2, 6}, {2, 8}, {2, 9}, {3, 7}, {3, 8}, {3, 9}, {4, 8}, {4, 9}, {5, 8}, "
     "{5, 9}, {6, 8}, {6, 9}, {7, 8}, {7, 9}, {8, 9}}",
     "{{1, 7}, {1, 8}, {1, 9}, {2, 7}, {2, 8}, {2, 9}, {3, 7}, {3, 8}, {3, 9}, {4, 7}, {4, 8}, {4, 9}, "
     "{5, 7}, {5, 8}, {5, 9}, {6, 9}, {7, 9}, {8, 9}}",
     {{{2, "7/6"}, {3, "1"}, {0, ""}, {0, ""}}},
     ""},
    {"{{1, 6}, {1, 7}, {1, 8}, {1, 9}, {2, 6}, {2, 7}, {2, 8}, {2, 9}, {3, 8}, {3, 9}, {4, 8}, {4, 9}, "
     "{5, 9}, {6, 7}, {6, 8}, {6, 9}, {7, 8}, {7, 9}}",
     "{{1, 7}, {1, 8}, {1, 9}, {2, 7}, {2, 8}, {2, 9}, {3, 7}, {3, 8}, {3, 9}, {4, 7}, {4, 8}, {4, 9}, "
     "{5, 7}, {5, 8}, {5, 9}, {6, 9}, {7, 8}, {7, 9}}",
     {{{0, ""}, {0, ""}, {0, ""}, {0, ""}}},
     "1.91025843"},
    {"{{1, 6}, {1, 7}, {1, 8}, {1, 9}, {2, 6}, {2, 7}, {2, 8}, {2, 9}, {3, 8}, {3, 9}, {4, 8}, {4, 9}, "
     "{5, 8}, {5, 9}, {6, 7}, {6, 8}, {6, 9}, {7, 8}, {7, 9}, {8, 9}}",
     "{{1, 7}, {1, 8}, {1, 9}, {2, 7}, {2, 8}, {2, 9}, {3, 7}, {3, 8}, {3, 9}, {4, 7}, {4, 8}, {4, 9}, "
     "{5, 7}, {5, 8}, {5, 9}, {6, 8}, {6, 9}, {7, 8}, {7, 9}, {8, 9}}",
     {{{2, "47/20"}, {3, "-6/5"}, {5, "1"}, {0, ""}}},
     ""},
    {"{{1, 6}, {1, 7}, {1, 8}, {1, 9}, {2, 6}, {2, 7}, {2, 8}, {2, 9}, {3, 8}, {3, 9}, {4, 8}, {4, 9}, "
     "{5, 8}, {5, 9}, {6, 7}, {6, 8}, {6, 9}, {7, 8}, {7, 9}}",
     "{{1, 7}, {1, 8}, {1, 9}, {2, 7}, {2, 8}, {2, 9}, {3, 7}, {3, 8}, {3, 9}, {4, 7}, {4, 8}, {4, 9}, "
     "{5, 7}, {5, 8}, {5, 9}, {6, 7}, {6, 8}, {7, 9}, {8, 9}}",
     {{{2, "6/19"}, {3, "-15/19"}, {7, "-7/38"}, {19, "1"}}},
     ""},
    {"{{1, 4}, {1, 5}, {1, 7}, {1, 8}, {1, 9}, {2, 6}, {2, 9}, {3, 6}, {3, 9}, {4, 5}, {4, 7}, {4, 8}, "
     "{4, 9}, {5, 7}, {5, 8}, {5, 9}, {6, 9}, {7, 8}, {7, 9}, {8, 9}}",
     "{{1, 5}, {1, 8}, {1, 9}, {2, 6}, {2, 7}, {2, 8}, {2, 9}, {3, 6}, {3, 7}, {3, 8}, {3, 9}, {4, 8}, "
     "{4, 9}, {5, 8}, {5, 9}, {6, 8}, {6, 9}, {7, 8}, {7, 9}, {8, 9}}",
     {{{2, "43/20"}, {3, "-21/20"}, {5, "1"}, {0, ""}}},
     ""},
    {"{{1, 4}, {1, 6}, {1, 7}, {1, 8}, {1, 9}, {2, 5}, {2, 6}, {2, 7}, {2, 8}, {2, 9}, {3, 9}, {4, 6}, "
     "{4, 7}, {4, 8}, {4, 9}, {5, 6}, {5, 7}, {5, 8}, {5, 9}, {6, 8}, {6, 9}, {7, 8}, {7, 9}, {8, 9}}",
     "{{1, 6}, {1, 7}, {1, 8}, {1, 9}, {2, 6}, {2, 7}, {2, 8}, {2, 9}, {3, 6}, {3, 7}, {3, 8}, {3, 9}, "
     "{4, 6}, {4, 7}, {4, 8}, {4, 9}, {5, 8}, {5, 9}, {6, 7}, {6, 8}, {6, 9}, {7, 8}, {7, 9}, {8, 9}}",
     {{{2, "59/24"}, {3, "1/4"}, {0, ""}, {0, ""}}},
     ""},
}};

/// 8-vertex example: un-normalized Laplacian spectra and the shared entropy
/// ln 34 - (18 ln 3 + 54 ln 2) / 34.
inline constexpr int kExampleOrder = 8;
inline constexpr int kExampleEdges = 17;
inline constexpr std::array<long, 8> kExampleSpectrumA{0, 3, 3, 3, 3, 6, 8, 8};
inline constexpr std::array<long, 8> kExampleSpectrumB{0, 2, 2, 4, 6, 6, 6, 8};
inline constexpr std::array<std::pair<long, std::string_view>, 3> kExampleEntropy{
    {{2, "-10/17"}, {3, "-9/17"}, {17, "1"}}};

/// Reported pair counts for n = 8, 9, 10.
inline constexpr std::array<std::pair<int, int>, 3> kPairCounts{{{8, 2}, {9, 8}, {10, 76}}};

}  // namespace coentropy::known
