#pragma once

// Published value tables, transcribed verbatim. Index k of a *_neg array is
// the term at -k.

#include <array>

namespace tables {

inline constexpr std::array<long, 14> M_pos{0, 1, 1, 2, 4, 8, 15, 29, 56, 108, 208, 401, 773, 1490};
inline constexpr std::array<long, 14> M_neg{0, 0, 0, 1, -1, 0, 0, 2, -3, 1, 0, 4, -8, 5};
inline constexpr std::array<long, 14> R_pos{4, 1, 3, 7, 15, 26, 51, 99, 191, 367, 708, 1365, 2631, 5071};
inline constexpr std::array<long, 14> R_neg{4, -1, -1, -1, 7, -6, -1, -1, 15, -19, 4, -1, 31, -53};

inline constexpr std::array<const char*, 10> GM_pos{"0",    "1",    "1+i",   "2+i",   "4+2i",
                                                    "8+4i", "15+8i", "29+15i", "56+29i", "108+56i"};
inline constexpr std::array<const char*, 10> GM_neg{"0", "0", "i", "1-i", "-1", "0", "2i", "2-3i", "-3+i", "1"};

inline constexpr std::array<const char*, 9> GR_pos{"4-i",    "1+4i",   "3+i",    "7+3i",   "15+7i",
                                                   "26+15i", "51+26i", "99+51i", "191+99i"};
inline constexpr std::array<const char*, 9> GR_neg{"4-i", "-1-i", "-1-i", "-1+7i", "7-6i",
                                                   "-6-i", "-1-i", "-1+15i", "15-19i"};

inline constexpr std::array<long, 15> U_pos{0, 0, 1, 1, 2, 4, 8, 15, 29, 56, 108, 208, 401, 773, 1490};
inline constexpr std::array<long, 15> U_neg{0, 0, 1, -1, 0, 0, 2, -3, 1, 0, 4, -8, 5, -1, 8};

}  // namespace tables
