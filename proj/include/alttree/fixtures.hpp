#pragma once

#include <array>
#include <string_view>

namespace alttree::fixtures {

/// A permutation together with its statistics and its image tree.
struct Column {
  std::string_view word;
  int first;
  int inv;
  int occ_31_2;
  std::string_view tree;  // parent-array text
  int leaf;
};

/// Every recursion level met while mapping 748591623, smallest first. Each
/// column's image is built from the image of the column before it (or the
/// one two columns before, after a size-reducing level).
inline constexpr std::array<Column, 12> kConstructionChain{{
    {"1", 1, 0, 0, "0", 1},
    {"213", 2, 1, 0, "0 1 1", 2},
    {"312", 3, 2, 1, "0 1 2", 3},
    {"21534", 2, 3, 1, "0 1 1 3 4", 2},
    {"31524", 3, 4, 2, "0 1 2 1 4", 3},
    {"41523", 4, 5, 3, "0 1 1 2 3", 4},
    {"51423", 5, 6, 4, "0 1 1 3 2", 5},
    {"5471623", 5, 13, 4, "0 1 1 2 4 3 4", 5},
    {"6471523", 6, 14, 5, "0 1 1 2 3 4 4", 6},
    {"548691723", 5, 21, 5, "0 1 1 2 4 4 3 6 6", 5},
    {"648591723", 6, 22, 6, "0 1 1 2 4 5 3 4 5", 6},
    {"748591623", 7, 23, 7, "0 1 1 2 4 3 5 4 5", 7},
}};

/// The whole of A_4 with images. `inv` is the inversion count.
inline constexpr std::array<Column, 5> kSizeFour{{
    {"2143", 2, 2, 0, "0 1 1 3", 2},
    {"3142", 3, 3, 1, "0 1 2 1", 3},
    {"3241", 3, 4, 0, "0 1 2 2", 3},
    {"4132", 4, 4, 2, "0 1 1 2", 4},
    {"4231", 4, 5, 1, "0 1 2 3", 4},
}};

/// Row sums |A_n| for n = 1..10, reproduced by brute force in the tests.
inline constexpr std::array<long long, 10> kEulerNumbers{1, 1, 2, 5, 16, 61, 272, 1385, 7936, 50521};

}  // namespace alttree::fixtures
