#include "steiner/constructions.hpp"

namespace steiner {

// Canonical forms emitted by enumerate_sts(13, {.allow_slow = true}).
// The first has 13 Pasch configurations, the second 8.
const std::vector<TripleSystem>& sts13_classes() {
  static const std::vector<TripleSystem> classes{
      TripleSystem(13, {{0, 1, 2},
         {0, 3, 4},
         {0, 5, 6},
         {0, 7, 8},
         {0, 9, 10},
         {0, 11, 12},
         {1, 3, 5},
         {1, 4, 7},
         {1, 6, 11},
         {1, 8, 9},
         {1, 10, 12},
         {2, 3, 6},
         {2, 4, 8},
         {2, 5, 9},
         {2, 7, 12},
         {2, 10, 11},
         {3, 7, 10},
         {3, 8, 11},
         {3, 9, 12},
         {4, 5, 10},
         {4, 6, 12},
         {4, 9, 11},
         {5, 7, 11},
         {5, 8, 12},
         {6, 7, 9},
         {6, 8, 10}}),
      TripleSystem(13, {{0, 1, 2},
         {0, 3, 4},
         {0, 5, 8},
         {0, 6, 9},
         {0, 7, 10},
         {0, 11, 12},
         {1, 3, 5},
         {1, 4, 7},
         {1, 6, 10},
         {1, 8, 12},
         {1, 9, 11},
         {2, 3, 6},
         {2, 4, 8},
         {2, 5, 9},
         {2, 7, 12},
         {2, 10, 11},
         {3, 7, 9},
         {3, 8, 11},
         {3, 10, 12},
         {4, 5, 10},
         {4, 6, 11},
         {4, 9, 12},
         {5, 6, 12},
         {5, 7, 11},
         {6, 7, 8},
         {8, 9, 10}}),
  };
  return classes;
}

}  // namespace steiner
