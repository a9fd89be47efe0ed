#pragma once

#include "circles/forest.hpp"
#include "circles/geometry.hpp"
#include "circles/rational.hpp"

namespace fixture {

using circles::Circle;
using circles::LabeledConfiguration;
using circles::ratio;

// A seven-circle labeled configuration with nesting three levels deep and a
// tie in cx between circles 3 and 4.
inline LabeledConfiguration seven_circles() {
  return LabeledConfiguration({
      Circle(-2, ratio(-1, 2), ratio(3, 10)),
      Circle(0, 0, 1),
      Circle(ratio(-1, 5), ratio(3, 10), ratio(1, 5)),
      Circle(ratio(-1, 5), ratio(-3, 10), ratio(3, 10)),
      Circle(ratio(3, 5), 0, 2),
      Circle(1, 1, ratio(3, 20)),
      Circle(ratio(6, 5), ratio(6, 5), ratio(1, 2)),
  });
}

// Root with two children, each with children of shapes (()), (()), ().
inline const char* big_tree_code() { return "(((())(())())((())(())()))"; }

// Two 11-vertex trees that are isomorphic but not equal as ordered trees.
inline const char* eleven_a() { return "(()((()(()()()))(())))"; }
inline const char* eleven_b() { return "((((()()())())(()))())"; }

// Labeled trees T1, T2 (isomorphic as labeled trees) and T3 (same shape as
// T2, different labels).
inline const char* t1() { return "(1,2(3(5,6),4))"; }
inline const char* t2() { return "(2(3(6,5),4),1)"; }
inline const char* t3() { return "(3(4(2,1),6),5)"; }

}  // namespace fixture
