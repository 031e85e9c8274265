#ifndef LGRAPH_TESTS_FIXTURES_HPP
#define LGRAPH_TESTS_FIXTURES_HPP

#include <string>
#include <vector>

#include "lgraph/graph.hpp"
#include "lgraph/graph_io.hpp"

namespace fixtures {

inline lgraph::LabelledGraph e1() {
  return lgraph::parse_graph("edge v1 v1 0\nedge v1 v2 0\nedge v2 v2 1\nedge v2 v1 1\n");
}

inline lgraph::LabelledGraph e2() {
  return lgraph::parse_graph("edge v1 v1 0\nedge v2 v2 0\nedge v1 v2 1\nedge v2 v1 1\n");
}

inline lgraph::LabelledGraph f() { return lgraph::parse_graph("edge v v 0\nedge v v 1\n"); }

inline lgraph::LabelledGraph two_cycle() { return lgraph::parse_graph("edge u v a\nedge v u b\n"); }

inline lgraph::LabelledGraph single_loop() { return lgraph::parse_graph("edge v v a\n"); }

/// u has an a-loop and a b-edge to v; v has a c-loop.
inline lgraph::LabelledGraph loop_graph() {
  return lgraph::parse_graph("edge u u a\nedge u v b\nedge v v c\n");
}

inline lgraph::LabelledGraph two_loops() { return lgraph::parse_graph("edge x x a\nedge y y b\n"); }

/// Layered graph u1 -> {v1,v2} -> {w1,w2} -> u2 closed by u2 -> u1.
inline lgraph::LabelledGraph grading() {
  return lgraph::parse_graph(
      "edge u1 v1 1\nedge u1 v2 1\nedge v1 w1 2\nedge v2 w2 2\n"
      "edge w1 u2 3\nedge w2 u2 3\nedge u2 u1 4\n");
}

/// Two vertices receiving the same words through different edges; merges to
/// a two-loop vertex feeding a one-loop vertex.
inline lgraph::LabelledGraph split_tail() {
  return lgraph::parse_graph(
      "edge a a 0\nedge a b1 1\nedge a b2 1\nedge b1 b1 2\nedge b2 b2 2\n"
      "edge b1 b2 2\nedge b2 b1 2\n");
}

/// u -> w and v -> w on the same label, w loops.
inline lgraph::LabelledGraph funnel() { return lgraph::parse_graph("edge u w a\nedge v w a\nedge w w c\n"); }

struct Named {
  std::string name;
  lgraph::LabelledGraph graph;
};

inline std::vector<Named> all() {
  return {{"e1", e1()},           {"e2", e2()},
          {"f", f()},             {"two_cycle", two_cycle()},
          {"single_loop", single_loop()}, {"loop_graph", loop_graph()},
          {"two_loops", two_loops()}, {"grading", grading()},
          {"split_tail", split_tail()}, {"funnel", funnel()}};
}

}  // namespace fixtures

#endif  // LGRAPH_TESTS_FIXTURES_HPP
