#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "generators.hpp"
#include "lgraph/error.hpp"
#include "lgraph/graph_io.hpp"
#include "lgraph/partition.hpp"
#include "oracles.hpp"

using namespace lgraph;

namespace {

VertexSet set_of(const LabelledGraph& g, std::initializer_list<const char*> names) {
  VertexSet s;
  for (const char* n : names) s.insert(*g.find_vertex(n));
  return s;
}

std::vector<SymbolId> word(const LabelledGraph& g, std::initializer_list<const char*> syms) {
  std::vector<SymbolId> w;
  for (const char* s : syms) w.push_back(*g.find_symbol(s));
  return w;
}

}  // namespace

TEST(VertexSet, Basics) {
  VertexSet a = VertexSet::from_bits(0b1011);
  EXPECT_EQ(a.size(), 3u);
  EXPECT_TRUE(a.contains(3));
  EXPECT_FALSE(a.contains(2));
  EXPECT_EQ((a - VertexSet::singleton(0)).bits(), 0b1010u);
  EXPECT_TRUE(VertexSet::singleton(1).subset_of(a));
  EXPECT_EQ(VertexSet::prefix(64).size(), 64u);
  EXPECT_EQ(a.members(), (std::vector<VertexId>{0, 1, 3}));
  EXPECT_TRUE(canonical_less(VertexSet::from_bits(0b11), VertexSet::from_bits(0b101)));
  EXPECT_TRUE(canonical_less(VertexSet{}, VertexSet::singleton(5)));
}

TEST(ParseGraph, E1) {
  LabelledGraph g = fixtures::e1();
  EXPECT_EQ(g.num_vertices(), 2u);
  EXPECT_EQ(g.num_edges(), 4u);
  EXPECT_EQ(g.vertex_names(), (std::vector<std::string>{"v1", "v2"}));
  EXPECT_EQ(g.alphabet(), (std::vector<std::string>{"0", "1"}));
  EXPECT_TRUE(g.labelling_is_onto());
}

TEST(ParseGraph, Errors) {
  EXPECT_THROW(parse_graph(""), ParseError);
  EXPECT_THROW(parse_graph("# only a comment\n"), ParseError);
  try {
    parse_graph("edge u v a\n");
    FAIL();
  } catch (const SinkError& e) {
    EXPECT_EQ(e.vertex(), "v");
  }
  try {
    parse_graph("edge u u a\nnode u\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(parse_graph("edge u u a b\n"), ParseError);
}

TEST(ParseGraph, DuplicateEdges) {
  LabelledGraph g = parse_graph("edge u u a\nedge u u a\n");
  EXPECT_EQ(g.num_edges(), 1u);
  EXPECT_EQ(g.warnings().size(), 1u);
  EXPECT_THROW(parse_graph("edge u u a\nedge u u a\n", true), ParseError);
}

TEST(ParseGraph, TooManyVertices) {
  std::string text;
  for (int i = 0; i < 65; ++i) text += "edge x" + std::to_string(i) + " x" + std::to_string(i) + " a\n";
  EXPECT_THROW(parse_graph(text), ParseError);
}

TEST(ParseGraph, RoundTrip) {
  for (auto& [name, g] : fixtures::all()) {
    LabelledGraph h = parse_graph(emit_dsl(g));
    EXPECT_EQ(emit_dsl(h), emit_dsl(g)) << name;
    EXPECT_EQ(h.vertex_names(), g.vertex_names()) << name;
    EXPECT_EQ(h.edges(), g.edges()) << name;
  }
}

TEST(RelativeRange, Examples) {
  LabelledGraph g = fixtures::e1();
  EXPECT_EQ(relative_range(g, set_of(g, {"v1"}), word(g, {"0"})), set_of(g, {"v1", "v2"}));
  EXPECT_EQ(relative_range(g, VertexSet{}, word(g, {"0", "1"})), VertexSet{});
  EXPECT_EQ(relative_range(g, set_of(g, {"v1", "v2"}), word(g, {"0", "1"})), set_of(g, {"v1", "v2"}));
}

TEST(RangeSource, Examples) {
  LabelledGraph g = fixtures::e1();
  Word zero{*g.find_symbol("0")};
  EXPECT_EQ(range_of_word(g, zero), set_of(g, {"v1", "v2"}));
  EXPECT_EQ(source_of_word(g, zero), set_of(g, {"v1"}));
  WordQuery q = query_range(g, "2");
  EXPECT_TRUE(q.result.empty());
  EXPECT_EQ(q.unknown_symbols, (std::vector<std::string>{"2"}));

  LabelledGraph f = fixtures::f();
  for (const auto& w : oracle::all_words(2, 5)) {
    EXPECT_EQ(relative_range(f, f.all_vertices(), w), VertexSet::singleton(0));
  }
}

TEST(Labels, Examples) {
  LabelledGraph g = fixtures::e1();
  const SymbolId zero = *g.find_symbol("0"), one = *g.find_symbol("1");
  EXPECT_EQ(labels_out(g, set_of(g, {"v1"})), (std::vector<SymbolId>{zero}));
  EXPECT_EQ(labels_in(g, set_of(g, {"v1"})), (std::vector<SymbolId>{zero, one}));
  EXPECT_TRUE(labels_out(g, VertexSet{}).empty());
  EXPECT_TRUE(labels_in(g, VertexSet{}).empty());
  EXPECT_EQ(labels_out(g, g.all_vertices()), (std::vector<SymbolId>{zero, one}));
}

TEST(GeneralizedVertex, Examples) {
  LabelledGraph g = fixtures::e1();
  EXPECT_EQ(generalized_vertex(g, 0, 1), g.all_vertices());
  LabelledGraph c = fixtures::two_cycle();
  EXPECT_EQ(generalized_vertex(c, *c.find_vertex("u"), 1), set_of(c, {"u"}));
}

TEST(Partition, Examples) {
  StablePartition e1 = stable_partition(fixtures::e1());
  EXPECT_EQ(e1.depth, 1u);
  EXPECT_EQ(e1.partition.classes.size(), 1u);

  LabelledGraph c = fixtures::two_cycle();
  StablePartition sc = stable_partition(c);
  EXPECT_EQ(sc.depth, 1u);
  EXPECT_EQ(sc.partition.classes, (std::vector<VertexSet>{set_of(c, {"u"}), set_of(c, {"v"})}));

  LabelledGraph g = fixtures::grading();
  StablePartition sg = stable_partition(g);
  EXPECT_EQ(sg.partition.classes,
            (std::vector<VertexSet>{set_of(g, {"u1"}), set_of(g, {"v1", "v2"}),
                                    set_of(g, {"w1", "w2"}), set_of(g, {"u2"})}));
}

TEST(Partition, LanguageNotBisimulation) {
  // x and y receive the same words, but x is fed by two vertices with
  // different languages and y by one vertex carrying both.
  LabelledGraph g = parse_graph(
      "edge s1 p1 a\nedge s2 p2 c\nedge s1 p3 a\nedge s2 p3 c\n"
      "edge p1 x b\nedge p2 x b\nedge p3 y b\nedge x x f\nedge y y f\n");
  EXPECT_EQ(stable_partition(g).partition.class_of(*g.find_vertex("x")), set_of(g, {"x", "y"}));
  EXPECT_EQ(oracle::class_of(oracle::partition(g, 8), *g.find_vertex("x")),
            oracle::to_set(set_of(g, {"x", "y"})));
}

TEST(Properties, RangeLaws) {
  std::mt19937 rng(11);
  for (const auto& g : gen::corpus(101, 60)) {
    for (int t = 0; t < 20; ++t) {
      VertexSet a = gen::random_subset(rng, g), b = gen::random_subset(rng, g);
      auto x = gen::random_word(rng, g, 1 + t % 4);
      auto y = gen::random_word(rng, g, 1 + t % 3);
      EXPECT_EQ(relative_range(g, a | b, x), relative_range(g, a, x) | relative_range(g, b, x));
      std::vector<SymbolId> xy = x;
      xy.insert(xy.end(), y.begin(), y.end());
      EXPECT_EQ(relative_range(g, a, xy), relative_range(g, relative_range(g, a, x), y));
      EXPECT_EQ(oracle::to_set(relative_range(g, a, x)), oracle::range(g, oracle::to_set(a), x));
      EXPECT_EQ(oracle::to_set(source_of_word(g, Word(x))), oracle::source(g, x));
    }
  }
}

TEST(Properties, PartitionMatchesLanguageOracle) {
  for (const auto& g : gen::corpus(202, 100)) {
    PartitionTower tower(g);
    for (std::size_t l = 1; l <= g.num_vertices() + 1; ++l) {
      std::vector<oracle::Set> expect = oracle::partition(g, l);
      LevelPartition p = tower.at(l);
      ASSERT_EQ(p.classes.size(), expect.size()) << emit_dsl(g) << "level " << l;
      for (std::size_t i = 0; i < expect.size(); ++i) EXPECT_EQ(oracle::to_set(p.classes[i]), expect[i]);
    }
    // Stabilization: the stable partition is the one at |E^0|+1 and the depth
    // is the first level where it is reached.
    const std::size_t d = tower.stabilization_depth();
    EXPECT_EQ(tower.at(d).classes, tower.at(g.num_vertices() + 1).classes);
    if (d > 1) EXPECT_NE(tower.at(d - 1).classes, tower.at(d).classes);
  }
}

TEST(Properties, RefinementAndSaturation) {
  std::mt19937 rng(5);
  for (const auto& g : gen::corpus(303, 80)) {
    PartitionTower tower(g);
    const LevelPartition stable = tower.stable();
    for (std::size_t l = 1; l <= tower.stabilization_depth() + 1; ++l) {
      LevelPartition lo = tower.at(l), hi = tower.at(l + 1);
      for (VertexId v = 0; v < g.num_vertices(); ++v) {
        EXPECT_TRUE(hi.class_of(v).subset_of(lo.class_of(v)));
        EXPECT_TRUE(lo.class_of(v).contains(v));
      }
      for (VertexSet c : lo.classes) {
        VertexSet u;
        for (VertexSet d : hi.classes)
          if (d.subset_of(c)) u = u | d;
        EXPECT_EQ(u, c);
      }
    }
    for (int t = 0; t < 10; ++t) {
      VertexSet r = relative_range(g, g.all_vertices(), gen::random_word(rng, g, 1 + t % 4));
      r.for_each([&](VertexId v) { EXPECT_TRUE(stable.class_of(v).subset_of(r)); });
    }
  }
}

TEST(GraphIo, DotAndJson) {
  LabelledGraph g = fixtures::two_cycle();
  const std::string dot = to_dot(g);
  EXPECT_NE(dot.find("digraph"), std::string::npos);
  EXPECT_NE(dot.find("label=\"a\""), std::string::npos);
  const std::string js = to_json(g);
  EXPECT_NE(js.find("\"vertices\""), std::string::npos);
  EXPECT_NE(js.find("\"src\": \"u\""), std::string::npos);
  EXPECT_EQ(dot_quote("a\"b"), "\"a\\\"b\"");
}
