#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "generators.hpp"
#include "lgraph/accommodating.hpp"
#include "lgraph/error.hpp"
#include "lgraph/partition.hpp"
#include "oracles.hpp"

using namespace lgraph;

namespace {

std::set<oracle::Set> as_oracle(const AccommodatingSet& fam) {
  std::set<oracle::Set> out;
  for (VertexSet m : fam.members()) out.insert(oracle::to_set(m));
  return out;
}

VertexSet set_of(const LabelledGraph& g, std::initializer_list<const char*> names) {
  VertexSet s;
  for (const char* n : names) s.insert(*g.find_vertex(n));
  return s;
}

}  // namespace

TEST(Minimal, Examples) {
  LabelledGraph e1 = fixtures::e1();
  EXPECT_EQ(minimal_accommodating(e1).members(), (std::vector<VertexSet>{VertexSet{}, e1.all_vertices()}));
  LabelledGraph f = fixtures::f();
  EXPECT_EQ(minimal_accommodating(f).members(), (std::vector<VertexSet>{VertexSet{}, f.all_vertices()}));
  LabelledGraph c = fixtures::two_cycle();
  AccommodatingSet mc = minimal_accommodating(c);
  EXPECT_EQ(mc.size(), 4u);
  EXPECT_EQ(mc.kind(), FamilyKind::minimal);
}

TEST(Bar, Examples) {
  LabelledGraph e1 = fixtures::e1();
  AccommodatingSet b1 = bar_accommodating(e1);
  EXPECT_EQ(b1.members(), (std::vector<VertexSet>{VertexSet{}, e1.all_vertices()}));
  ASSERT_TRUE(b1.atoms());
  EXPECT_EQ(*b1.atoms(), (std::vector<VertexSet>{e1.all_vertices()}));
  EXPECT_FALSE(b1.contains(VertexSet::singleton(0)));

  LabelledGraph c = fixtures::two_cycle();
  AccommodatingSet bc = bar_accommodating(c);
  EXPECT_EQ(bc.size(), 4u);
  EXPECT_EQ(*bc.atoms(), (std::vector<VertexSet>{set_of(c, {"u"}), set_of(c, {"v"})}));

  LabelledGraph g = fixtures::grading();
  AccommodatingSet bg = bar_accommodating(g);
  EXPECT_EQ(bg.size(), 16u);
  EXPECT_EQ(bg.atoms()->size(), 4u);
  EXPECT_EQ(as_oracle(bg), oracle::bar_family(g));
  EXPECT_FALSE(bg.used_fallback());
}

TEST(Wlr, Examples) {
  LabelledGraph e1 = fixtures::e1();
  EXPECT_TRUE(is_weakly_left_resolving(bar_accommodating(e1)).holds);

  LabelledGraph g = fixtures::funnel();
  std::vector<VertexSet> sets;
  for (std::uint64_t b = 0; b < 8; ++b) sets.push_back(VertexSet::from_bits(b));
  AccommodatingSet full = custom_accommodating(g, sets);
  WlrResult r = is_weakly_left_resolving(full);
  ASSERT_FALSE(r.holds);
  ASSERT_TRUE(r.witness);
  const VertexSet ra = relative_range(g, r.witness->a, std::vector<SymbolId>{r.witness->symbol});
  const VertexSet rb = relative_range(g, r.witness->b, std::vector<SymbolId>{r.witness->symbol});
  const VertexSet rab = relative_range(g, r.witness->a & r.witness->b, std::vector<SymbolId>{r.witness->symbol});
  EXPECT_NE(ra & rb, rab);

  AccommodatingSet trivial = custom_accommodating(fixtures::f(), std::vector<VertexSet>{VertexSet{}, VertexSet::singleton(0)});
  EXPECT_TRUE(is_weakly_left_resolving(trivial).holds);
}

TEST(Custom, Validation) {
  LabelledGraph c = fixtures::two_cycle();
  EXPECT_THROW(custom_accommodating(c, std::vector<VertexSet>{VertexSet::singleton(0)}), PreconditionError);
  AccommodatingSet ok = custom_accommodating(
      c, std::vector<VertexSet>{VertexSet{}, VertexSet::singleton(0), VertexSet::singleton(1), c.all_vertices()});
  EXPECT_EQ(ok.kind(), FamilyKind::custom);
  EXPECT_TRUE(ok.is_complement_closed());
}

TEST(SetFinite, Examples) {
  for (auto& [name, g] : fixtures::all()) {
    AccommodatingSet b = bar_accommodating(g);
    EXPECT_TRUE(is_set_finite(b)) << name;
    EXPECT_TRUE(is_receiver_set_finite(b)) << name;
  }
}

TEST(Properties, FamiliesMatchClosureOracle) {
  for (const auto& g : gen::corpus(404, 100)) {
    AccommodatingSet minimal = minimal_accommodating(g);
    AccommodatingSet bar = bar_accommodating(g);
    const auto m = as_oracle(minimal);
    const auto b = as_oracle(bar);
    EXPECT_EQ(m, oracle::minimal_family(g)) << emit_dsl(g);
    EXPECT_EQ(b, oracle::bar_family(g)) << emit_dsl(g);
    EXPECT_TRUE(std::includes(b.begin(), b.end(), m.begin(), m.end()));
    EXPECT_TRUE(bar.is_complement_closed());
    EXPECT_EQ(bar.size(), b.size());
    for (const auto& x : b) EXPECT_TRUE(bar.contains(oracle::from_set(x)));
  }
}

TEST(Properties, MinimalMatchesUnionsOfIntersections) {
  for (const auto& g : gen::corpus(505, 40, {4, 2, 2})) {
    EXPECT_EQ(as_oracle(minimal_accommodating(g)),
              oracle::union_intersection_family(g, g.num_vertices() + 1))
        << emit_dsl(g);
  }
}

TEST(Properties, GeneralizedVerticesInBar) {
  for (const auto& g : gen::corpus(606, 60)) {
    AccommodatingSet bar = bar_accommodating(g);
    PartitionTower tower(g);
    for (std::size_t l = 1; l <= tower.stabilization_depth() + 1; ++l)
      for (VertexSet c : tower.at(l).classes) EXPECT_TRUE(bar.contains(c));
  }
}

TEST(Properties, WlrMatchesDefinition) {
  for (const auto& g : gen::corpus(707, 80)) {
    AccommodatingSet bar = bar_accommodating(g);
    bool expect = true;
    const auto members = bar.members();
    for (VertexSet a : members)
      for (VertexSet b : members)
        for (SymbolId s = 0; s < g.num_symbols(); ++s) {
          const oracle::WordV w{s};
          oracle::Set ra = oracle::range(g, oracle::to_set(a), w), rb = oracle::range(g, oracle::to_set(b), w);
          oracle::Set i;
          std::set_intersection(ra.begin(), ra.end(), rb.begin(), rb.end(), std::inserter(i, i.end()));
          if (i != oracle::range(g, oracle::to_set(a & b), w)) expect = false;
        }
    EXPECT_EQ(is_weakly_left_resolving(bar).holds, expect) << emit_dsl(g);
  }
}
