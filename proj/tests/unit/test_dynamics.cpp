#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "generators.hpp"
#include "lgraph/dynamics.hpp"
#include "lgraph/error.hpp"
#include "lgraph/graph_io.hpp"
#include "lgraph/merged.hpp"
#include "lgraph/partition.hpp"
#include "oracles.hpp"

using namespace lgraph;

namespace {

std::vector<SymbolId> w(std::string_view digits) {
  std::vector<SymbolId> out;
  for (char c : digits) out.push_back(static_cast<SymbolId>(c - '0'));
  return out;
}

VertexSet set_of(const LabelledGraph& g, std::initializer_list<const char*> names) {
  VertexSet s;
  for (const char* n : names) s.insert(*g.find_vertex(n));
  return s;
}

}  // namespace

TEST(Agreeable, Examples) {
  EXPECT_TRUE(is_agreeable(w("0101"), 2));
  EXPECT_FALSE(is_agreeable(w("001"), 1));
  EXPECT_TRUE(is_agreeable(w("000"), 1));
  EXPECT_FALSE(is_agreeable(w("0"), 5));
  EXPECT_EQ(smallest_period(w("010010")), 3u);
  EXPECT_EQ(smallest_period(w("0123")), 4u);
}

TEST(Agreeable, MatchesFactorizationSearch) {
  for (std::size_t k = 2; k <= 3; ++k) {
    for (std::size_t n = 1; n <= (k == 2 ? 12u : 9u); ++n) {
      for (const auto& x : oracle::all_words(k, n)) {
        for (std::size_t l = 1; l <= 6; ++l) ASSERT_EQ(is_agreeable(x, l), oracle::agreeable(x, l));
      }
    }
  }
}

TEST(PeriodState, TracksPeriods) {
  std::mt19937 rng(3);
  for (int t = 0; t < 300; ++t) {
    const std::size_t l = 1 + t % 6;
    PeriodState ps(l);
    std::vector<SymbolId> x;
    std::uniform_int_distribution<SymbolId> pick(0, t % 3 == 0 ? 1 : 2);
    bool dead = false;
    for (int i = 0; i < 20; ++i) {
      const SymbolId a = (t % 2 == 0 && i % 3 != 2) ? x.empty() ? 0 : x[x.size() - 1] : pick(rng);
      x.push_back(a);
      ps.push(a);
      for (std::size_t p = 1; p <= l; ++p) {
        bool periodic = true;
        for (std::size_t j = 0; j + p < x.size(); ++j) periodic = periodic && x[j] == x[j + p];
        ASSERT_EQ(ps.viable(p), periodic);
      }
      if (dead) {
        EXPECT_TRUE(ps.all_failed());
        EXPECT_FALSE(oracle::agreeable(x, l));
      }
      dead = dead || ps.all_failed();
    }
  }
  EXPECT_THROW(PeriodState(0), std::invalid_argument);
  EXPECT_THROW(PeriodState(kMaxPeriodBound + 1), std::invalid_argument);
}

TEST(DisagreeableClass, Examples) {
  LabelledGraph f = fixtures::f();
  for (std::size_t l = 1; l <= 6; ++l) {
    LevelDisagreeable r = is_disagreeable_class(f, f.all_vertices(), l);
    ASSERT_TRUE(r.disagreeable);
    ASSERT_TRUE(r.witness);
    EXPECT_EQ(r.witness->size(), l + 1);
    EXPECT_FALSE(is_agreeable(r.witness->symbols(), l));
  }
  LabelledGraph c = fixtures::two_cycle();
  EXPECT_FALSE(is_disagreeable_class(c, set_of(c, {"u"}), 2).disagreeable);
  EXPECT_TRUE(is_disagreeable_class(c, set_of(c, {"u"}), 1).disagreeable);
  LabelledGraph s = fixtures::single_loop();
  EXPECT_FALSE(is_disagreeable_class(s, s.all_vertices(), 1).disagreeable);
}

TEST(Disagreeable, Examples) {
  DisagreeableReport f = is_disagreeable(fixtures::f());
  EXPECT_EQ(f.verdict, Verdict::confirmed);
  ASSERT_EQ(f.classes.size(), 1u);
  ASSERT_TRUE(f.classes[0].certificate);
  EXPECT_EQ(f.classes[0].certificate->kind, DisagreeableCertificate::Kind::branching);

  DisagreeableReport c = is_disagreeable(fixtures::two_cycle());
  EXPECT_EQ(c.verdict, Verdict::refuted);
  EXPECT_EQ(c.refuting_level, 2u);

  DisagreeableReport s = is_disagreeable(fixtures::single_loop());
  EXPECT_EQ(s.verdict, Verdict::refuted);
  EXPECT_EQ(s.refuting_level, 1u);
}

TEST(Disagreeable, LassoCertificate) {
  // The only cycle at u is c, so {u} needs a lasso: c^k a b^m.
  LabelledGraph g = parse_graph("edge u v a\nedge v v b\nedge u u c\n");
  auto cert = find_disagreeable_certificate(g, set_of(g, {"u"}));
  ASSERT_TRUE(cert);
  for (std::size_t l = 1; l <= 10; ++l) EXPECT_FALSE(is_agreeable(certificate_word(*cert, l), l));
  EXPECT_EQ(is_disagreeable(g).verdict, Verdict::refuted);
}

TEST(Disagreeable, CertificatesProduceWitnessWords) {
  for (const auto& g : gen::corpus(2002, 80, {5, 3, 3})) {
    PartitionTower tower(g);
    for (std::size_t l = 1; l <= tower.stabilization_depth(); ++l) {
      for (VertexSet c : tower.at(l).classes) {
        auto cert = find_disagreeable_certificate(g, c);
        if (!cert) continue;
        for (std::size_t bound = 1; bound <= 9; ++bound) {
          const auto x = certificate_word(*cert, bound);
          EXPECT_FALSE(is_agreeable(x, bound)) << emit_dsl(g);
          EXPECT_FALSE(relative_range(g, c, x).empty()) << emit_dsl(g);
          EXPECT_TRUE(is_disagreeable_class(g, c, bound).disagreeable);
        }
      }
    }
  }
}

TEST(Disagreeable, ClassMatchesWordEnumeration) {
  const std::size_t n = 12;
  for (const auto& g : gen::corpus(3003, 50, {5, 3, 2})) {
    PartitionTower tower(g);
    for (std::size_t l = 1; l <= 4; ++l) {
      for (VertexSet c : tower.at(l).classes) {
        LevelDisagreeable r = is_disagreeable_class(g, c, l);
        const bool brute = oracle::has_disagreeable_word(g, oracle::to_set(c), l, n);
        if (brute) EXPECT_TRUE(r.disagreeable) << emit_dsl(g);
        if (r.disagreeable && r.witness->size() <= n) {
          EXPECT_TRUE(brute) << emit_dsl(g);
          EXPECT_FALSE(is_agreeable(r.witness->symbols(), l));
          EXPECT_FALSE(relative_range(g, c, r.witness->symbols()).empty());
          // Shortest: no non-agreeable word of length in (l, |witness|).
          for (std::size_t k = l + 1; k < r.witness->size(); ++k)
            EXPECT_FALSE(oracle::has_disagreeable_word(g, oracle::to_set(c), l, k)) << emit_dsl(g);
        }
        if (!r.disagreeable) EXPECT_FALSE(brute);
      }
    }
  }
}

TEST(LabelReachable, Examples) {
  LabelledGraph f = fixtures::f();
  EXPECT_EQ(label_reachable(f, f.all_vertices()), f.all_vertices());
  LabelledGraph g = fixtures::loop_graph();
  EXPECT_EQ(label_reachable(g, set_of(g, {"v"})), set_of(g, {"v"}));
  EXPECT_EQ(label_reachable(g, set_of(g, {"u"})), g.all_vertices());
  for (const auto& h : gen::corpus(4004, 60)) {
    std::mt19937 rng(1);
    VertexSet c = gen::random_subset(rng, h);
    EXPECT_EQ(oracle::to_set(label_reachable(h, c)), oracle::reachable(h, oracle::to_set(c)));
  }
}

TEST(Cofinal, Examples) {
  EXPECT_EQ(is_strongly_cofinal(fixtures::f()).verdict, Verdict::confirmed);
  EXPECT_EQ(is_strongly_cofinal(fixtures::two_cycle()).verdict, Verdict::confirmed);
  LabelledGraph g = fixtures::two_loops();
  CofinalityReport r = is_strongly_cofinal(g);
  ASSERT_EQ(r.verdict, Verdict::refuted);
  ASSERT_TRUE(r.witness);
  EXPECT_TRUE(validate_cofinality_witness(g, *r.witness));
  EXPECT_NE(r.witness->target, VertexSet::singleton(r.witness->start));
}

TEST(Cofinal, ValidatorRejectsBadWitness) {
  LabelledGraph g = fixtures::two_loops();
  CofinalityWitness bogus{*g.find_vertex("x"), set_of(g, {"x"}), 1, {}, {*g.find_symbol("a")}};
  EXPECT_FALSE(validate_cofinality_witness(g, bogus));
  CofinalityWitness wrong_word{*g.find_vertex("x"), set_of(g, {"y"}), 1, {}, {*g.find_symbol("b")}};
  EXPECT_FALSE(validate_cofinality_witness(g, wrong_word));
}

TEST(Cofinal, RequiresWlr) {
  bool found = false;
  for (const auto& g : gen::corpus(5005, 300)) {
    if (gen::bar_is_wlr(g)) continue;
    EXPECT_THROW(is_strongly_cofinal(g), PreconditionError);
    EXPECT_THROW(is_simple(g), PreconditionError);
    found = true;
    break;
  }
  EXPECT_TRUE(found);
}

TEST(Cofinal, MatchesBoundedLassoSearch) {
  std::size_t definite = 0;
  for (const auto& g : gen::corpus(6006, 60, {4, 2, 2}, true)) {
    CofinalityReport r = is_strongly_cofinal(g);
    if (r.witness) EXPECT_TRUE(validate_cofinality_witness(g, *r.witness));
    oracle::CofinalityOracle o = oracle::cofinality(g, 6, 8);
    if (o.verdict == oracle::Bounded::refuted) {
      EXPECT_EQ(r.verdict, Verdict::refuted) << emit_dsl(g);
      ++definite;
    } else if (o.verdict == oracle::Bounded::confirmed) {
      EXPECT_EQ(r.verdict, Verdict::confirmed) << emit_dsl(g);
      ++definite;
    }
  }
  EXPECT_GT(definite, 40u);
}

TEST(Simple, Examples) {
  EXPECT_EQ(is_simple(fixtures::e1()).verdict, Simplicity::simple);
  EXPECT_EQ(is_simple(fixtures::e2()).verdict, Simplicity::simple);
  EXPECT_EQ(is_simple(fixtures::f()).verdict, Simplicity::simple);
  SimplicityVerdict c = is_simple(fixtures::two_cycle());
  EXPECT_EQ(c.verdict, Simplicity::not_simple);
  EXPECT_EQ(c.disagreeable.verdict, Verdict::refuted);
  SimplicityVerdict d = is_simple(fixtures::two_loops());
  EXPECT_EQ(d.verdict, Simplicity::not_simple);
  EXPECT_EQ(d.cofinality.verdict, Verdict::refuted);
}

TEST(Properties, VerdictsTransferToMergedGraph) {
  for (const auto& g : gen::corpus(7007, 80, {}, true)) {
    MergedLabelledGraph m = merge(g);
    EXPECT_EQ(is_strongly_cofinal(g).verdict, is_strongly_cofinal(m.merged).verdict) << emit_dsl(g);
    DisagreeableReport a = is_disagreeable(g, 6), b = is_disagreeable(m.merged, 6);
    if (a.verdict != Verdict::unknown && b.verdict != Verdict::unknown)
      EXPECT_EQ(a.verdict, b.verdict) << emit_dsl(g);
    SimplicityVerdict sa = is_simple(g, 6), sb = is_simple(m.merged, 6);
    if (sa.verdict != Simplicity::unknown && sb.verdict != Simplicity::unknown)
      EXPECT_EQ(sa.verdict, sb.verdict) << emit_dsl(g);
  }
}
