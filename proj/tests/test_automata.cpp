#include <gtest/gtest.h>

#include <random>
#include <set>
#include <tuple>

#include "sparseinv/automata.hpp"
#include "sparseinv/word_problem.hpp"

using namespace sparseinv;

namespace {

const Word kSurface = Word::parse("abABcdCD");

const ClassTable& surface_table() {
  static const ClassTable t = enumerate_classes(kSurface);
  return t;
}

const Complex& surface_complex() {
  static const Complex c = [] {
    Complex x(kSurface);
    x.build_to_radius(8);
    return x;
  }();
  return c;
}

// every word of length <= max_len over the first `letters` letter codes
std::vector<Word> all_words(std::size_t max_len, std::uint32_t letters) {
  std::vector<Word> out{Word()};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (std::uint32_t code = 0; code < letters; ++code) {
        Word u = out[i];
        u.push_back(Letter::from_code(code));
        out.push_back(u);
      }
    }
    begin = end;
  }
  return out;
}

// Moore's table filling, independent of the Hopcroft implementation
bool equivalent(const Dfa& d, std::uint32_t p, std::uint32_t q) {
  const std::uint32_t n = d.state_count;
  std::vector<bool> distinct(static_cast<std::size_t>(n) * n, false);
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      distinct[a * n + b] = d.accepting[a] != d.accepting[b];
    }
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (std::uint32_t a = 0; a < n; ++a) {
      for (std::uint32_t b = 0; b < n; ++b) {
        if (distinct[a * n + b]) {
          continue;
        }
        for (std::uint32_t x = 0; x < d.letter_count; ++x) {
          if (distinct[d.next(a, x) * n + d.next(b, x)]) {
            distinct[a * n + b] = true;
            changed = true;
            break;
          }
        }
      }
    }
  }
  return !distinct[p * n + q];
}

}  // namespace

TEST(Pda, InitialPushOnA) {
  const ClassTable& t = surface_table();
  const Pda p = build_pda(t, PdaLanguage::identity);
  auto rule = p.step(kBaseClass, Word::parse("a")[0], kBaseClass);
  ASSERT_TRUE(rule.has_value());
  EXPECT_EQ(rule->op, StackOp::push);
  EXPECT_EQ(rule->symbol, kBaseClass);
  EXPECT_EQ(p.label(rule->next), "[(8,0,8):1]");
}

TEST(Pda, RunExamples) {
  const Pda id = build_pda(surface_table(), PdaLanguage::identity);
  const Pda rc = build_pda(surface_table(), PdaLanguage::rclass);
  auto r = id.run(Word::parse("aA"));
  EXPECT_TRUE(r.accepted);
  EXPECT_EQ(r.state, kBaseClass);
  EXPECT_EQ(r.stack, (std::vector<ClassId>{kBaseClass}));
  r = id.run(Word::parse("aB"));
  EXPECT_FALSE(r.accepted);
  EXPECT_FALSE(r.consumed);
  EXPECT_EQ(r.position, 1u);
  EXPECT_TRUE(id.accepts(Word()));
  EXPECT_TRUE(id.accepts(kSurface));
  EXPECT_FALSE(id.accepts(Word::parse("a")));
  EXPECT_TRUE(rc.accepts(Word::parse("a")));
  EXPECT_TRUE(rc.accepts(Word::parse("aa")));
  EXPECT_FALSE(rc.accepts(Word::parse("aB")));
}

TEST(Pda, RulesAreDeterministic) {
  const Pda p = build_pda(surface_table(), PdaLanguage::identity);
  std::set<std::tuple<ClassId, std::uint32_t, ClassId>> seen;
  std::set<std::pair<ClassId, std::uint32_t>> unguarded, guarded;
  for (const auto& r : p.rules()) {
    const ClassId g = r.guard.value_or(kNoClass);
    EXPECT_TRUE(seen.insert({r.state, r.letter.code(), g}).second)
        << r.state << " " << r.letter.to_char();
    (r.guard ? guarded : unguarded).insert({r.state, r.letter.code()});
    EXPECT_EQ(r.op == StackOp::pop, r.guard.has_value());
  }
  for (const auto& key : unguarded) {
    EXPECT_EQ(guarded.count(key), 0u);
  }
}

TEST(Pda, IncompleteTableIsRejected) {
  // a default-constructed table has no saturated classes
  EXPECT_THROW(Pda(ClassTable(), PdaLanguage::identity), Error);
}

TEST(Pda, AgreesWithSolverOnShortWords) {
  const Pda id = build_pda(surface_table(), PdaLanguage::identity);
  const Pda rc = build_pda(surface_table(), PdaLanguage::rclass);
  Solver s(kSurface);
  for (const Word& u : all_words(4, 8)) {
    const WpOutcome o = s.solve(u).outcome;
    EXPECT_EQ(id.accepts(u), o == WpOutcome::identity) << u.str();
    EXPECT_EQ(rc.accepts(u), o != WpOutcome::not_in_r_class) << u.str();
  }
}

TEST(StackLaw, FinalStackAndStateMatchComplex) {
  const ClassTable& t = surface_table();
  const Pda rc = build_pda(t, PdaLanguage::rclass);
  const Complex& c = surface_complex();
  std::size_t accepted = 0;
  for (const Word& u : all_words(4, 8)) {
    const PdaRun r = rc.run(u);
    if (!r.accepted) {
      continue;
    }
    ++accepted;
    const TraceResult tr = trace(c, u);
    ASSERT_TRUE(tr.complete) << u.str();
    EXPECT_EQ(r.stack, stack_oracle(t, c, tr.end)) << u.str();
    EXPECT_EQ(r.state, t.class_of(c, tr.end)) << u.str();
  }
  EXPECT_GT(accepted, 100u);
}

TEST(StackLaw, OracleExamples) {
  const ClassTable& t = surface_table();
  const Complex& c = surface_complex();
  EXPECT_EQ(stack_oracle(t, c, c.base()), (std::vector<ClassId>{kBaseClass}));
  EXPECT_EQ(stack_oracle(t, c, c.face(0).boundary[1]),
            (std::vector<ClassId>{kBaseClass, kBaseClass}));
  const VertexId deep = *c.target(c.face(0).boundary[1], Word::parse("a")[0]);
  EXPECT_EQ(c.face(c.omega(deep)).parent, 0u);
  EXPECT_EQ(stack_oracle(t, c, deep).size(), 3u);
}

TEST(GeodesicFsa, Examples) {
  const Dfa g = build_geodesic_fsa(surface_table());
  EXPECT_TRUE(g.accepts(Word()));
  EXPECT_TRUE(g.accepts(Word::parse("abAB")));
  EXPECT_FALSE(g.accepts(kSurface));
  EXPECT_FALSE(g.accepts(Word::parse("aA")));
  EXPECT_EQ(g.initial, kBaseClass);
  for (std::uint32_t s = 0; s < g.state_count; ++s) {
    EXPECT_TRUE(g.accepting[s]);
  }
}

TEST(GeodesicFsa, AcceptsExactlyGeodesics) {
  const Dfa g = build_geodesic_fsa(surface_table());
  const Complex& c = surface_complex();
  for (const Word& u : all_words(4, 8)) {
    const TraceResult tr = trace(c, u);
    const bool geodesic = tr.complete && c.distance(tr.end) == u.size();
    EXPECT_EQ(g.accepts(u), geodesic) << u.str();
  }
}

TEST(GeodesicFsa, PrefixClosed) {
  const Dfa g = build_geodesic_fsa(surface_table());
  for (const Word& u : all_words(4, 8)) {
    if (!g.accepts(u)) {
      continue;
    }
    Word prefix;
    for (Letter x : u) {
      EXPECT_TRUE(g.accepts(prefix)) << u.str();
      prefix.push_back(x);
    }
  }
}

TEST(Minimize, SurfaceRelatorHasNineteenConeTypes) {
  const MinimizedDfa m = minimize(build_geodesic_fsa(surface_table()));
  EXPECT_EQ(m.live_states, 19u);
  ASSERT_TRUE(m.dead_state.has_value());
  EXPECT_EQ(m.dfa.state_count, 20u);
  EXPECT_TRUE(m.dfa.complete());
  const ConeTypeCount k = cone_type_count(m);
  EXPECT_EQ(k.live, 19u);
  EXPECT_EQ(k.without_initial, 19u);
  EXPECT_EQ(k.with_dead, 20u);
}

TEST(Minimize, OneStateAutomaton) {
  Dfa d;
  d.state_count = 1;
  d.letter_count = 2;
  d.delta = {0, 0};
  d.accepting = {true};
  const MinimizedDfa m = minimize(d);
  EXPECT_EQ(m.dfa.state_count, 1u);
  EXPECT_EQ(m.live_states, 1u);
  EXPECT_FALSE(m.dead_state.has_value());
}

TEST(Minimize, MergesEquivalentStatesAndDropsUnreachable) {
  // 0 -a-> 1, 0 -b-> 2, 1 and 2 both accept and loop; 3 is unreachable
  Dfa d;
  d.state_count = 4;
  d.letter_count = 2;
  d.delta = {1, 2, 1, 1, 2, 2, 3, 3};
  d.accepting = {false, true, true, true};
  const MinimizedDfa m = minimize(d);
  EXPECT_EQ(m.live_states, 2u);
  EXPECT_EQ(m.state_map[1], m.state_map[2]);
  EXPECT_EQ(m.state_map[3], kNoState);
}

TEST(Minimize, Idempotent) {
  const MinimizedDfa once = minimize(build_geodesic_fsa(surface_table()));
  const MinimizedDfa twice = minimize(once.dfa);
  EXPECT_EQ(twice.dfa.state_count, once.dfa.state_count);
  EXPECT_EQ(twice.live_states, once.live_states);
  EXPECT_EQ(twice.dfa.delta, once.dfa.delta);
}

TEST(Minimize, PreservesLanguage) {
  const Dfa g = build_geodesic_fsa(surface_table());
  const MinimizedDfa m = minimize(g);
  for (const Word& u : all_words(4, 8)) {
    EXPECT_EQ(m.dfa.accepts(u), g.accepts(u)) << u.str();
  }
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::uint32_t> code_d(0, 7);
  for (int trial = 0; trial < 20000; ++trial) {
    Word u;
    for (int k = 0; k < 5 + trial % 3; ++k) {
      u.push_back(Letter::from_code(code_d(rng)));
    }
    EXPECT_EQ(m.dfa.accepts(u), g.accepts(u)) << u.str();
  }
}

TEST(Minimize, StatesPairwiseDistinguishable) {
  const MinimizedDfa m = minimize(build_geodesic_fsa(surface_table()));
  for (std::uint32_t p = 0; p < m.dfa.state_count; ++p) {
    for (std::uint32_t q = p + 1; q < m.dfa.state_count; ++q) {
      EXPECT_FALSE(equivalent(m.dfa, p, q)) << p << " " << q;
    }
  }
}

TEST(Minimize, OtherRelators) {
  for (const char* w : {"cdCDabAB", "abABcdCDefEF"}) {
    const ClassTable t = enumerate_classes(Word::parse(w));
    const Dfa g = build_geodesic_fsa(t);
    const MinimizedDfa m = minimize(g);
    EXPECT_LE(m.live_states, t.size()) << w;
    EXPECT_GT(m.live_states, 0u) << w;
    for (const Word& u : all_words(3, g.letter_count)) {
      EXPECT_EQ(m.dfa.accepts(u), g.accepts(u)) << w << " " << u.str();
    }
  }
}
