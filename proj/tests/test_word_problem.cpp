#include <gtest/gtest.h>

#include <random>

#include "naive_stephen.hpp"
#include "sparseinv/word_problem.hpp"

using namespace sparseinv;

namespace {

const Word kSurface = Word::parse("abABcdCD");

Word random_word(std::mt19937_64& rng, std::size_t len, std::uint32_t letters) {
  std::uniform_int_distribution<std::uint32_t> code_d(0, letters - 1);
  Word u;
  for (std::size_t k = 0; k < len; ++k) {
    u.push_back(Letter::from_code(code_d(rng)));
  }
  return u;
}

WpOutcome reference_outcome(const naive::Stephen& ref, const std::string& u) {
  auto end = ref.trace(u);
  if (!end) {
    return WpOutcome::not_in_r_class;
  }
  return *end == 0 ? WpOutcome::identity : WpOutcome::not_identity;
}

}  // namespace

TEST(Trace, FollowsEdgesAndReportsFailure) {
  Complex c(kSurface);
  auto r = trace(c, Word::parse("abAB"));
  EXPECT_TRUE(r.complete);
  EXPECT_EQ(r.end, c.face(0).boundary[4]);
  r = trace(c, Word::parse("aa"));
  EXPECT_FALSE(r.complete);
  EXPECT_EQ(r.failed_at, 1u);
  r = trace(c, Word::parse(""));
  EXPECT_TRUE(r.complete);
  EXPECT_EQ(r.end, c.base());
}

TEST(Radius, Policies) {
  EXPECT_EQ(required_radius(8, 0), 0u);
  EXPECT_EQ(required_radius(8, 1), 3u);
  EXPECT_EQ(required_radius(8, 5), 7u);
  EXPECT_EQ(required_radius(8, 5, RadiusPolicy::paper), 40u);
  EXPECT_EQ(required_radius(12, 2), 6u);
}

TEST(Solve, Examples) {
  EXPECT_EQ(is_identity(kSurface, Word::parse("")).outcome, WpOutcome::identity);
  EXPECT_EQ(is_identity(kSurface, kSurface).outcome, WpOutcome::identity);
  EXPECT_EQ(is_identity(kSurface, Word::parse("aA")).outcome, WpOutcome::identity);
  const WpVerdict a = is_identity(kSurface, Word::parse("a"));
  EXPECT_EQ(a.outcome, WpOutcome::not_identity);
  EXPECT_EQ(a.distance, 1u);
  ASSERT_TRUE(a.vertex.has_value());
  EXPECT_FALSE(a.failed_at.has_value());
}

TEST(Solve, InverseOfRelatorAndIdempotentsAreIdentity) {
  Solver s(kSurface);
  EXPECT_EQ(s.solve(kSurface.inverse()).outcome, WpOutcome::identity);
  EXPECT_EQ(s.solve(Word::parse("aAdD")).outcome, WpOutcome::identity);
  EXPECT_EQ(s.solve(Word::parse("abABbaBA")).outcome, WpOutcome::identity);
}

// xy = 1 does not give yx = 1 in an inverse monoid: the rotated relator
// starts with a letter that cannot be read at v0.
TEST(Solve, RotatedRelatorIsNotIdentity) {
  const WpVerdict v = is_identity(kSurface, Word::parse("cdCDabAB"));
  EXPECT_EQ(v.outcome, WpOutcome::not_in_r_class);
  EXPECT_EQ(v.failed_at, 0u);
}

TEST(RClass, Examples) {
  EXPECT_TRUE(in_r_class(kSurface, Word::parse("abAB")));
  // "aa" needs the face attached at the end of 'a'; S_1 alone fails at 1
  EXPECT_TRUE(in_r_class(kSurface, Word::parse("aa")));
  Complex s1(kSurface);
  EXPECT_EQ(trace(s1, Word::parse("aa")).failed_at, 1u);
  EXPECT_FALSE(in_r_class(kSurface, Word::parse("aB")));
  const WpVerdict v = is_identity(kSurface, Word::parse("aB"));
  EXPECT_EQ(v.outcome, WpOutcome::not_in_r_class);
  ASSERT_TRUE(v.failed_at.has_value());
  EXPECT_LT(*v.failed_at, 2u);
}

TEST(Solve, RejectsNonSparseRelator) {
  try {
    is_identity(Word::parse("abAB"), Word::parse("a"));
    FAIL() << "expected NotSparse";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::not_sparse);
  }
}

// Both radius policies agree wherever the coarse one is affordable.
TEST(Solve, PoliciesAgreeOnShortWords) {
  SolverOptions paper;
  paper.policy = RadiusPolicy::paper;
  Solver coarse(kSurface, paper);
  Solver local(kSurface);
  const Word empty;
  EXPECT_EQ(coarse.solve(empty).outcome, local.solve(empty).outcome);
  for (std::uint32_t code = 0; code < 8; ++code) {
    Word u;
    u.push_back(Letter::from_code(code));
    const auto a = coarse.solve(u);
    const auto b = local.solve(u);
    EXPECT_EQ(a.outcome, b.outcome) << u.str();
    EXPECT_EQ(a.distance, b.distance) << u.str();
    EXPECT_EQ(a.radius, 8u);
  }
}

// A verdict does not change when more layers are saturated: every verdict
// at its own radius R matches a radius-11 build, which is at least R+n for
// single letters and at least R+5 for words of length up to 4.
TEST(Solve, RadiusStability) {
  Complex bigger(kSurface);
  bigger.build_to_radius(11);
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 600; ++trial) {
    const Word u = random_word(rng, 1 + trial % 4, 8);
    Solver s(kSurface);
    const WpVerdict at_r = s.solve(u);
    ASSERT_LE(at_r.radius + 5, 11u);
    const TraceResult t = trace(bigger, u);
    ASSERT_EQ(at_r.outcome != WpOutcome::not_in_r_class, t.complete) << u.str();
    if (t.complete) {
      EXPECT_EQ(at_r.outcome == WpOutcome::identity, t.end == bigger.base()) << u.str();
      EXPECT_EQ(at_r.distance, bigger.distance(t.end)) << u.str();
    } else {
      EXPECT_EQ(*at_r.failed_at, t.failed_at) << u.str();
    }
  }
}

TEST(Solve, AgreesWithReferenceConstruction) {
  naive::Stephen ref("abABcdCD");
  ref.build(6);
  Solver s(kSurface);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 2000; ++trial) {
    const Word u = random_word(rng, 1 + trial % 4, 8);
    EXPECT_EQ(s.solve(u).outcome, reference_outcome(ref, u.str())) << u.str();
  }
}

// A path read by u is also read by its free reduction, ending at the same
// vertex. The converse fails: x x^-1 is an idempotent, not 1, when x cannot
// be read at v0.
TEST(Solve, FreeReductionPreservesPositiveVerdicts) {
  std::mt19937_64 rng(9);
  Solver s(kSurface);
  int readable = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const Word u = random_word(rng, 1 + trial % 6, 8);
    const WpVerdict a = s.solve(u);
    if (a.outcome == WpOutcome::not_in_r_class) {
      continue;
    }
    ++readable;
    const WpVerdict b = s.solve(free_reduce(u));
    EXPECT_EQ(a.outcome, b.outcome) << u.str();
    ASSERT_TRUE(b.vertex.has_value()) << u.str();
    EXPECT_EQ(*a.vertex, *b.vertex) << u.str();
  }
  EXPECT_GT(readable, 100);
}

TEST(Solve, UnreadableLetterTimesInverseIsNotIdentity) {
  Solver s(kSurface);
  for (std::uint32_t code = 0; code < 8; ++code) {
    const Letter x = Letter::from_code(code);
    Word u;
    u.push_back(x);
    u.push_back(x.inverse());
    const auto readable = s.solve(Word({x})).outcome != WpOutcome::not_in_r_class;
    EXPECT_EQ(s.solve(u).outcome,
              readable ? WpOutcome::identity : WpOutcome::not_in_r_class)
        << u.str();
  }
  EXPECT_EQ(s.solve(Word::parse("Bb")).outcome, WpOutcome::not_in_r_class);
}

TEST(Solve, ConjugatesOfRelatorByReadableWordsAreIdentity) {
  // g w g^-1 = g g^-1 is 1 exactly when g can be read at v0
  Solver s(kSurface);
  for (std::uint32_t code = 0; code < 8; ++code) {
    const Word g({Letter::from_code(code)});
    const Word u = g + kSurface + g.inverse();
    const bool readable = s.solve(g).outcome != WpOutcome::not_in_r_class;
    EXPECT_EQ(s.solve(u).outcome,
              readable ? WpOutcome::identity : WpOutcome::not_in_r_class)
        << u.str();
  }
}
