#include <gtest/gtest.h>

#include <random>

#include "prur/cgs.hpp"
#include "prur/errors.hpp"
#include "prur/parser.hpp"

using namespace prur;

namespace {

const char* kExample =
    "parameters: u1, u2;\n"
    "variables: x1, x2;\n"
    "system: u1*x1^2 + u2*x2 + u2, u2*x2^2 + u1*x2 + u1;\n";

MvPoly P(const RingPtr& r, const char* s) { return parse_polynomial(s, r); }

ConstructibleSet cs(const RingPtr& pr, std::vector<const char*> E, std::vector<const char*> N) {
  ConstructibleSet out;
  for (auto e : E) out.E.push_back(P(pr, e));
  for (auto n : N) out.N.push_back(P(pr, n));
  return out;
}

}  // namespace

TEST(Parser, ExampleFile) {
  auto sys = parse_system(kExample);
  EXPECT_EQ(sys.ring->num_params(), 2u);
  EXPECT_EQ(sys.ring->num_vars(), 2u);
  ASSERT_EQ(sys.polys.size(), 2u);
  EXPECT_EQ(sys.polys[0].to_string(), "u1*x1^2 + u2*x2 + u2");
}

TEST(Parser, ParameterFreeAndErrors) {
  auto sys = parse_system("variables: x; system: x;");
  EXPECT_EQ(sys.ring->num_params(), 0u);
  try {
    parse_system("variables: x1;\nsystem: x1^-1;");
    FAIL() << "negative exponent accepted";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 12u);
  }
  EXPECT_THROW(parse_system("variables: x; system: y;"), ParseError);
  EXPECT_THROW(parse_system("variables: x;"), ParseError);
  EXPECT_THROW(parse_system("variables: x; system: x/x;"), ParseError);
  EXPECT_EQ(parse_system("variables: x; system: x/2 + 3/4;").polys[0].to_string(), "1/2*x + 3/4");
}

TEST(ConstructibleSet, EmptinessExamples) {
  auto pr = Ring::make({}, {"u1", "u2"});
  EXPECT_TRUE(is_empty(cs(pr, {"16*u1^10*u2^2*(u1-4*u2)^2"}, {"u1*u2*(u1-4*u2)*16*u1^10*u2^2*(u1-4*u2)^2"}), pr));
  EXPECT_TRUE(is_empty(cs(pr, {"1"}, {"1"}), pr));
  EXPECT_FALSE(is_empty(cs(pr, {}, {"u1"}), pr));
  EXPECT_FALSE(is_empty(cs(pr, {"u1-4*u2"}, {"u1*u2"}), pr));
  EXPECT_TRUE(is_empty(cs(pr, {"u1"}, {"u1*u2"}), pr));
}

TEST(Cgs, ExampleHasFourBranches) {
  auto sys = parse_system(kExample);
  auto pr = sys.ring->param_ring();
  auto branches = minimal_cgs(sys.polys, ConstructibleSet::whole(pr));
  ASSERT_EQ(branches.size(), 4u);
  std::vector<ConstructibleSet> expected{cs(pr, {}, {"u1*u2"}), cs(pr, {"u1"}, {"u2", "u2*u1"}),
                                         cs(pr, {"u2"}, {"u1"}), cs(pr, {"u1", "u2"}, {"1"})};
  std::vector<BranchKind> kinds{BranchKind::zero_dimensional, BranchKind::no_solution,
                                BranchKind::zero_dimensional, BranchKind::positive_dimensional};
  std::vector<bool> matched(4, false);
  for (const auto& b : branches) {
    bool found = false;
    for (std::size_t k = 0; k < 4; ++k) {
      if (!matched[k] && same_set(b.cs, expected[k], pr)) {
        matched[k] = true;
        found = true;
        EXPECT_EQ(b.kind, kinds[k]) << b.cs.to_string();
      }
    }
    EXPECT_TRUE(found) << b.cs.to_string();
  }
  auto zd = zero_dim_branches(branches);
  ASSERT_EQ(zd.size(), 2u);
  const auto& generic = zd[0].cs.E.empty() ? zd[0] : zd[1];
  auto B = quotient_basis(generic);
  ASSERT_EQ(B.size(), 4u);
  EXPECT_EQ(B[0], (Monomial{0, 0, 0, 0}));
  EXPECT_EQ(B[1], (Monomial{0, 1, 0, 0}));
  EXPECT_EQ(B[2], (Monomial{1, 0, 0, 0}));
  EXPECT_EQ(B[3], (Monomial{1, 1, 0, 0}));
}

TEST(Cgs, BranchesAreDisjointAndCover) {
  auto sys = parse_system(kExample);
  auto pr = sys.ring->param_ring();
  auto branches = minimal_cgs(sys.polys, ConstructibleSet::whole(pr));
  for (std::size_t i = 0; i < branches.size(); ++i)
    for (std::size_t j = i + 1; j < branches.size(); ++j) {
      ConstructibleSet both{branches[i].cs.E, times(branches[i].cs.N, branches[j].cs.N)};
      both.E.insert(both.E.end(), branches[j].cs.E.begin(), branches[j].cs.E.end());
      EXPECT_TRUE(is_empty(both, pr));
    }
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> d(-3, 3);
  std::vector<std::vector<Rational>> pts{{0, 0}, {0, 1}, {1, 0}, {4, 1}};
  for (int i = 0; i < 20; ++i) pts.push_back({Rational(d(rng)), Rational(d(rng))});
  for (const auto& pt : pts) {
    int hits = 0;
    for (const auto& b : branches) hits += b.cs.contains(pt) ? 1 : 0;
    EXPECT_EQ(hits, 1);
  }
}

TEST(Cgs, ParameterFreeIsSingleBranch) {
  auto sys = parse_system("variables: x, y; system: x^2 - 1, y - x;");
  auto branches = minimal_cgs(sys.polys, ConstructibleSet::whole(sys.ring->param_ring()));
  ASSERT_EQ(branches.size(), 1u);
  EXPECT_EQ(branches[0].kind, BranchKind::zero_dimensional);
  EXPECT_EQ(quotient_basis(branches[0]).size(), 2u);
}

TEST(QuotientBasis, Staircases) {
  auto r = Ring::make({"x1", "x2"}, {});
  auto b = quotient_basis({P(r, "x1^3"), P(r, "x2")});
  ASSERT_EQ(b.size(), 3u);
  EXPECT_EQ(b[2], (Monomial{2, 0}));
  EXPECT_EQ(quotient_basis({P(r, "x1"), P(r, "x2")}).size(), 1u);
  EXPECT_THROW(quotient_basis({P(r, "x1*x2")}), PreconditionError);
}
