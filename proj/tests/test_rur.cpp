#include <gtest/gtest.h>

#include "prur/parser.hpp"
#include "prur/errors.hpp"
#include "prur/rur.hpp"

using namespace prur;

namespace {

const char* kExample =
    "parameters: u1, u2;\n"
    "variables: x1, x2;\n"
    "system: u1*x1^2 + u2*x2 + u2, u2*x2^2 + u1*x2 + u1;\n";

struct Fixture {
  ParsedSystem sys = parse_system(kExample);
  RingPtr pr = sys.ring->param_ring();
  CgsBranch generic;
  Fixture() {
    for (auto& b : zero_dim_branches(minimal_cgs(sys.polys, ConstructibleSet::whole(pr))))
      if (b.cs.E.empty()) generic = b;
  }
  MvPoly U(const char* s) const { return parse_polynomial(s, pr); }
  MvPoly X(const char* s) const { return parse_polynomial(s, sys.ring); }
  RatFun F(const char* num, const char* den = "1") const { return RatFun(U(num), U(den)); }
  RPoly R(std::vector<std::pair<const char*, const char*>> c) const {
    std::vector<RatFun> v;
    for (auto& [n, d] : c) v.push_back(F(n, d));
    return RPoly(RatFun(pr), std::move(v));
  }
};

bool proportional(const MvPoly& a, const MvPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  MvPoly x = a;
  x *= b.leading_coefficient();
  MvPoly y = b;
  y *= a.leading_coefficient();
  return x == y;
}

}  // namespace

TEST(Rur, CandidateStream) {
  auto r2 = Ring::make({"x1", "x2"}, {});
  EXPECT_EQ(separating_candidate(r2, 1, {}, 0).t.to_string(), "1");
  auto r3 = Ring::make({"x1", "x2", "x3"}, {});
  EXPECT_EQ(separating_candidate(r3, 3, {}, 0).t.to_string(), "x1");
  EXPECT_EQ(separating_candidate(r3, 3, {}, 1).t, parse_polynomial("x1 + x2 + x3", r3));
  EXPECT_EQ(separating_candidate(r3, 3, {}, 2).t, parse_polynomial("x1 + 2*x2 + 4*x3", r3));
  auto r4 = Ring::make({"x1", "x2", "x3", "x4"}, {});
  std::vector<MvPoly> user{parse_polynomial("x4", r4), parse_polynomial("x1 + x4", r4)};
  EXPECT_EQ(separating_candidate(r4, 2, user, 0).t, user[0]);
  EXPECT_EQ(separating_candidate(r4, 2, user, 1).t, user[1]);
  EXPECT_EQ(separating_candidate(r4, 2, user, 2).t.to_string(), "x1");
  EXPECT_EQ(separating_candidate(r4, 2, user, 3).t, parse_polynomial("x1 + x2 + x3 + x4", r4));
}

TEST(Rur, ExampleSeparatingGenericBranch) {
  Fixture f;
  QuotientAlgebra Q(f.generic);
  ConstructibleSet cs{{}, {f.U("u1*u2*(u1-4*u2)")}};
  auto check = check_separating(Q, f.X("x1"), cs, 4);
  EXPECT_TRUE(proportional(check.psc, f.U("u1*u2*(u1-4*u2)").pow(2) * f.U("u1^8")));
  EXPECT_FALSE(is_empty(check.sep_set, f.pr));
  EXPECT_TRUE(is_empty(check.rest_set, f.pr));
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b) {
      std::vector<Rational> pt{Rational(a), Rational(b)};
      if (!check.sep_set.contains(pt)) continue;
      EXPECT_EQ(distinct_root_count(specialize(check.chi, pt)), 4) << a << "," << b;
    }
}

TEST(Rur, ExampleSeparatingDegenerateBranch) {
  Fixture f;
  QuotientAlgebra Q(f.generic);
  ConstructibleSet cs{{f.U("u1-4*u2")}, {f.U("u1*u2")}};
  auto check = check_separating(Q, f.X("x1"), cs, 2);
  // PSC_2 = -8 u1^5 (u1 - 2 u2), reduced by u1 = 4 u2.
  EXPECT_TRUE(proportional(check.psc, f.U("u2^6"))) << check.psc.to_string();
  EXPECT_TRUE(proportional(check.chain.psc[2], f.U("-8*u1^5*(u1-2*u2)")));
  EXPECT_FALSE(is_empty(check.sep_set, f.pr));
  EXPECT_TRUE(is_empty(check.rest_set, f.pr));
  for (int b = -4; b <= 4; ++b) {
    std::vector<Rational> pt{Rational(4 * b), Rational(b)};
    if (!check.sep_set.contains(pt)) continue;
    EXPECT_EQ(distinct_root_count(specialize(check.chi, pt)), 2) << b;
  }
}

TEST(Rur, SeparatingSetsPartitionBranch) {
  Fixture f;
  QuotientAlgebra Q(f.generic);
  ConstructibleSet cs{{}, {f.U("u1*u2")}};
  auto check = check_separating(Q, f.X("x1 + x2"), cs, 4);
  int sep = 0;
  for (int a = -4; a <= 4; ++a)
    for (int b = -4; b <= 4; ++b) {
      std::vector<Rational> pt{Rational(a), Rational(b)};
      const bool in_sep = check.sep_set.contains(pt);
      const bool in_rest = check.rest_set.contains(pt);
      EXPECT_EQ(in_sep || in_rest, cs.contains(pt));
      EXPECT_FALSE(in_sep && in_rest);
      sep += in_sep;
    }
  EXPECT_GT(sep, 0);
  EXPECT_TRUE(subset_of(check.sep_set, cs, f.pr));
  EXPECT_TRUE(subset_of(check.rest_set, cs, f.pr));
}

TEST(Rur, SplitByFactors) {
  Fixture f;
  ConstructibleSet cs{{}, {f.U("u1")}};
  auto pieces = split_by_factors(cs, f.U("u2^2*(u1-u2)"));
  ASSERT_EQ(pieces.size(), 2u);
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b) {
      std::vector<Rational> pt{Rational(a), Rational(b)};
      int hits = 0;
      for (const auto& p : pieces) hits += p.contains(pt);
      const bool vanishes = b * b * (a - b) == 0;
      EXPECT_EQ(hits, cs.contains(pt) && vanishes ? 1 : 0) << a << "," << b;
    }
}

TEST(Rur, ExampleGPolynomialsGenericBranch) {
  Fixture f;
  QuotientAlgebra Q(f.generic);
  ConstructibleSet cs{{}, {f.U("u1*u2*(u1-4*u2)")}};
  auto check = check_separating(Q, f.X("x1"), cs, 4);
  auto gcds = parametric_gcd(check.chain, check.sep_set);
  ASSERT_EQ(gcds.size(), 1u);
  EXPECT_EQ(gcds[0].deg, 0);
  auto tup = build_tuple(Q, SepCandidate{f.X("x1"), 0}, check.chi, gcds[0].d, gcds[0].cs);
  EXPECT_EQ(tup.chi_bar, tup.chi);
  EXPECT_EQ(tup.g, f.R({{"0", "1"}, {"-2*(u1-2*u2)", "u1"}, {"0", "1"}, {"4", "1"}}));
  EXPECT_EQ(tup.g_vars[0], f.R({{"-4*u2^2", "u1^2"}, {"0", "1"}, {"2*(u1-2*u2)", "u1"}}));
  EXPECT_EQ(tup.g_vars[1], f.R({{"0", "1"}, {"2", "1"}, {"0", "1"}, {"-2*u1", "u2"}}));
}

TEST(Rur, ExampleGPolynomialsDegenerateBranch) {
  Fixture f;
  QuotientAlgebra Q(f.generic);
  ConstructibleSet cs{{f.U("u1-4*u2")}, {f.U("u1*u2")}};
  auto check = check_separating(Q, f.X("x1"), cs, 2);
  auto gcds = parametric_gcd(check.chain, check.sep_set);
  ASSERT_EQ(gcds.size(), 1u);
  EXPECT_EQ(gcds[0].deg, 2);
  auto tup = build_tuple(Q, SepCandidate{f.X("x1"), 0}, check.chi, gcds[0].d, gcds[0].cs);
  EXPECT_EQ(tup.chi, f.R({{"1", "16"}, {"0", "1"}, {"-1", "2"}, {"0", "1"}, {"1", "1"}}));
  EXPECT_EQ(tup.chi_bar, f.R({{"-1", "4"}, {"0", "1"}, {"1", "1"}}));
  EXPECT_EQ(tup.g, f.R({{"0", "1"}, {"4", "1"}}));
  EXPECT_EQ(tup.g_vars[0], f.R({{"1", "1"}}));
  EXPECT_EQ(tup.g_vars[1], f.R({{"0", "1"}, {"-8", "1"}}));
}

TEST(Rur, OnePointParametric) {
  auto sys = parse_system("parameters: u1; variables: x1; system: x1 - 1;");
  auto pr = sys.ring->param_ring();
  auto branches = zero_dim_branches(minimal_cgs(sys.polys, ConstructibleSet::whole(pr)));
  ASSERT_EQ(branches.size(), 1u);
  QuotientAlgebra Q(branches[0]);
  SepCandidate t{parse_polynomial("x1", sys.ring), 0};
  auto tup = build_tuple(Q, t, Q.char_poly(t.t), ZUPoly::constant(MvPoly(pr), MvPoly(pr, Rational(1))),
                         ConstructibleSet::whole(pr));
  const RatFun one(pr, Rational(1));
  EXPECT_EQ(tup.chi_bar, RPoly(RatFun(pr), {-one, one}));
  EXPECT_EQ(tup.g, RPoly(RatFun(pr), {one}));
  EXPECT_EQ(tup.g_vars[0], RPoly(RatFun(pr), {one}));
}

TEST(Rur, NonparametricSinglePoint) {
  auto sys = parse_system("variables: x; system: x - 2;");
  auto tup = rur_nonparametric(sys.polys, sys.ring);
  ASSERT_TRUE(tup.has_value());
  EXPECT_EQ(tup->chi.to_string("T"), "T - 2");
  EXPECT_EQ(tup->g.to_string("T"), "1");
  // x = g_x / g = Tr(x) / Tr(1).
  EXPECT_EQ(tup->g_vars[0].to_string("T"), "2");
}

TEST(Rur, NonparametricTwoPoints) {
  auto sys = parse_system("variables: x, y; system: x^2 - 1, y - x;");
  auto tup = rur_nonparametric(sys.polys, sys.ring);
  ASSERT_TRUE(tup.has_value());
  EXPECT_EQ(tup->t.t.to_string(), "x");
  EXPECT_EQ(tup->chi.to_string("T"), "T^2 - 1");
  EXPECT_EQ(tup->g.to_string("T"), "2*T");
  EXPECT_EQ(tup->g_vars[0].to_string("T"), "2");
  EXPECT_EQ(tup->g_vars[1].to_string("T"), "2");
  for (int root : {1, -1}) {
    const Rational T(root);
    const auto g = specialize(tup->g, {}).evaluate(T);
    EXPECT_EQ(specialize(tup->g_vars[0], {}).evaluate(T) / g, Rational(root));
    EXPECT_EQ(specialize(tup->g_vars[1], {}).evaluate(T) / g, Rational(root));
  }
}

TEST(Rur, NonparametricDoublePoint) {
  auto sys = parse_system("variables: x, y; system: x^2, y;");
  auto tup = rur_nonparametric(sys.polys, sys.ring);
  ASSERT_TRUE(tup.has_value());
  EXPECT_EQ(tup->chi.to_string("T"), "T^2");
  EXPECT_EQ(tup->chi_bar.to_string("T"), "T");
  const Rational g = specialize(tup->g, {}).evaluate(Rational(0));
  EXPECT_EQ(specialize(tup->g_vars[0], {}).evaluate(Rational(0)) / g, Rational(0));
  EXPECT_EQ(specialize(tup->g_vars[1], {}).evaluate(Rational(0)) / g, Rational(0));
}

TEST(Rur, NonparametricNoSolution) {
  auto sys = parse_system("variables: x; system: x - 1, x - 2;");
  EXPECT_FALSE(rur_nonparametric(sys.polys, sys.ring).has_value());
}

TEST(Rur, NonparametricPositiveDimensionalRejected) {
  auto sys = parse_system("variables: x, y; system: x - y;");
  EXPECT_THROW(rur_nonparametric(sys.polys, sys.ring), PreconditionError);
}

TEST(Rur, SquarefreeQuotientRemainderOnlyNeedsToVanishOutsideN) {
  auto pr = Ring::make({}, {"u"});
  auto U = [&](const char* s) { return parse_polynomial(s, pr); };
  RatFun z(pr);
  // (T - 1)^2 divided by T - u leaves (u - 1)^2, zero at u = 1 but not at u = 0.
  RPoly chi(z, {RatFun(U("1"), U("1")), RatFun(U("-2"), U("1")), RatFun(U("1"), U("1"))});
  ZUPoly d(MvPoly(pr), {U("-u"), U("1")});
  auto q = squarefree_quotient(chi, d, {{U("u^2 - u")}, {U("u")}});
  EXPECT_EQ(q, RPoly(z, {RatFun(U("u - 2"), U("1")), RatFun(U("1"), U("1"))}));
  EXPECT_THROW(squarefree_quotient(chi, d, {{U("u^2 - u")}, {U("1")}}), InternalError);
}
