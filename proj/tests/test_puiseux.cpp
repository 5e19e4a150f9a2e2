#include <gtest/gtest.h>

#include <cmath>

#include "jung/parser.hpp"
#include "jung/puiseux.hpp"

using namespace jung;

namespace {

bool close(Complex a, Complex b, double tol = 1e-10) { return std::abs(a - b) <= tol * std::max<Real>(1, std::abs(b)); }

}  // namespace

TEST(CPoly, RootsAndClusters) {
  // (z - 1)^2 (z + 2i)
  CPoly p = CPoly(std::vector<Complex>{-1, 1}) * CPoly(std::vector<Complex>{-1, 1}) *
            CPoly(std::vector<Complex>{Complex(0, 2), 1});
  auto cl = root_clusters(p);
  ASSERT_EQ(cl.size(), 2u);
  unsigned total = 0;
  for (const auto& c : cl) {
    total += c.mult;
    if (c.mult == 2)
      EXPECT_TRUE(close(c.z, 1, 1e-6));
    else
      EXPECT_TRUE(close(c.z, Complex(0, -2)));
  }
  EXPECT_EQ(total, 3u);
  for (auto z : aberth_roots(CPoly(std::vector<Complex>{-8, 0, 0, 1}))) EXPECT_NEAR(static_cast<double>(std::abs(z)), 2, 1e-12);
}

TEST(Puiseux, CuspIsOneBranch) {
  BranchSet b = expansions_at_infinity(parse_poly("y^2 - x^3"));
  ASSERT_EQ(b.branches.size(), 1u);
  const PuiseuxSeries& u = b.branches[0];
  EXPECT_EQ(u.ram, 2u);
  ASSERT_EQ(u.terms.size(), 1u);
  EXPECT_EQ(u.terms[0].exp, Frac(3, 2));
  EXPECT_FALSE(u.trunc_ord.has_value());
  EXPECT_EQ(multiplicity(u), 2u);
}

TEST(Puiseux, ShearBranch) {
  // y^2 + x = 0: y = i x^(1/2) up to conjugation
  BranchSet b = expansions_at_infinity(parse_poly("x + y^2"));
  ASSERT_EQ(b.total_ram(), 2u);
  ASSERT_EQ(b.branches.size(), 1u);
  Complex c = b.branches[0].coeff(Frac(1, 2));
  EXPECT_TRUE(close(c * c, -1));
  EXPECT_TRUE(close(conjugate(b.branches[0], 1).coeff(Frac(1, 2)), -c));
}

TEST(Puiseux, FoliumBranches) {
  // y^3 - 3xy - x^3: three integer-exponent branches y ~ w x, w^3 = 1
  BranchSet b = expansions_at_infinity(parse_poly("y^3 - 3*x*y - x^3"));
  EXPECT_EQ(b.total_ram(), 3u);
  EXPECT_EQ(b.branches.size(), 3u);
  for (const auto& u : b.branches) {
    Complex w = u.coeff(Frac(1));
    EXPECT_TRUE(close(w * w * w, 1));
  }
}

TEST(Puiseux, PrincipalConjugate) {
  BranchSet b = expansions_at_infinity(parse_poly("y^3 - x"));
  Principal pr = principal(b.branches[0]);
  PuiseuxSeries again = conjugate(b.branches[0], pr.index);
  EXPECT_TRUE(close(again.coeff(Frac(1, 3)), pr.series.coeff(Frac(1, 3))));
  Real a = std::arg(pr.series.coeff(Frac(1, 3)));
  EXPECT_GE(a, -1e-9);
}

TEST(Puiseux, Fact1RebuildsPolynomial) {
  Polynomial h = parse_poly("(y - x^2)^2 - x");
  PuiseuxConfig cfg;
  cfg.trunc_terms = 40;
  BranchSet b = expansions_at_infinity(h, cfg);
  ASSERT_EQ(b.branches.size(), 1u);
  ApproxPolynomial a = fact1_product(b.branches[0], 2);
  for (const auto& t : h.terms()) EXPECT_TRUE(close(a.coeff(t.mono.x, t.mono.y), Complex(t.coef.to_complex().real())));
  EXPECT_TRUE(close(a.coeff(1, 1), 0));
}

TEST(Puiseux, RejectsBadInput) {
  EXPECT_THROW(expansions_at_infinity(parse_poly("x^2*y + 1")), PuiseuxError);
  EXPECT_THROW(expansions_at_infinity(parse_poly("x*y^2 + y^2 + x")), PuiseuxError);
  EXPECT_THROW(expansions_at_infinity(parse_poly("2*y + x")), PuiseuxError);
  EXPECT_THROW(expansions_at_infinity(Polynomial()), PuiseuxError);
}

TEST(Puiseux, FaceFromBranchesMatchesSubstitution) {
  // P = y^2 + x with phi = i x^(1/2) + ... : face 1 + xi^2 after scaling
  Polynomial h = parse_poly("y^2 + x");
  BranchSet b = expansions_at_infinity(h);
  ParamSeries phi;
  phi.m_phi = 2;
  phi.n_phi = 1;
  phi.coeffs = {0};
  FaceData f1 = face_from_branches(b, 1, phi);
  FaceData f2 = substitute_param(h, phi);
  EXPECT_EQ(f1.a, 2);
  EXPECT_EQ(f2.a, 2);
  ASSERT_EQ(f1.face_poly.degree(), 2);
  for (int k = 0; k <= 2; ++k) EXPECT_TRUE(close(f1.face_poly.c[k], f2.face_poly.c[k]));
  PuiseuxSeries lifted = lift_by_conjugate(b, phi, Complex(0, 1));
  EXPECT_TRUE(close(lifted.coeff(Frac(1, 2)), Complex(0, 1)));
}

TEST(Puiseux, SeriesDifferenceAndOrder) {
  // y^2 + x + 1 = 0: u = i x^(1/2) + (i/2) x^(-1/2) + ...
  BranchSet b = expansions_at_infinity(parse_poly("y^2 + x + 1"));
  ASSERT_EQ(b.branches.size(), 1u);
  const PuiseuxSeries& u = b.branches[0];
  EXPECT_TRUE(close(u.coeff(Frac(-1, 2)), u.coeff(Frac(1, 2)) / Real(2)));
  auto o = ord_at_infinity(u - conjugate(u, 1));
  ASSERT_TRUE(o);
  EXPECT_EQ(*o, Frac(1, 2));
  ParamSeries phi = build_phi(u, Frac(-1, 2));
  EXPECT_EQ(phi.m_phi, 2u);
  EXPECT_EQ(phi.n_phi, 3u);
  EXPECT_TRUE(close(phi.coeffs[1], u.coeff(Frac(1, 2))));
  EXPECT_THROW(build_phi(expansions_at_infinity(parse_poly("y^2 - x^3")).branches[0], Frac(0)), std::invalid_argument);
}
