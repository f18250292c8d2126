#include "doctest.h"
#include "detset/detgen.hpp"
#include "detset/errors.hpp"
#include "detset/families.hpp"
#include "detset/structure.hpp"
#include "detset/triangular.hpp"

using namespace detset;

TEST_CASE("matrix arithmetic mod p") {
  MatrixFp a(2, 7);
  a.set(0, 0, 3);
  a.set(0, 1, 5);
  a.set(1, 1, 2);
  CHECK(a.det() == 6);
  const auto ai = a.inverse();
  CHECK(a * ai == MatrixFp::identity(2, 7));
  CHECK(ai * a == MatrixFp::identity(2, 7));
  CHECK((a + a)(0, 1) == 3);
  CHECK((a - a) == MatrixFp(2, 7));
  CHECK(a.transpose()(1, 0) == 5);
  CHECK(a.is_upper_triangular());
  CHECK_FALSE(a.transpose().is_upper_triangular());
  CHECK(MatrixFp::scalar(3, 5, 4).is_scalar());
  CHECK_THROWS_AS(MatrixFp(2, 7).inverse(), InvalidArgument);
  CHECK(inv_mod(3, 5) == 2);
  CHECK(inv_mod(5, 7) == 3);
}

TEST_CASE("reversal is conjugation by the antidiagonal") {
  const std::uint32_t p = 5;
  const auto j = MatrixFp::antidiagonal(3, p);
  CHECK(j * j == MatrixFp::identity(3, p));
  CHECK(MatrixFp::identity(3, p).reversed() == MatrixFp::identity(3, p));
  MatrixFp x(3, p);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t k = 0; k < 3; ++k) x.set(i, k, 3 * i + k + 1);
  CHECK(x.reversed() == j * x * j);
  CHECK(x.reversed()(0, 0) == x(2, 2));
}

TEST_CASE("triangular group orders") {
  CHECK(TriangularSpec{2, 3, true}.order() == 6);
  CHECK(TriangularSpec{3, 5, true}.order() == 2000);
  CHECK(TriangularSpec{2, 3, false}.order() == 12);
  CHECK(TriangularSpec{3, 5, true}.descriptor() == "ST(3,5)");
  CHECK(TriangularSpec{2, 3, false}.descriptor() == "T(2,3)");

  const auto st23 = st_group({2, 3, true});
  CHECK(st23.group->order() == 6);
  CHECK(isomorphic(st23.group, share(cyclic(6))));
  CHECK(st_group({2, 3, false}).group->order() == 12);
  CHECK(upper_triangular_matrices({2, 5, false}).size() == 80);
  CHECK_THROWS_AS(st_group({2, 4, true}), InvalidArgument);
  CHECK_THROWS_AS(st_group({1, 3, true}), InvalidArgument);
  Caps caps;
  caps.max_order = 1000;
  CHECK_THROWS_AS(st_group({3, 5, true}, caps), CapExceeded);
}

TEST_CASE("the concrete group multiplies as matrices") {
  const auto g = st_group({3, 3, false});
  CHECK(g.group->order() == 8 * 27);
  CHECK(g.group->label(0) == MatrixFp::identity(3, 3).label());
  for (Element a = 0; a < g.group->order(); a += 7)
    for (Element b = 0; b < g.group->order(); b += 11) {
      const auto prod = g.find(g.matrices[a] * g.matrices[b]);
      REQUIRE(prod.has_value());
      CHECK(*prod == g.group->mul(a, b));
    }
  CHECK(generates(*g.group, ElementSubset(g.generators)));
}

TEST_CASE("the pair B, C") {
  const auto five = theorem_BC(5);
  CHECK(five.b == MatrixFp::diagonal({1, 2, 3}, 5));
  CHECK(five.b.det() == 1);
  CHECK(five.c.det() == 1);
  CHECK(theorem_BC(7).b.det() == 1);
  CHECK_THROWS_AS(theorem_BC(3), InvalidArgument);
  CHECK_THROWS_AS(theorem_BC(9), InvalidArgument);
  for (std::uint32_t p = 5; p <= 199; ++p) {
    if (!is_prime(p)) continue;
    CAPTURE(p);
    const auto bc = theorem_BC(p);
    CHECK(bc.b.det() == 1);
    CHECK(bc.c.det() == 1);
  }
  for (std::uint32_t p : {5u, 7u, 11u}) {
    const auto c = theorem_BC(p).c;
    auto power = MatrixFp::identity(c.n(), p);
    std::size_t order = 0;
    do {
      power = power * c;
      ++order;
    } while (!(power == MatrixFp::identity(c.n(), p)));
    CHECK(order == p);
  }
}

TEST_CASE("joint centralizer of B and C is the scalars") {
  CHECK(joint_centralizer_dim(5) == 1);
  CHECK(joint_centralizer_dim(7) == 1);
  CHECK(joint_centralizer_dim(11) == 1);
  CHECK(joint_centralizer_dim(47) == 1);
  const auto bc = theorem_BC(7);
  CHECK(upper_triangular_centralizer_dim({bc.b}) == 5);
  CHECK(upper_triangular_centralizer_dim({bc.c}) == 5);
  CHECK_THROWS_AS(upper_triangular_centralizer_dim({}), InvalidArgument);
}

TEST_CASE("centralizer dimension agrees with enumeration") {
  const std::uint32_t p = 3;
  const auto bc = MatrixFp::diagonal({1, 2}, p);
  std::size_t commuting = 0;
  for (std::uint32_t a = 0; a < p; ++a)
    for (std::uint32_t b = 0; b < p; ++b)
      for (std::uint32_t d = 0; d < p; ++d) {
        MatrixFp q(2, p);
        q.set(0, 0, a);
        q.set(0, 1, b);
        q.set(1, 1, d);
        commuting += q * bc == bc * q;
      }
  std::size_t expected = 1;
  for (std::size_t k = 0; k < upper_triangular_centralizer_dim({bc}); ++k) expected *= p;
  CHECK(commuting == expected);
}

TEST_CASE("case ii corner") {
  CHECK(case_ii_corner(5) == 2);
  CHECK(case_ii_corner(7) == 3);
  CHECK(case_ii_excluded(5));
  CHECK(case_ii_excluded(7));
  CHECK(case_ii_excluded(11));
}

TEST_CASE("structural automorphisms") {
  const auto g = st_group({2, 3, true});
  const auto id = structural_automorphism(g, MatrixFp::identity(2, 3), StructuralCase::conjugation);
  CHECK(id.is_identity());
  const auto sc = structural_automorphism(g, MatrixFp::scalar(2, 3, 2), StructuralCase::conjugation);
  CHECK(sc.is_identity());
  const auto it = structural_automorphism(g, MatrixFp::identity(2, 3), StructuralCase::inverse_transpose);
  CHECK(is_automorphism(*g.group, it.image));
  CHECK(exhaustive_automorphisms(*g.group).size() == 2);

  MatrixFp singular(2, 3);
  CHECK_THROWS_AS(structural_automorphism(g, singular, StructuralCase::conjugation), InvalidArgument);
  MatrixFp lower = MatrixFp::identity(2, 3);
  lower.set(1, 0, 1);
  CHECK_THROWS_AS(structural_automorphism(g, lower, StructuralCase::conjugation), InvalidArgument);
}

TEST_CASE("structural maps compose") {
  const auto g = st_group({3, 3, true});
  const auto qs = upper_triangular_matrices({3, 3, false});
  for (std::size_t i = 0; i < qs.size(); i += 37)
    for (std::size_t k = 5; k < qs.size(); k += 41) {
      const auto f1 = structural_automorphism(g, qs[i], StructuralCase::conjugation);
      const auto f2 = structural_automorphism(g, qs[k], StructuralCase::conjugation);
      CHECK(f2.after(f1) == structural_automorphism(g, qs[k] * qs[i], StructuralCase::conjugation));
    }
}

TEST_CASE("conjugation by upper triangular Q keeps the diagonal") {
  const auto qs = upper_triangular_matrices({3, 5, false});
  const auto bc = theorem_BC(5);
  for (std::size_t i = 0; i < qs.size(); i += 13) {
    const auto image = structural_image(qs[i], StructuralCase::conjugation, bc.b);
    CHECK(image.diagonal_entries() == bc.b.diagonal_entries());
    CHECK(structural_image(qs[i], StructuralCase::inverse_transpose, bc.b)(0, 0) == case_ii_corner(5));
  }
}

TEST_CASE("gamma bound from the diagonal quotient") {
  CHECK(diag_quotient_gamma_bound({3, 5, true}) == 2);
  CHECK(diag_quotient_gamma_bound({5, 7, true}) == 4);
  CHECK(diag_quotient_gamma_bound({2, 3, true}) == 1);
  CHECK(diag_quotient_gamma_bound({2, 11, true}) == 1);
  const std::size_t z4[] = {4, 4};
  CHECK(generating_number(share(abelian(z4))).gamma == 2);
}

TEST_CASE("tau on a small concrete group") {
  const auto g = st_group({3, 3, true});
  const auto tau = tau_homomorphism(g);
  CHECK(tau.is_homomorphism());
  CHECK(tau.is_surjective());
  CHECK(tau.codomain->order() == 4);
  const auto kernel = tau.kernel();
  CHECK(kernel.size() == 27);
  for (Element x : kernel) CHECK(g.matrices[x].diagonal_entries() == std::vector<std::uint32_t>{1, 1, 1});
  CHECK(isomorphic(share(promote(*g.group, kernel)), share(unitriangular(3, 3))));
}

TEST_CASE("verdicts for p = 7 and 11") {
  for (std::uint32_t p : {7u, 11u}) {
    const auto v = verify_BC_determining(p);
    CHECK(v.n == p - 2);
    CHECK(v.centralizer_dim == 1);
    CHECK(v.case_ii_excluded);
    CHECK(v.gamma_lower_bound == p - 3);
    CHECK(v.alpha == 2);
    CHECK(v.conditional);
    CHECK(v.nonabelian);
    CHECK(v.c_order == p);
    CHECK_FALSE(v.concrete.has_value());
    CHECK(v.holds());
  }
}
