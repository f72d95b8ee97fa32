#include <doctest.h>

#include <random>

#include "testutil.hpp"
#include "trihom/scalar.hpp"
#include "trihom/tensor.hpp"

using namespace trihom;

namespace {

Tensor basis5(int dim, int a, int b, int c, int d, int e) {
  int idx[5] = {a, b, c, d, e};
  return Tensor::basis(dim, idx);
}

}  // namespace

TEST_CASE("scalar arithmetic is exact and canonical") {
  Scalar a(Rat(1, 3)), b(Rat(1, 6));
  CHECK(a + b == Scalar(Rat(1, 2)));
  CHECK((a - a).is_zero());
  CHECK(a * Scalar(3) == Scalar(1));
  CHECK(Scalar(1) / Scalar(Rat(2, 7)) == Scalar(Rat(7, 2)));
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), Error);

  Scalar z(Rat(1), Rat(2));  // 1 + 2i
  CHECK(z * z.conj() == Scalar(5));
  CHECK(z / z == Scalar(1));
  CHECK(z.magnitude() == Rat(2));
}

TEST_CASE("scalar literals round-trip") {
  for (const char* text : {"0", "5", "-3", "2/3", "-7/4", "1+2i", "-1/2-3/4i", "2i", "-1i"}) {
    Scalar s = scalar_parse(text, true);
    CHECK(scalar_parse(scalar_to_string(s), true) == s);
  }
  CHECK(scalar_parse("4/6", false) == Scalar(Rat(2, 3)));
  CHECK(scalar_to_string(scalar_parse("4/6", false)) == "2/3");
  CHECK_THROWS_AS(scalar_parse("1+2i", false), ParseError);
  CHECK_THROWS_AS(scalar_parse("1/0", false), ParseError);
  CHECK_THROWS_AS(scalar_parse("", false), ParseError);
  CHECK_THROWS_AS(scalar_parse("a/b", false), ParseError);
  CHECK_THROWS_AS(scalar_parse("1.5", false), ParseError);
}

TEST_CASE("matrix inverse and power") {
  std::mt19937_64 rng(7);
  Matrix a(2, 2);
  a.at(0, 0) = Scalar(1);
  a.at(0, 1) = Scalar(2);
  a.at(1, 0) = Scalar(3);
  a.at(1, 1) = Scalar(4);
  auto inv = matrix_inverse(a);
  REQUIRE(inv.has_value());
  CHECK(a * *inv == Matrix::identity(2));
  CHECK(matrix_power(a, -2) == *inv * *inv);

  Matrix singular(2, 2);
  singular.at(0, 0) = Scalar(1);
  CHECK(!matrix_inverse(singular).has_value());
  CHECK_THROWS_AS(matrix_power(singular, -1), Error);
}

TEST_CASE("nullspace is exact") {
  // Rank-1 map (x, y, z) -> x + 2y + 3z.
  Matrix m(1, 3);
  m.at(0, 0) = Scalar(1);
  m.at(0, 1) = Scalar(2);
  m.at(0, 2) = Scalar(3);
  auto basis = nullspace(m);
  REQUIRE(basis.size() == 2);
  for (const Vec& v : basis) CHECK(vec_is_zero(m.apply(v)));
  CHECK(nullspace(Matrix::identity(3)).empty());
  CHECK(nullspace(Matrix::zero(2, 2)).size() == 2);
}

TEST_CASE("switching operator on basis tensors") {
  int e12[] = {0, 1};
  Tensor t = Tensor::basis(2, e12);
  int e21[] = {1, 0};
  CHECK(sigma_switch(t, 1, 2) == Tensor::basis(2, e21));
}

TEST_CASE("switching operator is an involution on dense tensors") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    Tensor t = test::random_tensor(rng, 3, 4);
    for (int i = 1; i <= 4; ++i)
      for (int j = i; j <= 4; ++j) CHECK(sigma_switch(sigma_switch(t, i, j), i, j) == t);
  }
}

TEST_CASE("switching extends linearly") {
  // sigma_23(e1 x e2 x e3 + 2 e1 x e3 x e2) = e1 x e3 x e2 + 2 e1 x e2 x e3,
  // expanded by hand term by term.
  int i123[] = {0, 1, 2};
  int i132[] = {0, 2, 1};
  Tensor t = Tensor::basis(3, i123) + Scalar(2) * Tensor::basis(3, i132);
  Tensor expected = Tensor::basis(3, i132) + Scalar(2) * Tensor::basis(3, i123);
  CHECK(sigma_switch(t, 2, 3) == expected);
}

TEST_CASE("omega permutations match their defining images") {
  Tensor t = basis5(5, 0, 1, 2, 3, 4);
  CHECK(omega(t, 1) == basis5(5, 2, 3, 0, 1, 4));
  CHECK(omega(t, 2) == basis5(5, 3, 4, 0, 1, 2));
  CHECK(omega(t, 3) == basis5(5, 4, 2, 0, 1, 3));
  CHECK_THROWS_AS(omega(t, 4), Error);
  CHECK_THROWS_AS(omega(Tensor(5, 4), 1), Error);
}

TEST_CASE("omega permutations are bijections preserving slot contents") {
  int n = 3;
  for (int m = 1; m <= 3; ++m) {
    std::vector<bool> hit(243, false);
    int idx[5];
    for (int flat = 0; flat < 243; ++flat) {
      int rest = flat;
      for (int s = 4; s >= 0; --s) {
        idx[s] = rest % n;
        rest /= n;
      }
      Tensor img = omega(Tensor::basis(n, idx), m);
      int found = -1;
      std::vector<int> out(5);
      for (std::size_t f = 0; f < img.size(); ++f)
        if (!img[f].is_zero()) {
          CHECK(img[f] == Scalar(1));
          CHECK(found == -1);
          found = static_cast<int>(f);
          img.decode(f, out);
        }
      REQUIRE(found >= 0);
      CHECK(!hit[found]);
      hit[found] = true;
      // Same multiset of slot contents.
      std::vector<int> a(idx, idx + 5), b = out;
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      CHECK(a == b);
    }
  }
}

TEST_CASE("insertion places a factor at the requested slot") {
  int i4[] = {0, 1, 2, 3};
  Tensor t = Tensor::basis(4, i4);
  Vec a = basis_vec(4, 3);
  int expected_idx[] = {0, 3, 1, 2, 3};
  CHECK(insert_at(t, a, 2) == Tensor::basis(4, expected_idx));

  int i1[] = {0};
  int i12[] = {0, 1};
  CHECK(insert_at(Tensor::basis(2, i1), basis_vec(2, 1), 2) == Tensor::basis(2, i12));
  CHECK_THROWS_AS(insert_at(t, a, 6), Error);
  CHECK_THROWS_AS(insert_at(t, basis_vec(3, 0), 1), Error);
}

TEST_CASE("insertion is bilinear") {
  // (e2 x e3 - e3 x e2) inserted with e1 at slot 1, expanded by hand.
  int i23[] = {1, 2};
  int i32[] = {2, 1};
  Tensor t = Tensor::basis(3, i23) - Tensor::basis(3, i32);
  int i123[] = {0, 1, 2};
  int i132[] = {0, 2, 1};
  CHECK(insert_at(t, basis_vec(3, 0), 1) ==
        Tensor::basis(3, i123) - Tensor::basis(3, i132));
}

TEST_CASE("insertion then contraction against the dual basis recovers the tensor") {
  std::mt19937_64 rng(13);
  Tensor t = test::random_tensor(rng, 3, 3);
  for (int pos = 1; pos <= 4; ++pos) {
    for (int unit = 0; unit < 3; ++unit) {
      Tensor big = insert_at(t, basis_vec(3, unit), pos);
      // Contract slot pos against the dual basis vector of e_unit.
      Tensor back(3, 3);
      std::vector<int> idx(4), sub(3);
      for (std::size_t flat = 0; flat < big.size(); ++flat) {
        if (big[flat].is_zero()) continue;
        big.decode(flat, idx);
        if (idx[pos - 1] != unit) continue;
        int w = 0;
        for (int s = 0; s < 4; ++s)
          if (s != pos - 1) sub[w++] = idx[s];
        back.at(sub) += big[flat];
      }
      CHECK(back == t);
    }
  }
}

TEST_CASE("slot maps act as a Kronecker product") {
  std::mt19937_64 rng(17);
  Tensor t = test::random_tensor(rng, 3, 2);
  std::vector<Matrix> id2(2, Matrix::identity(3));
  CHECK(apply_slot_maps(id2, t) == t);

  std::vector<Matrix> scalars = {Scalar(2) * Matrix::identity(3),
                                 Scalar(3) * Matrix::identity(3)};
  int i11[] = {0, 0};
  Tensor e11 = Tensor::basis(3, i11);
  CHECK(apply_slot_maps(scalars, e11) == Scalar(6) * e11);

  // diag(1, 2, 1/2) twice on e2 x e3: eigenvalue product 2 * 1/2 = 1.
  Matrix d(3, 3);
  d.at(0, 0) = Scalar(1);
  d.at(1, 1) = Scalar(2);
  d.at(2, 2) = Scalar(Rat(1, 2));
  std::vector<Matrix> dd = {d, d};
  int i23[] = {1, 2};
  Tensor e23 = Tensor::basis(3, i23);
  CHECK(apply_slot_maps(dd, e23) == e23);
}

TEST_CASE("slot maps compose slotwise") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 4; ++trial) {
    Tensor t = test::random_tensor(rng, 2, 3);
    std::vector<Matrix> m(3), n(3), mn(3);
    for (int s = 0; s < 3; ++s) {
      m[s] = test::random_matrix(rng, 2, 2);
      n[s] = test::random_matrix(rng, 2, 2);
      mn[s] = m[s] * n[s];
    }
    CHECK(apply_slot_maps(m, apply_slot_maps(n, t)) == apply_slot_maps(mn, t));
  }
}

TEST_CASE("wedge3 expands to the six signed permutations") {
  Vec e1 = basis_vec(3, 0), e2 = basis_vec(3, 1), e3 = basis_vec(3, 2);
  Tensor w = wedge3(e1, e2, e3);
  int count = 0;
  std::vector<int> idx(3);
  for (std::size_t flat = 0; flat < w.size(); ++flat) {
    if (w[flat].is_zero()) continue;
    ++count;
    w.decode(flat, idx);
    CHECK(w[flat].magnitude() == Rat(1));
  }
  CHECK(count == 6);
  int i123[] = {0, 1, 2};
  int i213[] = {1, 0, 2};
  CHECK(w.at(i123) == Scalar(1));
  CHECK(w.at(i213) == Scalar(-1));
}

TEST_CASE("wedge3 is alternating") {
  std::mt19937_64 rng(23);
  Vec e1 = basis_vec(3, 0), e2 = basis_vec(3, 1), e3 = basis_vec(3, 2);
  CHECK(wedge3(e1, e1, e2).is_zero());
  CHECK(sigma_switch(wedge3(e1, e2, e3), 1, 2) == -wedge3(e1, e2, e3));
  for (int trial = 0; trial < 5; ++trial) {
    Vec u = test::random_vec(rng, 3), v = test::random_vec(rng, 3), w = test::random_vec(rng, 3);
    CHECK(wedge3(u, v, w) == -wedge3(v, u, w));
    CHECK(wedge3(u, v, w) == -wedge3(u, w, v));
    CHECK(wedge3(u, u, w).is_zero());
    CHECK(wedge3(u, v, v).is_zero());
  }
}

TEST_CASE("arity-0 tensors hold a single scalar") {
  Tensor t(4, 0);
  CHECK(t.size() == 1);
  t[0] = Scalar(Rat(3, 2));
  CHECK(t.max_abs() == Rat(3, 2));
}
