#include "cyclo/groupring.hpp"

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace cyclo {
namespace {

using testing::catalog;
using testing::catalog_names;

class S3Ring : public ::testing::Test {
 protected:
  GroupPtr g = catalog("S3");
  ElemId e = g->identity();
  ElemId t12 = g->element(Permutation::from_cycles("(1 2)", 3).encoding());
  ElemId t13 = g->element(Permutation::from_cycles("(1 3)", 3).encoding());
  ElemId c123 = g->element(Permutation::from_cycles("(1 2 3)", 3).encoding());
  ElemId c132 = g->element(Permutation::from_cycles("(1 3 2)", 3).encoding());

  GroupRingElem b(ElemId x, int c = 1) const { return GroupRingElem::basis(g, x, c); }
};

TEST_F(S3Ring, Arithmetic) {
  const auto a = b(t12, 2) + b(c123, -1);
  EXPECT_TRUE((a + (-a)).is_zero());
  EXPECT_EQ(gr_mul(b(e), b(t12, 3)), b(t12, 3));
  const auto x = b(t12) + b(t13);
  EXPECT_EQ(gr_mul(x, x), b(e, 2) + b(c123) + b(c132));
  EXPECT_EQ(format_group_ring(b(e) + b(t12, -2)), "1*[1,2,3] + -2*[2,1,3]");
  EXPECT_EQ(format_group_ring(GroupRingElem(g)), "0");
}

TEST_F(S3Ring, GroupMismatch) {
  const auto other = catalog("C3");
  try {
    gr_add(b(e), GroupRingElem::one(other));
    FAIL() << "expected GroupMismatch";
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::GroupMismatch);
  }
  EXPECT_THROW(gr_mul(b(e), GroupRingElem::one(other)), Error);
}

TEST_F(S3Ring, Hh0Projection) {
  EXPECT_TRUE(hh0_project(GroupRingElem(g)).empty());
  const auto v = hh0_project(b(t12, 2) + b(t13, 3));
  ASSERT_EQ(v.coeffs.size(), 1U);
  EXPECT_EQ(v[g->class_of(t12)], 5);
}

TEST(Hh0Projection, KillsCommutators) {
  testing::Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const auto& g = catalog(rng.pick(catalog_names()));
    const auto a = testing::random_ring_elem(rng, g, 4), c = testing::random_ring_elem(rng, g, 4);
    EXPECT_TRUE(hh0_project(a * c - c * a).empty());
    EXPECT_EQ(hh0_project(a + c), hh0_project(a) + hh0_project(c));
  }
}

TEST_F(S3Ring, Idempotents) {
  EXPECT_TRUE(is_idempotent(GRMatrix::identity(g, 3)));
  GRMatrix e1(g, 2);
  e1.at(0, 0) = b(e);
  e1.at(0, 1) = b(t12, 7) + b(c123, -2);
  EXPECT_TRUE(is_idempotent(e1));
  GRMatrix e2(g, 2);
  e2.at(0, 0) = b(t12);
  EXPECT_FALSE(is_idempotent(e2));
  try {
    hattori_stallings_rank(e2);
    FAIL() << "expected NotIdempotent";
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::NotIdempotent);
  }
  EXPECT_EQ(trace_to_hh0(e2)[g->class_of(t12)], 1);
  EXPECT_THROW(mat_mul(GRMatrix::identity(g, 2), GRMatrix::identity(g, 3)), Error);
}

TEST_F(S3Ring, HattoriStallingsExamples) {
  HH0Vector three;
  three.add(Group::identity_class(), 3);
  EXPECT_EQ(hattori_stallings_rank(GRMatrix::identity(g, 3)), three);
  GRMatrix e1(g, 2);
  e1.at(0, 0) = b(e);
  e1.at(0, 1) = b(t13, -4);
  HH0Vector one;
  one.add(Group::identity_class(), 1);
  EXPECT_EQ(hattori_stallings_rank(e1), one);
  EXPECT_TRUE(hattori_stallings_rank(GRMatrix::zero(g, 4)).empty());
}

TEST(GRMatrixProperties, TraceCyclicity) {
  testing::Rng rng(12);
  for (int trial = 0; trial < 60; ++trial) {
    const auto& g = catalog(rng.pick(catalog_names()));
    const std::size_t n = 1 + rng.index(3);
    const auto a = testing::random_matrix(rng, g, n), c = testing::random_matrix(rng, g, n);
    EXPECT_EQ(trace_to_hh0(a * c), trace_to_hh0(c * a));
  }
}

TEST(GRMatrixProperties, ConjugationAndAdditivity) {
  testing::Rng rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    const auto& g = catalog(rng.pick(catalog_names()));
    const std::size_t n = 2 + rng.index(2);
    const auto e = testing::random_idempotent(rng, g, n);
    ASSERT_TRUE(is_idempotent(e));
    const auto p = testing::random_elementary_product(rng, g, n, 3);
    ASSERT_EQ(p.u * p.u_inv, GRMatrix::identity(g, n));
    const auto conj = p.u * e * p.u_inv;
    EXPECT_EQ(hattori_stallings_rank(conj), hattori_stallings_rank(e));
    const auto f = testing::random_idempotent(rng, g, 2);
    EXPECT_EQ(hattori_stallings_rank(block_diagonal(e, f)), hattori_stallings_rank(e) + hattori_stallings_rank(f));
  }
}

TEST_F(S3Ring, MatrixFileRoundTrip) {
  const std::string text =
      "matrix n=2 group=s3.grp\n"
      "0 0 1 [1,2,3]\n"
      "0 1 -2 [2,1,3]\n"
      "0 1 5 [2,3,1]\n";
  const auto parsed = parse_matrix_file(text, g);
  EXPECT_EQ(parsed.group_path, "s3.grp");
  EXPECT_EQ(format_matrix_file(parsed.matrix, parsed.group_path), text);
  // Non-canonical input: repeated terms accumulate, zeros vanish, comments ignored.
  const auto messy = parse_matrix_file("# x\nmatrix n=2 group=s3.grp\n0 1 3 [2,1,3]\n0 1 -3 [2,1,3]\n1 1 2 [1,2,3]\n", g);
  EXPECT_EQ(format_matrix_file(messy.matrix, "s3.grp"), "matrix n=2 group=s3.grp\n1 1 2 [1,2,3]\n");
  EXPECT_THROW(parse_matrix_file("matrix n=2 group=x\n2 0 1 [1,2,3]\n", g), Error);
  EXPECT_THROW(parse_matrix_file("matrix n=2 group=x\n0 0 1 [1,2,3,4]\n", g), Error);
  EXPECT_THROW(parse_matrix_file("matrix 2\n", g), Error);
}

TEST(MatrixFile, RandomRoundTrip) {
  testing::Rng rng(14);
  for (int trial = 0; trial < 50; ++trial) {
    const auto& g = catalog(rng.pick(catalog_names()));
    const auto m = testing::random_matrix(rng, g, 1 + rng.index(3));
    const auto text = format_matrix_file(m, "g.grp");
    const auto back = parse_matrix_file(text, g);
    EXPECT_EQ(back.matrix, m);
    EXPECT_EQ(format_matrix_file(back.matrix, back.group_path), text);
  }
}

}  // namespace
}  // namespace cyclo
