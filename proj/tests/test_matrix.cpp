#include <doctest.h>

#include "quadgraph/matrix.hpp"

using namespace quadgraph;

namespace {

std::uint64_t rng_state = 0x853c49e6748fea9bull;
int rnd(int bound) {
    rng_state = rng_state * 6364136223846793005ull + 1442695040888963407ull;
    return int((rng_state >> 33) % std::uint64_t(bound));
}

Matrix random_matrix(const FieldRef& f, int r, int c) {
    Matrix m(f, r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.raw(i, j) = std::uint16_t(rnd(f->order()));
    return m;
}

}  // namespace

TEST_CASE("rref is idempotent and rank is sane") {
    auto f = FieldSpec::from_order(5);
    for (int trial = 0; trial < 50; ++trial) {
        Matrix m = random_matrix(f, 3, 5);
        int rank = 0;
        Matrix r = m.rref(&rank);
        CHECK(rank <= 3);
        int rank2 = 0;
        CHECK(r.rref(&rank2) == r);
        CHECK(rank2 == rank);
    }
}

TEST_CASE("inverse and identity") {
    auto f = FieldSpec::from_order(7);
    Matrix id = Matrix::identity(f, 4);
    CHECK(*id.inverse() == id);
    int invertible = 0;
    for (int trial = 0; trial < 60; ++trial) {
        Matrix m = random_matrix(f, 4, 4);
        auto inv = m.inverse();
        if (!inv) continue;
        ++invertible;
        CHECK(m * *inv == id);
        CHECK(*inv * m == id);
    }
    CHECK(invertible > 0);
}

TEST_CASE("right kernel annihilates") {
    auto f = FieldSpec::from_order(3);
    for (int trial = 0; trial < 50; ++trial) {
        Matrix m = random_matrix(f, 2, 5);
        Matrix ker = m.right_kernel();
        CHECK(ker.rows() == 5 - m.rank());
        Matrix prod = m * ker.transpose();
        CHECK(prod.is_zero());
        CHECK(ker.rank() == ker.rows());
    }
}

TEST_CASE("product shapes and errors") {
    auto f = FieldSpec::from_order(3);
    Matrix a = random_matrix(f, 2, 3), b = random_matrix(f, 3, 4);
    CHECK((a * b).rows() == 2);
    CHECK((a * b).cols() == 4);
    CHECK_THROWS_AS(b * a, DimensionError);
    auto f5 = FieldSpec::from_order(5);
    CHECK_THROWS_AS(a * random_matrix(f5, 3, 3), FieldError);
    CHECK((a * b).transpose() == b.transpose() * a.transpose());
}
