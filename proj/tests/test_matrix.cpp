#include <doctest.h>

#include <random>

#include "ddbar/matrix.hpp"
#include "generators.hpp"
#include "oracle.hpp"

using ddbar::Cyclotomic;
using ddbar::Matrix;

namespace {

Matrix random_matrix(std::mt19937& rng, size_t rows, size_t cols, unsigned order,
                     int sparsity = 2) {
    Matrix m(rows, cols, order);
    std::uniform_int_distribution<int> coin(0, sparsity);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j)
            if (coin(rng) == 0) m.at(i, j) = gen::random_scalar(rng, order);
    return m;
}

}  // namespace

TEST_CASE("rank of simple matrices") {
    CHECK(Matrix(0, 5, 3).rank() == 0);
    CHECK(Matrix(5, 0, 3).rank() == 0);
    CHECK(Matrix(4, 7, 3).rank() == 0);
    CHECK(Matrix::identity(6, 3).rank() == 6);

    // duplicated column
    Matrix m(2, 3, 1);
    m.at(0, 0) = Cyclotomic::from_int(2, 1);
    m.at(1, 0) = Cyclotomic::from_int(3, 1);
    m.at(0, 1) = Cyclotomic::from_int(4, 1);
    m.at(1, 1) = Cyclotomic::from_int(6, 1);
    m.at(0, 2) = Cyclotomic::from_int(1, 1);
    CHECK(m.rank() == 2);
}

TEST_CASE("bareiss rank agrees with the naive oracle on random matrices") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<size_t> dim(0, 8);
    for (unsigned order : {1u, 3u, 4u}) {
        for (int iter = 0; iter < 60; ++iter) {
            Matrix m = random_matrix(rng, dim(rng), dim(rng), order);
            CAPTURE(order);
            CHECK(m.rank() == oracle::naive_rank(m));
        }
    }
}

TEST_CASE("kernel vectors really are kernel vectors") {
    std::mt19937 rng(777);
    for (int iter = 0; iter < 40; ++iter) {
        Matrix m = random_matrix(rng, 5, 7, 3);
        Matrix k = m.kernel();
        CHECK(k.cols() == m.cols() - m.rank());
        CHECK((m * k).is_zero());
        if (k.cols() > 0) CHECK(k.rank() == k.cols());
    }
}

TEST_CASE("solve recovers a solution exactly") {
    std::mt19937 rng(555);
    for (int iter = 0; iter < 30; ++iter) {
        Matrix a = random_matrix(rng, 6, 4, 3);
        Matrix x = random_matrix(rng, 4, 2, 3, 1);
        Matrix b = a * x;
        Matrix got = a.solve(b);
        CHECK(a * got == b);
    }
    // inconsistent system
    Matrix a(2, 1, 1);
    a.at(0, 0) = Cyclotomic::one(1);
    Matrix b(2, 1, 1);
    b.at(1, 0) = Cyclotomic::one(1);
    CHECK_THROWS_AS(a.solve(b), std::logic_error);
}

TEST_CASE("quotient basis picks complement representatives") {
    // modulus spans e0 + e1; candidates are e0, e1, e2: the quotient has
    // dimension 2 and the reduced representatives pivot at e0 and e2
    Matrix mod(3, 1, 1);
    mod.at(0, 0) = Cyclotomic::one(1);
    mod.at(1, 0) = Cyclotomic::one(1);
    Matrix cand = Matrix::identity(3, 1);
    Matrix reps = ddbar::quotient_basis(cand, mod);
    REQUIRE(reps.cols() == 2);
    CHECK(reps.rank() == 2);
    // stacked against the modulus nothing collapses
    CHECK(mod.hstack(reps).rank() == 3);
}

TEST_CASE("quotient basis dimension matches rank arithmetic on random data") {
    std::mt19937 rng(909);
    for (int iter = 0; iter < 30; ++iter) {
        Matrix m = random_matrix(rng, 6, 8, 3);
        Matrix ker = m.kernel();  // columns live in the 8-dim source space
        Matrix image = random_matrix(rng, 8, 3, 3);
        Matrix reps = ddbar::quotient_basis(ker, image);
        size_t expect = ker.hstack(image).rank() - image.rank();
        CHECK(reps.cols() == expect);
    }
}
