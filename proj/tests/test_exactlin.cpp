#include "skewcat/matrix.hpp"

#include "support/rnd.hpp"

#include <doctest.h>

using namespace skewcat;
using testsupport::random_matrix;
using testsupport::test_fields;

namespace {

Matrix mat(const FieldSpec& f, std::vector<std::vector<long long>> rows) {
    std::vector<std::vector<Scalar>> conv;
    for (const auto& r : rows) {
        std::vector<Scalar> row;
        for (long long v : r) row.push_back(Scalar::from_int(f, v));
        conv.push_back(std::move(row));
    }
    return Matrix::from_rows(f, conv);
}

}  // namespace

TEST_CASE("scalar arithmetic over Q stays reduced") {
    FieldSpec q = FieldSpec::rationals();
    Scalar a = Scalar::parse(q, "3/6");
    CHECK(a.str() == "1/2");
    CHECK((a + Scalar::parse(q, "-2/8")).str() == "1/4");
    CHECK((a * a).str() == "1/4");
    CHECK(Scalar::parse(q, "-4/6").str() == "-2/3");
    CHECK(a.inverse().str() == "2");
    CHECK_THROWS_AS(Scalar::zero(q).inverse(), Error);
    CHECK_THROWS_AS(Scalar::parse(q, "1/0"), ParseError);
}

TEST_CASE("scalar arithmetic over F_p") {
    FieldSpec f5 = FieldSpec::prime(5);
    Scalar a = Scalar::from_int(f5, 7);
    CHECK(a.str() == "2");
    CHECK((a + a).str() == "4");
    CHECK((a * a * a).str() == "3");
    CHECK((a.inverse() * a).is_one());
    CHECK(Scalar::from_int(f5, -1).str() == "4");
    CHECK_THROWS_AS(FieldSpec::prime(6), Error);
    CHECK_THROWS_AS(Scalar::parse(f5, "5"), ParseError);
}

TEST_CASE("scalar field mismatch is an error") {
    Scalar a = Scalar::one(FieldSpec::rationals());
    Scalar b = Scalar::one(FieldSpec::prime(2));
    CHECK_THROWS_AS(a + b, FieldMismatchError);
    CHECK_THROWS_AS(a * b, FieldMismatchError);
    CHECK(a != b);
}

TEST_CASE("rref on the stated examples") {
    FieldSpec q = FieldSpec::rationals();
    SUBCASE("proportional rows have rank 1") {
        auto rr = rref(mat(q, {{1, 2}, {2, 4}}));
        CHECK(rr.pivots == std::vector<std::size_t>{0});
    }
    SUBCASE("identity") {
        auto rr = rref(Matrix::identity(q, 3));
        CHECK(rr.pivots == std::vector<std::size_t>{0, 1, 2});
        CHECK(rr.reduced == Matrix::identity(q, 3));
    }
    SUBCASE("equal rows over F_2") {
        auto rr = rref(mat(FieldSpec::prime(2), {{1, 1}, {1, 1}}));
        CHECK(rr.pivots.size() == 1);
    }
}

TEST_CASE("rref rejects mixed-field entries") {
    Matrix m = Matrix::identity(FieldSpec::rationals(), 2);
    m.at(0, 1) = Scalar::one(FieldSpec::prime(3));
    CHECK_THROWS_AS(rref(m), FieldMismatchError);
    CHECK_THROWS_AS(m.set(0, 0, Scalar::one(FieldSpec::prime(3))), FieldMismatchError);
}

TEST_CASE("kernel_basis examples") {
    FieldSpec q = FieldSpec::rationals();
    CHECK(kernel_basis(Matrix(q, 2, 2)).cols() == 2);
    CHECK(kernel_basis(Matrix::identity(q, 3)).cols() == 0);

    // kernel of [[1,1]] is spanned by (1,-1)ᵀ up to scaling: check m·v = 0
    Matrix m = mat(q, {{1, 1}});
    Matrix k = kernel_basis(m);
    REQUIRE(k.cols() == 1);
    CHECK((m * k).is_zero());
    CHECK(!k.column(0)[0].is_zero());
    CHECK(k.column(0)[0] == -k.column(0)[1]);
}

TEST_CASE("solve examples") {
    FieldSpec q = FieldSpec::rationals();
    Matrix rhs = mat(q, {{5}, {7}});
    CHECK(*solve(Matrix::identity(q, 2), rhs) == rhs);
    CHECK(!solve(mat(q, {{1}, {1}}), mat(q, {{1}, {2}})).has_value());
    auto x = solve(mat(q, {{2}}), mat(q, {{1}}));
    REQUIRE(x.has_value());
    CHECK(x->at(0, 0).str() == "1/2");
    CHECK_THROWS_AS(solve(mat(q, {{1}}), mat(q, {{1}, {2}})), ShapeError);
}

TEST_CASE("inverse") {
    FieldSpec q = FieldSpec::rationals();
    Matrix m = mat(q, {{2, 1}, {1, 1}});
    auto inv = inverse(m);
    REQUIRE(inv.has_value());
    CHECK((m * *inv).is_identity());
    CHECK((*inv * m).is_identity());
    CHECK(!inverse(mat(q, {{1, 1}, {2, 2}})).has_value());
}

TEST_CASE("rank-nullity and solve exactness on random matrices") {
    std::mt19937_64 rng(42);
    for (const auto& f : test_fields()) {
        std::uniform_int_distribution<std::size_t> dim(0, 6);
        for (int iter = 0; iter < 400; ++iter) {
            Matrix m = random_matrix(f, dim(rng), dim(rng), rng);
            auto rr = rref(m);
            Matrix k = kernel_basis(m);
            CHECK(rr.pivots.size() + k.cols() == m.cols());
            if (k.cols() > 0) CHECK((m * k).is_zero());

            // rref idempotence
            auto rr2 = rref(rr.reduced);
            CHECK(rr2.reduced == rr.reduced);
            CHECK(rr2.pivots == rr.pivots);

            // m * x = rhs holds exactly whenever solve reports a solution
            if (m.rows() > 0) {
                Matrix rhs = random_matrix(f, m.rows(), 1, rng);
                auto x = solve(m, rhs);
                if (x) CHECK(m * *x == rhs);
            }
        }
    }
}

TEST_CASE("solve finds a solution whenever one exists") {
    std::mt19937_64 rng(7);
    for (const auto& f : test_fields()) {
        std::uniform_int_distribution<std::size_t> dim(1, 5);
        for (int iter = 0; iter < 200; ++iter) {
            Matrix m = random_matrix(f, dim(rng), dim(rng), rng);
            Matrix x0 = random_matrix(f, m.cols(), 1, rng);
            Matrix rhs = m * x0;  // consistent by construction
            auto x = solve(m, rhs);
            REQUIRE(x.has_value());
            CHECK(m * *x == rhs);
        }
    }
}
