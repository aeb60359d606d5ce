#include <gtest/gtest.h>

#include <random>

#include "hyperwalk/operators.hpp"
#include "oracles.hpp"

using namespace hyperwalk;

namespace {

bool bit_equal(const StateVector& a, const StateVector& b) {
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (a[i] != b[i]) return false;
    }
    return true;
}

}  // namespace

TEST(Involution, ActsOnBasisVectors) {
    const Level l1(1);
    EXPECT_TRUE(bit_equal(apply_involution(0, StateVector::vacuum(l1)),
                          StateVector::basis(l1, NodeIndex{0b01})));
    EXPECT_TRUE(bit_equal(apply_involution(1, StateVector::basis(l1, NodeIndex{0b01})),
                          StateVector::basis(l1, NodeIndex{0b11})));
    EXPECT_TRUE(bit_equal(apply_involution(0, StateVector::basis(l1, NodeIndex{0b11})),
                          StateVector::basis(l1, NodeIndex{0b10})));
}

TEST(Involution, RejectsElementOutsideLevel) {
    const Level l2(2);
    EXPECT_THROW(apply_involution(3, StateVector::vacuum(l2)), std::out_of_range);
    EXPECT_THROW(apply_involution(-1, StateVector::vacuum(l2)), std::out_of_range);
}

TEST(Involution, MatchesDefiningMatrix) {
    for (int L = 0; L <= 4; ++L) {
        const Level level(L);
        for (int k = 0; k <= L; ++k) {
            const DenseMatrix m = materialize_matrix(OperatorId::involution(k), level);
            const Eigen::MatrixXd ref = oracle::involution_matrix(k, level.order());
            for (std::size_t r = 0; r < m.dim; ++r)
                for (std::size_t c = 0; c < m.dim; ++c) EXPECT_EQ(m(r, c), complex(ref(r, c)));
        }
    }
}

TEST(InvolutionProperties, UnitaryInvolutiveAndCommuting) {
    std::mt19937_64 rng(11);
    for (int L = 0; L <= 6; ++L) {
        const Level level(L);
        const StateVector xi = oracle::random_state(level, rng);
        for (int j = 0; j <= L; ++j) {
            const StateVector once = apply_involution(j, xi);
            EXPECT_NEAR(once.norm_squared(), xi.norm_squared(), 1e-14);  // summation order differs
            EXPECT_TRUE(bit_equal(apply_involution(j, once), xi));
            for (int k = 0; k <= L; ++k) {
                EXPECT_TRUE(bit_equal(apply_involution(k, once),
                                      apply_involution(j, apply_involution(k, xi))));
            }
        }
    }
}

TEST(InvolutionProduct, EmptyProductIsIdentity) {
    std::mt19937_64 rng(3);
    const StateVector xi = oracle::random_state(Level(3), rng);
    EXPECT_TRUE(bit_equal(apply_involution_product(NodeIndex{}, xi), xi));
}

TEST(InvolutionProduct, CreatesBasisVectorsFromVacuum) {
    EXPECT_TRUE(bit_equal(apply_involution_product(NodeIndex{0b11}, StateVector::vacuum(Level(1))),
                          StateVector::basis(Level(1), NodeIndex{0b11})));
    const Level l4(4);
    for (NodeIndex s : all_nodes(l4)) {
        EXPECT_TRUE(bit_equal(apply_involution_product(s, StateVector::vacuum(l4)),
                              StateVector::basis(l4, s)));
    }
}

TEST(InvolutionProduct, EqualsComposedInvolutionsAndIsInvolutive) {
    std::mt19937_64 rng(5);
    const Level l5(5);
    const StateVector xi = oracle::random_state(l5, rng);
    for (NodeIndex s : all_nodes(l5)) {
        StateVector composed = xi;
        for (int k = 0; k <= 5; ++k) {
            if (s.contains(k)) apply_involution_in_place(k, composed);
        }
        const StateVector product = apply_involution_product(s, xi);
        EXPECT_TRUE(bit_equal(product, composed));
        EXPECT_TRUE(bit_equal(apply_involution_product(s, product), xi));
    }
}

TEST(HatInvolution, MatchesLiteralProductForm) {
    for (int L = 0; L <= 4; ++L) {
        const Level level(L);
        for (NodeIndex s : all_nodes(level)) {
            const DenseMatrix m = materialize_matrix(OperatorId::hat(s), level);
            const Eigen::MatrixXd ref = oracle::hat_matrix(s.bits, level.order());
            for (std::size_t r = 0; r < m.dim; ++r)
                for (std::size_t c = 0; c < m.dim; ++c)
                    EXPECT_NEAR(std::abs(m(r, c) - ref(r, c)), 0.0, 1e-12);
        }
    }
}

TEST(HatInvolution, OrthogonalProjectorRelations) {
    std::mt19937_64 rng(17);
    for (int L = 0; L <= 5; ++L) {
        const Level level(L);
        const double dim = static_cast<double>(level.dim());
        const StateVector xi = oracle::random_state(level, rng);
        for (NodeIndex s : all_nodes(level)) {
            const StateVector hs = apply_hat_involution(s, xi);
            EXPECT_LE(max_abs_diff(apply_hat_involution(s, hs), dim * hs), 1e-10);
            for (NodeIndex t : all_nodes(level)) {
                if (t == s) continue;
                EXPECT_LE(apply_hat_involution(t, hs).norm(), 1e-10);
            }
        }
    }
}

TEST(HatInvolution, MapsVacuumToScaledEigenvector) {
    const Level l3(3);
    for (NodeIndex s : all_nodes(l3)) {
        const StateVector expected = std::sqrt(static_cast<double>(l3.dim())) * eigenvector(s, l3);
        EXPECT_LE(max_abs_diff(apply_hat_involution(s, StateVector::vacuum(l3)), expected), 1e-12);
    }
}

TEST(Laplacian, TwoByTwoCase) {
    const StateVector out = apply_laplacian(StateVector::vacuum(Level(0)));
    EXPECT_EQ(out[0], complex(1.0));
    EXPECT_EQ(out[1], complex(-1.0));
}

TEST(Laplacian, MatchesDefiningMatrix) {
    for (int L = 0; L <= 6; ++L) {
        const Level level(L);
        const DenseMatrix m = materialize_matrix(OperatorId::laplacian(), level);
        const Eigen::MatrixXd ref = oracle::laplacian_matrix(level.order());
        for (std::size_t r = 0; r < m.dim; ++r)
            for (std::size_t c = 0; c < m.dim; ++c) EXPECT_EQ(m(r, c), complex(ref(r, c)));
        EXPECT_TRUE(m.is_hermitian());
    }
}

TEST(Laplacian, EigenvectorsAndKernel) {
    for (int L = 0; L <= 6; ++L) {
        const Level level(L);
        for (NodeIndex s : all_nodes(level)) {
            const StateVector z = eigenvector(s, level);
            const double lambda = 2.0 * (level.order() - cardinality(s));
            EXPECT_LE(max_abs_diff(apply_laplacian(z), lambda * z), 1e-12);
        }
        const StateVector uniform = eigenvector(level.full(), level);
        EXPECT_NEAR(uniform[0].real(), 1.0 / std::sqrt(static_cast<double>(level.dim())), 1e-15);
        EXPECT_LE(apply_laplacian(uniform).norm(), 1e-12);
    }
}

TEST(LaplacianProperties, SelfAdjointAndPositive) {
    std::mt19937_64 rng(23);
    for (int L = 0; L <= 10; ++L) {
        const Level level(L);
        for (int rep = 0; rep < 3; ++rep) {
            const StateVector xi = oracle::random_state(level, rng);
            const StateVector eta = oracle::random_state(level, rng);
            EXPECT_LE(std::abs(inner_product(apply_laplacian(xi), eta) -
                               inner_product(xi, apply_laplacian(eta))),
                      1e-12);
            const complex q = inner_product(xi, apply_laplacian(xi));
            EXPECT_GE(q.real(), -1e-12);
            EXPECT_NEAR(q.imag(), 0.0, 1e-12);
        }
    }
}

TEST(InnerProduct, BasisAndEigenbasisOverlaps) {
    const Level l3(3);
    const double scale = 1.0 / std::sqrt(static_cast<double>(l3.dim()));
    for (NodeIndex s : all_nodes(l3)) {
        const StateVector zs = StateVector::basis(l3, s);
        for (NodeIndex t : all_nodes(l3)) {
            EXPECT_EQ(inner_product(zs, StateVector::basis(l3, t)), complex(s == t ? 1.0 : 0.0));
            const double expected = scale * oracle::parity_sign(oracle::count_difference(s.bits, t.bits, 4));
            EXPECT_NEAR(std::abs(inner_product(zs, eigenvector(t, l3)) - expected), 0.0, 1e-15);
            EXPECT_NEAR(std::abs(inner_product(eigenvector(t, l3), zs) - expected), 0.0, 1e-15);
        }
    }
}

TEST(InnerProduct, ConjugateLinearInFirstArgument) {
    const Level l0(0);
    const StateVector a(l0, {complex(0, 1), 0.0});
    const StateVector b(l0, {1.0, 0.0});
    EXPECT_EQ(inner_product(a, b), complex(0, -1));
}

TEST(InnerProduct, RejectsMismatchedLevels) {
    EXPECT_THROW(inner_product(StateVector::vacuum(Level(1)), StateVector::vacuum(Level(2))),
                 std::invalid_argument);
}

TEST(Materialize, SmallMatrices) {
    const DenseMatrix lap = materialize_matrix(OperatorId::laplacian(), Level(0));
    EXPECT_EQ(lap(0, 0), complex(1));
    EXPECT_EQ(lap(0, 1), complex(-1));
    EXPECT_EQ(lap(1, 0), complex(-1));
    EXPECT_EQ(lap(1, 1), complex(1));

    const DenseMatrix x0 = materialize_matrix(OperatorId::involution(0), Level(0));
    EXPECT_EQ(x0(0, 0), complex(0));
    EXPECT_EQ(x0(0, 1), complex(1));
    EXPECT_EQ(x0(1, 0), complex(1));
    EXPECT_EQ(x0(1, 1), complex(0));
}

TEST(Materialize, LaplacianRowsSumToZero) {
    const DenseMatrix m = materialize_matrix(OperatorId::laplacian(), Level(5));
    for (std::size_t r = 0; r < m.dim; ++r) {
        complex acc{};
        for (std::size_t c = 0; c < m.dim; ++c) acc += m(r, c);
        EXPECT_EQ(acc, complex(0));
    }
}

TEST(Materialize, EnforcesDenseCap) {
    EXPECT_THROW(materialize_matrix(OperatorId::laplacian(), Level(12)), std::length_error);
    EXPECT_THROW(materialize_matrix(OperatorId::laplacian(), Level(3), 8), std::length_error);
    EXPECT_THROW(materialize_matrix(OperatorId::involution(4), Level(3)), std::out_of_range);
}

TEST(SignFunction, PlusOneExactlyOnMembers) {
    const SignFunction e{NodeIndex{0b101}};
    EXPECT_EQ(e(0), 1);
    EXPECT_EQ(e(1), -1);
    EXPECT_EQ(e(2), 1);
}
