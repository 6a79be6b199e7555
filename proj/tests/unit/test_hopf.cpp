#include <doctest.h>

#include "kup/error.hpp"
#include "kup/hopf/builders.hpp"
#include "kup/hopf/identities.hpp"
#include "kup/hopf/integrals.hpp"
#include "kup/hopf/selector.hpp"
#include "kup/hopf/sweedler.hpp"
#include "kup/hopf/text_format.hpp"

using namespace kup;

namespace {

bool same(const LinearMap& a, const LinearMap& b) { return a == b; }

bool same_mult(const BilinearTable& a, const BilinearTable& b) {
    if (a.dim() != b.dim()) return false;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
            if (!(a.at(i, j) == b.at(i, j))) return false;
    return true;
}

SparseVector basis_of(const HopfData& h, const std::string& label) {
    const int i = h.index_of(label);
    REQUIRE(i >= 0);
    return h.basis(i);
}

/// lambda(h_(1)) h_(2) == lambda(h) 1 for every basis h.
bool is_right_cointegral(const HopfData& h, const Covector& f) {
    for (int i = 0; i < h.dim(); ++i)
        if (!(h.right_hit(h.basis(i), f) == h.unit().scaled(f[i]))) return false;
    return true;
}

/// h_(1) f(h_(2)) == f(h) 1 for every basis h.
bool is_left_cointegral(const HopfData& h, const Covector& f) {
    for (int i = 0; i < h.dim(); ++i)
        if (!(h.left_hit(f, h.basis(i)) == h.unit().scaled(f[i]))) return false;
    return true;
}

}  // namespace

TEST_SUITE("hopf") {

TEST_CASE("verify_axioms reports pass and antipode witnesses") {
    HopfData z2 = group_algebra(cyclic_group(2));
    CHECK(verify_axioms(z2).all_passed());

    HopfData broken(z2.name(), z2.labels(), z2.mult(), z2.unit(), z2.comult(), z2.counit(), LinearMap::zero(2));
    AxiomReport rep = verify_axioms(broken);
    CHECK_FALSE(rep.all_passed());
    const AxiomCheck* anti = rep.find("antipode");
    REQUIRE(anti != nullptr);
    CHECK_FALSE(anti->passed);
    CHECK_FALSE(anti->witness.empty());
    CHECK(rep.find("associativity")->passed);

    CHECK(verify_axioms(taft(4)).all_passed());
}

TEST_CASE("group algebras") {
    HopfData z1 = group_algebra(cyclic_group(1));
    CHECK(z1.dim() == 1);
    CHECK(verify_axioms(z1).all_passed());

    HopfData z2 = group_algebra(cyclic_group(2));
    CHECK(z2.dim() == 2);
    CHECK(same(z2.antipode(), LinearMap::identity(2)));

    HopfData s3 = group_algebra(symmetric_group_3());
    CHECK(s3.dim() == 6);
    CHECK(verify_axioms(s3).all_passed());

    GroupTable bad = cyclic_group(3);
    bad.mul[1][1] = 1;
    CHECK_THROWS_AS(group_algebra(bad), Error);
    try {
        group_algebra(bad);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotAGroup);
    }
}

TEST_CASE("Taft algebras") {
    HopfData sw = taft(2, CycScalar(-1));
    CHECK(sw.dim() == 4);
    CHECK(verify_axioms(sw).all_passed());
    CHECK(taft(7).dim() == 49);
    try {
        (void)taft(4, CycScalar(-1));
        FAIL("expected NotPrimitive");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotPrimitive);
    }

    // S(g) = g^{-1}, S(x) = -x g^{-1}; eps(x) = 0
    HopfData t4 = taft(4);
    CHECK(t4.S(basis_of(t4, "g")) == basis_of(t4, "g^3"));
    CHECK(t4.S(basis_of(t4, "x")) == basis_of(t4, "xg^3").scaled(CycScalar(-1)));
    CHECK(t4.eps(basis_of(t4, "x")).is_zero());
}

TEST_CASE("Taft integrals: Lambda is proportional to (sum g^i) x^{n-1}") {
    for (int n : {2, 3, 4, 5}) {
        HopfData t = taft(n);
        IntegralData I = integrals(t);
        const CycScalar z = CycScalar::root_of_unity(n);
        // (sum_i g^i) x^{n-1} built by multiplication.
        SparseVector sum_g(t.dim());
        for (int i = 0; i < n; ++i) sum_g += t.mul(t.one(), i == 0 ? t.one() : basis_of(t, i == 1 ? "g" : "g^" + std::to_string(i)));
        SparseVector xn1 = basis_of(t, n == 2 ? "x" : "x^" + std::to_string(n - 1));
        SparseVector expected = t.mul(sum_g, xn1);
        CHECK(I.Lambda == expected.scaled(z));
        CHECK(pair(I.lambda, I.Lambda).is_one());

        // The right cointegral is the delta function at x^{n-1} g.
        const std::string xg = (n == 2 ? std::string("x") : "x^" + std::to_string(n - 1)) + "g";
        Covector delta_xg(t.dim()), delta_x(t.dim());
        delta_xg[t.index_of(xg)] = CycScalar(1);
        delta_x[t.index_of(n == 2 ? "x" : "x^" + std::to_string(n - 1))] = CycScalar(1);
        CHECK(I.lambda == delta_xg);
        CHECK(is_right_cointegral(t, I.lambda));
        // delta_{x^{n-1}} satisfies the mirrored (left) cointegral property instead.
        CHECK(is_left_cointegral(t, delta_x));
        CHECK_FALSE(is_right_cointegral(t, delta_x));
    }
}

TEST_CASE("dual, opposite and tensor product") {
    for (const auto& sel : {"group:S3", "taft:3", "dual:group:Z2xZ2"}) {
        HopfData h = algebra_from_selector(sel);
        HopfData dd = dual(dual(h));
        CHECK(same_mult(dd.mult(), h.mult()));
        CHECK(dd.unit() == h.unit());
        CHECK(dd.counit() == h.counit());
        CHECK(same(dd.antipode(), h.antipode()));
        for (int i = 0; i < h.dim(); ++i) CHECK(dd.coproduct(dd.basis(i)) == h.coproduct(h.basis(i)));
        CHECK(verify_axioms(dual(h)).all_passed());
    }
    HopfData z4 = group_algebra(cyclic_group(4));
    HopfData op = opposite(z4);
    CHECK(same_mult(op.mult(), z4.mult()));
    CHECK(same(op.antipode(), z4.antipode()));
    CHECK(verify_axioms(opposite(taft(3))).all_passed());

    HopfData tp = tensor_product(taft(2), group_algebra(cyclic_group(2)));
    CHECK(tp.dim() == 8);
    CHECK(verify_axioms(tp).all_passed());
}

TEST_CASE("integrals of cyclic group algebras") {
    for (int n = 1; n <= 6; ++n) {
        HopfData h = group_algebra(cyclic_group(n));
        IntegralData I = integrals(h);
        SparseVector all(n);
        for (int i = 0; i < n; ++i) all.add(i, CycScalar(1));
        CHECK(I.Lambda == all);
        Covector delta_e(n);
        delta_e[0] = CycScalar(1);
        CHECK(I.lambda == delta_e);
        CHECK(I.g == h.unit());
        CHECK(I.alpha == h.counit());
    }
}

TEST_CASE("distinguished grouplikes and alpha(g)") {
    for (const auto& sel : builtin_algebra_selectors()) {
        CAPTURE(sel);
        HopfData h = algebra_from_selector(sel);
        IntegralData I = integrals(h);
        CycScalar ag = pair(I.alpha, I.g);
        const auto ord = root_of_unity_order(ag);
        REQUIRE(ord.has_value());
        CHECK(h.dim() % *ord == 0);
        // h -> lambda = lambda(h) g, and Lambda h = alpha(h) Lambda.
        for (int i = 0; i < h.dim(); ++i) {
            CHECK(h.left_hit(I.lambda, h.basis(i)) == I.g.scaled(I.lambda[i]));
            CHECK(h.mul(I.Lambda, h.basis(i)) == I.Lambda.scaled(I.alpha[i]));
        }
        CHECK(h.mul(I.g, I.g_inv) == h.unit());
        CHECK(h.convolve(I.alpha, I.alpha_inv) == h.counit());
    }
    IntegralData sw = integrals(taft(2, CycScalar(-1)));
    CycScalar ag = pair(sw.alpha, sw.g);
    CHECK(ag == CycScalar(-1));
    CHECK(4 % root_of_unity_order(ag).value() == 0);
}

TEST_CASE("twisted integrals and normalization identities") {
    for (const auto& sel : builtin_algebra_selectors()) {
        CAPTURE(sel);
        HopfData h = algebra_from_selector(sel);
        IntegralData I = integrals(h);
        CHECK(twisted_integral_element(h, I, 1) == I.Lambda);
        CHECK(twisted_integral_element(h, I, 0) == h.S(I.Lambda));
        CHECK(twisted_integral_functional(h, I, 0) == I.lambda);
        const Covector lam_Sinv = h.antipode_inv().pullback(I.lambda);
        CHECK(twisted_integral_functional(h, I, 1) == lam_Sinv);
        CHECK(pair(I.lambda, h.S(I.Lambda)).is_one());
        CHECK(pair(lam_Sinv, h.S(I.Lambda)).is_one());
        CHECK(pair(lam_Sinv, I.Lambda) == pair(I.alpha, I.g));
        // alpha^{-n} -> S(Lambda) agrees with the convolution inverse on both sides.
        CHECK(h.left_hit(I.alpha_inv, h.S(I.Lambda)) == twisted_integral_element(h, I, 1));
    }
    HopfData z3 = group_algebra(cyclic_group(3));
    IntegralData I3 = integrals(z3);
    CHECK(twisted_integral_functional(z3, I3, 1) == I3.lambda);
}

TEST_CASE("Radford's S^4 formula and T commuting with S") {
    for (const auto& sel : builtin_algebra_selectors()) {
        CAPTURE(sel);
        HopfData h = algebra_from_selector(sel);
        IntegralData I = integrals(h);
        CHECK(same(h.antipode_power(4), radford_map(h, I)));
        LinearMap T = T_operator(h, I);
        CHECK(same(T.compose(h.antipode()), h.antipode().compose(T)));
        CHECK(same(T_power(h, I, -1).compose(T), LinearMap::identity(h.dim())));
        if (I.alpha == h.counit()) CHECK(same(T, h.antipode_power(-2)));
    }
    for (const auto& sel : {"group:S3", "group:Q8", "group:Z4"}) {
        HopfData h = algebra_from_selector(sel);
        CHECK(same(T_operator(h, integrals(h)), LinearMap::identity(h.dim())));
    }
    HopfData t4 = taft(4);
    LinearMap T = T_operator(t4, integrals(t4));
    LinearMap comm = T.compose(t4.antipode()) - t4.antipode().compose(T);
    CHECK(comm.is_zero());
}

TEST_CASE("Sweedler powers") {
    HopfData s3 = group_algebra(symmetric_group_3());
    GroupTable g = symmetric_group_3();
    for (int i = 0; i < s3.dim(); ++i) {
        CHECK(sweedler_power(s3, 2, s3.basis(i)) == s3.basis(g.mul[i][i]));
        CHECK(sweedler_power(s3, 0, s3.basis(i)) == s3.unit());
        CHECK(sweedler_power(s3, 1, s3.basis(i)) == s3.basis(i));
        CHECK(sweedler_power(s3, -1, s3.basis(i)) == s3.basis(g.inverse(i)));
    }
    HopfData t3 = taft(3);
    for (int i = 0; i < t3.dim(); ++i) {
        CHECK(sweedler_power(t3, 0, t3.basis(i)) == t3.unit().scaled(t3.counit()[i]));
        CHECK(sweedler_power(t3, -1, t3.basis(i)) == t3.S(t3.basis(i)));
    }
    // lambdaS(P^(n)(Lambda)) on a group algebra counts solutions of x^n = 1.
    IntegralData I = integrals(s3);
    const Covector lamS = s3.antipode().pullback(I.lambda);
    CHECK(pair(lamS, sweedler_power(s3, 2, I.Lambda)) == CycScalar(4));
    CHECK(g.count_roots(2) == 4);
    for (int n = -3; n <= 6; ++n)
        CHECK(pair(lamS, sweedler_power(s3, n, I.Lambda)) == CycScalar(g.count_roots(n)));
    CHECK(same(sweedler_power_map(t3, 1), LinearMap::identity(t3.dim())));
}

TEST_CASE("trace of S^2") {
    for (const auto& sel : {"group:Z1", "group:Z3", "group:S3", "group:Q8", "group:D8"}) {
        HopfData h = algebra_from_selector(sel);
        CHECK(h.antipode_power(2).trace() == CycScalar(h.dim()));
    }
    for (int n = 2; n <= 5; ++n) CHECK(taft(n).antipode_power(2).trace().is_zero());
}

TEST_CASE("cointegral of H is an integral of the dual") {
    for (const auto& sel : builtin_algebra_selectors()) {
        CAPTURE(sel);
        HopfData h = algebra_from_selector(sel);
        IntegralData I = integrals(h);
        HopfData hd = dual(h);
        // lambda as an element of H*: lambda f = f(1) lambda for every basis f of H*.
        SparseVector lam = SparseVector::from_dense(I.lambda);
        for (int i = 0; i < hd.dim(); ++i) CHECK(hd.mul(lam, hd.basis(i)) == lam.scaled(hd.counit()[i]));
        // Lambda as a functional on H*: f_(1) Lambda(f_(2)) = f(Lambda) 1 since h Lambda = eps(h) Lambda.
        CHECK(is_left_cointegral(hd, I.Lambda.to_dense()));
        // Solving from scratch on H*: its left integral is a left cointegral of H, and its
        // right cointegral (an element of H) is a right integral of H.
        IntegralData J = integrals(hd);
        CHECK(is_left_cointegral(h, J.Lambda.to_dense()));
        SparseVector mu = SparseVector::from_dense(J.lambda);
        for (int i = 0; i < h.dim(); ++i) CHECK(h.mul(mu, h.basis(i)) == mu.scaled(h.counit()[i]));
        // In the unimodular case the right integral is the left one.
        if (I.alpha == h.counit()) {
            const auto& [p, c] = mu.entries().front();
            CHECK(mu == I.Lambda.scaled(c / I.Lambda.at(p)));
        }
    }
}

TEST_CASE("structure-constant text round trip") {
    for (const auto& sel : {"taft:3", "group:S3", "dual:taft:3"}) {
        HopfData h = algebra_from_selector(sel);
        HopfData r = read_hopf(write_hopf(h));
        CHECK(r.dim() == h.dim());
        CHECK(r.labels() == h.labels());
        CHECK(same_mult(r.mult(), h.mult()));
        CHECK(r.unit() == h.unit());
        CHECK(r.counit() == h.counit());
        CHECK(same(r.antipode(), h.antipode()));
        for (int i = 0; i < h.dim(); ++i) CHECK(r.coproduct(r.basis(i)) == h.coproduct(h.basis(i)));
    }
    try {
        (void)read_hopf("hopf x\ndim 2\nbogus line\n");
        FAIL("expected SyntaxError");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::SyntaxError);
    }
}

TEST_CASE("integral identity suite") {
    for (const auto& sel : {"group:Z4", "taft:3", "taft:2", "dual:group:S3"}) {
        CAPTURE(sel);
        HopfData h = algebra_from_selector(sel);
        SuiteReport rep = identity_suite(h, integrals(h));
        for (const auto& row : rep.table()) {
            CAPTURE(row.name);
            CAPTURE(row.first_failure);
            CHECK(row.failed == 0);
            CHECK(row.passed > 0);
        }
    }
    // Tr(id) through the trace form on Sweedler's algebra.
    HopfData sw = taft(2, CycScalar(-1));
    IntegralData I = integrals(sw);
    CycScalar tr(0);
    const SparseTensor d = sw.coproduct(I.Lambda);
    std::vector<int> idx(2);
    for (const auto& [k, c] : d.entries()) {
        d.decode(k, idx);
        tr += c * pair(I.lambda, sw.mul(sw.S(sw.basis(idx[1])), sw.basis(idx[0])));
    }
    CHECK(tr == CycScalar(4));
}

}  // TEST_SUITE
