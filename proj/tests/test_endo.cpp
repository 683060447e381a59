#include "doctest.h"

#include "supertriv/endo.hpp"

using namespace supertriv;

namespace {

Supermodule k(const SuperAlgebra& alg, int parity) { return trivial_module(alg, parity); }

} // namespace

TEST_CASE("tclass arithmetic") {
    CHECK(tclass_add({1, 0}, {-1, 0}) == TClass{0, 0});
    CHECK(tclass_add({2, 1}, {1, 1}) == TClass{3, 0});
    CHECK(tclass_neg({2, 1}) == TClass{-2, 1});
    CHECK(tclass_str({1, 0}) == "(1, ev)");
    CHECK(tclass_str({-2, 1}) == "(-2, od)");
}

TEST_CASE("is_endotrivial on the spec examples") {
    const auto ext = exterior(2);
    CHECK(is_endotrivial(k(ext, 1)).endotrivial);
    CHECK(is_endotrivial(k(ext, 0)).endotrivial);
    // Omega^3(k_ev) over Exterior(2), dim 7.
    const Supermodule o3 = syzygy(k(ext, 0), 3);
    CHECK(o3.dim() == 7);
    const EndoResult r = is_endotrivial(o3);
    CHECK(r.endotrivial);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->core.dim() == 1);
    // simple_q1(1) lies outside the principal block; its projection is zero,
    // which is not endotrivial (even dimension obstruction).
    CHECK_FALSE(is_endotrivial(simple_q1(1, 0)).endotrivial);
    // Projectives are not endotrivial.
    CHECK_FALSE(is_endotrivial(lambda_regular(ext)).endotrivial);
}

TEST_CASE("classify on the spec examples") {
    const auto e2 = exterior(2);
    CHECK(classify(k(e2, 1)) == TClass{0, 1});
    CHECK(classify(k(e2, 0)) == TClass{0, 0});
    CHECK(classify(syzygy(k(exterior(3), 0), 2)) == TClass{2, 0});
    CHECK(classify(tensor(syzygy(k(e2, 0), 2), syzygy(k(e2, 1), 1))) == TClass{3, 1});
    CHECK(classify(syzygy(k(e2, 0), -2)) == TClass{-2, 0});
    CHECK_THROWS_AS(classify(lambda_regular(e2)), NotEndotrivial);
    CHECK_THROWS_AS(classify(direct_sum(k(e2, 0), k(e2, 0))), NotEndotrivial);
}

TEST_CASE("classify over Exterior(1) collapses to the parity") {
    const auto e1 = exterior(1);
    CHECK(classify(syzygy(k(e1, 0), 5)) == TClass{0, 1});
    CHECK(classify(syzygy(k(e1, 0), 4)) == TClass{0, 0});
}

TEST_CASE("classify of E/F-family modules goes through the principal block") {
    CHECK(classify(k(detecting_e(2), 1)) == TClass{0, 1});
    CHECK(classify(k(detecting_f(1), 0)) == TClass{0, 0});
}

TEST_CASE("duality and parity shift act on classes as expected") {
    const auto e2 = exterior(2);
    for (long n = -2; n <= 2; ++n) {
        const Supermodule m = syzygy(k(e2, 0), n);
        CHECK(classify(dual(m)) == tclass_neg(classify(m)));
        CHECK(classify(parity_shift(m)) == tclass_add(classify(m), TClass{0, 1}));
    }
}

TEST_CASE("verification report bookkeeping and serialization") {
    VerificationReport rep = verify_rank1(3);
    CHECK(rep.all_pass());
    CHECK(rep.checks.size() == 7);
    const std::string t = rep.table();
    CHECK(t.find("suite: rank1") != std::string::npos);
    CHECK(t.find("[PASS]") != std::string::npos);
    const std::string j = rep.json();
    CHECK(j.find("\"all_pass\": true") != std::string::npos);
    // A failing check flips all_pass.
    rep.checks.push_back({"forced", "1", "2", false});
    CHECK_FALSE(rep.all_pass());
    CHECK(rep.table().find("[FAIL]") != std::string::npos);
}

TEST_CASE("rank_variety_sample on the spec examples") {
    const auto e2 = exterior(2);
    const auto e3 = exterior(3);
    CHECK(rank_variety_sample(lambda_regular(e3), 6, 5).all_pass());
    CHECK(rank_variety_sample(syzygy(k(e2, 0), 1), 6, 5).all_pass());
    CHECK(rank_variety_sample(k(e2, 0), 4, 5).all_pass());
}

TEST_CASE("restriction constancy on small endotrivials") {
    const auto e3 = exterior(3);
    const auto rep = restriction_constancy(syzygy(k(e3, 0), 2), 8, 17);
    CHECK(rep.all_pass());
    CHECK(rep.checks.front().expected == "(2, ev)");
    const auto rep2 = restriction_constancy(k(e3, 1), 5, 17);
    CHECK(rep2.all_pass());
    CHECK(rep2.checks.front().expected == "(0, od)");
    CHECK_THROWS_AS(restriction_constancy(lambda_regular(e3), 3, 1), NotEndotrivial);
}

TEST_CASE("verify_ext1 accepts endotrivials and rejects projectives") {
    const auto e2 = exterior(2);
    CHECK(verify_ext1(k(e2, 0)).all_pass());
    CHECK(verify_ext1(syzygy(k(e2, 1), 1)).all_pass());
    CHECK_THROWS_AS(verify_ext1(lambda_regular(e2)), NotEndotrivial);
}

TEST_CASE("verify_even_dim_nonprincipal runs clean for both families") {
    CHECK(verify_even_dim_nonprincipal(Family::F, 2, 6, 23).all_pass());
    CHECK(verify_even_dim_nonprincipal(Family::E, 2, 6, 23).all_pass());
}
