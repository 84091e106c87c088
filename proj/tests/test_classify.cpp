#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "toral/classify.hpp"
#include "toral/translation.hpp"

using namespace toral;

namespace {

TranslationVector rational_alpha(std::vector<Rational> q) {
    TranslationVector t = TranslationVector::zero(static_cast<long>(q.size()));
    t.rational_part = std::move(q);
    return t;
}

TranslationVector symbolic_alpha(long n, std::vector<std::pair<std::string, std::vector<Rational>>> terms) {
    TranslationVector t = TranslationVector::zero(n);
    for (auto& [sym, coeffs] : terms)
        t.irrational_terms.push_back({sym, std::move(coeffs)});
    return t;
}

}  // namespace

TEST_CASE("local homeomorphism iff nonsingular") {
    CHECK(is_local_homeomorphism(IntMatrix{{Int(2)}}));
    CHECK_FALSE(is_local_homeomorphism(IntMatrix{{Int(1), Int(1)}, {Int(1), Int(1)}}));
}

TEST_CASE("exactness of linear endomorphisms") {
    CHECK(is_exact_endomorphism(IntMatrix{{Int(2)}}));                        // doubling
    CHECK(is_exact_endomorphism(IntMatrix{{Int(2), Int(0)}, {Int(0), Int(2)}}));
    CHECK_FALSE(is_exact_endomorphism(IntMatrix{{Int(2), Int(1)}, {Int(1), Int(1)}}));  // cat map
    CHECK_FALSE(is_exact_endomorphism(IntMatrix{{Int(-1)}}));
    CHECK_THROWS_AS(is_exact_endomorphism(IntMatrix{{Int(0)}}), out_of_regime_error);
}

TEST_CASE("lambda_in_S spec instances") {
    IntMatrix one{{Int(1)}};
    auto irr = symbolic_alpha(1, {{"theta", {Rational(1)}}});
    CHECK(lambda_in_S(one, irr).in_S);

    auto half = rational_alpha({Rational(1, 2)});
    LambdaInS r = lambda_in_S(one, half);
    CHECK_FALSE(r.in_S);
    REQUIRE(r.obstruction.has_value());
    CHECK_FALSE(is_zero(*r.obstruction));

    IntMatrix shear{{Int(1), Int(1)}, {Int(0), Int(1)}};
    auto furst = symbolic_alpha(2, {{"theta", {Rational(0), Rational(1)}}});
    CHECK(lambda_in_S(shear, furst).in_S);
}

TEST_CASE("classification: case 1 (exact, translation-independent)") {
    for (const auto& alpha :
         {rational_alpha({Rational(0)}), rational_alpha({Rational(1, 3)}),
          symbolic_alpha(1, {{"t", {Rational(1)}}})}) {
        TransitivityVerdict v = classify_transitivity(IntMatrix{{Int(2)}}, alpha);
        CHECK(v.case_tag == CaseTag::Case1_Exact);
        CHECK(v.exact);
        CHECK(v.strongly_transitive);
        CHECK(v.multiplicity_k == 0);
    }
}

TEST_CASE("classification: case 2, rotations") {
    IntMatrix one{{Int(1)}};

    TransitivityVerdict irr =
        classify_transitivity(one, symbolic_alpha(1, {{"t", {Rational(1)}}}));
    CHECK(irr.case_tag == CaseTag::Case2_ConditionallyTransitive);
    CHECK(irr.strongly_transitive);
    CHECK_FALSE(irr.exact);
    CHECK(irr.homeomorphism);
    CHECK(irr.multiplicity_k == 1);

    TransitivityVerdict rat = classify_transitivity(one, rational_alpha({Rational(1, 3)}));
    CHECK(rat.case_tag == CaseTag::Case2_ConditionallyTransitive);
    CHECK_FALSE(rat.strongly_transitive);
    REQUIRE(rat.dual_obstruction.has_value());
}

TEST_CASE("classification: case 2, Furstenberg skew products") {
    IntMatrix shear{{Int(1), Int(1)}, {Int(0), Int(1)}};

    TransitivityVerdict good = classify_transitivity(
        shear, symbolic_alpha(2, {{"t", {Rational(0), Rational(1)}}}));
    CHECK(good.case_tag == CaseTag::Case2_ConditionallyTransitive);
    CHECK(good.strongly_transitive);
    CHECK(good.multiplicity_k == 2);

    TransitivityVerdict bad =
        classify_transitivity(shear, rational_alpha({Rational(0), Rational(1, 3)}));
    CHECK(bad.case_tag == CaseTag::Case2_ConditionallyTransitive);
    CHECK_FALSE(bad.strongly_transitive);
    REQUIRE(bad.dual_obstruction.has_value());
    // the blocking character annihilates the image of A - I: here (0, m).
    CHECK((*bad.dual_obstruction)[0] == 0);
    CHECK((*bad.dual_obstruction)[1] != 0);
}

TEST_CASE("classification: case 3, never strongly transitive") {
    IntMatrix cat{{Int(2), Int(1)}, {Int(1), Int(1)}};
    for (const auto& alpha :
         {rational_alpha({Rational(0), Rational(0)}),
          symbolic_alpha(2, {{"t", {Rational(1), Rational(2, 3)}}})}) {
        TransitivityVerdict v = classify_transitivity(cat, alpha);
        CHECK(v.case_tag == CaseTag::Case3_Never);
        CHECK_FALSE(v.strongly_transitive);
        CHECK_FALSE(v.exact);
        CHECK(v.witness.present());
    }

    TransitivityVerdict neg =
        classify_transitivity(IntMatrix{{Int(-1)}}, rational_alpha({Rational(0)}));
    CHECK(neg.case_tag == CaseTag::Case3_Never);
}

TEST_CASE("singular matrix is out of regime") {
    CHECK_THROWS_AS(
        classify_transitivity(IntMatrix{{Int(0)}}, rational_alpha({Rational(0)})),
        out_of_regime_error);
}

TEST_CASE("irrational direction orthogonal to the kernel does not help") {
    // ker(A^t - I) is spanned by (0,1); an irrational moving only the first
    // coordinate leaves <m, alpha> = 0 rational, so not strongly transitive.
    IntMatrix shear{{Int(1), Int(1)}, {Int(0), Int(1)}};
    auto alpha = symbolic_alpha(2, {{"t", {Rational(1), Rational(0)}}});
    TransitivityVerdict v = classify_transitivity(shear, alpha);
    CHECK_FALSE(v.strongly_transitive);
    REQUIRE(v.dual_obstruction.has_value());
}
