#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace k3gon;
using fixtures::v;

TEST(Clifford, Examples) {
    CliffordResult dp = clifford_index(fixtures::double_plane());
    EXPECT_EQ(dp.c, 2);
    EXPECT_EQ(dp.witnesses, std::vector<DivClass>{v({1})});
    CliffordResult e2 = clifford_index(fixtures::elms(2));
    EXPECT_EQ(e2.c, 3);
    EXPECT_EQ(e2.witnesses, std::vector<DivClass>{v({1, 0})});
    CliffordResult hyp = clifford_index(fixtures::rank_one(2));
    EXPECT_EQ(hyp.c, 0);
    EXPECT_EQ(hyp.witnesses, std::vector<DivClass>{v({1})});
}

TEST(Clifford, GenericCapHasNoWitness) {
    // L primitive of rank one: nothing decomposes, c = floor((g-1)/2)
    CliffordResult r = clifford_index(fixtures::rank_one(1));
    EXPECT_EQ(r.c, 0);
    EXPECT_TRUE(r.witnesses.empty());
    PolarizedDatum d = validate_datum(validate_lattice({{4}}), v({1}), v({1}));
    // g = 3
    EXPECT_EQ(clifford_index(d).c, 1);
    EXPECT_TRUE(clifford_index(d).witnesses.empty());
}

TEST(DonagiMorrison, Detection) {
    auto b = detect_donagi_morrison(fixtures::double_plane());
    ASSERT_TRUE(b);
    EXPECT_EQ(*b, v({1}));
    EXPECT_FALSE(detect_donagi_morrison(fixtures::elms(1)));
    EXPECT_FALSE(detect_donagi_morrison(fixtures::rank_one(6)));
}

TEST(GeneralizedElms, Detection) {
    for (Int n : {1, 2}) {
        auto w = detect_generalized_elms(fixtures::elms(n));
        ASSERT_TRUE(w) << n;
        EXPECT_EQ(w->D, v({1, 0}));
        EXPECT_EQ(w->Gamma, v({0, 1}));
        EXPECT_TRUE(w->transcript.empty());
        EXPECT_EQ(w->transcript.square_hi, 2 * n - 1);
    }
    EXPECT_FALSE(detect_generalized_elms(fixtures::rank_one(2)));
    EXPECT_FALSE(detect_generalized_elms(fixtures::double_plane()));
}

TEST(Classify, DoublePlane) {
    ClassificationReport r = classify(fixtures::double_plane());
    EXPECT_EQ(r.genus, 10);
    EXPECT_EQ(r.clifford_index, 2);
    EXPECT_EQ(r.gonality_min, 4);
    EXPECT_EQ(r.gonality_general, 5);
    EXPECT_FALSE(r.gonality_constant);
    EXPECT_EQ(r.case_tag, CaseTag::DonagiMorrison);
    EXPECT_EQ(r.exceptional_members, ExceptionalMembers::GeneralMembers);
    EXPECT_EQ(r.clifford_dimension, 2);
    EXPECT_EQ(r.w1d_dimension_note, W1dNote::NotApplicable);
}

TEST(Classify, ElmsTwo) {
    ClassificationReport r = classify(fixtures::elms(2));
    EXPECT_EQ(r.genus, 10);
    EXPECT_EQ(r.clifford_index, 3);
    EXPECT_EQ(r.gonality_min, 6);
    EXPECT_EQ(r.gonality_general, 6);
    EXPECT_TRUE(r.gonality_constant);
    EXPECT_EQ(r.case_tag, CaseTag::GeneralizedELMS);
    EXPECT_EQ(r.exceptional_members, ExceptionalMembers::AllMembers);
    EXPECT_EQ(r.clifford_dimension, 3);
    EXPECT_EQ(r.w1d_dimension_note, W1dNote::One);
    ASSERT_TRUE(r.elms_checklist);
    EXPECT_TRUE(r.elms_checklist->arithmetic_holds());
    EXPECT_TRUE(r.elms_checklist->in_conjecture_scope);
}

TEST(Classify, ElmsOne) {
    ClassificationReport r = classify(fixtures::elms(1));
    EXPECT_EQ(r.genus, 6);
    EXPECT_EQ(r.clifford_index, 1);
    EXPECT_EQ(r.gonality_general, 4);
    EXPECT_EQ(r.clifford_dimension, 2);
    ASSERT_TRUE(r.elms_checklist);
    EXPECT_TRUE(r.elms_checklist->arithmetic_holds());
    EXPECT_FALSE(r.elms_checklist->in_conjecture_scope);
}

TEST(Classify, Hyperelliptic) {
    ClassificationReport r = classify(fixtures::rank_one(2));
    EXPECT_EQ(r.genus, 5);
    EXPECT_EQ(r.clifford_index, 0);
    EXPECT_EQ(r.gonality_general, 2);
    EXPECT_TRUE(r.gonality_constant);
    EXPECT_EQ(r.case_tag, CaseTag::Ordinary);
    EXPECT_EQ(r.clifford_dimension, 1);
    EXPECT_EQ(r.w1d_dimension_note, W1dNote::Zero);
    EXPECT_FALSE(r.elms_checklist);
}

TEST(Classify, GenericCurveHasUnknownCliffordDimension) {
    ClassificationReport r = classify(fixtures::rank_one(1));
    EXPECT_EQ(r.case_tag, CaseTag::Ordinary);
    EXPECT_FALSE(r.clifford_dimension);
}

TEST(ConjectureChecklist, Examples) {
    ElmsChecklist a = elms_conjecture_check(3, 10, 3, 6);
    EXPECT_TRUE(a.arithmetic_holds());
    EXPECT_TRUE(a.in_conjecture_scope);
    ElmsChecklist b = elms_conjecture_check(2, 6, 1, 4);
    EXPECT_TRUE(b.arithmetic_holds());
    EXPECT_FALSE(b.in_conjecture_scope);
    ElmsChecklist c = elms_conjecture_check(3, 9, 3, 6);
    EXPECT_FALSE(c.genus_matches);
    EXPECT_TRUE(c.clifford_matches);
    EXPECT_TRUE(c.gonality_matches);
    EXPECT_THROW(elms_conjecture_check(1, 2, 0, 2), PreconditionViolated);
}

TEST(ReportInvariants, Violations) {
    ClassificationReport r = classify(fixtures::rank_one(2));
    r.gonality_general = 5;
    EXPECT_THROW(check_report_invariants(r), InternalInconsistency);
    r = classify(fixtures::rank_one(2));
    r.gonality_constant = false;
    EXPECT_THROW(check_report_invariants(r), InternalInconsistency);
    r = classify(fixtures::double_plane());
    EXPECT_NO_THROW(check_report_invariants(r));
}
