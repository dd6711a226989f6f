#include <stdexcept>

#include "doctest.h"
#include "hamspec/conditions.hpp"
#include "hamspec/families.hpp"
#include "hamspec/graph.hpp"
#include "hamspec/oracle.hpp"
#include "hamspec/rng.hpp"
#include "hamspec/spectra.hpp"
#include "test_helpers.hpp"

using namespace hamspec;
using namespace hamspec::testing;

TEST_CASE("condition id registry is fixed and evaluate_all follows it") {
    const auto& ids = condition_ids();
    REQUIRE(ids.size() == 15);
    CHECK(ids.front() == "nhc_scan");
    CHECK(ids[1] == "ore");
    CHECK(ids.back() == "cor_q");
    std::vector<Verdict> all = evaluate_all(complete_graph(6));
    REQUIRE(all.size() == ids.size());
    for (size_t i = 0; i < ids.size(); ++i) CHECK(all[i].condition_id == ids[i]);
    CHECK_THROWS_AS(evaluate_condition(complete_graph(6), "nope"), std::invalid_argument);
}

TEST_CASE("degree scan: witness positions and certification") {
    CHECK_FALSE(nhc_degree_scan(degree_sequence(complete_graph(5))).has_value());
    // S_14^3 degrees: d_2 = 3 <= 3 and d_11 = 11 <= 11 give the witness k = 3.
    auto k = nhc_degree_scan(degree_sequence(s_graph(14, 3)));
    REQUIRE(k.has_value());
    CHECK(*k == 3);
    auto c5 = nhc_degree_scan(degree_sequence(cycle_graph(5)));
    REQUIRE(c5.has_value());
    CHECK(*c5 == 2);
    CHECK_THROWS_AS(nhc_degree_scan(DegreeSequence{{3, 2, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(nhc_degree_scan(DegreeSequence{{1, 2}}), std::invalid_argument);

    // As a condition: certification only from n >= 4 (K3 realizes any tiny
    // scan-free sequence but the lemma starts at 4).
    CHECK(evaluate_condition(complete_graph(3), "nhc_scan").outcome == Outcome::NotApplicable);
    CHECK(evaluate_condition(complete_graph(5), "nhc_scan").outcome == Outcome::Certified);
    Verdict w = evaluate_condition(cycle_graph(8), "nhc_scan");
    CHECK(w.outcome == Outcome::Inconclusive);
    CHECK(w.evidence.at("found_k") == 2);
}

TEST_CASE("edge conditions on the documented examples") {
    // K12 under ore: m = 66 over threshold C(11,2)+3 = 58.
    Verdict ore = evaluate_condition(complete_graph(12), "ore");
    CHECK(ore.outcome == Outcome::Certified);
    CHECK(ore.evidence.at("threshold") == 58);
    CHECK(ore.evidence.at("m") == 66);

    // S_14^3 under the strongest edge bound: m = 72 >= C(11,2)+13 = 68, but
    // the graph is the parametric exception itself.
    Graph s = s_graph(14, 3);
    CHECK(s.edge_count() == 72);
    Verdict main = evaluate_condition(s, "main");
    CHECK(main.outcome == Outcome::ExceptionMember);
    CHECK(main.exception_id == "S_n_3");
    CHECK(main.evidence.at("threshold") == 68);

    // Ore at n = 14 needs 81 edges, so the same graph is only Inconclusive.
    CHECK(evaluate_condition(s, "ore").outcome == Outcome::Inconclusive);

    // K4 join 4K1: n = 8, m = 22 >= C(6,2)+6 = 21, in the fixed exception list.
    Graph k44 = join(complete_graph(4), empty_graph(4));
    Verdict zw = evaluate_condition(k44, "zw");
    CHECK(zw.outcome == Outcome::ExceptionMember);
    CHECK(zw.exception_id == "K4v4K1");

    // Thresholds are exact: 58 edges still certify ore at n = 12, 57 do not.
    Graph g58 = complete_graph(12);
    for (int i = 0; i < 8; ++i) g58 = g58.without_edge(i, i + 4);
    CHECK(g58.edge_count() == 58);
    CHECK(evaluate_condition(g58, "ore").outcome == Outcome::Certified);
    CHECK(evaluate_condition(g58.without_edge(0, 1), "ore").outcome == Outcome::Inconclusive);
}

TEST_CASE("structural hypotheses gate the refined conditions") {
    // zw needs n >= 6, main needs n >= 11, both need delta >= 3 and connectivity.
    CHECK(evaluate_condition(complete_graph(5), "zw").outcome == Outcome::NotApplicable);
    CHECK(evaluate_condition(complete_graph(10), "main").outcome == Outcome::NotApplicable);
    CHECK(evaluate_condition(cycle_graph(12), "main").outcome == Outcome::NotApplicable);
    CHECK(evaluate_condition(disjoint_union(complete_graph(7), complete_graph(7)), "main").outcome ==
          Outcome::NotApplicable);
    CHECK(evaluate_condition(complete_graph(13), "cor14").outcome == Outcome::NotApplicable);
    CHECK(evaluate_condition(complete_graph(12), "cor15").outcome == Outcome::NotApplicable);
    // ore has no structural hypothesis at all.
    CHECK(evaluate_condition(cycle_graph(4), "ore").outcome == Outcome::Inconclusive);
}

TEST_CASE("complete graphs certify every applicable condition") {
    std::vector<Verdict> all = evaluate_all(complete_graph(15));
    for (const Verdict& v : all) CHECK(v.outcome == Outcome::Certified);
}

TEST_CASE("C5 yields nothing but NotApplicable or Inconclusive") {
    for (const Verdict& v : evaluate_all(cycle_graph(5))) {
        bool quiet = v.outcome == Outcome::NotApplicable || v.outcome == Outcome::Inconclusive;
        CHECK(quiet);
    }
}

TEST_CASE("spectral conditions on the extremal families") {
    // S_20^3 contains K_18, so rho > 17 = n - 3; it is its own exception.
    Verdict v = evaluate_condition(s_graph(20, 3), "main_rho");
    CHECK(v.outcome == Outcome::ExceptionMember);
    CHECK(v.exception_id == "S_n_3");
    CHECK(evaluate_condition(t_graph(20, 3), "main_rho").exception_id == "T_n_3");

    // H3 stays below n - 3, so the same condition says nothing about it.
    CHECK(evaluate_condition(named_variant(NamedVariant::H3, 14), "main_rho").outcome ==
          Outcome::Inconclusive);

    // K14: q = 26 clears 2n-6+6/(n-1) ~ 22.46 and is no family member.
    Verdict q = evaluate_condition(complete_graph(14), "main_q");
    CHECK(q.outcome == Outcome::Certified);
    CHECK(q.evidence.at("q") == doctest::Approx(26.0).epsilon(1e-9));

    // The self-referential corollary bounds sit exactly on their threshold
    // at S_n^3: inside the guard band, resolved by the exception list.
    Verdict cr = evaluate_condition(s_graph(14, 3), "cor_rho");
    CHECK(cr.outcome == Outcome::ExceptionMember);
    CHECK(cr.exception_id == "S_n_3");
    Verdict cq = evaluate_condition(s_graph(13, 3), "cor_q");
    CHECK(cq.outcome == Outcome::ExceptionMember);

    // K_{n-1}+e fires the q-form bound but never reaches the rho-form
    // threshold: rho(Kn1_ee) stays under it at every order, so that
    // exception clause is vacuous and the verdict is merely Inconclusive.
    Graph ee = sporadic_exception(Sporadic::Kn1_ee, 11);
    Verdict yq = evaluate_condition(ee, "yufan_q");
    CHECK(yq.outcome == Outcome::ExceptionMember);
    CHECK(yq.exception_id == "Kn1_ee");
    CHECK(evaluate_condition(ee, "yufan_rho").outcome == Outcome::Inconclusive);

    // zw_q keeps its single sporadic exception at order 8.
    CHECK(evaluate_condition(join(complete_graph(4), empty_graph(4)), "zw_q").outcome ==
          Outcome::ExceptionMember);
}

TEST_CASE("the order-16 exception entry stays faithful to the stated list") {
    // The oracle tests prove this graph Hamilton-connected, so the entry is
    // conservative: membership reporting remains correct, certification is
    // simply withheld. The harness layer is what surfaces the contradiction.
    Graph g = sporadic_exception(Sporadic::K7_K2_K16);
    Verdict v = evaluate_condition(g, "main");
    CHECK(v.outcome == Outcome::ExceptionMember);
    CHECK(v.exception_id == "K7_K2_K16");
    CHECK(v.evidence.at("m") == 91);
    CHECK(v.evidence.at("threshold") == 91);
}

TEST_CASE("threshold ordering of the edge conditions for n >= 14") {
    for (long long n = 14; n <= 40; ++n) {
        long long main_thr = (n - 3) * (n - 4) / 2 + 13;
        long long cor15_thr = (n - 2) * (n - 3) / 2 + 3;
        long long cor14_thr = cor15_thr + 1;
        long long zw_thr = (n - 2) * (n - 3) / 2 + 6;
        long long ore_thr = (n - 1) * (n - 2) / 2 + 3;
        CHECK(main_thr <= cor15_thr);
        CHECK(cor15_thr <= cor14_thr);
        CHECK(cor14_thr <= zw_thr);
        CHECK(zw_thr <= ore_thr);
    }
}

TEST_CASE("monotone dominance: coarser certificates imply finer ones") {
    SplitMix64 rng(0xd0d0);
    int ore_hits = 0;
    for (int trial = 0; trial < 120; ++trial) {
        int n = 6 + static_cast<int>(rng.below(9));
        int max_m = n * (n - 1) / 2;
        int lo = (n - 1) * (n - 2) / 2 - 2;
        int m = lo + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_m - lo + 1)));
        Graph g = random_graph(rng, n, m);
        Verdict ore = evaluate_condition(g, "ore");
        if (ore.outcome != Outcome::Certified) continue;
        ++ore_hits;
        Verdict zw = evaluate_condition(g, "zw");
        if (zw.outcome != Outcome::NotApplicable) CHECK(zw.outcome == Outcome::Certified);
        Verdict main = evaluate_condition(g, "main");
        if (main.outcome != Outcome::NotApplicable) CHECK(main.outcome == Outcome::Certified);
    }
    CHECK(ore_hits > 30);
}

TEST_CASE("rho-maximal family member at each order is the S shape") {
    for (int n = 14; n <= 18; ++n) {
        double rho_s = spectral_radius(s_graph(n, 3)).value;
        CHECK(rho_s > spectral_radius(t_graph(n, 3)).value + 1e-9);
        for (NamedVariant w : {NamedVariant::H1, NamedVariant::H2, NamedVariant::H3,
                               NamedVariant::T1, NamedVariant::T2, NamedVariant::T3})
            CHECK(rho_s > spectral_radius(named_variant(w, n)).value + 1e-9);
    }
}

TEST_CASE("verdict bookkeeping invariants") {
    SplitMix64 rng(0xbead);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 4 + static_cast<int>(rng.below(12));
        int max_m = n * (n - 1) / 2;
        Graph g = random_graph(rng, n, static_cast<int>(rng.below(max_m + 1)));
        for (const Verdict& v : evaluate_all(g)) {
            CHECK_FALSE(v.condition_id.empty());
            CHECK(v.evidence.count("n") == 1);
            CHECK(v.evidence.count("m") == 1);
            // exception_id appears exactly with the membership outcome
            CHECK((v.outcome == Outcome::ExceptionMember) == !v.exception_id.empty());
        }
    }
    CHECK(outcome_name(Outcome::Certified) == "certified");
    CHECK(outcome_name(Outcome::ExceptionMember) == "exception_member");
    CHECK(outcome_name(Outcome::Boundary) == "boundary");
}

TEST_CASE("certified claims agree with the oracle on random small graphs") {
    SplitMix64 rng(0x0acc);
    int certified_seen = 0;
    for (int trial = 0; trial < 80; ++trial) {
        int n = 5 + static_cast<int>(rng.below(6));
        int max_m = n * (n - 1) / 2;
        int lo = max_m - 2 * n;
        if (lo < 0) lo = 0;
        Graph g = random_graph(rng, n, lo + static_cast<int>(rng.below(2 * n + 1)));
        bool hc = is_hamilton_connected(g).hamilton_connected;
        for (const Verdict& v : evaluate_all(g)) {
            if (v.outcome == Outcome::Certified && v.condition_id != "nhc_scan") ++certified_seen;
            if (v.outcome == Outcome::Certified) CHECK(hc);
        }
    }
    CHECK(certified_seen > 10);
}
