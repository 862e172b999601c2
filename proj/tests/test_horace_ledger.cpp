#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fatpoints/horace_ledger.hpp"

using namespace fatpoints;
using namespace fatpoints::ledger;

TEST_CASE("delta and lambda membership") {
    for (i64 k = 1; k <= 40; ++k) {
        auto d6 = decompose6(k);
        CHECK(in_delta_k(0, d6.q, d6.r, k));
        auto d12 = decompose12(k);
        CHECK(in_lambda_k(0, 0, d12.u, d12.rho, k));
    }
    CHECK(in_delta_k(1, 0, 1, 1));
    CHECK_FALSE(in_delta_k(0, 0, 4, 2));  // p = 4 is never a remainder
    CHECK_FALSE(in_lambda_k(1, 0, 0, 1, 2));
    CHECK_FALSE(in_lambda_k(0, 0, 1, 4, 2));
    // d odd forces p = 5 on the rho = 11 degrees
    CHECK(in_lambda_k(0, 1, 26, 5, 17));
}

TEST_CASE("delta subtuple chooser") {
    // all-doubles branch
    for (i64 k = 5; k <= 14; ++k) {
        auto d6 = decompose6(k - 1);
        auto t = choose_delta_subtuple(0, d6.q + 1, k);
        CHECK(t.s == 0);
        CHECK(t.d == d6.q);
        CHECK(t.p == d6.r);
    }
    // pure simple-point branch
    {
        auto d6 = decompose6(8); // q = 13, r = 2
        auto t = choose_delta_subtuple(50, 0, 9);
        CHECK(t.d == 0);
        CHECK(t.s == 3 * d6.q + d6.r / 2);
        CHECK(t.p == d6.r % 2);
    }
    // exhaustive: the construction always passes membership and budgets
    int seen = 0;
    for (i64 k = 2; k <= 15; ++k)
        for (i64 a = 0; a <= 40; ++a)
            for (i64 b = 0; b <= 20; ++b) {
                if ((k - 1) * (k + 1) >= 2 * a + 6 * b) continue;
                auto t = choose_delta_subtuple(a, b, k);
                CHECK(in_delta_k(t.s, t.d, t.p, k - 1));
                if (t.d < b) CHECK(t.d + 1 <= b);
                else CHECK(t.s + (t.p > 0 ? 1 : 0) <= a);
                ++seen;
            }
    CHECK(seen > 1000);
    CHECK_THROWS_AS(choose_delta_subtuple(0, 1, 9), std::invalid_argument);
}

TEST_CASE("lambda supertuple chooser") {
    for (i64 k = 4; k <= 20; ++k) {
        auto d12 = decompose12(k);
        auto t = choose_lambda_supertuple(0, 0, d12.u, k);
        CHECK(t.s == 0);
        CHECK(t.d == 0);
        CHECK(t.t == d12.u);
        CHECK(t.p == d12.rho);
    }
    // exhaustive feasibility scan
    for (i64 k = 2; k <= 20; ++k)
        for (i64 a = 0; a <= 10; ++a)
            for (i64 b = 0; b <= 6; ++b)
                for (i64 c = 0; c <= 6; ++c) {
                    if (2 * a + 6 * b + 12 * c > k * (k + 2)) continue;
                    auto t = choose_lambda_supertuple(a, b, c, k);
                    CHECK(in_lambda_k(t.s, t.d, t.t, t.p, k));
                    CHECK(t.s >= a);
                    CHECK(t.d >= b);
                    CHECK(t.t >= c);
                }
    CHECK_THROWS_AS(choose_lambda_supertuple(100, 0, 0, 2), std::invalid_argument);
}

TEST_CASE("simple-point reduction branches") {
    // merging branch: all doubles absorbed into triples
    auto r = reduce_simples(3, 1, 1, 0, 4);
    CHECK(r.merged_all_doubles);
    CHECK(r.d == 0);
    CHECK(r.t == 2);

    // length conservation across every Lambda tuple at small degrees
    for (i64 k = 12; k <= 16; ++k)
        for (const auto& t : enumerate_lambda(k)) {
            auto rr = reduce_simples(t.s, t.d, t.t, t.p, k);
            if (rr.merged_all_doubles) {
                CHECK(2 * t.s + 6 * t.d == 12 * (rr.tau - t.t) + 2 * rr.sigma);
                CHECK(rr.tau == decompose12(k).u);
            } else {
                CHECK(2 * rr.sigma + 6 * rr.delta + 12 * rr.tau ==
                      2 * t.s + 6 * t.d + 12 * t.t);
                CHECK(rr.d % 2 == 0);
            }
        }

    // the barred corner: sigma = 0, odd doubles, remainder 5
    auto rb = reduce_simples(0, 35, 9, 5, 17);
    CHECK_FALSE(rb.merged_all_doubles);
    CHECK(rb.barred);
    CHECK(rb.d == 34);
    CHECK(rb.t == 9);
}

TEST_CASE("standard step bookkeeping") {
    // first reduction of the degree-12 run with six triples
    Certificate cert;
    auto [w, q] = algorithm_A(6, 12, &cert);
    CHECK(w == 10);
    CHECK(q == 10);
    REQUIRE(cert.steps.size() == 2);
    CHECK(cert.steps[0].params.at("g") == 6);
    CHECK(cert.steps[0].params.at("r") == 3);
    CHECK(cert.steps[0].params.at("s") == 0);
    CHECK(cert.steps[1].params.at("r") == 2);
    CHECK(cert.steps[1].params.at("s") == 1);
    CHECK(cert.steps[0].length_before == 168);
    CHECK(cert.steps[0].length_after == 120);
    CHECK(cert.steps[1].length_after == 80);

    // inapplicable: nothing left to saturate the conic budget
    Configuration bad;
    bad.k = 4;
    bad.chunk = 2;
    bad.triples = 1;
    bad.rem = Remainder{8, false};
    CHECK(bad.total_length() == 24);
    CHECK_THROWS(standard_step(bad));

    // inapplicable: the conic already carries more than 2k conditions
    Configuration over;
    over.k = 3;
    over.chunk = 7;
    over.bundle_point = true;
    CHECK(over.total_length() == 15);
    CHECK_THROWS(standard_step(over));
}

TEST_CASE("algorithm A reproduces the quoted reductions") {
    auto check_A = [](i64 t, i64 k, i64 w, i64 q) {
        auto [cw, cq] = algorithm_A(t, k);
        CHECK(cw == w);
        CHECK(cq == q);
    };
    check_A(1, 12, 4, 12);
    for (i64 t = 2; t <= 5; ++t) check_A(t, 12, 7, 11);
    for (i64 t = 6; t <= 7; ++t) check_A(t, 12, 10, 10);

    check_A(8, 13, 12, 12);
    for (i64 t = 4; t <= 7; ++t) check_A(t, 13, 9, 13);
    for (i64 t = 1; t <= 3; ++t) check_A(t, 13, 6, 14);

    for (i64 t = 8; t <= 10; ++t) check_A(t, 15, 13, 19);
    for (i64 t = 4; t <= 7; ++t) check_A(t, 15, 10, 20);
    for (i64 t = 1; t <= 3; ++t) check_A(t, 15, 7, 21);

    for (i64 t = 4; t <= 7; ++t) check_A(t, 11, 8, 6);
    for (i64 t = 0; t <= 3; ++t) check_A(t, 11, 5, 7);

    CHECK_THROWS_AS(algorithm_A(9, 12, nullptr), std::invalid_argument); // 27 > 24
}

TEST_CASE("algorithm C reproduces the quoted residues") {
    auto r14 = algorithm_C(10, 14);
    CHECK(r14.c12 == 9);
    CHECK(r14.c13 == 0);
    CHECK(r14.c23 == 1);
    CHECK(r14.triples == 0);
    CHECK(r14.doubles == 16);

    auto r16 = algorithm_C(11, 16);
    CHECK(r16.c12 == 10);
    CHECK(r16.c13 == 1);
    CHECK(r16.c23 == 0);

    CHECK_THROWS_AS(algorithm_C(3, 14, nullptr), std::invalid_argument);
}

TEST_CASE("stacked conic reductions") {
    Configuration c6;
    c6.k = 6;
    c6.doubles = 8; // alpha(1,6)
    CHECK(c6.total_length() == 48);
    auto out = double_chain(c6, 1, nullptr);
    CHECK(out.k == 0);
    CHECK(out.doubles == 0);

    Configuration c5;
    c5.k = 5;
    c5.doubles = 6;
    CHECK_THROWS(double_chain(c5, 1, nullptr));

    // composition around a certified rest
    Configuration rest;
    rest.k = 11;
    rest.triples = 11;
    rest.rem = Remainder{11, false};
    auto rest_cert = replay_X(0, 11, 11, false);
    REQUIRE(rest_cert.ok);
    CHECK(rest_cert.terminal == "B(11)");
    auto composed = double_chain_compose(17, 1, rest, rest_cert);
    CHECK(composed.ok);
    CHECK(composed.steps.front().params.at("consumed_doubles") == 30);
    CHECK(composed.terminal == "B(11)");

    auto bad = double_chain_compose(5, 1, rest, rest_cert);
    CHECK_FALSE(bad.ok);
}

TEST_CASE("replay terminates at the B axiom on the canonical tuples") {
    for (i64 k = 12; k <= 30; ++k) {
        auto d12 = decompose12(k);
        auto cert = replay_H(0, 0, d12.u, d12.rho, k);
        REQUIRE_MESSAGE(cert.ok, cert.failure);
        CHECK(cert.terminal == "B(" + std::to_string(k) + ")");
    }
}

TEST_CASE("replay rejects bad tuples") {
    auto cert = replay_H(0, 0, 1, 4, 2);
    CHECK_FALSE(cert.ok);
    CHECK(cert.failure.find("lambda_membership") != std::string::npos);

    auto low = replay_H(3, 0, 1, 1, 11); // wrong length anyway
    CHECK_FALSE(low.ok);
}

TEST_CASE("the full case scripts certify") {
    // triple-heavy degree-15 run passes through the degree-7 residue
    auto c = replay_X(2 * decompose12(15).u - 26, 13, 15, false);
    REQUIRE_MESSAGE(c.ok, c.failure);
    bool saw7 = false;
    for (const auto& st : c.steps) saw7 = saw7 || st.k_after == 7;
    CHECK(saw7);
    CHECK(c.terminal == "A(5)");

    // barred track at degree 17, all twelve triples
    auto cb = replay_X(28, 12, 17, true);
    REQUIRE_MESSAGE(cb.ok, cb.failure);
    CHECK(cb.terminal == "ONE_SETTLED");

    // the degree-14 script deploys the remainder into the conic at 12
    auto c14 = replay_X(36, 0, 14, false);
    REQUIRE_MESSAGE(c14.ok, c14.failure);
    bool deployed = false;
    for (const auto& st : c14.steps)
        if (st.rule == "standard_step" && st.params.at("rem_slice") == 3) deployed = true;
    CHECK(deployed);
}

TEST_CASE("the (w', q') table of the degree-14 script") {
    auto wq_at_10 = [](i64 t) {
        auto cert = replay_X(2 * decompose12(14).u - 2 * t, t, 14, false);
        REQUIRE_MESSAGE(cert.ok, cert.failure);
        for (const auto& st : cert.steps)
            if (st.k_after == 10 && st.rule == "standard_step") {
                // state is a chunk plus doubles: parse from the recorded params
                return st;
            }
        REQUIRE(false);
        return cert.steps.front();
    };
    auto expect = [&](i64 t, i64 w, i64 q) {
        auto st = wq_at_10(t);
        // read the state string: "k=10 s=0 d=<q> ... conic[e=<w> ..."
        const std::string s = st.state_after;
        CHECK(s.find("d=" + std::to_string(q) + " ") != std::string::npos);
        CHECK(s.find("e=" + std::to_string(w) + " ") != std::string::npos);
    };
    for (i64 t = 8; t <= 9; ++t) expect(t, 12, 16);
    for (i64 t = 4; t <= 7; ++t) expect(t, 9, 17);
    for (i64 t = 0; t <= 3; ++t) expect(t, 6, 18);
    expect(10, 12, 16); // the triple-only route lands on the same residue
}

TEST_CASE("barred base configurations certify down to the bundle point") {
    const auto& list = barred_base_list();
    REQUIRE(list.size() == 11);
    for (const auto& scheme : list) {
        auto cert = replay_barred_base(scheme);
        REQUIRE_MESSAGE(cert.ok, cert.failure);
        CHECK(cert.terminal == "ONE_SETTLED");
    }
}

TEST_CASE("exhaustive sweep at the low degrees") {
    for (i64 k = 12; k <= 18; ++k) {
        const auto tuples = enumerate_lambda(k);
        CHECK(tuples.size() > 100);
        for (const auto& t : tuples) {
            auto cert = replay_H(t.s, t.d, t.t, t.p, k);
            if (!cert.ok) {
                MESSAGE("tuple (", t.s, ",", t.d, ",", t.t, ",", t.p, ") at k=", k, ": ",
                        cert.failure);
            }
            REQUIRE(cert.ok);
        }
    }
}

TEST_CASE("certificate steps chain and conserve length") {
    auto cert = replay_H(0, 22, 5, 3, 13); // 132 + 60 + 3 = 195
    REQUIRE_MESSAGE(cert.ok, cert.failure);
    for (std::size_t i = 0; i + 1 < cert.steps.size(); ++i) {
        CHECK(cert.steps[i].k_after == cert.steps[i + 1].k_before);
        CHECK(cert.steps[i].length_after == cert.steps[i + 1].length_before);
    }
    for (const auto& st : cert.steps) {
        if (st.rule == "standard_step")
            CHECK(st.length_before - st.length_after == 2 * st.params.at("trace"));
        if (st.rule == "double_chain_step")
            CHECK(st.length_before - st.length_after == 6 * st.params.at("consumed_doubles"));
    }
}

TEST_CASE("column scheme view of a configuration") {
    auto r16 = algorithm_C(11, 16);
    auto cols = r16.conic_columns();
    REQUIRE(cols.size() == 11); // ten (1;2) and one (1;3)
    i64 trace = 0, length = 0;
    for (const auto& col : cols) {
        CHECK(col.admissible());
        trace += col.trace();
        length += col.length();
    }
    CHECK(trace == r16.conic_trace());
    CHECK(length == 6 * r16.c12 + 8 * r16.c13 + 10 * r16.c23 + 2 * r16.chunk);

    CHECK(ColumnScheme{{2, 1}}.admissible());
    CHECK(ColumnScheme{{3, 2, 1}}.admissible());
    CHECK(ColumnScheme{{7}}.admissible());
    CHECK_FALSE(ColumnScheme{{1, 2}}.admissible()); // top-heavy
    CHECK_FALSE(ColumnScheme{{}}.admissible());
}

TEST_CASE("axiom table") {
    CHECK_FALSE(axiom_A_applicable(2));
    CHECK_FALSE(axiom_A_applicable(3));
    CHECK(axiom_A_applicable(1));
    CHECK(axiom_A_applicable(4));
    CHECK(axiom_B_applicable(10));
    CHECK_FALSE(axiom_B_applicable(9));

    // conditions of the settled configurations
    CHECK(axiom_settled_applicable(0, 0, 0, 0, 14, 0, 12, false));
    CHECK_FALSE(axiom_settled_applicable(13, 0, 0, 0, 13, 0, 12, false)); // trace budget
    CHECK_FALSE(axiom_settled_applicable(0, 0, 1, 1, 13, 0, 12, false)); // d+e > 1
    CHECK_FALSE(axiom_settled_applicable(0, 0, 0, 0, 14, 3, 12, false)); // parity of rem
    CHECK_FALSE(axiom_settled_applicable(0, 0, 0, 0, 14, 0, 11, false)); // below 12

    bool has_one = false;
    for (const auto& ax : axiom_table()) has_one = has_one || ax.id == "ONE_SETTLED";
    CHECK(has_one);
}
