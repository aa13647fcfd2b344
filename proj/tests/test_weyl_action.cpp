#include "oracles.hpp"

#include "toda/errors.hpp"
#include "toda/weyl_action.hpp"

#include <doctest.h>

#include <algorithm>

using namespace toda;

static LinForm mu(int i, int c = 1) { return LinForm::mu(i, c); }

TEST_CASE("generator action on small vectors") {
    AlgebraSpec a2{Family::AffineA, 2};
    auto v = apply_generator(1, make_zero(a2));
    CHECK(v.at(1) == mu(1, 2));
    CHECK(v.at(2).is_zero());
    auto w = apply_generator(2, v);
    CHECK(w.at(1) == mu(1, 2));
    CHECK(w.at(2) == mu(1, 2) + mu(2, 2));
    CHECK(w.at(3).is_zero());

    AlgebraSpec ct2{Family::AffineCt, 2};
    MassVector c = make_zero(ct2);
    c.at(3) = mu(3, 2);
    auto d = apply_generator(2, c);
    CHECK(d.at(2) == mu(2, 2) + mu(3, 2));
    CHECK(d.at(3) == mu(3, 2));

    CHECK_THROWS_AS(apply_generator(4, make_zero(a2)), DomainError);
    CHECK_THROWS_AS(apply_generator(0, make_zero(a2)), DomainError);
}

TEST_CASE("word application is right to left") {
    AlgebraSpec a2{Family::AffineA, 2};
    auto g = make_generic(a2);
    CHECK(apply_word({}, g) == g);
    CHECK(apply_word({2, 2}, g) == g);
    auto v = apply_word({1, 2, 1}, make_zero(a2));
    CHECK(v.at(1) == mu(1, 2) + mu(2, 2));
    CHECK(v.at(2) == mu(1, 2) + mu(2, 2));
    CHECK(v.at(3).is_zero());
    // [2,1] means ℜ₂ℜ₁: ℜ₁ first.
    CHECK(apply_word({2, 1}, make_zero(a2)) == apply_generator(2, apply_generator(1, make_zero(a2))));
}

TEST_CASE("symbolic action agrees with the numeric oracle") {
    std::mt19937 rng(5);
    for (auto fam : {Family::AffineA, Family::AffineCt})
        for (int n = 2; n <= 6; ++n) {
            AlgebraSpec spec{fam, n};
            for (int trial = 0; trial < 20; ++trial) {
                const Word w = oracle::random_word(rng, n + 1, 8);
                const auto mu_vals = oracle::random_rationals(rng, static_cast<std::size_t>(n + 1));
                const auto s_vals = oracle::random_rationals(rng, static_cast<std::size_t>(n + 1));
                const auto sym = apply_word(w, make_generic(spec));
                CHECK(evaluate(sym, mu_vals, &s_vals) == oracle::act_word(fam, n, w, s_vals, mu_vals));
            }
        }
}

TEST_CASE("generators are involutions on arbitrary vectors") {
    std::mt19937 rng(9);
    for (auto fam : {Family::AffineA, Family::AffineCt}) {
        AlgebraSpec spec{fam, 4};
        MassVector v = make_zero(spec);
        for (auto& e : v.entries) e = oracle::random_form(rng, 5);
        for (int i = 1; i <= 5; ++i) CHECK(apply_generator(i, apply_generator(i, v)) == v);
    }
}

TEST_CASE("presentation relation lists") {
    auto has = [](const std::vector<Relation>& rs, const std::string& label) {
        return std::any_of(rs.begin(), rs.end(), [&](const Relation& r) { return r.label == label; });
    };
    auto a2 = presentation_relations({Family::AffineA, 2});
    CHECK_FALSE(std::any_of(a2.begin(), a2.end(), [](const Relation& r) { return r.label.rfind("commute", 0) == 0; }));
    CHECK(has(a2, "order3(1,3)"));
    CHECK(has(a2, "braid(1,3)"));
    auto a4 = presentation_relations({Family::AffineA, 4});
    CHECK(has(a4, "commute(1,3)"));
    auto ct3 = presentation_relations({Family::AffineCt, 3});
    CHECK(has(ct3, "order4(2,1)"));
    CHECK(has(ct3, "order4(3,4)"));
    CHECK(has(ct3, "braid(2,3)"));
    CHECK_FALSE(has(ct3, "braid(1,2)"));
}

TEST_CASE("relations act trivially on the generic vector") {
    for (auto fam : {Family::AffineA, Family::AffineCt})
        for (int n = 2; n <= 6; ++n)
            for (const auto& r : presentation_relations({fam, n})) {
                INFO(family_name(fam) << " n=" << n << " " << r.label);
                CHECK(verify_relation(r, {fam, n}));
            }
    AlgebraSpec a3{Family::AffineA, 3};
    CHECK(verify_relation(Word{1, 1}, a3));
    CHECK(verify_relation(power({1, 3}, 2), a3));
    CHECK_FALSE(verify_relation(power({1, 2}, 2), a3));
    // In Cᵗ the doubled bond has order 4, not 3.
    CHECK_FALSE(verify_relation(power({1, 2}, 3), {Family::AffineCt, 3}));
}

TEST_CASE("Pohozaev residuals") {
    AlgebraSpec a2{Family::AffineA, 2};
    CHECK(pohozaev_residual(make_zero(a2)).is_zero());

    MassVector v = make_zero(a2);
    v.at(1) = mu(1, 2);
    v.at(2) = mu(1, 2) + mu(2, 2);
    CHECK(pohozaev_residual(v).is_zero());

    MassVector u = make_zero(a2);
    u.at(1) = LinForm::constant(1);
    auto r = pohozaev_residual(u);
    CHECK(r.coeff({0, 0}) == 1);
    CHECK(r.coeff({0, 1}) == -2);
    CHECK(r.terms().size() == 2);

    CHECK_THROWS_AS(pohozaev_residual(make_generic(a2)), EvaluationError);
}

TEST_CASE("Pohozaev residual polynomials agree with numeric oracles") {
    std::mt19937 rng(13);
    for (auto fam : {Family::AffineA, Family::AffineCt})
        for (int n = 2; n <= 5; ++n) {
            AlgebraSpec spec{fam, n};
            for (int trial = 0; trial < 20; ++trial) {
                MassVector v = make_zero(spec);
                for (auto& e : v.entries) {
                    e = oracle::random_form(rng, n + 1);
                    for (int i = 1; i <= n + 1; ++i) e.set({Var::S, i}, 0);
                }
                const auto mu_vals = oracle::random_rationals(rng, static_cast<std::size_t>(n + 1));
                const auto sig = evaluate(v, mu_vals);
                const Rational expect = fam == Family::AffineA ? oracle::pohozaev_a(sig, mu_vals)
                                                               : oracle::pohozaev_ct(sig, mu_vals);
                CHECK(pohozaev_residual(v).evaluate(mu_vals) == expect);
                if (fam == Family::AffineA)
                    CHECK(pohozaev_residual_a_sqdiff(v) == Rational(2) * pohozaev_residual(v));
            }
        }
}

TEST_CASE("orbit vectors satisfy Pohozaev for every word up to length 8 (n = 2, 3)") {
    for (auto fam : {Family::AffineA, Family::AffineCt})
        for (int n = 2; n <= 3; ++n) {
            AlgebraSpec spec{fam, n};
            const Action act(spec);
            // exhaustive DFS over all words of length ≤ 8
            std::vector<std::pair<MassVector, int>> stack{{make_zero(spec), 0}};
            std::size_t visited = 0;
            bool all_zero = true;
            while (!stack.empty()) {
                auto [v, len] = stack.back();
                stack.pop_back();
                ++visited;
                all_zero = all_zero && pohozaev_residual(v).is_zero();
                if (len == 8) continue;
                for (int g = 1; g <= n + 1; ++g) stack.emplace_back(act.apply(g, v), len + 1);
            }
            INFO(family_name(fam) << " n=" << n << " words=" << visited);
            CHECK(all_zero);
        }
}
