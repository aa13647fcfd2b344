#include "oracles.hpp"

#include "toda/errors.hpp"
#include "toda/orbit.hpp"

#include <doctest.h>

#include <map>
#include <set>

using namespace toda;

static LinForm mu(int i, int c = 1) { return LinForm::mu(i, c); }

TEST_CASE("small orbits") {
    AlgebraSpec a2{Family::AffineA, 2};
    CHECK(enumerate(a2, 0).size() == 1);
    const auto d1 = enumerate(a2, 1);
    REQUIRE(d1.size() == 4);
    CHECK(d1[1].vector.at(1) == mu(1, 2));
    CHECK(d1[2].vector.at(2) == mu(2, 2));
    CHECK(d1[3].vector.at(3) == mu(3, 2));
}

TEST_CASE("enumeration matches brute force over all words") {
    for (auto fam : {Family::AffineA, Family::AffineCt})
        for (int n = 2; n <= 4; ++n)
            for (int depth = 0; depth <= (n == 2 ? 6 : 4); ++depth) {
                AlgebraSpec spec{fam, n};
                INFO(family_name(fam) << " n=" << n << " depth=" << depth);
                CHECK(enumerate(spec, depth).size() == oracle::brute_force_orbit_size(spec, depth));
            }
}

TEST_CASE("witnesses, levels, pruning and worker independence") {
    for (auto fam : {Family::AffineA, Family::AffineCt}) {
        AlgebraSpec spec{fam, 3};
        const auto nodes = enumerate(spec, 5);
        const Action act(spec);
        std::map<std::string, int> level;
        for (const auto& nd : nodes) {
            CHECK(act.apply(nd.witness, make_zero(spec)) == nd.vector);
            CHECK(nd.witness.size() == static_cast<std::size_t>(nd.level));
            level[nd.key] = nd.level;
        }
        // Level monotonicity inside the explored depth.
        for (const auto& nd : nodes) {
            if (nd.level == 5) continue;
            for (int g = 1; g <= 4; ++g) {
                auto it = level.find(act.apply(g, nd.vector).canonical_key());
                REQUIRE(it != level.end());
                CHECK(it->second <= nd.level + 1);
            }
        }
        EnumerateOptions no_prune;
        no_prune.prune_repeat = false;
        const auto plain = enumerate(spec, 5, no_prune);
        REQUIRE(plain.size() == nodes.size());
        for (std::size_t k = 0; k < nodes.size(); ++k) CHECK(plain[k].key == nodes[k].key);

        for (int workers : {2, 3, 8}) {
            EnumerateOptions par;
            par.workers = workers;
            CHECK(export_graph(enumerate(spec, 5, par), ExportFormat::Json) == export_graph(nodes, ExportFormat::Json));
        }
    }
}

TEST_CASE("coefficient matrix and the Γ_N test") {
    AlgebraSpec a2{Family::AffineA, 2};
    const auto z = coefficient_matrix(make_zero(a2));
    for (const auto& q : z.entries) CHECK(q == 0);

    MassVector v = make_zero(a2);
    v.at(1) = mu(1, 2);
    v.at(2) = mu(1, 2) + mu(2, 2);
    const auto c = coefficient_matrix(v);
    CHECK(c.at(1, 1) == 1);
    CHECK(c.at(2, 1) == 1);
    CHECK(c.at(2, 2) == 1);
    CHECK(c.at(3, 3) == 0);
    auto rep = gamma_n_test(v);
    CHECK(rep.coeffs_ok);
    CHECK(rep.pohozaev_ok);

    MassVector half = make_zero(a2);
    half.at(1) = mu(1);
    CHECK(coefficient_matrix(half).at(1, 1) == Rational(1, 2));
    CHECK_FALSE(gamma_n_test(half).coeffs_ok);

    MassVector bad = make_zero(a2);
    bad.at(1) = mu(1, 2);
    bad.at(3) = mu(1, 2);
    auto rb = gamma_n_test(bad);
    CHECK(rb.coeffs_ok);
    CHECK_FALSE(rb.pohozaev_ok);
    CHECK_FALSE(pohozaev_residual(bad).is_zero());

    MassVector konst = make_zero(a2);
    konst.at(1) = LinForm::constant(2);
    CHECK_THROWS_AS(coefficient_matrix(konst), NotMassForm);
    CHECK(descend_to_zero(konst).verdict == Verdict::NotInGammaN);
    CHECK(descend_to_zero(bad).verdict == Verdict::NotInGammaN);
}

TEST_CASE("descent certificates") {
    AlgebraSpec a2{Family::AffineA, 2};
    auto z = descend_to_zero(make_zero(a2));
    CHECK(z.verdict == Verdict::Member);
    CHECK(z.word.empty());

    MassVector v = make_zero(a2);
    v.at(1) = mu(1, 2);
    v.at(2) = mu(1, 2) + mu(2, 2);
    auto r = descend_to_zero(v);
    CHECK(r.verdict == Verdict::Member);
    CHECK(r.word == Word{1, 2});

    for (auto fam : {Family::AffineA, Family::AffineCt}) {
        AlgebraSpec spec{fam, 2};
        for (const auto& nd : enumerate(spec, 6)) {
            auto rep = descend_to_zero(nd.vector, 64);
            REQUIRE(rep.verdict == Verdict::Member);
            CHECK(apply_word(rep.word, nd.vector).is_zero());
        }
    }
}

TEST_CASE("exports") {
    AlgebraSpec a2{Family::AffineA, 2};
    const auto one = enumerate(a2, 0);
    const auto dot0 = export_graph(one, ExportFormat::Dot);
    CHECK(dot0.find("n0 [label") != std::string::npos);
    CHECK(dot0.find("->") == std::string::npos);

    const auto dot1 = export_graph(enumerate(a2, 1), ExportFormat::Dot);
    std::size_t edges = 0;
    for (std::size_t p = dot1.find("->"); p != std::string::npos; p = dot1.find("->", p + 1)) ++edges;
    CHECK(edges == 3);
    CHECK(dot1.find("n0 -> n1 [label=1]") != std::string::npos);
    CHECK(dot1.find("n0 -> n3 [label=3]") != std::string::npos);

    const auto csv = export_graph(enumerate(a2, 1), ExportFormat::Csv);
    CHECK(csv.rfind("node,index,mass\n", 0) == 0);
    CHECK(csv.find("1,1,2\n") != std::string::npos);
    CHECK_THROWS_AS(parse_format("svg"), FormatError);
}
