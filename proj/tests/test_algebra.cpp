#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "weil/catalog.hpp"
#include "weil/element.hpp"
#include "weil/hom.hpp"
#include "weil/json_io.hpp"
#include "weil/presentation.hpp"
#include "weil/rng.hpp"

#include "oracles.hpp"

using namespace weil;
using namespace weil::testing;

namespace {

Monomial mono(std::vector<int> e) { return Monomial(std::move(e)); }

std::vector<std::string> basis_names(const PresPtr& p) {
    std::vector<std::string> out;
    for (int i = 0; i < p->dim(); ++i) out.push_back(p->basis_name(i));
    return out;
}

}  // namespace

TEST_CASE("truncated polynomial algebras have the binomial dimension") {
    PresPtr dual = make_truncated(1, 1);
    CHECK(dual->dim() == 2);
    CHECK(dual->height() == 1);
    CHECK(basis_names(dual) == std::vector<std::string>{"1", "T"});

    PresPtr t3 = make_truncated(1, 2);
    CHECK(t3->dim() == 3);
    CHECK(basis_names(t3) == std::vector<std::string>{"1", "T", "T^2"});

    CHECK(make_truncated(2, 2)->dim() == 6);

    for (int n = 1; n <= 4; ++n)
        for (int k = 0; k <= 5; ++k) CHECK(make_truncated(n, k)->dim() == binomial(n + k, k));
}

TEST_CASE("the trivial algebra") {
    PresPtr r = make_reals();
    CHECK(r->dim() == 1);
    CHECK(r->height() == 0);
    CHECK(r->num_vars() == 0);
    CHECK_THROWS_AS(make_truncated(0, 2), std::invalid_argument);
}

TEST_CASE("quotients by monomial generators") {
    PresPtr dxd = quotient_by_monomials(make_truncated(2, 2), {mono({2, 0}), mono({0, 2})});
    CHECK(dxd->dim() == 4);
    CHECK(basis_names(dxd) == std::vector<std::string>{"1", "T1", "T2", "T1T2"});

    PresPtr killed = quotient_by_monomials(make_truncated(1, 3), {mono({1})});
    CHECK(killed->dim() == 1);
    CHECK(killed->height() == 0);

    PresPtr p = quotient_by_monomials(make_truncated(2, 3), {mono({1, 1})});
    CHECK(p->dim() == 7);
    CHECK(p->dim() == count_standard_monomials(2, 3, {mono({1, 1})}));

    CHECK_THROWS_WITH_AS(quotient_by_monomials(make_truncated(1, 2), {mono({0})}),
                         "ideal not proper", std::invalid_argument);
    CHECK_THROWS_AS(quotient_by_monomials(make_truncated(1, 2), {mono({3})}), std::invalid_argument);
}

TEST_CASE("basis is divisibility-closed, starts at the unit, and is nilpotent above it") {
    for (const auto& [name, p] : fixture_catalog()) {
        CAPTURE(name);
        REQUIRE(p->dim() >= 1);
        CHECK(p->basis()[0].is_unit());
        for (const Monomial& m : p->basis()) {
            for (int v = 0; v < p->num_vars(); ++v) {
                if (m.exponents[static_cast<std::size_t>(v)] == 0) continue;
                Monomial divisor = m;
                --divisor.exponents[static_cast<std::size_t>(v)];
                CHECK(p->basis_index(divisor) >= 0);
            }
            if (!m.is_unit()) {
                WeilElement e = WeilElement::monomial(p, m);
                CHECK(e.pow(p->height() + 1).is_zero());
            }
        }
    }
}

TEST_CASE("vector-space operations") {
    PresPtr dual = make_truncated(1, 1);
    WeilElement one = WeilElement::one(dual);
    WeilElement t = WeilElement::variable(dual, 0);
    CHECK((one + t).coeffs()[0] == 1.0);
    CHECK((one + t).coeffs()[1] == 1.0);

    Rng rng(11);
    WeilElement a = random_element(rng, dual);
    CHECK(a.scale(0.0).is_zero());
    CHECK((a + a.scale(-1.0)).is_zero());

    PresPtr t3 = make_truncated(1, 2);
    CHECK_THROWS_AS(WeilElement::one(dual) + WeilElement::one(t3), std::invalid_argument);
}

TEST_CASE("multiplication reduces modulo the ideal") {
    PresPtr dual = make_truncated(1, 1);
    WeilElement t = WeilElement::variable(dual, 0);
    CHECK((t * t).is_zero());

    PresPtr dxd = tensor(dual, dual);
    WeilElement s = WeilElement::variable(dxd, 0) + WeilElement::variable(dxd, 1);
    WeilElement sq = s * s;
    CHECK(sq.coeff(dxd->basis_index(mono({0, 0}))) == 0.0);
    CHECK(sq.coeff(dxd->basis_index(mono({1, 1}))) == 2.0);

    PresPtr t3 = make_truncated(1, 2);
    WeilElement u = WeilElement::one(t3) + WeilElement::variable(t3, 0);
    WeilElement usq = u * u;
    CHECK(usq.coeff(0) == 1.0);
    CHECK(usq.coeff(1) == 2.0);
    CHECK(usq.coeff(2) == 1.0);
}

TEST_CASE("multiplication agrees with the polynomial oracle") {
    Rng rng(2024);
    for (const auto& [name, p] : fixture_catalog()) {
        CAPTURE(name);
        for (int trial = 0; trial < 50; ++trial) {
            WeilElement a = random_element(rng, p);
            WeilElement b = random_element(rng, p);
            CHECK(max_abs_diff(a * b, oracle_mul(a, b)) <= 1e-12);
        }
    }
}

TEST_CASE("ring laws hold on random triples") {
    Rng rng(7);
    for (const auto& [name, p] : fixture_catalog()) {
        CAPTURE(name);
        WeilElement one = WeilElement::one(p);
        for (int trial = 0; trial < 30; ++trial) {
            WeilElement a = random_element(rng, p);
            WeilElement b = random_element(rng, p);
            WeilElement c = random_element(rng, p);
            CHECK(rel_residual(a * b, b * a) <= 1e-12);
            CHECK(rel_residual((a * b) * c, a * (b * c)) <= 1e-12);
            CHECK(rel_residual(a * (b + c), a * b + a * c) <= 1e-12);
            CHECK(rel_residual(a * one, a) == 0.0);
        }
    }
}

TEST_CASE("augmentation is a surjective algebra homomorphism") {
    PresPtr dual = make_truncated(1, 1);
    WeilElement a(dual, {3.0, 5.0});
    CHECK(a.augmentation() == 3.0);
    CHECK(WeilElement::one(dual).augmentation() == 1.0);

    Rng rng(5);
    for (const auto& [name, p] : fixture_catalog()) {
        CAPTURE(name);
        for (int trial = 0; trial < 50; ++trial) {
            WeilElement x = random_element(rng, p);
            WeilElement y = random_element(rng, p);
            CHECK(std::fabs((x + y).augmentation() - (x.augmentation() + y.augmentation())) <= 1e-12);
            CHECK(std::fabs((x * y).augmentation() - x.augmentation() * y.augmentation()) <= 1e-12);
        }
    }
}

TEST_CASE("nilpotent part") {
    PresPtr dual = make_truncated(1, 1);
    WeilElement a(dual, {3.0, 5.0});
    CHECK(a.nilpotent_part() == WeilElement(dual, {0.0, 5.0}));
    CHECK(WeilElement::one(dual).nilpotent_part().is_zero());

    Rng rng(13);
    for (const auto& [name, p] : fixture_catalog()) {
        CAPTURE(name);
        for (int trial = 0; trial < 30; ++trial) {
            WeilElement n = random_element(rng, p).nilpotent_part();
            CHECK(n.augmentation() == 0.0);
            CHECK(n.pow(p->height() + 1).is_zero());
        }
    }
}

TEST_CASE("height of the catalog algebras") {
    CHECK(make_reals()->height() == 0);
    CHECK(make_truncated(1, 1)->height() == 1);
    CHECK(tensor(make_truncated(1, 1), make_truncated(1, 1))->height() == 2);
}

TEST_CASE("tensor products multiply dimension and add height") {
    PresPtr dual = make_truncated(1, 1);
    PresPtr dxd = tensor(dual, dual);
    CHECK(dxd->dim() == 4);
    CHECK(dxd->height() == 2);
    CHECK(basis_names(dxd) == std::vector<std::string>{"1", "T1", "T2", "T1T2"});

    PresPtr t3 = make_truncated(1, 2);
    PresPtr mixed = tensor(t3, dual);
    CHECK(mixed->dim() == 6);
    CHECK(mixed->height() == 3);

    auto cat = fixture_catalog();
    for (const auto& [na, a] : cat)
        for (const auto& [nb, b] : cat) {
            CAPTURE(na);
            CAPTURE(nb);
            PresPtr t = tensor(a, b);
            CHECK(t->dim() == a->dim() * b->dim());
            CHECK(t->height() == a->height() + b->height());
        }
}

TEST_CASE("tensor with the trivial algebra is the identity up to relabeling") {
    for (const auto& [name, p] : fixture_catalog()) {
        CAPTURE(name);
        CHECK(tensor(p, make_reals())->same_algebra(*p));
        CHECK(tensor(make_reals(), p)->same_algebra(*p));
    }
}

TEST_CASE("algebra homomorphisms validate their relations") {
    PresPtr dual = make_truncated(1, 1);
    PresPtr t3 = make_truncated(1, 2);

    // T -> T^2 squares to T^4 = 0, fine
    AlgebraHom ok = make_hom(dual, t3, {WeilElement::monomial(t3, mono({2}))});
    WeilElement image = ok.apply(WeilElement(dual, {3.0, 5.0}));
    CHECK(image == WeilElement(t3, {3.0, 0.0, 5.0}));

    // T -> 0 is the augmentation
    AlgebraHom aug = make_hom(dual, make_reals(), {WeilElement::zero(make_reals())});
    CHECK(aug.apply(WeilElement(dual, {3.0, 5.0})) == WeilElement::constant(make_reals(), 3.0));

    // R[T]/(T^3) -> D, T -> T: T^3 = 0 already holds in D
    CHECK_NOTHROW(make_hom(t3, dual, {WeilElement::variable(dual, 0)}));

    // D -> R[T]/(T^3), T -> T: T^2 survives, so the relation fails
    CHECK_THROWS_WITH_AS(make_hom(dual, t3, {WeilElement::variable(t3, 0)}),
                         "relation not preserved: T^2", std::invalid_argument);

    CHECK_THROWS_WITH_AS(make_hom(dual, t3, {WeilElement::one(t3)}),
                         "image not in maximal ideal", std::invalid_argument);
    CHECK_THROWS_AS(make_hom(dual, t3, {}), std::invalid_argument);
}

TEST_CASE("hom_apply preserves the unit, sums and products") {
    Rng rng(99);
    PresPtr dual = make_truncated(1, 1);
    PresPtr t3 = make_truncated(1, 2);
    PresPtr dxd = tensor(dual, dual);

    // a family of valid homs: truncated sources into targets of height <= k
    std::vector<AlgebraHom> homs;
    homs.push_back(AlgebraHom::identity(dxd));
    homs.push_back(AlgebraHom::augmentation_hom(t3));
    homs.push_back(make_hom(dual, t3, {WeilElement::monomial(t3, mono({2}), rng.uniform(-2.0, 2.0))}));
    homs.push_back(make_hom(t3, dual, {random_element(rng, dual).nilpotent_part()}));
    homs.push_back(make_hom(make_truncated(2, 2), dxd,
                            {random_element(rng, dxd).nilpotent_part(), random_element(rng, dxd).nilpotent_part()}));

    for (const AlgebraHom& h : homs) {
        CHECK(h.apply(WeilElement::one(h.source())) == WeilElement::one(h.target()));
        for (int trial = 0; trial < 25; ++trial) {
            WeilElement a = random_element(rng, h.source());
            WeilElement b = random_element(rng, h.source());
            CHECK(rel_residual(h.apply(a * b), h.apply(a) * h.apply(b)) <= 1e-12);
            CHECK(rel_residual(h.apply(a + b), h.apply(a) + h.apply(b)) <= 1e-12);
        }
    }

    AlgebraHom id = AlgebraHom::identity(dual);
    WeilElement a(dual, {3.0, 5.0});
    CHECK(id.apply(a) == a);
}

TEST_CASE("inversion by the finite geometric series") {
    PresPtr dual = make_truncated(1, 1);
    WeilElement inv = (WeilElement::one(dual) + WeilElement::variable(dual, 0)).invert();
    CHECK(inv == WeilElement(dual, {1.0, -1.0}));

    PresPtr t3 = make_truncated(1, 2);
    WeilElement inv2 = (WeilElement::constant(t3, 2.0) + WeilElement::variable(t3, 0)).invert();
    CHECK(inv2.coeff(0) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(inv2.coeff(1) == doctest::Approx(-0.25).epsilon(1e-14));
    CHECK(inv2.coeff(2) == doctest::Approx(0.125).epsilon(1e-14));

    PresPtr dxd = tensor(dual, dual);
    WeilElement nil = WeilElement::variable(dxd, 0) + WeilElement::variable(dxd, 1);
    CHECK(!nil.is_invertible());
    CHECK_THROWS_WITH_AS(nil.invert(), "not invertible: augmentation is 0", std::domain_error);

    Rng rng(31);
    for (const auto& [name, p] : fixture_catalog()) {
        CAPTURE(name);
        for (int trial = 0; trial < 50; ++trial) {
            WeilElement a = random_invertible(rng, p);
            CHECK(a.is_invertible());
            WeilElement product = a * a.invert();
            for (int i = 0; i < p->dim(); ++i)
                CHECK(std::fabs(product.coeff(i) - (i == 0 ? 1.0 : 0.0)) <= 1e-12);
        }
    }
}

TEST_CASE("presentation JSON round trip") {
    for (const auto& [name, p] : fixture_catalog()) {
        CAPTURE(name);
        nlohmann::json j = presentation_to_json(*p);
        PresPtr back = presentation_from_json(j);
        CHECK(back->same_algebra(*p));
        CHECK(back->basis() == p->basis());
        // round trip the serialized form itself
        CHECK(presentation_to_json(*back) == j);
    }
}

TEST_CASE("element JSON round trip is exact") {
    Rng rng(77);
    for (const auto& [name, p] : fixture_catalog()) {
        CAPTURE(name);
        WeilElement a = random_element(rng, p);
        nlohmann::json j = element_to_json(a, name);
        WeilElement back = element_from_json(j);
        CHECK(back == a);

        nlohmann::json inline_j = element_to_json(a);
        CHECK(element_from_json(inline_j) == a);
    }
}
