#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

#include <algorithm>
#include <set>

using namespace e2lab;
using e2lab::testing::brute_complete;

namespace {

const Ring z2i = gaussian_order(2);
const Ring gauss = gaussian_order(1);

void check_valid_completion(const UniPair& p, const Completion& c) {
    CHECK(c.m.m11 == p.alpha);
    CHECK(c.m.m12 == p.beta);
    CHECK(is_one(det(c.m)));
}

}  // namespace

TEST_CASE("completion of simple pairs") {
    UniPair unit{qi_int(z2i, 1), qi_int(z2i, 0)};
    auto c = complete_pair(unit);
    REQUIRE(c.has_value());
    CHECK(c->m == identity(z2i));

    // the displayed family pair at n=2 completes, and the displayed
    // completion row (2, 1-2i) is itself valid
    UniPair fam{qi(z2i, 3, 1), qi(z2i, 3, -1)};
    auto cf = complete_pair(fam);
    REQUIRE(cf.has_value());
    check_valid_completion(fam, *cf);
    CHECK(is_one(det(mat2(fam.alpha, fam.beta, qi_int(z2i, 2), qi(z2i, 1, -1)))));

    // (2, 2i) generates a proper ideal: no completion
    CHECK_FALSE(complete_pair(UniPair{qi_int(z2i, 2), qi(z2i, 0, 1)}).has_value());
    CHECK_FALSE(brute_complete(UniPair{qi_int(z2i, 2), qi(z2i, 0, 1)}).has_value());

    CHECK_FALSE(complete_pair(UniPair{qi_int(z2i, 0), qi_int(z2i, 0)}).has_value());
    auto czero = complete_pair(UniPair{qi_int(z2i, 0), qi_int(z2i, -1)});
    REQUIRE(czero.has_value());
    check_valid_completion(UniPair{qi_int(z2i, 0), qi_int(z2i, -1)}, *czero);
}

TEST_CASE("completion agrees with the brute-force oracle") {
    // Every pair with both norms <= 50, in all five rings: presence must
    // match the bounded (gamma, delta) search exactly, and every returned
    // completion must validate.
    for (const Ring& r : {make_ring(Form::Sqrt, 1), gaussian_order(2), make_ring(Form::Sqrt, 5),
                          make_ring(Form::Half, 2), make_ring(Form::Half, 3)}) {
        std::vector<QuadInt> elems = elements_with_norm_up_to(r, 50);
        elems.insert(elems.begin(), qi_int(r, 0));
        for (const QuadInt& a : elems) {
            for (const QuadInt& b : elems) {
                UniPair p{a, b};
                auto fast = complete_pair(p);
                auto slow = brute_complete(p);
                REQUIRE(fast.has_value() == slow.has_value());
                if (fast) check_valid_completion(p, *fast);
            }
        }
    }
}

TEST_CASE("special pair predicate") {
    CHECK(is_special(UniPair{qi(z2i, 3, 1), qi(z2i, 3, -1)}));  // norms 13 < 36, 16
    CHECK_FALSE(is_special(UniPair{qi_int(z2i, 1), qi_int(z2i, 1)}));      // |a-b| = 0
    CHECK_FALSE(is_special(UniPair{qi(z2i, 3, 1), qi_int(z2i, 2)}));       // 13 != 4
}

TEST_CASE("norm-shape diagnostic versus full predicate") {
    // (2, 2i): norms 4, 4; |2+2i|^2 = 8 > 4 and |2-2i|^2 = 8 > 4, so the
    // norm shape holds, but the pair is not unimodular.
    UniPair p{qi_int(z2i, 2), qi(z2i, 0, 1)};
    CHECK(has_special_norms(p));
    CHECK_FALSE(is_unimodular(p));
    CHECK_FALSE(is_special(p));
}

TEST_CASE("explicit family over Z[di]") {
    auto e22 = special_family(2, 2);
    CHECK(e22.pair == UniPair{qi(z2i, 3, 1), qi(z2i, 3, -1)});
    CHECK(e22.completion.m == mat2(qi(z2i, 3, 1), qi(z2i, 3, -1), qi_int(z2i, 2), qi(z2i, 1, -1)));

    auto e24 = special_family(2, 4);
    CHECK(e24.pair == UniPair{qi(z2i, 5, 2), qi(z2i, 5, -2)});
    CHECK(e24.completion.m.m21 == qi_int(z2i, 4));
    CHECK(e24.completion.m.m22 == qi(z2i, 1, -2));

    CHECK_THROWS_AS(special_family(3, 4), std::invalid_argument);
    CHECK_THROWS_AS(special_family(1, 5), OutOfScopeRingError);
    CHECK_THROWS_AS(special_family(2, 0), std::invalid_argument);

    for (Int d = 2; d <= 5; ++d) {
        for (Int k = 1; k <= 20; ++k) {
            Int n = d * k;
            auto fam = special_family(d, n);
            CHECK(is_one(det(fam.completion.m)));
            CHECK(norm_sq(fam.pair.alpha) == (1 + n) * (1 + n) + n * n);
            CHECK(is_special(fam.pair));
        }
    }
}

TEST_CASE("trivial variants") {
    UniPair e1{qi_int(z2i, 1), qi_int(z2i, 0)};
    auto vs = trivial_variants(e1);
    CHECK(vs[0] == UniPair{qi_int(z2i, 1), qi_int(z2i, 0)});
    CHECK(vs[1] == UniPair{qi_int(z2i, 0), qi_int(z2i, -1)});
    CHECK(vs[2] == UniPair{qi_int(z2i, -1), qi_int(z2i, 0)});
    CHECK(vs[3] == UniPair{qi_int(z2i, 0), qi_int(z2i, 1)});

    UniPair fam{qi(z2i, 3, 1), qi(z2i, 3, -1)};
    CHECK(is_trivial_variant(fam, UniPair{qi(z2i, 3, -1), qi(z2i, -3, -1)}));

    // each variant generates the same 4-element set
    auto base = trivial_variants(fam);
    auto as_set = [](const std::array<UniPair, 4>& a) {
        std::set<std::string> s;
        for (const auto& p : a) s.insert(to_string(p));
        return s;
    };
    for (const auto& v : base) CHECK(as_set(trivial_variants(v)) == as_set(base));

    // the variant map applied four times is the identity
    UniPair cur = fam;
    for (int i = 0; i < 4; ++i) cur = trivial_variants(cur)[1];
    CHECK(cur == fam);
}

TEST_CASE("special pair enumeration") {
    auto caught = enumerate_special(z2i, 13);
    UniPair fam{qi(z2i, 3, 1), qi(z2i, 3, -1)};
    for (const auto& v : trivial_variants(fam))
        CHECK(std::find(caught.begin(), caught.end(), v) != caught.end());

    CHECK(enumerate_special(z2i, 0).empty());

    // Z[i]: (1+i, 1-i) is NOT special (1-i = -i(1+i), the ideal is proper);
    // the unit-norm pairs like (1, i) are.
    auto small = enumerate_special(gauss, 2);
    CHECK(std::find(small.begin(), small.end(),
                    UniPair{qi(gauss, 1, 1), qi(gauss, 1, -1)}) == small.end());
    CHECK_FALSE(is_unimodular(UniPair{qi(gauss, 1, 1), qi(gauss, 1, -1)}));
    CHECK(std::find(small.begin(), small.end(),
                    UniPair{qi_int(gauss, 1), qi(gauss, 0, 1)}) != small.end());
}

TEST_CASE("enumeration is exhaustive, ordered, duplicate-free, variant-closed") {
    for (const Ring& r : {gaussian_order(2), make_ring(Form::Sqrt, 5)}) {
        Int cap = 60;
        auto fast = enumerate_special(r, cap);

        // independent full double loop over the disc
        std::vector<QuadInt> elems = elements_with_norm_up_to(r, cap);
        std::vector<UniPair> naive;
        for (const auto& a : elems)
            for (const auto& b : elems)
                if (norm_sq(a) == norm_sq(b) && is_special(UniPair{a, b}))
                    naive.push_back(UniPair{a, b});
        CHECK(fast.size() == naive.size());
        for (const auto& p : naive) CHECK(std::find(fast.begin(), fast.end(), p) != fast.end());

        std::set<std::string> seen;
        for (std::size_t i = 0; i < fast.size(); ++i) {
            CHECK(seen.insert(to_string(fast[i])).second);
            if (i + 1 < fast.size()) CHECK(pair_less(fast[i], fast[i + 1]));
            for (const auto& v : trivial_variants(fast[i]))
                CHECK(std::find(fast.begin(), fast.end(), v) != fast.end());
        }
    }
}

TEST_CASE("element disc enumeration matches the norm formula") {
    for (const Ring& r : testing::standard_rings()) {
        auto elems = elements_with_norm_up_to(r, 30);
        std::set<std::string> seen;
        for (const auto& x : elems) {
            CHECK(norm_sq(x) >= 1);
            CHECK(norm_sq(x) <= 30);
            CHECK(seen.insert(to_string(x)).second);
        }
        // brute box count agrees
        std::size_t count = 0;
        for (Int a = -40; a <= 40; ++a)
            for (Int b = -40; b <= 40; ++b) {
                if (a == 0 && b == 0) continue;
                Int n = norm_sq(qi(r, a, b));
                if (n >= 1 && n <= 30) ++count;
            }
        CHECK(elems.size() == count);
    }
}
