#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace e2lab;

namespace {

const Ring z2i = gaussian_order(2);

Mat2 m(const Ring& r, int a1, int b1, int a2, int b2, int a3, int b3, int a4, int b4) {
    return mat2(qi(r, a1, b1), qi(r, a2, b2), qi(r, a3, b3), qi(r, a4, b4));
}

}  // namespace

TEST_CASE("matrix product") {
    Mat2 a = m(z2i, 3, 1, 0, -2, 7, 0, 1, 1);
    CHECK(a * identity(z2i) == a);
    CHECK(identity(z2i) * a == a);

    // square of the off-diagonal -n matrix at n=2 doubles n
    Mat2 mn = m(z2i, 1, -1, -2, 0, -2, 0, 1, 1);
    Mat2 m2n = m(z2i, 1, -2, -4, 0, -4, 0, 1, 2);
    CHECK(mn * mn == m2n);
}

TEST_CASE("determinants") {
    CHECK(is_one(det(identity(z2i))));
    // top row (3+2i, 3-2i), bottom row (2, 1-2i)
    CHECK(is_one(det(m(z2i, 3, 1, 3, -1, 2, 0, 1, -1))));
    // [[1-ni,-n],[-n,1+ni]] at n=4: (1+n^2) - n^2 = 1
    CHECK(is_one(det(m(z2i, 1, -2, -4, 0, -4, 0, 1, 2))));
}

TEST_CASE("adjugate inverse for det 1") {
    CHECK(inv_sl2(identity(z2i)) == identity(z2i));
    CHECK(inv_sl2(s_matrix(z2i)) == m(z2i, 0, 0, -1, 0, 1, 0, 0, 0));
    // inverse relation at n=2
    Mat2 pn = m(z2i, 1, 1, 2, 0, 2, 0, 1, -1);
    Mat2 mn = m(z2i, 1, -1, -2, 0, -2, 0, 1, 1);
    CHECK(inv_sl2(pn) == mn);
    CHECK(pn * mn == identity(z2i));
    CHECK_THROWS_AS(inv_sl2(m(z2i, 2, 0, 0, 0, 0, 0, 2, 0)), NotUnimodularError);
}

TEST_CASE("elementary matrices") {
    CHECK(elem_matrix({Side::Upper, qi_int(z2i, 1)}) == m(z2i, 1, 0, 1, 0, 0, 0, 1, 0));
    CHECK(elem_matrix({Side::Lower, qi(z2i, 0, -1)}) == m(z2i, 1, 0, 0, 0, 0, -1, 1, 0));
    CHECK_THROWS_AS(elem_matrix({Side::Upper, qi_int(z2i, 0)}), std::invalid_argument);

    std::mt19937_64 rng(3);
    for (int i = 0; i < 50; ++i) {
        QuadInt t = qi(z2i, Int(rng() % 21) - 10, Int(rng() % 21) - 10);
        if (is_zero(t)) continue;
        CHECK(is_one(det(elem_matrix({rng() % 2 ? Side::Upper : Side::Lower, t}))));
    }
}

TEST_CASE("words multiply out and normalize") {
    CHECK(to_matrix(ElemWord{}, z2i) == identity(z2i));
    CHECK(to_matrix(s_word(z2i), z2i) == s_matrix(z2i));
    CHECK(to_matrix(concat(s_word(z2i), s_word(z2i)), z2i) == m(z2i, -1, 0, 0, 0, 0, 0, -1, 0));

    QuadInt one = qi_int(z2i, 1);
    ElemWord w = normalize_word({{Side::Upper, one}, {Side::Upper, one + one}, {Side::Lower, one},
                                 {Side::Lower, -one}, {Side::Upper, one}});
    CHECK(w.size() == 1);
    CHECK(w.moves[0].side == Side::Upper);
    CHECK(w.moves[0].t == qi_int(z2i, 4));
}

TEST_CASE("L2 membership shape") {
    CHECK(is_L2(identity(z2i)));
    CHECK(is_L2(m(z2i, 1, 0, 0, 0, 7, 1, 1, 0)));
    CHECK_FALSE(is_L2(s_matrix(z2i)));

    Mat2 l = m(z2i, 1, 0, 0, 0, 5, -3, 1, 0);
    CHECK(is_one(det(l)));
    CHECK(to_matrix(ElemWord{{ElemMove{Side::Lower, l.m21}}}, z2i) == l);
}

TEST_CASE("row action") {
    UniPair p{qi(z2i, 3, 1), qi(z2i, 3, -1)};
    CHECK(act_row(p, identity(z2i)) == p);
    CHECK(act_row(p, s_matrix(z2i)) == UniPair{-p.beta, p.alpha});

    Ring gauss = gaussian_order(1);
    UniPair q{qi(gauss, 2, 1), qi_int(gauss, 1)};
    Mat2 lower = elem_matrix({Side::Lower, qi(gauss, -2, -1)});
    CHECK(act_row(q, lower) == UniPair{qi_int(gauss, 0), qi_int(gauss, 1)});
}

TEST_CASE("action and determinant properties over random words") {
    testing::Rand rnd(17);
    for (const Ring& r : testing::standard_rings()) {
        auto pool = elements_with_norm_up_to(r, 9);
        for (int i = 0; i < 40; ++i) {
            ElemWord wa = rnd.word(pool, 10);
            ElemWord wb = rnd.word(pool, 10);
            Mat2 ma = to_matrix(wa, r), mb = to_matrix(wb, r);
            CHECK(is_one(det(ma)));
            CHECK(det(ma * mb) == det(ma) * det(mb));
            UniPair p{rnd.element(pool), rnd.element(pool)};
            CHECK(act_row(p, ma * mb) == act_row(act_row(p, ma), mb));
            CHECK(to_matrix(concat(wa, inverse_word(wa)), r) == identity(r));
        }
    }
}

TEST_CASE("matrix, word and pair text round-trips") {
    Mat2 a = m(z2i, 0, 0, 1, 0, -1, 0, 0, 0);
    CHECK(to_string(a) == "[[0,1],[-1,0]]");
    CHECK(parse_mat2(z2i, "[[0, 1], [-1, 0]]") == a);
    CHECK_THROWS_AS(parse_mat2(z2i, "[[1,2,3],[4,5,6]]"), std::invalid_argument);

    CHECK(to_string(s_word(z2i)) == "U(1);L(-1);U(1)");
    CHECK(parse_word(z2i, "U(1);L(-1);U(1)") == s_word(z2i));
    CHECK(parse_word(z2i, "") == ElemWord{});
    CHECK_THROWS_AS(parse_word(z2i, "U(0)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_word(z2i, "X(1)"), std::invalid_argument);

    UniPair p{qi(z2i, 3, 1), qi(z2i, 3, -1)};
    CHECK(to_string(p) == "(3+1*w, 3-1*w)");
    CHECK(parse_pair(z2i, "(3+1*w, 3-1*w)") == p);

    testing::Rand rnd(23);
    for (const Ring& r : testing::standard_rings()) {
        auto pool = elements_with_norm_up_to(r, 16);
        for (int i = 0; i < 30; ++i) {
            ElemWord w = rnd.word(pool, 8);
            CHECK(parse_word(r, to_string(w)) == w);
            Mat2 mm = mat2(rnd.element(pool), rnd.element(pool), rnd.element(pool),
                           rnd.element(pool));
            CHECK(parse_mat2(r, to_string(mm)) == mm);
            UniPair pp{rnd.element(pool), rnd.element(pool)};
            CHECK(parse_pair(r, to_string(pp)) == pp);
        }
    }
}
