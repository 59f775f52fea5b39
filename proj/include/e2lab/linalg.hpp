#pragma once

#include "e2lab/ring.hpp"

#include <vector>

namespace e2lab {

/// Row-major 2x2 matrix over one ambient ring.
struct Mat2 {
    QuadInt m11, m12, m21, m22;

    const Ring& ring() const { return m11.ring; }

    friend bool operator==(const Mat2&, const Mat2&) = default;
};

/// Validates that all entries share one ring.
Mat2 mat2(QuadInt m11, QuadInt m12, QuadInt m21, QuadInt m22);
Mat2 identity(const Ring& ring);

Mat2 operator*(const Mat2& m, const Mat2& n);
QuadInt det(const Mat2& m);

/// Adjugate inverse [[m22,-m12],[-m21,m11]]; requires det == 1.
Mat2 inv_sl2(const Mat2& m);

/// True iff m = [[1,0],[*,1]].
bool is_L2(const Mat2& m);

enum class Side { Upper, Lower };

/// One elementary move: Upper is right multiplication by [[1,t],[0,1]],
/// Lower by [[1,0],[t,1]]. t must be nonzero in a stored move.
struct ElemMove {
    Side side;
    QuadInt t;

    friend bool operator==(const ElemMove&, const ElemMove&) = default;
};

Mat2 elem_matrix(const ElemMove& move);

/// A word in the elementary generators, kept normalized: no zero
/// parameters, adjacent same-side moves merged.
struct ElemWord {
    std::vector<ElemMove> moves;

    bool empty() const { return moves.empty(); }
    std::size_t size() const { return moves.size(); }

    friend bool operator==(const ElemWord&, const ElemWord&) = default;
};

ElemWord normalize_word(std::vector<ElemMove> moves);
ElemWord concat(const ElemWord& u, const ElemWord& v);

/// Reversed word with negated parameters; to_matrix of it is the inverse.
ElemWord inverse_word(const ElemWord& w);

/// Ordered product of the elementary matrices; empty word gives identity,
/// hence the explicit ring argument.
Mat2 to_matrix(const ElemWord& w, const Ring& ring);

/// The length-3 word U(1);L(-1);U(1) whose product is [[0,1],[-1,0]].
ElemWord s_word(const Ring& ring);
Mat2 s_matrix(const Ring& ring);

/// A pair (alpha, beta), acted on by SL2 from the right as a row vector.
struct UniPair {
    QuadInt alpha, beta;

    const Ring& ring() const { return alpha.ring; }

    friend bool operator==(const UniPair&, const UniPair&) = default;
};

UniPair make_pair(QuadInt alpha, QuadInt beta);

/// (alpha, beta) * M as a row vector.
UniPair act_row(const UniPair& p, const Mat2& m);

/// Deterministic order for containers: (norm_sq(alpha), alpha, beta) by
/// coordinates.
bool pair_less(const UniPair& p, const UniPair& q);

/// Text forms. Matrix: [[a,b],[c,d]]; word: "U(t);L(t);..." with "" for the
/// empty word; pair: "(x, y)". All round-trip exactly.
std::string to_string(const Mat2& m);
Mat2 parse_mat2(const Ring& ring, std::string_view text);
std::string to_string(const ElemWord& w);
ElemWord parse_word(const Ring& ring, std::string_view text);
std::string to_string(const UniPair& p);
UniPair parse_pair(const Ring& ring, std::string_view text);

std::ostream& operator<<(std::ostream& os, const Mat2& m);
std::ostream& operator<<(std::ostream& os, const ElemWord& w);
std::ostream& operator<<(std::ostream& os, const UniPair& p);

}  // namespace e2lab
