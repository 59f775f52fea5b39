#include "e2lab/linalg.hpp"

#include <cctype>
#include <ostream>

namespace e2lab {

namespace {

void require_ring(const Ring& r, const QuadInt& x) {
    if (x.ring != r) throw RingMismatchError{};
}

std::string strip_spaces(std::string_view text) {
    std::string s;
    s.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    return s;
}

}  // namespace

Mat2 mat2(QuadInt m11, QuadInt m12, QuadInt m21, QuadInt m22) {
    require_ring(m11.ring, m12);
    require_ring(m11.ring, m21);
    require_ring(m11.ring, m22);
    return Mat2{std::move(m11), std::move(m12), std::move(m21), std::move(m22)};
}

Mat2 identity(const Ring& ring) {
    return Mat2{qi_int(ring, 1), qi_int(ring, 0), qi_int(ring, 0), qi_int(ring, 1)};
}

Mat2 operator*(const Mat2& m, const Mat2& n) {
    if (m.ring() != n.ring()) throw RingMismatchError{};
    return Mat2{m.m11 * n.m11 + m.m12 * n.m21, m.m11 * n.m12 + m.m12 * n.m22,
                m.m21 * n.m11 + m.m22 * n.m21, m.m21 * n.m12 + m.m22 * n.m22};
}

QuadInt det(const Mat2& m) {
    return m.m11 * m.m22 - m.m12 * m.m21;
}

Mat2 inv_sl2(const Mat2& m) {
    if (!is_one(det(m))) throw NotUnimodularError("inv_sl2: determinant is not 1");
    return Mat2{m.m22, -m.m12, -m.m21, m.m11};
}

bool is_L2(const Mat2& m) {
    return is_one(m.m11) && is_zero(m.m12) && is_one(m.m22);
}

Mat2 elem_matrix(const ElemMove& move) {
    if (is_zero(move.t)) throw std::invalid_argument("elem_matrix: zero move");
    const Ring& ring = move.t.ring;
    QuadInt one = qi_int(ring, 1);
    QuadInt zero = qi_int(ring, 0);
    if (move.side == Side::Upper) return Mat2{one, move.t, zero, one};
    return Mat2{one, zero, move.t, one};
}

ElemWord normalize_word(std::vector<ElemMove> moves) {
    ElemWord out;
    for (auto& m : moves) {
        if (is_zero(m.t)) continue;
        if (!out.moves.empty() && out.moves.back().side == m.side) {
            out.moves.back().t = out.moves.back().t + m.t;
            if (is_zero(out.moves.back().t)) out.moves.pop_back();
        } else {
            out.moves.push_back(std::move(m));
        }
    }
    return out;
}

ElemWord concat(const ElemWord& u, const ElemWord& v) {
    std::vector<ElemMove> moves = u.moves;
    moves.insert(moves.end(), v.moves.begin(), v.moves.end());
    return normalize_word(std::move(moves));
}

ElemWord inverse_word(const ElemWord& w) {
    std::vector<ElemMove> moves;
    moves.reserve(w.moves.size());
    for (auto it = w.moves.rbegin(); it != w.moves.rend(); ++it)
        moves.push_back(ElemMove{it->side, -it->t});
    return ElemWord{std::move(moves)};  // already normalized if w was
}

Mat2 to_matrix(const ElemWord& w, const Ring& ring) {
    Mat2 acc = identity(ring);
    for (const auto& m : w.moves) {
        require_ring(ring, m.t);
        acc = acc * elem_matrix(m);
    }
    return acc;
}

ElemWord s_word(const Ring& ring) {
    QuadInt one = qi_int(ring, 1);
    return normalize_word({ElemMove{Side::Upper, one}, ElemMove{Side::Lower, -one},
                           ElemMove{Side::Upper, one}});
}

Mat2 s_matrix(const Ring& ring) {
    return Mat2{qi_int(ring, 0), qi_int(ring, 1), qi_int(ring, -1), qi_int(ring, 0)};
}

UniPair make_pair(QuadInt alpha, QuadInt beta) {
    require_ring(alpha.ring, beta);
    return UniPair{std::move(alpha), std::move(beta)};
}

UniPair act_row(const UniPair& p, const Mat2& m) {
    if (p.ring() != m.ring()) throw RingMismatchError{};
    return UniPair{p.alpha * m.m11 + p.beta * m.m21, p.alpha * m.m12 + p.beta * m.m22};
}

bool pair_less(const UniPair& p, const UniPair& q) {
    Int np = norm_sq(p.alpha), nq = norm_sq(q.alpha);
    if (np != nq) return np < nq;
    if (p.alpha != q.alpha) return coord_less(p.alpha, q.alpha);
    return coord_less(p.beta, q.beta);
}

std::string to_string(const Mat2& m) {
    return "[[" + to_string(m.m11) + "," + to_string(m.m12) + "],[" + to_string(m.m21) +
           "," + to_string(m.m22) + "]]";
}

Mat2 parse_mat2(const Ring& ring, std::string_view text) {
    std::string s = strip_spaces(text);
    if (s.size() < 4 || s.substr(0, 2) != "[[" || s.substr(s.size() - 2) != "]]")
        throw std::invalid_argument("matrix must look like [[a,b],[c,d]]");
    std::string body = s.substr(2, s.size() - 4);
    auto mid = body.find("],[");
    if (mid == std::string::npos) throw std::invalid_argument("matrix must have two rows");
    auto split_row = [&](const std::string& row) {
        auto comma = row.find(',');
        if (comma == std::string::npos || row.find(',', comma + 1) != std::string::npos)
            throw std::invalid_argument("matrix row must have two entries");
        return std::pair<std::string, std::string>(row.substr(0, comma), row.substr(comma + 1));
    };
    auto [a, b] = split_row(body.substr(0, mid));
    auto [c, d] = split_row(body.substr(mid + 3));
    return mat2(parse_quadint(ring, a), parse_quadint(ring, b), parse_quadint(ring, c),
                parse_quadint(ring, d));
}

std::string to_string(const ElemWord& w) {
    std::string out;
    for (std::size_t i = 0; i < w.moves.size(); ++i) {
        if (i) out += ';';
        out += (w.moves[i].side == Side::Upper) ? 'U' : 'L';
        out += '(';
        out += to_string(w.moves[i].t);
        out += ')';
    }
    return out;
}

ElemWord parse_word(const Ring& ring, std::string_view text) {
    std::string s = strip_spaces(text);
    std::vector<ElemMove> moves;
    std::size_t i = 0;
    while (i < s.size()) {
        char side_ch = s[i];
        if (side_ch != 'U' && side_ch != 'L')
            throw std::invalid_argument("word move must start with U or L");
        ++i;
        if (i >= s.size() || s[i] != '(') throw std::invalid_argument("expected ( after move side");
        auto close = s.find(')', i);
        if (close == std::string::npos) throw std::invalid_argument("unterminated move parameter");
        QuadInt t = parse_quadint(ring, s.substr(i + 1, close - i - 1));
        if (is_zero(t)) throw std::invalid_argument("zero move parameter in word");
        moves.push_back(ElemMove{side_ch == 'U' ? Side::Upper : Side::Lower, std::move(t)});
        i = close + 1;
        if (i < s.size()) {
            if (s[i] != ';') throw std::invalid_argument("moves must be separated by ;");
            ++i;
            if (i == s.size()) throw std::invalid_argument("dangling ; in word");
        }
    }
    return normalize_word(std::move(moves));
}

std::string to_string(const UniPair& p) {
    return "(" + to_string(p.alpha) + ", " + to_string(p.beta) + ")";
}

std::ostream& operator<<(std::ostream& os, const Mat2& m) { return os << to_string(m); }
std::ostream& operator<<(std::ostream& os, const ElemWord& w) { return os << to_string(w); }
std::ostream& operator<<(std::ostream& os, const UniPair& p) { return os << to_string(p); }

UniPair parse_pair(const Ring& ring, std::string_view text) {
    std::string s = strip_spaces(text);
    if (s.size() < 3 || s.front() != '(' || s.back() != ')')
        throw std::invalid_argument("pair must look like (x, y)");
    std::string body = s.substr(1, s.size() - 2);
    auto comma = body.find(',');
    if (comma == std::string::npos || body.find(',', comma + 1) != std::string::npos)
        throw std::invalid_argument("pair must have two entries");
    return make_pair(parse_quadint(ring, body.substr(0, comma)),
                     parse_quadint(ring, body.substr(comma + 1)));
}

}  // namespace e2lab
