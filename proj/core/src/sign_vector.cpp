#include "salkit/sign_vector.hpp"

#include <cstdlib>
#include <stdexcept>

namespace salkit {

bool SignVector::is_zero() const {
    for (int8_t x : e)
        if (x != 0) return false;
    return true;
}

bool SignVector::has_zero() const {
    for (int8_t x : e)
        if (x == 0) return true;
    return false;
}

SignVector SignVector::negated() const {
    SignVector n = *this;
    for (int8_t& x : n.e) x = static_cast<int8_t>(-x);
    return n;
}

bool ComplexCovector::has_zero() const {
    for (int8_t x : e)
        if (x == 0) return true;
    return false;
}

int ComplexCovector::imaginary_count() const {
    int c = 0;
    for (int8_t x : e)
        if (x == 2 || x == -2) ++c;
    return c;
}

SignVector matroid_product_real(const SignVector& phi, const SignVector& psi) {
    if (phi.size() != psi.size())
        throw std::invalid_argument("matroid_product_real: length mismatch");
    SignVector r = phi;
    for (size_t i = 0; i < r.size(); ++i)
        if (r.e[i] == 0) r.e[i] = psi.e[i];
    return r;
}

bool s2_leq(int8_t a, int8_t b) {
    if (a == b) return true;
    if (a == 0) return true;
    return std::abs(a) == 1 && std::abs(b) == 2;
}

ComplexCovector matroid_product_complex(const ComplexCovector& phi, const ComplexCovector& psi) {
    if (phi.size() != psi.size())
        throw std::invalid_argument("matroid_product_complex: length mismatch");
    // Replacement happens only where phi carries no information. Replacing
    // whenever phi(x) <= psi(x) in the full S_2 order would overwrite real
    // units with imaginary ones and collapse i_1(F) o i_2(C) to i_2(C); the
    // vertex covectors v(C, C) have to stay real.
    ComplexCovector r = phi;
    for (size_t i = 0; i < r.size(); ++i)
        if (r.e[i] == 0) r.e[i] = psi.e[i];
    return r;
}

bool covector_leq(const ComplexCovector& x, const ComplexCovector& y) {
    if (x.size() != y.size())
        throw std::invalid_argument("covector_leq: length mismatch");
    for (size_t i = 0; i < x.size(); ++i)
        if (!s2_leq(x.e[i], y.e[i])) return false;
    return true;
}

ComplexCovector complexify_real(const SignVector& f) {
    return ComplexCovector(f.e);
}

ComplexCovector complexify_imaginary(const SignVector& f) {
    ComplexCovector c(f.e);
    for (int8_t& x : c.e) x = static_cast<int8_t>(2 * x);
    return c;
}

bool face_leq(const SignVector& f, const SignVector& g) {
    if (f.size() != g.size())
        throw std::invalid_argument("face_leq: length mismatch");
    for (size_t i = 0; i < f.size(); ++i)
        if (f.e[i] != 0 && f.e[i] != g.e[i]) return false;
    return true;
}

namespace {

char sign_char(int8_t v) {
    switch (v) {
        case 0: return '0';
        case 1: return '+';
        case -1: return '-';
        case 2: return 'I';
        case -2: return 'J';
    }
    throw std::logic_error("sign_char: bad entry");
}

template <typename V>
std::string render(const V& f, int sep_after) {
    std::string s;
    s.reserve(f.size() + 1);
    for (size_t i = 0; i < f.size(); ++i) {
        if (sep_after > 0 && static_cast<int>(i) == sep_after) s.push_back('|');
        s.push_back(sign_char(f.e[i]));
    }
    return s;
}

} // namespace

std::string to_string(const SignVector& f, int sep_after) { return render(f, sep_after); }
std::string to_string(const ComplexCovector& x, int sep_after) { return render(x, sep_after); }

bool covector_string_less(const ComplexCovector& a, const ComplexCovector& b) {
    const size_t n = std::min(a.size(), b.size());
    for (size_t i = 0; i < n; ++i) {
        char ca = sign_char(a.e[i]), cb = sign_char(b.e[i]);
        if (ca != cb) return ca < cb;
    }
    return a.size() < b.size();
}

SignVector parse_sign_vector(const std::string& s) {
    SignVector f;
    for (char c : s) {
        switch (c) {
            case '+': f.e.push_back(1); break;
            case '-': f.e.push_back(-1); break;
            case '0': f.e.push_back(0); break;
            case '|': break;
            default: throw std::invalid_argument("parse_sign_vector: bad character");
        }
    }
    return f;
}

} // namespace salkit
