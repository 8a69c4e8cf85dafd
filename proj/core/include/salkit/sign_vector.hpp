#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace salkit {

// A face of a real arrangement as the signs of <a_v, x> per hyperplane.
struct SignVector {
    std::vector<int8_t> e; // entries in {-1, 0, +1}

    SignVector() = default;
    explicit SignVector(std::vector<int8_t> entries) : e(std::move(entries)) {}

    size_t size() const { return e.size(); }
    int8_t operator[](size_t i) const { return e[i]; }
    int8_t& operator[](size_t i) { return e[i]; }
    bool operator==(const SignVector& o) const { return e == o.e; }
    bool operator<(const SignVector& o) const { return e < o.e; }

    bool is_zero() const;
    bool has_zero() const;
    SignVector negated() const;
};

// Entries from S_2 = {0, +1, -1, +i, -i}; +i and -i are stored as +2 and -2.
struct ComplexCovector {
    std::vector<int8_t> e;

    ComplexCovector() = default;
    explicit ComplexCovector(std::vector<int8_t> entries) : e(std::move(entries)) {}

    size_t size() const { return e.size(); }
    int8_t operator[](size_t i) const { return e[i]; }
    bool operator==(const ComplexCovector& o) const { return e == o.e; }
    bool operator<(const ComplexCovector& o) const { return e < o.e; }

    bool has_zero() const;
    int imaginary_count() const;
};

// Entrywise "first nonzero wins" composition.
SignVector matroid_product_real(const SignVector& phi, const SignVector& psi);

// S_2 element order: 0 below everything, every real unit below every
// imaginary unit, +1/-1 incomparable, +i/-i incomparable.
bool s2_leq(int8_t a, int8_t b);

// Entrywise "first nonzero wins", lifted to S_2 values.
ComplexCovector matroid_product_complex(const ComplexCovector& phi, const ComplexCovector& psi);

// Entrywise S_2 order on covectors.
bool covector_leq(const ComplexCovector& x, const ComplexCovector& y);

ComplexCovector complexify_real(const SignVector& f);      // i_1
ComplexCovector complexify_imaginary(const SignVector& f); // i_2

// F <= G in the face order: F(v) = 0 or F(v) = G(v) for every v.
bool face_leq(const SignVector& f, const SignVector& g);

// Serialization over {+,-,0} resp. {+,-,0,I,J}; sep_after > 0 inserts a
// cosmetic '|' after that many entries.
std::string to_string(const SignVector& f, int sep_after = -1);
std::string to_string(const ComplexCovector& x, int sep_after = -1);
SignVector parse_sign_vector(const std::string& s);

// Lexicographic order on the serialized string ('+' < '-' < '0' < 'I' < 'J').
bool covector_string_less(const ComplexCovector& a, const ComplexCovector& b);

} // namespace salkit
