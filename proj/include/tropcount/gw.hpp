#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "tropcount/errors.hpp"
#include "tropcount/rational.hpp"

namespace tropcount {

// Arithmetic in the Grothendieck-Witt ring of a characteristic-0 field with
// rational square classes and free symbolic generators. Elements are kept in
// a canonical form where <a> = <a*b^2> holds by construction and every
// <a> + <-a> pair of like-signed multiplicity is folded into a hyperbolic
// plane. All values are immutable after construction; operations are pure.

// Number-theory helpers (exposed because the tests cross-check against them).
std::map<long long, int> factorize(long long n);  // n >= 1, prime -> exponent
long long squarefree_part(long long n);           // n != 0 -> squarefree of |n|
bool is_prime(long long n);

// Canonical representative of a square class <a>: a sign, a positive
// squarefree integer core, and the symbolic generators occurring with odd
// parity (sorted, each at most once).
class SquareClass {
public:
    SquareClass() = default;  // <1>

    // <numerator/denominator * product of symbols>, reduced modulo squares.
    static SquareClass make(long long numerator, long long denominator = 1,
                            std::vector<std::string> symbols = {});

    int sign() const { return sign_; }
    long long core() const { return core_; }
    const std::vector<std::string>& symbols() const { return symbols_; }
    bool has_symbols() const { return !symbols_.empty(); }

    SquareClass negated() const;
    SquareClass times(const SquareClass& other) const;

    bool operator==(const SquareClass&) const = default;
    // Positive classes first, then by core, then by symbols.
    bool operator<(const SquareClass& other) const;

    std::string to_string() const;  // body of the bracket, e.g. "-2*d1"

private:
    int sign_ = 1;
    long long core_ = 1;
    std::vector<std::string> symbols_;
};

using SignAssignment = std::map<std::string, int>;

// Formal integer combination of square classes plus a hyperbolic-plane count.
// Negative multiplicities are allowed (Grothendieck group).
class GwElement {
public:
    GwElement() = default;  // zero

    static GwElement zero() { return GwElement(); }
    static GwElement one() { return from_class(SquareClass(), 1); }
    static GwElement hyperbolic(long long n = 1);
    static GwElement from_class(const SquareClass& cls, long long multiplicity = 1);

    long long hyperbolics() const { return hyperbolics_; }
    const std::map<SquareClass, long long>& classes() const { return classes_; }

    bool is_zero() const { return hyperbolics_ == 0 && classes_.empty(); }
    bool has_symbols() const;

    long long rank() const;
    // Real specialization under a total sign assignment of the generators.
    long long signature(const SignAssignment& signs = {}) const;
    // Product of the diagonal classes, H contributing <-1>; symbol-free only.
    SquareClass discriminant() const;

    friend GwElement operator+(const GwElement& a, const GwElement& b);
    friend GwElement operator-(const GwElement& a, const GwElement& b);
    friend GwElement operator*(const GwElement& a, const GwElement& b);
    friend GwElement operator*(long long n, const GwElement& a);
    GwElement operator-() const;

    GwElement& operator+=(const GwElement& b) { return *this = *this + b; }
    GwElement& operator*=(const GwElement& b) { return *this = *this * b; }

    // Formal equality of canonical records. Use equals_over_Q for equality
    // as quadratic forms over the rationals.
    bool operator==(const GwElement&) const = default;

    // "nH + m<c> + ..." with the hyperbolic term first and classes sorted.
    std::string to_string() const;
    static GwElement parse(std::string_view text);

private:
    void canonicalize();

    long long hyperbolics_ = 0;
    std::map<SquareClass, long long> classes_;  // nonzero multiplicities only
};

// The one-class element <numerator/denominator * symbols> in canonical form.
GwElement class_of(long long numerator, long long denominator = 1,
                   const std::vector<std::string>& symbols = {});

// A place of Q: a finite prime or the real place.
struct Place {
    static Place real() { return Place{true, 0}; }
    static Place prime(long long p);

    bool is_real = true;
    long long p = 0;
};

// +1 iff z^2 = a x^2 + b y^2 has a nontrivial solution over the completion.
int hilbert_symbol(const Rational& a, const Rational& b, const Place& place);

// Equality in GW(Q) decided by the complete invariant set: rank, real
// signature, discriminant and Hasse-Witt invariants. Rejects elements with
// symbolic generators.
bool equals_over_Q(const GwElement& x, const GwElement& y);

}  // namespace tropcount
