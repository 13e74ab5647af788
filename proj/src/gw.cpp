#include "tropcount/gw.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <iterator>
#include <limits>
#include <numeric>

namespace tropcount {

namespace {

const std::string kHyperbolicGlyph = "ℍ";  // H
const std::string kLAngle = "⟨";           // <
const std::string kRAngle = "⟩";           // >

long long checked_neg(long long v) {
    if (v == std::numeric_limits<long long>::min())
        throw std::overflow_error("integer negation overflow");
    return -v;
}

long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer addition overflow");
    return r;
}

long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer multiplication overflow");
    return r;
}

}  // namespace

std::map<long long, int> factorize(long long n) {
    if (n < 1) throw ValidationError("factorize expects a positive integer");
    std::map<long long, int> factors;
    for (long long p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        while (n % p == 0) {
            ++factors[p];
            n /= p;
        }
    }
    if (n > 1) ++factors[n];
    return factors;
}

long long squarefree_part(long long n) {
    if (n == 0) throw ValidationError("squarefree part of zero is undefined");
    long long m = n < 0 ? checked_neg(n) : n;
    long long result = 1;
    for (const auto& [p, e] : factorize(m))
        if (e % 2 == 1) result = checked_mul(result, p);
    return result;
}

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long p = 2; p * p <= n; p += (p == 2 ? 1 : 2))
        if (n % p == 0) return false;
    return true;
}

// ---------------------------------------------------------------- SquareClass

SquareClass SquareClass::make(long long numerator, long long denominator,
                              std::vector<std::string> symbols) {
    if (numerator == 0 || denominator == 0)
        throw ValidationError("<0> is not a unit square class");
    SquareClass cls;
    cls.sign_ = (numerator < 0) == (denominator < 0) ? 1 : -1;
    // <n/d> = <n*d>; combine the squarefree parts to dodge the product.
    long long sf_num = squarefree_part(numerator);
    long long sf_den = squarefree_part(denominator);
    long long g = std::gcd(sf_num, sf_den);
    cls.core_ = checked_mul(sf_num / g, sf_den / g);
    // Generator exponents live mod 2: keep the odd-parity names, sorted.
    std::sort(symbols.begin(), symbols.end());
    for (std::size_t k = 0; k < symbols.size();) {
        std::size_t run = k;
        while (run < symbols.size() && symbols[run] == symbols[k]) ++run;
        if ((run - k) % 2 == 1) cls.symbols_.push_back(symbols[k]);
        k = run;
    }
    return cls;
}

SquareClass SquareClass::negated() const {
    SquareClass cls = *this;
    cls.sign_ = -cls.sign_;
    return cls;
}

SquareClass SquareClass::times(const SquareClass& other) const {
    SquareClass cls;
    cls.sign_ = sign_ * other.sign_;
    cls.core_ = squarefree_part(checked_mul(core_, other.core_));
    // Symmetric difference of the generator sets (parities add mod 2).
    std::set_symmetric_difference(symbols_.begin(), symbols_.end(),
                                  other.symbols_.begin(), other.symbols_.end(),
                                  std::back_inserter(cls.symbols_));
    return cls;
}

bool SquareClass::operator<(const SquareClass& other) const {
    if (sign_ != other.sign_) return sign_ > other.sign_;  // +1 before -1
    if (core_ != other.core_) return core_ < other.core_;
    return symbols_ < other.symbols_;
}

std::string SquareClass::to_string() const {
    std::string out;
    if (sign_ < 0) out += "-";
    if (core_ != 1 || symbols_.empty()) out += std::to_string(core_);
    for (std::size_t k = 0; k < symbols_.size(); ++k) {
        if (core_ != 1 || symbols_.empty() || k > 0) out += "*";
        out += symbols_[k];
    }
    return out;
}

// ----------------------------------------------------------------- GwElement

GwElement GwElement::hyperbolic(long long n) {
    GwElement e;
    e.hyperbolics_ = n;
    return e;
}

GwElement GwElement::from_class(const SquareClass& cls, long long multiplicity) {
    GwElement e;
    if (multiplicity != 0) e.classes_[cls] = multiplicity;
    return e;
}

bool GwElement::has_symbols() const {
    for (const auto& [cls, mult] : classes_)
        if (cls.has_symbols()) return true;
    return false;
}

void GwElement::canonicalize() {
    for (auto it = classes_.begin(); it != classes_.end();)
        it = it->second == 0 ? classes_.erase(it) : std::next(it);
    // Fold <a> + <-a> pairs with like-signed multiplicities into H. Each
    // pair is visited once, from its positive-sign member.
    for (auto& [cls, mult] : classes_) {
        if (mult == 0 || cls.sign() < 0) continue;
        auto paired = classes_.find(cls.negated());
        if (paired == classes_.end()) continue;
        long long& other = paired->second;
        if (mult > 0 && other > 0) {
            long long k = std::min(mult, other);
            hyperbolics_ = checked_add(hyperbolics_, k);
            mult -= k;
            other -= k;
        } else if (mult < 0 && other < 0) {
            long long k = std::min(-mult, -other);
            hyperbolics_ = checked_add(hyperbolics_, -k);
            mult += k;
            other += k;
        }
    }
    for (auto it = classes_.begin(); it != classes_.end();)
        it = it->second == 0 ? classes_.erase(it) : std::next(it);
}

long long GwElement::rank() const {
    long long r = checked_mul(2, hyperbolics_);
    for (const auto& [cls, mult] : classes_) r = checked_add(r, mult);
    return r;
}

long long GwElement::signature(const SignAssignment& signs) const {
    long long total = 0;
    for (const auto& [cls, mult] : classes_) {
        int sign = cls.sign();
        for (const std::string& name : cls.symbols()) {
            auto it = signs.find(name);
            if (it == signs.end())
                throw ValidationError("no sign assignment for generator '" + name + "'");
            if (it->second != 1 && it->second != -1)
                throw ValidationError("sign assignment for generator '" + name +
                                      "' must be +1 or -1");
            sign *= it->second;
        }
        total = checked_add(total, sign > 0 ? mult : checked_neg(mult));
    }
    return total;
}

SquareClass GwElement::discriminant() const {
    if (has_symbols())
        throw ValidationError("discriminant is defined for symbol-free elements only");
    int sign = (hyperbolics_ % 2 != 0) ? -1 : 1;  // each H contributes <-1>
    long long core = 1;
    for (const auto& [cls, mult] : classes_) {
        if (mult % 2 == 0) continue;
        sign *= cls.sign();
        core = squarefree_part(checked_mul(core, cls.core()));
    }
    return SquareClass::make(sign * core);
}

GwElement operator+(const GwElement& a, const GwElement& b) {
    GwElement r = a;
    r.hyperbolics_ = checked_add(r.hyperbolics_, b.hyperbolics_);
    for (const auto& [cls, mult] : b.classes_) {
        long long& slot = r.classes_[cls];
        slot = checked_add(slot, mult);
    }
    r.canonicalize();
    return r;
}

GwElement GwElement::operator-() const {
    GwElement r;
    r.hyperbolics_ = checked_neg(hyperbolics_);
    for (const auto& [cls, mult] : classes_) r.classes_[cls] = checked_neg(mult);
    r.canonicalize();
    return r;
}

GwElement operator-(const GwElement& a, const GwElement& b) { return a + (-b); }

GwElement operator*(const GwElement& a, const GwElement& b) {
    GwElement r;
    long long a_class_rank = 0, b_class_rank = 0;
    for (const auto& [cls, mult] : a.classes_) a_class_rank = checked_add(a_class_rank, mult);
    for (const auto& [cls, mult] : b.classes_) b_class_rank = checked_add(b_class_rank, mult);
    // H*H = 2H and H*<a> = H.
    r.hyperbolics_ = checked_mul(2, checked_mul(a.hyperbolics_, b.hyperbolics_));
    r.hyperbolics_ = checked_add(r.hyperbolics_, checked_mul(a.hyperbolics_, b_class_rank));
    r.hyperbolics_ = checked_add(r.hyperbolics_, checked_mul(b.hyperbolics_, a_class_rank));
    for (const auto& [ca, ma] : a.classes_) {
        for (const auto& [cb, mb] : b.classes_) {
            long long& slot = r.classes_[ca.times(cb)];
            slot = checked_add(slot, checked_mul(ma, mb));
        }
    }
    r.canonicalize();
    return r;
}

GwElement operator*(long long n, const GwElement& a) {
    GwElement r;
    r.hyperbolics_ = checked_mul(n, a.hyperbolics_);
    for (const auto& [cls, mult] : a.classes_)
        if (long long m = checked_mul(n, mult); m != 0) r.classes_[cls] = m;
    r.canonicalize();
    return r;
}

std::string GwElement::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    auto append_term = [&](long long coeff, const std::string& body) {
        if (coeff == 0) return;
        if (out.empty()) {
            if (coeff < 0) out += "-";
        } else {
            out += coeff < 0 ? " - " : " + ";
        }
        long long mag = coeff < 0 ? checked_neg(coeff) : coeff;
        if (mag != 1) out += std::to_string(mag);
        out += body;
    };
    append_term(hyperbolics_, kHyperbolicGlyph);
    for (const auto& [cls, mult] : classes_)
        append_term(mult, kLAngle + cls.to_string() + kRAngle);
    return out;
}

GwElement class_of(long long numerator, long long denominator,
                   const std::vector<std::string>& symbols) {
    return GwElement::from_class(SquareClass::make(numerator, denominator, symbols));
}

// -------------------------------------------------------------------- parsing

namespace {

struct TermScanner {
    std::string_view text;
    std::size_t pos = 0;

    void skip_space() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_space();
        return pos >= text.size();
    }
    bool eat(std::string_view token) {
        if (text.substr(pos, token.size()) == token) {
            pos += token.size();
            return true;
        }
        return false;
    }
    long long integer() {
        skip_space();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw ValidationError("expected integer in GW expression");
        return std::stoll(std::string(text.substr(start, pos - start)));
    }
};

SquareClass parse_class_body(std::string_view body) {
    std::size_t pos = 0;
    bool neg = false;
    if (pos < body.size() && body[pos] == '-') {
        neg = true;
        ++pos;
    }
    long long core = 1;
    std::vector<std::string> symbols;
    bool any = false;
    while (pos < body.size()) {
        if (body[pos] == '*') {
            ++pos;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(body[pos]))) {
            std::size_t start = pos;
            while (pos < body.size() && std::isdigit(static_cast<unsigned char>(body[pos]))) ++pos;
            core = checked_mul(core, std::stoll(std::string(body.substr(start, pos - start))));
            any = true;
        } else if (std::isalpha(static_cast<unsigned char>(body[pos])) || body[pos] == '_') {
            std::size_t start = pos;
            while (pos < body.size() &&
                   (std::isalnum(static_cast<unsigned char>(body[pos])) || body[pos] == '_'))
                ++pos;
            symbols.push_back(std::string(body.substr(start, pos - start)));
            any = true;
        } else {
            throw ValidationError("malformed square class '" + std::string(body) + "'");
        }
    }
    if (!any) throw ValidationError("empty square class");
    return SquareClass::make(neg ? -core : core, 1, symbols);
}

}  // namespace

GwElement GwElement::parse(std::string_view text) {
    TermScanner scan{text};
    if (scan.done()) throw ValidationError("empty GW expression");
    {
        TermScanner probe = scan;
        if (probe.eat("0") && probe.done()) return GwElement::zero();
    }
    GwElement result;
    bool first = true;
    while (!scan.done()) {
        long long sign = 1;
        if (first) {
            if (scan.eat("-")) sign = -1;
            first = false;
        } else {
            if (scan.eat("+"))
                sign = 1;
            else if (scan.eat("-"))
                sign = -1;
            else
                throw ValidationError("expected '+' or '-' in GW expression");
        }
        scan.skip_space();
        long long coeff = 1;
        if (scan.pos < scan.text.size() &&
            std::isdigit(static_cast<unsigned char>(scan.text[scan.pos])))
            coeff = scan.integer();
        coeff = checked_mul(sign, coeff);
        if (scan.eat(kHyperbolicGlyph) || scan.eat("H")) {
            result += GwElement::hyperbolic(coeff);
            continue;
        }
        std::string closer;
        if (scan.eat(kLAngle))
            closer = kRAngle;
        else if (scan.eat("<"))
            closer = ">";
        else
            throw ValidationError("expected hyperbolic or class term in GW expression");
        std::size_t end = scan.text.find(closer, scan.pos);
        if (end == std::string_view::npos)
            throw ValidationError("unterminated square class in GW expression");
        SquareClass cls = parse_class_body(scan.text.substr(scan.pos, end - scan.pos));
        scan.pos = end + closer.size();
        result += GwElement::from_class(cls, coeff);
    }
    return result;
}

// ------------------------------------------------------------- Hilbert symbol

namespace {

// Integer representative of the square class of a rational.
long long square_class_rep(const Rational& a) {
    if (a.is_zero()) throw ValidationError("hilbert symbol requires nonzero arguments");
    long long sf_num = squarefree_part(a.num());
    long long sf_den = squarefree_part(a.den());
    long long g = std::gcd(sf_num, sf_den);
    return a.sgn() * checked_mul(sf_num / g, sf_den / g);
}

int legendre(long long a, long long p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) throw InternalError("legendre symbol of a multiple of p");
    // Euler's criterion.
    unsigned long long result = 1, base = static_cast<unsigned long long>(a);
    long long e = (p - 1) / 2;
    while (e > 0) {
        if (e & 1) result = (__uint128_t(result) * base) % p;
        base = (__uint128_t(base) * base) % p;
        e >>= 1;
    }
    return result == 1 ? 1 : -1;
}

// (u-1)/2 mod 2 for odd u.
int eps2(long long u) {
    long long m = ((u - 1) / 2) % 2;
    return static_cast<int>(m < 0 ? m + 2 : m);
}

// (u^2-1)/8 mod 2 for odd u.
int omega2(long long u) {
    long long m = u % 8;
    if (m < 0) m += 8;
    return (m == 1 || m == 7) ? 0 : 1;
}

}  // namespace

Place Place::prime(long long p) {
    if (!is_prime(p)) throw ValidationError("place must be a prime number or the real place");
    return Place{false, p};
}

int hilbert_symbol(const Rational& a, const Rational& b, const Place& place) {
    long long A = square_class_rep(a);
    long long B = square_class_rep(b);
    if (place.is_real) return (A < 0 && B < 0) ? -1 : 1;
    long long p = place.p;
    int alpha = 0, beta = 0;
    while (A % p == 0) {
        A /= p;
        ++alpha;
    }
    while (B % p == 0) {
        B /= p;
        ++beta;
    }
    if (p == 2) {
        int exponent = (eps2(A) * eps2(B) + alpha * omega2(B) + beta * omega2(A)) % 2;
        return exponent == 0 ? 1 : -1;
    }
    int result = 1;
    if ((alpha * beta) % 2 == 1) result *= legendre(-1, p);
    if (beta % 2 == 1) result *= legendre(A, p);
    if (alpha % 2 == 1) result *= legendre(B, p);
    return result;
}

// -------------------------------------------------------------- equals_over_Q

namespace {

// Split into effective positive and negative parts: z = pos - neg.
void split_effective(const GwElement& z, GwElement& pos, GwElement& neg) {
    pos = GwElement::hyperbolic(std::max(z.hyperbolics(), 0LL));
    neg = GwElement::hyperbolic(std::max(-z.hyperbolics(), 0LL));
    for (const auto& [cls, mult] : z.classes()) {
        if (mult > 0)
            pos = pos + GwElement::from_class(cls, mult);
        else
            neg = neg + GwElement::from_class(cls, -mult);
    }
}

// Diagonal entries of an effective symbol-free element, grouped as
// (integer representative, multiplicity).
std::map<long long, long long> diagonal_entries(const GwElement& form) {
    std::map<long long, long long> diag;
    if (form.hyperbolics() > 0) {
        diag[1] += form.hyperbolics();
        diag[-1] += form.hyperbolics();
    }
    for (const auto& [cls, mult] : form.classes())
        diag[cls.sign() * cls.core()] += mult;
    return diag;
}

// Hasse-Witt invariant prod_{i<j} (a_i, a_j)_p of a diagonal form.
int hasse_invariant(const std::map<long long, long long>& diag, long long p) {
    Place place = Place::prime(p);
    std::vector<std::pair<long long, long long>> entries(diag.begin(), diag.end());
    int result = 1;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto [ai, mi] = entries[i];
        // C(m,2) pairs within the repeated entry.
        if ((mi * (mi - 1) / 2) % 2 == 1) result *= hilbert_symbol(ai, ai, place);
        for (std::size_t j = i + 1; j < entries.size(); ++j) {
            const auto [aj, mj] = entries[j];
            if ((mi * mj) % 2 == 1) result *= hilbert_symbol(ai, aj, place);
        }
    }
    return result;
}

}  // namespace

bool equals_over_Q(const GwElement& x, const GwElement& y) {
    if (x.has_symbols() || y.has_symbols())
        throw ValidationError(
            "equals_over_Q is defined for symbol-free elements; use formal equality "
            "or specialize the generators first");
    GwElement z = x - y;
    if (z.is_zero()) return true;
    // z = pos - neg with pos, neg honest forms; x = y iff pos and neg are
    // isometric, which the invariant set below decides completely over Q.
    GwElement pos, neg;
    split_effective(z, pos, neg);
    if (pos.rank() != neg.rank()) return false;
    if (pos.signature() != neg.signature()) return false;
    if (!(pos.discriminant() == neg.discriminant())) return false;
    std::map<long long, long long> pe = diagonal_entries(pos), ne = diagonal_entries(neg);
    std::vector<long long> primes{2};
    for (const auto& entries : {pe, ne})
        for (const auto& [rep, mult] : entries)
            for (const auto& [p, e] : factorize(rep < 0 ? -rep : rep))
                primes.push_back(p);
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    for (long long p : primes)
        if (hasse_invariant(pe, p) != hasse_invariant(ne, p)) return false;
    return true;
}

}  // namespace tropcount
