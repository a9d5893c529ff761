#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "clusterforge/bigint.hpp"
#include "clusterforge/errors.hpp"

namespace clusterforge {

/// Exponent vector of a Laurent monomial. Entries may be negative; the
/// length must equal the variable count of the polynomial it lives in.
using Monomial = std::vector<int32_t>;

/// Lexicographic order on exponent vectors. Total, translation invariant,
/// and a well order on nonnegative vectors, which is what exact division
/// needs for termination.
int compare_monomials(const Monomial& a, const Monomial& b);

struct FractionForm;

/// Multivariate Laurent polynomial over arbitrary-precision integers.
///
/// Terms are kept normalized: strictly increasing monomial order, no zero
/// coefficients. Two polynomials are equal iff their term lists coincide.
/// Values are immutable after construction apart from assignment.
class LaurentPoly {
public:
    struct Term {
        Monomial exps;
        Int coeff;
    };

    LaurentPoly() : n_(0) {}
    explicit LaurentPoly(int n) : n_(n) {}

    static LaurentPoly zero(int n) { return LaurentPoly(n); }
    static LaurentPoly constant(int n, Int c);
    /// The variable x_{i+1} (index is 0-based).
    static LaurentPoly variable(int n, int i);
    static LaurentPoly monomial(Monomial exps, Int c);
    /// Builds a polynomial from arbitrary (possibly unsorted, repeated) terms.
    static LaurentPoly from_terms(int n, std::vector<Term> terms);

    int var_count() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    const std::vector<Term>& terms() const { return terms_; }

    /// Componentwise minimum of exponents over all terms. Requires a nonzero
    /// polynomial.
    Monomial min_exponents() const;

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& rhs) const;
    LaurentPoly operator-(const LaurentPoly& rhs) const;
    LaurentPoly operator*(const LaurentPoly& rhs) const;
    LaurentPoly& operator+=(const LaurentPoly& rhs) { return *this = *this + rhs; }
    LaurentPoly& operator-=(const LaurentPoly& rhs) { return *this = *this - rhs; }
    LaurentPoly& operator*=(const LaurentPoly& rhs) { return *this = *this * rhs; }

    bool operator==(const LaurentPoly& rhs) const {
        return n_ == rhs.n_ && terms_ == rhs.terms_;
    }
    bool operator!=(const LaurentPoly& rhs) const { return !(*this == rhs); }
    /// Total order used for canonical sets of polynomials.
    bool operator<(const LaurentPoly& rhs) const;

    /// Multiplies by the monomial x^shift.
    LaurentPoly shifted(const Monomial& shift) const;

    /// Exact division: returns q with q*b == *this, throws NotDivisibleError
    /// if no such Laurent polynomial exists. b must be nonzero.
    LaurentPoly exact_div(const LaurentPoly& b) const;

    /// Unique factorization *this == numerator * x^{-d} with the numerator an
    /// ordinary polynomial not divisible by any variable. Throws on zero.
    FractionForm to_fraction() const;

    /// Canonical JSON form: {"n": .., "terms": [[coeff-decimal-string, [e...]], ...]}
    /// with terms in strictly increasing monomial order.
    nlohmann::json to_json() const;
    static LaurentPoly from_json(const nlohmann::json& j);

    /// Human-readable form, e.g. "x1^2*x2^-1 + 1". Not meant to be parsed.
    std::string to_string() const;
    /// Compact canonical string, usable as a map key.
    std::string key() const;

private:
    void normalize();

    int n_;
    std::vector<Term> terms_;
};

bool operator==(const LaurentPoly::Term& a, const LaurentPoly::Term& b);

/// A Laurent polynomial written as P / x^d with P an ordinary polynomial
/// having, for each variable, at least one term of exponent zero. d may have
/// negative entries (e.g. d = (-1,0) for the polynomial x_1).
struct FractionForm {
    LaurentPoly numerator;
    std::vector<int32_t> denominator_exponents;

    /// numerator * x^{-d}; reproduces the original polynomial exactly.
    LaurentPoly reconstruct() const;
    nlohmann::json to_json() const;
};

/// Sufficient syntactic test on an ordinary-polynomial numerator P:
/// all coefficients >= 0, P != 0, and for every variable some positive term
/// avoids it. True implies P is weakly positive; false is inconclusive.
bool numerator_weak_positivity_condition(const LaurentPoly& numerator);

/// Applies the numerator condition to to_fraction(a).numerator.
/// True implies a is a weakly positive Laurent polynomial.
bool is_weakly_positive_sufficient(const LaurentPoly& a);

/// Componentwise maximum. Vectors must have equal length.
std::vector<int32_t> sup_vector(const std::vector<int32_t>& d, const std::vector<int32_t>& e);

} // namespace clusterforge
