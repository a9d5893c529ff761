#include "clusterforge/laurent.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace clusterforge {

int compare_monomials(const Monomial& a, const Monomial& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("compare_monomials: length mismatch");
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

bool operator==(const LaurentPoly::Term& a, const LaurentPoly::Term& b) {
    return a.exps == b.exps && a.coeff == b.coeff;
}

LaurentPoly LaurentPoly::constant(int n, Int c) {
    LaurentPoly p(n);
    if (c != 0) p.terms_.push_back({Monomial(n, 0), std::move(c)});
    return p;
}

LaurentPoly LaurentPoly::variable(int n, int i) {
    if (i < 0 || i >= n) throw std::invalid_argument("variable index out of range");
    Monomial m(n, 0);
    m[i] = 1;
    return monomial(std::move(m), 1);
}

LaurentPoly LaurentPoly::monomial(Monomial exps, Int c) {
    LaurentPoly p(static_cast<int>(exps.size()));
    if (c != 0) p.terms_.push_back({std::move(exps), std::move(c)});
    return p;
}

LaurentPoly LaurentPoly::from_terms(int n, std::vector<Term> terms) {
    LaurentPoly p(n);
    p.terms_ = std::move(terms);
    for (const auto& t : p.terms_)
        if (static_cast<int>(t.exps.size()) != n)
            throw std::invalid_argument("from_terms: exponent length mismatch");
    p.normalize();
    return p;
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_[0].coeff == 1 &&
           std::all_of(terms_[0].exps.begin(), terms_[0].exps.end(),
                       [](int32_t e) { return e == 0; });
}

void LaurentPoly::normalize() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
        return compare_monomials(a.exps, b.exps) < 0;
    });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().exps == t.exps) {
            out.back().coeff += t.coeff;
            if (out.back().coeff == 0) out.pop_back();
        } else if (t.coeff != 0) {
            out.push_back(std::move(t));
        }
    }
    terms_ = std::move(out);
}

Monomial LaurentPoly::min_exponents() const {
    if (is_zero()) throw std::invalid_argument("min_exponents of zero polynomial");
    Monomial m = terms_.front().exps;
    for (const auto& t : terms_)
        for (size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], t.exps[i]);
    return m;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(n_);
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& rhs) const {
    if (n_ != rhs.n_) throw std::invalid_argument("add: variable count mismatch");
    LaurentPoly r(n_);
    r.terms_.reserve(terms_.size() + rhs.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < rhs.terms_.size()) {
        int c = compare_monomials(terms_[i].exps, rhs.terms_[j].exps);
        if (c < 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (c > 0) {
            r.terms_.push_back(rhs.terms_[j++]);
        } else {
            Int s = terms_[i].coeff + rhs.terms_[j].coeff;
            if (s != 0) r.terms_.push_back({terms_[i].exps, std::move(s)});
            ++i, ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < rhs.terms_.size(); ++j) r.terms_.push_back(rhs.terms_[j]);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& rhs) const { return *this + (-rhs); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& rhs) const {
    if (n_ != rhs.n_) throw std::invalid_argument("mul: variable count mismatch");
    std::map<Monomial, Int> acc;
    Monomial m(n_);
    for (const auto& a : terms_) {
        for (const auto& b : rhs.terms_) {
            for (int k = 0; k < n_; ++k) m[k] = a.exps[k] + b.exps[k];
            acc[m] += a.coeff * b.coeff;
        }
    }
    LaurentPoly r(n_);
    r.terms_.reserve(acc.size());
    for (auto& [e, c] : acc)
        if (c != 0) r.terms_.push_back({e, std::move(c)});
    return r;
}

bool LaurentPoly::operator<(const LaurentPoly& rhs) const {
    if (n_ != rhs.n_) return n_ < rhs.n_;
    size_t k = std::min(terms_.size(), rhs.terms_.size());
    for (size_t i = 0; i < k; ++i) {
        int c = compare_monomials(terms_[i].exps, rhs.terms_[i].exps);
        if (c != 0) return c < 0;
        if (terms_[i].coeff != rhs.terms_[i].coeff)
            return terms_[i].coeff < rhs.terms_[i].coeff;
    }
    return terms_.size() < rhs.terms_.size();
}

LaurentPoly LaurentPoly::shifted(const Monomial& shift) const {
    if (static_cast<int>(shift.size()) != n_)
        throw std::invalid_argument("shifted: length mismatch");
    LaurentPoly r(n_);
    r.terms_ = terms_;
    for (auto& t : r.terms_)
        for (int k = 0; k < n_; ++k) t.exps[k] += shift[k];
    return r;
}

// Exact division. Both operands are first multiplied by monomials so that
// every variable has minimum exponent zero; the quotient of the shifted
// ordinary polynomials (when it exists as a Laurent polynomial) is itself an
// ordinary polynomial, because minimal degrees are additive over Z[x]. Greedy
// leading-term elimination under the lexicographic order then terminates: the
// leading monomial strictly decreases inside the well-ordered set N^n.
LaurentPoly LaurentPoly::exact_div(const LaurentPoly& b) const {
    if (n_ != b.n_) throw std::invalid_argument("exact_div: variable count mismatch");
    if (b.is_zero()) throw std::invalid_argument("exact_div: division by zero");
    if (is_zero()) return zero(n_);

    Monomial da = min_exponents();
    Monomial db = b.min_exponents();
    Monomial neg_da = da, neg_db = db;
    for (int k = 0; k < n_; ++k) {
        neg_da[k] = -da[k];
        neg_db[k] = -db[k];
    }
    LaurentPoly A = shifted(neg_da);
    LaurentPoly B = b.shifted(neg_db);

    const Term& lead_b = B.terms_.back();
    LaurentPoly q(n_);
    LaurentPoly rem = A;
    while (!rem.is_zero()) {
        const Term& lead_r = rem.terms_.back();
        Monomial e(n_);
        for (int k = 0; k < n_; ++k) {
            e[k] = lead_r.exps[k] - lead_b.exps[k];
            if (e[k] < 0)
                throw NotDivisibleError("exact_div: remainder " + rem.to_string() +
                                        " not divisible by " + B.to_string());
        }
        Int c = lead_r.coeff / lead_b.coeff;
        if (c * lead_b.coeff != lead_r.coeff)
            throw NotDivisibleError("exact_div: coefficient " + lead_r.coeff.str() +
                                    " not divisible by " + lead_b.coeff.str());
        LaurentPoly t = monomial(e, c);
        q += t;
        rem -= t * B;
    }
    Monomial shift(n_);
    for (int k = 0; k < n_; ++k) shift[k] = da[k] - db[k];
    return q.shifted(shift);
}

FractionForm LaurentPoly::to_fraction() const {
    if (is_zero())
        throw std::invalid_argument("to_fraction: zero polynomial has no fraction form");
    Monomial mins = min_exponents();
    Monomial d(n_), neg(n_);
    for (int k = 0; k < n_; ++k) {
        d[k] = -mins[k];
        neg[k] = d[k];
    }
    FractionForm f;
    f.numerator = shifted(neg);
    f.denominator_exponents = std::move(d);
    return f;
}

LaurentPoly FractionForm::reconstruct() const {
    Monomial neg = denominator_exponents;
    for (auto& e : neg) e = -e;
    return numerator.shifted(neg);
}

nlohmann::json FractionForm::to_json() const {
    nlohmann::json j;
    j["numerator"] = numerator.to_json();
    j["d"] = denominator_exponents;
    return j;
}

nlohmann::json LaurentPoly::to_json() const {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : terms_) terms.push_back({t.coeff.str(), t.exps});
    nlohmann::json j;
    j["n"] = n_;
    j["terms"] = std::move(terms);
    return j;
}

LaurentPoly LaurentPoly::from_json(const nlohmann::json& j) {
    int n = j.at("n").get<int>();
    LaurentPoly p(n);
    for (const auto& item : j.at("terms")) {
        Term t;
        t.coeff = Int(item.at(0).get<std::string>());
        t.exps = item.at(1).get<Monomial>();
        if (static_cast<int>(t.exps.size()) != n)
            throw std::invalid_argument("from_json: exponent length mismatch");
        p.terms_.push_back(std::move(t));
    }
    p.normalize();
    return p;
}

std::string LaurentPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    // Print high-order terms first; easier to read.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Term& t = *it;
        bool first = it == terms_.rbegin();
        Int c = t.coeff;
        if (c < 0) {
            os << (first ? "-" : " - ");
            c = -c;
        } else if (!first) {
            os << " + ";
        }
        bool has_var = std::any_of(t.exps.begin(), t.exps.end(),
                                   [](int32_t e) { return e != 0; });
        if (c != 1 || !has_var) {
            os << c.str();
            if (has_var) os << "*";
        }
        bool first_var = true;
        for (int k = 0; k < n_; ++k) {
            if (t.exps[k] == 0) continue;
            if (!first_var) os << "*";
            first_var = false;
            os << "x" << (k + 1);
            if (t.exps[k] != 1) os << "^" << t.exps[k];
        }
    }
    return os.str();
}

std::string LaurentPoly::key() const {
    std::ostringstream os;
    os << n_ << ";";
    for (const auto& t : terms_) {
        os << t.coeff.str() << ":";
        for (int32_t e : t.exps) os << e << ",";
        os << "|";
    }
    return os.str();
}

bool numerator_weak_positivity_condition(const LaurentPoly& numerator) {
    if (numerator.is_zero()) return false;
    for (const auto& t : numerator.terms()) {
        if (t.coeff < 0) return false;
        for (int32_t e : t.exps)
            if (e < 0) return false;
    }
    for (int i = 0; i < numerator.var_count(); ++i) {
        bool avoided = false;
        for (const auto& t : numerator.terms()) {
            if (t.exps[i] == 0 && t.coeff > 0) {
                avoided = true;
                break;
            }
        }
        if (!avoided) return false;
    }
    return true;
}

bool is_weakly_positive_sufficient(const LaurentPoly& a) {
    if (a.is_zero()) return false;
    return numerator_weak_positivity_condition(a.to_fraction().numerator);
}

std::vector<int32_t> sup_vector(const std::vector<int32_t>& d, const std::vector<int32_t>& e) {
    if (d.size() != e.size()) throw std::invalid_argument("sup_vector: length mismatch");
    std::vector<int32_t> s(d.size());
    for (size_t i = 0; i < d.size(); ++i) s[i] = std::max(d[i], e[i]);
    return s;
}

} // namespace clusterforge
