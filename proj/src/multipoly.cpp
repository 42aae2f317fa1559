#include "epwlab/multipoly.hpp"

#include <algorithm>
#include <unordered_map>

namespace epwlab::exactalg {

std::uint64_t monomial_key(const std::vector<int>& exps) {
    if (exps.size() > kMaxVars) throw shape_error("too many variables for packed keys");
    int total = 0;
    std::uint64_t key = 0;
    for (size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] < 0 || exps[i] > kMaxExp) throw shape_error("exponent out of range");
        total += exps[i];
        key |= static_cast<std::uint64_t>(exps[i]) << (8 * (6 - i));
    }
    if (total > kMaxExp) throw shape_error("total degree out of range");
    key |= static_cast<std::uint64_t>(total) << 56;
    return key;
}

std::vector<int> monomial_exponents(std::uint64_t key, int nvars) {
    std::vector<int> e(nvars);
    for (int i = 0; i < nvars; ++i)
        e[i] = static_cast<int>((key >> (8 * (6 - i))) & 0xFF);
    return e;
}

int monomial_degree(std::uint64_t key) { return static_cast<int>(key >> 56); }

MultiPoly::MultiPoly(field_t field, int nvars) : field_(field), nvars_(nvars) {
    require_valid_field(field);
    if (nvars < 0 || nvars > kMaxVars) throw shape_error("variable count out of range");
}

MultiPoly MultiPoly::constant(field_t field, int nvars, const Scalar& c) {
    return monomial(field, nvars, std::vector<int>(nvars, 0), c);
}

MultiPoly MultiPoly::monomial(field_t field, int nvars, const std::vector<int>& exps,
                              const Scalar& coeff) {
    if (static_cast<int>(exps.size()) != nvars) throw shape_error("exponent list length mismatch");
    if (coeff.field() != field) throw context_error("coefficient field mismatch");
    MultiPoly p(field, nvars);
    if (!coeff.is_zero()) p.terms_.emplace_back(monomial_key(exps), coeff);
    return p;
}

MultiPoly MultiPoly::variable(field_t field, int nvars, int var) {
    std::vector<int> e(nvars, 0);
    if (var < 0 || var >= nvars) throw shape_error("variable index out of range");
    e[var] = 1;
    return monomial(field, nvars, e, Scalar::one(field));
}

int MultiPoly::degree() const {
    return terms_.empty() ? -1 : monomial_degree(terms_.front().first);
}

int MultiPoly::lowest_degree() const {
    if (terms_.empty())
        throw degenerate_input_error("lowest_degree of the zero polynomial");
    return monomial_degree(terms_.back().first);
}

bool MultiPoly::is_homogeneous(int d) const {
    for (const auto& [k, c] : terms_)
        if (monomial_degree(k) != d) return false;
    return true;
}

namespace {

void check_compatible(const MultiPoly& a, const MultiPoly& b) {
    if (a.field() != b.field()) throw context_error("polynomial field mismatch");
    if (a.nvars() != b.nvars()) throw shape_error("polynomial variable count mismatch");
}

}  // namespace

MultiPoly MultiPoly::from_terms(field_t field, int nvars,
                                std::vector<std::pair<std::uint64_t, Scalar>> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    MultiPoly p(field, nvars);
    for (auto& [k, c] : terms) {
        if (c.field() != field) throw context_error("coefficient field mismatch");
        if (!p.terms_.empty() && p.terms_.back().first == k)
            p.terms_.back().second += c;
        else
            p.terms_.emplace_back(k, c);
        if (p.terms_.back().second.is_zero()) p.terms_.pop_back();
    }
    return p;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(field_, nvars_);
    r.terms_.reserve(terms_.size());
    for (const auto& [k, c] : terms_) r.terms_.emplace_back(k, -c);
    return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    check_compatible(*this, o);
    MultiPoly r(field_, nvars_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first > o.terms_[j].first)) {
            r.terms_.push_back(terms_[i++]);
        } else if (i == terms_.size() || o.terms_[j].first > terms_[i].first) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            Scalar c = terms_[i].second + o.terms_[j].second;
            if (!c.is_zero()) r.terms_.emplace_back(terms_[i].first, c);
            ++i;
            ++j;
        }
    }
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    check_compatible(*this, o);
    std::unordered_map<std::uint64_t, Scalar> acc;
    acc.reserve(terms_.size() * o.terms_.size());
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_) {
            auto [it, fresh] = acc.try_emplace(ka + kb, Scalar::zero(field_));
            it->second += ca * cb;
        }
    std::vector<std::pair<std::uint64_t, Scalar>> terms(acc.begin(), acc.end());
    return from_terms(field_, nvars_, std::move(terms));
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    if (field_ != o.field_ || nvars_ != o.nvars_ || terms_.size() != o.terms_.size())
        return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].first != o.terms_[i].first || terms_[i].second != o.terms_[i].second)
            return false;
    return true;
}

MultiPoly MultiPoly::scaled(const Scalar& c) const {
    if (c.field() != field_) throw context_error("scalar field mismatch");
    MultiPoly r(field_, nvars_);
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& [k, v] : terms_) r.terms_.emplace_back(k, v * c);
    return r;
}

MultiPoly MultiPoly::divide_exact(const MultiPoly& divisor) const {
    check_compatible(*this, divisor);
    if (divisor.is_zero()) throw undefined_error("division by the zero polynomial");
    MultiPoly quotient(field_, nvars_);
    MultiPoly rem = *this;
    const auto [dk, dc] = divisor.terms_.front();
    std::vector<int> dexp = monomial_exponents(dk, nvars_);
    Scalar dinv = dc.inverse();
    std::vector<std::pair<std::uint64_t, Scalar>> qterms;
    while (!rem.is_zero()) {
        const auto [rk, rc] = rem.terms_.front();
        std::vector<int> rexp = monomial_exponents(rk, nvars_);
        bool divisible = true;
        for (int i = 0; i < nvars_; ++i)
            if (rexp[i] < dexp[i]) {
                divisible = false;
                break;
            }
        if (!divisible)
            throw divisibility_error("polynomial division left a remainder", rem.str());
        std::vector<int> qexp(nvars_);
        for (int i = 0; i < nvars_; ++i) qexp[i] = rexp[i] - dexp[i];
        Scalar qc = rc * dinv;
        MultiPoly t = monomial(field_, nvars_, qexp, qc);
        qterms.emplace_back(monomial_key(qexp), qc);
        rem = rem - t * divisor;
    }
    return from_terms(field_, nvars_, std::move(qterms));
}

MultiPoly MultiPoly::divide_by_variable_power(int var, int k) const {
    if (var < 0 || var >= nvars_) throw shape_error("variable index out of range");
    MultiPoly r(field_, nvars_);
    r.terms_.reserve(terms_.size());
    const std::uint64_t step =
        (static_cast<std::uint64_t>(k) << 56) | (static_cast<std::uint64_t>(k) << (8 * (6 - var)));
    for (const auto& [key, c] : terms_) {
        int e = static_cast<int>((key >> (8 * (6 - var))) & 0xFF);
        if (e < k) {
            MultiPoly witness = monomial(field_, nvars_, monomial_exponents(key, nvars_), c);
            throw divisibility_error("term not divisible by the variable power", witness.str());
        }
        r.terms_.emplace_back(key - step, c);
    }
    return r;
}

MultiPoly MultiPoly::derivative(int var) const {
    if (var < 0 || var >= nvars_) throw shape_error("variable index out of range");
    std::vector<std::pair<std::uint64_t, Scalar>> terms;
    terms.reserve(terms_.size());
    for (const auto& [key, c] : terms_) {
        int e = static_cast<int>((key >> (8 * (6 - var))) & 0xFF);
        if (e == 0) continue;
        std::uint64_t step =
            (1ULL << 56) | (1ULL << (8 * (6 - var)));
        terms.emplace_back(key - step, c * Scalar::of_long(field_, e));
    }
    return from_terms(field_, nvars_, std::move(terms));
}

namespace {

Scalar power(const Scalar& base, int e, field_t field) {
    Scalar r = Scalar::one(field);
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

}  // namespace

Scalar MultiPoly::eval(const std::vector<Scalar>& point) const {
    if (static_cast<int>(point.size()) != nvars_) throw shape_error("point length mismatch");
    for (const auto& s : point)
        if (s.field() != field_) throw context_error("point field mismatch");
    Scalar total = Scalar::zero(field_);
    for (const auto& [key, c] : terms_) {
        Scalar term = c;
        for (int i = 0; i < nvars_; ++i) {
            int e = static_cast<int>((key >> (8 * (6 - i))) & 0xFF);
            if (e > 0) term *= power(point[i], e, field_);
        }
        total += term;
    }
    return total;
}

MultiPoly::ValueGradient MultiPoly::eval_gradient(const std::vector<Scalar>& point) const {
    if (static_cast<int>(point.size()) != nvars_) throw shape_error("point length mismatch");
    ValueGradient out{Scalar::zero(field_), std::vector<Scalar>(nvars_, Scalar::zero(field_))};
    for (const auto& [key, c] : terms_) {
        std::vector<int> e = monomial_exponents(key, nvars_);
        std::vector<Scalar> pw(nvars_, Scalar::one(field_));
        Scalar term = c;
        for (int i = 0; i < nvars_; ++i) {
            pw[i] = power(point[i], e[i], field_);
            term *= pw[i];
        }
        out.value += term;
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            // c * e_i * x^(e - delta_i), assembled from the cached powers so
            // the route differs from differentiating symbolically first.
            Scalar g = c * Scalar::of_long(field_, e[i]) * power(point[i], e[i] - 1, field_);
            for (int j = 0; j < nvars_; ++j)
                if (j != i) g *= pw[j];
            out.gradient[i] += g;
        }
    }
    return out;
}

MultiPoly MultiPoly::shifted(const std::vector<Scalar>& point, int fixed_var) const {
    if (static_cast<int>(point.size()) != nvars_) throw shape_error("point length mismatch");
    if (fixed_var < 0 || fixed_var >= nvars_) throw shape_error("variable index out of range");
    std::unordered_map<std::uint64_t, Scalar> acc;
    for (const auto& [key, c] : terms_) {
        std::vector<int> e = monomial_exponents(key, nvars_);
        // Expand prod_i (p_i + y_i)^{e_i} with y_{fixed_var} = 0.
        std::vector<std::pair<std::uint64_t, Scalar>> partial{{0, c}};
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (i == fixed_var) {
                Scalar f = power(point[i], e[i], field_);
                if (f.is_zero()) {
                    partial.clear();
                    break;
                }
                for (auto& [k, v] : partial) v *= f;
                continue;
            }
            std::vector<std::pair<std::uint64_t, Scalar>> next;
            next.reserve(partial.size() * (e[i] + 1));
            // Binomial coefficients C(e_i, t) built incrementally.
            mpz_class binom = 1;
            for (int t = 0; t <= e[i]; ++t) {
                if (t > 0) {
                    binom *= (e[i] - t + 1);
                    mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), t);
                }
                Scalar factor = Scalar::of_long(field_, 0);
                {
                    // binom * p_i^(e_i - t)
                    Scalar b = field_ == kFieldQ
                                   ? Scalar::of_mpq(mpq_class(binom))
                                   : Scalar::of_long(field_, mpz_class(binom % field_).get_si());
                    factor = b * power(point[i], e[i] - t, field_);
                }
                if (factor.is_zero()) continue;
                std::uint64_t step =
                    (static_cast<std::uint64_t>(t) << 56) |
                    (static_cast<std::uint64_t>(t) << (8 * (6 - i)));
                for (const auto& [k, v] : partial) next.emplace_back(k + step, v * factor);
            }
            partial = std::move(next);
        }
        for (const auto& [k, v] : partial) {
            auto [it, fresh] = acc.try_emplace(k, Scalar::zero(field_));
            it->second += v;
        }
    }
    std::vector<std::pair<std::uint64_t, Scalar>> terms(acc.begin(), acc.end());
    return from_terms(field_, nvars_, std::move(terms));
}

MultiPoly MultiPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(terms_.front().second.inverse());
}

Scalar MultiPoly::leading_coefficient() const {
    if (is_zero()) throw degenerate_input_error("leading coefficient of the zero polynomial");
    return terms_.front().second;
}

std::string MultiPoly::str(const std::vector<std::string>& var_names) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        if (!first) out += " + ";
        first = false;
        out += c.str();
        std::vector<int> e = monomial_exponents(key, nvars_);
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            out += "*";
            out += var_names.empty() ? ("x" + std::to_string(i)) : var_names[i];
            if (e[i] > 1) out += "^" + std::to_string(e[i]);
        }
    }
    return out;
}

}  // namespace epwlab::exactalg
