#pragma once

/*
 * Sparse bivariate polynomials over the rationals: a map from exponent pairs
 * (i, j) to nonzero coefficients of x^i y^j. The sign-product construction
 * produces polynomials that are sparse in mixed terms, which is why the map
 * representation is used instead of a dense grid.
 */

#include "fieldzero/qinterval.hpp"
#include "fieldzero/unipoly.hpp"

#include <map>
#include <optional>
#include <sstream>
#include <utility>
#include <vector>

namespace fieldzero {

class BiPoly {
public:
    using Key = std::pair<int, int>;  // (i, j) for x^i y^j

    BiPoly() = default;
    explicit BiPoly(const Rational& c) {
        if (c != 0) terms_[{0, 0}] = c;
    }

    static BiPoly monomial(int i, int j, const Rational& c) {
        BiPoly p;
        if (c != 0) p.terms_[{i, j}] = c;
        return p;
    }
    static BiPoly var_x() { return monomial(1, 0, Rational(1)); }
    static BiPoly var_y() { return monomial(0, 1, Rational(1)); }

    // p(x) as a bivariate polynomial in the chosen variable.
    static BiPoly from_unipoly(const UniPoly& p, bool in_x) {
        BiPoly r;
        for (int k = 0; k <= p.degree(); ++k)
            if (p.coeff(k) != 0) r.terms_[in_x ? Key{k, 0} : Key{0, k}] = p.coeff(k);
        return r;
    }

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Key, Rational>& terms() const { return terms_; }

    int total_degree() const {
        int d = -1;
        for (const auto& [k, c] : terms_) d = std::max(d, k.first + k.second);
        return d;
    }
    int degree_x() const {
        int d = -1;
        for (const auto& [k, c] : terms_) d = std::max(d, k.first);
        return d;
    }
    int degree_y() const {
        int d = -1;
        for (const auto& [k, c] : terms_) d = std::max(d, k.second);
        return d;
    }

    bool operator==(const BiPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const BiPoly& o) const { return !(*this == o); }

    BiPoly operator-() const {
        BiPoly r(*this);
        for (auto& [k, c] : r.terms_) c = -c;
        return r;
    }

    BiPoly& operator+=(const BiPoly& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }
    BiPoly& operator-=(const BiPoly& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, -c);
        return *this;
    }
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }

    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        BiPoly r;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_)
                r.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
        return r;
    }

    friend BiPoly operator*(const Rational& s, const BiPoly& p) {
        BiPoly r;
        if (s == 0) return r;
        r.terms_ = p.terms_;
        for (auto& [k, c] : r.terms_) c *= s;
        return r;
    }

    Rational eval(const Rational& x, const Rational& y) const {
        // Horner in x over cached y-powers
        Rational r(0);
        std::vector<Rational> ypow{Rational(1)};
        int prev_i = -1;
        // iterate by descending x-degree
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [k, c] = *it;
            if (prev_i < 0) {
                prev_i = k.first;
            } else {
                for (int t = 0; t < prev_i - k.first; ++t) r *= x;
                prev_i = k.first;
            }
            while (static_cast<int>(ypow.size()) <= k.second) ypow.push_back(ypow.back() * y);
            r += c * ypow[static_cast<size_t>(k.second)];
        }
        if (prev_i > 0)
            for (int t = 0; t < prev_i; ++t) r *= x;
        return r;
    }

    // Exact range enclosure over a rational box (term-wise interval bounds).
    QInterval eval_box(const QInterval& x, const QInterval& y) const {
        QInterval acc = QInterval::point(Rational(0));
        for (const auto& [k, c] : terms_) {
            QInterval t = x.pow(static_cast<unsigned>(k.first)) * y.pow(static_cast<unsigned>(k.second));
            acc = acc + t.scaled(c);
        }
        return acc;
    }

    BiPoly substitute_neg_y() const {
        BiPoly r;
        for (const auto& [k, c] : terms_)
            r.terms_[k] = (k.second % 2 == 0) ? c : -c;
        return r;
    }

    bool even_in_y() const {
        for (const auto& [k, c] : terms_)
            if (k.second % 2 != 0) return false;
        return true;
    }

    // Exact division; nullopt when the divisor does not divide.
    std::optional<BiPoly> divide_exact(const BiPoly& d) const {
        if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
        BiPoly q, r(*this);
        // graded-lex leading term of the divisor
        auto lead = [](const BiPoly& p) {
            auto best = p.terms_.begin();
            for (auto it = p.terms_.begin(); it != p.terms_.end(); ++it) {
                int db = best->first.first + best->first.second;
                int di = it->first.first + it->first.second;
                if (di > db || (di == db && it->first > best->first)) best = it;
            }
            return best;
        };
        auto dl = lead(d);
        while (!r.is_zero()) {
            auto rl = lead(r);
            int di = rl->first.first - dl->first.first;
            int dj = rl->first.second - dl->first.second;
            if (di < 0 || dj < 0) return std::nullopt;
            Rational f = rl->second / dl->second;
            BiPoly t = monomial(di, dj, f);
            q += t;
            r -= t * d;
        }
        return q;
    }

    // Coefficients with respect to y: result[j] is a polynomial in x.
    std::vector<UniPoly> coeffs_wrt_y() const {
        std::vector<std::vector<Rational>> rows(static_cast<size_t>(degree_y() + 1));
        if (is_zero()) return {};
        for (const auto& [k, c] : terms_) {
            auto& row = rows[static_cast<size_t>(k.second)];
            if (static_cast<int>(row.size()) <= k.first) row.resize(static_cast<size_t>(k.first) + 1, Rational(0));
            row[static_cast<size_t>(k.first)] = c;
        }
        std::vector<UniPoly> out;
        out.reserve(rows.size());
        for (auto& row : rows) out.emplace_back(std::move(row));
        return out;
    }

    std::vector<UniPoly> coeffs_wrt_x() const {
        std::vector<std::vector<Rational>> rows(static_cast<size_t>(degree_x() + 1));
        if (is_zero()) return {};
        for (const auto& [k, c] : terms_) {
            auto& row = rows[static_cast<size_t>(k.first)];
            if (static_cast<int>(row.size()) <= k.second) row.resize(static_cast<size_t>(k.second) + 1, Rational(0));
            row[static_cast<size_t>(k.second)] = c;
        }
        std::vector<UniPoly> out;
        out.reserve(rows.size());
        for (auto& row : rows) out.emplace_back(std::move(row));
        return out;
    }

    UniPoly eval_y(const Rational& y) const {  // p(x, y0) as polynomial in x
        std::vector<Rational> c(static_cast<size_t>(std::max(0, degree_x() + 1)), Rational(0));
        for (const auto& [k, coef] : terms_)
            c[static_cast<size_t>(k.first)] += coef * rational_pow(y, static_cast<unsigned>(k.second));
        return UniPoly(std::move(c));
    }

    // One term per line: "num/den i j", ordered by (i, j).
    std::string term_lines() const {
        std::ostringstream os;
        for (const auto& [k, c] : terms_)
            os << c.get_num().get_str() << "/" << c.get_den().get_str() << " " << k.first << " "
               << k.second << "\n";
        return os.str();
    }

private:
    void add_term(const Key& k, const Rational& c) {
        if (c == 0) return;
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    std::map<Key, Rational> terms_;
};

inline Rational bi_evaluate(const BiPoly& p, const Rational& x, const Rational& y) {
    return p.eval(x, y);
}

}  // namespace fieldzero
