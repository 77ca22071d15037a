#include "lcp/polynomial.hpp"

#include <numeric>

namespace lcp {

namespace {
const char* lambda(bool unicode) { return unicode ? "λ" : "L"; }
}

Polynomial::Polynomial(std::vector<long long> coeffs) : c_(std::move(coeffs)) {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Polynomial Polynomial::constant(long long c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(long long c, int power) {
    std::vector<long long> v(power + 1, 0);
    v[power] = c;
    return Polynomial(std::move(v));
}

long long Polynomial::coefficient(int power) const {
    if (power < 0 || power >= static_cast<int>(c_.size())) return 0;
    return c_[power];
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<long long> v(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = coefficient(static_cast<int>(i)) + o.coefficient(static_cast<int>(i));
    return Polynomial(std::move(v));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return Polynomial();
    std::vector<long long> v(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    return Polynomial(std::move(v));
}

Polynomial Polynomial::pow(int e) const {
    Polynomial acc = constant(1);
    for (int i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

int Polynomial::root_one_multiplicity() const {
    if (is_zero()) return 0;
    Polynomial cur = *this;
    int mult = 0;
    while (std::accumulate(cur.c_.begin(), cur.c_.end(), 0LL) == 0) {
        // Divide by (λ - 1): synthetic division at 1 is exact here.
        std::vector<long long> q(cur.c_.size() - 1, 0);
        long long carry = 0;
        for (int i = cur.degree(); i >= 1; --i) {
            carry += cur.c_[i];
            q[i - 1] = carry;
        }
        cur = Polynomial(std::move(q));
        ++mult;
        if (cur.is_zero()) break;
    }
    return mult;
}

std::optional<std::pair<int, int>> Polynomial::as_shifted_power() const {
    if (is_zero()) return std::nullopt;
    int k = 0;
    while (coefficient(k) == 0) ++k;
    int s = degree() - k;
    if (*this == shifted_power(s, k)) return std::make_pair(s, k);
    return std::nullopt;
}

std::string Polynomial::to_string(bool unicode) const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        long long c = c_[i];
        if (c == 0) continue;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        long long a = c < 0 ? -c : c;
        if (a != 1 || i == 0) out += std::to_string(a);
        if (i > 0) {
            out += lambda(unicode);
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

std::string Polynomial::to_factored_string(bool unicode) const {
    auto f = as_shifted_power();
    if (!f) return to_string(unicode);
    auto [s, k] = *f;
    if (s == 0 && k == 0) return "1";
    std::string out;
    if (s > 0) {
        out += std::string("(") + lambda(unicode) + "-1)";
        if (s > 1) out += "^" + std::to_string(s);
    }
    if (k > 0) {
        if (!out.empty()) out += unicode ? "·" : "*";
        out += lambda(unicode);
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

Polynomial shifted_power(int s, int k) {
    return Polynomial({-1, 1}).pow(s) * Polynomial::monomial(1, k);
}

}  // namespace lcp
