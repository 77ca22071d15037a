#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lcp {

// Integer-coefficient polynomial in λ, stored low degree first with no
// trailing zero coefficient.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(std::vector<long long> coeffs);
    static Polynomial constant(long long c);
    static Polynomial monomial(long long c, int power);

    const std::vector<long long>& coefficients() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    long long coefficient(int power) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial pow(int e) const;
    bool operator==(const Polynomial& o) const = default;

    // Multiplicity of λ = 1 as a root.
    int root_one_multiplicity() const;

    // (s, k) when this equals (λ-1)^s · λ^k.
    std::optional<std::pair<int, int>> as_shifted_power() const;

    std::string to_string(bool unicode_lambda = true) const;            // expanded
    std::string to_factored_string(bool unicode_lambda = true) const;  // "(λ-1)^s·λ^k" if it factors

  private:
    std::vector<long long> c_;
};

// (λ-1)^s · λ^k
Polynomial shifted_power(int s, int k);

}  // namespace lcp
