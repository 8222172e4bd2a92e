#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "skl/rational.hpp"

namespace skl {

class Tower;
using TowerPtr = std::shared_ptr<const Tower>;

/// A tower of algebraic extensions of the rationals. Each step adjoins a
/// root of a monic polynomial of degree >= 2 whose coefficients live in
/// the previous level. Elements are dense coefficient vectors over the
/// product basis; the basis index of step 1 varies fastest, so a prefix
/// tower embeds into any extension by zero padding.
///
/// Irreducibility of step polynomials is never checked. If a step is
/// reducible the tower is merely a ring; the failure surfaces as a
/// ZeroDivisor when a zero divisor is inverted, and callers retry.
class Tower {
public:
    struct Step {
        std::string label;
        int degree;  // >= 2
        // c_0..c_{degree-1} of the monic minimal polynomial, each a flat
        // coefficient vector over the prefix tower.
        std::vector<std::vector<Rat>> minpoly;
    };

    static TowerPtr rationals();

    int levels() const { return static_cast<int>(steps_.size()); }
    int dim() const { return dims_.back(); }
    /// Dimension of the prefix consisting of the first `level` steps.
    int prefix_dim(int level) const { return dims_[level]; }
    const Step& step(int i) const { return steps_[i]; }

    bool same_as(const Tower& other) const;
    bool is_prefix_of(const Tower& other) const;

    /// Product of two flat vectors over the prefix of the given level,
    /// reduced modulo every step polynomial.
    std::vector<Rat> mul(int level, const std::vector<Rat>& a,
                         const std::vector<Rat>& b) const;

    friend TowerPtr adjoin_root_impl(const TowerPtr&, const std::string&,
                                     std::vector<std::vector<Rat>>);
    friend TowerPtr prefix_tower(const TowerPtr&, int level);

private:
    Tower() : dims_{1} {}
    std::vector<Step> steps_;
    std::vector<int> dims_;  // dims_[k] = dim of first k steps; dims_[0] = 1
};

/// Exact element of a tower. Immutable value type; all operations pure.
class FieldElem {
public:
    FieldElem();  // zero over the rationals
    explicit FieldElem(TowerPtr t);
    FieldElem(TowerPtr t, Rat r);
    FieldElem(TowerPtr t, std::vector<Rat> coeffs);

    /// The generator adjoined at `level` (1-based), as an element.
    static FieldElem generator(TowerPtr t, int level);

    const TowerPtr& tower() const { return tower_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const { return level() == 0; }
    /// Smallest prefix level whose basis carries all nonzero coefficients.
    int level() const;
    /// Value as a rational; requires is_rational().
    Rat rat() const;

    FieldElem operator-() const;
    FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
    FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
    FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }

    friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator*(const Rat& a, const FieldElem& b);
    friend bool operator==(const FieldElem& a, const FieldElem& b);
    friend bool operator!=(const FieldElem& a, const FieldElem& b) {
        return !(a == b);
    }

    /// Multiplicative inverse via a rational linear solve over the
    /// smallest prefix containing the element. Throws ZeroInput on zero
    /// and ZeroDivisor on a nonzero non-unit.
    FieldElem inv() const;

    /// Human-readable surd expression using the tower's step labels.
    std::string str() const;

private:
    TowerPtr tower_;
    std::vector<Rat> c_;
};

inline FieldElem operator/(const FieldElem& a, const FieldElem& b) {
    return a * b.inv();
}

/// New tower with one more step. `coeffs` are c_0..c_{d-1} of the monic
/// polynomial x^d + c_{d-1} x^{d-1} + ... + c_0 over the current tower.
TowerPtr adjoin_root(const TowerPtr& t, const std::string& label,
                     const std::vector<FieldElem>& coeffs);

/// The tower made of the first `level` steps of t.
TowerPtr prefix_tower(const TowerPtr& t, int level);

/// Restriction of x to the prefix tower carrying it; inverse of embed.
FieldElem restrict_to(const FieldElem& x, const TowerPtr& prefix);

/// Embeds an element into an extension of its tower (coefficient padding).
FieldElem embed(const FieldElem& x, const TowerPtr& bigger);

/// Brings two elements to a common tower (one must extend the other).
std::pair<FieldElem, FieldElem> aligned(const FieldElem& a, const FieldElem& b);

/// Returns a tower containing an element squaring to s, plus that element.
/// Rational perfect squares are resolved without adjunction; s = 0 returns
/// zero unchanged. Otherwise x^2 - s is adjoined formally; if s was already
/// a square the resulting zero divisors surface on later inversion.
std::pair<TowerPtr, FieldElem> sqrt_adjoin(const TowerPtr& t,
                                           const FieldElem& s);

}  // namespace skl
