#include "skl/tower.hpp"

#include <algorithm>
#include <sstream>

#include "skl/errors.hpp"

namespace skl {

TowerPtr Tower::rationals() {
    static TowerPtr q = TowerPtr(new Tower());
    return q;
}

bool Tower::same_as(const Tower& other) const {
    if (this == &other) return true;
    if (steps_.size() != other.steps_.size()) return false;
    return is_prefix_of(other);
}

bool Tower::is_prefix_of(const Tower& other) const {
    if (steps_.size() > other.steps_.size()) return false;
    for (size_t i = 0; i < steps_.size(); ++i) {
        const Step& a = steps_[i];
        const Step& b = other.steps_[i];
        if (a.degree != b.degree || a.minpoly != b.minpoly) return false;
    }
    return true;
}

std::vector<Rat> Tower::mul(int level, const std::vector<Rat>& a,
                            const std::vector<Rat>& b) const {
    if (level == 0) return {a[0] * b[0]};
    const int d = steps_[level - 1].degree;
    const int m = dims_[level - 1];

    auto block_zero = [&](const std::vector<Rat>& v, int blk) {
        for (int t = 0; t < m; ++t)
            if (v[blk * m + t] != 0) return false;
        return true;
    };

    // Convolution of the top-variable coefficients.
    std::vector<std::vector<Rat>> prod(2 * d - 1);
    std::vector<Rat> ai(m), bj(m);
    for (int i = 0; i < d; ++i) {
        if (block_zero(a, i)) continue;
        std::copy(a.begin() + i * m, a.begin() + (i + 1) * m, ai.begin());
        for (int j = 0; j < d; ++j) {
            if (block_zero(b, j)) continue;
            std::copy(b.begin() + j * m, b.begin() + (j + 1) * m, bj.begin());
            std::vector<Rat> p = mul(level - 1, ai, bj);
            auto& dst = prod[i + j];
            if (dst.empty())
                dst = std::move(p);
            else
                for (int t = 0; t < m; ++t) dst[t] += p[t];
        }
    }

    // Reduce the top variable modulo its monic minimal polynomial.
    const auto& mp = steps_[level - 1].minpoly;
    for (int e = 2 * d - 2; e >= d; --e) {
        if (prod[e].empty()) continue;
        std::vector<Rat> c = std::move(prod[e]);
        prod[e].clear();
        bool c_zero = std::all_of(c.begin(), c.end(),
                                  [](const Rat& r) { return r == 0; });
        if (c_zero) continue;
        for (int t = 0; t < d; ++t) {
            std::vector<Rat> sub = mul(level - 1, c, mp[t]);
            auto& dst = prod[e - d + t];
            if (dst.empty()) dst.assign(m, Rat(0));
            for (int s = 0; s < m; ++s) dst[s] -= sub[s];
        }
    }

    std::vector<Rat> out(static_cast<size_t>(d) * m, Rat(0));
    for (int i = 0; i < d; ++i)
        if (!prod[i].empty())
            std::copy(prod[i].begin(), prod[i].end(), out.begin() + i * m);
    return out;
}

TowerPtr adjoin_root_impl(const TowerPtr& t, const std::string& label,
                          std::vector<std::vector<Rat>> coeffs) {
    auto next = std::shared_ptr<Tower>(new Tower(*t));
    Tower::Step step;
    step.label = label;
    step.degree = static_cast<int>(coeffs.size());
    step.minpoly = std::move(coeffs);
    next->steps_.push_back(std::move(step));
    next->dims_.push_back(next->dims_.back() * next->steps_.back().degree);
    return next;
}

TowerPtr adjoin_root(const TowerPtr& t, const std::string& label,
                     const std::vector<FieldElem>& coeffs) {
    if (coeffs.size() < 2)
        throw ConstraintViolation("adjoin_root: degree must be >= 2");
    std::vector<std::vector<Rat>> flat;
    flat.reserve(coeffs.size());
    for (const auto& c : coeffs) {
        if (!c.tower()->is_prefix_of(*t) && !c.tower()->same_as(*t))
            throw ConstraintViolation(
                "adjoin_root: coefficient not in the base tower");
        std::vector<Rat> v = c.coeffs();
        v.resize(t->dim(), Rat(0));
        flat.push_back(std::move(v));
    }
    return adjoin_root_impl(t, label, std::move(flat));
}

FieldElem::FieldElem() : FieldElem(Tower::rationals()) {}

FieldElem::FieldElem(TowerPtr t) : tower_(std::move(t)) {
    c_.assign(tower_->dim(), Rat(0));
}

FieldElem::FieldElem(TowerPtr t, Rat r) : FieldElem(std::move(t)) {
    c_[0] = std::move(r);
}

FieldElem::FieldElem(TowerPtr t, std::vector<Rat> coeffs)
    : tower_(std::move(t)), c_(std::move(coeffs)) {
    if (static_cast<int>(c_.size()) != tower_->dim())
        throw ConstraintViolation("FieldElem: coefficient length mismatch");
}

FieldElem FieldElem::generator(TowerPtr t, int level) {
    FieldElem x(t);
    if (level < 1 || level > t->levels())
        throw ConstraintViolation("generator: bad level");
    x.c_[t->prefix_dim(level - 1)] = 1;
    return x;
}

bool FieldElem::is_zero() const {
    return std::all_of(c_.begin(), c_.end(),
                       [](const Rat& r) { return r == 0; });
}

int FieldElem::level() const {
    for (int lv = tower_->levels(); lv >= 1; --lv) {
        for (int i = tower_->prefix_dim(lv - 1); i < tower_->prefix_dim(lv);
             ++i)
            if (c_[i] != 0) return lv;
    }
    return 0;
}

Rat FieldElem::rat() const {
    if (!is_rational()) throw ConstraintViolation("rat(): not rational");
    return c_[0];
}

FieldElem FieldElem::operator-() const {
    FieldElem r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

std::pair<FieldElem, FieldElem> aligned(const FieldElem& a,
                                        const FieldElem& b) {
    if (a.tower() == b.tower() || a.tower()->same_as(*b.tower()))
        return {a, b};
    if (a.tower()->is_prefix_of(*b.tower())) return {embed(a, b.tower()), b};
    if (b.tower()->is_prefix_of(*a.tower())) return {a, embed(b, a.tower())};
    throw ConstraintViolation("incompatible towers");
}

TowerPtr prefix_tower(const TowerPtr& t, int level) {
    if (level < 0 || level > t->levels())
        throw ConstraintViolation("prefix_tower: bad level");
    if (level == t->levels()) return t;
    if (level == 0) return Tower::rationals();
    auto next = std::shared_ptr<Tower>(new Tower());
    next->steps_.assign(t->steps_.begin(), t->steps_.begin() + level);
    next->dims_.assign(t->dims_.begin(), t->dims_.begin() + level + 1);
    return next;
}

FieldElem restrict_to(const FieldElem& x, const TowerPtr& prefix) {
    if (x.tower()->same_as(*prefix)) return FieldElem(prefix, x.coeffs());
    if (!prefix->is_prefix_of(*x.tower()) ||
        x.level() > prefix->levels())
        throw ConstraintViolation("restrict_to: element not in prefix");
    std::vector<Rat> v(x.coeffs().begin(), x.coeffs().begin() + prefix->dim());
    return FieldElem(prefix, std::move(v));
}

FieldElem embed(const FieldElem& x, const TowerPtr& bigger) {
    if (x.tower()->same_as(*bigger)) return FieldElem(bigger, x.coeffs());
    if (!x.tower()->is_prefix_of(*bigger))
        throw ConstraintViolation("embed: target does not extend the tower");
    std::vector<Rat> v = x.coeffs();
    v.resize(bigger->dim(), Rat(0));
    return FieldElem(bigger, std::move(v));
}

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
    auto [x, y] = aligned(a, b);
    std::vector<Rat> v = x.coeffs();
    for (size_t i = 0; i < v.size(); ++i) v[i] += y.coeffs()[i];
    return FieldElem(x.tower(), std::move(v));
}

FieldElem operator-(const FieldElem& a, const FieldElem& b) {
    auto [x, y] = aligned(a, b);
    std::vector<Rat> v = x.coeffs();
    for (size_t i = 0; i < v.size(); ++i) v[i] -= y.coeffs()[i];
    return FieldElem(x.tower(), std::move(v));
}

FieldElem operator*(const Rat& a, const FieldElem& b) {
    std::vector<Rat> v = b.coeffs();
    for (auto& x : v) x *= a;
    return FieldElem(b.tower(), std::move(v));
}

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
    auto [x, y] = aligned(a, b);
    const TowerPtr& t = x.tower();
    // Multiply within the smallest prefix carrying both operands.
    int lv = std::max(x.level(), y.level());
    int m = t->prefix_dim(lv);
    std::vector<Rat> xa(x.coeffs().begin(), x.coeffs().begin() + m);
    std::vector<Rat> yb(y.coeffs().begin(), y.coeffs().begin() + m);
    std::vector<Rat> prod = t->mul(lv, xa, yb);
    prod.resize(t->dim(), Rat(0));
    return FieldElem(t, std::move(prod));
}

bool operator==(const FieldElem& a, const FieldElem& b) {
    return (a - b).is_zero();
}

FieldElem FieldElem::inv() const {
    if (is_zero()) throw ZeroInput("inv: zero element");
    const int lv = level();
    const int m = tower_->prefix_dim(lv);
    std::vector<Rat> xa(c_.begin(), c_.begin() + m);

    // Multiplication-by-x matrix over the prefix, columns = x * basis_j.
    std::vector<std::vector<Rat>> col(m);
    std::vector<Rat> basis(m, Rat(0));
    for (int j = 0; j < m; ++j) {
        basis[j] = 1;
        col[j] = tower_->mul(lv, xa, basis);
        basis[j] = 0;
    }

    // Solve M v = e0 by Gaussian elimination on the augmented system.
    std::vector<std::vector<Rat>> aug(m, std::vector<Rat>(m + 1, Rat(0)));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) aug[i][j] = col[j][i];
    aug[0][m] = 1;
    for (int c = 0, r = 0; c < m && r < m; ++c) {
        int piv = -1;
        for (int i = r; i < m; ++i)
            if (aug[i][c] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) throw ZeroDivisor("inv: nonzero element not invertible");
        std::swap(aug[r], aug[piv]);
        Rat p = aug[r][c];
        for (int j = c; j <= m; ++j) aug[r][j] /= p;
        for (int i = 0; i < m; ++i) {
            if (i == r || aug[i][c] == 0) continue;
            Rat f = aug[i][c];
            for (int j = c; j <= m; ++j) aug[i][j] -= f * aug[r][j];
        }
        ++r;
    }
    std::vector<Rat> v(tower_->dim(), Rat(0));
    for (int i = 0; i < m; ++i) v[i] = aug[i][m];
    return FieldElem(tower_, std::move(v));
}

std::string FieldElem::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    const int D = tower_->dim();
    for (int idx = 0; idx < D; ++idx) {
        if (c_[idx] == 0) continue;
        Rat coef = c_[idx];
        std::string mono;
        int rem = idx;
        for (int lv = 0; lv < tower_->levels(); ++lv) {
            int d = tower_->step(lv).degree;
            int e = rem % d;
            rem /= d;
            if (e == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += tower_->step(lv).label;
            if (e > 1) mono += "^" + std::to_string(e);
        }
        if (!first) os << (coef < 0 ? " - " : " + ");
        if (!first && coef < 0) coef = -coef;
        first = false;
        if (mono.empty())
            os << coef.get_str();
        else if (coef == 1)
            os << mono;
        else if (coef == -1)
            os << "-" << mono;
        else
            os << coef.get_str() << "*" << mono;
    }
    return os.str();
}

std::pair<TowerPtr, FieldElem> sqrt_adjoin(const TowerPtr& t,
                                           const FieldElem& s) {
    FieldElem se = embed(s, t);
    if (se.is_zero()) return {t, se};
    if (se.is_rational()) {
        // A root of a rational s already lies in the tower exactly when
        // s divided by some product of the rational quadratic step
        // values is a rational square; scan those products.
        std::vector<std::pair<Rat, int>> quad_steps;  // (u, level)
        for (int lv = 0; lv < t->levels(); ++lv) {
            const auto& mp = t->step(lv).minpoly;
            if (mp.size() != 2) continue;
            bool c1_zero = std::all_of(mp[1].begin(), mp[1].end(),
                                       [](const Rat& r) { return r == 0; });
            bool c0_rational = std::all_of(
                mp[0].begin() + 1, mp[0].end(),
                [](const Rat& r) { return r == 0; });
            if (c1_zero && c0_rational)
                quad_steps.emplace_back(-mp[0][0], lv + 1);
        }
        auto rational_sqrt = [](const Rat& q, Rat& out) {
            if (q <= 0) return false;
            if (!mpz_perfect_square_p(q.get_num().get_mpz_t()) ||
                !mpz_perfect_square_p(q.get_den().get_mpz_t()))
                return false;
            mpz_sqrt(out.get_num().get_mpz_t(), q.get_num().get_mpz_t());
            mpz_sqrt(out.get_den().get_mpz_t(), q.get_den().get_mpz_t());
            out.canonicalize();
            return true;
        };
        const Rat s_rat = se.rat();
        const size_t k = quad_steps.size();
        for (size_t mask = 0; mask < (size_t{1} << k); ++mask) {
            Rat prod(1);
            for (size_t i = 0; i < k; ++i)
                if (mask & (size_t{1} << i)) prod *= quad_steps[i].first;
            Rat r;
            if (!rational_sqrt(s_rat / prod, r)) continue;
            FieldElem root(t, r);
            for (size_t i = 0; i < k; ++i)
                if (mask & (size_t{1} << i))
                    root = root * FieldElem::generator(t, quad_steps[i].second);
            return {t, root};
        }
    }
    std::string label = "sqrt(" + se.str() + ")";
    TowerPtr next = adjoin_root(t, label, {-se, FieldElem(t, Rat(0))});
    return {next, FieldElem::generator(next, next->levels())};
}

}  // namespace skl
