#include "omalous/exactmath/monomial.hpp"

#include <algorithm>
#include <numeric>

#include "omalous/error.hpp"

namespace omalous::exact {

std::size_t Variables::index_of(const std::string& name) const {
    const auto it = std::find(names_->begin(), names_->end(), name);
    if (it == names_->end()) throw DomainError("UnknownVariable", "unknown variable '" + name + "'");
    return static_cast<std::size_t>(it - names_->begin());
}

bool Variables::contains(const std::string& name) const {
    return std::find(names_->begin(), names_->end(), name) != names_->end();
}

Monomial::Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
    for (int e : exps_) {
        if (e < 0) throw DomainError("NegativeExponent", "monomial exponents must be non-negative");
    }
}

int Monomial::degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

int Monomial::weighted_degree(const std::vector<int>& weights) const {
    int total = 0;
    for (std::size_t i = 0; i < exps_.size(); ++i) total += exps_[i] * weights.at(i);
    return total;
}

bool Monomial::is_one() const {
    return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] > other.exps_[i]) return false;
    }
    return true;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
    Monomial out(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] -= divisor.exps_[i];
    return out;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial out(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] += other.exps_[i];
    return out;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    Monomial out(a);
    for (std::size_t i = 0; i < a.exps_.size(); ++i) out.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    return out;
}

bool Monomial::coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.exps_.size(); ++i) {
        if (a.exps_[i] > 0 && b.exps_[i] > 0) return false;
    }
    return true;
}

Monomial Monomial::unit(std::size_t nvars, std::size_t var, int power) {
    Monomial m(nvars);
    m.exps_.at(var) = power;
    return m;
}

MonomialOrder MonomialOrder::block(std::vector<std::size_t> front) {
    std::sort(front.begin(), front.end());
    front.erase(std::unique(front.begin(), front.end()), front.end());
    return MonomialOrder(Kind::Block, std::move(front));
}

namespace {

int sign_of(int v) { return (v > 0) - (v < 0); }

int compare_lex(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return sign_of(a[i] - b[i]);
    }
    return 0;
}

// degrevlex restricted to the variables selected by `pick`.
template <class Pick>
int compare_grevlex(const Monomial& a, const Monomial& b, Pick pick) {
    int da = 0;
    int db = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (pick(i)) {
            da += a[i];
            db += b[i];
        }
    }
    if (da != db) return sign_of(da - db);
    for (std::size_t i = a.size(); i-- > 0;) {
        if (pick(i) && a[i] != b[i]) return sign_of(b[i] - a[i]);
    }
    return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
        case Kind::Lex:
            return compare_lex(a, b);
        case Kind::DegRevLex:
            return compare_grevlex(a, b, [](std::size_t) { return true; });
        case Kind::Block: {
            auto in_front = [this](std::size_t i) {
                return std::binary_search(front_.begin(), front_.end(), i);
            };
            const int c = compare_grevlex(a, b, in_front);
            if (c != 0) return c;
            return compare_grevlex(a, b, [&](std::size_t i) { return !in_front(i); });
        }
    }
    return 0;
}

bool MonomialOrder::less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

std::string MonomialOrder::name() const {
    switch (kind_) {
        case Kind::Lex:
            return "lex";
        case Kind::DegRevLex:
            return "degrevlex";
        case Kind::Block:
            return "block";
    }
    return "unknown";
}

}  // namespace omalous::exact
