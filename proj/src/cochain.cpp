#include "nka/cochain.hpp"

#include "nka/errors.hpp"
#include "nka/valuation.hpp"

namespace nka {

namespace {

std::size_t power_size(int base, int exp) {
    std::size_t s = 1;
    for (int i = 0; i < exp; ++i) {
        if (s > (1u << 28) / static_cast<std::size_t>(base))
            throw budget_error("cochain: tuple space too large");
        s *= static_cast<std::size_t>(base);
    }
    return s;
}

Rational reduce_value(const Rational& v, long field_char) {
    if (field_char == 0) return v;
    // Values over F_p are integers mod p; rational inputs with denominator
    // prime to p reduce via modular inversion.
    Integer d = den(v) % field_char;
    if (d == 0) throw precondition_error("cochain: denominator not invertible mod p");
    Integer n = num(v) % field_char;
    if (n < 0) n += field_char;
    // invert d mod p by Fermat (p is prime and small)
    Integer inv = 1;
    for (long e = 0; e < field_char - 2; ++e) inv = (inv * d) % field_char;
    return Rational((n * inv) % field_char);
}

}  // namespace

Cochain::Cochain(GroupPtr group, int degree, long field_char)
    : group_(std::move(group)), degree_(degree), field_char_(field_char) {
    if (!group_) throw precondition_error("cochain: null group");
    if (degree < 0) throw precondition_error("cochain: negative degree");
    if (field_char != 0 && !is_prime(Integer(field_char)))
        throw precondition_error("cochain: characteristic must be 0 or prime");
    values_.assign(power_size(group_->order(), degree), Rational(0));
}

void Cochain::set(std::size_t flat, const Rational& v) {
    values_.at(flat) = reduce_value(v, field_char_);
}

std::size_t Cochain::flatten(std::span<const int> tuple) const {
    if (static_cast<int>(tuple.size()) != degree_)
        throw precondition_error("cochain: tuple length does not match degree");
    std::size_t flat = 0;
    for (int g : tuple) {
        if (g < 0 || g >= group_->order()) throw precondition_error("cochain: element out of range");
        flat = flat * static_cast<std::size_t>(group_->order()) + static_cast<std::size_t>(g);
    }
    return flat;
}

std::vector<int> Cochain::unflatten(std::size_t flat) const {
    std::vector<int> tuple(degree_);
    for (int i = degree_ - 1; i >= 0; --i) {
        tuple[i] = static_cast<int>(flat % group_->order());
        flat /= group_->order();
    }
    return tuple;
}

bool Cochain::operator==(const Cochain& other) const {
    return group_.get() == other.group_.get() && degree_ == other.degree_ &&
           field_char_ == other.field_char_ && values_ == other.values_;
}

Cochain coboundary(const Cochain& f) {
    const auto& g = *f.group();
    const int n = f.degree();
    Cochain out(f.group(), n + 1, f.field_char());
    std::vector<int> tuple(n + 1);
    std::vector<int> face(n);
    for (std::size_t flat = 0; flat < out.size(); ++flat) {
        tuple = out.unflatten(flat);
        Rational acc(0);
        // leading face: drop g_1
        for (int i = 1; i <= n; ++i) face[i - 1] = tuple[i];
        acc += f.at(face);
        // inner faces: merge g_i g_{i+1}
        int sign = -1;
        for (int i = 0; i < n; ++i) {
            int k = 0;
            for (int j = 0; j <= n; ++j) {
                if (j == i) {
                    face[k++] = g.mul(tuple[i], tuple[i + 1]);
                    ++j;  // skip the merged slot
                } else {
                    face[k++] = tuple[j];
                }
            }
            acc += sign * f.at(face);
            sign = -sign;
        }
        // trailing face: drop g_{n+1}
        for (int i = 0; i < n; ++i) face[i] = tuple[i];
        acc += sign * f.at(face);
        out.set(flat, acc);
    }
    return out;
}

Rational sup_norm(const Cochain& f, long p) {
    if (f.field_char() != 0)
        throw precondition_error("sup_norm: defined for characteristic-zero cochains");
    Rational best(0);
    for (std::size_t i = 0; i < f.size(); ++i) {
        Rational v = padic_norm(f[i], Integer(p));
        if (v > best) best = v;
    }
    return best;
}

HomogeneousCochain::HomogeneousCochain(GroupPtr group, int degree, long field_char)
    : group_(std::move(group)), degree_(degree), field_char_(field_char) {
    if (!group_) throw precondition_error("cochain: null group");
    if (degree < 0) throw precondition_error("cochain: negative degree");
    if (field_char != 0 && !is_prime(Integer(field_char)))
        throw precondition_error("cochain: characteristic must be 0 or prime");
    values_.assign(power_size(group_->order(), degree + 1), Rational(0));
}

void HomogeneousCochain::set(std::size_t flat, const Rational& v) {
    values_.at(flat) = reduce_value(v, field_char_);
}

std::size_t HomogeneousCochain::flatten(std::span<const int> tuple) const {
    if (static_cast<int>(tuple.size()) != degree_ + 1)
        throw precondition_error("cochain: tuple length does not match degree");
    std::size_t flat = 0;
    for (int g : tuple) {
        if (g < 0 || g >= group_->order()) throw precondition_error("cochain: element out of range");
        flat = flat * static_cast<std::size_t>(group_->order()) + static_cast<std::size_t>(g);
    }
    return flat;
}

std::vector<int> HomogeneousCochain::unflatten(std::size_t flat) const {
    std::vector<int> tuple(degree_ + 1);
    for (int i = degree_; i >= 0; --i) {
        tuple[i] = static_cast<int>(flat % group_->order());
        flat /= group_->order();
    }
    return tuple;
}

bool HomogeneousCochain::is_invariant() const {
    const auto& grp = *group_;
    std::vector<int> shifted(degree_ + 1);
    for (std::size_t flat = 0; flat < values_.size(); ++flat) {
        auto tuple = unflatten(flat);
        for (int g = 0; g < grp.order(); ++g) {
            for (int i = 0; i <= degree_; ++i) shifted[i] = grp.mul(g, tuple[i]);
            if (values_[flatten(shifted)] != values_[flat]) return false;
        }
    }
    return true;
}

bool HomogeneousCochain::operator==(const HomogeneousCochain& other) const {
    return group_.get() == other.group_.get() && degree_ == other.degree_ &&
           field_char_ == other.field_char_ && values_ == other.values_;
}

HomogeneousCochain homogeneous_coboundary(const HomogeneousCochain& h) {
    const int n = h.degree();
    HomogeneousCochain out(h.group(), n + 1, h.field_char());
    std::vector<int> face(n + 1);
    for (std::size_t flat = 0; flat < out.size(); ++flat) {
        auto tuple = out.unflatten(flat);
        Rational acc(0);
        int sign = 1;
        for (int i = 0; i <= n + 1; ++i) {
            int k = 0;
            for (int j = 0; j <= n + 1; ++j)
                if (j != i) face[k++] = tuple[j];
            acc += sign * h.at(face);
            sign = -sign;
        }
        out.set(flat, acc);
    }
    return out;
}

Rational sup_norm(const HomogeneousCochain& h, long p) {
    if (h.field_char() != 0)
        throw precondition_error("sup_norm: defined for characteristic-zero cochains");
    Rational best(0);
    for (std::size_t i = 0; i < h.size(); ++i) {
        Rational v = padic_norm(h[i], Integer(p));
        if (v > best) best = v;
    }
    return best;
}

Cochain to_inhomogeneous(const HomogeneousCochain& h) {
    if (!h.is_invariant())
        throw precondition_error("to_inhomogeneous: input is not invariant");
    const auto& grp = *h.group();
    Cochain out(h.group(), h.degree(), h.field_char());
    const int n = h.degree();
    std::vector<int> hom(n + 1);
    for (std::size_t flat = 0; flat < out.size(); ++flat) {
        auto tuple = out.unflatten(flat);
        hom[0] = grp.identity();
        for (int i = 1; i <= n; ++i) hom[i] = grp.mul(hom[i - 1], tuple[i - 1]);
        out.set(flat, h.at(hom));
    }
    return out;
}

HomogeneousCochain to_homogeneous(const Cochain& f) {
    const auto& grp = *f.group();
    const int n = f.degree();
    HomogeneousCochain out(f.group(), n, f.field_char());
    std::vector<int> quotients(n);
    for (std::size_t flat = 0; flat < out.size(); ++flat) {
        auto tuple = out.unflatten(flat);
        for (int i = 0; i < n; ++i) quotients[i] = grp.mul(grp.inv(tuple[i]), tuple[i + 1]);
        out.set(flat, f.at(quotients));
    }
    return out;
}

HomogeneousCochain contracting_homotopy(const HomogeneousCochain& h, long p) {
    if (h.field_char() != 0)
        throw precondition_error("contracting_homotopy: requires characteristic zero");
    if (!is_prime(Integer(p))) throw precondition_error("contracting_homotopy: p must be prime");
    if (h.degree() < 1) throw precondition_error("contracting_homotopy: degree must be >= 1");
    if (!h.is_invariant())
        throw precondition_error("contracting_homotopy: input is not invariant");
    const auto& grp = *h.group();
    const int n = h.degree();
    HomogeneousCochain out(h.group(), n - 1, h.field_char());
    const Rational inv_order(1, grp.order());
    std::vector<int> ext(n + 1);
    for (std::size_t flat = 0; flat < out.size(); ++flat) {
        auto tuple = out.unflatten(flat);
        for (int i = 0; i < n; ++i) ext[i + 1] = tuple[i];
        Rational acc(0);
        for (int g = 0; g < grp.order(); ++g) {
            ext[0] = g;
            acc += h.at(ext);
        }
        out.set(flat, acc * inv_order);
    }
    return out;
}

}  // namespace nka
