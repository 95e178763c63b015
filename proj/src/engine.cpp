#include "lcadual/engine.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace lcadual {

namespace {

void require_matching(const LcaMatrix& theta, const FiniteConfiguration& c) {
    if (theta.field() != c.field()) {
        throw UsageError("field mismatch: " + theta.field().name() + " vs " +
                         c.field().name());
    }
    if (!theta.group()->same_group(*c.group())) {
        throw UsageError("group mismatch: " + theta.group()->describe() + " vs " +
                         c.group()->describe());
    }
    if (theta.dimension() != c.dimension()) {
        throw UsageError("dimension mismatch: automaton has n=" +
                         std::to_string(theta.dimension()) + ", configuration has n=" +
                         std::to_string(c.dimension()));
    }
}

}  // namespace

FiniteConfiguration evolve(const LcaMatrix& theta, const FiniteConfiguration& c) {
    require_matching(theta, c);
    FiniteConfiguration out(c.field(), c.group(), c.dimension());
    for (const auto& [s, ms] : theta.coefficient_matrices()) {
        for (const auto& [h, v] : c.sites()) {
            out.add_value(s * h, ms.apply(v));
        }
    }
    return out;
}

Scalar pair(const FiniteConfiguration& omega, const FiniteConfiguration& c) {
    omega.require_compatible(c);
    Scalar total = Scalar::zero(omega.field());
    for (const auto& [g, w] : omega.sites()) {
        const auto it = c.sites().find(g);
        if (it == c.sites().end()) continue;
        for (std::size_t i = 0; i < w.size(); ++i) total += w[i] * it->second[i];
    }
    return total;
}

Scalar pair(const FiniteConfiguration& omega, const WindowPattern& p) {
    if (omega.field() != p.field() || !omega.group()->same_group(*p.group()) ||
        omega.dimension() != p.dimension()) {
        throw UsageError("pairing descriptor mismatch");
    }
    Scalar total = Scalar::zero(omega.field());
    for (const auto& [g, w] : omega.sites()) {
        const auto pos = p.find(g);
        if (!pos) {
            throw UsageError("pairing needs the pattern's value at " +
                             omega.group()->to_string(g) + ", which is outside the window");
        }
        const auto& v = p.value(*pos);
        for (std::size_t i = 0; i < w.size(); ++i) total += w[i] * v[i];
    }
    return total;
}

FiniteConfiguration translate(const GroupElement& g, const FiniteConfiguration& c) {
    c.group()->require_member(g);
    FiniteConfiguration out(c.field(), c.group(), c.dimension());
    for (const auto& [h, v] : c.sites()) out.add_value(g * h, v);
    return out;
}

WindowPattern restrict_to(const FiniteConfiguration& c, std::vector<GroupElement> window) {
    WindowPattern p(c.field(), c.group(), std::move(window), c.dimension());
    for (std::size_t i = 0; i < p.window().size(); ++i) {
        const auto it = c.sites().find(p.window()[i]);
        if (it != c.sites().end()) p.set_value(i, it->second);
    }
    return p;
}

std::vector<GroupElement> neighborhood(const LcaMatrix& theta) {
    std::set<GroupElement, ElementLess> out;
    out.insert(theta.group()->identity());
    for (const auto& s : theta.support()) {
        out.insert(s);
        out.insert(inverse(s));
    }
    return {out.begin(), out.end()};
}

std::vector<GroupElement> grow_window(const LcaMatrix& theta,
                                      const std::vector<GroupElement>& window) {
    const auto nbhd = neighborhood(theta);
    std::set<GroupElement, ElementLess> out;
    for (const auto& g : window) {
        for (const auto& s : nbhd) out.insert(s * g);
        out.insert(g);
    }
    return {out.begin(), out.end()};
}

DenseMatrix windowed_matrix(const LcaMatrix& theta, const std::vector<GroupElement>& domain,
                            const std::vector<GroupElement>& codomain) {
    const std::size_t n = theta.dimension();
    const auto& coeffs = theta.coefficient_matrices();
    DenseMatrix m(theta.field(), codomain.size() * n, domain.size() * n);
    for (std::size_t r = 0; r < codomain.size(); ++r) {
        for (std::size_t c = 0; c < domain.size(); ++c) {
            const auto it = coeffs.find(codomain[r] * inverse(domain[c]));
            if (it == coeffs.end()) continue;
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    m.at(r * n + i, c * n + j) = it->second.at(i, j);
                }
            }
        }
    }
    return m;
}

WindowOperator window_operator(const LcaMatrix& theta, std::vector<GroupElement> window) {
    auto domain = grow_window(theta, window);
    auto matrix = windowed_matrix(theta, domain, window);
    return WindowOperator{std::move(domain), std::move(window), std::move(matrix)};
}

}  // namespace lcadual
