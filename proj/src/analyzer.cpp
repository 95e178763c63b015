#include "lcadual/analyzer.hpp"

#include <algorithm>
#include <utility>

namespace lcadual {

namespace {

FiniteConfiguration configuration_from_flat(const LcaMatrix& theta,
                                            const std::vector<GroupElement>& window,
                                            const std::vector<Scalar>& flat) {
    return WindowPattern::unflatten(theta.field(), theta.group(), window, theta.dimension(),
                                    flat)
        .to_configuration();
}

bool ball_saturates(const LcaMatrix& theta, const std::vector<GroupElement>& ball) {
    return theta.group()->is_finite() && ball.size() == theta.group()->order();
}

/// Basis of the orthogonal complement of span(vectors) under the standard
/// dot product: the kernel of the matrix with the vectors as rows.
std::vector<std::vector<Scalar>> perp(const Field& field,
                                      const std::vector<std::vector<Scalar>>& vectors,
                                      std::size_t ambient) {
    return DenseMatrix::from_rows(field, vectors, ambient).kernel_basis();
}

std::vector<std::vector<Scalar>> column_space(const DenseMatrix& m) {
    std::vector<std::vector<Scalar>> cols;
    cols.reserve(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) {
        std::vector<Scalar> v;
        v.reserve(m.rows());
        for (std::size_t r = 0; r < m.rows(); ++r) v.push_back(m.at(r, c));
        cols.push_back(std::move(v));
    }
    return cols;
}

}  // namespace

std::string property_name(Property p) {
    switch (p) {
        case Property::PreInjective: return "pre-injective";
        case Property::Surjective: return "surjective";
        case Property::PostSurjective: return "post-surjective";
        case Property::Injective: return "injective";
    }
    return "?";
}

std::optional<Property> property_from_name(const std::string& name) {
    if (name == "pre-injective") return Property::PreInjective;
    if (name == "surjective") return Property::Surjective;
    if (name == "post-surjective") return Property::PostSurjective;
    if (name == "injective") return Property::Injective;
    return std::nullopt;
}

unsigned default_radius(const Group& group) {
    switch (group.kind()) {
        case Group::Kind::Free: return 3;
        case Group::Kind::FreeAbelian: return 5;
        default: return saturation_radius(group);
    }
}

unsigned saturation_radius(const Group& group) {
    if (!group.is_finite()) {
        throw UnsupportedError("saturation radius is defined for finite groups only");
    }
    for (unsigned r = 0;; ++r) {
        if (group.ball(r).size() == group.order()) return r;
    }
}

Verdict check_pre_injectivity(const LcaMatrix& theta, unsigned radius, std::size_t ball_cap) {
    const auto ball = theta.group()->ball(radius, ball_cap);
    const auto codomain = grow_window(theta, ball);
    const auto m = windowed_matrix(theta, ball, codomain);

    Verdict v;
    v.property = Property::PreInjective;
    v.radius = radius;
    v.window_rows = m.rows();
    v.window_cols = m.cols();

    const auto kernel = m.kernel_basis();
    if (!kernel.empty()) {
        v.status = VerdictStatus::Refuted;
        v.method = "windowed-kernel";
        v.witness = KernelElement{configuration_from_flat(theta, ball, kernel.front())};
        return v;
    }
    if (ball_saturates(theta, ball)) {
        v.status = VerdictStatus::Certified;
        v.method = "finite-exhaustive";
    } else {
        v.status = VerdictStatus::Inconclusive;
        v.method = "windowed-kernel";
    }
    return v;
}

Verdict check_surjectivity(const LcaMatrix& theta, unsigned radius, std::size_t ball_cap) {
    const auto ball = theta.group()->ball(radius, ball_cap);
    const auto op = window_operator(theta, ball);

    Verdict v;
    v.property = Property::Surjective;
    v.radius = radius;
    v.window_rows = op.matrix.rows();
    v.window_cols = op.matrix.cols();

    const auto left_kernel = op.matrix.transpose().kernel_basis();
    if (!left_kernel.empty()) {
        const auto& phi = left_kernel.front();
        std::size_t j = 0;
        while (phi[j].is_zero()) ++j;
        std::vector<Scalar> basis_row(phi.size(), Scalar::zero(theta.field()));
        basis_row[j] = Scalar::one(theta.field());
        v.status = VerdictStatus::Refuted;
        v.method = "windowed-rank";
        v.witness = GardenOfEden{WindowPattern::unflatten(theta.field(), theta.group(),
                                                          op.codomain, theta.dimension(),
                                                          basis_row)};
        return v;
    }
    if (ball_saturates(theta, ball)) {
        v.status = VerdictStatus::Certified;
        v.method = "finite-exhaustive";
    } else {
        v.status = VerdictStatus::Inconclusive;
        v.method = "windowed-rank";
    }
    return v;
}

Verdict check_post_surjectivity(const LcaMatrix& theta, unsigned radius, std::size_t ball_cap) {
    const auto ball = theta.group()->ball(radius, ball_cap);
    const auto codomain = grow_window(theta, ball);
    const auto m = windowed_matrix(theta, ball, codomain);
    const std::size_t n = theta.dimension();

    Verdict v;
    v.property = Property::PostSurjective;
    v.radius = radius;
    v.window_rows = m.rows();
    v.window_cols = m.cols();

    std::vector<FiniteConfiguration> preimages;
    for (std::size_t i = 0; i < n; ++i) {
        const auto target = FiniteConfiguration::delta_basis(theta.field(),
                                                             theta.group()->identity(), n, i);
        const auto flat = restrict_to(target, codomain).flatten();
        const auto x = m.solve(flat);
        if (!x) {
            if (ball_saturates(theta, ball)) {
                v.status = VerdictStatus::Refuted;
                v.method = "preimage-solve";
                v.witness = GardenOfEden{restrict_to(target, ball)};
            } else {
                v.status = VerdictStatus::Inconclusive;
                v.method = "preimage-solve";
            }
            return v;
        }
        preimages.push_back(configuration_from_flat(theta, ball, *x));
    }
    v.status = VerdictStatus::Certified;
    v.method = "preimage-solve";
    v.witness = PreimageTable{std::move(preimages)};
    return v;
}

Verdict check_injectivity(const LcaMatrix& theta, unsigned radius, std::size_t ball_cap) {
    Verdict v;
    v.property = Property::Injective;

    if (theta.group()->is_finite()) {
        const auto window = theta.group()->enumerate();
        const auto m = windowed_matrix(theta, window, window);
        v.radius = saturation_radius(*theta.group());
        v.window_rows = m.rows();
        v.window_cols = m.cols();
        const auto kernel = m.kernel_basis();
        if (!kernel.empty()) {
            v.status = VerdictStatus::Refuted;
            v.method = "finite-exhaustive";
            v.witness = KernelElement{configuration_from_flat(theta, window, kernel.front())};
        } else {
            v.status = VerdictStatus::Certified;
            v.method = "finite-exhaustive";
        }
        return v;
    }

    const auto dual = check_post_surjectivity(theta.adjoint(), radius, ball_cap);
    v.radius = radius;
    v.window_rows = dual.window_rows;
    v.window_cols = dual.window_cols;
    if (dual.status == VerdictStatus::Certified) {
        v.status = VerdictStatus::Certified;
        v.method = "duality-transfer";
    } else {
        v.status = VerdictStatus::Inconclusive;
        v.method = "duality-transfer";
    }
    return v;
}

FiniteDualityReport verify_duality_finite(const LcaMatrix& theta, std::size_t cap) {
    const auto& group = *theta.group();
    if (!group.is_finite()) {
        throw UnsupportedError("verify_duality_finite requires a finite group, got " +
                               group.describe());
    }
    const std::size_t total = theta.dimension() * group.order();
    if (total > cap) {
        throw ResourceLimitError("finite verification size n*|G| = " + std::to_string(total) +
                                 " exceeds the cap of " + std::to_string(cap));
    }

    const auto window = group.enumerate();
    const auto m = windowed_matrix(theta, window, window);
    const auto m_adj = windowed_matrix(theta.adjoint(), window, window);
    const auto& field = theta.field();

    FiniteDualityReport report;
    report.group_order = group.order();
    report.dimension = theta.dimension();
    report.transpose_identity = (m_adj == m.transpose());

    const auto ker = m.kernel_basis();
    const auto ker_adj = m_adj.kernel_basis();
    const auto im = canonical_span(field, column_space(m), total);
    const auto im_adj = canonical_span(field, column_space(m_adj), total);
    report.dim_ker = ker.size();
    report.dim_ker_adjoint = ker_adj.size();
    report.dim_im = im.size();
    report.dim_im_adjoint = im_adj.size();

    const bool ker_perp_is_im_adj =
        canonical_span(field, perp(field, ker, total), total) == im_adj;
    const bool im_perp_is_ker_adj =
        canonical_span(field, perp(field, im, total), total) ==
        canonical_span(field, ker_adj, total);
    report.eq1 = ker_perp_is_im_adj;
    report.eq2 = ker_perp_is_im_adj;
    report.eq3 = im_perp_is_ker_adj;
    report.eq4 = im_perp_is_ker_adj;
    return report;
}

bool replay_witness(const LcaMatrix& theta, const Witness& witness) {
    try {
        if (const auto* k = std::get_if<KernelElement>(&witness)) {
            return !k->element.is_zero() && evolve(theta, k->element).is_zero();
        }
        if (const auto* goe = std::get_if<GardenOfEden>(&witness)) {
            const auto op = window_operator(theta, goe->pattern.window());
            return op.matrix.left_annihilator(goe->pattern.flatten()).has_value();
        }
        if (const auto* table = std::get_if<PreimageTable>(&witness)) {
            const std::size_t n = theta.dimension();
            if (table->preimages.size() != n) return false;
            for (std::size_t i = 0; i < n; ++i) {
                const auto target = FiniteConfiguration::delta_basis(
                    theta.field(), theta.group()->identity(), n, i);
                if (evolve(theta, table->preimages[i]) != target) return false;
            }
            return true;
        }
        const auto& mep = std::get<MepPair>(witness);
        return mep.x != mep.y && evolve(theta, mep.x) == evolve(theta, mep.y);
    } catch (const std::exception&) {
        return false;
    }
}

MepPair mep_pair(const LcaMatrix& theta, const KernelElement& k) {
    if (k.element.is_zero()) throw UsageError("kernel witness is zero");
    if (!evolve(theta, k.element).is_zero()) {
        throw UsageError("kernel witness does not evolve to zero");
    }
    return MepPair{k.element,
                   FiniteConfiguration(theta.field(), theta.group(), theta.dimension())};
}

}  // namespace lcadual
