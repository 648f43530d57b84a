#include "dunkl/dunkl_ops.hpp"

#include <stdexcept>

namespace dunkl {

DunklContext::DunklContext(RootSystemSpec spec) : spec_(std::move(spec)) {
    if (!spec_.exact)
        throw std::invalid_argument("Dunkl operators require exactly represented roots");
    auto rep = validate(spec_);
    if (!rep.ok())
        throw std::invalid_argument("invalid root system: " + rep.violations.front());
    for (auto i : spec_.positive) reflections_.push_back(reflection_matrix(spec_.roots[i]));
}

MPoly DunklContext::reflect_poly(std::size_t k, const MPoly& p) const {
    MPoly out(spec_.dim);
    for (const auto& [m, c] : p.terms()) {
        MPoly img(spec_.dim);
        bool hit = false;
        {
            std::lock_guard<std::mutex> lock(memo_mutex_);
            auto it = memo_.find({k, m});
            if (it != memo_.end()) {
                img = it->second;
                hit = true;
            }
        }
        if (!hit) {
            img = MPoly::monomial(m, ExactReal(1)).substitute_linear(reflections_[k]);
            std::lock_guard<std::mutex> lock(memo_mutex_);
            memo_.emplace(std::make_pair(k, m), img);
        }
        out += img.scaled(c);
    }
    return out;
}

MPoly dunkl_apply(const DunklContext& ctx, int axis, const MPoly& p) {
    if (p.dim() != ctx.dim()) throw std::invalid_argument("polynomial dimension mismatch");
    if (axis < 1 || axis > ctx.dim()) throw std::out_of_range("axis out of range");
    MPoly result = p.partial(axis);
    const auto& spec = ctx.spec();
    for (std::size_t k = 0; k < spec.positive.size(); ++k) {
        const Rational& kap = spec.kappa[spec.positive[k]];
        if (kap == 0) continue;
        const EVec& v = spec.roots[spec.positive[k]];
        const ExactReal& vi = v[axis - 1];
        if (vi.is_zero()) continue;
        MPoly diff = p - ctx.reflect_poly(k, p);
        if (diff.is_zero()) continue;
        MPoly quot = divide_by_linear_form(diff, v);
        result += quot.scaled(ExactReal(kap) * vi);
    }
    return result;
}

MPoly dunkl_laplacian(const DunklContext& ctx, const MPoly& p) {
    MPoly out(ctx.dim());
    for (int i = 1; i <= ctx.dim(); ++i) out += dunkl_apply(ctx, i, dunkl_apply(ctx, i, p));
    return out;
}

}  // namespace dunkl
