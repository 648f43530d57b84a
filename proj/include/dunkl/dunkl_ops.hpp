// Exact action of the Dunkl operators D_i and the Dunkl Laplacian on
// polynomials: D_i f = d_i f + sum_{v in R_+} kappa(v) (f - f o sigma_v) / <x,v> * v_i.
#pragma once

#include <map>
#include <memory>
#include <mutex>

#include "dunkl/mpoly.hpp"
#include "dunkl/root_system.hpp"

namespace dunkl {

class DunklContext {
public:
    // Requires an exact, valid root system.
    explicit DunklContext(RootSystemSpec spec);

    const RootSystemSpec& spec() const { return spec_; }
    int dim() const { return spec_.dim; }

    // Image of p under sigma_v for positive root slot k (memoized per monomial).
    MPoly reflect_poly(std::size_t k, const MPoly& p) const;

private:
    RootSystemSpec spec_;
    std::vector<EMat> reflections_;  // one per positive root
    mutable std::mutex memo_mutex_;
    mutable std::map<std::pair<std::size_t, Mono>, MPoly> memo_;
};

MPoly dunkl_apply(const DunklContext& ctx, int axis, const MPoly& p);
MPoly dunkl_laplacian(const DunklContext& ctx, const MPoly& p);

}  // namespace dunkl
