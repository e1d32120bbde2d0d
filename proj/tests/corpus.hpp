#pragma once

// Shared corpus generation for solver tests: seeded random instances over a
// hereditary class, with integer revenues.

#include "hcolor/model.hpp"
#include "hcolor/recognize.hpp"

namespace hcolor::testing {

struct CorpusOptions {
    ClassSpec host_class;
    int n_min = 1;
    int n_max = 9;
    int k_min = 1;
    int k_max = 3;
    int rev_min = -2;
    int rev_max = 3;
    double density = 0.4;
};

inline Instance random_instance(Rng& rng, const CorpusOptions& opt) {
    int n = rng.next_int(opt.n_min, opt.n_max);
    int k = rng.next_int(opt.k_min, opt.k_max);
    Instance inst{sample_in_class(opt.host_class, n, opt.density, rng),
                  make_pattern(random_graph(k, 0.5, rng)), RevenueTable(n, k)};
    for (auto& row : inst.rev.value)
        for (auto& x : row) x = rng.next_int(opt.rev_min, opt.rev_max);
    return inst;
}

inline CorpusOptions connected_p5_free() {
    CorpusOptions opt;
    opt.host_class.forbidden.push_back(make_path(5));
    opt.host_class.connected = true;
    return opt;
}

}  // namespace hcolor::testing
