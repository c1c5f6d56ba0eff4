#pragma once

namespace sturmpart {

// Resource caps. Defaults keep every operation desk-scale; callers can relax
// or tighten them per run (CLI flags map onto these fields).
struct Limits {
    long long max_refine_power = 5000;   // highest n accepted by refine()
    long long max_cutpoints = 100000;    // partition size guard
    int max_cf_depth = 256;              // continued-fraction expansion cap
    int max_full_shift_len = 24;         // full-shift enumeration word length
    int max_render_levels = 200;         // ASCII tower rendering cap
    long long max_name_formula_span = 2000; // exhaustive level checks while r_{k+3} <= this
};

inline const Limits& default_limits() {
    static const Limits limits{};
    return limits;
}

} // namespace sturmpart
