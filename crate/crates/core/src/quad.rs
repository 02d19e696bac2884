//! Gauss–Legendre panels for smooth integrands.

/// 8-point Gauss–Legendre nodes and weights on [−1, 1].
const GL8_X: [f64; 8] = [
    -0.960_289_856_497_536_2,
    -0.796_666_477_413_626_7,
    -0.525_532_409_916_329_0,
    -0.183_434_642_495_649_8,
    0.183_434_642_495_649_8,
    0.525_532_409_916_329_0,
    0.796_666_477_413_626_7,
    0.960_289_856_497_536_2,
];
const GL8_W: [f64; 8] = [
    0.101_228_536_290_376_26,
    0.222_381_034_453_374_47,
    0.313_706_645_877_887_3,
    0.362_683_783_378_362_0,
    0.362_683_783_378_362_0,
    0.313_706_645_877_887_3,
    0.222_381_034_453_374_47,
    0.101_228_536_290_376_26,
];

/// ∫_a^b f(s) ds with one 8-point panel.
pub fn gl8<F: Fn(f64) -> f64>(f: F, a: f64, b: f64) -> f64 {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let mut acc = 0.0;
    for k in 0..8 {
        acc += GL8_W[k] * f(c + h * GL8_X[k]);
    }
    acc * h
}

/// ∫_a^b f(s) ds split into panels no wider than `max_width`.
pub fn gl8_panels<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, max_width: f64) -> f64 {
    if b <= a {
        return 0.0;
    }
    let count = (((b - a) / max_width).ceil() as usize).max(1);
    let step = (b - a) / count as f64;
    let mut acc = 0.0;
    for i in 0..count {
        let lo = a + step * i as f64;
        acc += gl8(&f, lo, lo + step);
    }
    acc
}

/// ∫_a^b f(s) ds where the integrand may have a power singularity at
/// `a = 0`: the first slice is refined geometrically towards 0.
pub fn gl8_graded<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, max_width: f64) -> f64 {
    if b <= a {
        return 0.0;
    }
    if a > 0.0 {
        return gl8_panels(f, a, b, max_width);
    }
    // Geometric refinement of [0, first] over ~40 dyadic slices.
    let first = (b - a).min(max_width);
    let mut acc = gl8_panels(&f, first, b, max_width);
    let mut hi = first;
    for _ in 0..40 {
        let lo = hi / 2.0;
        acc += gl8(&f, lo, hi);
        hi = lo;
        if hi < 1e-14 * first {
            break;
        }
    }
    acc += gl8(&f, 0.0, hi);
    acc
}
