#![no_main]

use kakeya_core::parse::parse_coeffs;
use kakeya_core::poly_bounds::{classify_monotonicity, ek_annulus};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(c) = parse_coeffs(text) else {
        return;
    };
    assert!(c.as_slice().iter().all(|a| a.is_finite() && *a > 0.0));
    if let Ok(a) = ek_annulus(&c) {
        assert!(a.inner <= a.outer);
    }
    let _ = classify_monotonicity(&c);
    if c.len() <= 16 {
        let _ = kakeya_core::roots::find_roots(&c);
    }
});
