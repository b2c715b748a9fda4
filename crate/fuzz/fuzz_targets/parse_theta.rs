#![no_main]

use kakeya_core::parse::parse_theta;
use kakeya_core::Angle;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(t) = parse_theta(text) {
        assert!(t.is_finite());
        let a = Angle::new(t);
        assert!((0.0..std::f64::consts::TAU).contains(&a.canonical()));
        let _ = a.class();
    }
});
