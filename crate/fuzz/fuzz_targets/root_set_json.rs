#![no_main]

use kakeya_core::roots::check_annulus_membership;
use kakeya_core::{Annulus, RootSet};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(roots) = serde_json::from_slice::<RootSet>(data) else {
        return;
    };
    let annulus = Annulus {
        inner: 0.5,
        outer: 2.0,
        degenerate: false,
    };
    let _ = check_annulus_membership(&roots, &annulus, 1e-9);
});
