#![no_main]

use kakeya_core::figure::{render_chain_svg, FigureStyle};
use kakeya_core::{kakeya, tomic, ChainConstruction, Orientation};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(chain) = ChainConstruction::from_json(text) else {
        return;
    };
    let _ = match chain.orientation {
        Orientation::External => kakeya::verify_chain(&chain, 1e-9),
        Orientation::Internal => tomic::verify_chain_internal(&chain, 1e-9),
    };
    let _ = render_chain_svg(&chain, &FigureStyle::default());
    let again = ChainConstruction::from_json(&chain.to_json()).expect("re-encoded chain decodes");
    assert_eq!(again.sums.len(), chain.sums.len());
});
