#![no_main]

use libfuzzer_sys::fuzz_target;
use stratzero::exactnum::rational_from_text;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(x) = rational_from_text(text) {
        // both renderings must parse back to the same value
        assert_eq!(rational_from_text(&x.to_string()).unwrap(), x);
        assert_eq!(rational_from_text(&x.to_fraction_string()).unwrap(), x);
    }
});
