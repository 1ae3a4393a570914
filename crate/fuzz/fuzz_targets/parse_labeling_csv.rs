#![no_main]

use libfuzzer_sys::fuzz_target;

use domlab::labelings::{labeling_to_csv, parse_labeling_csv};

fuzz_target!(|data: &[u8]| {
    // First byte picks the declared vertex count, the rest is the CSV.
    let Some((&first, rest)) = data.split_first() else {
        return;
    };
    let n = first as usize % 64 + 1;
    let Ok(text) = std::str::from_utf8(rest) else {
        return;
    };
    if let Ok(f) = parse_labeling_csv(text, n) {
        assert_eq!(f.len(), n);
        assert!(f.values().iter().all(|&x| x <= 3));
        let csv = labeling_to_csv(&f);
        assert_eq!(parse_labeling_csv(&csv, n).expect("emitted CSV parses"), f);
    }
});
