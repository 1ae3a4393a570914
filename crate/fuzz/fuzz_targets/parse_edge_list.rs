#![no_main]

use libfuzzer_sys::fuzz_target;

use domlab::edgelist::{parse_edge_list, to_edge_list};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(g) = parse_edge_list(text) {
        g.validate()
            .expect("parsed graph satisfies the representation invariants");
        let emitted = to_edge_list(&g);
        assert_eq!(parse_edge_list(&emitted).expect("emitted text parses"), g);
    }
});
