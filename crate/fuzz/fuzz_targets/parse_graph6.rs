#![no_main]

use libfuzzer_sys::fuzz_target;

use domlab::graph6::{parse_graph6, to_graph6};

fuzz_target!(|data: &[u8]| {
    let Ok(line) = std::str::from_utf8(data) else {
        return;
    };
    // The parser must never panic; malformed lines return Err.
    if let Ok(g) = parse_graph6(line) {
        g.validate()
            .expect("parsed graph satisfies the representation invariants");
        // The parser is strict (no trailing garbage, zero padding), so an
        // accepted line is exactly the canonical encoding of its graph.
        let emitted = to_graph6(&g).expect("accepted orders are encodable");
        assert_eq!(emitted, line);
        assert_eq!(parse_graph6(&emitted).expect("emitted line parses"), g);
    }
});
