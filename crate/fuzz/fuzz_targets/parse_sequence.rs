#![no_main]
use libfuzzer_sys::fuzz_target;

use inttrig::document::parse_sequence;
use inttrig::LLSSeq;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let Ok(v) = parse_sequence(s) else { return };
    let shown: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    assert_eq!(parse_sequence(&shown.join(",")).unwrap(), v);
    if let Ok(seq) = LLSSeq::new(v) {
        let _ = seq.value();
        assert_eq!(seq.reversed().reversed(), seq);
    }
});
