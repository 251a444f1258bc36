#![no_main]
use libfuzzer_sys::fuzz_target;

use inttrig::document::parse_permutation;

fuzz_target!(|data: &[u8]| {
    let Some((&k, rest)) = data.split_first() else { return };
    let Ok(s) = std::str::from_utf8(rest) else { return };
    let k = (k % 16 > 0).then_some(usize::from(k % 16));
    if let Ok(p) = parse_permutation(s, k) {
        let mut seen = p.one_line();
        seen.sort_unstable();
        assert_eq!(seen, (1..=p.len()).collect::<Vec<_>>());
        assert_eq!(parse_permutation(&p.to_string(), Some(p.len())).unwrap(), p);
    }
});
