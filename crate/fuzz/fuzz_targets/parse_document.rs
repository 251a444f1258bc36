#![no_main]
use libfuzzer_sys::fuzz_target;

use inttrig::document::{document_value, parse_document, to_canonical};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let Ok(doc) = parse_document(s) else { return };
    let again = parse_document(&to_canonical(&document_value(&doc))).expect("canonical output parses");
    assert_eq!(again, doc);
    let _ = doc.to_cone();
});
