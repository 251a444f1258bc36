#![no_main]
use libfuzzer_sys::fuzz_target;

use inttrig::arctan_form;
use inttrig::document::{form_value, parse_document, to_canonical};

fuzz_target!(|data: &[u8]| {
    if data.len() > 256 {
        return;
    }
    let Ok(s) = std::str::from_utf8(data) else { return };
    let Ok(doc) = parse_document(s) else { return };
    let Ok(cone) = doc.to_cone() else { return };
    if cone.k() > 6 {
        return;
    }
    let f = arctan_form(&cone).expect("valid cones have a normal form");
    let text = to_canonical(&form_value(&f));
    let back = parse_document(&text).unwrap().to_cone().unwrap();
    let g = arctan_form(&back).unwrap();
    assert_eq!(g.grid(), f.grid());
    assert_eq!(to_canonical(&form_value(&g)).split("\"transform\"").next(), text.split("\"transform\"").next());
});
