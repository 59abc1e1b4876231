#![no_main]

use libfuzzer_sys::fuzz_target;
use smflab::rational::parse_rational;
use smflab::{LieType, Weight};

fuzz_target!(|data: &str| {
    let _ = parse_rational(data);
    if let Ok(w) = data.parse::<Weight>() {
        assert_eq!(w.to_string().parse::<Weight>().unwrap(), w);
    }
    let _ = smflab_cli::parse_weight(LieType::a(3), data);
    let _ = smflab_cli::parse_ints(data);
});
