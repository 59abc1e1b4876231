#![no_main]

use libfuzzer_sys::fuzz_target;
use smflab::LieType;

fuzz_target!(|data: &str| {
    if let Ok(t) = data.parse::<LieType>() {
        assert_eq!(t.to_string().parse::<LieType>().unwrap(), t);
    }
    let args: Vec<String> = data.split_whitespace().take(4).map(String::from).collect();
    if let Ok((t, rest)) = smflab_cli::parse_type(&args) {
        assert!(rest.len() < args.len());
        assert!(t.rank() >= 1);
    }
});
