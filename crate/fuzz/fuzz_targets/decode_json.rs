#![no_main]

use libfuzzer_sys::fuzz_target;
use smflab::collisions::{verify_certificate, Evidence};
use smflab::Weight;

fn small(w: &Weight) -> bool {
    w.len() <= 8 && w.coords().iter().all(|x| x.numer().bits() <= 8 && x.denom().bits() <= 8)
}

fuzz_target!(|data: &[u8]| {
    let _ = serde_json::from_slice::<smflab_cli::Report>(data);
    let _ = serde_json::from_slice::<smflab_cli::PteData>(data);
    let _ = serde_json::from_slice::<Weight>(data);
    if let Ok(Evidence::Collision(c)) = serde_json::from_slice::<Evidence>(data) {
        if [&c.lambda, &c.nu, &c.mu1, &c.mu2].into_iter().all(small) {
            let _ = verify_certificate(&c);
        }
    }
});
