use rowmotion::verify::{run_all, VerifyOptions};
use std::time::Instant;

fn main() {
    let opts = VerifyOptions::default();
    let t0 = Instant::now();
    for r in run_all(None, &opts).unwrap() {
        let status = if r.passed { "PASS" } else { "FAIL" };
        println!("{status} {} — {} [{:?}]", r.id, r.detail, t0.elapsed());
    }
}
