use rowmotion::verify::{run_all, VerifyOptions};

fn main() {
    let opts = VerifyOptions { threads: 1, corrupt_sweep: true };
    let mut failed = 0;
    for r in run_all(None, &opts).unwrap() {
        if !r.passed { failed += 1; println!("FAIL {} — {}", r.id, truncate(&r.detail)); }
    }
    println!("{failed} claims failed under corruption");
}
fn truncate(s: &str) -> String { s.chars().take(100).collect() }
