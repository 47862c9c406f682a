//! One PASS/FAIL line per acceptance criterion; exits non-zero if any criterion fails.

use zhuind::verify;

fn main() {
    let results = verify::run_all();
    let mut failed = 0;
    for (case, r) in verify::CASES.iter().zip(&results) {
        println!("{} AC{} {}", r.status, case.id[2..].trim_start_matches('0'), case.description);
        if !r.passed() {
            failed += 1;
            println!("    expected: {}", r.expected);
            println!("    actual:   {}", r.actual);
        }
    }
    println!("{}/{} criteria pass", results.len() - failed, results.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
