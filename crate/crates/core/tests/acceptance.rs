//! Prints one line per acceptance criterion. Criterion 3 is a known failure:
//! the affine F4 code with n = 4, k = 2 and unit weights is not Hermitian
//! self-orthogonal (the sum of x^3 over F4 is 1). Any other failure, or an
//! unexpected pass of criterion 3, makes the run exit nonzero.

use holocodes::reproduce::acceptance;

const KNOWN_FAILURES: [u32; 1] = [3];

fn main() {
    let results = acceptance();
    for c in &results {
        println!("{c}");
    }
    let failed: Vec<u32> = results.iter().filter(|c| !c.passed).map(|c| c.id).collect();
    println!("{} of {} criteria pass; failed: {failed:?}", results.len() - failed.len(), results.len());
    if failed != KNOWN_FAILURES {
        println!("failures differ from the known set {KNOWN_FAILURES:?}");
        std::process::exit(1);
    }
}
