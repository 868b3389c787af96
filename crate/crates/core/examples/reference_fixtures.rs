//! Run the five built-in reference fixtures and print each check.

fn main() {
    for f in semiring_cholesky::fixtures::run_fixtures() {
        println!(
            "{} {} {}",
            f.id,
            if f.passed { "PASS" } else { "FAIL" },
            f.title
        );
        for c in &f.checks {
            println!(
                "    [{}] {} {}",
                if c.passed { "ok" } else { "!!" },
                c.name,
                c.detail
            );
        }
    }
}
